#include "npd/algebraic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace npd {

std::pair<long long, long long> extract_square(long long m) {
  if (m <= 0) throw std::invalid_argument("extract_square: m must be positive");
  long long s = 1, f = 1;
  for (long long p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) f *= p;
  }
  f *= m;
  return {s, f};
}

void QSqrt::insert(long long d, const Rat& c) {
  if (c == 0) return;
  auto it = surds_.find(d);
  if (it == surds_.end()) {
    surds_.emplace(d, c);
  } else {
    it->second += c;
    if (it->second == 0) surds_.erase(it);
  }
}

QSqrt QSqrt::surd(const Rat& coeff, long long d) {
  QSqrt r;
  if (coeff == 0 || d == 0) return r;
  long long sign = d < 0 ? -1 : 1;
  auto [s, f] = extract_square(d * sign);
  Rat c = coeff * s;
  if (f == 1 && sign == 1) {
    r.rat_ = c;
  } else {
    r.insert(sign * f, c);
  }
  return r;
}

QSqrt QSqrt::operator+(const QSqrt& o) const {
  QSqrt r = *this;
  r.rat_ += o.rat_;
  for (const auto& [d, c] : o.surds_) r.insert(d, c);
  return r;
}

QSqrt QSqrt::operator-(const QSqrt& o) const { return *this + (-o); }

QSqrt QSqrt::operator-() const {
  QSqrt r;
  r.rat_ = -rat_;
  for (const auto& [d, c] : surds_) r.surds_.emplace(d, -c);
  return r;
}

QSqrt QSqrt::operator*(const QSqrt& o) const {
  QSqrt r;
  r.rat_ = rat_ * o.rat_;
  for (const auto& [d, c] : surds_) r.insert(d, c * o.rat_);
  for (const auto& [d, c] : o.surds_) r.insert(d, c * rat_);
  for (const auto& [d1, c1] : surds_) {
    for (const auto& [d2, c2] : o.surds_) {
      // sqrt(d1)*sqrt(d2) for squarefree d1, d2 (possibly negative, with the
      // convention sqrt(d) = i*sqrt(|d|) for d < 0).
      Rat c = c1 * c2;
      if (d1 == d2) {
        r.rat_ += c * d1;
        continue;
      }
      long long a = std::abs(d1), b = std::abs(d2);
      auto [s, f] = extract_square(a * b);
      if (d1 < 0 && d2 < 0) c = -c;            // i * i = -1
      long long key = (d1 < 0) != (d2 < 0) ? -f : f;  // one imaginary factor left
      c *= s;
      if (key == 1) {
        r.rat_ += c;
      } else {
        r.insert(key, c);
      }
    }
  }
  return r;
}

QSqrt QSqrt::div_rat(const Rat& d) const {
  if (d == 0) throw std::invalid_argument("QSqrt: division by zero");
  QSqrt r;
  r.rat_ = rat_ / d;
  for (const auto& [k, c] : surds_) r.surds_.emplace(k, c / d);
  return r;
}

QSqrt QSqrt::conj() const {
  QSqrt r;
  r.rat_ = rat_;
  for (const auto& [d, c] : surds_) r.surds_.emplace(d, d < 0 ? -c : c);
  return r;
}

Rat QSqrt::as_rational() const {
  if (!surds_.empty()) throw std::domain_error("QSqrt: value is irrational: " + to_string());
  return rat_;
}

double QSqrt::to_double() const {
  double v = static_cast<double>(rat_);
  for (const auto& [d, c] : surds_) {
    if (d < 0) throw std::domain_error("QSqrt: nonreal value has no double");
    v += static_cast<double>(c) * std::sqrt(static_cast<double>(d));
  }
  return v;
}

double QSqrt::abs_value() const {
  QSqrt m = *this * conj();
  return std::sqrt(m.to_double());
}

std::string QSqrt::to_string() const {
  std::ostringstream os;
  os << rat_;
  for (const auto& [d, c] : surds_) os << " + (" << c << ")*sqrt(" << d << ")";
  return os.str();
}

}  // namespace npd
