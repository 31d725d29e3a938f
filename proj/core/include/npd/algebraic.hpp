#pragma once

#include <map>
#include <string>

#include "npd/common.hpp"

namespace npd {

// An element of the ring Q(sqrt(d1), sqrt(d2), ...): a rational part plus a
// finite sum of rational multiples of sqrt(d) for squarefree d != 0, 1.
// Negative d is allowed (sqrt(d) = i*sqrt(|d|)), which arises for split
// alternating-class character values with negative discriminant.
class QSqrt {
 public:
  QSqrt() = default;
  QSqrt(long long v) : rat_(v) {}  // NOLINT: implicit by design
  QSqrt(Rat v) : rat_(std::move(v)) {}

  // coeff * sqrt(d); d need not be squarefree.
  static QSqrt surd(const Rat& coeff, long long d);

  const Rat& rational_part() const { return rat_; }
  const std::map<long long, Rat>& surd_terms() const { return surds_; }
  bool is_rational() const { return surds_.empty(); }
  // Throws std::domain_error if surd terms remain.
  Rat as_rational() const;

  QSqrt operator+(const QSqrt& o) const;
  QSqrt operator-(const QSqrt& o) const;
  QSqrt operator*(const QSqrt& o) const;
  QSqrt operator-() const;
  QSqrt& operator+=(const QSqrt& o) { return *this = *this + o; }
  QSqrt& operator*=(const QSqrt& o) { return *this = *this * o; }
  bool operator==(const QSqrt& o) const { return rat_ == o.rat_ && surds_ == o.surds_; }

  // Divide by a nonzero rational.
  QSqrt div_rat(const Rat& d) const;
  // Complex conjugate: negates coefficients of sqrt(d) with d < 0.
  QSqrt conj() const;

  bool is_zero() const { return rat_ == 0 && surds_.empty(); }
  // Numerical value; throws std::domain_error if any d < 0 (nonreal).
  double to_double() const;
  // |value|^2 = value * conj(value) as a real algebraic number, numerically.
  double abs_value() const;

  std::string to_string() const;

 private:
  void insert(long long d, const Rat& c);
  Rat rat_;
  std::map<long long, Rat> surds_;  // squarefree d -> coefficient
};

// Writes m = s^2 * f with f squarefree (m > 0); returns {s, f}.
std::pair<long long, long long> extract_square(long long m);

}  // namespace npd
