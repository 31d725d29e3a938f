#include "npd/linear_strata.hpp"

#include <algorithm>
#include <stdexcept>

namespace npd {

namespace {

bool is_prime_small(int v) {
  if (v < 2) return false;
  for (int d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// Multiply two residue polynomials (encoded base p) modulo the fixed
// irreducible for the extension, given as its low coefficients (the leading
// coefficient 1 is implicit).
int poly_mul_mod(int a, int b, int p, int e, const std::vector<int>& irred) {
  std::vector<int> da(e), db(e);
  for (int i = 0; i < e; ++i, a /= p) da[i] = a % p;
  for (int i = 0; i < e; ++i, b /= p) db[i] = b % p;
  std::vector<int> prod(2 * e - 1, 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (int d = 2 * e - 2; d >= e; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    // x^e = -irred (mod the monic irreducible), shifted by d - e.
    for (int i = 0; i < e; ++i)
      prod[d - e + i] = ((prod[d - e + i] - c * irred[i]) % p + p) % p;
  }
  int out = 0;
  for (int i = e - 1; i >= 0; --i) out = out * p + prod[i];
  return out;
}

}  // namespace

FqField::FqField(int q) : q_(q) {
  std::vector<int> irred;  // low coefficients of the monic irreducible
  if (is_prime_small(q)) {
    p_ = q;
    e_ = 1;
  } else if (q == 4) {
    p_ = 2; e_ = 2; irred = {1, 1};      // x^2 + x + 1
  } else if (q == 8) {
    p_ = 2; e_ = 3; irred = {1, 1, 0};   // x^3 + x + 1
  } else if (q == 9) {
    p_ = 3; e_ = 2; irred = {1, 0};      // x^2 + 1
  } else {
    throw std::invalid_argument("unsupported field size " + std::to_string(q));
  }

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, -1);
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) {
      if (e_ == 1) {
        add_[a * q_ + b] = (a + b) % p_;
        mul_[a * q_ + b] = (a * b) % p_;
      } else {
        // Addition is digitwise mod p in the base-p encoding.
        int s = 0, x = a, y = b, place = 1;
        for (int i = 0; i < e_; ++i, x /= p_, y /= p_, place *= p_)
          s += ((x + y) % p_) * place;
        add_[a * q_ + b] = s;
        mul_[a * q_ + b] = poly_mul_mod(a, b, p_, e_, irred);
      }
    }
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) {
      if (add_[a * q_ + b] == 0) neg_[a] = b;
      if (mul_[a * q_ + b] == 1) inv_[a] = b;
    }
}

int FqField::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

MatrixFq MatrixFq::identity(int n) {
  MatrixFq m;
  m.n = n;
  m.a.assign(n * n, 0);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatrixFq mat_mul(const FqField& f, const MatrixFq& x, const MatrixFq& y) {
  const int n = x.n;
  MatrixFq out;
  out.n = n;
  out.a.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n; ++j)
        out.a[i * n + j] = static_cast<std::uint8_t>(
            f.add(out.at(i, j), f.mul(v, y.at(k, j))));
    }
  return out;
}

namespace {

// Row-reduce; returns rank.  If inv != nullptr it accumulates the inverse
// (m must then be square nonsingular or std::domain_error is thrown).
int gauss(const FqField& f, MatrixFq m, MatrixFq* inv) {
  const int n = m.n;
  if (inv) *inv = MatrixFq::identity(n);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (m.at(r, col) != 0) { piv = r; break; }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) {
      std::swap(m.a[rank * n + j], m.a[piv * n + j]);
      if (inv) std::swap(inv->a[rank * n + j], inv->a[piv * n + j]);
    }
    int s = f.inv(m.at(rank, col));
    for (int j = 0; j < n; ++j) {
      m.set(rank, j, f.mul(s, m.at(rank, j)));
      if (inv) inv->set(rank, j, f.mul(s, inv->at(rank, j)));
    }
    for (int r = 0; r < n; ++r) {
      if (r == rank) continue;
      int c = m.at(r, col);
      if (c == 0) continue;
      for (int j = 0; j < n; ++j) {
        m.set(r, j, f.sub(m.at(r, j), f.mul(c, m.at(rank, j))));
        if (inv) inv->set(r, j, f.sub(inv->at(r, j), f.mul(c, inv->at(rank, j))));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

MatrixFq mat_inverse(const FqField& f, const MatrixFq& m) {
  MatrixFq inv;
  if (gauss(f, m, &inv) != m.n) throw std::domain_error("singular matrix");
  return inv;
}

int determinant(const FqField& f, const MatrixFq& m) {
  // Triangularize a copy; the determinant is the product of pivots with the
  // sign absorbed by row swaps (char 2 needs no sign; otherwise track it).
  MatrixFq w = m;
  const int n = w.n;
  int det = 1;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (w.at(r, col) != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != row) {
      for (int j = 0; j < n; ++j) std::swap(w.a[row * n + j], w.a[piv * n + j]);
      det = f.neg(det);
    }
    det = f.mul(det, w.at(row, col));
    int s = f.inv(w.at(row, col));
    for (int r = row + 1; r < n; ++r) {
      int c = f.mul(s, w.at(r, col));
      if (c == 0) continue;
      for (int j = col; j < n; ++j)
        w.set(r, j, f.sub(w.at(r, j), f.mul(c, w.at(row, j))));
    }
    ++row;
  }
  return row == n ? det : 0;
}

MatrixFq companion_matrix(const FqField& f, const std::vector<int>& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  MatrixFq m;
  m.n = n;
  m.a.assign(n * n, 0);
  for (int i = 1; i < n; ++i) m.set(i, i - 1, 1);
  for (int i = 0; i < n; ++i) m.set(i, n - 1, f.neg(coeffs[i]));
  return m;
}

int fixed_space_dim(const FqField& f, const MatrixFq& m) {
  MatrixFq d = m;
  for (int i = 0; i < m.n; ++i) d.set(i, i, f.sub(d.at(i, i), 1));
  return m.n - gauss(f, d, nullptr);
}

bool is_transvection(const FqField& f, const MatrixFq& m) {
  return !(m == MatrixFq::identity(m.n)) && fixed_space_dim(f, m) == m.n - 1;
}

BigInt sl_order(int n, int q) {
  BigInt order = boost::multiprecision::pow(BigInt(q), n * (n - 1) / 2);
  for (int j = 2; j <= n; ++j)
    order *= boost::multiprecision::pow(BigInt(q), j) - 1;
  return order;
}

BigInt gaussian_binomial(int k, int m, int q) {
  if (m < 0 || m > k) throw std::invalid_argument("gaussian_binomial: 0<=m<=k");
  BigInt num = 1, den = 1;
  for (int i = 0; i < m; ++i) {
    num *= boost::multiprecision::pow(BigInt(q), k) -
           boost::multiprecision::pow(BigInt(q), i);
    den *= boost::multiprecision::pow(BigInt(q), m) -
           boost::multiprecision::pow(BigInt(q), i);
  }
  BigInt out = num / den;
  if (out * den != num) throw std::logic_error("gaussian_binomial not integral");
  return out;
}

std::vector<MatrixFq> enumerate_sl(int n, int q, std::uint64_t guard) {
  FqField f(q);
  BigInt total = boost::multiprecision::pow(BigInt(q), n * n);
  if (total > guard) throw SizeGuardExceeded("enumerate_sl: q^(n^2)");

  std::vector<MatrixFq> out;
  MatrixFq m;
  m.n = n;
  m.a.assign(n * n, 0);
  const int cells = n * n;
  while (true) {
    if (determinant(f, m) == 1) out.push_back(m);
    int pos = cells - 1;
    while (pos >= 0 && ++m.a[pos] == q) m.a[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

StratumCensus stratum_census(int n, int q, std::uint64_t guard) {
  FqField f(q);
  StratumCensus c;
  c.n = n;
  c.q = q;
  c.order = 0;
  for (const MatrixFq& m : enumerate_sl(n, q, guard)) {
    c.counts[fixed_space_dim(f, m)] += 1;
    c.order += 1;
  }
  if (c.order != sl_order(n, q))
    throw std::logic_error("stratum_census: order mismatch");

  auto at_least = [&](int m) {
    BigInt s = 0;
    for (const auto& [d, cnt] : c.counts)
      if (d >= m) s += cnt;
    return s;
  };
  c.upper_bounds_ok = true;
  c.lower_bounds_ok = true;
  for (int m = 1; m <= n - 1; ++m) {
    BigInt qm2 = boost::multiprecision::pow(BigInt(q), m * m);
    if (at_least(m) * qm2 >= 16 * c.order) c.upper_bounds_ok = false;
    // |SL_m| >= (1 - 128 q^{-m}) q^{-m^2} |SL|, vacuous when q^m <= 128.
    BigInt qm = boost::multiprecision::pow(BigInt(q), m);
    if (qm > 128) {
      BigInt lhs = c.counts.count(m) ? c.counts.at(m) : BigInt(0);
      if (lhs * qm2 * qm < (qm - 128) * c.order) c.lower_bounds_ok = false;
    }
  }
  {
    BigInt qn2 = boost::multiprecision::pow(BigInt(q), n * n);
    // |SL_{>= n}| = 1 < 16 q^{1 - n^2} |SL|, i.e. q^{n^2} < 16 q |SL|.
    c.top_stratum_variant_ok = qn2 < 16 * q * c.order;
  }
  return c;
}

FixedQReport fixed_q_product_check(int n, int q, int s, int t,
                                   std::uint64_t guard) {
  FqField f(q);
  FixedQReport r;
  r.n = n;
  r.q = q;
  r.s = s;
  r.t = t;
  r.separation_ok = t >= s + 2;

  std::vector<MatrixFq> s_set, transvections;
  BigInt t_count = 0, order = 0;
  for (const MatrixFq& m : enumerate_sl(n, q, guard)) {
    ++order;
    int d = fixed_space_dim(f, m);
    if (d == s) s_set.push_back(m);
    if (d == t) ++t_count;
    if (d == n - 1 && !(m == MatrixFq::identity(n))) transvections.push_back(m);
  }
  r.order = order;
  r.s_size = BigInt(s_set.size());
  r.t_size = t_count;
  r.s_fraction = Rat(r.s_size, order);
  r.t_fraction = Rat(r.t_size, order);

  // rho in S T  <=>  sigma^{-1} rho in T for some sigma in S.
  r.transvection_free = true;
  for (const MatrixFq& sigma : s_set) {
    MatrixFq sigma_inv = mat_inverse(f, sigma);
    for (const MatrixFq& rho : transvections)
      if (fixed_space_dim(f, mat_mul(f, sigma_inv, rho)) == t) {
        r.transvection_free = false;
        break;
      }
    if (!r.transvection_free) break;
  }
  if (r.separation_ok && !r.transvection_free)
    throw std::logic_error("fixed_q_product_check: transvection in S T");
  return r;
}

std::optional<long long> zsygmondy_prime(long long q, int e) {
  if (q < 2 || e < 1) throw std::invalid_argument("zsygmondy_prime: q>=2, e>=1");
  long long value = 1;
  for (int i = 0; i < e; ++i) {
    if (value > (1LL << 62) / q)
      throw std::overflow_error("zsygmondy_prime: q^e too large");
    value *= q;
  }
  long long target = value - 1;

  std::vector<long long> primes;
  long long rem = target;
  for (long long d = 2; d * d <= rem; ++d)
    if (rem % d == 0) {
      primes.push_back(d);
      while (rem % d == 0) rem /= d;
    }
  if (rem > 1) primes.push_back(rem);
  std::sort(primes.begin(), primes.end());

  for (long long ell : primes) {
    // ord_ell(q) = e  <=>  ell | q^e - 1 and ell does not divide q^{e/p} - 1
    // for any prime p | e.
    bool full_order = true;
    for (int d = 1; d < e; ++d) {
      if (e % d != 0) continue;
      long long pw = 1;
      for (int i = 0; i < d; ++i) pw = (pw * (q % ell)) % ell;
      if (pw == 1) { full_order = false; break; }
    }
    if (full_order) return ell;
  }
  return std::nullopt;
}

}  // namespace npd
