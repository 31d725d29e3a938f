#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "npd/common.hpp"

namespace npd {

// Arithmetic tables for F_q.  Primes use integers mod p; the extension fields
// F_4, F_8, F_9 use the fixed irreducibles x^2+x+1, x^3+x+1 and x^2+1 over
// F_3.  Elements are encoded 0..q-1 as base-p digit strings of the residue
// polynomial (so 0 and 1 are the field's zero and one).
class FqField {
 public:
  explicit FqField(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int e() const { return e_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;  // throws std::domain_error on 0

 private:
  int q_, p_, e_;
  std::vector<int> add_, mul_, neg_, inv_;
};

// Dense row-major n x n matrix with byte-packed F_q entries.
struct MatrixFq {
  int n = 0;
  std::vector<std::uint8_t> a;  // size n*n

  static MatrixFq identity(int n);
  int at(int i, int j) const { return a[i * n + j]; }
  void set(int i, int j, int v) { a[i * n + j] = static_cast<std::uint8_t>(v); }
  bool operator==(const MatrixFq& o) const { return n == o.n && a == o.a; }
};

MatrixFq mat_mul(const FqField& f, const MatrixFq& x, const MatrixFq& y);
MatrixFq mat_inverse(const FqField& f, const MatrixFq& m);  // throws if singular
int determinant(const FqField& f, const MatrixFq& m);

// Companion matrix of a monic polynomial c_0 + c_1 x + ... + x^deg.
MatrixFq companion_matrix(const FqField& f, const std::vector<int>& coeffs);

// dim ker(M - I) by Gaussian elimination.
int fixed_space_dim(const FqField& f, const MatrixFq& m);

// Within SL, a transvection is a non-identity element fixing a hyperplane
// pointwise (determinant 1 forces the residual eigenvalue to 1).
bool is_transvection(const FqField& f, const MatrixFq& m);

// |SL_n(F_q)| = q^{n(n-1)/2} * prod_{j=2}^n (q^j - 1).
BigInt sl_order(int n, int q);

// Gaussian binomial [k choose m]_q, exact.
BigInt gaussian_binomial(int k, int m, int q);

// Enumerate SL_n(F_q) (all q^{n^2} matrices filtered on det = 1; guarded).
std::vector<MatrixFq> enumerate_sl(int n, int q,
                                   std::uint64_t guard = kMatrixScanGuard);

struct StratumCensus {
  int n = 0;
  int q = 0;
  BigInt order;                  // |SL_n(F_q)|, verified against sl_order
  std::map<int, BigInt> counts;  // fix-dim m -> |SL_n(F_q)_m|
  // Upper bound |SL_{>=m}| < 16 q^{-m^2} |SL| for 1 <= m <= n-1.
  bool upper_bounds_ok = false;
  // Lower bound |SL_m| >= (1 - 128 q^{-m}) q^{-m^2} |SL| (vacuous when the
  // right side is negative), 1 <= m <= n-1.
  bool lower_bounds_ok = false;
  // The m = n case checked against the relaxed 16 q^{1-m^2} variant.
  bool top_stratum_variant_ok = false;
};
StratumCensus stratum_census(int n, int q,
                             std::uint64_t guard = kMatrixScanGuard);

struct FixedQReport {
  int n = 0, q = 0, s = 0, t = 0;
  bool separation_ok = false;           // t >= s + 2
  bool transvection_free = false;       // no transvection lies in S T
  BigInt s_size, t_size, order;
  Rat s_fraction, t_fraction;
};
// S = stratum with fix-dim exactly s, T = exactly t; checks that the product
// set S T contains no transvection.  When t >= s + 2 this is asserted (a
// violation throws std::logic_error); smaller separations are reported only.
FixedQReport fixed_q_product_check(int n, int q, int s, int t,
                                   std::uint64_t guard = kMatrixScanGuard);

// Smallest prime l with l | q^e - 1 and ord_l(q) = e; nullopt exactly in the
// Zsygmondy exception cases.
std::optional<long long> zsygmondy_prime(long long q, int e);

}  // namespace npd
