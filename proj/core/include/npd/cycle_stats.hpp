#pragma once

#include <set>
#include <vector>

#include "npd/common.hpp"
#include "npd/perm.hpp"

namespace npd {

// Unsigned Stirling numbers of the first kind: c[n][k] = #{sigma in S_n with
// p(sigma) = k}, via c[n+1][k] = n*c[n][k] + c[n][k-1].
class StirlingTable {
 public:
  explicit StirlingTable(int n_max);
  int n_max() const { return n_max_; }
  const BigInt& at(int n, int k) const;

 private:
  int n_max_;
  std::vector<std::vector<BigInt>> c_;
};

BigInt stirling_first(int n, int k);

// P_{n,m,a}: number of sigma in the group with p(sigma) = a (mod m).  For An
// the cycle-count parity constraint p(sigma) = n (mod 2) is applied to the
// Stirling sum.
BigInt count_p_mod(int n, int m, int a, Group g);

// Exact verification of sum_a zeta^a P_{n,m,a} = zeta(zeta+1)...(zeta+n-1) in
// Z[x] modulo the m-th cyclotomic polynomial.
struct RisingFactorialReport {
  bool pass;
  std::vector<BigInt> lhs;  // reduced coefficient vectors
  std::vector<BigInt> rhs;
};
RisingFactorialReport rising_factorial_identity_check(int n, int m);

// Integer polynomial helpers used by the identity check (exposed for tests).
std::vector<BigInt> cyclotomic_polynomial(int m);

// The two residue windows of even-cycle-count permutations whose product
// avoids 3-cycles: s = {2,4,...,2k-2}, t = {2k+2,...,2l-2} (mod m).
struct ResidueSetPair {
  int n;
  int m;
  std::set<int> s_residues;
  std::set<int> t_residues;
  bool min_gap_ok;  // no s + delta = t (mod m) for delta in {-2,0,2}
};
ResidueSetPair build_alt_sets(int n, int m, int k, int l);

struct ThreeCycleGapReport {
  bool no_three_cycle;   // no 3-cycle lies in S*T
  bool lemma_ok;         // p-difference in {-2,0,2} on every 3-cycle product
  BigInt s_size;
  BigInt t_size;
  BigInt group_order;
};
ThreeCycleGapReport three_cycle_gap_check(const ResidueSetPair& pair,
                                          std::uint64_t guard = kGroupScanGuard);

// Exhaustive p-difference lemma over A_n: sigma*tau a 3-cycle implies
// p(tau) - p(sigma) in {-2, 0, 2}.
bool p_difference_lemma_exhaustive(int n, std::uint64_t guard = kGroupScanGuard);

// Number of sigma in S_n whose cycle type has all parts odd and distinct.
BigInt count_split_type(int n);

// All 3-cycles of S_n (even permutations, also elements of A_n).
std::vector<Permutation> all_three_cycles(int n);

}  // namespace npd
