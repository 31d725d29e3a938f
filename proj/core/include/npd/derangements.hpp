#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "npd/common.hpp"
#include "npd/perm.hpp"

namespace npd {

// A transitive action of S_n or A_n, either natural or on k-subsets
// (materialized as explicit point images).
class GroupAction {
 public:
  enum class Kind { natural, k_subsets };

  static GroupAction natural(int n, Group g);
  static GroupAction k_subsets(int n, Group g, int k);

  int n() const { return n_; }
  Group group() const { return group_; }
  Kind kind() const { return kind_; }
  int num_points() const { return num_points_; }
  int subset_k() const { return k_; }

  int act(const Permutation& g, int point) const;
  bool is_derangement(const Permutation& g) const;

 private:
  GroupAction() = default;
  void check_transitive() const;
  int n_ = 0;
  Group group_ = Group::Sn;
  Kind kind_ = Kind::natural;
  int num_points_ = 0;
  int k_ = 1;
  std::vector<std::vector<int>> subsets_;
  std::unordered_map<std::uint32_t, int> subset_index_;
};

struct DerangementReport {
  BigInt count;
  Rat proportion;
  // Class indices (into conjugacy_classes(n, group)) consisting entirely of
  // derangements; derangement status is asserted constant on classes.
  std::vector<int> witness_classes;
  bool class_closed = true;
};
DerangementReport derangements(const GroupAction& action,
                               std::uint64_t guard = kGroupScanGuard);

// Exact |D(A_n)| for the natural action, by inclusion-exclusion.
BigInt an_derangement_count(int n);
// Exact |D(S_n)| (the classical derangement number).
BigInt sn_derangement_count(int n);

// |D(A_n)| lies between every two consecutive partial sums of
// sum_r (-1)^r n!/(2 r!), r = 0..n-2.
bool strong_alt_betweenness(int n);

// r(n) = #{(d1,d2) in D x D | d1 d2 = (0 1 2)} * |A_n| / |D|^2.
Rat three_cycle_representation_ratio(int n, std::uint64_t guard = kGroupScanGuard);

// L_n: odd integers in [floor(3n/4), n].
std::vector<int> ell_set(int n);

// Largest ell in L_n such that the stabilizer of point 0 contains no
// ell-cycle, or nullopt if every ell in L_n occurs in the stabilizer.
std::optional<int> derangement_ell_criterion(const GroupAction& action,
                                             std::uint64_t guard = kGroupScanGuard);

// Writes even g in S_m as a product of two ell-cycles (Bertram's range
// floor(3m/4) <= ell <= m).  Randomized search with an exhaustive fallback.
std::pair<Permutation, Permutation> two_ell_cycle_factorization(
    const Permutation& g, int ell, std::uint64_t seed);

// Writes g in A_n (n >= 5, natural action) as a product of two even
// derangements, following the constructive case tree: odd n via two n-cycles;
// even n <= 10 by direct search; even n >= 12 by fixed-point restriction,
// odd-cycle splitting, even-cycle pairing, and the two explicit bicyclic
// formulas.
std::pair<Permutation, Permutation> two_derangement_decompose(const Permutation& g,
                                                              std::uint64_t seed);

struct DSquaredReport {
  bool all_covered;
  BigInt group_order;
  BigInt derangement_count;
  std::vector<Permutation> gaps;  // elements not expressible (expected empty)
};
DSquaredReport verify_d_squared(const GroupAction& action,
                                std::uint64_t guard = kGroupScanGuard);

}  // namespace npd
