#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "npd/characters.hpp"
#include "npd/common.hpp"
#include "npd/perm.hpp"

namespace npd {

// A union of conjugacy classes, identified by class indices into
// conjugacy_classes(n, group).
struct NormalSubset {
  int n = 0;
  Group group = Group::Sn;
  std::set<int> member_classes;
  BigInt size;
};

NormalSubset make_normal_subset(int n, Group group,
                                const std::set<int>& member_classes);

// Materialize the elements of a normal subset (enumerates the group).
std::vector<Permutation> materialize(const NormalSubset& s,
                                     std::uint64_t guard = kGroupScanGuard);

struct FactorizationQuery {
  std::vector<int> classes;  // indices C_1..C_k, k >= 1
  int target_class = 0;
};

struct NonIntegerCount : std::logic_error {
  using std::logic_error::logic_error;
};
struct InvalidClass : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Number of tuples (g_1,...,g_k) in C_1 x ... x C_k with g_1...g_k in the
// target class fixed to a single representative g:
//   (|C_1|...|C_k|/|G|) * sum_chi chi(C_1)...chi(C_k) conj(chi(g)) / chi(1)^{k-1}
// evaluated exactly; the result is asserted to be a nonnegative integer.
BigInt frobenius_count(const CharacterTable& table,
                       const FactorizationQuery& query);

// Independent oracle: exact count of tuples from explicit subsets multiplying
// to target.  For k = 2 the cost is |S_1| via the s -> s^{-1} g substitution.
BigInt bruteforce_count(const std::vector<std::vector<Permutation>>& subsets,
                        const Permutation& target,
                        std::uint64_t guard = kGroupScanGuard);

struct CoverReport {
  std::set<int> covered;           // classes C with count(C1, C2 -> C) > 0
  std::vector<BigInt> counts;      // per-class counts, indexed like the table
  bool cover_nontrivial = false;   // all classes except possibly {e} covered
};
CoverReport class_product_cover(const CharacterTable& table, int c1, int c2);

// m(G): minimal degree of a non-principal irreducible character.
BigInt min_nontrivial_degree(const CharacterTable& table);

struct GowersReport {
  bool hypothesis = false;   // |A||B||C| * m(G) >= |G|^3
  bool product_all = false;  // ABC = G by brute force
};
GowersReport gowers_check(int n, Group group,
                          const std::vector<Permutation>& a,
                          const std::vector<Permutation>& b,
                          const std::vector<Permutation>& c,
                          std::uint64_t guard = kGroupScanGuard);

struct BnpReport {
  bool hypothesis_met = false;  // prod |C_i| * m^{t-2} >= alpha |G|^t
  bool bound_holds = false;     // (N_g - E)^2 * alpha <= E^2 for all g
  Rat expected;                 // E = prod |C_i| / |G|
  BigInt max_count;             // max_g N_g
  BigInt min_count;             // min_g N_g
  bool mass_conserved = false;  // sum_g N_g = prod |C_i|
};
// Exact convolution over an enumerated group (t >= 3 subsets).
BnpReport bnp_bound_check(int n, Group group,
                          const std::vector<std::vector<Permutation>>& subsets,
                          const Rat& alpha,
                          std::uint64_t guard = kGroupScanGuard);

// Witten zeta sum_chi chi(1)^{-s}, exact for integer s.
Rat witten_zeta(const CharacterTable& table, long long s);
double witten_zeta_real(const CharacterTable& table, double s);

struct UniformBoundReport {
  double lhs = 0.0;  // |Pr_{C1,C2,C3}(g) - 1/|G||
  double rhs = 0.0;  // sum_{chi != 1} |chi(C1) chi(C2) chi(C3)| / chi(1)
  bool pass = false;
};
UniformBoundReport triple_class_uniform_bound(const CharacterTable& table,
                                              int c1, int c2, int c3,
                                              int g_class);

// A word in d letters: sequence of (letter index, exponent +-1), freely
// reduced before evaluation.
struct WordLetter {
  int letter = 0;
  int exponent = 1;
};
using Word = std::vector<WordLetter>;

Word free_reduce(const Word& w);

// Image of the word map w : G^d -> G as a normal subset (full enumeration of
// G^d; guarded).
NormalSubset word_image(const Word& w, int n, Group group,
                        std::uint64_t guard = kGroupScanGuard);

struct DistributionDistance {
  Rat l1_exact;            // || Pr_{S,T} - U_G ||_1
  double l1 = 0.0;
  double linf_ratio = 0.0;  // max_g | Pr(g) |G| - 1 |
};
// Exact product distribution of ST for uniform independent s in S, t in T.
DistributionDistance product_distribution_distance(
    const NormalSubset& s, const NormalSubset& t,
    std::uint64_t guard = kGroupScanGuard);

}  // namespace npd
