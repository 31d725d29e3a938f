#pragma once

#include <map>
#include <string>
#include <vector>

#include "npd/algebraic.hpp"
#include "npd/common.hpp"
#include "npd/partition.hpp"
#include "npd/perm.hpp"

namespace npd {

struct RimHookRemoval {
  Partition result;  // shape after removing the rim hook
  int height;        // number of rows spanned minus one
  int sign;          // (-1)^height
};

// All ways to remove a rim hook of length d from lambda.
std::vector<RimHookRemoval> rim_hook_removals(const Partition& lambda, int d);

// Irreducible S_n character chi^lambda evaluated at cycle type mu, via the
// Murnaghan-Nakayama recursion (largest part of mu removed first, memoized).
long long mn_character(const Partition& lambda, const Partition& mu);

struct CharacterTable {
  int n = 0;
  Group group = Group::Sn;
  BigInt order;
  std::vector<ConjugacyClassSn> classes;
  std::vector<std::string> labels;           // one per character
  std::vector<std::vector<QSqrt>> values;    // values[chi][class]
  int identity_class = 0;

  int num_classes() const { return static_cast<int>(classes.size()); }
  int num_characters() const { return static_cast<int>(values.size()); }
  const QSqrt& value(int chi, int cls) const { return values[chi][cls]; }
  Rat degree(int chi) const { return values[chi][identity_class].as_rational(); }
};

// Full character table of S_n (all values rational integers).
CharacterTable sn_character_table(int n);
// Full character table of A_n; split classes carry values in Q(sqrt(D)) with
// D the product of the (distinct odd) parts signed by (-1)^((n - p)/2).
CharacterTable an_character_table(int n, int guard_n = 16);

// Exact orthogonality verification; throws std::logic_error on violation.
void check_row_orthogonality(const CharacterTable& t);
void check_column_orthogonality(const CharacterTable& t);

// JSON serialization of a table (schema: group, classes, characters).
std::string character_table_to_json(const CharacterTable& t);

// Degree of the unipotent character of GL_n(q) indexed by lambda:
//   q^{sum_i C(lambda_i, 2)} * prod_{j=1}^n (q^j - 1) / prod_cells (q^h - 1).
BigInt unipotent_gl_degree(const Partition& lambda, const BigInt& q);

// Checks deg > q^{(n^2 - n - 5L^2 + 3L - 4)/2} for every lambda of n with
// largest part n - L.  Returns the list of (lambda, degree) pairs checked.
struct ADegreeWitness {
  Partition lambda;
  BigInt degree;
  bool ok;
};
std::vector<ADegreeWitness> verify_adegree_bound(int n, int L, const BigInt& q);

// The twelve-character classification: for sigma1 of type (n-3,3) and sigma2
// of type (n-4,4) in S_n, the lambda with chi^lambda(sigma1)*chi^lambda(sigma2)
// != 0 are exactly those with lambda or its transpose among six fixed shapes,
// and each surviving product is +-1.
struct NonvanishingPair {
  Partition lambda;
  long long v1;
  long long v2;
};
std::vector<NonvanishingPair> classify_nonvanishing_pair(int n);
// The six reference shapes (as functions of n) defining the expected set.
std::vector<Partition> twelve_reference_shapes(int n);

}  // namespace npd
