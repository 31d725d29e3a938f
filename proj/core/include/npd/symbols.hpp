#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "npd/common.hpp"

namespace npd {

// An ordered pair of strictly increasing sets of nonnegative integers.
struct SymbolXY {
  std::vector<int> x;
  std::vector<int> y;

  int defect() const {
    return static_cast<int>(x.size()) - static_cast<int>(y.size());
  }
  bool operator==(const SymbolXY& o) const { return x == o.x && y == o.y; }
  bool operator<(const SymbolXY& o) const {
    return x != o.x ? x < o.x : y < o.y;
  }
  std::string to_string() const;  // "[[x...],[y...]]"
};

struct NotAHook : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotACohook : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Side { X, Y };
enum class HookKind { Hook, Cohook };

struct HookRecord {
  Side side = Side::X;  // the side containing c
  int b = 0;            // b = c - d
  int c = 0;
  int d = 0;
  HookKind kind = HookKind::Hook;
};

// S(X) = {0} union {x + 1 : x in X}.
std::vector<int> shift(const std::vector<int>& entries);

// i(X) = -C(|X|, 2) + sum of entries.
long long inefficiency(const std::vector<int>& entries);

// Rank via both closed forms (asserted equal):
//   -floor((|X|+|Y|-1)^2/4) + sum_X + sum_Y
//   = i(X) + i(Y) + floor((|X|-|Y|)^2/4).
long long rank(const SymbolXY& s);

// Reduce by un-shifting until 0 is not in both sides, then swap-normalize
// (defect >= 0; lexicographic tie-break at defect 0).
SymbolXY minimal_representative(const SymbolXY& s);

bool equivalent(const SymbolXY& a, const SymbolXY& b);

// All d-hooks: c in a side with c - d >= 0 not in the same side.
std::vector<HookRecord> hooks(const SymbolXY& s, int d);
// All d-cohooks: c in a side with c - d >= 0 not in the *other* side.
std::vector<HookRecord> cohooks(const SymbolXY& s, int d);

SymbolXY remove_hook(const SymbolXY& s, const HookRecord& h);
SymbolXY remove_cohook(const SymbolXY& s, const HookRecord& h);

struct EnumeratedSymbol {
  SymbolXY symbol;
  bool degenerate = false;  // X = Y, standing for a pair of representations
};

// All minimal swap-normalized symbols of the given rank whose defect passes
// the filter; degenerate symbols appear once.
std::vector<EnumeratedSymbol> enumerate_symbols(
    int r, const std::function<bool(int)>& defect_filter,
    int max_rank = 16);

struct HookConstraint {
  HookKind kind = HookKind::Hook;
  int length = 1;
};

// Number of enumerated rank-r classes admitting every constraint.
long long count_constrained(int r, const std::vector<HookConstraint>& cs,
                            const std::function<bool(int)>& defect_filter,
                            int max_rank = 16);

enum class DefectClass { Odd, TwoModFour, ZeroModFour };

std::vector<EnumeratedSymbol> classify_surviving_symbols(
    int r, DefectClass dc, const std::vector<HookConstraint>& required,
    int max_rank = 16);

struct HookLengthProfile {
  std::map<int, int> hook_lengths;    // length -> multiplicity
  std::map<int, int> cohook_lengths;
};
HookLengthProfile all_hook_cohook_lengths(const SymbolXY& s);

// True iff the hook/cohook denominator product
//   prod_hooks (q^d - 1) * prod_cohooks (q^d + 1)
// is divisible by the prime ell (via ord_ell(q) | d, resp. ord | 2d, ord !| d).
bool denominator_divisible(const SymbolXY& s, long long q, long long ell);

}  // namespace npd
