#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "npd/common.hpp"
#include "npd/partition.hpp"

namespace npd {

enum class Group { Sn, An };

inline std::string group_name(Group g, int n) {
  return (g == Group::Sn ? "S" : "A") + std::to_string(n);
}

BigInt group_order(int n, Group g);

// A permutation of {0..n-1}, immutable after construction.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  // Cycles use 0-based points; points not mentioned are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  // Packs the image vector 4 bits per point; requires degree <= 16.
  std::uint64_t encode() const;

  std::string to_cycle_string() const;  // e.g. "(0 1)(2 3 4)"

 private:
  std::vector<int> img_;
};

// compose(a, b)(i) = a(b(i)): the right factor acts first.  This convention
// is fixed project-wide.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& s);
// conjugate(s, x) = x s x^{-1}.
Permutation conjugate(const Permutation& s, const Permutation& x);

std::vector<std::vector<int>> cycles_of(const Permutation& s);
Partition cycle_type(const Permutation& s);
int num_cycles(const Permutation& s);  // p(sigma), counting fixed points
bool is_even(const Permutation& s);
int num_fixed_points(const Permutation& s);

struct ConjugacyClassSn {
  Partition type;
  BigInt class_size;
  BigInt centralizer;
  bool splits_in_An = false;
  // -1 for S_n classes and non-split A_n classes; 0/1 for the two halves of a
  // split A_n class.
  int split_tag = -1;
  Permutation rep;
};

// For Sn: one class per partition of n.  For An: even types only; split types
// (all parts odd and distinct) appear as two half-size classes with tags 0, 1.
// Ordering is deterministic (descending lex on type, tag 0 before 1).
std::vector<ConjugacyClassSn> conjugacy_classes(int n, Group g);

// Canonical class representative with cycles laid out on consecutive points.
Permutation class_representative(int n, const Partition& type);

// Index of s within conjugacy_classes(n, g); resolves the split-class half by
// an explicit conjugacy test when needed.
int class_index_of(const std::vector<ConjugacyClassSn>& classes, const Permutation& s,
                   Group g);

// Streams the elements of S_n or A_n in lexicographic order of image vectors.
class GroupStream {
 public:
  GroupStream(int n, Group g, std::uint64_t guard = kGroupScanGuard);
  // Returns false when exhausted.
  bool next(Permutation& out);

 private:
  int n_;
  Group g_;
  std::vector<int> img_;
  bool done_ = false;
  bool first_ = true;
};

void for_each_element(int n, Group g, const std::function<void(const Permutation&)>& fn,
                      std::uint64_t guard = kGroupScanGuard);

// |Sigma_k(sigma)| for k = 1..n: the number of points whose <sigma>-orbit has
// size at most k.
std::vector<int> sigma_k_sets(const Permutation& s);

// E(sigma) = sum_k (s_k - s_{k-1})/k with s_k = log_n(max(|Sigma_k|,1)).
double e_statistic(const Permutation& s);

}  // namespace npd
