#pragma once

#include <string>
#include <vector>

#include "npd/common.hpp"

namespace npd {

// An integer partition, stored as a weakly decreasing vector of positive
// parts.  The empty partition (of 0) is allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;                       // sum of parts
  int num_parts() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;                  // 0-based; 0 beyond the last part

  Partition transpose() const;
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  // Hook length of cell (r, c), 0-based; cell must lie in the diagram.
  int hook_length(int r, int c) const;
  // All hook lengths, row-major.
  std::vector<int> hook_lengths() const;
  // Principal (diagonal) hook lengths h_i = lambda_i + lambda^T_i - 2i - 1,
  // one per Durfee-square diagonal cell.  Distinct and, for self-conjugate
  // partitions, odd.
  std::vector<int> diagonal_hooks() const;

  bool is_self_conjugate() const { return *this == transpose(); }
  bool all_parts_odd_distinct() const;
  // Parity of a permutation with this cycle type: (-1)^(n - #parts).
  bool is_even_type() const { return (size() - num_parts()) % 2 == 0; }

  std::string to_string() const;  // e.g. "(3,1,1)"

 private:
  std::vector<int> parts_;
};

// All partitions of n in descending lexicographic order, (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// Centralizer order z_mu = prod_i (m_i! * i^{m_i}) over part multiplicities.
BigInt centralizer_order(const Partition& mu);

// Number of standard Young tableaux of shape lambda (hook length formula);
// equals the degree of the associated irreducible character.
BigInt hook_formula_degree(const Partition& lambda);

}  // namespace npd
