#include "npd/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace npd {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  return (i >= 0 && i < num_parts()) ? parts_[i] : 0;
}

Partition Partition::transpose() const {
  std::vector<int> t;
  for (int c = 0; c < part(0); ++c) {
    int cnt = 0;
    for (int p : parts_)
      if (p > c) ++cnt;
    t.push_back(cnt);
  }
  return Partition(t);
}

int Partition::hook_length(int r, int c) const {
  if (r >= num_parts() || c >= parts_[r]) throw std::invalid_argument("cell outside diagram");
  int arm = parts_[r] - c - 1;
  int leg = 0;
  for (int i = r + 1; i < num_parts(); ++i)
    if (parts_[i] > c) ++leg;
  return arm + leg + 1;
}

std::vector<int> Partition::hook_lengths() const {
  std::vector<int> h;
  for (int r = 0; r < num_parts(); ++r)
    for (int c = 0; c < parts_[r]; ++c) h.push_back(hook_length(r, c));
  return h;
}

std::vector<int> Partition::diagonal_hooks() const {
  std::vector<int> h;
  for (int i = 0; i < num_parts() && parts_[i] > i; ++i) h.push_back(hook_length(i, i));
  return h;
}

bool Partition::all_parts_odd_distinct() const {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] % 2 == 0) return false;
    if (i > 0 && parts_[i] == parts_[i - 1]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

namespace {
void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n == 0 ? 1 : n, cur, out);
  return out;
}

BigInt centralizer_order(const Partition& mu) {
  std::map<int, int> mult;
  for (int p : mu.parts()) ++mult[p];
  BigInt z = 1;
  for (auto [part, m] : mult) {
    z *= factorial(m);
    for (int i = 0; i < m; ++i) z *= part;
  }
  return z;
}

BigInt hook_formula_degree(const Partition& lambda) {
  BigInt d = factorial(lambda.size());
  for (int h : lambda.hook_lengths()) d /= h;
  return d;
}

}  // namespace npd
