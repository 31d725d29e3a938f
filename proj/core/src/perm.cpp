#include "npd/perm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace npd {

BigInt group_order(int n, Group g) {
  BigInt f = factorial(n);
  if (g == Group::An && n >= 2) f /= 2;
  return f;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v])
      throw std::invalid_argument("permutation images must be a bijection on {0..n-1}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(img);
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i];
      int b = cyc[(i + 1) % cyc.size()];
      if (a < 0 || a >= n || used[a])
        throw std::invalid_argument("cycle points must be distinct and in range");
      used[a] = true;
      img[a] = b;
    }
  }
  return Permutation(img);
}

std::uint64_t Permutation::encode() const {
  if (degree() > 16) throw std::invalid_argument("encode requires degree <= 16");
  std::uint64_t h = 0;
  for (int i = 0; i < degree(); ++i) h |= static_cast<std::uint64_t>(img_[i]) << (4 * i);
  return h;
}

std::string Permutation::to_cycle_string() const {
  auto cyc = cycles_of(*this);
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cyc) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = a(b(i));
  return Permutation(img);
}

Permutation inverse(const Permutation& s) {
  std::vector<int> img(s.degree());
  for (int i = 0; i < s.degree(); ++i) img[s(i)] = i;
  return Permutation(img);
}

Permutation conjugate(const Permutation& s, const Permutation& x) {
  // x s x^{-1} maps x(i) -> x(s(i)).
  std::vector<int> img(s.degree());
  for (int i = 0; i < s.degree(); ++i) img[x(i)] = x(s(i));
  return Permutation(img);
}

std::vector<std::vector<int>> cycles_of(const Permutation& s) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(s.degree(), false);
  for (int i = 0; i < s.degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = s(j)) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Partition cycle_type(const Permutation& s) {
  std::vector<int> lens;
  for (const auto& c : cycles_of(s)) lens.push_back(static_cast<int>(c.size()));
  std::sort(lens.rbegin(), lens.rend());
  return Partition(lens);
}

int num_cycles(const Permutation& s) { return static_cast<int>(cycles_of(s).size()); }

bool is_even(const Permutation& s) { return (s.degree() - num_cycles(s)) % 2 == 0; }

int num_fixed_points(const Permutation& s) {
  int f = 0;
  for (int i = 0; i < s.degree(); ++i)
    if (s(i) == i) ++f;
  return f;
}

std::vector<ConjugacyClassSn> conjugacy_classes(int n, Group g) {
  if (n < 1) throw std::invalid_argument("conjugacy_classes: n >= 1 required");
  std::vector<ConjugacyClassSn> out;
  BigInt nfact = factorial(n);
  for (const Partition& mu : partitions_of(n)) {
    if (g == Group::An && !mu.is_even_type()) continue;
    BigInt z = centralizer_order(mu);
    BigInt size = nfact / z;
    Permutation rep = class_representative(n, mu);
    if (g == Group::An && n >= 2 && mu.all_parts_odd_distinct()) {
      // Split class: the two halves are swapped by conjugation by any odd
      // permutation; take the canonical rep and its (0 1)-conjugate.
      // Half the class size, half the group: the centralizer order stays z.
      ConjugacyClassSn c0{mu, size / 2, z, true, 0, rep};
      Permutation t = Permutation::from_cycles(n, {{0, 1}});
      ConjugacyClassSn c1{mu, size / 2, z, true, 1, conjugate(rep, t)};
      out.push_back(std::move(c0));
      out.push_back(std::move(c1));
    } else if (g == Group::An && n >= 2) {
      // A class of A_n that does not split has an S_n-centralizer containing
      // odd elements, so the A_n-centralizer has index 2 in it.
      out.push_back({mu, size, z / 2, false, -1, rep});
    } else {
      out.push_back({mu, size, z, false, -1, rep});
    }
  }
  return out;
}

Permutation class_representative(int n, const Partition& type) {
  if (type.size() != n) throw std::invalid_argument("class_representative: type must partition n");
  std::vector<std::vector<int>> cycles;
  int next = 0;
  for (int p : type.parts()) {
    std::vector<int> c(p);
    std::iota(c.begin(), c.end(), next);
    next += p;
    if (p > 1) cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(n, cycles);
}

namespace {
// Parity of some x with x * rep(type) * x^{-1} = s, built by aligning cycles
// of equal length greedily.  Used to resolve which split half s lies in.
bool conjugator_is_even(const Permutation& s, const Permutation& rep) {
  auto cs = cycles_of(s);
  auto cr = cycles_of(rep);
  auto bylen = [](const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() > b.size() || (a.size() == b.size() && a < b);
  };
  std::sort(cs.begin(), cs.end(), bylen);
  std::sort(cr.begin(), cr.end(), bylen);
  int n = s.degree();
  std::vector<int> img(n, -1);
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs[i].size(); ++j) img[cr[i][j]] = cs[i][j];
  return is_even(Permutation(img));
}
}  // namespace

int class_index_of(const std::vector<ConjugacyClassSn>& classes, const Permutation& s,
                   Group g) {
  Partition t = cycle_type(s);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (!(classes[i].type == t)) continue;
    if (g == Group::Sn || !classes[i].splits_in_An) return static_cast<int>(i);
    // Two half-classes share this type; s lies with the rep it is A_n-conjugate
    // to, i.e. the one reachable by an even conjugator.
    bool even_to_this = conjugator_is_even(s, classes[i].rep);
    if (even_to_this) return static_cast<int>(i);
  }
  throw std::logic_error("class_index_of: no matching class");
}

GroupStream::GroupStream(int n, Group g, std::uint64_t guard) : n_(n), g_(g) {
  if (n < 0) throw std::invalid_argument("GroupStream: n >= 0 required");
  BigInt order = group_order(n, g);
  if (order > BigInt(guard)) throw SizeGuardExceeded("group order exceeds enumeration guard");
  img_.resize(n);
  std::iota(img_.begin(), img_.end(), 0);
}

bool GroupStream::next(Permutation& out) {
  while (!done_) {
    if (!first_) {
      if (!std::next_permutation(img_.begin(), img_.end())) {
        done_ = true;
        break;
      }
    }
    first_ = false;
    Permutation p(img_);
    if (g_ == Group::Sn || is_even(p)) {
      out = std::move(p);
      return true;
    }
  }
  return false;
}

void for_each_element(int n, Group g, const std::function<void(const Permutation&)>& fn,
                      std::uint64_t guard) {
  GroupStream st(n, g, guard);
  Permutation p;
  while (st.next(p)) fn(p);
}

std::vector<int> sigma_k_sets(const Permutation& s) {
  int n = s.degree();
  std::vector<int> count_by_len(n + 1, 0);
  for (const auto& c : cycles_of(s)) count_by_len[c.size()] += static_cast<int>(c.size());
  std::vector<int> out(n);
  int acc = 0;
  for (int k = 1; k <= n; ++k) {
    acc += count_by_len[k];
    out[k - 1] = acc;
  }
  return out;
}

double e_statistic(const Permutation& s) {
  int n = s.degree();
  if (n < 2) throw std::invalid_argument("e_statistic: n >= 2 required");
  std::vector<int> sig = sigma_k_sets(s);
  double logn = std::log(static_cast<double>(n));
  double prev = 0.0;
  double e = 0.0;
  for (int k = 1; k <= n; ++k) {
    double sk = std::log(static_cast<double>(std::max(sig[k - 1], 1))) / logn;
    e += (sk - prev) / k;
    prev = sk;
  }
  return e;
}

}  // namespace npd
