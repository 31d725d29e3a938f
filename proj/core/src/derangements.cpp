#include "npd/derangements.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace npd {

namespace {
std::vector<Permutation> group_generators(int n, Group g) {
  if (n <= 1) return {Permutation::identity(n)};
  if (g == Group::Sn) {
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    return {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cyc})};
  }
  if (n <= 2) return {Permutation::identity(n)};
  std::vector<Permutation> gens = {Permutation::from_cycles(n, {{0, 1, 2}})};
  if (n >= 4) {
    // (0 1 ... n-1) for odd n; (1 2 ... n-1) for even n.
    std::vector<int> cyc;
    for (int i = (n % 2 == 1 ? 0 : 1); i < n; ++i) cyc.push_back(i);
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return gens;
}

std::uint32_t subset_mask(const std::vector<int>& s) {
  std::uint32_t m = 0;
  for (int p : s) m |= 1u << p;
  return m;
}
}  // namespace

GroupAction GroupAction::natural(int n, Group g) {
  if (n < 1) throw std::invalid_argument("GroupAction: n >= 1 required");
  GroupAction a;
  a.n_ = n;
  a.group_ = g;
  a.kind_ = Kind::natural;
  a.num_points_ = n;
  a.check_transitive();
  return a;
}

GroupAction GroupAction::k_subsets(int n, Group g, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("GroupAction: need 1 <= k <= n");
  if (n > 31) throw SizeGuardExceeded("k_subsets: n too large for mask representation");
  GroupAction a;
  a.n_ = n;
  a.group_ = g;
  a.kind_ = Kind::k_subsets;
  a.k_ = k;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    a.subset_index_.emplace(subset_mask(idx), static_cast<int>(a.subsets_.size()));
    a.subsets_.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  a.num_points_ = static_cast<int>(a.subsets_.size());
  a.check_transitive();
  return a;
}

int GroupAction::act(const Permutation& g, int point) const {
  if (kind_ == Kind::natural) return g(point);
  std::uint32_t m = 0;
  for (int p : subsets_[point]) m |= 1u << g(p);
  return subset_index_.at(m);
}

bool GroupAction::is_derangement(const Permutation& g) const {
  for (int p = 0; p < num_points_; ++p)
    if (act(g, p) == p) return false;
  return true;
}

void GroupAction::check_transitive() const {
  std::vector<Permutation> gens = group_generators(n_, group_);
  std::vector<bool> seen(num_points_, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (const Permutation& g : gens) {
      int q = act(g, p);
      if (!seen[q]) {
        seen[q] = true;
        ++reached;
        stack.push_back(q);
      }
    }
  }
  if (reached != num_points_) throw std::invalid_argument("GroupAction: not transitive");
}

DerangementReport derangements(const GroupAction& action, std::uint64_t guard) {
  auto classes = conjugacy_classes(action.n(), action.group());
  std::vector<BigInt> dcount(classes.size(), 0);
  BigInt total = 0;
  for_each_element(action.n(), action.group(), [&](const Permutation& s) {
    if (action.is_derangement(s)) {
      ++dcount[class_index_of(classes, s, action.group())];
      ++total;
    }
  }, guard);
  DerangementReport rep;
  rep.count = total;
  rep.proportion = Rat(total, group_order(action.n(), action.group()));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (dcount[i] == 0) continue;
    if (dcount[i] != classes[i].class_size) rep.class_closed = false;
    rep.witness_classes.push_back(static_cast<int>(i));
  }
  return rep;
}

BigInt sn_derangement_count(int n) {
  BigInt total = 0;
  for (int r = 0; r <= n; ++r) {
    BigInt v = factorial(n) / factorial(r);
    total += (r % 2 == 0) ? v : -v;
  }
  return total;
}

BigInt an_derangement_count(int n) {
  if (n < 2) throw std::invalid_argument("an_derangement_count: n >= 2 required");
  // Inclusion-exclusion over fixed subsets: an element fixing r chosen points
  // is an arbitrary permutation of the other n-r points; count the even ones.
  auto even_count = [](int m) -> BigInt {
    return m <= 1 ? BigInt(1) : factorial(m) / 2;
  };
  BigInt total = 0;
  for (int r = 0; r <= n; ++r) {
    BigInt v = binomial(n, r) * even_count(n - r);
    total += (r % 2 == 0) ? v : -v;
  }
  return total;
}

bool strong_alt_betweenness(int n) {
  BigInt d = an_derangement_count(n);
  // Partial sums S_R = sum_{r=0}^R (-1)^r n!/(2 r!), exact rationals.
  std::vector<Rat> s;
  Rat acc = 0;
  for (int r = 0; r <= n - 2; ++r) {
    Rat term = Rat(factorial(n), 2 * factorial(r));
    acc += (r % 2 == 0) ? term : -term;
    s.push_back(acc);
  }
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    Rat lo = std::min(s[i], s[i + 1]);
    Rat hi = std::max(s[i], s[i + 1]);
    if (Rat(d) < lo || Rat(d) > hi) return false;
  }
  return true;
}

Rat three_cycle_representation_ratio(int n, std::uint64_t guard) {
  if (n < 7 || n > 10)
    throw std::invalid_argument("three_cycle_representation_ratio: 7 <= n <= 10");
  GroupAction nat = GroupAction::natural(n, Group::An);
  std::vector<Permutation> dlist;
  std::unordered_set<std::uint64_t> dset;
  for_each_element(n, Group::An, [&](const Permutation& s) {
    if (nat.is_derangement(s)) {
      dlist.push_back(s);
      dset.insert(s.encode());
    }
  }, guard);
  Permutation c = Permutation::from_cycles(n, {{0, 1, 2}});
  BigInt reps = 0;
  for (const Permutation& d : dlist)
    if (dset.count(compose(inverse(d), c).encode())) ++reps;
  BigInt dsz(static_cast<long long>(dlist.size()));
  return Rat(reps * group_order(n, Group::An), dsz * dsz);
}

std::vector<int> ell_set(int n) {
  if (n < 5) throw std::invalid_argument("ell_set: n >= 5 required");
  std::vector<int> out;
  for (int l = 3 * n / 4; l <= n; ++l)
    if (l % 2 == 1) out.push_back(l);
  return out;
}

std::optional<int> derangement_ell_criterion(const GroupAction& action,
                                             std::uint64_t guard) {
  if (action.group() != Group::An)
    throw std::invalid_argument("derangement_ell_criterion: A_n action required");
  int n = action.n();
  std::vector<int> ls = ell_set(n);
  std::vector<bool> present(n + 1, false);
  for_each_element(n, Group::An, [&](const Permutation& s) {
    if (action.act(s, 0) != 0) return;
    Partition t = cycle_type(s);
    // An ell-cycle has type (ell, 1^{n-ell}).
    if (t.part(0) >= 3 && t.part(1) <= 1) present[t.part(0)] = true;
  }, guard);
  for (auto it = ls.rbegin(); it != ls.rend(); ++it)
    if (!present[*it]) return *it;
  return std::nullopt;
}

namespace {
bool is_ell_cycle(const Permutation& s, int ell) {
  Partition t = cycle_type(s);
  return t.part(0) == ell && (t.num_parts() == 1 || t.part(1) == 1);
}
}  // namespace

std::pair<Permutation, Permutation> two_ell_cycle_factorization(const Permutation& g,
                                                                int ell,
                                                                std::uint64_t seed) {
  int m = g.degree();
  if (ell < 2 || ell > m || ell < 3 * m / 4)
    throw std::invalid_argument("two_ell_cycle_factorization: ell outside Bertram range");
  if (!is_even(g))
    throw std::invalid_argument("two_ell_cycle_factorization: g must be even");
  std::mt19937_64 rng(seed);
  std::vector<int> pts(m);
  std::iota(pts.begin(), pts.end(), 0);
  const int attempts = 400000;
  for (int it = 0; it < attempts; ++it) {
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<int> cyc(pts.begin(), pts.begin() + ell);
    Permutation x1 = Permutation::from_cycles(m, {cyc});
    Permutation x2 = compose(inverse(x1), g);
    if (is_ell_cycle(x2, ell)) return {x1, x2};
  }
  // Deterministic fallback: exhaust all ell-cycles (small m only).
  if (m <= 9) {
    std::vector<bool> pick(m, false);
    std::fill(pick.end() - ell, pick.end(), true);
    std::sort(pick.begin(), pick.end());
    // iterate subsets via combinations on sorted index vector
    std::vector<int> idx(ell);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<int> rest(idx.begin() + 1, idx.end());
      std::sort(rest.begin(), rest.end());
      do {
        std::vector<int> cyc = {idx[0]};
        cyc.insert(cyc.end(), rest.begin(), rest.end());
        Permutation x1 = Permutation::from_cycles(m, {cyc});
        Permutation x2 = compose(inverse(x1), g);
        if (is_ell_cycle(x2, ell)) return {x1, x2};
      } while (std::next_permutation(rest.begin(), rest.end()));
      int i = ell - 1;
      while (i >= 0 && idx[i] == m - ell + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < ell; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw SearchExhausted("two_ell_cycle_factorization: no factorization found");
}

namespace {
// Embed a permutation of the index set {0..|pts|-1} into S_n on points pts.
Permutation embed(const Permutation& s, const std::vector<int>& pts, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (int i = 0; i < s.degree(); ++i) img[pts[i]] = pts[s(i)];
  return Permutation(img);
}

// Restrict g to an invariant point set pts (sorted), as a permutation of
// {0..|pts|-1}.
Permutation restrict_to(const Permutation& g, const std::vector<int>& pts) {
  std::vector<int> pos(g.degree(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) pos[pts[i]] = static_cast<int>(i);
  std::vector<int> img(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) img[i] = pos[g(pts[i])];
  return Permutation(img);
}

bool natural_derangement(const Permutation& s) { return num_fixed_points(s) == 0; }

void assert_decomposition(const Permutation& g, const Permutation& d1,
                          const Permutation& d2) {
  if (!(compose(d1, d2) == g) || !is_even(d1) || !is_even(d2) ||
      !natural_derangement(d1) || !natural_derangement(d2))
    throw std::logic_error("two_derangement_decompose: internal verification failed");
}

// Direct search base case: first even derangement d with d^{-1} g also a
// derangement.
std::pair<Permutation, Permutation> decompose_by_search(const Permutation& g) {
  int n = g.degree();
  std::pair<Permutation, Permutation> out{Permutation::identity(n),
                                          Permutation::identity(n)};
  bool found = false;
  GroupStream st(n, Group::An);
  Permutation d;
  while (!found && st.next(d)) {
    if (!natural_derangement(d)) continue;
    Permutation d2 = compose(inverse(d), g);
    if (natural_derangement(d2) && is_even(d2)) {
      out = {d, d2};
      found = true;
    }
  }
  if (!found) throw SearchExhausted("decompose_by_search: no pair found");
  return out;
}

// A single cycle of odd length c >= 3 equals d*d with d = cycle^{(c+1)/2},
// itself a c-cycle on the same support.
Permutation odd_cycle_half(const Permutation& cyc_on_support) {
  int c = cyc_on_support.degree();
  Permutation d = Permutation::identity(c);
  for (int i = 0; i < (c + 1) / 2; ++i) d = compose(d, cyc_on_support);
  return d;
}

std::pair<Permutation, Permutation> decompose_even(const Permutation& g,
                                                   std::uint64_t seed);

// Decompose a permutation supported on pts (g restricted there) and embed the
// factors back into S_n.
std::pair<Permutation, Permutation> decompose_on(const Permutation& g,
                                                 const std::vector<int>& pts,
                                                 std::uint64_t seed, int n) {
  Permutation h = restrict_to(g, pts);
  std::pair<Permutation, Permutation> f;
  int m = static_cast<int>(pts.size());
  if (m % 2 == 1) {
    // Odd-degree part: any even permutation is a product of two m-cycles.
    f = two_ell_cycle_factorization(h, m, seed);
  } else {
    f = decompose_even(h, seed);
  }
  return {embed(f.first, pts, n), embed(f.second, pts, n)};
}

// Two even-length cycles covering all m points.
std::pair<Permutation, Permutation> decompose_two_even_cycles(const Permutation& g,
                                                              std::uint64_t seed) {
  int m = g.degree();
  auto cyc = cycles_of(g);
  if (cyc.size() != 2) throw std::logic_error("expected exactly two cycles");
  if (cyc[0].size() < cyc[1].size()) std::swap(cyc[0], cyc[1]);
  std::size_t t2 = cyc[1].size();
  if (t2 >= 4) {
    // g^2 splits each even cycle into two half-length cycles >= 2, so both
    // g^2 and g^{-1} are even derangements.
    return {compose(g, g), inverse(g)};
  }
  if (m <= 10) return decompose_by_search(g);
  // t2 = 2, t1 = m-2 >= 10: explicit formula.  Normal form (0-based):
  // g0 = (0 1 ... m-3)(m-2 m-1), h = (0 1 ... m-4 m-2)(m-3 m-1);
  // then g0*h is a pair of m/2-cycles and g0 = (g0 h) * h^{-1}.
  std::vector<int> relabel(m);
  for (std::size_t i = 0; i < cyc[0].size(); ++i) relabel[i] = cyc[0][i];
  relabel[m - 2] = cyc[1][0];
  relabel[m - 1] = cyc[1][1];
  Permutation pi(relabel);
  std::vector<int> long_h;
  for (int i = 0; i <= m - 4; ++i) long_h.push_back(i);
  long_h.push_back(m - 2);
  Permutation g0 = Permutation::from_cycles(
      m, {[&] {
            std::vector<int> c;
            for (int i = 0; i <= m - 3; ++i) c.push_back(i);
            return c;
          }(),
          {m - 2, m - 1}});
  Permutation h = Permutation::from_cycles(m, {long_h, {m - 3, m - 1}});
  Permutation d1 = compose(g0, h);
  Permutation d2 = inverse(h);
  (void)seed;
  return {conjugate(d1, pi), conjugate(d2, pi)};
}

// Even n.  Assumes g even.
std::pair<Permutation, Permutation> decompose_even(const Permutation& g,
                                                   std::uint64_t seed) {
  int n = g.degree();
  if (n <= 10) return decompose_by_search(g);

  auto cyc = cycles_of(g);
  std::vector<int> fixed;
  std::vector<std::vector<int>> odd_cycles, even_cycles;
  for (auto& c : cyc) {
    if (c.size() == 1)
      fixed.push_back(c[0]);
    else if (c.size() % 2 == 1)
      odd_cycles.push_back(c);
    else
      even_cycles.push_back(c);
  }

  // (b1): at least two fixed points p, q.  Factor the restriction to the other
  // m = n-2 points into two m-cycles x1, x2 (odd in S_n since m is even) and
  // patch parity with the transposition (p q).
  if (fixed.size() >= 2) {
    int p = fixed[0], q = fixed[1];
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
      if (i != p && i != q) rest.push_back(i);
    Permutation h = restrict_to(g, rest);
    auto [x1, x2] = two_ell_cycle_factorization(h, n - 2, seed);
    Permutation t = Permutation::from_cycles(n, {{p, q}});
    return {compose(embed(x1, rest, n), t), compose(t, embed(x2, rest, n))};
  }

  // (b2): an odd cycle of length c with 3 <= c <= n-5; its complement has odd
  // size n-c >= 5 and carries an even permutation (possibly with the one
  // remaining fixed point), handled by two (n-c)-cycles.
  for (const auto& c : odd_cycles) {
    int clen = static_cast<int>(c.size());
    if (clen > n - 5) continue;
    std::vector<int> sup = c;
    std::sort(sup.begin(), sup.end());
    Permutation part = restrict_to(g, sup);
    Permutation half = odd_cycle_half(part);
    Permutation e1 = embed(half, sup, n);
    std::vector<int> rest;
    {
      std::vector<bool> in(n, false);
      for (int x : sup) in[x] = true;
      for (int i = 0; i < n; ++i)
        if (!in[i]) rest.push_back(i);
    }
    auto [r1, r2] = decompose_on(g, rest, seed, n);
    return {compose(e1, r1), compose(e1, r2)};
  }

  // All cycles odd and no fixed point: halve every cycle (d*d = g with d a
  // coprime power of each cycle).
  if (even_cycles.empty() && fixed.empty()) {
    Permutation d = Permutation::identity(n);
    for (const auto& c : odd_cycles) {
      std::vector<int> sup = c;
      std::sort(sup.begin(), sup.end());
      Permutation part = restrict_to(g, sup);
      d = compose(d, embed(odd_cycle_half(part), sup, n));
    }
    return {d, d};
  }

  // (n-1)-cycle plus one fixed point: explicit formula.  Normal form
  // (0-based): g0 = (0 1 ... n-2), h = (0 n-4)(1 2 ... n-5 n-3 n-2 n-1);
  // g0 = (g0 h) * h^{-1}, both factors even derangements.
  if (odd_cycles.size() == 1 && fixed.size() == 1 &&
      static_cast<int>(odd_cycles[0].size()) == n - 1) {
    std::vector<int> relabel(n);
    for (int i = 0; i < n - 1; ++i) relabel[i] = odd_cycles[0][i];
    relabel[n - 1] = fixed[0];
    Permutation pi(relabel);
    std::vector<int> g0img;
    for (int i = 0; i < n - 1; ++i) g0img.push_back(i);
    Permutation g0 = Permutation::from_cycles(n, {g0img});
    std::vector<int> hc = {};
    for (int i = 1; i <= n - 5; ++i) hc.push_back(i);
    hc.push_back(n - 3);
    hc.push_back(n - 2);
    hc.push_back(n - 1);
    Permutation h = Permutation::from_cycles(n, {{0, n - 4}, hc});
    Permutation d1 = compose(g0, h);
    Permutation d2 = inverse(h);
    return {conjugate(d1, pi), conjugate(d2, pi)};
  }

  // Remaining: all cycles even (an even count of them, no fixed points).
  if (!even_cycles.empty() && odd_cycles.empty() && fixed.empty()) {
    if (even_cycles.size() == 2) return decompose_two_even_cycles(g, seed);
    // (b3): pair the even cycles two at a time; each pair is an even
    // permutation of its joint support, decomposed by the two-cycle routine.
    std::sort(even_cycles.begin(), even_cycles.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    Permutation d1 = Permutation::identity(n);
    Permutation d2 = Permutation::identity(n);
    for (std::size_t i = 0; i + 1 < even_cycles.size(); i += 2) {
      std::vector<int> sup = even_cycles[i];
      sup.insert(sup.end(), even_cycles[i + 1].begin(), even_cycles[i + 1].end());
      std::sort(sup.begin(), sup.end());
      Permutation part = restrict_to(g, sup);
      int mp = static_cast<int>(sup.size());
      std::pair<Permutation, Permutation> f =
          mp <= 10 ? decompose_by_search(part) : decompose_two_even_cycles(part, seed);
      d1 = compose(d1, embed(f.first, sup, n));
      d2 = compose(d2, embed(f.second, sup, n));
    }
    return {d1, d2};
  }

  // Defensive fallback; unreachable if the case analysis is total.
  return decompose_by_search(g);
}
}  // namespace

std::pair<Permutation, Permutation> two_derangement_decompose(const Permutation& g,
                                                              std::uint64_t seed) {
  int n = g.degree();
  if (n < 5) throw std::invalid_argument("two_derangement_decompose: n >= 5 required");
  if (!is_even(g)) throw std::invalid_argument("two_derangement_decompose: g must be even");
  std::pair<Permutation, Permutation> out;
  if (n % 2 == 1) {
    out = two_ell_cycle_factorization(g, n, seed);
  } else {
    out = decompose_even(g, seed);
  }
  assert_decomposition(g, out.first, out.second);
  return out;
}

DSquaredReport verify_d_squared(const GroupAction& action, std::uint64_t guard) {
  int n = action.n();
  std::vector<Permutation> dlist;
  for_each_element(n, action.group(), [&](const Permutation& s) {
    if (action.is_derangement(s)) dlist.push_back(s);
  }, guard);
  std::unordered_set<std::uint64_t> dset;
  std::vector<Permutation> dinv;
  dinv.reserve(dlist.size());
  for (const Permutation& d : dlist) {
    dset.insert(d.encode());
    dinv.push_back(inverse(d));
  }
  DSquaredReport rep;
  rep.group_order = group_order(n, action.group());
  rep.derangement_count = BigInt(static_cast<long long>(dlist.size()));
  rep.all_covered = true;
  for_each_element(n, action.group(), [&](const Permutation& g) {
    for (const Permutation& di : dinv)
      if (dset.count(compose(di, g).encode())) return;
    rep.all_covered = false;
    rep.gaps.push_back(g);
  }, guard);
  return rep;
}

}  // namespace npd
