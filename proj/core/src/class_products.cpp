#include "npd/class_products.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace npd {

namespace {

void check_class_index(const CharacterTable& table, int c) {
  if (c < 0 || c >= table.num_classes())
    throw InvalidClass("class index out of range: " + std::to_string(c));
}

int principal_character(const CharacterTable& table) {
  for (int chi = 0; chi < table.num_characters(); ++chi) {
    bool all_one = true;
    for (int c = 0; c < table.num_classes(); ++c)
      if (!(table.value(chi, c) == QSqrt(1))) { all_one = false; break; }
    if (all_one) return chi;
  }
  throw std::logic_error("table has no principal character");
}

Rat rat_pow(const Rat& base, long long e) {
  Rat out = 1;
  Rat b = base;
  long long k = e;
  for (; k > 0; k >>= 1) {
    if (k & 1) out *= b;
    b *= b;
  }
  return out;
}

}  // namespace

NormalSubset make_normal_subset(int n, Group group,
                                const std::set<int>& member_classes) {
  std::vector<ConjugacyClassSn> classes = conjugacy_classes(n, group);
  NormalSubset s;
  s.n = n;
  s.group = group;
  s.member_classes = member_classes;
  s.size = 0;
  for (int c : member_classes) {
    if (c < 0 || c >= static_cast<int>(classes.size()))
      throw InvalidClass("class index out of range: " + std::to_string(c));
    s.size += classes[c].class_size;
  }
  return s;
}

std::vector<Permutation> materialize(const NormalSubset& s,
                                     std::uint64_t guard) {
  std::vector<ConjugacyClassSn> classes = conjugacy_classes(s.n, s.group);
  std::vector<Permutation> out;
  for_each_element(s.n, s.group, [&](const Permutation& g) {
    if (s.member_classes.count(class_index_of(classes, g, s.group)))
      out.push_back(g);
  }, guard);
  return out;
}

BigInt frobenius_count(const CharacterTable& table,
                       const FactorizationQuery& query) {
  if (query.classes.empty())
    throw std::invalid_argument("frobenius_count: at least one class required");
  for (int c : query.classes) check_class_index(table, c);
  check_class_index(table, query.target_class);

  const int k = static_cast<int>(query.classes.size());
  QSqrt sum = 0;
  for (int chi = 0; chi < table.num_characters(); ++chi) {
    QSqrt term = table.value(chi, query.target_class).conj();
    for (int c : query.classes) term *= table.value(chi, c);
    term = term.div_rat(rat_pow(table.degree(chi), k - 1));
    sum += term;
  }

  Rat prefactor(1);
  for (int c : query.classes)
    prefactor *= Rat(table.classes[c].class_size);
  prefactor /= Rat(table.order);

  Rat value;
  try {
    value = (sum * QSqrt(prefactor)).as_rational();
  } catch (const std::domain_error&) {
    throw NonIntegerCount("frobenius_count: irrational character sum");
  }
  if (denominator(value) != 1 || value < 0)
    throw NonIntegerCount("frobenius_count: non-integral count " +
                          value.str());
  return numerator(value);
}

BigInt bruteforce_count(const std::vector<std::vector<Permutation>>& subsets,
                        const Permutation& target, std::uint64_t guard) {
  if (subsets.empty())
    throw std::invalid_argument("bruteforce_count: at least one subset");
  const std::size_t k = subsets.size();
  if (k == 1) {
    BigInt c = 0;
    for (const Permutation& s : subsets[0])
      if (s == target) ++c;
    return c;
  }
  if (k == 2) {
    // s * t = g  <=>  t = s^{-1} g: cost |S_1| with membership lookup in S_2.
    std::unordered_set<std::uint64_t> t_set;
    for (const Permutation& t : subsets[1]) t_set.insert(t.encode());
    BigInt c = 0;
    for (const Permutation& s : subsets[0])
      if (t_set.count(compose(inverse(s), target).encode())) ++c;
    return c;
  }
  // General case: convolve partial-product multiplicities left to right.
  std::unordered_map<std::uint64_t, Permutation> reps;
  std::unordered_map<std::uint64_t, BigInt> dist;
  for (const Permutation& s : subsets[0]) {
    std::uint64_t e = s.encode();
    reps.emplace(e, s);
    dist[e] += 1;
  }
  std::uint64_t work = 0;
  for (std::size_t i = 1; i < k; ++i) {
    std::unordered_map<std::uint64_t, Permutation> nreps;
    std::unordered_map<std::uint64_t, BigInt> ndist;
    for (const auto& [e, cnt] : dist) {
      const Permutation& p = reps.at(e);
      for (const Permutation& s : subsets[i]) {
        if (++work > guard) throw SizeGuardExceeded("bruteforce_count");
        Permutation q = compose(p, s);
        std::uint64_t qe = q.encode();
        nreps.emplace(qe, q);
        ndist[qe] += cnt;
      }
    }
    reps = std::move(nreps);
    dist = std::move(ndist);
  }
  auto it = dist.find(target.encode());
  return it == dist.end() ? BigInt(0) : it->second;
}

CoverReport class_product_cover(const CharacterTable& table, int c1, int c2) {
  check_class_index(table, c1);
  check_class_index(table, c2);
  CoverReport r;
  r.counts.resize(table.num_classes());
  for (int c = 0; c < table.num_classes(); ++c) {
    r.counts[c] = frobenius_count(table, {{c1, c2}, c});
    if (r.counts[c] > 0) r.covered.insert(c);
  }
  r.cover_nontrivial = true;
  for (int c = 0; c < table.num_classes(); ++c)
    if (c != table.identity_class && !r.covered.count(c))
      r.cover_nontrivial = false;
  return r;
}

BigInt min_nontrivial_degree(const CharacterTable& table) {
  const int principal = principal_character(table);
  BigInt best = -1;
  for (int chi = 0; chi < table.num_characters(); ++chi) {
    if (chi == principal) continue;
    BigInt d = numerator(table.degree(chi));
    if (best < 0 || d < best) best = d;
  }
  if (best < 0) throw std::logic_error("table has only the principal character");
  return best;
}

GowersReport gowers_check(int n, Group group,
                          const std::vector<Permutation>& a,
                          const std::vector<Permutation>& b,
                          const std::vector<Permutation>& c,
                          std::uint64_t guard) {
  GowersReport r;
  CharacterTable table =
      group == Group::Sn ? sn_character_table(n) : an_character_table(n);
  BigInt order = group_order(n, group);
  BigInt m = min_nontrivial_degree(table);
  r.hypothesis = BigInt(a.size()) * BigInt(b.size()) * BigInt(c.size()) * m >=
                 order * order * order;

  std::uint64_t work =
      static_cast<std::uint64_t>(a.size()) * b.size();
  if (work > guard) throw SizeGuardExceeded("gowers_check: |A||B|");
  std::unordered_map<std::uint64_t, Permutation> ab;
  for (const Permutation& x : a)
    for (const Permutation& y : b) {
      Permutation p = compose(x, y);
      ab.emplace(p.encode(), p);
    }
  if (ab.size() * c.size() > guard)
    throw SizeGuardExceeded("gowers_check: |AB||C|");
  std::unordered_set<std::uint64_t> abc;
  for (const auto& [e, p] : ab)
    for (const Permutation& z : c)
      abc.insert(compose(p, z).encode());
  r.product_all = BigInt(abc.size()) == order;
  if (r.hypothesis && !r.product_all)
    throw std::logic_error("gowers_check: hypothesis met but ABC != G");
  return r;
}

BnpReport bnp_bound_check(int n, Group group,
                          const std::vector<std::vector<Permutation>>& subsets,
                          const Rat& alpha, std::uint64_t guard) {
  if (subsets.size() < 3)
    throw std::invalid_argument("bnp_bound_check: need t >= 3 subsets");
  if (alpha <= 0)
    throw std::invalid_argument("bnp_bound_check: alpha must be positive");

  std::vector<Permutation> elements;
  std::unordered_map<std::uint64_t, int> index;
  for_each_element(n, group, [&](const Permutation& g) {
    index.emplace(g.encode(), static_cast<int>(elements.size()));
    elements.push_back(g);
  }, guard);
  const int order = static_cast<int>(elements.size());

  std::vector<BigInt> counts(order, 0);
  for (const Permutation& s : subsets[0]) counts[index.at(s.encode())] += 1;
  std::uint64_t work = 0;
  for (std::size_t i = 1; i < subsets.size(); ++i) {
    std::vector<BigInt> next(order, 0);
    for (int g = 0; g < order; ++g) {
      if (counts[g] == 0) continue;
      for (const Permutation& s : subsets[i]) {
        if (++work > guard) throw SizeGuardExceeded("bnp_bound_check");
        next[index.at(compose(elements[g], s).encode())] += counts[g];
      }
    }
    counts = std::move(next);
  }

  BigInt prod = 1;
  for (const auto& s : subsets) prod *= BigInt(s.size());
  BigInt order_big(order);

  CharacterTable table =
      group == Group::Sn ? sn_character_table(n) : an_character_table(n);
  BigInt m = min_nontrivial_degree(table);
  const long long t = static_cast<long long>(subsets.size());

  BnpReport r;
  r.expected = Rat(prod, order_big);
  r.hypothesis_met = Rat(prod) * rat_pow(Rat(m), t - 2) >=
                     alpha * rat_pow(Rat(order_big), t);
  r.bound_holds = true;
  BigInt total = 0;
  r.max_count = counts[0];
  r.min_count = counts[0];
  for (int g = 0; g < order; ++g) {
    total += counts[g];
    r.max_count = std::max(r.max_count, counts[g]);
    r.min_count = std::min(r.min_count, counts[g]);
    Rat dev = Rat(counts[g]) - r.expected;
    if (dev * dev * alpha > r.expected * r.expected) r.bound_holds = false;
  }
  r.mass_conserved = total == prod;
  return r;
}

Rat witten_zeta(const CharacterTable& table, long long s) {
  Rat sum = 0;
  for (int chi = 0; chi < table.num_characters(); ++chi) {
    Rat d = table.degree(chi);
    sum += s >= 0 ? Rat(1) / rat_pow(d, s) : rat_pow(d, -s);
  }
  return sum;
}

double witten_zeta_real(const CharacterTable& table, double s) {
  double sum = 0.0;
  for (int chi = 0; chi < table.num_characters(); ++chi)
    sum += std::pow(static_cast<double>(numerator(table.degree(chi))), -s);
  return sum;
}

UniformBoundReport triple_class_uniform_bound(const CharacterTable& table,
                                              int c1, int c2, int c3,
                                              int g_class) {
  check_class_index(table, g_class);
  BigInt count = frobenius_count(table, {{c1, c2, c3}, g_class});
  Rat denom = Rat(table.classes[c1].class_size) *
              Rat(table.classes[c2].class_size) *
              Rat(table.classes[c3].class_size);
  Rat pr = Rat(count) / denom;
  Rat diff = pr - Rat(1) / Rat(table.order);
  if (diff < 0) diff = -diff;

  const int principal = principal_character(table);
  UniformBoundReport r;
  r.lhs = static_cast<double>(diff);
  r.rhs = 0.0;
  for (int chi = 0; chi < table.num_characters(); ++chi) {
    if (chi == principal) continue;
    double num = table.value(chi, c1).abs_value() *
                 table.value(chi, c2).abs_value() *
                 table.value(chi, c3).abs_value();
    r.rhs += num / static_cast<double>(numerator(table.degree(chi)));
  }
  // Tiny tolerance absorbs the float evaluation of the algebraic rhs.
  r.pass = r.lhs <= r.rhs + 1e-9;
  return r;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const WordLetter& l : w) {
    if (l.exponent != 1 && l.exponent != -1)
      throw std::invalid_argument("word exponents must be +-1");
    if (!out.empty() && out.back().letter == l.letter &&
        out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

NormalSubset word_image(const Word& w, int n, Group group,
                        std::uint64_t guard) {
  Word word = free_reduce(w);
  int d = 0;
  for (const WordLetter& l : word) {
    if (l.letter < 0) throw std::invalid_argument("negative letter index");
    d = std::max(d, l.letter + 1);
  }

  std::vector<Permutation> elements;
  for_each_element(n, group, [&](const Permutation& g) {
    elements.push_back(g);
  }, guard);
  const std::size_t order = elements.size();

  std::uint64_t tuples = 1;
  for (int i = 0; i < d; ++i) {
    if (tuples > guard / std::max<std::size_t>(order, 1))
      throw SizeGuardExceeded("word_image: |G|^d");
    tuples *= order;
  }

  std::unordered_set<std::uint64_t> image;
  Permutation identity = Permutation::identity(n);
  if (d == 0) {
    image.insert(identity.encode());
  } else {
    std::vector<std::size_t> idx(d, 0);
    while (true) {
      Permutation value = identity;
      for (const WordLetter& l : word) {
        const Permutation& x = elements[idx[l.letter]];
        value = compose(value, l.exponent == 1 ? x : inverse(x));
      }
      image.insert(value.encode());
      int pos = d - 1;
      while (pos >= 0 && ++idx[pos] == order) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }

  std::vector<ConjugacyClassSn> classes = conjugacy_classes(n, group);
  std::set<int> member;
  BigInt covered_size = 0;
  for (int c = 0; c < static_cast<int>(classes.size()); ++c)
    if (image.count(classes[c].rep.encode())) {
      member.insert(c);
      covered_size += classes[c].class_size;
    }
  if (covered_size != BigInt(image.size()))
    throw std::logic_error("word_image: image is not a union of classes");
  return make_normal_subset(n, group, member);
}

DistributionDistance product_distribution_distance(const NormalSubset& s,
                                                   const NormalSubset& t,
                                                   std::uint64_t guard) {
  if (s.n != t.n || s.group != t.group)
    throw std::invalid_argument("product_distribution_distance: group mismatch");
  if (s.size == 0 || t.size == 0)
    throw std::invalid_argument("product_distribution_distance: empty subset");

  std::vector<Permutation> s_elems = materialize(s, guard);
  std::unordered_set<std::uint64_t> t_set;
  for (const Permutation& x : materialize(t, guard)) t_set.insert(x.encode());

  std::vector<ConjugacyClassSn> classes = conjugacy_classes(s.n, s.group);
  BigInt order = group_order(s.n, s.group);
  Rat pair_total = Rat(s.size) * Rat(t.size);

  // Pr_{S,T} is a class function, so one scan per class representative g:
  // #{(x, y) in S x T : xy = g} = #{x in S : x^{-1} g in T}.
  DistributionDistance r;
  r.l1_exact = 0;
  const Rat uniform = Rat(1) / Rat(order);
  for (const ConjugacyClassSn& cls : classes) {
    BigInt hits = 0;
    for (const Permutation& x : s_elems)
      if (t_set.count(compose(inverse(x), cls.rep).encode())) ++hits;
    Rat pr = Rat(hits) / pair_total;
    Rat diff = pr - uniform;
    if (diff < 0) diff = -diff;
    r.l1_exact += Rat(cls.class_size) * diff;
    double ratio = static_cast<double>(diff * Rat(order));
    r.linf_ratio = std::max(r.linf_ratio, ratio);
  }
  r.l1 = static_cast<double>(r.l1_exact);
  return r;
}

}  // namespace npd
