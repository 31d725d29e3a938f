#include "npd/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace npd {

namespace {
// Beta-set encoding: B = {lambda_i + (k-1-i)}, a strictly decreasing set.
std::vector<int> beta_set(const Partition& lambda) {
  int k = lambda.num_parts();
  std::vector<int> b(k);
  for (int i = 0; i < k; ++i) b[i] = lambda.part(i) + (k - 1 - i);
  return b;
}

Partition from_beta(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  int k = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 0; i < k; ++i) {
    int p = b[i] - (k - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(parts);
}
}  // namespace

std::vector<RimHookRemoval> rim_hook_removals(const Partition& lambda, int d) {
  if (d <= 0) throw std::invalid_argument("rim_hook_removals: d must be positive");
  std::vector<RimHookRemoval> out;
  std::vector<int> b = beta_set(lambda);
  for (std::size_t i = 0; i < b.size(); ++i) {
    int target = b[i] - d;
    if (target < 0) continue;
    if (std::find(b.begin(), b.end(), target) != b.end()) continue;
    int height = 0;
    for (int x : b)
      if (x > target && x < b[i]) ++height;
    std::vector<int> nb = b;
    nb[i] = target;
    out.push_back({from_beta(nb), height, height % 2 == 0 ? 1 : -1});
  }
  return out;
}

namespace {
using MnKey = std::pair<std::vector<int>, std::vector<int>>;
std::map<MnKey, long long> g_mn_memo;

long long mn_rec(const Partition& lambda, const std::vector<int>& mu, std::size_t idx) {
  if (idx == mu.size()) return 1;  // lambda is empty here
  MnKey key{lambda.parts(), std::vector<int>(mu.begin() + idx, mu.end())};
  auto it = g_mn_memo.find(key);
  if (it != g_mn_memo.end()) return it->second;
  long long v = 0;
  for (const RimHookRemoval& r : rim_hook_removals(lambda, mu[idx]))
    v += r.sign * mn_rec(r.result, mu, idx + 1);
  g_mn_memo.emplace(std::move(key), v);
  return v;
}
}  // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("mn_character: |lambda| != |mu|");
  return mn_rec(lambda, mu.parts(), 0);
}

namespace {
int find_identity_class(const std::vector<ConjugacyClassSn>& classes, int n) {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].type.num_parts() == n) return static_cast<int>(i);
  throw std::logic_error("identity class missing");
}

// Order characters by (degree ascending, label) for a deterministic layout.
void sort_characters(CharacterTable& t) {
  std::vector<int> idx(t.values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    Rat da = t.values[a][t.identity_class].as_rational();
    Rat db = t.values[b][t.identity_class].as_rational();
    if (da != db) return da < db;
    return t.labels[a] < t.labels[b];
  });
  std::vector<std::string> labels;
  std::vector<std::vector<QSqrt>> values;
  for (int i : idx) {
    labels.push_back(t.labels[i]);
    values.push_back(t.values[i]);
  }
  t.labels = std::move(labels);
  t.values = std::move(values);
}
}  // namespace

CharacterTable sn_character_table(int n) {
  if (n < 1) throw std::invalid_argument("sn_character_table: n >= 1 required");
  CharacterTable t;
  t.n = n;
  t.group = Group::Sn;
  t.order = factorial(n);
  t.classes = conjugacy_classes(n, Group::Sn);
  t.identity_class = find_identity_class(t.classes, n);
  for (const Partition& lambda : partitions_of(n)) {
    std::vector<QSqrt> row;
    row.reserve(t.classes.size());
    for (const auto& c : t.classes) row.emplace_back(Rat(mn_character(lambda, c.type)));
    t.labels.push_back("chi" + lambda.to_string());
    t.values.push_back(std::move(row));
  }
  sort_characters(t);
  return t;
}

CharacterTable an_character_table(int n, int guard_n) {
  if (n < 1) throw std::invalid_argument("an_character_table: n >= 1 required");
  if (n > guard_n) throw SizeGuardExceeded("an_character_table: n exceeds guard");
  CharacterTable t;
  t.n = n;
  t.group = Group::An;
  t.order = group_order(n, Group::An);
  t.classes = conjugacy_classes(n, Group::An);
  t.identity_class = find_identity_class(t.classes, n);

  for (const Partition& lambda : partitions_of(n)) {
    Partition lt = lambda.transpose();
    if (lt < lambda) continue;  // handle each {lambda, lambda^T} pair once
    if (!(lambda == lt)) {
      // Restriction of chi^lambda stays irreducible.
      std::vector<QSqrt> row;
      for (const auto& c : t.classes) row.emplace_back(Rat(mn_character(lambda, c.type)));
      t.labels.push_back("chi" + lambda.to_string());
      t.values.push_back(std::move(row));
      continue;
    }
    // Self-conjugate lambda: chi^lambda splits into two conjugate halves that
    // differ only on the split class pair whose type is the diagonal hooks.
    std::vector<int> hooks = lambda.diagonal_hooks();
    Partition hook_type(hooks);
    long long m = 1;
    for (int h : hooks) m *= h;
    int r = static_cast<int>(hooks.size());
    int eps = ((n - r) / 2) % 2 == 0 ? 1 : -1;
    QSqrt vplus = QSqrt(Rat(eps, 2)) + QSqrt::surd(Rat(1, 2), eps * m);
    QSqrt vminus = QSqrt(Rat(eps, 2)) - QSqrt::surd(Rat(1, 2), eps * m);
    std::vector<QSqrt> row_p, row_m;
    for (const auto& c : t.classes) {
      if (c.type == hook_type) {
        row_p.push_back(c.split_tag == 0 ? vplus : vminus);
        row_m.push_back(c.split_tag == 0 ? vminus : vplus);
      } else {
        long long v = mn_character(lambda, c.type);
        if (v % 2 != 0)
          throw std::logic_error("split character: off-type value not even");
        row_p.emplace_back(Rat(v / 2));
        row_m.emplace_back(Rat(v / 2));
      }
    }
    t.labels.push_back("chi" + lambda.to_string() + "+");
    t.values.push_back(std::move(row_p));
    t.labels.push_back("chi" + lambda.to_string() + "-");
    t.values.push_back(std::move(row_m));
  }
  sort_characters(t);
  return t;
}

void check_row_orthogonality(const CharacterTable& t) {
  for (int a = 0; a < t.num_characters(); ++a) {
    for (int b = a; b < t.num_characters(); ++b) {
      QSqrt acc;
      for (int c = 0; c < t.num_classes(); ++c)
        acc += QSqrt(Rat(t.classes[c].class_size)) * t.value(a, c) * t.value(b, c).conj();
      Rat expect = a == b ? Rat(t.order) : Rat(0);
      if (!(acc.as_rational() == expect))
        throw std::logic_error("row orthogonality failed at (" + t.labels[a] + ", " +
                               t.labels[b] + ")");
    }
  }
}

void check_column_orthogonality(const CharacterTable& t) {
  for (int c = 0; c < t.num_classes(); ++c) {
    for (int d = c; d < t.num_classes(); ++d) {
      QSqrt acc;
      for (int a = 0; a < t.num_characters(); ++a)
        acc += t.value(a, c) * t.value(a, d).conj();
      Rat expect = c == d ? Rat(t.classes[c].centralizer) : Rat(0);
      if (!(acc.as_rational() == expect))
        throw std::logic_error("column orthogonality failed at classes " +
                               std::to_string(c) + ", " + std::to_string(d));
    }
  }
}

namespace {
std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}
}  // namespace

std::string character_table_to_json(const CharacterTable& t) {
  nlohmann::json j;
  j["group"] = group_name(t.group, t.n);
  j["classes"] = nlohmann::json::array();
  for (const auto& c : t.classes) {
    nlohmann::json jc;
    jc["type"] = c.type.parts();
    if (c.splits_in_An) jc["split_tag"] = c.split_tag;
    jc["size"] = c.class_size.str();
    jc["centralizer"] = c.centralizer.str();
    j["classes"].push_back(jc);
  }
  j["characters"] = nlohmann::json::array();
  for (int a = 0; a < t.num_characters(); ++a) {
    nlohmann::json jc;
    jc["label"] = t.labels[a];
    jc["values"] = nlohmann::json::array();
    for (int c = 0; c < t.num_classes(); ++c) {
      const QSqrt& v = t.value(a, c);
      if (v.is_rational()) {
        jc["values"].push_back(rat_str(v.as_rational()));
      } else {
        // Split values have the form a + b*sqrt(D).
        if (v.surd_terms().size() != 1)
          throw std::logic_error("table value with multiple surd terms");
        nlohmann::json s;
        s["a"] = rat_str(v.rational_part());
        s["b"] = rat_str(v.surd_terms().begin()->second);
        s["D"] = v.surd_terms().begin()->first;
        jc["values"].push_back(s);
      }
    }
    j["characters"].push_back(jc);
  }
  return j.dump();
}

BigInt unipotent_gl_degree(const Partition& lambda, const BigInt& q) {
  if (q < 2) throw std::invalid_argument("unipotent_gl_degree: q >= 2 required");
  int n = lambda.size();
  BigInt num = 1;
  for (int p : lambda.parts()) {
    BigInt e = BigInt(p) * (p - 1) / 2;
    for (BigInt i = 0; i < e; ++i) num *= q;
  }
  for (int j = 1; j <= n; ++j) {
    BigInt qj = 1;
    for (int i = 0; i < j; ++i) qj *= q;
    num *= qj - 1;
  }
  BigInt den = 1;
  for (int h : lambda.hook_lengths()) {
    BigInt qh = 1;
    for (int i = 0; i < h; ++i) qh *= q;
    den *= qh - 1;
  }
  BigInt deg = num / den;
  if (deg * den != num) throw std::logic_error("unipotent degree: non-exact division");
  return deg;
}

std::vector<ADegreeWitness> verify_adegree_bound(int n, int L, const BigInt& q) {
  if (n < 1 || L < 0 || n - L < 1)
    throw std::invalid_argument("verify_adegree_bound: need 0 <= L < n");
  long long e2 = static_cast<long long>(n) * n - n - 5LL * L * L + 3LL * L - 4;
  if (e2 % 2 != 0) throw std::logic_error("bound exponent not integral");
  long long e = e2 / 2;
  Rat bound = 1;
  for (long long i = 0; i < std::abs(e); ++i) bound *= q;
  if (e < 0) bound = Rat(1) / bound;
  std::vector<ADegreeWitness> out;
  for (const Partition& lambda : partitions_of(n)) {
    if (lambda.part(0) != n - L) continue;
    BigInt deg = unipotent_gl_degree(lambda, q);
    out.push_back({lambda, deg, Rat(deg) > bound});
  }
  return out;
}

std::vector<Partition> twelve_reference_shapes(int n) {
  auto P = [](std::vector<int> v) {
    std::erase(v, 0);
    return Partition(v);
  };
  return {P({n}),          P({n - 1, 1}),    P({n - 2, 1, 1}),
          P({n - 4, 4}),   P({n - 5, 3, 2}), P({n - 6, 2, 2, 2})};
}

std::vector<NonvanishingPair> classify_nonvanishing_pair(int n) {
  if (n < 8) throw std::invalid_argument("classify_nonvanishing_pair: n >= 8 required");
  Partition mu1({n - 3, 3});
  Partition mu2({n - 4, 4});
  std::vector<NonvanishingPair> out;
  for (const Partition& lambda : partitions_of(n)) {
    long long v1 = mn_character(lambda, mu1);
    if (v1 == 0) continue;
    long long v2 = mn_character(lambda, mu2);
    if (v2 == 0) continue;
    out.push_back({lambda, v1, v2});
  }
  return out;
}

}  // namespace npd
