#include "npd/symbols.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

namespace npd {

namespace {

bool contains(const std::vector<int>& v, int e) {
  return std::binary_search(v.begin(), v.end(), e);
}

long long sum_of(const std::vector<int>& v) {
  long long s = 0;
  for (int e : v) s += e;
  return s;
}

void validate(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) throw std::invalid_argument("negative symbol entry");
    if (i > 0 && v[i] <= v[i - 1])
      throw std::invalid_argument("symbol entries must strictly increase");
  }
}

std::vector<int> with_replaced(const std::vector<int>& v, int out, int in) {
  std::vector<int> w;
  for (int e : v)
    if (e != out) w.push_back(e);
  w.insert(std::upper_bound(w.begin(), w.end(), in), in);
  return w;
}

}  // namespace

std::string SymbolXY::to_string() const {
  std::ostringstream os;
  os << "[[";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
  os << "],[";
  for (std::size_t i = 0; i < y.size(); ++i) os << (i ? "," : "") << y[i];
  os << "]]";
  return os.str();
}

std::vector<int> shift(const std::vector<int>& entries) {
  validate(entries);
  std::vector<int> out = {0};
  for (int e : entries) out.push_back(e + 1);
  return out;
}

long long inefficiency(const std::vector<int>& entries) {
  validate(entries);
  long long k = static_cast<long long>(entries.size());
  return -(k * (k - 1)) / 2 + sum_of(entries);
}

long long rank(const SymbolXY& s) {
  validate(s.x);
  validate(s.y);
  long long k = static_cast<long long>(s.x.size());
  long long l = static_cast<long long>(s.y.size());
  long long form1 = -((k + l - 1) * (k + l - 1)) / 4 + sum_of(s.x) + sum_of(s.y);
  long long form2 =
      inefficiency(s.x) + inefficiency(s.y) + ((k - l) * (k - l)) / 4;
  if (form1 != form2) throw std::logic_error("rank forms disagree");
  return form1;
}

SymbolXY minimal_representative(const SymbolXY& s) {
  SymbolXY m = s;
  validate(m.x);
  validate(m.y);
  while (!m.x.empty() && !m.y.empty() && m.x[0] == 0 && m.y[0] == 0) {
    std::vector<int> nx, ny;
    for (std::size_t i = 1; i < m.x.size(); ++i) nx.push_back(m.x[i] - 1);
    for (std::size_t i = 1; i < m.y.size(); ++i) ny.push_back(m.y[i] - 1);
    m.x = std::move(nx);
    m.y = std::move(ny);
  }
  if (m.defect() < 0 || (m.defect() == 0 && m.y < m.x)) std::swap(m.x, m.y);
  return m;
}

bool equivalent(const SymbolXY& a, const SymbolXY& b) {
  return minimal_representative(a) == minimal_representative(b);
}

std::vector<HookRecord> hooks(const SymbolXY& s, int d) {
  if (d < 1) throw std::invalid_argument("hook length must be positive");
  std::vector<HookRecord> out;
  for (int c : s.x)
    if (c - d >= 0 && !contains(s.x, c - d))
      out.push_back({Side::X, c - d, c, d, HookKind::Hook});
  for (int c : s.y)
    if (c - d >= 0 && !contains(s.y, c - d))
      out.push_back({Side::Y, c - d, c, d, HookKind::Hook});
  return out;
}

std::vector<HookRecord> cohooks(const SymbolXY& s, int d) {
  if (d < 1) throw std::invalid_argument("cohook length must be positive");
  std::vector<HookRecord> out;
  for (int c : s.x)
    if (c - d >= 0 && !contains(s.y, c - d))
      out.push_back({Side::X, c - d, c, d, HookKind::Cohook});
  for (int c : s.y)
    if (c - d >= 0 && !contains(s.x, c - d))
      out.push_back({Side::Y, c - d, c, d, HookKind::Cohook});
  return out;
}

SymbolXY remove_hook(const SymbolXY& s, const HookRecord& h) {
  const std::vector<int>& side = h.side == Side::X ? s.x : s.y;
  if (h.kind != HookKind::Hook || h.c - h.b != h.d || h.b < 0 ||
      !contains(side, h.c) || contains(side, h.b))
    throw NotAHook("not a hook of this symbol");
  SymbolXY out = s;
  (h.side == Side::X ? out.x : out.y) = with_replaced(side, h.c, h.b);
  return out;
}

SymbolXY remove_cohook(const SymbolXY& s, const HookRecord& h) {
  const std::vector<int>& from = h.side == Side::X ? s.x : s.y;
  const std::vector<int>& to = h.side == Side::X ? s.y : s.x;
  if (h.kind != HookKind::Cohook || h.c - h.b != h.d || h.b < 0 ||
      !contains(from, h.c) || contains(to, h.b))
    throw NotACohook("not a cohook of this symbol");
  SymbolXY out = s;
  std::vector<int>& f = h.side == Side::X ? out.x : out.y;
  std::vector<int>& t = h.side == Side::X ? out.y : out.x;
  f.erase(std::find(f.begin(), f.end(), h.c));
  t.insert(std::upper_bound(t.begin(), t.end(), h.b), h.b);
  return out;
}

namespace {

// Strictly increasing sets of the given size and inefficiency correspond to
// weakly increasing offset sequences m_0 <= ... <= m_{k-1} summing to the
// inefficiency (entry j = j + m_j).
void sets_with_inefficiency(int size, long long budget,
                            std::vector<std::vector<int>>& out) {
  std::vector<int> offsets(size, 0);
  // Offsets are weakly increasing; remaining positions each carry >= low.
  std::function<void(int, long long, int)> go = [&](int pos, long long rest,
                                                    int low) {
    if (pos == size) {
      if (rest != 0) return;
      std::vector<int> entries(size);
      for (int j = 0; j < size; ++j) entries[j] = j + offsets[j];
      out.push_back(std::move(entries));
      return;
    }
    long long slots = size - pos;
    for (long long m = low; m * slots <= rest; ++m) {
      offsets[pos] = static_cast<int>(m);
      go(pos + 1, rest - m, static_cast<int>(m));
    }
  };
  go(0, budget, 0);
}

}  // namespace

std::vector<EnumeratedSymbol> enumerate_symbols(
    int r, const std::function<bool(int)>& defect_filter, int max_rank) {
  if (r < 0) throw std::invalid_argument("rank must be nonnegative");
  if (r > max_rank) throw SizeGuardExceeded("enumerate_symbols rank bound");

  std::vector<EnumeratedSymbol> out;
  const int size_cap = 2 * r + 3;
  for (int defect = 0; defect <= size_cap; ++defect) {
    if (!defect_filter(defect)) continue;
    long long dsq = static_cast<long long>(defect) * defect / 4;
    long long budget = r - dsq;
    if (budget < 0) break;
    for (int l = 0; l + defect <= size_cap; ++l) {
      int k = l + defect;
      for (long long ax = 0; ax <= budget; ++ax) {
        std::vector<std::vector<int>> xs, ys;
        sets_with_inefficiency(k, ax, xs);
        sets_with_inefficiency(l, budget - ax, ys);
        for (const std::vector<int>& x : xs)
          for (const std::vector<int>& y : ys) {
            // Minimality: not both sides contain 0.
            if (!x.empty() && !y.empty() && x[0] == 0 && y[0] == 0) continue;
            // Swap normalization at defect 0: keep x <= y, degenerate once.
            if (defect == 0 && y < x) continue;
            SymbolXY s{x, y};
            assert(rank(s) == r);
            out.push_back({s, x == y});
          }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const EnumeratedSymbol& a, const EnumeratedSymbol& b) {
              return a.symbol < b.symbol;
            });
  return out;
}

long long count_constrained(int r, const std::vector<HookConstraint>& cs,
                            const std::function<bool(int)>& defect_filter,
                            int max_rank) {
  long long count = 0;
  for (const EnumeratedSymbol& e : enumerate_symbols(r, defect_filter,
                                                     max_rank)) {
    bool ok = true;
    for (const HookConstraint& c : cs) {
      bool has = c.kind == HookKind::Hook ? !hooks(e.symbol, c.length).empty()
                                          : !cohooks(e.symbol, c.length).empty();
      if (!has) { ok = false; break; }
    }
    if (ok) ++count;
  }
  return count;
}

std::vector<EnumeratedSymbol> classify_surviving_symbols(
    int r, DefectClass dc, const std::vector<HookConstraint>& required,
    int max_rank) {
  auto filter = [dc](int defect) {
    switch (dc) {
      case DefectClass::Odd: return defect % 2 == 1;
      case DefectClass::TwoModFour: return defect % 4 == 2;
      case DefectClass::ZeroModFour: return defect % 4 == 0;
    }
    return false;
  };
  std::vector<EnumeratedSymbol> out;
  for (const EnumeratedSymbol& e : enumerate_symbols(r, filter, max_rank)) {
    bool ok = true;
    for (const HookConstraint& c : required) {
      bool has = c.kind == HookKind::Hook ? !hooks(e.symbol, c.length).empty()
                                          : !cohooks(e.symbol, c.length).empty();
      if (!has) { ok = false; break; }
    }
    if (ok) out.push_back(e);
  }
  return out;
}

HookLengthProfile all_hook_cohook_lengths(const SymbolXY& s) {
  HookLengthProfile p;
  int top = 0;
  for (int e : s.x) top = std::max(top, e);
  for (int e : s.y) top = std::max(top, e);
  for (int d = 1; d <= top; ++d) {
    int h = static_cast<int>(hooks(s, d).size());
    int c = static_cast<int>(cohooks(s, d).size());
    if (h) p.hook_lengths[d] = h;
    if (c) p.cohook_lengths[d] = c;
  }
  return p;
}

bool denominator_divisible(const SymbolXY& s, long long q, long long ell) {
  if (ell < 2 || q % ell == 0)
    throw std::invalid_argument("denominator_divisible: need prime ell !| q");
  // Multiplicative order of q mod ell.
  long long ord = 1;
  long long pw = q % ell;
  while (pw != 1) {
    pw = (pw * (q % ell)) % ell;
    if (++ord > ell) throw std::invalid_argument("ell is not prime");
  }
  HookLengthProfile p = all_hook_cohook_lengths(s);
  for (const auto& [d, mult] : p.hook_lengths)
    if (d % ord == 0) return true;
  for (const auto& [d, mult] : p.cohook_lengths)
    if ((2 * d) % ord == 0 && d % ord != 0) return true;
  return false;
}

}  // namespace npd
