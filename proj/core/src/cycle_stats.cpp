#include "npd/cycle_stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace npd {

StirlingTable::StirlingTable(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("StirlingTable: n_max >= 0 required");
  c_.resize(n_max + 1);
  c_[0] = {1};
  for (int n = 0; n < n_max; ++n) {
    c_[n + 1].assign(n + 2, 0);
    for (int k = 0; k <= n + 1; ++k) {
      BigInt v = 0;
      if (k <= n) v += BigInt(n) * c_[n][k];
      if (k >= 1 && k - 1 <= n) v += c_[n][k - 1];
      c_[n + 1][k] = v;
    }
  }
}

const BigInt& StirlingTable::at(int n, int k) const {
  if (n < 0 || n > n_max_ || k < 0 || k > n)
    throw std::invalid_argument("StirlingTable: index out of range");
  return c_[n][k];
}

BigInt stirling_first(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("stirling_first: need 0 <= k <= n");
  return StirlingTable(n).at(n, k);
}

BigInt count_p_mod(int n, int m, int a, Group g) {
  if (m < 1) throw std::invalid_argument("count_p_mod: m >= 1 required");
  StirlingTable tab(n);
  BigInt total = 0;
  int aa = ((a % m) + m) % m;
  for (int k = (n == 0 ? 0 : 1); k <= n; ++k) {
    if (k % m != aa) continue;
    if (g == Group::An && (k % 2) != (n % 2)) continue;
    total += tab.at(n, k);
  }
  return total;
}

namespace {
using Poly = std::vector<BigInt>;  // coefficients, low degree first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Exact division of monic-divisor polynomials; remainder returned.
Poly poly_rem(Poly a, const Poly& d) {
  trim(a);
  while (a.size() >= d.size()) {
    BigInt lead = a.back();  // divisor is monic
    std::size_t shift = a.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) a[shift + i] -= lead * d[i];
    trim(a);
  }
  return a;
}

Poly poly_quot(Poly a, const Poly& d) {
  trim(a);
  Poly q(a.size() >= d.size() ? a.size() - d.size() + 1 : 0, BigInt(0));
  while (a.size() >= d.size()) {
    BigInt lead = a.back();
    std::size_t shift = a.size() - d.size();
    q[shift] = lead;
    for (std::size_t i = 0; i < d.size(); ++i) a[shift + i] -= lead * d[i];
    trim(a);
  }
  return q;
}
}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m >= 1 required");
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
  Poly num(m + 1, BigInt(0));
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = poly_quot(num, cyclotomic_polynomial(d));
  }
  return num;
}

RisingFactorialReport rising_factorial_identity_check(int n, int m) {
  if (m < 1) throw std::invalid_argument("rising_factorial_identity_check: m >= 1");
  Poly phi = cyclotomic_polynomial(m);
  // LHS: sum_a x^a * P_{n,m,a}, a = 0..m-1, reduced mod Phi_m.
  Poly lhs(m, BigInt(0));
  for (int a = 0; a < m; ++a) lhs[a] = count_p_mod(n, m, a, Group::Sn);
  lhs = poly_rem(lhs, phi);
  // RHS: x(x+1)...(x+n-1) mod Phi_m.
  Poly rhs = {BigInt(1)};
  for (int j = 0; j < n; ++j) {
    rhs = mul(rhs, Poly{BigInt(j), BigInt(1)});
    rhs = poly_rem(rhs, phi);
  }
  return {lhs == rhs, lhs, rhs};
}

ResidueSetPair build_alt_sets(int n, int m, int k, int l) {
  if (m % 2 == 0 || m < 1) throw std::invalid_argument("build_alt_sets: m must be odd");
  if (!(0 < k && k < l && l <= m))
    throw std::invalid_argument("build_alt_sets: need 0 < k < l <= m");
  ResidueSetPair p;
  p.n = n;
  p.m = m;
  for (int v = 2; v <= 2 * k - 2; v += 2) p.s_residues.insert(((v % m) + m) % m);
  for (int v = 2 * k + 2; v <= 2 * l - 2; v += 2) p.t_residues.insert(((v % m) + m) % m);
  for (int s : p.s_residues)
    if (p.t_residues.count(s))
      throw std::invalid_argument("build_alt_sets: windows overlap mod m");
  p.min_gap_ok = true;
  for (int s : p.s_residues)
    for (int delta : {-2, 0, 2})
      if (p.t_residues.count(((s + delta) % m + m) % m)) p.min_gap_ok = false;
  return p;
}

std::vector<Permutation> all_three_cycles(int n) {
  std::vector<Permutation> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        out.push_back(Permutation::from_cycles(n, {{i, j, k}}));
        out.push_back(Permutation::from_cycles(n, {{i, k, j}}));
      }
  return out;
}

ThreeCycleGapReport three_cycle_gap_check(const ResidueSetPair& pair, std::uint64_t guard) {
  const int n = pair.n, m = pair.m;
  ThreeCycleGapReport rep{true, true, 0, 0, group_order(n, Group::An)};
  std::vector<Permutation> threes = all_three_cycles(n);
  for_each_element(n, Group::An, [&](const Permutation& sigma) {
    int p = num_cycles(sigma);
    bool in_s = pair.s_residues.count(p % m) > 0;
    if (pair.t_residues.count(p % m)) rep.t_size += 1;
    if (!in_s) return;
    rep.s_size += 1;
    Permutation si = inverse(sigma);
    for (const Permutation& c : threes) {
      // tau = sigma^{-1} c satisfies sigma*tau = c, a 3-cycle.
      Permutation tau = compose(si, c);
      int pt = num_cycles(tau);
      int diff = pt - p;
      if (diff != -2 && diff != 0 && diff != 2) rep.lemma_ok = false;
      if (pair.t_residues.count(pt % m)) rep.no_three_cycle = false;
    }
  }, guard);
  return rep;
}

bool p_difference_lemma_exhaustive(int n, std::uint64_t guard) {
  std::vector<Permutation> threes = all_three_cycles(n);
  bool ok = true;
  for_each_element(n, Group::An, [&](const Permutation& sigma) {
    Permutation si = inverse(sigma);
    int p = num_cycles(sigma);
    for (const Permutation& c : threes) {
      int pt = num_cycles(compose(si, c));
      int diff = pt - p;
      if (diff != -2 && diff != 0 && diff != 2) ok = false;
    }
  }, guard);
  return ok;
}

BigInt count_split_type(int n) {
  if (n < 1) throw std::invalid_argument("count_split_type: n >= 1 required");
  BigInt total = 0;
  BigInt nfact = factorial(n);
  // Recurse over strictly decreasing odd parts; the full partition list of n
  // is far too large for the n we need here.
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      total += nfact / centralizer_order(Partition(parts));
      return;
    }
    int start = std::min(remaining, max_part);
    if (start % 2 == 0) --start;
    for (int p = start; p >= 1; p -= 2) {
      parts.push_back(p);
      self(self, remaining - p, p - 2);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return total;
}

}  // namespace npd
