#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace npd {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Raised when an exhaustive computation would exceed its configured size
// guard.  Callers that drive reporting treat this as "skipped", not "failed".
class SizeGuardExceeded : public std::runtime_error {
 public:
  explicit SizeGuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a randomized search with a deterministic fallback still fails;
// reaching this indicates a genuine counterexample or a broken precondition.
class SearchExhausted : public std::runtime_error {
 public:
  explicit SearchExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Default ceiling on the number of group elements any exhaustive scan over a
// symmetric/alternating group may touch.
inline constexpr std::uint64_t kGroupScanGuard = 500'000'000ULL;
// Default ceiling on |SL_n(F_q)| for matrix-group enumerations.
inline constexpr std::uint64_t kMatrixScanGuard = 25'000'000ULL;

// Stable 64-bit FNV-1a hash; used to derive per-check RNG seeds from a root
// seed so output is reproducible across runs and platforms.
inline std::uint64_t fnv1a(const std::string& s, std::uint64_t seed = 1469598103934665603ULL) {
  std::uint64_t h = seed;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

}  // namespace npd
