#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symgap {

using Int = mpz_class;
using Rat = mpq_class;

// Contract checks stay active in release builds; all spec-level
// preconditions go through here rather than assert().
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Renders "p/q", or just "p" for integers.
inline std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "p" or "p/q" with optional sign.
Rat parse_rat(const std::string& text);

inline double rat_double(const Rat& r) { return r.get_d(); }

// FNV-1a, used for content hashes of cached certificates and for
// permutation hashing. Not cryptographic.
inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t seed = 1469598103934665603ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t fnv1a(const std::string& s,
                           std::uint64_t seed = 1469598103934665603ull) {
  return fnv1a(s.data(), s.size(), seed);
}

Int factorial(int n);

}  // namespace symgap
