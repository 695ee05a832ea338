#pragma once

#include <cstdint>
#include <vector>

#include "symgap/common.hpp"

namespace symgap {

// Montgomery arithmetic modulo an odd prime below 2^62. All values are kept
// in Montgomery form between to()/from().
class Mont {
 public:
  explicit Mont(std::uint64_t prime);

  std::uint64_t prime() const { return p_; }
  std::uint64_t one() const { return one_; }

  std::uint64_t to(std::uint64_t x) const { return mul(x % p_, r2_); }
  std::uint64_t from(std::uint64_t x) const { return redc(x); }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a ? p_ - a : 0; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return redc(static_cast<unsigned __int128>(a) * b);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }

  // Reduction of an arbitrary-precision integer into Montgomery form.
  std::uint64_t to_mont(const Int& x) const;

 private:
  std::uint64_t redc(unsigned __int128 t) const {
    std::uint64_t m = static_cast<std::uint64_t>(t) * ninv_;
    unsigned __int128 u = (t + static_cast<unsigned __int128>(m) * p_) >> 64;
    std::uint64_t r = static_cast<std::uint64_t>(u);
    return r >= p_ ? r - p_ : r;
  }

  std::uint64_t p_, ninv_, r2_, one_;
};

// Deterministic list of distinct primes just below 2^62.
std::vector<std::uint64_t> modular_primes(int count);

// Characteristic polynomial of an n x n matrix over Z_p (entries in
// Montgomery form), by Hessenberg reduction. Returns monic coefficients in
// ascending degree, Montgomery form.
std::vector<std::uint64_t> char_poly_mod(const Mont& m, int n,
                                         std::vector<std::uint64_t> a);

// CRT reconstruction with symmetric lift: residues r[i] mod primes[i]
// combine to the unique integer of absolute value < prod/2.
Int crt_symmetric(const std::vector<std::uint64_t>& primes,
                  const std::vector<std::uint64_t>& residues);

}  // namespace symgap
