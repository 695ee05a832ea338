#include "symgap/modarith.hpp"

namespace symgap {

Mont::Mont(std::uint64_t prime) : p_(prime) {
  // ninv = -p^{-1} mod 2^64 by Newton iteration.
  std::uint64_t inv = p_;
  for (int i = 0; i < 6; ++i) inv *= 2 - p_ * inv;
  ninv_ = ~inv + 1;
  // r2 = 2^128 mod p
  unsigned __int128 r = 1;
  r = (r << 64) % p_;
  r2_ = static_cast<std::uint64_t>((r * r) % p_);
  one_ = to(1);
}

std::uint64_t Mont::pow(std::uint64_t base, std::uint64_t e) const {
  std::uint64_t acc = one_;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint64_t Mont::to_mont(const Int& x) const {
  Int r = x % Int(static_cast<unsigned long>(p_));
  if (r < 0) r += Int(static_cast<unsigned long>(p_));
  return to(r.get_ui());
}

std::vector<std::uint64_t> modular_primes(int count) {
  static std::vector<std::uint64_t> cache;
  static std::uint64_t next_candidate = (1ull << 62) - 1;
  while (static_cast<int>(cache.size()) < count) {
    Int c(static_cast<unsigned long>(next_candidate));
    while (mpz_probab_prime_p(c.get_mpz_t(), 40) == 0) c -= 2;
    cache.push_back(c.get_ui());
    next_candidate = c.get_ui() - 2;
  }
  return {cache.begin(), cache.begin() + count};
}

std::vector<std::uint64_t> char_poly_mod(const Mont& m, int n,
                                         std::vector<std::uint64_t> a) {
  auto at = [&](int i, int j) -> std::uint64_t& { return a[i * n + j]; };
  // Similarity reduction to upper Hessenberg form.
  for (int j = 0; j + 2 < n; ++j) {
    int pivot = -1;
    for (int i = j + 1; i < n; ++i)
      if (at(i, j) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != j + 1) {
      for (int k = 0; k < n; ++k) std::swap(at(pivot, k), at(j + 1, k));
      for (int k = 0; k < n; ++k) std::swap(at(k, pivot), at(k, j + 1));
    }
    std::uint64_t inv = m.inv(at(j + 1, j));
    for (int i = j + 2; i < n; ++i) {
      if (at(i, j) == 0) continue;
      std::uint64_t f = m.mul(at(i, j), inv);
      for (int k = j; k < n; ++k) at(i, k) = m.sub(at(i, k), m.mul(f, at(j + 1, k)));
      for (int k = 0; k < n; ++k) at(k, j + 1) = m.add(at(k, j + 1), m.mul(f, at(k, i)));
    }
  }
  // p_m(t) = (t - h_mm) p_{m-1} - sum_i h_im (prod subdiag) p_{i-1}
  std::vector<std::vector<std::uint64_t>> p(n + 1);
  p[0] = {m.one()};
  for (int mm = 1; mm <= n; ++mm) {
    std::vector<std::uint64_t> cur(mm + 1, 0);
    const auto& prev = p[mm - 1];
    std::uint64_t hmm = at(mm - 1, mm - 1);
    for (int d = 0; d < mm; ++d) {
      cur[d + 1] = m.add(cur[d + 1], prev[d]);
      cur[d] = m.sub(cur[d], m.mul(hmm, prev[d]));
    }
    std::uint64_t prod = m.one();
    for (int i = mm - 1; i >= 1; --i) {
      prod = m.mul(prod, at(i, i - 1));
      std::uint64_t coef = m.mul(at(i - 1, mm - 1), prod);
      if (coef == 0) continue;
      const auto& pi = p[i - 1];
      for (int d = 0; d < static_cast<int>(pi.size()); ++d)
        cur[d] = m.sub(cur[d], m.mul(coef, pi[d]));
    }
    p[mm] = std::move(cur);
  }
  return p[n];
}

Int crt_symmetric(const std::vector<std::uint64_t>& primes,
                  const std::vector<std::uint64_t>& residues) {
  Int modulus = 1, acc = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    Int p(static_cast<unsigned long>(primes[i]));
    Int r(static_cast<unsigned long>(residues[i]));
    if (i == 0) {
      acc = r;
      modulus = p;
      continue;
    }
    // acc' = acc + modulus * ((r - acc) * modulus^{-1} mod p)
    Int diff = (r - acc) % p;
    if (diff < 0) diff += p;
    Int minv;
    mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t());
    Int k = (diff * minv) % p;
    acc += modulus * k;
    modulus *= p;
  }
  if (acc * 2 > modulus) acc -= modulus;
  return acc;
}

std::vector<Int> char_poly_int(int n, const std::vector<Int>& entries) {
  require(static_cast<int>(entries.size()) == n * n, "char_poly_int: bad size");
  // ||p||_1 <= prod_i (1 + sum_j |a_ij|)
  double bits = 0;
  for (int i = 0; i < n; ++i) {
    Int row_sum = 1;
    for (int j = 0; j < n; ++j) row_sum += abs(entries[i * n + j]);
    bits += mpz_sizeinbase(row_sum.get_mpz_t(), 2);
  }
  int nprimes = static_cast<int>(bits / 61.9) + 2;
  std::vector<std::uint64_t> primes = modular_primes(nprimes);
  std::vector<std::vector<std::uint64_t>> per_prime(nprimes);
  for (int pi = 0; pi < nprimes; ++pi) {
    Mont m(primes[pi]);
    std::vector<std::uint64_t> a(n * n);
    for (int i = 0; i < n * n; ++i) a[i] = m.to_mont(entries[i]);
    auto cp = char_poly_mod(m, n, std::move(a));
    for (auto& x : cp) x = m.from(x);
    per_prime[pi] = std::move(cp);
  }
  std::vector<Int> out(n + 1);
  std::vector<std::uint64_t> res(nprimes);
  for (int d = 0; d <= n; ++d) {
    for (int pi = 0; pi < nprimes; ++pi) res[pi] = per_prime[pi][d];
    out[d] = crt_symmetric(primes, res);
  }
  return out;
}

}  // namespace symgap
