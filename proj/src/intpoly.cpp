#include "symgap/intpoly.hpp"

#include <iostream>
#include <sstream>

#include "symgap/ratmat.hpp"

namespace symgap {

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> r = c_;
  for (Int& x : r) x = -x;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::div_exact(const Int& d) const {
  require(d != 0, "division by zero");
  std::vector<Int> r = c_;
  for (Int& x : r) {
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    require(rem == 0, "div_exact: coefficient not divisible");
    x = q;
  }
  return IntPoly(std::move(r));
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::uint64_t IntPoly::eval_mod(const Mont& m, std::uint64_t x_mont) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = m.add(m.mul(acc, x_mont), m.to_mont(*it));
  return acc;
}

IntPoly IntPoly::shift(long s) const {
  // Horner in (k + s): p(k+s) built from the top coefficient down.
  std::vector<Int> acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    // acc = acc * (k + s) + coeff
    std::vector<Int> next(acc.size() + 1, Int(0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] += acc[i] * s;
    }
    if (next.empty()) next.push_back(Int(0));
    next[0] += *it;
    acc = std::move(next);
  }
  return IntPoly(std::move(acc));
}

Int IntPoly::one_norm() const {
  Int s = 0;
  for (const Int& x : c_) s += abs(x);
  return s;
}

std::string IntPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Int& co = c_[d];
    if (co == 0) continue;
    if (!first) os << (co > 0 ? " + " : " - ");
    else if (co < 0) os << "-";
    Int a = abs(co);
    if (a != 1 || d == 0) os << a.get_str();
    if (d > 0) {
      if (a != 1) os << "*";
      os << "k";
      if (d > 1) os << "^" << d;
    }
    first = false;
  }
  return os.str();
}

int BiPoly::k_degree() const {
  int d = -1;
  for (const IntPoly& p : tc) d = std::max(d, p.degree());
  return d;
}

BiPoly BiPoly::shift_negate(long s) const {
  BiPoly q;
  q.tc.resize(tc.size());
  int n = t_degree();
  bool negate_all = (n % 2) != 0;
  for (int i = 0; i <= n; ++i) {
    IntPoly shifted = tc[i].shift(s);
    bool neg = ((i % 2) != 0) ^ negate_all ? true : false;
    q.tc[i] = neg ? -shifted : shifted;
  }
  return q;
}

std::vector<Int> BiPoly::eval_k(const Int& k0) const {
  std::vector<Int> out(tc.size());
  for (std::size_t i = 0; i < tc.size(); ++i) out[i] = tc[i].eval(k0);
  return out;
}

std::string BiPoly::str() const {
  std::ostringstream os;
  for (int i = t_degree(); i >= 0; --i) {
    if (tc[i].is_zero()) continue;
    os << "(" << tc[i].str() << ")*t^" << i;
    if (i) os << " + ";
  }
  return os.str();
}

int PolyMat::max_entry_degree() const {
  int d = 0;
  for (const IntPoly& p : a) d = std::max(d, p.degree());
  return d;
}

std::uint64_t PolyMat::content_hash() const {
  std::uint64_t h = fnv1a(&n, sizeof n);
  h = fnv1a(&denom_pow, sizeof denom_pow, h);
  for (const IntPoly& p : a) {
    for (const Int& c : p.coeffs()) h = fnv1a(std::string(c.get_str()), h);
    h = fnv1a(std::string(";"), h);
  }
  return h;
}

std::vector<Int> PolyMat::eval_entries(const Int& k0) const {
  std::vector<Int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i].eval(k0);
  return out;
}

BiPoly char_poly_berkowitz_zk(const PolyMat& m) {
  std::vector<IntPoly> asc = berkowitz_charpoly<IntPoly>(
      m.n, IntPoly(1), [&](int i, int j) { return m.at(i, j); });
  BiPoly p;
  p.tc = std::move(asc);
  return p;
}

BiPoly char_poly_interpolate_zk(const PolyMat& mat, bool progress) {
  int n = mat.n;
  int dmax = mat.max_entry_degree();
  int points = n * dmax + 1;  // deg_k(p) <= n * max entry degree
  // coefficient bound: prod_i (1 + sum_j ||a_ij||_1)
  double bits = 0;
  for (int i = 0; i < n; ++i) {
    Int row = 1;
    for (int j = 0; j < n; ++j) row += mat.at(i, j).one_norm();
    bits += mpz_sizeinbase(row.get_mpz_t(), 2);
  }
  int nprimes = static_cast<int>(bits / 61.9) + 2;
  std::vector<std::uint64_t> primes = modular_primes(nprimes + 1);
  std::uint64_t check_prime = primes[nprimes];
  primes.pop_back();

  // per_prime[pi][d] = coefficients (in k-evaluations, later interpolated)
  // of t^d as a dense vector over points.
  std::vector<std::vector<std::vector<std::uint64_t>>> interp(nprimes);
  for (int pi = 0; pi < nprimes; ++pi) {
    Mont mo(primes[pi]);
    // cache matrix entry coefficients reduced mod p once
    std::vector<std::vector<std::uint64_t>> red(n * n);
    for (int e = 0; e < n * n; ++e) {
      const auto& c = mat.a[e].coeffs();
      red[e].resize(c.size());
      for (std::size_t d = 0; d < c.size(); ++d) red[e][d] = mo.to_mont(c[d]);
    }
    std::vector<std::vector<std::uint64_t>> values(
        n + 1, std::vector<std::uint64_t>(points));
    std::vector<std::uint64_t> entries(n * n);
    for (int x = 0; x < points; ++x) {
      std::uint64_t xm = mo.to(static_cast<std::uint64_t>(x));
      for (int e = 0; e < n * n; ++e) {
        std::uint64_t acc = 0;
        const auto& c = red[e];
        for (auto it = c.rbegin(); it != c.rend(); ++it)
          acc = mo.add(mo.mul(acc, xm), *it);
        entries[e] = acc;
      }
      auto cp = char_poly_mod(mo, n, entries);
      for (int d = 0; d <= n; ++d) values[d][x] = cp[d];
      if (progress && x % 200 == 0) {
        std::cerr << "  [charpoly] prime " << (pi + 1) << "/" << nprimes
                  << " point " << x << "/" << points << "\r" << std::flush;
      }
    }
    // Newton divided differences on x = 0..points-1, then conversion to
    // monomial coefficients. Differences x_i - x_{i-j} = j.
    std::vector<std::uint64_t> invs(points, mo.one());
    for (int j = 2; j < points; ++j)
      invs[j] = mo.inv(mo.to(static_cast<std::uint64_t>(j)));
    interp[pi].resize(n + 1);
    for (int d = 0; d <= n; ++d) {
      std::vector<std::uint64_t>& y = values[d];
      for (int j = 1; j < points; ++j)
        for (int i = points - 1; i >= j; --i)
          y[i] = mo.mul(mo.sub(y[i], y[i - 1]), invs[j]);
      // monomial form: poly = poly*(x - x_i) + a_i, i descending
      int top = points - 1;
      while (top > 0 && y[top] == 0) --top;
      std::vector<std::uint64_t> cur(top + 1, 0);
      for (int i = top; i >= 0; --i) {
        std::uint64_t xi = mo.to(static_cast<std::uint64_t>(i));
        for (int dd = top - i; dd >= 1; --dd)
          cur[dd] = mo.sub(cur[dd - 1], mo.mul(xi, cur[dd]));
        cur[0] = mo.sub(y[i], mo.mul(xi, cur[0]));
      }
      for (auto& x : cur) x = mo.from(x);  // leave Montgomery form for CRT
      interp[pi][d] = std::move(cur);
    }
  }
  if (progress) std::cerr << "\n";

  BiPoly p;
  p.tc.resize(n + 1);
  std::vector<std::uint64_t> res(nprimes);
  for (int d = 0; d <= n; ++d) {
    std::size_t klen = 0;
    for (int pi = 0; pi < nprimes; ++pi)
      klen = std::max(klen, interp[pi][d].size());
    std::vector<Int> coeffs(klen, Int(0));
    for (std::size_t kk = 0; kk < klen; ++kk) {
      for (int pi = 0; pi < nprimes; ++pi)
        res[pi] = kk < interp[pi][d].size() ? interp[pi][d][kk] : 0;
      coeffs[kk] = crt_symmetric(primes, res);
    }
    p.tc[d] = IntPoly(std::move(coeffs));
  }

  // Confirmation at an independent prime and random evaluation point.
  {
    Mont mo(check_prime);
    std::uint64_t k0 = 0x9e3779b97f4a7c15ull % mo.prime();
    std::uint64_t k0m = mo.to(k0);
    std::vector<std::uint64_t> entries(n * n);
    for (int e = 0; e < n * n; ++e) entries[e] = mat.a[e].eval_mod(mo, k0m);
    auto cp = char_poly_mod(mo, n, entries);
    for (int d = 0; d <= n; ++d) {
      std::uint64_t expect = p.tc[d].eval_mod(mo, k0m);
      require(expect == cp[d], "interpolated char poly failed verification");
    }
  }
  return p;
}

}  // namespace symgap
