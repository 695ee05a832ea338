#pragma once

#include <string>
#include <vector>

#include "symgap/common.hpp"
#include "symgap/modarith.hpp"

namespace symgap {

// Dense univariate polynomial over Z in the parameter k, ascending degree.
// No trailing zero leading coefficient (normalized); the zero polynomial has
// an empty coefficient vector.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long c) { *this = IntPoly(Int(c)); }
  explicit IntPoly(Int c) {
    if (c != 0) c_.push_back(std::move(c));
  }
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static IntPoly k() { return IntPoly(std::vector<Int>{0, 1}); }
  // k + c
  static IntPoly k_plus(long c) { return IntPoly(std::vector<Int>{c, 1}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int d) const { return d <= degree() ? c_[d] : Int(0); }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  bool operator==(const IntPoly& o) const = default;

  // Exact division by an integer; throws if any coefficient is not divisible.
  IntPoly div_exact(const Int& d) const;

  Int eval(const Int& x) const;
  std::uint64_t eval_mod(const Mont& m, std::uint64_t x_mont) const;

  // Taylor shift: p(k + s).
  IntPoly shift(long s) const;

  Int one_norm() const;
  std::string str() const;  // e.g. "k^2 - 3*k + 1"

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

// Polynomial in t whose coefficients live in Z[k]; monic in t for char polys.
struct BiPoly {
  std::vector<IntPoly> tc;  // tc[i] = coefficient of t^i

  int t_degree() const { return static_cast<int>(tc.size()) - 1; }
  int k_degree() const;
  bool operator==(const BiPoly& o) const = default;

  // q(k, t) = sign * p(k + s, -t), sign chosen so the leading t-coefficient
  // is positive (+1 for even t-degree, -1 for odd).
  BiPoly shift_negate(long s) const;

  // Specializes k: returns coefficients in t (ascending).
  std::vector<Int> eval_k(const Int& k0) const;

  std::string str() const;
};

// Square matrix with entries in Z[k] representing (1/k^denom_pow) * entries.
struct PolyMat {
  int n = 0;
  int denom_pow = 0;
  std::vector<IntPoly> a;

  PolyMat() = default;
  PolyMat(int order, int dpow) : n(order), denom_pow(dpow), a(order * order) {}
  IntPoly& at(int i, int j) { return a[i * n + j]; }
  const IntPoly& at(int i, int j) const { return a[i * n + j]; }
  int max_entry_degree() const;
  std::uint64_t content_hash() const;

  // Integral part evaluated at an integer k (the k^denom_pow * M matrix).
  std::vector<Int> eval_entries(const Int& k0) const;
};

// det(tI - A) for the integral matrix A = k^e * M, directly by division-free
// Berkowitz over Z[k].
BiPoly char_poly_berkowitz_zk(const PolyMat& m);

// Same polynomial by evaluation at k = 0..D (D = order * max entry degree)
// and exact interpolation; per-point char polys are computed modulo 62-bit
// primes and combined by CRT under a rigorous 1-norm bound.
BiPoly char_poly_interpolate_zk(const PolyMat& m, bool progress = false);

}  // namespace symgap
