#pragma once

#include <vector>

#include "symgap/common.hpp"

namespace symgap {

// Exact root location for REAL-ROOTED polynomials (char polys of symmetric
// group-algebra elements are always real-rooted). Uses the Budan-Fourier
// derivative-sequence count, which is exact for real-rooted inputs, with
// dyadic bisection; no floating point anywhere.
class RealRootedPoly {
 public:
  // Coefficients ascending; the polynomial must have all roots real.
  explicit RealRootedPoly(std::vector<Rat> coeffs);
  explicit RealRootedPoly(const std::vector<Int>& coeffs);

  int degree() const { return degree_; }

  // Number of roots strictly greater than x, counted with multiplicity.
  int count_greater(const Rat& x) const;
  // Number of roots strictly smaller than x.
  int count_smaller(const Rat& x) const;

  struct Interval {
    Rat lo, hi;
    double mid() const { return rat_double((lo + hi) / 2); }
    double width() const { return rat_double(hi - lo); }
  };

  // j-th largest root (1-indexed, with multiplicity), to |hi-lo| <= eps.
  // A caller that knows all roots lie in [-bound_hint, bound_hint] can pass
  // it to start the bisection tight; the hint is verified by exact root
  // counts and ignored when wrong.
  Interval kth_largest(int j, const Rat& eps,
                       const Rat& bound_hint = Rat(0)) const;
  Interval largest(const Rat& eps) const { return kth_largest(1, eps); }
  Interval smallest(const Rat& eps, const Rat& bound_hint = Rat(0)) const;

  // All roots real and >= 0? (exact; equivalent to the PSD coefficient rule)
  bool all_roots_nonnegative() const;

  Rat cauchy_bound() const;  // every root has |root| <= bound

 private:
  int degree_;
  std::vector<std::vector<Int>> der_;  // p, p', p'', ... over Z
};

// Default isolation width 2^-45 (~2.8e-14), well inside the 1e-12 contract.
inline Rat default_root_eps() { return make_rat(Int(1), Int(1) << 45); }

}  // namespace symgap
