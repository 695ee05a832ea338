#include "symgap/rootisolate.hpp"

namespace symgap {

RealRootedPoly::RealRootedPoly(std::vector<Rat> coeffs) {
  // clear denominators; roots are unchanged
  Int lcm = 1;
  for (const Rat& c : coeffs) {
    Int den = c.get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Int> ic(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Rat scaled = coeffs[i] * Rat(lcm);
    ic[i] = scaled.get_num();
  }
  *this = RealRootedPoly(ic);
}

RealRootedPoly::RealRootedPoly(const std::vector<Int>& coeffs) {
  std::vector<Int> p = coeffs;
  while (!p.empty() && p.back() == 0) p.pop_back();
  require(!p.empty(), "zero polynomial has no defined roots");
  degree_ = static_cast<int>(p.size()) - 1;
  der_.push_back(p);
  while (der_.back().size() > 1) {
    const auto& prev = der_.back();
    std::vector<Int> d(prev.size() - 1);
    for (std::size_t i = 1; i < prev.size(); ++i) d[i - 1] = prev[i] * static_cast<long>(i);
    der_.push_back(std::move(d));
  }
}

namespace {
// sign of poly(num/den) for den > 0, via poly(num/den) * den^deg
int sign_rational(const std::vector<Int>& poly, const Int& num, const Int& den) {
  Int acc = 0;
  Int dpow = 1;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    if (it == poly.rbegin()) {
      acc = *it;
    } else {
      acc = acc * num + (*it) * dpow;
    }
    dpow *= den;
  }
  return sgn(acc);
}
}  // namespace

int RealRootedPoly::count_greater(const Rat& x) const {
  // Budan-Fourier: exact for real-rooted polynomials; V(+inf) = 0.
  Int num = x.get_num(), den = x.get_den();
  int var = 0, last = 0;
  for (const auto& p : der_) {
    int s = sign_rational(p, num, den);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

int RealRootedPoly::count_smaller(const Rat& x) const {
  Int num = x.get_num(), den = x.get_den();
  int mult = 0;
  for (const auto& p : der_) {
    if (sign_rational(p, num, den) != 0) break;
    ++mult;
  }
  return degree_ - count_greater(x) - mult;
}

Rat RealRootedPoly::cauchy_bound() const {
  const std::vector<Int>& p = der_[0];
  Int lead = abs(p.back());
  Int maxc = 0;
  for (const Int& c : p) {
    Int a = abs(c);
    if (a > maxc) maxc = a;
  }
  Int bound;
  mpz_cdiv_q(bound.get_mpz_t(), maxc.get_mpz_t(), lead.get_mpz_t());
  return Rat(bound + 1);
}

RealRootedPoly::Interval RealRootedPoly::kth_largest(int j, const Rat& eps,
                                                     const Rat& bound_hint) const {
  require(j >= 1 && j <= degree_, "kth_largest: index out of range");
  Rat lo, hi;
  if (bound_hint > 0 && count_greater(bound_hint) == 0 &&
      count_greater(-bound_hint) == degree_) {
    lo = -bound_hint;
    hi = bound_hint;
  } else {
    lo = -cauchy_bound() - 1;
    hi = cauchy_bound() + 1;
  }
  while (hi - lo > eps) {
    Rat mid = (lo + hi) / 2;
    if (count_greater(mid) >= j)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

RealRootedPoly::Interval RealRootedPoly::smallest(const Rat& eps,
                                                  const Rat& bound_hint) const {
  require(degree_ >= 1, "smallest: constant polynomial");
  Rat lo, hi;
  if (bound_hint > 0 && count_greater(bound_hint) == 0 &&
      count_greater(-bound_hint) == degree_) {
    lo = -bound_hint;
    hi = bound_hint;
  } else {
    lo = -cauchy_bound() - 1;
    hi = cauchy_bound() + 1;
  }
  while (hi - lo > eps) {
    Rat mid = (lo + hi) / 2;
    if (count_smaller(mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi};
}

bool RealRootedPoly::all_roots_nonnegative() const {
  const std::vector<Int>& p = der_[0];
  int d = degree_;
  int lead_sign = sgn(p[d]);
  for (int i = 0; i <= d; ++i) {
    // coefficient of (-1)^d p(-t), normalized to positive leading coefficient
    Int q = p[i] * lead_sign;
    if ((d - i) % 2 != 0) q = -q;
    if (q < 0) return false;
  }
  return true;
}

}  // namespace symgap
