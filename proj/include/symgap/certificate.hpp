#pragma once

#include <optional>
#include <string>

#include "symgap/intpoly.hpp"
#include "symgap/starbasis.hpp"

namespace symgap {

struct CoefficientWitness {
  int t_power = 0;
  int k_power = 0;
  Int value;
};

struct ShiftNegateResult {
  bool certified = false;
  long shift = 0;
  BiPoly q;  // sign-normalized p(k + shift, -t)
  std::optional<CoefficientWitness> offending;
};

// q(k,t) = +-p(k+shift, -t); CERTIFIED iff every integer coefficient is
// non-negative, which rules out negative roots for every real k >= shift
// (in particular every integer k >= shift + 1).
ShiftNegateResult shift_negate_certificate(const BiPoly& p, long shift);

// Least shift in [1, max_shift] that certifies, if any.
std::optional<ShiftNegateResult> minimal_certifying_shift(const BiPoly& p,
                                                          long max_shift = 8);

struct GammaCertificate {
  GammaPattern pattern;
  ShiftNegateResult result;
  std::uint64_t matrix_hash = 0;
  BiPoly char_poly;  // p(k,t) of the integral matrix k^2 M(Gamma)
};

// Plain-text certificate: pattern, shift, full q coefficient table, and the
// content hash of the generating matrix.
std::string certificate_text(const GammaCertificate& c);

// Cache in SYMGAP_CACHE_DIR (no caching when unset). Files are written to a
// temporary name and renamed into place.
std::optional<GammaCertificate> load_cached_certificate(GammaPattern pattern,
                                                        std::uint64_t hash);
void store_certificate(const GammaCertificate& c);

// End-to-end: build k^2 M(Gamma), characteristic polynomial (interpolation
// route; Berkowitz cross-check on the 21x21 patterns), then the shift-negate
// certificate: fixed shift 3 for ijlm, minimal shift for the others.
GammaCertificate certify_gamma(GammaPattern pattern, bool progress = false);

}  // namespace symgap
