#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symgap/seminormal.hpp"

namespace symgap {

// Verdict of an exact PSD certification. A symmetric element has real
// spectrum in every representation, so PSD is equivalent to: every
// coefficient of (-1)^dim p(-t) is non-negative, p the exact char poly.
struct PsdVerdict {
  bool psd = true;
  // index of a violating coefficient of the sign-normalized reversed poly
  std::optional<int> witness_coefficient;
  std::vector<Rat> char_poly;  // ascending, monic

  std::string str() const;
};

PsdVerdict certify_psd_matrix(const RatMat& action);

// Requires e symmetric (rejected otherwise: spectrum not guaranteed real).
PsdVerdict certify_psd(const AlgebraElement& e, const IrrepMatrices& rep);

struct RegularPsdReport {
  bool psd = true;
  VertexSet carrier;                       // support E; certified in R[S_E]
  std::vector<Partition> partitions;       // mu |- |E|
  std::vector<PsdVerdict> per_partition;   // aligned with partitions
  bool oracle_ran = false;                 // |E| <= 5: |E|!x|E|! left-mult matrix
  bool oracle_agrees = true;

  std::optional<Partition> first_violation() const;
};

// PSD on the full regular representation, via restriction to R[S_E]
// (spectra restrict to the support carrier) and an irrep sweep; for |E| <= 5
// also cross-checked against
// the explicit left-multiplication matrix. Throws if |E| > 8.
RegularPsdReport certify_psd_regular(const AlgebraElement& e);

// binom(n,2) * (1 - chi_mu((1 2)) / chi_mu(id)): the scalar by which
// sum_{i<j} alpha_{{i,j}} acts on V_mu.
Rat ds_scalar(const Partition& mu);

}  // namespace symgap
