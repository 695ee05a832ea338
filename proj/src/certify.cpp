#include "symgap/certify.hpp"

#include <sstream>

namespace symgap {

std::string PsdVerdict::str() const {
  if (psd) return "PSD";
  std::ostringstream os;
  os << "NOT_PSD (coefficient " << *witness_coefficient << ")";
  return os.str();
}

PsdVerdict certify_psd_matrix(const RatMat& action) {
  PsdVerdict v;
  v.char_poly = char_poly(action);
  int d = static_cast<int>(v.char_poly.size()) - 1;
  for (int i = 0; i <= d; ++i) {
    // coefficient of (-1)^d p(-t)
    Rat q = v.char_poly[i];
    if ((d - i) % 2 != 0) q = -q;
    if (q < 0) {
      v.psd = false;
      v.witness_coefficient = i;
      break;
    }
  }
  return v;
}

PsdVerdict certify_psd(const AlgebraElement& e, const IrrepMatrices& rep) {
  require(e.is_symmetric(),
          "certify_psd: element is not symmetric, spectrum not guaranteed real");
  return certify_psd_matrix(act(e, rep));
}

RegularPsdReport certify_psd_regular(const AlgebraElement& e) {
  require(e.is_symmetric(), "certify_psd_regular: element is not symmetric");
  RegularPsdReport rep;
  rep.carrier = e.support_set();
  int esize = rep.carrier.size();
  require(esize <= 8, "certify_psd_regular: support too large (|E| > 8)");
  if (e.is_zero()) {
    rep.psd = true;
    return rep;
  }
  AlgebraElement r = restrict_to(e, rep.carrier);
  int m = r.degree();
  rep.partitions = partitions_of(m);
  for (const Partition& mu : rep.partitions) {
    rep.per_partition.push_back(certify_psd(r, cached_irrep(mu)));
    if (!rep.per_partition.back().psd) rep.psd = false;
  }
  if (m <= 5) {
    rep.oracle_ran = true;
    PsdVerdict oracle = certify_psd_matrix(regular_rep_matrix(r));
    rep.oracle_agrees = (oracle.psd == rep.psd);
    require(rep.oracle_agrees,
            "irrep route and regular-representation oracle disagree");
  }
  return rep;
}

std::optional<Partition> RegularPsdReport::first_violation() const {
  for (std::size_t i = 0; i < per_partition.size(); ++i)
    if (!per_partition[i].psd) return partitions[i];
  return std::nullopt;
}

Rat ds_scalar(const Partition& mu) {
  int n = mu.size();
  require(n >= 2, "ds_scalar needs |mu| >= 2");
  const IrrepMatrices& rep = cached_irrep(mu);
  Rat chi_id(rep.dim());
  Rat chi_transposition = rep.generator(1).trace();
  Rat pairs = make_rat(Int(n) * Int(n - 1), Int(2));
  return pairs * (Rat(1) - chi_transposition / chi_id);
}

}  // namespace symgap
