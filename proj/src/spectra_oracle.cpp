#include <Eigen/Dense>

#include "symgap/seminormal.hpp"
#include "symgap/spectra.hpp"

namespace symgap {

// Dense double-precision cross-check of lambda_2 on the full n!-state chain.
// Symmetric eigensolvers are backward stable, so the error here is far below
// the 1e-9 agreement tolerance; the exact irrep route stays authoritative.
double lambda2_ip_dense_oracle(const WeightedHypergraph& g) {
  require(g.n() <= 6, "dense oracle limited to n <= 6 (720 states)");
  AlgebraElement u = ip_operator(g);
  int n = g.n();
  std::vector<Permutation> group = enumerate_sym(VertexSet::range(1, n), n);
  std::unordered_map<Permutation, int, PermHash> index;
  for (std::size_t i = 0; i < group.size(); ++i)
    index[group[i]] = static_cast<int>(i);
  const int size = static_cast<int>(group.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
  for (const auto& [p, c] : u.terms()) {
    double cd = rat_double(c);
    for (int j = 0; j < size; ++j)
      m(index.at(compose(p, group[j])), j) += cd;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m,
                                                        Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(size - 2);
}

}  // namespace symgap
