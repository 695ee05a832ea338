#pragma once

#include <optional>

#include "symgap/algebra.hpp"
#include "symgap/hypergraph.hpp"
#include "symgap/partition.hpp"
#include "symgap/ratmat.hpp"
#include "symgap/rootisolate.hpp"

namespace symgap {

// Markov-normalized interchange-process element (1/W) sum_A w_A J_A / |A|!.
// Symmetric; coefficients sum to 1. Requires positive total weight.
AlgebraElement ip_operator(const WeightedHypergraph& g);

// n x n random-walk transition matrix (equals the restriction of the IP
// operator to the standard representation, exactly).
RatMat rw_matrix(const WeightedHypergraph& g);

struct PartitionLambda {
  Partition mu;
  RealRootedPoly::Interval lambda1;  // largest eigenvalue of act(U, V_mu)
  Rat sg_min_exact_lo, sg_min_exact_hi;  // smallest eigenvalue of the
                                         // Laplacian-style W(1 - U) element
};

struct Lambda2Result {
  RealRootedPoly::Interval lambda2;        // max over nontrivial mu
  std::vector<PartitionLambda> table;      // one row per mu != (n)
  std::optional<double> oracle_gap;        // |irrep - oracle| when the
                                           // brute-force route also ran
};

// lambda_2(U, R) by the irrep route (n <= 8); n <= 5 also runs the exact
// n! x n! regular-representation oracle which must agree to 1e-9.
Lambda2Result lambda2_ip(const WeightedHypergraph& g);

// second-largest eigenvalue (with multiplicity) of the RW matrix.
RealRootedPoly::Interval lambda2_rw(const WeightedHypergraph& g);

struct SpectralReport {
  double lambda2_rw = 0, lambda2_ip = 0;
  double gap = 0;  // |lambda2_rw - lambda2_ip|
  bool equal = false;
  bool standard_dominates = false;  // lambda1(U,V_mu) <= lambda1(U,V_{(n-1,1)})
  std::vector<PartitionLambda> table;
  std::optional<double> oracle_gap;
};

// Caputo-conjecture equality check at the given tolerance (default 1e-8).
SpectralReport check_caputo(const WeightedHypergraph& g,
                            const Rat& tolerance = make_rat(1, 100000000),
                            bool force_oracle = false);

// One pivot-elimination step: hypergraph on [n] minus the pivot with the
// three-case reweighting. Requires the B-shape, pivot outside B, and C > 0.
WeightedHypergraph pivot_reduce(const WeightedHypergraph& g, int pivot);

// Removes one leaf vertex: an edge E with a vertex v in no other
// positive-weight edge and |E| >= 2 becomes E - v with weight scaled by
// |E|/(|E|-1). Throws if no reducible leaf exists.
WeightedHypergraph leaf_reduce(const WeightedHypergraph& g);

// Double-precision symmetric eigensolver on the n!-state IP transition
// matrix; cross-check only, never an arbiter. n <= 6.
double lambda2_ip_dense_oracle(const WeightedHypergraph& g);

// S' = W (id - U) = sum_A (w_A/|A|) alpha_A, the Laplacian-style element
// whose spectrum is the affine image of the Markov operator's.
AlgebraElement laplacian_style_element(const WeightedHypergraph& g);

}  // namespace symgap
