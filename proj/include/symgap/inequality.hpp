#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symgap/algebra.hpp"
#include "symgap/certify.hpp"
#include "symgap/hypergraph.hpp"
#include "symgap/rootisolate.hpp"

namespace symgap {

// Linear combination of alpha_A elements. Keeps the structure so actions on
// irreps can be assembled from the alpha matrices instead of flattening sums
// of J's into full group-algebra supports.
struct AlphaCombo {
  int degree = 1;
  std::vector<std::pair<Rat, VertexSet>> terms;

  void add(const Rat& c, const VertexSet& a);
  AlgebraElement flatten() const;
  RatMat act(const IrrepMatrices& rep) const;
  RatMat standard_matrix() const;
  VertexSet support() const;  // union of sets with nonzero coefficient, sizes >= 2
};

enum class SquidShape {
  General,
  Disjoint,           // pairwise disjoint A_i, no A_0
  LargeIntersection,  // A_0 with A_0 subset A_i, |A_i \ A_0| = 1
  CosizeOne,          // A_0 with A_i subset A_0, |A_0 \ A_i| = 1
  ClassicOctopus,     // all singletons
};

std::string shape_name(SquidShape s);

// Instance of the generalized inequality: sets inside {2,...,n} with
// non-negative weights; shape-specific preconditions checked on demand.
struct SquidInstance {
  int n = 2;
  SquidShape shape = SquidShape::General;
  std::optional<VertexSet> a0;  // the distinguished set (weight c0), if any
  std::optional<Rat> c0;
  std::vector<VertexSet> sets;  // A_1..A_t
  std::vector<Rat> weights;     // c_1..c_t

  void validate() const;
  // all sets with their weights, A_0 first when present
  std::vector<std::pair<Rat, VertexSet>> weighted_sets() const;
  Rat capital_c() const;  // C = sum c_i |A_i|
};

// (sum c_i)(sum c_i alpha_{1,i}) - sum_{i<j} c_i c_j alpha_{i,j};
// weights[i] is c_{i+2}.
AlphaCombo octopus_delta(int n, const std::vector<Rat>& weights);

// LHS - RHS of the generalized inequality. For the theorem shapes the
// builder also asserts exact algebraic agreement with the theorem-specific
// right-hand side.
AlphaCombo squid_delta(const SquidInstance& inst);

struct PartitionVerdict {
  Partition mu;
  PsdVerdict verdict;
};

struct TheoremReport {
  bool undecided = false;  // support too large for the sweep
  int support_size = 0;
  bool psd = true;
  std::vector<PartitionVerdict> per_partition;  // dimension-ascending order
  std::optional<Partition> witness;             // first violating partition
  bool rank1_ok = true;
};

// Restricts the difference element to its support and certifies PSD on every
// irrep (dimension ascending). Shape must not be General. |E| <= 8; larger
// supports come back UNDECIDED.
TheoremReport verify_theorem(const SquidInstance& inst);

// PSD sweep without the shape restriction (used for counterexamples and the
// general CLI path).
TheoremReport psd_sweep(const AlphaCombo& delta);

struct Rank1Report {
  std::vector<Rat> x;  // x_2..x_n
  int rank = 0;
  Rat trace;
  bool matches_octopus = true;  // standard matrices agree exactly
};

// x_i = sum_{j : i in A_j} c_j; the squid difference restricted
// to the standard representation equals the octopus difference with these
// weights (rank <= 1, trace (sum x)^2 - sum x^2).
Rank1Report standard_rank1_check(const SquidInstance& inst);

struct CounterexampleReport {
  int which = 1;
  bool confirmed = false;
  std::string detail;
  // example 1: exact spectrum data on V_{(2,2)}
  std::vector<Rat> char_poly_22;
  // example 2: negative eigenvalue interval on V_{(4,2)}
  double min_eigenvalue = 0;
};

CounterexampleReport counterexample_report(int which);

struct AuditReport {
  bool shape_ok = true;
  bool difference_psd = true;   // S_G - S_{H u {pivot}} >= 0
  int standard_rank = 0;        // rank <= 1 on D
  bool rank1_ok = true;
  bool interlace_ok = true;     // lambda_min(S_H, V_(n-2,1)) >= lambda_min(S_G, V_(n-1,1)) - 1e-9
  double lambda_min_h = 0, lambda_min_g = 0;
  bool trivially_passed = false;  // no positive-weight edge at the pivot
};

// Audits one induction step of the pivot-elimination argument on a B-shaped
// hypergraph: PSD of the difference, rank-1 on the standard representation,
// and the numeric eigenvalue interlacing.
AuditReport audit_induction_step(const WeightedHypergraph& g, int pivot);

}  // namespace symgap
