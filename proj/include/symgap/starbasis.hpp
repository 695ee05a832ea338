#pragma once

#include <map>
#include <string>
#include <vector>

#include "symgap/algebra.hpp"
#include "symgap/certify.hpp"
#include "symgap/intpoly.hpp"
#include "symgap/ratmat.hpp"

namespace symgap {

// Basis vector of W_{(k+1,1^r)} ∩ ker alpha_{A_0}, encoded as a tuple of
// symbol codes: 0 is the star (a slot summed over A_0 = {2..k}), 1 is the
// vertex 1, and 2..s+1 stand for the extra points k+1..k+s. Non-star codes
// are distinct within a tuple (0-for-star digit encoding).
struct StarTuple {
  std::vector<int> sym;
  bool operator==(const StarTuple&) const = default;
  auto operator<=>(const StarTuple&) const = default;
  std::string str() const;
};

// Supported shapes: (arity 3, s = 4) with 136 elements and (arity 2, s = 3)
// with 21; lexicographic order on the code tuples.
std::vector<StarTuple> star_basis(int arity, int extra_points);

// Subset S of nonzero symbol codes describing B = A_0 u S.
using SetSymbols = std::vector<int>;

// Matrix of alpha_B on the star basis, scaled by k: entries of k*M(alpha_B)
// lie in Z[k] (denom_pow = 1 in the PolyMat convention).
PolyMat alpha_star_action(const SetSymbols& s, const std::vector<StarTuple>& basis,
                          int extra_points);

enum class GammaPattern { ijlm, iijl, zero_ijl };

GammaPattern parse_pattern(const std::string& name);
std::string pattern_name(GammaPattern p);

// k^2 M(Gamma_pattern) over Z[k] (denom_pow = 2): 136x136 for ijlm,
// 21x21 for iijl and 0ijl.
PolyMat build_gamma(GammaPattern pattern);

// Concrete star module at a fixed integer k >= arity + 1: tuples of distinct
// points of [k+s], star vectors expanded explicitly, and alpha_B computed by
// summing the Sym(B) action (through the coset chain). Used as the oracle
// that the symbolic formulas specialize correctly.
class ConcreteStarModule {
 public:
  ConcreteStarModule(int k, int arity, int extra_points);

  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<StarTuple>& basis() const { return basis_; }

  // vertex named by a symbol code (code >= 1)
  int vertex_of_symbol(int code) const { return code == 1 ? 1 : k_ + code - 1; }
  VertexSet concrete_set(const SetSymbols& s) const;

  // exact matrix of alpha_B on the star basis
  RatMat alpha_matrix(const SetSymbols& s) const;
  // same via literal enumeration of Sym(B); slow, spot checks only
  RatMat alpha_matrix_bruteforce(const SetSymbols& s) const;

  // exact matrix of Gamma_pattern on the star basis (via the U_ef matrices)
  RatMat gamma_matrix(GammaPattern pattern) const;

 private:
  std::map<int, Int> star_vector(const StarTuple& t) const;  // tuple idx -> 1
  std::map<int, Int> apply_j(const VertexSet& b, const std::map<int, Int>& vec) const;
  RatMat decompose(const std::vector<std::map<int, Rat>>& columns) const;

  int k_, arity_, s_, n_;
  std::vector<StarTuple> basis_;
  std::vector<std::vector<int>> tuples_;       // all ordered distinct tuples
  std::map<std::vector<int>, int> tuple_index_;
  std::map<std::vector<int>, int> pattern_index_;  // symbol pattern -> basis idx
};

struct SmallKReport {
  GammaPattern pattern;
  int k = 0;
  bool psd = true;
  std::vector<std::pair<Partition, PsdVerdict>> per_partition;
  AlgebraElement gamma;  // the concrete group-algebra element
};

enum class SmallKCase { g00ij, g0iij, g0ijl, giijl, gijlm };

SmallKCase parse_small_k_case(const std::string& name);
std::string small_k_case_name(SmallKCase c);

// Small-k checks that fall outside the symbolic certificates: builds the
// concrete Gamma element in S_E for A_0 = {2..k}, A_i = A_0 u {k+i}, and
// certifies PSD exactly on the relevant irreps (mu_1 = k for the 00ij/0iij/
// 0ijl cases, mu_1 = k+1 for iijl/0ijl, mu_1 in {k+1, k+2} for ijlm).
SmallKReport verify_small_k(SmallKCase c, int k);

}  // namespace symgap
