#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symgap/algebra.hpp"
#include "symgap/partition.hpp"
#include "symgap/ratmat.hpp"

namespace symgap {

// Standard Young tableau of a given shape, stored row by row.
struct Tableau {
  std::vector<std::vector<int>> rows;

  // Column-reading word: columns left to right, each top to bottom. The
  // canonical basis order sorts tableaux by this word lexicographically.
  std::vector<int> column_word() const;
  // content (col - row) of the cell holding the entry m (1-based)
  int content_of(int m) const;
  std::optional<Tableau> swap_adjacent(int i) const;  // exchange i and i+1 if standard
  std::string str() const;
};

std::vector<Tableau> standard_tableaux(const Partition& mu);

// Young's seminormal representation of Sym_n for shape mu: exact rational
// generator matrices for the adjacent transpositions s_1..s_{n-1}, acting on
// the SYT basis in canonical order.
class IrrepMatrices {
 public:
  explicit IrrepMatrices(const Partition& mu);

  const Partition& shape() const { return shape_; }
  int n() const { return n_; }
  int dim() const { return dim_; }
  const std::vector<Tableau>& basis() const { return basis_; }
  // rho(s_i) for i in [1, n-1]
  const RatMat& generator(int i) const;

  // rho(pi) via a bubble-sort factorization into adjacent transpositions.
  RatMat matrix_of(const Permutation& pi) const;
  // rho((a b)), memoized (hot path of act_j chains).
  const RatMat& transposition_matrix(int a, int b) const;

 private:
  Partition shape_;
  int n_, dim_;
  std::vector<Tableau> basis_;
  std::vector<RatMat> gen_;
  mutable std::map<std::pair<int, int>, RatMat> transposition_memo_;
};

IrrepMatrices seminormal_irrep(const Partition& mu);

// Process-wide cache; IrrepMatrices are immutable (the transposition memo
// only fills in) and every sweep over partitions hits the same shapes.
const IrrepMatrices& cached_irrep(const Partition& mu);

// sum of coefficient(pi) * rho(pi); memoizes rho per permutation within the
// call. Suited to elements with modest support; J_A-structured elements
// should go through act_j/act_alpha instead.
RatMat act(const AlgebraElement& e, const IrrepMatrices& rep);

// rho(J_A) by the coset chain J_{A_m} = (id + sum_i (a_i a_m)) J_{A_{m-1}}:
// |A| matrix products instead of |A|! terms.
RatMat act_j(const VertexSet& a, const IrrepMatrices& rep);

// rho(alpha_A) = |A| I - rho(J_A)/(|A|-1)!
RatMat act_alpha(const VertexSet& a, const IrrepMatrices& rep);

// Matrix of e on the standard representation D = R^n, in the basis where
// pi.v = (v_{pi(1)}, ..., v_{pi(n)}).
RatMat standard_rep_matrix(const AlgebraElement& e);

// Matrix of left multiplication by e on R[Sym_n], basis enumerate_sym([n], n).
RatMat regular_rep_matrix(const AlgebraElement& e);

// det(tI - act(e, rep)) with exact rational coefficients (ascending).
std::vector<Rat> char_poly_of_action(const AlgebraElement& e,
                                     const IrrepMatrices& rep);

}  // namespace symgap
