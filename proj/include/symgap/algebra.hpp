#pragma once

#include <map>
#include <string>

#include "symgap/perm.hpp"

namespace symgap {

// Element of the rational group algebra Q[Sym_n]: a finite association
// from permutations to exact rational coefficients. Zero coefficients are
// never stored; all values are immutable after construction.
class AlgebraElement {
 public:
  explicit AlgebraElement(int degree = 1) : degree_(degree) {}
  static AlgebraElement zero(int degree) { return AlgebraElement(degree); }
  static AlgebraElement scalar(int degree, const Rat& c);  // c * id

  int degree() const { return degree_; }
  const std::map<Permutation, Rat>& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }
  bool is_zero() const { return terms_.empty(); }

  Rat coefficient(const Permutation& p) const;
  void add_term(const Permutation& p, const Rat& c);  // accumulates, drops zeros

  bool is_symmetric() const;  // coefficient(pi) == coefficient(pi^-1) for all pi
  VertexSet support_set() const;
  Rat coefficient_sum() const;

  AlgebraElement operator+(const AlgebraElement& other) const;
  AlgebraElement operator-(const AlgebraElement& other) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(const Rat& c) const;
  bool operator==(const AlgebraElement& other) const = default;

  std::string render() const;  // "q1*(cycles1) + q2*(cycles2) + ..."

 private:
  int degree_;
  std::map<Permutation, Rat> terms_;
};

// Convolution product; bilinear, id neutral.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
inline AlgebraElement operator*(const AlgebraElement& a,
                                const AlgebraElement& b) {
  return multiply(a, b);
}

// (ab + ba) / 2.
AlgebraElement jordan_product(const AlgebraElement& a, const AlgebraElement& b);

// J_A = sum of all permutations with support inside A (all coefficients 1).
AlgebraElement j_element(const VertexSet& a, int n);

// alpha_A = (1/(|A|-1)!) sum_{pi in Sym(A)} (id - pi); zero when |A| <= 1.
AlgebraElement alpha(const VertexSet& a, int n);

// Re-tags an element of Q[Sym_{n-1}] into Q[Sym_n] through the embedding of
// Sym_{n-1} as the stabilizer of the vertex 1: i -> i+1 on [n-1].
AlgebraElement embed_fixing_one(const AlgebraElement& e);

// Applies a vertex relabeling: term pi maps to map o pi o map^-1 where map is
// given as images over [degree] (a bijection). Degree is preserved.
AlgebraElement relabel(const AlgebraElement& e, const std::vector<int>& map);

// Restricts an element to the symmetric group on its support carrier E
// (or any E containing the support) by the order-preserving relabeling
// E -> [|E|]. Returns the element of Q[Sym_{|E|}] (|E| >= 1).
AlgebraElement restrict_to(const AlgebraElement& e, const VertexSet& carrier);

}  // namespace symgap
