#pragma once

#include <vector>

#include "symgap/common.hpp"

namespace symgap {

// Dense matrix over exact rationals.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat operator*(const RatMat& o) const;
  RatMat operator*(const Rat& c) const;
  RatMat transpose() const;
  bool operator==(const RatMat& o) const = default;

  bool is_zero() const;
  Rat trace() const;
  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

inline RatMat jordan(const RatMat& a, const RatMat& b) {
  return (a * b + b * a) * make_rat(1, 2);
}

// Rank over Q by Gaussian elimination (exact).
int rank(const RatMat& m);

// Division-free Berkowitz characteristic polynomial over any commutative
// ring: R needs default construction (= 0), +=, *, and unary -.
// Returns coefficients of det(tI - A) in ascending degree; c[n] = 1.
template <class R, class Getter>
std::vector<R> berkowitz_charpoly(int n, const R& one, Getter entry) {
  std::vector<R> c(2);
  c[0] = one;          // descending order during the recursion
  c[1] = -entry(0, 0);
  std::vector<R> row(n), col(n), w(n), wn(n);
  for (int r = 1; r < n; ++r) {
    // Toeplitz column: v[0]=1, v[1]=-a_{r,r}, v[k]=-(R . M^{k-2} . S)
    std::vector<R> v(r + 2);
    v[0] = one;
    v[1] = -entry(r, r);
    for (int i = 0; i < r; ++i) {
      row[i] = entry(r, i);
      col[i] = entry(i, r);
      w[i] = col[i];
    }
    for (int k = 2; k <= r + 1; ++k) {
      R dot{};
      for (int i = 0; i < r; ++i) dot += row[i] * w[i];
      v[k] = -dot;
      if (k == r + 1) break;
      for (int i = 0; i < r; ++i) {
        R s{};
        for (int j = 0; j < r; ++j) s += entry(i, j) * w[j];
        wn[i] = s;
      }
      std::swap(w, wn);
    }
    std::vector<R> next(r + 2);
    for (int i = 0; i <= r + 1; ++i) {
      R s{};
      for (int j = 0; j <= std::min<int>(i, r); ++j) s += v[i - j] * c[j];
      next[i] = s;
    }
    c = std::move(next);
  }
  std::vector<R> asc(n + 1);
  for (int i = 0; i <= n; ++i) asc[n - i] = c[i];
  return asc;
}

// Characteristic polynomial det(tI - M) of a square rational matrix, exact
// and monic, ascending coefficients. Berkowitz for small orders; for larger
// ones the denominator-cleared integer matrix goes through the modular CRT
// route (same result, cross-checked in tests).
std::vector<Rat> char_poly(const RatMat& m);

// char poly of an integer matrix (ascending, monic), exact via CRT over
// 62-bit primes with a Hadamard-type 1-norm bound.
std::vector<Int> char_poly_int(int n, const std::vector<Int>& entries);

}  // namespace symgap
