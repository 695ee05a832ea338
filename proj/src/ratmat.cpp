#include "symgap/ratmat.hpp"

#include <sstream>

namespace symgap {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::operator+(const RatMat& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch");
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch");
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

RatMat RatMat::operator*(const RatMat& o) const {
  require(cols_ == o.rows_, "matrix product shape mismatch");
  RatMat r(rows_, o.cols_);
  Rat tmp;
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& bkj = o.at(k, j);
        if (bkj == 0) continue;
        tmp = aik * bkj;
        r.at(i, j) += tmp;
      }
    }
  return r;
}

RatMat RatMat::operator*(const Rat& c) const {
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

RatMat RatMat::transpose() const {
  RatMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool RatMat::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

Rat RatMat::trace() const {
  require(rows_ == cols_, "trace of non-square matrix");
  Rat t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::string RatMat::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << '[';
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << rat_str(at(i, j));
    }
    os << "]\n";
  }
  return os.str();
}

int rank(const RatMat& m) {
  RatMat w = m;
  int r = 0;
  for (int col = 0; col < w.cols() && r < w.rows(); ++col) {
    int pivot = -1;
    for (int i = r; i < w.rows(); ++i)
      if (w.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < w.cols(); ++j) std::swap(w.at(pivot, j), w.at(r, j));
    Rat inv = make_rat(Int(1), Int(1)) / w.at(r, col);
    for (int i = r + 1; i < w.rows(); ++i) {
      if (w.at(i, col) == 0) continue;
      Rat f = w.at(i, col) * inv;
      for (int j = col; j < w.cols(); ++j) w.at(i, j) -= f * w.at(r, j);
    }
    ++r;
  }
  return r;
}

std::vector<Rat> char_poly(const RatMat& m) {
  require(m.rows() == m.cols(), "char_poly: matrix must be square");
  int n = m.rows();
  if (n == 0) return {Rat(1)};
  if (n <= 24) {
    return berkowitz_charpoly<Rat>(n, Rat(1),
                                   [&](int i, int j) { return m.at(i, j); });
  }
  // Clear denominators and go through the integer CRT route.
  Int lcm = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int den = m.at(i, j).get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
  std::vector<Int> entries(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat scaled = m.at(i, j) * Rat(lcm);
      entries[i * n + j] = scaled.get_num();
    }
  std::vector<Int> pn = char_poly_int(n, entries);
  // p_M(t) = L^{-n} p_N(L t): coefficient i gets divided by L^{n-i}.
  std::vector<Rat> out(n + 1);
  Int pow = 1;
  for (int i = n; i >= 0; --i) {
    out[i] = make_rat(pn[i], pow);
    if (i) pow *= lcm;
  }
  return out;
}

}  // namespace symgap
