#include "symgap/seminormal.hpp"

#include <algorithm>
#include <sstream>

namespace symgap {

std::vector<int> Tableau::column_word() const {
  std::vector<int> w;
  std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < ncols; ++c)
    for (const auto& row : rows)
      if (c < row.size()) w.push_back(row[c]);
  return w;
}

int Tableau::content_of(int m) const {
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c] == m) return static_cast<int>(c) - static_cast<int>(r);
  throw std::logic_error("entry not in tableau");
}

std::optional<Tableau> Tableau::swap_adjacent(int i) const {
  Tableau t = *this;
  int ri = -1, ci = -1, rj = -1, cj = -1;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] == i) ri = static_cast<int>(r), ci = static_cast<int>(c);
      if (rows[r][c] == i + 1) rj = static_cast<int>(r), cj = static_cast<int>(c);
    }
  if (ri == rj || ci == cj) return std::nullopt;  // same row/col: not standard
  std::swap(t.rows[ri][ci], t.rows[rj][cj]);
  return t;
}

std::string Tableau::str() const {
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << row[c] << ' ';
    os << '\n';
  }
  return os.str();
}

static void fill_tableaux(const Partition& mu, int next,
                          std::vector<int>& fill_row, Tableau& t,
                          std::vector<Tableau>& out) {
  int n = mu.size();
  if (next > n) {
    out.push_back(t);
    return;
  }
  for (int r = 0; r < mu.rows(); ++r) {
    int c = fill_row[r];
    if (c >= mu.parts[r]) continue;
    if (r > 0 && fill_row[r - 1] <= c) continue;  // cell above must be filled
    t.rows[r].push_back(next);
    ++fill_row[r];
    fill_tableaux(mu, next + 1, fill_row, t, out);
    --fill_row[r];
    t.rows[r].pop_back();
  }
}

std::vector<Tableau> standard_tableaux(const Partition& mu) {
  std::vector<Tableau> out;
  Tableau t;
  t.rows.resize(mu.rows());
  std::vector<int> fill_row(mu.rows(), 0);
  fill_tableaux(mu, 1, fill_row, t, out);
  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    return a.column_word() < b.column_word();
  });
  return out;
}

IrrepMatrices::IrrepMatrices(const Partition& mu)
    : shape_(mu), n_(mu.size()), basis_(standard_tableaux(mu)) {
  dim_ = static_cast<int>(basis_.size());
  std::map<std::vector<int>, int> index;
  for (int b = 0; b < dim_; ++b) index[basis_[b].column_word()] = b;
  gen_.reserve(std::max(0, n_ - 1));
  for (int i = 1; i <= n_ - 1; ++i) {
    RatMat m(dim_, dim_);
    for (int b = 0; b < dim_; ++b) {
      const Tableau& t = basis_[b];
      int d = t.content_of(i + 1) - t.content_of(i);
      // same row: d = 1 (fixed); same column: d = -1 (negated); otherwise the
      // seminormal two-term rule, with the (1 - 1/d^2) weight on the tableau
      // of positive axial distance.
      Rat r = make_rat(Int(1), Int(d));
      m.at(b, b) += r;
      std::optional<Tableau> other = t.swap_adjacent(i);
      if (other) {
        int ob = index.at(other->column_word());
        if (d > 0) {
          m.at(ob, b) += Rat(1) - r * r;
        } else {
          m.at(ob, b) += 1;
        }
      }
    }
    gen_.push_back(std::move(m));
  }
}

const RatMat& IrrepMatrices::generator(int i) const {
  require(i >= 1 && i <= n_ - 1, "generator index out of range");
  return gen_[i - 1];
}

RatMat IrrepMatrices::matrix_of(const Permutation& pi) const {
  require(pi.degree() == n_, "permutation degree mismatch");
  // bubble-sort word: pi * s_{i1} * ... * s_{im} = id  =>  pi = s_{im}...s_{i1}
  std::vector<int> img = pi.images();
  RatMat m = RatMat::identity(dim_);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < n_; ++i) {
      if (img[i] > img[i + 1]) {
        std::swap(img[i], img[i + 1]);
        m = gen_[i] * m;  // left-multiply: word builds as s_{im} ... s_{i1}
        changed = true;
      }
    }
  }
  return m;
}

const RatMat& IrrepMatrices::transposition_matrix(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto key = std::make_pair(a, b);
  auto it = transposition_memo_.find(key);
  if (it == transposition_memo_.end())
    it = transposition_memo_
             .emplace(key, matrix_of(Permutation::transposition(n_, a, b)))
             .first;
  return it->second;
}

IrrepMatrices seminormal_irrep(const Partition& mu) { return IrrepMatrices(mu); }

const IrrepMatrices& cached_irrep(const Partition& mu) {
  static std::map<Partition, IrrepMatrices> cache;
  auto it = cache.find(mu);
  if (it == cache.end()) it = cache.emplace(mu, IrrepMatrices(mu)).first;
  return it->second;
}

RatMat act(const AlgebraElement& e, const IrrepMatrices& rep) {
  require(e.degree() == rep.n(), "act: degree mismatch");
  RatMat sum(rep.dim(), rep.dim());
  std::unordered_map<Permutation, RatMat, PermHash> memo;
  for (const auto& [p, c] : e.terms()) {
    auto it = memo.find(p);
    if (it == memo.end()) it = memo.emplace(p, rep.matrix_of(p)).first;
    sum = sum + it->second * c;
  }
  return sum;
}

RatMat act_j(const VertexSet& a, const IrrepMatrices& rep) {
  RatMat m = RatMat::identity(rep.dim());
  const std::vector<int>& mem = a.members();
  for (std::size_t t = 1; t < mem.size(); ++t) {
    RatMat step = RatMat::identity(rep.dim());
    for (std::size_t i = 0; i < t; ++i)
      step = step + rep.transposition_matrix(mem[i], mem[t]);
    m = step * m;
  }
  return m;
}

RatMat act_alpha(const VertexSet& a, const IrrepMatrices& rep) {
  if (a.size() <= 1) return RatMat(rep.dim(), rep.dim());
  RatMat j = act_j(a, rep);
  Rat inv_fact = make_rat(Int(1), factorial(a.size() - 1));
  return RatMat::identity(rep.dim()) * Rat(a.size()) - j * inv_fact;
}

RatMat standard_rep_matrix(const AlgebraElement& e) {
  int n = e.degree();
  RatMat m(n, n);
  for (const auto& [p, c] : e.terms())
    for (int i = 1; i <= n; ++i) m.at(i - 1, p.apply(i) - 1) += c;
  return m;
}

RatMat regular_rep_matrix(const AlgebraElement& e) {
  int n = e.degree();
  std::vector<Permutation> group = enumerate_sym(VertexSet::range(1, n), n);
  std::unordered_map<Permutation, int, PermHash> index;
  for (std::size_t i = 0; i < group.size(); ++i) index[group[i]] = static_cast<int>(i);
  RatMat m(static_cast<int>(group.size()), static_cast<int>(group.size()));
  for (const auto& [p, c] : e.terms())
    for (std::size_t j = 0; j < group.size(); ++j) {
      int i = index.at(compose(p, group[j]));
      m.at(i, static_cast<int>(j)) += c;
    }
  return m;
}

std::vector<Rat> char_poly_of_action(const AlgebraElement& e,
                                     const IrrepMatrices& rep) {
  return char_poly(act(e, rep));
}

}  // namespace symgap
