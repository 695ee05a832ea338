#include "symgap/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace symgap {

AlgebraElement AlgebraElement::scalar(int degree, const Rat& c) {
  AlgebraElement e(degree);
  e.add_term(Permutation(degree), c);
  return e;
}

Rat AlgebraElement::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rat(0) : it->second;
}

void AlgebraElement::add_term(const Permutation& p, const Rat& c) {
  require(p.degree() == degree_, "term degree mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool AlgebraElement::is_symmetric() const {
  for (const auto& [p, c] : terms_)
    if (coefficient(p.inverse()) != c) return false;
  return true;
}

VertexSet AlgebraElement::support_set() const {
  VertexSet s;
  for (const auto& [p, c] : terms_) s = s.set_union(p.support());
  return s;
}

Rat AlgebraElement::coefficient_sum() const {
  Rat s = 0;
  for (const auto& [p, c] : terms_) s += c;
  return s;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  require(degree_ == other.degree_, "element degree mismatch");
  AlgebraElement r = *this;
  for (const auto& [p, c] : other.terms_) r.add_term(p, c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
  require(degree_ == other.degree_, "element degree mismatch");
  AlgebraElement r = *this;
  for (const auto& [p, c] : other.terms_) r.add_term(p, -c);
  return r;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r(degree_);
  for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
  return r;
}

AlgebraElement AlgebraElement::operator*(const Rat& c) const {
  AlgebraElement r(degree_);
  if (c == 0) return r;
  for (const auto& [p, coef] : terms_) r.terms_.emplace(p, coef * c);
  return r;
}

std::string AlgebraElement::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    os << rat_str(c) << "*(" << p.cycles() << ")";
    first = false;
  }
  return os.str();
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  require(a.degree() == b.degree(), "multiply: degree mismatch");
  AlgebraElement r(a.degree());
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) r.add_term(compose(p, q), cp * cq);
  return r;
}

AlgebraElement jordan_product(const AlgebraElement& a,
                              const AlgebraElement& b) {
  AlgebraElement s = multiply(a, b) + multiply(b, a);
  return s * make_rat(1, 2);
}

AlgebraElement j_element(const VertexSet& a, int n) {
  require(a.subset_of_range(n), "j_element: set not inside [n]");
  AlgebraElement e(n);
  for (const Permutation& p : enumerate_sym(a, n)) e.add_term(p, 1);
  return e;
}

AlgebraElement alpha(const VertexSet& a, int n) {
  require(a.subset_of_range(n), "alpha: set not inside [n]");
  if (a.size() <= 1) return AlgebraElement::zero(n);
  Rat scale(1);
  scale /= Rat(factorial(a.size() - 1));
  AlgebraElement e(n);
  for (const Permutation& p : enumerate_sym(a, n)) {
    e.add_term(Permutation(n), scale);
    e.add_term(p, -scale);
  }
  return e;
}

AlgebraElement embed_fixing_one(const AlgebraElement& e) {
  int n = e.degree() + 1;
  AlgebraElement r(n);
  for (const auto& [p, c] : e.terms()) {
    std::vector<int> img(n);
    img[0] = 1;
    for (int i = 1; i < n; ++i) img[i] = p.apply(i) + 1;
    r.add_term(Permutation::from_images(std::move(img)), c);
  }
  return r;
}

AlgebraElement relabel(const AlgebraElement& e, const std::vector<int>& map) {
  int n = e.degree();
  require(static_cast<int>(map.size()) == n, "relabel: map size mismatch");
  Permutation m = Permutation::from_images(map);
  Permutation minv = m.inverse();
  AlgebraElement r(n);
  for (const auto& [p, c] : e.terms())
    r.add_term(compose(m, compose(p, minv)), c);
  return r;
}

AlgebraElement restrict_to(const AlgebraElement& e, const VertexSet& carrier) {
  require(e.support_set().subset_of(carrier),
          "restrict_to: support not inside carrier");
  const std::vector<int>& mem = carrier.members();
  int m = std::max<int>(1, carrier.size());
  std::vector<int> slot(e.degree() + 1, 0);
  for (std::size_t i = 0; i < mem.size(); ++i) slot[mem[i]] = static_cast<int>(i) + 1;
  AlgebraElement r(m);
  for (const auto& [p, c] : e.terms()) {
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = i + 1;
    for (int v : mem) img[slot[v] - 1] = slot[p.apply(v)];
    r.add_term(Permutation::from_images(std::move(img)), c);
  }
  return r;
}

}  // namespace symgap
