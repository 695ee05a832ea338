#include "symgap/perm.hpp"

#include <algorithm>
#include <sstream>

namespace symgap {

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Int whole(text);
      return Rat(whole);
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    require(den != 0, "rational with zero denominator: " + text);
    return make_rat(num, den);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("cannot parse rational '" + text + "'");
  }
}

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i + 1 < members_.size(); ++i)
    require(members_[i] != members_[i + 1], "vertex set has duplicates");
  if (!members_.empty()) require(members_.front() >= 1, "vertices are 1-based");
}

VertexSet VertexSet::range(int lo, int hi) {
  std::vector<int> m;
  for (int v = lo; v <= hi; ++v) m.push_back(v);
  return VertexSet(std::move(m));
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool VertexSet::subset_of_range(int n) const {
  return members_.empty() || members_.back() <= n;
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
  std::vector<int> m;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(m));
  return VertexSet(std::move(m));
}

VertexSet VertexSet::set_intersection(const VertexSet& other) const {
  std::vector<int> m;
  std::set_intersection(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(m));
  return VertexSet(std::move(m));
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
  std::vector<int> m;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(m));
  return VertexSet(std::move(m));
}

VertexSet VertexSet::with(int v) const {
  if (contains(v)) return *this;
  std::vector<int> m = members_;
  m.push_back(v);
  return VertexSet(std::move(m));
}

VertexSet VertexSet::without(int v) const {
  std::vector<int> m;
  for (int x : members_)
    if (x != v) m.push_back(x);
  return VertexSet(std::move(m));
}

std::string VertexSet::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) os << ',';
    os << members_[i];
  }
  os << '}';
  return os.str();
}

Permutation::Permutation(int degree) {
  require(degree >= 1, "permutation degree must be positive");
  images_.resize(degree);
  for (int i = 0; i < degree; ++i) images_[i] = i + 1;
}

Permutation Permutation::from_images(std::vector<int> images) {
  require(!images.empty(), "empty image sequence");
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    require(v >= 1 && v <= static_cast<int>(images.size()) && !seen[v - 1],
            "image sequence is not a bijection of [n]");
    seen[v - 1] = 1;
  }
  Permutation p(static_cast<int>(images.size()));
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int degree, int a, int b) {
  require(a >= 1 && a <= degree && b >= 1 && b <= degree && a != b,
          "bad transposition");
  Permutation p(degree);
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i] - 1] = i + 1;
  return from_images(std::move(inv));
}

VertexSet Permutation::support() const {
  std::vector<int> s;
  for (int i = 1; i <= degree(); ++i)
    if (apply(i) != i) s.push_back(i);
  return VertexSet(std::move(s));
}

std::uint64_t Permutation::hash() const {
  return fnv1a(images_.data(), images_.size() * sizeof(int));
}

std::string Permutation::cycles() const {
  std::vector<char> done(degree(), 0);
  std::ostringstream os;
  bool any = false;
  for (int i = 1; i <= degree(); ++i) {
    if (done[i - 1] || apply(i) == i) continue;
    os << '(';
    int j = i;
    bool first = true;
    while (!done[j - 1]) {
      done[j - 1] = 1;
      if (!first) os << ' ';
      os << j;
      first = false;
      j = apply(j);
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "id";
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
  const std::string& t = text;
  Permutation p(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
  };
  skip_ws();
  if (t.compare(i, 2, "id") == 0) {
    i += 2;
    skip_ws();
    require(i == t.size(), "trailing text after 'id'");
    return p;
  }
  std::vector<int> img(degree);
  for (int k = 0; k < degree; ++k) img[k] = k + 1;
  bool any = false;
  while (i < t.size()) {
    require(t[i] == '(', "expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      require(i < t.size(), "unterminated cycle in: " + text);
      if (t[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
      require(j > i, "expected number in cycle: " + text);
      int v = std::stoi(t.substr(i, j - i));
      require(v >= 1 && v <= degree, "cycle entry out of range: " + text);
      cyc.push_back(v);
      i = j;
      skip_ws();
      if (i < t.size() && t[i] == ',') ++i;  // tolerate comma separators
    }
    require(cyc.size() >= 2, "singleton cycle in: " + text);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k];
      int to = cyc[(k + 1) % cyc.size()];
      require(img[from - 1] == from, "vertex repeated across cycles: " + text);
      img[from - 1] = to;
    }
    any = true;
    skip_ws();
  }
  require(any, "empty cycle expression: " + text);
  return from_images(std::move(img));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require(p.degree() == q.degree(), "compose: degree mismatch");
  std::vector<int> img(p.degree());
  for (int i = 1; i <= p.degree(); ++i) img[i - 1] = p.apply(q.apply(i));
  return Permutation::from_images(std::move(img));
}

std::vector<Permutation> enumerate_sym(const VertexSet& a, int n) {
  require(a.subset_of_range(n), "enumerate_sym: set not inside [n]");
  const std::vector<int>& pos = a.members();
  std::vector<int> vals = pos;  // sorted start gives lexicographic order
  std::vector<Permutation> out;
  std::vector<int> img(n);
  do {
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    for (std::size_t k = 0; k < pos.size(); ++k) img[pos[k] - 1] = vals[k];
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(vals.begin(), vals.end()));
  return out;
}

}  // namespace symgap
