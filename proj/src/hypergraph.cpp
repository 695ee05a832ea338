#include "symgap/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace symgap {

WeightedHypergraph::WeightedHypergraph(
    int n, std::vector<std::pair<VertexSet, Rat>> edges)
    : n_(n), edges_(std::move(edges)) {
  require(n_ >= 1, "hypergraph needs at least one vertex");
  std::sort(edges_.begin(), edges_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    require(edges_[i].first.subset_of_range(n_),
            "hyper-edge not inside the vertex set");
    require(edges_[i].second >= 0, "hyper-edge weight must be non-negative");
    if (i)
      require(edges_[i - 1].first != edges_[i].first,
              "duplicate hyper-edge " + edges_[i].first.str());
  }
}

Rat WeightedHypergraph::total_weight() const {
  Rat w = 0;
  for (const auto& [a, wa] : edges_) w += wa;
  return w;
}

std::optional<Rat> WeightedHypergraph::weight_of(const VertexSet& a) const {
  for (const auto& [s, w] : edges_)
    if (s == a) return w;
  return std::nullopt;
}

VertexSet WeightedHypergraph::common_core() const {
  std::optional<VertexSet> core;
  for (const auto& [a, w] : edges_) {
    if (w == 0) continue;
    core = core ? core->set_intersection(a) : a;
  }
  return core.value_or(VertexSet());
}

bool WeightedHypergraph::has_b_shape(const VertexSet& b) const {
  for (const auto& [a, w] : edges_) {
    if (w == 0) continue;
    if (!b.subset_of(a)) return false;
    if (a.set_difference(b).size() > 2) return false;
  }
  return true;
}

std::string WeightedHypergraph::str() const {
  std::ostringstream os;
  os << "n " << n_ << "\n";
  for (const auto& [a, w] : edges_) {
    os << "edge ";
    if (a.empty()) {
      os << "-";
    } else {
      const auto& m = a.members();
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << ',';
        os << m[i];
      }
    }
    os << " weight " << rat_str(w) << "\n";
  }
  return os.str();
}

WeightedHypergraph parse_hypergraph(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<VertexSet, Rat>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "n") {
      require(n < 0, "duplicate 'n' line");
      require(static_cast<bool>(ls >> n) && n >= 1,
              "bad vertex count on line " + std::to_string(lineno));
    } else if (word == "edge") {
      require(n >= 1, "'edge' before 'n' on line " + std::to_string(lineno));
      std::string verts, kw, wtext;
      require(static_cast<bool>(ls >> verts >> kw >> wtext) && kw == "weight",
              "expected 'edge <v1>,<v2>,... weight <p>/<q>' on line " +
                  std::to_string(lineno));
      std::vector<int> members;
      if (verts != "-") {
        std::istringstream vs(verts);
        std::string tok;
        while (std::getline(vs, tok, ',')) {
          require(!tok.empty(), "empty vertex on line " + std::to_string(lineno));
          members.push_back(std::stoi(tok));
        }
      }
      Rat w = parse_rat(wtext);
      require(w >= 0, "negative weight on line " + std::to_string(lineno));
      edges.emplace_back(VertexSet(std::move(members)), w);
    } else {
      throw std::invalid_argument("unrecognized directive '" + word +
                                  "' on line " + std::to_string(lineno));
    }
  }
  require(n >= 1, "hypergraph file has no 'n' line");
  return WeightedHypergraph(n, std::move(edges));
}

WeightedHypergraph parse_hypergraph_file(const std::string& path) {
  std::ifstream f(path);
  require(f.good(), "cannot open hypergraph file " + path);
  return parse_hypergraph(f);
}

}  // namespace symgap
