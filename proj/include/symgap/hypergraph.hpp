#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symgap/perm.hpp"

namespace symgap {

// Weighted hypergraph on [n]: distinct hyper-edge sets with non-negative
// rational weights. Edges of size 0 and 1 are allowed (they only add
// laziness to the processes).
class WeightedHypergraph {
 public:
  WeightedHypergraph(int n, std::vector<std::pair<VertexSet, Rat>> edges);

  int n() const { return n_; }
  const std::vector<std::pair<VertexSet, Rat>>& edges() const { return edges_; }
  Rat total_weight() const;
  std::optional<Rat> weight_of(const VertexSet& a) const;

  // Largest B with every positive-weight edge containing B ({} if no
  // positive edges). The natural core for the B-shape check.
  VertexSet common_core() const;
  // Every positive-weight edge E satisfies E >= B and |E \ B| <= 2?
  bool has_b_shape(const VertexSet& b) const;

  std::string str() const;  // the CLI text format

 private:
  int n_;
  std::vector<std::pair<VertexSet, Rat>> edges_;  // sorted by set
};

// Text format, line based:
//   # comment
//   n 6
//   edge 1,2,3 weight 1
//   edge - weight 1/3        ("-" is the empty edge)
WeightedHypergraph parse_hypergraph(std::istream& in);
WeightedHypergraph parse_hypergraph_file(const std::string& path);

}  // namespace symgap
