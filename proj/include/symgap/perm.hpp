#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "symgap/common.hpp"

namespace symgap {

// Sorted, duplicate-free set of vertices from [n] (1-based).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> members);
  static VertexSet range(int lo, int hi);  // {lo, lo+1, ..., hi}, empty if lo > hi

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;
  bool subset_of(const VertexSet& other) const;
  bool subset_of_range(int n) const;  // all members in [1, n]

  VertexSet set_union(const VertexSet& other) const;
  VertexSet set_intersection(const VertexSet& other) const;
  VertexSet set_difference(const VertexSet& other) const;
  VertexSet with(int v) const;
  VertexSet without(int v) const;

  bool operator==(const VertexSet& other) const = default;
  auto operator<=>(const VertexSet& other) const = default;

  std::string str() const;  // "{1,2,4}", "{}" for empty

 private:
  std::vector<int> members_;
};

// Permutation of [n], stored as the full image sequence: images()[i-1] = pi(i).
// Values are 1-based throughout.
class Permutation {
 public:
  explicit Permutation(int degree = 1);  // identity
  static Permutation from_images(std::vector<int> images);
  static Permutation transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  VertexSet support() const;  // { i : pi(i) != i }

  bool operator==(const Permutation& other) const = default;
  auto operator<=>(const Permutation& other) const = default;

  std::uint64_t hash() const;

  std::string cycles() const;  // "(1 2 4)(3 5)", "id" for identity
  static Permutation parse_cycles(const std::string& text, int degree);

 private:
  std::vector<int> images_;
};

// result(i) = p(q(i)); degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);

// All permutations of [n] with support contained in A, in lexicographic
// order of their image sequences. |A|! elements (1 for the empty set).
std::vector<Permutation> enumerate_sym(const VertexSet& a, int n);

struct PermHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace symgap
