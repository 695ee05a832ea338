#pragma once

#include <string>
#include <vector>

#include "symgap/common.hpp"

namespace symgap {

// Partition mu of n: non-increasing positive parts. Indexes the irreducible
// representation V_mu of Sym_n; parts[0] is the first-row length mu_1.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;  // |mu| = sum of parts
  int rows() const { return static_cast<int>(parts.size()); }
  int first_row() const { return parts.empty() ? 0 : parts[0]; }

  bool operator==(const Partition& other) const = default;
  auto operator<=>(const Partition& other) const = default;

  std::string str() const;  // "(5,2,2,1)"
};

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// All partitions of n-1 obtained by removing one corner square, ordered by
// the row the square is removed from.
std::vector<Partition> remove_corner_squares(const Partition& mu);

// Dimension of V_mu by the hook length formula: n! / prod(hooks).
Int hook_length_dimension(const Partition& mu);

}  // namespace symgap
