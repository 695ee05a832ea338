#include "symgap/partition.hpp"

#include <numeric>
#include <sstream>

namespace symgap {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    require(parts[i] > 0, "partition parts must be positive");
    if (i) require(parts[i - 1] >= parts[i], "partition parts must be non-increasing");
  }
}

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << ')';
  return os.str();
}

static void gen_partitions(int n, int maxpart, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  require(n >= 1, "partitions_of: n must be positive");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  return out;
}

std::vector<Partition> remove_corner_squares(const Partition& mu) {
  require(mu.size() >= 2, "remove_corner_squares: |mu| must be at least 2");
  std::vector<Partition> out;
  for (int r = 0; r < mu.rows(); ++r) {
    bool corner = (r + 1 == mu.rows()) || (mu.parts[r] > mu.parts[r + 1]);
    if (!corner) continue;
    std::vector<int> p = mu.parts;
    if (--p[r] == 0) p.pop_back();
    out.push_back(Partition(std::move(p)));
  }
  return out;
}

Int hook_length_dimension(const Partition& mu) {
  int n = mu.size();
  // column lengths
  std::vector<int> col(mu.first_row(), 0);
  for (int r = 0; r < mu.rows(); ++r)
    for (int c = 0; c < mu.parts[r]; ++c) ++col[c];
  Int hooks = 1;
  for (int r = 0; r < mu.rows(); ++r)
    for (int c = 0; c < mu.parts[r]; ++c)
      hooks *= (mu.parts[r] - c) + (col[c] - r) - 1;
  Int dim = factorial(n) / hooks;
  return dim;
}

}  // namespace symgap
