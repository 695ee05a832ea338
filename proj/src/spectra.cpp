#include "symgap/spectra.hpp"

#include <algorithm>

#include "symgap/seminormal.hpp"

namespace symgap {

AlgebraElement ip_operator(const WeightedHypergraph& g) {
  Rat w = g.total_weight();
  require(w > 0, "ip_operator: total weight must be positive");
  AlgebraElement u(g.n());
  for (const auto& [a, wa] : g.edges()) {
    if (wa == 0) continue;
    Rat scale = wa / (w * Rat(factorial(a.size())));
    u = u + j_element(a, g.n()) * scale;
  }
  return u;
}

RatMat rw_matrix(const WeightedHypergraph& g) {
  Rat w = g.total_weight();
  require(w > 0, "rw_matrix: total weight must be positive");
  int n = g.n();
  RatMat m(n, n);
  for (const auto& [a, wa] : g.edges()) {
    if (wa == 0) continue;
    Rat lazy = wa / w;
    for (int u = 1; u <= n; ++u) {
      if (!a.contains(u)) {
        m.at(u - 1, u - 1) += lazy;
      } else {
        Rat hop = wa / (w * Rat(a.size()));
        for (int v : a.members()) m.at(u - 1, v - 1) += hop;
      }
    }
  }
  return m;
}

AlgebraElement laplacian_style_element(const WeightedHypergraph& g) {
  AlgebraElement s(g.n());
  for (const auto& [a, wa] : g.edges()) {
    if (wa == 0 || a.size() <= 1) continue;
    s = s + alpha(a, g.n()) * (wa / Rat(a.size()));
  }
  return s;
}

namespace {

RatMat act_ip(const WeightedHypergraph& g, const IrrepMatrices& rep) {
  Rat w = g.total_weight();
  RatMat m(rep.dim(), rep.dim());
  for (const auto& [a, wa] : g.edges()) {
    if (wa == 0) continue;
    Rat scale = wa / (w * Rat(factorial(a.size())));
    m = m + act_j(a, rep) * scale;
  }
  return m;
}

}  // namespace

Lambda2Result lambda2_ip(const WeightedHypergraph& g) {
  int n = g.n();
  require(n >= 2 && n <= 8, "lambda2_ip: need 2 <= n <= 8");
  Rat w = g.total_weight();
  require(w > 0, "lambda2_ip: total weight must be positive");
  Lambda2Result out;
  bool first = true;
  for (const Partition& mu : partitions_of(n)) {
    if (mu == Partition({n})) continue;  // trivial rep carries lambda_1 = 1
    const IrrepMatrices& rep = cached_irrep(mu);
    RealRootedPoly p(char_poly(act_ip(g, rep)));
    // Markov operator: spectrum inside [-1, 1]
    PartitionLambda row{mu, p.kth_largest(1, default_root_eps(), Rat(2)), 0, 0};
    row.sg_min_exact_lo = w * (Rat(1) - row.lambda1.hi);
    row.sg_min_exact_hi = w * (Rat(1) - row.lambda1.lo);
    if (first || row.lambda1.lo > out.lambda2.lo) {
      out.lambda2 = row.lambda1;
      first = false;
    }
    out.table.push_back(std::move(row));
  }
  if (n <= 5) {
    RealRootedPoly p(char_poly(regular_rep_matrix(ip_operator(g))));
    auto second = p.kth_largest(2, default_root_eps(), Rat(2));
    double gap = std::abs(second.mid() - out.lambda2.mid());
    require(gap <= 1e-9, "irrep route and n! oracle disagree on lambda2");
    out.oracle_gap = gap;
  }
  return out;
}

RealRootedPoly::Interval lambda2_rw(const WeightedHypergraph& g) {
  require(g.n() >= 2, "lambda2_rw: need n >= 2");
  RealRootedPoly p(char_poly(rw_matrix(g)));
  return p.kth_largest(2, default_root_eps(), Rat(2));
}

SpectralReport check_caputo(const WeightedHypergraph& g, const Rat& tolerance,
                            bool force_oracle) {
  require(g.n() <= 8, "check_caputo: n too large");
  Lambda2Result ip = lambda2_ip(g);
  auto rw = lambda2_rw(g);
  SpectralReport rep;
  rep.lambda2_rw = rw.mid();
  rep.lambda2_ip = ip.lambda2.mid();
  rep.gap = std::abs(rep.lambda2_rw - rep.lambda2_ip);
  rep.equal = Rat(rep.gap) <= tolerance;
  rep.table = std::move(ip.table);
  rep.oracle_gap = ip.oracle_gap;
  if (force_oracle && !rep.oracle_gap && g.n() == 6) {
    // full 720-state cross-check, floating: reported, never an arbiter
    double dense = lambda2_ip_dense_oracle(g);
    rep.oracle_gap = std::abs(dense - rep.lambda2_ip);
  }
  // every nontrivial lambda_1 at most the one from the standard component
  std::vector<int> nm1 = {g.n() - 1, 1};
  Partition standard(nm1);
  double top = 0;
  for (const auto& row : rep.table)
    if (row.mu == standard) top = row.lambda1.mid();
  rep.standard_dominates = true;
  for (const auto& row : rep.table)
    if (row.lambda1.mid() > top + 1e-8) rep.standard_dominates = false;
  return rep;
}

namespace detail {

// New weights in the original labels; exposed for the induction audit.
std::vector<std::pair<VertexSet, Rat>> pivot_reduce_edges(
    const WeightedHypergraph& g, int pivot) {
  require(pivot >= 1 && pivot <= g.n(), "pivot out of range");
  VertexSet b = g.common_core().without(pivot);
  require(g.has_b_shape(b), "hypergraph does not have the B-core shape");

  std::vector<int> rest;  // m_1 < m_2 < ... outside B and pivot
  for (int v = 1; v <= g.n(); ++v)
    if (v != pivot && !b.contains(v)) rest.push_back(v);
  int t = static_cast<int>(rest.size());

  auto weight = [&](const VertexSet& a) {
    auto w = g.weight_of(a);
    return w ? *w : Rat(0);
  };
  Rat c0 = weight(b.with(pivot));
  std::vector<Rat> c(t);
  for (int i = 0; i < t; ++i) c[i] = weight(b.with(pivot).with(rest[i]));

  Rat cap = c0 * Rat(b.size());
  for (int i = 0; i < t; ++i) cap += c[i] * Rat(b.size() + 1);
  require(cap > 0, "pivot reduction needs C > 0");

  Rat pair_sum = 0;  // sum over 0 <= i < j <= t of c_i c_j
  for (int i = 0; i < t; ++i) pair_sum += c0 * c[i];
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) pair_sum += c[i] * c[j];

  std::vector<std::pair<VertexSet, Rat>> out;
  out.emplace_back(b, weight(b) + c0 + (c0 * c0 + pair_sum) / cap);
  for (int i = 0; i < t; ++i) {
    VertexSet a = b.with(rest[i]);
    out.emplace_back(a, weight(a) + c[i] + (c[i] * c[i] + c0 * c[i]) / cap);
  }
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      VertexSet a = b.with(rest[i]).with(rest[j]);
      out.emplace_back(a, weight(a) + c[i] * c[j] / cap);
    }
  // drop zero-weight edges of the reduced graph
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

}  // namespace detail

WeightedHypergraph pivot_reduce(const WeightedHypergraph& g, int pivot) {
  auto raw = detail::pivot_reduce_edges(g, pivot);
  // order-preserving relabel [n] minus pivot -> [n-1]
  std::vector<std::pair<VertexSet, Rat>> edges;
  for (const auto& [a, w] : raw) {
    std::vector<int> m;
    for (int v : a.members()) m.push_back(v < pivot ? v : v - 1);
    edges.emplace_back(VertexSet(std::move(m)), w);
  }
  return WeightedHypergraph(g.n() - 1, std::move(edges));
}

WeightedHypergraph leaf_reduce(const WeightedHypergraph& g) {
  const auto& edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const VertexSet& a = edges[e].first;
    if (a.size() < 2) continue;
    for (int v : a.members()) {
      bool unique = true;
      for (std::size_t f = 0; f < edges.size() && unique; ++f)
        if (f != e && edges[f].first.contains(v)) unique = false;
      if (!unique) continue;
      // replace E by E - v, weight scaled by |E|/(|E|-1)
      Rat scaled = edges[e].second * make_rat(a.size(), a.size() - 1);
      VertexSet reduced = a.without(v);
      std::vector<std::pair<VertexSet, Rat>> out;
      bool merged = false;
      for (std::size_t f = 0; f < edges.size(); ++f) {
        if (f == e) continue;
        if (edges[f].first == reduced) {
          out.emplace_back(reduced, edges[f].second + scaled);
          merged = true;
        } else {
          out.push_back(edges[f]);
        }
      }
      if (!merged) out.emplace_back(reduced, scaled);
      return WeightedHypergraph(g.n(), std::move(out));
    }
  }
  throw std::invalid_argument("leaf_reduce: no reducible leaf");
}

}  // namespace symgap
