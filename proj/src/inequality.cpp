#include "symgap/inequality.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "symgap/seminormal.hpp"
#include "symgap/spectra.hpp"

namespace symgap {

void AlphaCombo::add(const Rat& c, const VertexSet& a) {
  if (c == 0 || a.size() <= 1) return;  // alpha vanishes on sets of size <= 1
  terms.emplace_back(c, a);
}

AlgebraElement AlphaCombo::flatten() const {
  AlgebraElement e(degree);
  for (const auto& [c, a] : terms) e = e + alpha(a, degree) * c;
  return e;
}

RatMat AlphaCombo::act(const IrrepMatrices& rep) const {
  require(rep.n() == degree, "AlphaCombo::act degree mismatch");
  RatMat m(rep.dim(), rep.dim());
  for (const auto& [c, a] : terms) m = m + act_alpha(a, rep) * c;
  return m;
}

RatMat AlphaCombo::standard_matrix() const {
  RatMat m(degree, degree);
  for (const auto& [c, a] : terms)
    m = m + standard_rep_matrix(alpha(a, degree)) * c;
  return m;
}

VertexSet AlphaCombo::support() const {
  // alpha_A for distinct |A| >= 2 are linearly independent, so collecting
  // coefficients per set gives the exact support.
  std::map<VertexSet, Rat> collected;
  for (const auto& [c, a] : terms) collected[a] += c;
  VertexSet s;
  for (const auto& [a, c] : collected)
    if (c != 0) s = s.set_union(a);
  return s;
}

namespace {

std::map<VertexSet, Rat> normalized(const AlphaCombo& combo) {
  std::map<VertexSet, Rat> m;
  for (const auto& [c, a] : combo.terms) {
    auto [it, fresh] = m.emplace(a, c);
    if (!fresh) it->second += c;
    if (it->second == 0) m.erase(it);
  }
  return m;
}

bool combo_equal(const AlphaCombo& x, const AlphaCombo& y) {
  return normalized(x) == normalized(y);
}

}  // namespace

std::string shape_name(SquidShape s) {
  switch (s) {
    case SquidShape::General: return "general";
    case SquidShape::Disjoint: return "disjoint";
    case SquidShape::LargeIntersection: return "large-intersection";
    case SquidShape::CosizeOne: return "cosize-one";
    case SquidShape::ClassicOctopus: return "classic-octopus";
  }
  return "?";
}

void SquidInstance::validate() const {
  require(n >= 2, "instance needs n >= 2");
  require(sets.size() == weights.size(), "sets/weights size mismatch");
  require(a0.has_value() == c0.has_value(), "A_0 requires its weight c_0");
  auto check_set = [&](const VertexSet& a) {
    require(a.subset_of_range(n), "set not inside [n]: " + a.str());
    require(!a.contains(1), "sets must avoid the vertex 1: " + a.str());
  };
  for (const VertexSet& a : sets) check_set(a);
  if (a0) check_set(*a0);
  for (const Rat& c : weights) require(c >= 0, "weights must be non-negative");
  if (c0) require(*c0 >= 0, "weights must be non-negative");

  auto all_distinct = [&] {
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = i + 1; j < sets.size(); ++j)
        require(sets[i] != sets[j], "sets must be distinct");
  };
  switch (shape) {
    case SquidShape::General:
      require(!a0, "general shape takes no distinguished A_0");
      break;
    case SquidShape::Disjoint:
      require(!a0, "disjoint shape takes no distinguished A_0");
      for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
          require(sets[i].set_intersection(sets[j]).empty(),
                  "sets must be pairwise disjoint");
      break;
    case SquidShape::LargeIntersection:
      require(a0.has_value(), "shape needs the common core A_0");
      all_distinct();
      for (const VertexSet& a : sets) {
        require(a0->subset_of(a), "A_0 must be contained in every A_i");
        require(a.set_difference(*a0).size() == 1, "|A_i \\ A_0| must be 1");
      }
      break;
    case SquidShape::CosizeOne:
      require(a0.has_value(), "shape needs the ambient set A_0");
      all_distinct();
      for (const VertexSet& a : sets) {
        require(a.subset_of(*a0), "every A_i must lie inside A_0");
        require(a0->set_difference(a).size() == 1, "|A_0 \\ A_i| must be 1");
      }
      break;
    case SquidShape::ClassicOctopus:
      require(!a0, "octopus shape takes no distinguished A_0");
      all_distinct();
      for (const VertexSet& a : sets)
        require(a.size() == 1, "octopus sets are singletons");
      break;
  }
}

std::vector<std::pair<Rat, VertexSet>> SquidInstance::weighted_sets() const {
  std::vector<std::pair<Rat, VertexSet>> out;
  if (a0) out.emplace_back(*c0, *a0);
  for (std::size_t i = 0; i < sets.size(); ++i)
    out.emplace_back(weights[i], sets[i]);
  return out;
}

Rat SquidInstance::capital_c() const {
  Rat c = 0;
  for (const auto& [ci, ai] : weighted_sets()) c += ci * Rat(ai.size());
  return c;
}

AlphaCombo octopus_delta(int n, const std::vector<Rat>& weights) {
  require(static_cast<int>(weights.size()) == n - 1,
          "octopus_delta expects weights c_2..c_n");
  for (const Rat& c : weights) require(c >= 0, "octopus weights must be >= 0");
  Rat total = 0;
  for (const Rat& c : weights) total += c;
  AlphaCombo d;
  d.degree = n;
  for (int i = 2; i <= n; ++i)
    d.add(total * weights[i - 2], VertexSet({1, i}));
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      d.add(-(weights[i - 2] * weights[j - 2]), VertexSet({i, j}));
  return d;
}

namespace {

AlphaCombo squid_general(int n, const std::vector<std::pair<Rat, VertexSet>>& ws) {
  Rat c_total = 0;
  for (const auto& [c, a] : ws) c_total += c * Rat(a.size());
  AlphaCombo d;
  d.degree = n;
  for (const auto& [c, a] : ws) {
    d.add(c_total * c, a.with(1));
    d.add(-(c_total * c + c * c), a);
  }
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      Rat cc = ws[i].first * ws[j].first;
      const VertexSet &ai = ws[i].second, &aj = ws[j].second;
      d.add(-cc, ai.set_union(aj));
      d.add(-cc, ai.set_intersection(aj));
      d.add(cc, ai.set_difference(aj));
      d.add(cc, aj.set_difference(ai));
    }
  return d;
}

// Theorem-specific right-hand sides, written independently of the general
// formula; the builder asserts exact agreement between the two.
AlphaCombo squid_theorem_form(const SquidInstance& inst) {
  auto ws = inst.weighted_sets();
  Rat c_total = inst.capital_c();
  AlphaCombo d;
  d.degree = inst.n;
  for (const auto& [c, a] : ws) {
    d.add(c_total * c, a.with(1));
    d.add(-c_total * c, a);
  }
  switch (inst.shape) {
    case SquidShape::Disjoint:
      for (const auto& [c, a] : ws) d.add(-(c * c), a);
      for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j) {
          Rat cc = ws[i].first * ws[j].first;
          d.add(-cc, ws[i].second.set_union(ws[j].second));
          d.add(cc, ws[i].second);
          d.add(cc, ws[j].second);
        }
      break;
    case SquidShape::LargeIntersection:
      for (const auto& [c, a] : ws) d.add(-(c * c), a);
      for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j) {
          Rat cc = ws[i].first * ws[j].first;
          d.add(-cc, ws[i].second.set_union(ws[j].second));
          d.add(-cc, *inst.a0);
        }
      break;
    case SquidShape::CosizeOne:
      for (const auto& [c, a] : ws) d.add(-(c * c), a);
      for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j) {
          Rat cc = ws[i].first * ws[j].first;
          d.add(-cc, *inst.a0);
          d.add(-cc, ws[i].second.set_intersection(ws[j].second));
        }
      break;
    case SquidShape::ClassicOctopus: {
      std::vector<Rat> c(inst.n - 1, Rat(0));
      for (std::size_t i = 0; i < inst.sets.size(); ++i)
        c[inst.sets[i].members()[0] - 2] += inst.weights[i];
      return octopus_delta(inst.n, c);
    }
    case SquidShape::General:
      break;
  }
  return d;
}

}  // namespace

AlphaCombo squid_delta(const SquidInstance& inst) {
  inst.validate();
  AlphaCombo d = squid_general(inst.n, inst.weighted_sets());
  if (inst.shape != SquidShape::General) {
    require(combo_equal(d, squid_theorem_form(inst)),
            "general squid difference does not match the theorem form");
  }
  return d;
}

TheoremReport psd_sweep(const AlphaCombo& delta) {
  TheoremReport rep;
  VertexSet e = delta.support();
  rep.support_size = e.size();
  if (e.empty()) return rep;  // zero element, trivially PSD
  if (e.size() > 8) {
    rep.undecided = true;
    return rep;
  }
  // relabel the carrier to [|E|]; collected terms only (individual entries
  // may cancel and mention vertices outside the support)
  std::vector<int> slot(delta.degree + 1, 0);
  const auto& mem = e.members();
  for (std::size_t i = 0; i < mem.size(); ++i) slot[mem[i]] = static_cast<int>(i) + 1;
  AlphaCombo local;
  local.degree = e.size();
  for (const auto& [a, c] : normalized(delta)) {
    std::vector<int> img;
    for (int v : a.members()) img.push_back(slot[v]);
    local.add(c, VertexSet(std::move(img)));
  }
  std::vector<Partition> mus = partitions_of(e.size());
  std::stable_sort(mus.begin(), mus.end(),
                   [](const Partition& x, const Partition& y) {
                     return hook_length_dimension(x) < hook_length_dimension(y);
                   });
  for (const Partition& mu : mus) {
    const IrrepMatrices& rep2 = cached_irrep(mu);
    PsdVerdict v = certify_psd_matrix(local.act(rep2));
    if (!v.psd && rep.psd) {
      rep.psd = false;
      rep.witness = mu;
    }
    rep.per_partition.push_back({mu, std::move(v)});
  }
  return rep;
}

TheoremReport verify_theorem(const SquidInstance& inst) {
  require(inst.shape != SquidShape::General,
          "verify_theorem needs one of the proven shapes");
  inst.validate();
  Rank1Report r1 = standard_rank1_check(inst);  // runs before the sweep
  TheoremReport rep = psd_sweep(squid_delta(inst));
  rep.rank1_ok = r1.rank <= 1 && r1.matches_octopus;
  return rep;
}

Rank1Report standard_rank1_check(const SquidInstance& inst) {
  inst.validate();
  Rank1Report rep;
  rep.x.assign(inst.n - 1, Rat(0));
  for (const auto& [c, a] : inst.weighted_sets())
    for (int v : a.members()) rep.x[v - 2] += c;
  AlphaCombo delta = squid_delta(inst);
  RatMat lhs = delta.standard_matrix();
  RatMat rhs = octopus_delta(inst.n, rep.x).standard_matrix();
  rep.matches_octopus = (lhs == rhs);
  rep.rank = rank(lhs);
  rep.trace = lhs.trace();
  // the explicit rank-1 matrix has diagonal (C^2, x_2^2, ..., x_n^2)
  Rat xsum = 0, xsq = 0;
  for (const Rat& x : rep.x) {
    xsum += x;
    xsq += x * x;
  }
  require(rep.trace == xsum * xsum + xsq,
          "rank-1 trace does not match (sum x)^2 + sum x^2");
  return rep;
}

CounterexampleReport counterexample_report(int which) {
  require(which == 1 || which == 2, "counterexample index must be 1 or 2");
  CounterexampleReport rep;
  rep.which = which;
  if (which == 1) {
    SquidInstance inst;
    inst.n = 4;
    inst.shape = SquidShape::General;
    inst.sets = {VertexSet({2}), VertexSet({2, 3, 4})};
    inst.weights = {Rat(1), Rat(1)};
    AlphaCombo u = squid_delta(inst);
    // U = 4 alpha_{1,2} + 4 alpha_{[4]} - 6 alpha_{2,3,4} + alpha_{3,4}
    AlphaCombo expected;
    expected.degree = 4;
    expected.add(Rat(4), VertexSet({1, 2}));
    expected.add(Rat(4), VertexSet::range(1, 4));
    expected.add(Rat(-6), VertexSet({2, 3, 4}));
    expected.add(Rat(1), VertexSet({3, 4}));
    require(combo_equal(u, expected), "failure-example element does not match");
    std::ostringstream detail;
    bool ok = true;
    for (const Partition& mu : partitions_of(4)) {
      const IrrepMatrices& irrep = cached_irrep(mu);
      PsdVerdict v = certify_psd_matrix(u.act(irrep));
      if (mu == Partition({2, 2})) {
        rep.char_poly_22 = v.char_poly;
        RealRootedPoly p(v.char_poly);
        auto low = p.smallest(default_root_eps());
        rep.min_eigenvalue = low.mid();
        // the least eigenvalue is exactly -2: p(-2) = 0 and nothing below
        Rat at = 0, pw = 1;
        for (const Rat& c : v.char_poly) {
          at += c * pw;
          pw *= -2;
        }
        bool exact = (at == 0) && (p.count_smaller(Rat(-2)) == 0);
        ok = ok && exact && !v.psd;
        detail << mu.str() << ": min eigenvalue exactly -2; ";
      } else {
        ok = ok && v.psd;
        detail << mu.str() << ": " << v.str() << "; ";
      }
    }
    rep.confirmed = ok;
    rep.detail = detail.str();
  } else {
    SquidInstance inst;
    inst.n = 6;
    inst.shape = SquidShape::General;
    inst.sets = {VertexSet({2, 3, 4, 5, 6}), VertexSet({2, 3}), VertexSet({4, 5, 6})};
    inst.weights = {make_rat(3, 20), make_rat(1, 10), make_rat(1, 60)};
    require(inst.capital_c() == 1, "example 2 has C = 1");
    AlphaCombo u = squid_delta(inst);
    std::map<VertexSet, Rat> coef = normalized(u);
    require(coef.at(VertexSet({2, 3, 4, 5, 6})) == -make_rat(23, 120),
            "alpha_{2..6} coefficient");
    require(coef.at(VertexSet({2, 3})) == -make_rat(29, 240),
            "alpha_{2,3} coefficient");
    require(coef.at(VertexSet({4, 5, 6})) == -make_rat(1, 360),
            "alpha_{4,5,6} coefficient");
    for (std::size_t i = 0; i < inst.sets.size(); ++i)
      require(coef.at(inst.sets[i].with(1)) == inst.weights[i],
              "left-hand side coefficient");
    const IrrepMatrices& irrep = cached_irrep(Partition({4, 2}));
    require(irrep.dim() == 9, "V_(4,2) has dimension 9");
    RealRootedPoly p(char_poly(u.act(irrep)));
    auto low = p.smallest(default_root_eps());
    rep.min_eigenvalue = low.mid();
    rep.confirmed = (rep.min_eigenvalue > -0.006 && rep.min_eigenvalue < -0.004);
    std::ostringstream detail;
    detail << "min eigenvalue on V_(4,2): " << rep.min_eigenvalue;
    rep.detail = detail.str();
  }
  return rep;
}

namespace detail {
std::vector<std::pair<VertexSet, Rat>> pivot_reduce_edges(
    const WeightedHypergraph& g, int pivot);
}

AuditReport audit_induction_step(const WeightedHypergraph& g, int pivot) {
  AuditReport rep;
  int n = g.n();
  require(n >= 3, "audit needs n >= 3");
  require(pivot >= 1 && pivot <= n, "pivot out of range");
  VertexSet b = g.common_core().without(pivot);
  require(g.has_b_shape(b), "hypergraph does not have the B-core shape");

  // S_G as an alpha combination
  AlphaCombo sg;
  sg.degree = n;
  for (const auto& [a, w] : g.edges()) sg.add(w, a);

  // reduced weights; C = 0 means no positive-weight edge at the pivot and
  // the step is trivial (H keeps the non-pivot edges as they are)
  // C = sum over pivot edges of weight * (edge size - 1): the pivot edge
  // B u {pivot} counts |B| and B u {pivot, m} counts |B| + 1.
  Rat cap = 0;
  for (const auto& [a, w] : g.edges())
    if (a.contains(pivot)) cap += w * Rat(a.size() - 1);
  std::vector<std::pair<VertexSet, Rat>> h_edges;
  if (cap == 0) {
    rep.trivially_passed = true;
    for (const auto& [a, w] : g.edges())
      if (!a.contains(pivot)) h_edges.emplace_back(a, w);
  } else {
    h_edges = detail::pivot_reduce_edges(g, pivot);
  }

  AlphaCombo sh;  // S_{H u {pivot}} in the original labels
  sh.degree = n;
  for (const auto& [a, w] : h_edges) sh.add(w, a);

  AlphaCombo diff;
  diff.degree = n;
  for (const auto& [c, a] : sg.terms) diff.add(c, a);
  for (const auto& [c, a] : sh.terms) diff.add(-c, a);

  // the difference is, up to 1/C, a large-intersection squid difference
  if (cap != 0) {
    SquidInstance inst;
    inst.n = n;
    inst.shape = SquidShape::LargeIntersection;
    auto swap_label = [&](const VertexSet& s) {
      std::vector<int> m;
      for (int v : s.members()) m.push_back(v == 1 ? pivot : v == pivot ? 1 : v);
      return VertexSet(std::move(m));
    };
    inst.a0 = swap_label(b);
    inst.c0 = g.weight_of(b.with(pivot)).value_or(Rat(0));
    for (int v = 1; v <= n; ++v) {
      if (v == pivot || b.contains(v)) continue;
      inst.sets.push_back(swap_label(b.with(v)));
      inst.weights.push_back(g.weight_of(b.with(pivot).with(v)).value_or(Rat(0)));
    }
    AlphaCombo squid = squid_delta(inst);
    AlphaCombo scaled;
    scaled.degree = n;
    for (const auto& [c, a] : diff.terms) {
      std::vector<int> m;
      for (int v : a.members()) m.push_back(v == 1 ? pivot : v == pivot ? 1 : v);
      scaled.add(c * cap, VertexSet(std::move(m)));
    }
    require(combo_equal(scaled, squid),
            "difference is not the expected squid element");
  }
  TheoremReport sweep = psd_sweep(diff);
  rep.difference_psd = !sweep.undecided && sweep.psd;

  // rank <= 1 on the standard representation
  rep.standard_rank = rank(diff.standard_matrix());
  rep.rank1_ok = rep.standard_rank <= 1;

  // interlacing: lambda_min(S_H, V_(n-2,1)) >= lambda_min(S_G, V_(n-1,1)) - 1e-9
  AlphaCombo sh_small;  // S_H on [n-1] via the order-preserving relabel
  sh_small.degree = n - 1;
  for (const auto& [a, w] : h_edges) {
    std::vector<int> m;
    for (int v : a.members()) m.push_back(v < pivot ? v : v - 1);
    sh_small.add(w, VertexSet(std::move(m)));
  }
  std::vector<int> pg = {n - 1, 1}, ph = {n - 2, 1};
  const IrrepMatrices& rep_g = cached_irrep(Partition(pg));
  const IrrepMatrices& rep_h = cached_irrep(Partition(ph));
  auto lam = [&](const AlphaCombo& combo, const IrrepMatrices& irr) {
    RealRootedPoly p(char_poly(combo.act(irr)));
    return p.smallest(default_root_eps()).mid();
  };
  rep.lambda_min_g = lam(sg, rep_g);
  rep.lambda_min_h = lam(sh_small, rep_h);
  rep.interlace_ok = rep.lambda_min_h >= rep.lambda_min_g - 1e-9;
  return rep;
}

}  // namespace symgap
