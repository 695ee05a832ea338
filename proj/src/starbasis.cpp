#include "symgap/starbasis.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "symgap/seminormal.hpp"

namespace symgap {

std::string StarTuple::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < sym.size(); ++i) {
    if (i) os << ',';
    if (sym[i] == 0)
      os << '*';
    else
      os << sym[i];
  }
  os << ')';
  return os.str();
}

std::vector<StarTuple> star_basis(int arity, int extra_points) {
  require((arity == 3 && extra_points == 4) || (arity == 2 && extra_points == 3),
          "star_basis supports (3,4) and (2,3) only");
  std::vector<StarTuple> out;
  std::vector<int> cur(arity, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == arity) {
      out.push_back(StarTuple{cur});
      return;
    }
    for (int code = 0; code <= extra_points + 1; ++code) {
      if (code != 0) {
        bool used = false;
        for (int q = 0; q < pos; ++q)
          if (cur[q] == code) used = true;
        if (used) continue;
      }
      cur[pos] = code;
      rec(pos + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

PolyMat alpha_star_action(const SetSymbols& s, const std::vector<StarTuple>& basis,
                          int extra_points) {
  for (int code : s)
    require(code >= 1 && code <= extra_points + 1, "bad symbol code in B");
  int nb_size = static_cast<int>(s.size());
  const int n = static_cast<int>(basis.size());
  const int arity = static_cast<int>(basis[0].sym.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[basis[i].sym] = i;
  auto in_s = [&](int code) {
    return std::find(s.begin(), s.end(), code) != s.end();
  };

  PolyMat out(n, 1);
  IntPoly size_b = IntPoly::k_plus(nb_size - 1);  // |B| = k - 1 + |S|
  IntPoly diag = IntPoly::k() * size_b;           // k |B|

  for (int cv = 0; cv < n; ++cv) {
    const StarTuple& v = basis[cv];
    int n_star = 0, n_b = 0;
    std::vector<int> refill;  // positions with symbol in {*} u S
    for (int p = 0; p < arity; ++p) {
      if (v.sym[p] == 0) ++n_star;
      if (v.sym[p] == 0 || in_s(v.sym[p])) {
        ++n_b;
        refill.push_back(p);
      }
    }
    out.at(cv, cv) += diag;

    // c_B(v) = (|B|-n_B)! (k-1)...(k-n_star) / (|B|-1)!, with every
    // denominator factor cancelling against the numerator except possibly k.
    std::vector<int> numerator;  // constants j of factors (k - j)
    for (int j = 1; j <= n_star; ++j) numerator.push_back(j);
    IntPoly num(1);
    int kpow = 0;
    if (n_b == 0) {
      num = size_b;  // (|B|)!/(|B|-1)! = |B|
    } else {
      for (int i = 1; i <= n_b - 1; ++i) {
        int e = nb_size - 1 - i;  // factor (k + e) of (|B|-1)...(|B|-n_B+1)
        if (e == 0) {
          ++kpow;
          continue;
        }
        require(e < 0, "non-cancelling denominator factor");
        auto it = std::find(numerator.begin(), numerator.end(), -e);
        require(it != numerator.end(),
                "denominator factor other than a power of k");
        numerator.erase(it);
      }
    }
    require(kpow <= 1, "denominator beyond a single power of k");
    for (int j : numerator) num = num * IntPoly::k_plus(-j);
    IntPoly scaled = kpow == 1 ? num : num * IntPoly::k();  // k * c_B(v)

    // T_B(v): refillable coordinates take any distinct assignment over
    // {*} u S (stars repeat); the rest match v exactly.
    std::vector<int> pool = {0};
    for (int code : s) pool.push_back(code);
    std::vector<int> cur = v.sym;
    std::function<void(std::size_t)> rec = [&](std::size_t r) {
      if (r == refill.size()) {
        out.at(index.at(cur), cv) += -scaled;
        return;
      }
      for (int code : pool) {
        if (code != 0) {
          bool used = false;
          for (std::size_t q = 0; q < cur.size(); ++q)
            if (static_cast<int>(q) != refill[r] && cur[q] == code &&
                (std::find(refill.begin() + r + 1, refill.end(),
                           static_cast<int>(q)) == refill.end()))
              used = true;
          if (used) continue;
        }
        int save = cur[refill[r]];
        cur[refill[r]] = code;
        rec(r + 1);
        cur[refill[r]] = save;
      }
    };
    rec(0);
  }
  return out;
}

GammaPattern parse_pattern(const std::string& name) {
  if (name == "ijlm") return GammaPattern::ijlm;
  if (name == "iijl") return GammaPattern::iijl;
  if (name == "0ijl") return GammaPattern::zero_ijl;
  throw std::invalid_argument("unknown gamma pattern '" + name + "'");
}

std::string pattern_name(GammaPattern p) {
  switch (p) {
    case GammaPattern::ijlm: return "ijlm";
    case GammaPattern::iijl: return "iijl";
    case GammaPattern::zero_ijl: return "0ijl";
  }
  return "?";
}

namespace {

struct PatternData {
  int arity, extra_points;
  std::vector<int> indices;  // the multiset {i,j,l,m} with 0 = A_0
};

PatternData pattern_data(GammaPattern p) {
  switch (p) {
    case GammaPattern::ijlm: return {3, 4, {1, 2, 3, 4}};
    case GammaPattern::iijl: return {2, 3, {1, 1, 2, 3}};
    case GammaPattern::zero_ijl: return {2, 3, {0, 1, 2, 3}};
  }
  throw std::logic_error("bad pattern");
}

// distinct unordered pairings {(e,f),(e',f')} of a sorted 4-index multiset
std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pairings(
    std::vector<int> idx) {
  std::sort(idx.begin(), idx.end());
  auto mk = [&](int a, int b, int c, int d) {
    std::pair<int, int> p{idx[a], idx[b]}, q{idx[c], idx[d]};
    return p <= q ? std::make_pair(p, q) : std::make_pair(q, p);
  };
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out = {
      mk(0, 1, 2, 3), mk(0, 2, 1, 3), mk(0, 3, 1, 2)};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void add_scaled(PolyMat& acc, const PolyMat& m, const IntPoly& c) {
  for (std::size_t i = 0; i < acc.a.size(); ++i)
    if (!m.a[i].is_zero()) acc.a[i] += m.a[i] * c;
}

PolyMat poly_matmul(const PolyMat& a, const PolyMat& b) {
  PolyMat r(a.n, a.denom_pow + b.denom_pow);
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      const IntPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.n; ++j) {
        const IntPoly& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

// 2k * w_ef
IntPoly two_k_w(int e, int f) {
  IntPoly k = IntPoly::k();
  if (e == 0 && f == 0) return k * k * IntPoly::k_plus(-1);        // k^2(k-1)
  if (e == f) return k * k * IntPoly::k_plus(1);                   // k^2(k+1)
  if (e == 0) return IntPoly(2) * k * (k * k - IntPoly(1));        // 2k(k^2-1)
  return IntPoly(2) * k * (k * k + k - IntPoly(1));                // 2k(k^2+k-1)
}

}  // namespace

PolyMat build_gamma(GammaPattern pattern) {
  PatternData pd = pattern_data(pattern);
  std::vector<StarTuple> basis = star_basis(pd.arity, pd.extra_points);
  const int n = static_cast<int>(basis.size());

  std::map<SetSymbols, PolyMat> alpha_cache;
  auto alpha_of = [&](SetSymbols s) -> const PolyMat& {
    std::sort(s.begin(), s.end());
    auto it = alpha_cache.find(s);
    if (it == alpha_cache.end())
      it = alpha_cache.emplace(s, alpha_star_action(s, basis, pd.extra_points))
               .first;
    return it->second;
  };
  auto set_of = [&](int e) {
    return e == 0 ? SetSymbols{} : SetSymbols{e + 1};
  };
  auto with_one = [&](int e) {
    return e == 0 ? SetSymbols{1} : SetSymbols{1, e + 1};
  };

  IntPoly k = IntPoly::k();
  // k * M(U_ef) per the four cases of the U_ij table
  auto k_u = [&](int e, int f) {
    PolyMat m(n, 1);
    if (e == 0 && f == 0) {
      add_scaled(m, alpha_of(with_one(0)), IntPoly::k_plus(-1));
      add_scaled(m, alpha_of(set_of(0)), -k);
    } else if (e == f) {
      add_scaled(m, alpha_of(with_one(e)), k);
      add_scaled(m, alpha_of(set_of(e)), -IntPoly::k_plus(1));
    } else if (e == 0) {
      add_scaled(m, alpha_of(with_one(0)), k);
      add_scaled(m, alpha_of(with_one(f)), IntPoly::k_plus(-1));
      add_scaled(m, alpha_of(set_of(0)), -IntPoly::k_plus(1));
      add_scaled(m, alpha_of(set_of(f)), -k);
    } else {
      add_scaled(m, alpha_of(with_one(e)), k);
      add_scaled(m, alpha_of(with_one(f)), k);
      add_scaled(m, alpha_of(set_of(e)), -k);
      add_scaled(m, alpha_of(set_of(f)), -k);
      add_scaled(m, alpha_of(SetSymbols{e + 1, f + 1}), IntPoly(-1));
      add_scaled(m, alpha_of(set_of(0)), IntPoly(-1));
    }
    return m;
  };
  // T_ef = 2k(U_ef - w_ef)
  std::map<std::pair<int, int>, PolyMat> t_cache;
  auto t_of = [&](std::pair<int, int> ef) -> const PolyMat& {
    auto it = t_cache.find(ef);
    if (it == t_cache.end()) {
      PolyMat t = k_u(ef.first, ef.second);
      for (auto& e : t.a) e = e * IntPoly(2);
      IntPoly w2k = two_k_w(ef.first, ef.second);
      for (int i = 0; i < n; ++i) t.at(i, i) += -w2k;
      it = t_cache.emplace(ef, std::move(t)).first;
    }
    return it->second;
  };

  // 8 k^2 Gamma = sum over ordered splittings of [8k^2 w w' - (T T' + T' T)];
  // each unordered pairing appears in both orders in our three patterns.
  PolyMat gamma8(n, 2);
  for (const auto& [p, q] : pairings(pd.indices)) {
    require(p != q, "unexpected self-paired splitting");
    IntPoly ww = two_k_w(p.first, p.second) * two_k_w(q.first, q.second);
    for (int i = 0; i < n; ++i) gamma8.at(i, i) += IntPoly(4) * ww;
    PolyMat tp_tq = poly_matmul(t_of(p), t_of(q));
    PolyMat tq_tp = poly_matmul(t_of(q), t_of(p));
    for (std::size_t i = 0; i < gamma8.a.size(); ++i) {
      gamma8.a[i] += (tp_tq.a[i] + tq_tp.a[i]) * IntPoly(-2);
    }
  }
  PolyMat out(n, 2);
  for (std::size_t i = 0; i < gamma8.a.size(); ++i)
    out.a[i] = gamma8.a[i].div_exact(Int(8));
  return out;
}

ConcreteStarModule::ConcreteStarModule(int k, int arity, int extra_points)
    : k_(k), arity_(arity), s_(extra_points), n_(k + extra_points),
      basis_(star_basis(arity, extra_points)) {
  require(k >= arity + 1, "concrete module needs k >= arity + 1");
  std::vector<int> cur;
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == arity_) {
      tuple_index_[cur] = static_cast<int>(tuples_.size());
      tuples_.push_back(cur);
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();
  for (std::size_t i = 0; i < basis_.size(); ++i)
    pattern_index_[basis_[i].sym] = static_cast<int>(i);
}

VertexSet ConcreteStarModule::concrete_set(const SetSymbols& s) const {
  std::vector<int> m;
  for (int v = 2; v <= k_; ++v) m.push_back(v);  // A_0
  for (int code : s) m.push_back(vertex_of_symbol(code));
  return VertexSet(std::move(m));
}

std::map<int, Int> ConcreteStarModule::star_vector(const StarTuple& t) const {
  std::map<int, Int> vec;
  std::vector<int> cur(arity_);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == arity_) {
      vec[tuple_index_.at(cur)] = 1;
      return;
    }
    if (t.sym[pos] != 0) {
      cur[pos] = vertex_of_symbol(t.sym[pos]);
      rec(pos + 1);
      return;
    }
    for (int v = 2; v <= k_; ++v) {
      bool used = false;
      for (int q = 0; q < pos; ++q)
        if (cur[q] == v) used = true;
      if (!used) {
        cur[pos] = v;
        rec(pos + 1);
      }
    }
  };
  rec(0);
  return vec;
}

std::map<int, Int> ConcreteStarModule::apply_j(
    const VertexSet& b, const std::map<int, Int>& vec) const {
  // coset chain: J_{B_m} = (id + sum_{i<m} (b_i b_m)) J_{B_{m-1}}
  std::map<int, Int> cur = vec;
  const auto& mem = b.members();
  for (std::size_t m = 1; m < mem.size(); ++m) {
    std::map<int, Int> next = cur;
    for (std::size_t i = 0; i < m; ++i) {
      int x = mem[i], y = mem[m];
      for (const auto& [ti, c] : cur) {
        std::vector<int> t = tuples_[ti];
        for (int& v : t) v = v == x ? y : v == y ? x : v;
        next[tuple_index_.at(t)] += c;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

RatMat ConcreteStarModule::decompose(
    const std::vector<std::map<int, Rat>>& columns) const {
  const int nb = static_cast<int>(basis_.size());
  RatMat out(nb, static_cast<int>(columns.size()));
  for (std::size_t cv = 0; cv < columns.size(); ++cv) {
    // group tuple coefficients by symbol pattern; a vector inside the module
    // must be constant on every star orbit
    std::map<int, Rat> pattern_coeff;
    std::map<int, long> pattern_count;
    for (const auto& [ti, c] : columns[cv]) {
      if (c == 0) continue;
      std::vector<int> pat(arity_);
      for (int p = 0; p < arity_; ++p) {
        int v = tuples_[ti][p];
        pat[p] = v == 1 ? 1 : v > k_ ? v - k_ + 1 : 0;
      }
      auto it = pattern_index_.find(pat);
      require(it != pattern_index_.end(), "vector leaves the star module");
      auto [pit, fresh] = pattern_coeff.emplace(it->second, c);
      require(fresh || pit->second == c,
              "vector is not constant on a star orbit");
      ++pattern_count[it->second];
    }
    for (const auto& [bi, c] : pattern_coeff) {
      long expect = 1;
      int stars = 0;
      for (int sym : basis_[bi].sym)
        if (sym == 0) ++stars;
      for (int i = 0; i < stars; ++i) expect *= (k_ - 1 - i);
      require(pattern_count[bi] == expect, "incomplete star orbit");
      out.at(bi, static_cast<int>(cv)) = c;
    }
  }
  return out;
}

RatMat ConcreteStarModule::alpha_matrix(const SetSymbols& s) const {
  VertexSet b = concrete_set(s);
  std::vector<std::map<int, Rat>> cols(basis_.size());
  Rat inv_fact = make_rat(Int(1), factorial(b.size() - 1));
  for (std::size_t cv = 0; cv < basis_.size(); ++cv) {
    std::map<int, Int> vec = star_vector(basis_[cv]);
    std::map<int, Int> jv = apply_j(b, vec);
    std::map<int, Rat>& col = cols[cv];
    for (const auto& [ti, c] : vec) col[ti] += Rat(b.size()) * Rat(c);
    for (const auto& [ti, c] : jv) col[ti] -= inv_fact * Rat(c);
  }
  return decompose(cols);
}

RatMat ConcreteStarModule::alpha_matrix_bruteforce(const SetSymbols& s) const {
  VertexSet b = concrete_set(s);
  std::vector<Permutation> group = enumerate_sym(b, n_);
  std::vector<std::map<int, Rat>> cols(basis_.size());
  Rat inv_fact = make_rat(Int(1), factorial(b.size() - 1));
  for (std::size_t cv = 0; cv < basis_.size(); ++cv) {
    std::map<int, Int> vec = star_vector(basis_[cv]);
    std::map<int, Rat>& col = cols[cv];
    for (const auto& [ti, c] : vec) col[ti] += Rat(b.size()) * Rat(c);
    for (const Permutation& sigma : group)
      for (const auto& [ti, c] : vec) {
        std::vector<int> t = tuples_[ti];
        for (int& v : t) v = sigma.apply(v);
        col[tuple_index_.at(t)] -= inv_fact * Rat(c);
      }
  }
  return decompose(cols);
}

namespace {

Rat w_scalar(int e, int f, int k) {
  if (e == 0 && f == 0) return make_rat(static_cast<long>(k - 1) * k, 2);
  if (e == f) return make_rat(static_cast<long>(k) * (k + 1), 2);
  if (e == 0) return Rat(static_cast<long>(k) * k - 1);
  return Rat(static_cast<long>(k) * k + k - 1);
}

}  // namespace

RatMat ConcreteStarModule::gamma_matrix(GammaPattern pattern) const {
  PatternData pd = pattern_data(pattern);
  require(pd.arity == arity_ && pd.extra_points == s_,
          "pattern does not match the module shape");
  std::map<SetSymbols, RatMat> cache;
  auto alpha_of = [&](SetSymbols s) -> const RatMat& {
    std::sort(s.begin(), s.end());
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, alpha_matrix(s)).first;
    return it->second;
  };
  const int nb = static_cast<int>(basis_.size());
  auto u_of = [&](int e, int f) {
    RatMat m(nb, nb);
    Rat kk(k_);
    if (e == 0 && f == 0) {
      m = alpha_of({1}) * Rat(k_ - 1) - alpha_of({}) * kk;
    } else if (e == f) {
      m = alpha_of({1, e + 1}) * kk - alpha_of({e + 1}) * Rat(k_ + 1);
    } else if (e == 0) {
      m = alpha_of({1}) * kk + alpha_of({1, f + 1}) * Rat(k_ - 1) -
          alpha_of({}) * Rat(k_ + 1) - alpha_of({f + 1}) * kk;
    } else {
      m = (alpha_of({1, e + 1}) + alpha_of({1, f + 1}) - alpha_of({e + 1}) -
           alpha_of({f + 1})) *
              kk -
          alpha_of({e + 1, f + 1}) - alpha_of({});
    }
    return m;
  };
  RatMat id = RatMat::identity(nb);
  RatMat gamma(nb, nb);
  for (const auto& [p, q] : pairings(pd.indices)) {
    Rat wp = w_scalar(p.first, p.second, k_);
    Rat wq = w_scalar(q.first, q.second, k_);
    RatMat tp = u_of(p.first, p.second) - id * wp;
    RatMat tq = u_of(q.first, q.second) - id * wq;
    gamma = gamma + (id * (wp * wq) - jordan(tp, tq)) * Rat(2);
  }
  return gamma;
}

SmallKCase parse_small_k_case(const std::string& name) {
  if (name == "00ij") return SmallKCase::g00ij;
  if (name == "0iij") return SmallKCase::g0iij;
  if (name == "0ijl") return SmallKCase::g0ijl;
  if (name == "iijl") return SmallKCase::giijl;
  if (name == "ijlm") return SmallKCase::gijlm;
  throw std::invalid_argument("unknown small-k case '" + name + "'");
}

std::string small_k_case_name(SmallKCase c) {
  switch (c) {
    case SmallKCase::g00ij: return "00ij";
    case SmallKCase::g0iij: return "0iij";
    case SmallKCase::g0ijl: return "0ijl";
    case SmallKCase::giijl: return "iijl";
    case SmallKCase::gijlm: return "ijlm";
  }
  return "?";
}

SmallKReport verify_small_k(SmallKCase c, int k) {
  std::vector<int> indices;
  int extras = 0;
  std::vector<int> mu1_allowed;
  switch (c) {
    case SmallKCase::g00ij:
      require(k >= 2 && k <= 5, "00ij is checked for k = 2..5");
      indices = {0, 0, 1, 2};
      extras = 2;
      mu1_allowed = {k};
      break;
    case SmallKCase::g0iij:
      require(k == 2, "0iij is checked for k = 2");
      indices = {0, 1, 1, 2};
      extras = 2;
      mu1_allowed = {k};
      break;
    case SmallKCase::g0ijl:
      require(k == 2, "0ijl is checked for k = 2");
      indices = {0, 1, 2, 3};
      extras = 3;
      mu1_allowed = {k, k + 1};
      break;
    case SmallKCase::giijl:
      require(k == 2, "iijl is checked for k = 2");
      indices = {1, 1, 2, 3};
      extras = 3;
      mu1_allowed = {k + 1};
      break;
    case SmallKCase::gijlm:
      require(k >= 2 && k <= 3, "ijlm is checked for k = 2, 3");
      indices = {1, 2, 3, 4};
      extras = 4;
      mu1_allowed = {k + 1, k + 2};
      break;
  }
  int esize = k + extras;  // E = A_0 u {1} u extra points = [k + extras]
  VertexSet a0 = VertexSet::range(2, k);
  auto set_of = [&](int e) { return e == 0 ? a0 : a0.with(k + e); };

  // concrete U_ef elements in Q[S_E]
  auto u_elem = [&](int e, int f) {
    Rat kk(k);
    if (e == 0 && f == 0)
      return alpha(a0.with(1), esize) * Rat(k - 1) - alpha(a0, esize) * kk;
    if (e == f)
      return alpha(set_of(e).with(1), esize) * kk -
             alpha(set_of(e), esize) * Rat(k + 1);
    if (e == 0)
      return alpha(a0.with(1), esize) * kk +
             alpha(set_of(f).with(1), esize) * Rat(k - 1) -
             alpha(a0, esize) * Rat(k + 1) - alpha(set_of(f), esize) * kk;
    return (alpha(set_of(e).with(1), esize) + alpha(set_of(f).with(1), esize) -
            alpha(set_of(e), esize) - alpha(set_of(f), esize)) *
               kk -
           alpha(set_of(e).set_union(set_of(f)), esize) - alpha(a0, esize);
  };

  SmallKReport rep;
  rep.pattern = c == SmallKCase::gijlm   ? GammaPattern::ijlm
                : c == SmallKCase::giijl ? GammaPattern::iijl
                                         : GammaPattern::zero_ijl;
  rep.k = k;

  // flat group-algebra element (the contract) ...
  AlgebraElement gamma(esize);
  for (const auto& [p, q] : pairings(indices)) {
    Rat wp = w_scalar(p.first, p.second, k);
    Rat wq = w_scalar(q.first, q.second, k);
    AlgebraElement tp = u_elem(p.first, p.second) - AlgebraElement::scalar(esize, wp);
    AlgebraElement tq = u_elem(q.first, q.second) - AlgebraElement::scalar(esize, wq);
    gamma = gamma + (AlgebraElement::scalar(esize, wp * wq) - jordan_product(tp, tq)) * Rat(2);
  }
  rep.gamma = gamma;

  // ... and matrices per irrep assembled through the homomorphism
  for (const Partition& mu : partitions_of(esize)) {
    if (std::find(mu1_allowed.begin(), mu1_allowed.end(), mu.first_row()) ==
        mu1_allowed.end())
      continue;
    const IrrepMatrices& irrep = cached_irrep(mu);
    RatMat id = RatMat::identity(irrep.dim());
    RatMat m(irrep.dim(), irrep.dim());
    std::map<std::pair<int, int>, RatMat> ucache;
    auto u_mat = [&](std::pair<int, int> ef) -> const RatMat& {
      auto it = ucache.find(ef);
      if (it == ucache.end())
        it = ucache.emplace(ef, act(u_elem(ef.first, ef.second), irrep)).first;
      return it->second;
    };
    for (const auto& [p, q] : pairings(indices)) {
      Rat wp = w_scalar(p.first, p.second, k);
      Rat wq = w_scalar(q.first, q.second, k);
      RatMat tp = u_mat(p) - id * wp;
      RatMat tq = u_mat(q) - id * wq;
      m = m + (id * (wp * wq) - jordan(tp, tq)) * Rat(2);
    }
    if (esize <= 6) {
      require(m == act(gamma, irrep),
              "assembled matrix disagrees with the flat element");
    }
    PsdVerdict v = certify_psd_matrix(m);
    if (!v.psd) rep.psd = false;
    rep.per_partition.emplace_back(mu, std::move(v));
  }
  return rep;
}

}  // namespace symgap
