#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <random>

#include "symgap/certificate.hpp"
#include "symgap/rootisolate.hpp"
#include "symgap/seminormal.hpp"
#include "symgap/starbasis.hpp"

using namespace symgap;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x9a77aull);
  return gen;
}

// integer Bareiss determinant, used as an independent cross-check
Int bareiss_det(int n, std::vector<Int> a) {
  Int prev = 1;
  int sign = 1;
  for (int c = 0; c < n - 1; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (a[r * n + c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[c * n + j]);
      sign = -sign;
    }
    for (int r = c + 1; r < n; ++r)
      for (int j = c + 1; j < n; ++j) {
        Int num = a[r * n + j] * a[c * n + c] - a[r * n + c] * a[c * n + j];
        mpz_divexact(a[r * n + j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[c * n + c];
  }
  return sign > 0 ? a[n * n - 1] : -a[n * n - 1];
}

}  // namespace

TEST_CASE("star_basis counts and census") {
  std::vector<StarTuple> triples = star_basis(3, 4);
  CHECK(triples.size() == 136);
  std::vector<StarTuple> pairs = star_basis(2, 3);
  CHECK(pairs.size() == 21);
  // census by star count: 60 + 60 + 15 + 1 and 12 + 8 + 1
  auto census = [](const std::vector<StarTuple>& b) {
    std::vector<int> bystars(4, 0);
    for (const StarTuple& t : b) {
      int stars = 0;
      for (int s : t.sym)
        if (s == 0) ++stars;
      ++bystars[stars];
    }
    return bystars;
  };
  std::vector<int> c3 = census(triples);
  CHECK(c3[0] == 60);
  CHECK(c3[1] == 60);
  CHECK(c3[2] == 15);
  CHECK(c3[3] == 1);
  std::vector<int> c2 = census(pairs);
  CHECK(c2[0] == 12);
  CHECK(c2[1] == 8);
  CHECK(c2[2] == 1);
  // deterministic lexicographic order
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i)
    CHECK(pairs[i].sym < pairs[i + 1].sym);
  CHECK_THROWS(star_basis(3, 3));
}

TEST_CASE("alpha_star_action: basis lies in ker alpha_{A_0}") {
  for (auto [arity, s] : {std::pair{3, 4}, std::pair{2, 3}}) {
    std::vector<StarTuple> basis = star_basis(arity, s);
    PolyMat a0 = alpha_star_action({}, basis, s);
    for (const IntPoly& e : a0.a) CHECK(e.is_zero());
  }
}

TEST_CASE("alpha_star_action: all-ones functional is annihilated") {
  // phi(v) = |support(v)| = (k-1)(k-2)... per star count; phi(alpha_B x) = 0
  for (auto [arity, s] : {std::pair{2, 3}, std::pair{3, 4}}) {
    std::vector<StarTuple> basis = star_basis(arity, s);
    std::vector<SetSymbols> bs = {{1}, {2}, {1, 2}, {2, 3}};
    for (const SetSymbols& bset : bs) {
      PolyMat m = alpha_star_action(bset, basis, s);
      for (int col = 0; col < m.n; ++col) {
        IntPoly sum;
        for (int row = 0; row < m.n; ++row) {
          if (m.at(row, col).is_zero()) continue;
          int stars = 0;
          for (int sym : basis[row].sym)
            if (sym == 0) ++stars;
          IntPoly weight(1);
          for (int i = 0; i < stars; ++i)
            weight = weight * IntPoly::k_plus(-1 - i);
          sum += m.at(row, col) * weight;
        }
        CHECK(sum.is_zero());
      }
    }
  }
}

TEST_CASE("alpha_star_action specializes to the concrete module at k = 7") {
  for (auto [arity, s] : {std::pair{2, 3}, std::pair{3, 4}}) {
    std::vector<StarTuple> basis = star_basis(arity, s);
    ConcreteStarModule mod(7, arity, s);
    std::vector<SetSymbols> bs = {{}, {1}, {2}, {1, 3}, {2, 3}};
    for (const SetSymbols& bset : bs) {
      PolyMat sym = alpha_star_action(bset, basis, s);
      RatMat conc = mod.alpha_matrix(bset);
      // k * M(alpha_B) at k = 7 must equal 7 * concrete matrix
      for (int i = 0; i < sym.n; ++i)
        for (int j = 0; j < sym.n; ++j)
          CHECK(Rat(sym.at(i, j).eval(Int(7))) == conc.at(i, j) * 7);
    }
  }
}

TEST_CASE("concrete alpha matrix agrees with literal Sym(B) enumeration") {
  ConcreteStarModule mod(4, 2, 3);
  for (const SetSymbols& bset : {SetSymbols{1}, SetSymbols{2, 3}}) {
    CHECK(mod.alpha_matrix(bset) == mod.alpha_matrix_bruteforce(bset));
  }
  ConcreteStarModule mod7(7, 2, 3);
  CHECK(mod7.alpha_matrix({1, 2}) == mod7.alpha_matrix_bruteforce({1, 2}));
}

TEST_CASE("build_gamma specializes to concrete star modules") {
  // iijl and 0ijl over k = 3..8; ijlm spot-checked in the acceptance suite
  for (GammaPattern pat : {GammaPattern::iijl, GammaPattern::zero_ijl}) {
    PolyMat sym = build_gamma(pat);
    CHECK(sym.n == 21);
    CHECK(sym.denom_pow == 2);
    for (int k = 3; k <= 8; ++k) {
      ConcreteStarModule mod(k, 2, 3);
      RatMat conc = mod.gamma_matrix(pat);
      Int k2 = Int(k) * Int(k);
      for (int i = 0; i < 21; ++i)
        for (int j = 0; j < 21; ++j)
          CHECK(Rat(sym.at(i, j).eval(Int(k))) == conc.at(i, j) * Rat(k2));
    }
  }
}

TEST_CASE("the d-identity: trace of U on the standard representation") {
  // d = c0^2 k(k-1) + sum c_i^2 k(k+1) + sum c0 c_j (2k^2-2)
  //     + sum_{i<j} c_i c_j (2k^2+2k-2)
  std::uniform_int_distribution<int> wd(0, 5);
  int k = 4, t = 3, esize = k + t;
  VertexSet a0 = VertexSet::range(2, k);
  auto set_of = [&](int e) { return e == 0 ? a0 : a0.with(k + e); };
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Rat> c(t + 1);
    for (auto& x : c) x = Rat(wd(rng()));
    AlgebraElement u(esize);
    for (int i = 0; i <= t; ++i)
      for (int j = i; j <= t; ++j) {
        AlgebraElement uij(esize);
        Rat kk(k);
        if (i == 0 && j == 0)
          uij = alpha(a0.with(1), esize) * Rat(k - 1) - alpha(a0, esize) * kk;
        else if (i == j)
          uij = alpha(set_of(i).with(1), esize) * kk -
                alpha(set_of(i), esize) * Rat(k + 1);
        else if (i == 0)
          uij = alpha(a0.with(1), esize) * kk +
                alpha(set_of(j).with(1), esize) * Rat(k - 1) -
                alpha(a0, esize) * Rat(k + 1) - alpha(set_of(j), esize) * kk;
        else
          uij = (alpha(set_of(i).with(1), esize) +
                 alpha(set_of(j).with(1), esize) - alpha(set_of(i), esize) -
                 alpha(set_of(j), esize)) *
                    kk -
                alpha(set_of(i).set_union(set_of(j)), esize) -
                alpha(a0, esize);
        u = u + uij * (c[i] * c[j]);
      }
    Rat d = standard_rep_matrix(u).trace();
    Rat expect = c[0] * c[0] * Rat(k * (k - 1));
    for (int i = 1; i <= t; ++i) expect += c[i] * c[i] * Rat(k * (k + 1));
    for (int j = 1; j <= t; ++j)
      expect += c[0] * c[j] * Rat(2 * k * k - 2);
    for (int i = 1; i <= t; ++i)
      for (int j = i + 1; j <= t; ++j)
        expect += c[i] * c[j] * Rat(2 * k * k + 2 * k - 2);
    CHECK(d == expect);
  }
}

TEST_CASE("21x21 certificates: char poly routes agree, minimal shift <= 2") {
  for (GammaPattern pat : {GammaPattern::iijl, GammaPattern::zero_ijl}) {
    PolyMat a = build_gamma(pat);
    BiPoly p = char_poly_interpolate_zk(a);
    CHECK(p == char_poly_berkowitz_zk(a));
    CHECK(p.tc[21] == IntPoly(1));  // monic
    // constant term is +-det: cross-check by integer Bareiss at random k
    std::uniform_int_distribution<long> kd(2, 50);
    for (int trial = 0; trial < 3; ++trial) {
      Int k0(kd(rng()));
      Int det = bareiss_det(21, a.eval_entries(k0));
      Int p0 = p.tc[0].eval(k0);
      CHECK(p0 == (21 % 2 ? -det : det));
    }
    auto best = minimal_certifying_shift(p);
    REQUIRE(best.has_value());
    CHECK(best->shift <= 2);
    // soundness spot check: at k = 5 the roots are all non-negative
    RealRootedPoly at5(p.eval_k(Int(5)));
    CHECK(at5.all_roots_nonnegative());
  }
}

TEST_CASE("verify_small_k: the concrete cases at k = 2") {
  for (SmallKCase c : {SmallKCase::g00ij, SmallKCase::g0iij, SmallKCase::g0ijl,
                       SmallKCase::giijl}) {
    SmallKReport rep = verify_small_k(c, 2);
    CHECK(rep.psd);
    CHECK(!rep.per_partition.empty());
    CHECK(rep.gamma.is_symmetric());
  }
  SmallKReport ijlm2 = verify_small_k(SmallKCase::gijlm, 2);
  CHECK(ijlm2.psd);
  CHECK_THROWS(verify_small_k(SmallKCase::g0iij, 3));
  CHECK_THROWS(verify_small_k(SmallKCase::gijlm, 4));
}

TEST_CASE("verify_small_k: 00ij for k = 3") {
  SmallKReport rep = verify_small_k(SmallKCase::g00ij, 3);
  CHECK(rep.psd);
  // mu |- 5 with first row 3: (3,2) and (3,1,1)
  CHECK(rep.per_partition.size() == 2);
}

TEST_CASE("certificate text and cache round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "symgap_cache_test";
  fs::remove_all(dir);
  setenv("SYMGAP_CACHE_DIR", dir.c_str(), 1);
  GammaCertificate c = certify_gamma(GammaPattern::iijl);
  CHECK(c.result.certified);
  CHECK(c.result.shift <= 2);
  CHECK(fs::exists(dir / "gamma_iijl.cert"));
  // second call loads the cached certificate (same hash)
  GammaCertificate again = certify_gamma(GammaPattern::iijl);
  CHECK(again.result.shift == c.result.shift);
  CHECK(again.result.q.tc.size() == c.result.q.tc.size());
  CHECK(again.result.q == c.result.q);
  std::string text = certificate_text(c);
  CHECK(text.find("pattern iijl") != std::string::npos);
  CHECK(text.find("certified yes") != std::string::npos);
  unsetenv("SYMGAP_CACHE_DIR");
  fs::remove_all(dir);
}

TEST_CASE("support of the concrete Gamma element is the whole of E") {
  SmallKReport rep = verify_small_k(SmallKCase::gijlm, 2);
  CHECK(rep.gamma.support_set() == VertexSet::range(1, 6));
  SmallKReport rep2 = verify_small_k(SmallKCase::g00ij, 2);
  CHECK(rep2.gamma.support_set() == VertexSet::range(1, 4));
}

TEST_CASE("build_gamma ijlm specializes at every k in 4..8") {
  PolyMat sym = build_gamma(GammaPattern::ijlm);
  REQUIRE(sym.n == 136);
  for (int k = 4; k <= 8; ++k) {
    ConcreteStarModule mod(k, 3, 4);
    RatMat conc = mod.gamma_matrix(GammaPattern::ijlm);
    Int k2 = Int(k) * Int(k);
    bool same = true;
    for (int i = 0; i < 136 && same; ++i)
      for (int j = 0; j < 136 && same; ++j)
        if (Rat(sym.at(i, j).eval(Int(k))) != conc.at(i, j) * Rat(k2))
          same = false;
    CHECK(same);
  }
}
