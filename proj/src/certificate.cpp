#include "symgap/certificate.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace symgap {

ShiftNegateResult shift_negate_certificate(const BiPoly& p, long shift) {
  ShiftNegateResult r;
  r.shift = shift;
  r.q = p.shift_negate(shift);
  r.certified = true;
  for (int d = 0; d <= r.q.t_degree() && r.certified; ++d) {
    const auto& c = r.q.tc[d].coeffs();
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] < 0) {
        r.certified = false;
        r.offending = CoefficientWitness{d, static_cast<int>(j), c[j]};
        break;
      }
  }
  return r;
}

std::optional<ShiftNegateResult> minimal_certifying_shift(const BiPoly& p,
                                                          long max_shift) {
  for (long s = 1; s <= max_shift; ++s) {
    ShiftNegateResult r = shift_negate_certificate(p, s);
    if (r.certified) return r;
  }
  return std::nullopt;
}

std::string certificate_text(const GammaCertificate& c) {
  std::ostringstream os;
  os << "symgap-gamma-certificate v1\n";
  os << "pattern " << pattern_name(c.pattern) << "\n";
  os << "matrix-hash " << std::hex << c.matrix_hash << std::dec << "\n";
  os << "shift " << c.result.shift << "\n";
  os << "certified " << (c.result.certified ? "yes" : "no") << "\n";
  os << "# q(k,t) = sign * p(k+shift, -t); one line per power of t,\n";
  os << "# coefficients of k^0, k^1, ... (exact integers)\n";
  for (int d = 0; d <= c.result.q.t_degree(); ++d) {
    os << "t^" << d << ":";
    for (const Int& x : c.result.q.tc[d].coeffs()) os << " " << x.get_str();
    os << "\n";
  }
  return os.str();
}

namespace {

std::optional<std::filesystem::path> cache_path(GammaPattern pattern) {
  const char* dir = std::getenv("SYMGAP_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir) /
         ("gamma_" + pattern_name(pattern) + ".cert");
}

}  // namespace

std::optional<GammaCertificate> load_cached_certificate(GammaPattern pattern,
                                                        std::uint64_t hash) {
  auto path = cache_path(pattern);
  if (!path) return std::nullopt;
  std::ifstream in(*path);
  if (!in.good()) return std::nullopt;
  GammaCertificate c;
  c.pattern = pattern;
  std::string line;
  bool hash_ok = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "matrix-hash") {
      std::uint64_t h;
      ls >> std::hex >> h;
      if (h != hash) return std::nullopt;  // stale cache
      hash_ok = true;
      c.matrix_hash = h;
    } else if (key == "shift") {
      ls >> c.result.shift;
    } else if (key == "certified") {
      std::string v;
      ls >> v;
      c.result.certified = (v == "yes");
    } else if (key.rfind("t^", 0) == 0) {
      std::vector<Int> coeffs;
      std::string tok;
      while (ls >> tok) coeffs.emplace_back(tok);
      c.result.q.tc.push_back(IntPoly(std::move(coeffs)));
    }
  }
  if (!hash_ok || c.result.q.tc.empty()) return std::nullopt;
  return c;
}

void store_certificate(const GammaCertificate& c) {
  auto path = cache_path(c.pattern);
  if (!path) return;
  std::error_code ec;
  std::filesystem::create_directories(path->parent_path(), ec);
  std::filesystem::path tmp = *path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << certificate_text(c);
  }
  std::filesystem::rename(tmp, *path, ec);  // atomic within a filesystem
}

GammaCertificate certify_gamma(GammaPattern pattern, bool progress) {
  PolyMat a = build_gamma(pattern);
  std::uint64_t hash = a.content_hash();
  if (auto cached = load_cached_certificate(pattern, hash)) return *cached;

  GammaCertificate c;
  c.pattern = pattern;
  c.matrix_hash = hash;
  c.char_poly = char_poly_interpolate_zk(a, progress);
  if (pattern != GammaPattern::ijlm) {
    // both char-poly routes must agree on the 21x21 instances
    require(char_poly_berkowitz_zk(a) == c.char_poly,
            "Berkowitz and interpolation char polys disagree");
  }
  if (pattern == GammaPattern::ijlm) {
    c.result = shift_negate_certificate(c.char_poly, 3);
  } else {
    auto best = minimal_certifying_shift(c.char_poly);
    c.result = best ? *best : shift_negate_certificate(c.char_poly, 1);
  }
  store_certificate(c);
  return c;
}

}  // namespace symgap
