#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "symgap/certificate.hpp"
#include "symgap/inequality.hpp"
#include "symgap/report.hpp"
#include "symgap/spectra.hpp"

using namespace symgap;

namespace {

// exit codes: 0 all PASS, 1 mathematical FAIL with witness, 2 input error,
// 3 resource limit
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// decimal or scientific ("1e-8", "0.5", "3"), converted to an exact rational
Rat parse_tolerance(const std::string& text) {
  std::string t = text;
  long exp10 = 0;
  auto epos = t.find_first_of("eE");
  if (epos != std::string::npos) {
    exp10 = std::stol(t.substr(epos + 1));
    t = t.substr(0, epos);
  }
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(t.size() - dot - 1);
    t.erase(dot, 1);
  }
  Int mantissa(t);
  Rat r(mantissa);
  Int p10 = 1;
  for (long i = 0; i < std::labs(exp10); ++i) p10 *= 10;
  if (exp10 >= 0)
    r *= Rat(p10);
  else
    r /= Rat(p10);
  return r;
}

std::vector<VertexSet> parse_sets(const std::string& text) {
  std::vector<VertexSet> out;
  std::istringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<int> mem;
    if (group != "-" && !group.empty()) {
      std::istringstream vs(group);
      std::string tok;
      while (std::getline(vs, tok, ',')) mem.push_back(std::stoi(tok));
    }
    out.push_back(VertexSet(std::move(mem)));
  }
  return out;
}

std::vector<Rat> parse_weights(const std::string& text) {
  std::vector<Rat> out;
  std::istringstream ws(text);
  std::string tok;
  while (std::getline(ws, tok, ',')) out.push_back(parse_rat(tok));
  return out;
}

void emit(const VerificationReport& report, const std::string& json_path) {
  std::cout << report.text();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << report.json() << "\n";
  }
}

int finish(const VerificationReport& report, const std::string& json_path) {
  emit(report, json_path);
  if (report.all_pass()) return kExitPass;
  return report.any_fail() ? kExitFail : kExitResource;  // UNDECIDED: size limit
}

std::string partition_table_text(const std::vector<PartitionLambda>& table) {
  std::ostringstream os;
  for (const auto& row : table) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", row.lambda1.mid());
    os << "    lambda1(" << row.mu.str() << ") = " << buf
       << "   min eig of W(id-U) in [" << rat_str(row.sg_min_exact_lo) << ", "
       << rat_str(row.sg_min_exact_hi) << "]\n";
  }
  return os.str();
}

int cmd_check_hypergraph(const std::string& file, bool audit, bool oracle,
                         const std::string& tolerance,
                         const std::string& json_path) {
  WeightedHypergraph g = parse_hypergraph_file(file);
  if (g.n() > 8) {
    std::cerr << "error: n = " << g.n() << " exceeds the supported limit 8\n";
    return kExitResource;
  }
  Rat tol = parse_tolerance(tolerance);
  VerificationReport report;
  report.command = "check-hypergraph " + file;
  Timer timer;
  SpectralReport spec = check_caputo(g, tol, oracle);
  {
    CheckResult c;
    c.name = "lambda2-equality";
    c.verdict = spec.equal ? Verdict::Pass : Verdict::Fail;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "lambda2_rw = %.12f, lambda2_ip = %.12f, gap = %.3g",
                  spec.lambda2_rw, spec.lambda2_ip, spec.gap);
    c.witness = buf;
    c.seconds = timer.seconds();
    report.checks.push_back(c);
  }
  {
    CheckResult c;
    c.name = "standard-dominance";
    c.verdict = spec.standard_dominates ? Verdict::Pass : Verdict::Fail;
    c.witness = "lambda1(U,V_mu) <= lambda1(U,V_(n-1,1)) + tol for every mu";
    report.checks.push_back(c);
  }
  if (spec.oracle_gap) {
    CheckResult c;
    c.name = "brute-force-oracle";
    c.verdict = *spec.oracle_gap <= 1e-9 ? Verdict::Pass : Verdict::Fail;
    char buf[64];
    std::snprintf(buf, sizeof buf, "|irrep - oracle| = %.3g", *spec.oracle_gap);
    c.witness = buf;
    report.checks.push_back(c);
  }
  std::cout << "  per-partition table:\n" << partition_table_text(spec.table);
  if (audit) {
    for (int pivot = 1; pivot <= g.n(); ++pivot) {
      VertexSet b = g.common_core().without(pivot);
      if (!g.has_b_shape(b)) continue;
      Timer at;
      AuditReport ar = audit_induction_step(g, pivot);
      CheckResult c;
      c.name = "audit-pivot-" + std::to_string(pivot);
      bool ok = ar.difference_psd && ar.rank1_ok && ar.interlace_ok;
      c.verdict = ok ? Verdict::Pass : Verdict::Fail;
      std::ostringstream w;
      w << "psd=" << ar.difference_psd << " rank=" << ar.standard_rank
        << " interlace=" << ar.interlace_ok;
      c.witness = w.str();
      c.seconds = at.seconds();
      report.checks.push_back(c);
    }
  }
  return finish(report, json_path);
}

int cmd_verify_inequality(const std::string& shape, int n,
                          const std::string& sets_text,
                          const std::string& weights_text,
                          const std::string& a0_text,
                          const std::string& c0_text,
                          const std::string& json_path) {
  SquidInstance inst;
  inst.n = n;
  if (shape == "classic-octopus")
    inst.shape = SquidShape::ClassicOctopus;
  else if (shape == "disjoint")
    inst.shape = SquidShape::Disjoint;
  else if (shape == "large-intersection")
    inst.shape = SquidShape::LargeIntersection;
  else if (shape == "cosize-one")
    inst.shape = SquidShape::CosizeOne;
  else if (shape == "general")
    inst.shape = SquidShape::General;
  else
    throw std::invalid_argument("unknown shape '" + shape + "'");
  inst.sets = parse_sets(sets_text);
  inst.weights = parse_weights(weights_text);
  if (!a0_text.empty()) {
    std::vector<VertexSet> a0s = parse_sets(a0_text);
    require(a0s.size() == 1, "--a0 takes a single set");
    inst.a0 = a0s[0];
    inst.c0 = c0_text.empty() ? Rat(0) : parse_rat(c0_text);
  }
  inst.validate();

  VerificationReport report;
  report.command = "verify-inequality " + shape;
  Timer timer;
  Rank1Report r1 = standard_rank1_check(inst);
  {
    CheckResult c;
    c.name = "standard-rep-rank1";
    c.verdict =
        (r1.rank <= 1 && r1.matches_octopus) ? Verdict::Pass : Verdict::Fail;
    std::ostringstream w;
    w << "rank = " << r1.rank << ", trace = " << rat_str(r1.trace) << ", x = (";
    for (std::size_t i = 0; i < r1.x.size(); ++i)
      w << (i ? "," : "") << rat_str(r1.x[i]);
    w << ")";
    c.witness = w.str();
    c.seconds = timer.seconds();
    report.checks.push_back(c);
  }
  Timer sweep_timer;
  TheoremReport sweep = inst.shape == SquidShape::General
                            ? psd_sweep(squid_delta(inst))
                            : verify_theorem(inst);
  CheckResult c;
  c.name = "psd-sweep";
  c.seconds = sweep_timer.seconds();
  if (sweep.undecided) {
    c.verdict = Verdict::Undecided;
    c.witness = "support size " + std::to_string(sweep.support_size) +
                " exceeds the irrep sweep limit 8";
  } else if (sweep.psd) {
    c.verdict = Verdict::Pass;
    c.witness = "PSD on all " + std::to_string(sweep.per_partition.size()) +
                " partitions of " + std::to_string(sweep.support_size);
  } else {
    c.verdict = Verdict::Fail;
    std::ostringstream w;
    w << "NOT PSD; witness partition " << sweep.witness->str();
    for (const auto& pv : sweep.per_partition)
      if (!pv.verdict.psd) {
        RealRootedPoly p(pv.verdict.char_poly);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.9f",
                      p.smallest(default_root_eps()).mid());
        w << "; min eigenvalue on V_" << pv.mu.str() << " = " << buf;
        break;
      }
    c.witness = w.str();
  }
  report.checks.push_back(c);
  return finish(report, json_path);
}

int cmd_counterexamples(const std::string& json_path) {
  VerificationReport report;
  report.command = "counterexamples";
  for (int which : {1, 2}) {
    Timer timer;
    CounterexampleReport rep = counterexample_report(which);
    CheckResult c;
    c.name = "counterexample-" + std::to_string(which);
    c.verdict = rep.confirmed ? Verdict::Pass : Verdict::Fail;
    c.witness = rep.detail;
    c.seconds = timer.seconds();
    report.checks.push_back(c);
  }
  return finish(report, json_path);
}

int cmd_symbolic_gamma(const std::string& pattern_text, bool long_run,
                       bool small_k, const std::string& out_path,
                       const std::string& json_path) {
  GammaPattern pattern = parse_pattern(pattern_text);
  bool gated = pattern == GammaPattern::ijlm && !long_run;
  if (gated && !small_k) {
    std::cerr << "error: the 136x136 ijlm run takes a long time; pass --long "
                 "to enable it\n";
    return kExitResource;
  }
  VerificationReport report;
  report.command = "symbolic-gamma " + pattern_text;
  if (!gated) {
    Timer timer;
    GammaCertificate cert = certify_gamma(pattern, long_run);
    CheckResult c;
    c.name = "shift-negate-certificate";
    c.verdict = cert.result.certified ? Verdict::Pass : Verdict::Fail;
    std::ostringstream w;
    w << "shift " << cert.result.shift;
    if (cert.result.offending)
      w << "; offending coefficient at t^" << cert.result.offending->t_power
        << " k^" << cert.result.offending->k_power << " = "
        << cert.result.offending->value.get_str();
    c.witness = w.str();
    c.seconds = timer.seconds();
    report.checks.push_back(c);
    std::string path = out_path.empty()
                           ? "gamma_" + pattern_name(pattern) + ".cert"
                           : out_path;
    std::ofstream out(path);
    out << certificate_text(cert);
    std::cout << "certificate written to " << path << "\n";
  } else {
    std::cout << "136x136 certificate gated behind --long; running the "
                 "small-k sweep only\n";
  }
  if (small_k) {
    std::vector<int> ks = pattern == GammaPattern::ijlm
                              ? std::vector<int>{2, 3}
                              : std::vector<int>{2};
    SmallKCase smallc = pattern == GammaPattern::ijlm   ? SmallKCase::gijlm
                        : pattern == GammaPattern::iijl ? SmallKCase::giijl
                                                        : SmallKCase::g0ijl;
    for (int k : ks) {
      Timer kt;
      SmallKReport rep = verify_small_k(smallc, k);
      CheckResult c;
      c.name = "small-k-" + std::to_string(k);
      c.verdict = rep.psd ? Verdict::Pass : Verdict::Fail;
      std::ostringstream w;
      w << rep.per_partition.size() << " irreps checked";
      for (const auto& [mu, v] : rep.per_partition)
        if (!v.psd) w << "; NOT PSD on " << mu.str();
      c.witness = w.str();
      c.seconds = kt.seconds();
      report.checks.push_back(c);
    }
  }
  return finish(report, json_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "symgap: exact verification of generalized octopus inequalities and "
      "interchange-process spectral gaps"};
  app.require_subcommand(1);

  std::string json_path, tolerance = "1e-8";

  auto* check = app.add_subcommand(
      "check-hypergraph", "lambda2 equality of RW and IP on a hypergraph");
  std::string file;
  bool audit = false, oracle = false;
  check->add_option("file", file, "hypergraph file")->required();
  check->add_flag("--audit", audit,
                  "audit the induction step at every admissible pivot");
  check->add_flag("--oracle", oracle, "force the brute-force cross-check");
  check->add_option("--tolerance", tolerance, "equality tolerance (default 1e-8)");
  check->add_option("--json", json_path, "write the machine-readable report here");

  auto* verify = app.add_subcommand("verify-inequality",
                                    "certify a generalized octopus inequality");
  std::string shape, sets_text, weights_text, a0_text, c0_text;
  int n = 0;
  verify
      ->add_option("--shape", shape,
                   "classic-octopus|disjoint|large-intersection|cosize-one|general")
      ->required();
  verify->add_option("--n", n, "ambient degree n")->required();
  verify->add_option("--sets", sets_text, "semicolon-separated sets, e.g. 2,3;4,5")
      ->required();
  verify->add_option("--weights", weights_text, "comma-separated rationals")
      ->required();
  verify->add_option("--a0", a0_text, "distinguished set A_0 (shapes with a core)");
  verify->add_option("--c0", c0_text, "weight of A_0");
  verify->add_option("--json", json_path, "write the machine-readable report here");

  auto* counter =
      app.add_subcommand("counterexamples", "re-derive both failure examples");
  counter->add_option("--json", json_path, "write the machine-readable report here");

  auto* gamma =
      app.add_subcommand("symbolic-gamma", "symbolic Gamma certificate in Z[k]");
  std::string pattern_text, out_path;
  bool long_run = false, small_k = false;
  gamma->add_option("--pattern", pattern_text, "ijlm|iijl|0ijl")->required();
  gamma->add_flag("--long", long_run, "enable the multi-hour 136x136 run");
  gamma->add_flag("--small-k", small_k, "also run the concrete small-k sweep");
  gamma->add_option("--out", out_path, "certificate file path");
  gamma->add_option("--json", json_path, "write the machine-readable report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed())
      return cmd_check_hypergraph(file, audit, oracle, tolerance, json_path);
    if (verify->parsed())
      return cmd_verify_inequality(shape, n, sets_text, weights_text, a0_text,
                                   c0_text, json_path);
    if (counter->parsed()) return cmd_counterexamples(json_path);
    if (gamma->parsed())
      return cmd_symbolic_gamma(pattern_text, long_run, small_k, out_path,
                                json_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
