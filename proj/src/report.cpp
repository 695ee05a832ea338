#include "symgap/report.hpp"

#include <sstream>

#include "json.hpp"

namespace symgap {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Undecided: return "UNDECIDED";
  }
  return "?";
}

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (c.verdict != Verdict::Pass) return false;
  return true;
}

bool VerificationReport::any_fail() const {
  for (const auto& c : checks)
    if (c.verdict == Verdict::Fail) return true;
  return false;
}

std::string VerificationReport::text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  for (const auto& c : checks) {
    os << "  [" << verdict_name(c.verdict) << "] " << c.name;
    if (!c.witness.empty()) os << " -- " << c.witness;
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.3fs)", c.seconds);
    os << buf << "\n";
  }
  os << (all_pass() ? "overall: PASS" : any_fail() ? "overall: FAIL"
                                                   : "overall: UNDECIDED")
     << "\n";
  return os.str();
}

std::string VerificationReport::json() const {
  nlohmann::json j;
  j["command"] = command;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["verdict"] = verdict_name(c.verdict);
    jc["witness"] = c.witness;
    jc["seconds"] = c.seconds;
    j["checks"].push_back(jc);
  }
  j["overall"] = all_pass() ? "PASS" : any_fail() ? "FAIL" : "UNDECIDED";
  return j.dump(2);
}

std::vector<std::pair<std::string, Verdict>> VerificationReport::parse_verdicts(
    const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  std::vector<std::pair<std::string, Verdict>> out;
  for (const auto& jc : j.at("checks")) {
    std::string v = jc.at("verdict");
    Verdict verdict = v == "PASS"   ? Verdict::Pass
                      : v == "FAIL" ? Verdict::Fail
                                    : Verdict::Undecided;
    out.emplace_back(jc.at("name"), verdict);
  }
  return out;
}

}  // namespace symgap
