#pragma once

#include <string>
#include <vector>

#include "symgap/common.hpp"

namespace symgap {

enum class Verdict { Pass, Fail, Undecided };

std::string verdict_name(Verdict v);

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string witness;  // FAIL always carries one
  double seconds = 0;
};

// Command echo plus one line per check; renders as human text and as JSON
// with exact rationals as "p/q" strings.
struct VerificationReport {
  std::string command;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  bool any_fail() const;
  std::string text() const;
  std::string json() const;

  // Round trip: re-parses a JSON report into (name, verdict) pairs.
  static std::vector<std::pair<std::string, Verdict>> parse_verdicts(
      const std::string& json_text);
};

}  // namespace symgap
