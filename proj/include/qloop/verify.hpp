#pragma once

#include <string>
#include <vector>

#include "qloop/pairing.hpp"

namespace qloop {

struct CheckResult {
  std::string name;
  bool pass = true;
  bool conjectural = false;  // reported but never fails the process
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  /// All non-conjectural checks pass.
  bool ok() const;
  size_t failures() const;
};

/// {scalars, symfunc, relations, pairing, fprime-lemmas, qboson, projectors,
///  kashiwara, bar, jets, pbw, crystal}
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one suite against the given Cartan datum and window.  Unknown suite
/// names throw ParseError.  Individual checks never throw; an unexpected
/// exception inside a check is converted into a FAIL with the message.
SuiteReport run_suite(const std::string& name, const PairingContext& ctx);

/// `CHECK <name> <PASS|FAIL> <detail>` lines, deterministic order.
std::string format_report(const SuiteReport& r);

}  // namespace qloop
