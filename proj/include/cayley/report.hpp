#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace cayley {

/// Outcome of a single named check. Failures always carry a complete
/// serialized witness; passing checks may carry one for illustration.
struct CheckResult {
  std::string id;
  std::string statement;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> witness;
};

/// Structured outcome of a named verification suite. The checks are a pure
/// function of (suite, seed, trials, point list); wall-clock data is kept
/// out of the JSON serialization so identical runs serialize identically.
struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<CheckResult> checks;
  double elapsed_seconds = 0.0;
  std::string started_at;

  int failures() const;
  bool all_pass() const { return failures() == 0; }

  CheckResult& add(std::string id, std::string statement, bool pass);
  void merge(const VerificationReport& other, const std::string& prefix);
};

void emit_text(const VerificationReport& r, std::ostream& os);
std::string emit_json(const VerificationReport& r);

/// Serializes per --format; format is "text" or "json".
std::string emit_report(const VerificationReport& r, const std::string& format);

} // namespace cayley
