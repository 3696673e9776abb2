#include "cayley/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace cayley {

int VerificationReport::failures() const {
  int n = 0;
  for (const auto& c : checks) {
    if (!c.pass) ++n;
  }
  return n;
}

CheckResult& VerificationReport::add(std::string id, std::string statement, bool pass) {
  checks.push_back(CheckResult{std::move(id), std::move(statement), pass, {}});
  return checks.back();
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (CheckResult c : other.checks) {
    c.id = prefix + c.id;
    checks.push_back(std::move(c));
  }
}

void emit_text(const VerificationReport& r, std::ostream& os) {
  os << "suite " << r.suite << "  seed=" << r.seed << "  trials=" << r.trials << "\n";
  if (!r.started_at.empty()) os << "started " << r.started_at << "\n";
  for (const auto& c : r.checks) {
    os << (c.pass ? "  pass  " : "  FAIL  ") << c.id << "  " << c.statement << "\n";
    for (const auto& [k, v] : c.witness) {
      os << "          " << k << " = " << v << "\n";
    }
  }
  const int fails = r.failures();
  os << (fails == 0 ? "OK" : "FAILED") << "  " << (r.checks.size() - fails) << "/"
     << r.checks.size() << " checks passed";
  if (r.elapsed_seconds > 0) os << "  (" << r.elapsed_seconds << " s)";
  os << "\n";
}

std::string emit_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["counts"] = {{"checks", r.checks.size()},
                 {"pass", r.checks.size() - r.failures()},
                 {"fail", r.failures()}};
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["statement"] = c.statement;
    jc["status"] = c.pass ? "pass" : "fail";
    if (!c.witness.empty()) {
      nlohmann::ordered_json w;
      for (const auto& [k, v] : c.witness) w[k] = v;
      jc["witness"] = w;
    }
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

std::string emit_report(const VerificationReport& r, const std::string& format) {
  if (format == "json") return emit_json(r);
  if (format == "text") {
    std::ostringstream os;
    emit_text(r, os);
    return os.str();
  }
  throw std::invalid_argument("unknown report format '" + format + "'");
}

} // namespace cayley
