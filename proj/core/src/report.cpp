#include "rcqm/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace rcqm {

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass || !c.gating; });
}

double VerificationReport::max_residual() const {
  double r = 0.0;
  for (const auto& c : checks)
    if (c.gating) r = std::max(r, c.residual);
  return r;
}

Check& VerificationReport::add(const std::string& id, const std::string& anchor,
                               double residual, double tol, bool gating) {
  Check c;
  c.id = id;
  c.anchor = anchor;
  c.residual = residual;
  c.tol = tol;
  c.pass = residual < tol;
  c.gating = gating;
  checks.push_back(c);
  return checks.back();
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  errata.insert(errata.end(), other.errata.begin(), other.errata.end());
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["anchor"] = c.anchor;
    jc["residual"] = c.residual;
    jc["tol"] = c.tol;
    jc["pass"] = c.pass;
    if (!c.gating) jc["gating"] = false;
    j["checks"].push_back(jc);
  }
  j["errata"] = nlohmann::ordered_json::array();
  for (const auto& e : errata) {
    nlohmann::ordered_json je;
    je["table"] = e.table;
    je["row"] = e.row;
    je["col"] = e.col;
    je["paper_value_expr"] = e.printed_expr;
    je["computed_value"] = e.computed_value;
    if (!e.note.empty()) je["note"] = e.note;
    j["errata"].push_back(je);
  }
  j["pass"] = pass();
  return j.dump(2);
}

void VerificationReport::write_json_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open report file: " + path);
  const auto now = std::chrono::system_clock::now();
  const auto t = std::chrono::system_clock::to_time_t(now);
  char buf[64];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  out << "# generated " << buf << "\n";
  out << to_json() << "\n";
}

}  // namespace rcqm
