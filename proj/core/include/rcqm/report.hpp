#pragma once

#include <string>
#include <vector>

namespace rcqm {

// One named check: residual against a tolerance, plus a short formula-style
// anchor describing what was verified.
struct Check {
  std::string id;
  std::string anchor;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  bool gating = true;  // informational checks do not affect overall pass
};

// Machine-readable mismatch between a transcribed table/system and the
// independently constructed oracle.
struct ErrataEntry {
  std::string table;
  int row = 0;
  int col = 0;
  std::string printed_expr;
  std::string computed_value;
  std::string note;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  std::vector<ErrataEntry> errata;

  bool pass() const;
  double max_residual() const;

  Check& add(const std::string& id, const std::string& anchor, double residual,
             double tol, bool gating = true);
  void merge(const VerificationReport& other);

  std::string to_json() const;
  // First line is a '#' header carrying the timestamp; the JSON body below it
  // is byte-stable for a fixed seed/config.
  void write_json_file(const std::string& path) const;
};

}  // namespace rcqm
