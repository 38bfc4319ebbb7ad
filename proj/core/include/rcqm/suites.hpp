#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rcqm/report.hpp"

namespace rcqm {

// Named verification suites used by the command-line driver and the
// acceptance tests. Each runs a fixed battery of checks at the given
// tolerance and returns a merged report.
VerificationReport run_suite(const std::string& name, double tol, double mass,
                             std::uint64_t seed);

std::vector<std::string> suite_names();

}  // namespace rcqm
