#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace modcalc {

struct SuiteResult {
    std::string name;
    uint64_t seed = 0;
    int cases = 0;
    int failures = 0;
    std::string detail; // first failure, if any
    bool passed() const { return failures == 0; }
};

/// Runs a named randomized identity suite with the given seed and case
/// count; throws UnknownCheckName for names not in the registry.
SuiteResult run_property_suite(const std::string& name, uint64_t seed, int cases);

std::vector<std::string> property_suite_names();

} // namespace modcalc
