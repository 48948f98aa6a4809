#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "modcalc/coupling.hpp"
#include "modcalc/propsuite.hpp"

namespace modcalc {

using Json = nlohmann::ordered_json;

/// A parsed scenario file: one adapted chart, named data, and an
/// ordered list of checks.
struct Scenario {
    AdaptedSplit split;
    ConnectionForm gamma; // flat unless the file declares a connection
    std::map<std::string, ScalarFunction> scalars;
    std::map<std::string, Tensor> tensors;
    std::map<std::string, VolumeForm> volumes;
    std::vector<std::string> assertions; // echoed user claims
    Json checks = Json::array();
    std::string source_path;
};

enum class CheckStatus { pass, fail, inconclusive, error };

struct CheckOutcome {
    std::string label;           // check keyword or user label
    CheckStatus status = CheckStatus::error;
    std::string message;         // one-line summary
    std::vector<std::string> details; // residuals, computed tensors
};

struct Report {
    std::string scenario_path;
    uint64_t seed = 0;
    std::vector<CheckOutcome> outcomes;
    std::vector<std::string> assumptions;
    double elapsed_ms = 0.0;

    bool any_failure() const;
    int counts(CheckStatus s) const;
};

/// Loads and fully resolves a scenario; throws SyntaxError,
/// UnknownCheckName, UnresolvedReference, or SampleViolatesAssertion.
Scenario load_scenario(const std::string& path);

/// Runs all checks in file order. Check-level errors are captured into
/// the report, never thrown. `parallel` runs independent checks
/// concurrently; the report order stays the file order.
Report run_scenario(const Scenario& scenario, uint64_t seed, bool parallel = false);

/// Human-readable report (includes timing).
std::string emit_text(const Report& report);
/// Machine-readable report; byte-identical for identical inputs and seed.
std::string emit_structured(const Report& report);

/// 0: no failures; 1: some check failed or errored.
int report_exit_code(const Report& report);

/// Tensor <-> JSON component list (indices given by coordinate names).
Json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const Json& j, const Chart& chart);

/// Lists *.scn files in a directory (for `modcalc examples`).
std::vector<std::string> list_scenarios(const std::string& dir);

} // namespace modcalc
