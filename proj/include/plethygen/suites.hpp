#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace plethygen {

struct CaseResult {
    std::string input;
    bool pass = false;
    std::string diagnostic;
};

struct VerificationReport {
    std::string suite;
    std::vector<CaseResult> cases;
    double elapsed_seconds = 0.0;

    bool pass() const;
};

struct SuiteOptions {
    std::optional<int> max;  // size / weight bound, suite-specific default
    std::optional<int> n;    // series length where applicable
    int jobs = 1;            // parallel workers; results merged in input order
};

/// The available verification suite names, in canonical order.
const std::vector<std::string>& suite_names();

/// Run one suite; throws UsageError for an unknown name.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options = {});

nlohmann::ordered_json report_to_json(const VerificationReport& report);

}  // namespace plethygen
