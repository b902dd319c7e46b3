#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace weaksort {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double time_limit_seconds = 0; // 0: no limit
};

struct AcceptanceOptions {
    unsigned threads = 0;
    std::set<int> only; // empty: all criteria
};

/// Runs the end-to-end checks in order, reporting each result as it finishes.
/// A criterion that exceeds its time limit fails.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] AC3 title (12.34s): detail"; the timing is left out when
/// with_timing is false so repeated runs print identical lines.
std::string format_result_line(const CriterionResult& r, bool with_timing = true);

} // namespace weaksort
