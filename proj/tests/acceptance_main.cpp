#include <cstdlib>
#include <iostream>
#include <string>

#include "weaksort/acceptance.hpp"

// Usage: acceptance [criterion ...]
int main(int argc, char** argv)
{
    weaksort::AcceptanceOptions options;
    for (int i = 1; i < argc; ++i)
        options.only.insert(std::atoi(argv[i]));

    int failed = 0;
    const auto results = weaksort::run_acceptance(options, [&](const weaksort::CriterionResult& r) {
        std::cout << weaksort::format_result_line(r) << std::endl;
        failed += !r.passed;
    });
    std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
