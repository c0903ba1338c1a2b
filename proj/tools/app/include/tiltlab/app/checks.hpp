#pragma once

#include "tiltlab/catalog.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tiltlab::app {

struct CheckResult {
    std::string module;
    std::string name;
    bool skipped = false;  // not applicable to this quiver (e.g. needs Dynkin type)
    std::size_t cases = 0;
    std::vector<std::string> failures;  // first few counterexamples
    std::size_t failure_count = 0;
    [[nodiscard]] bool passed() const { return skipped || failure_count == 0; }
};

struct CheckOptions {
    std::uint64_t seed = 20240601;
    std::size_t random_cases = 200;
    std::size_t mutation_depth = 8;
    std::int64_t fan_radius = 3;
};

// Runs the invariant suite of every module against one quiver and its catalog.
std::vector<CheckResult> run_checks(const ExceptionalCatalog& c, const CheckOptions& opts = {});

}  // namespace tiltlab::app
