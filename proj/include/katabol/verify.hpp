#pragma once

#include <string>
#include <vector>

#include "katabol/atoms.hpp"

namespace katabol {

// Parameters of a verification sweep.  Cells are enumerated deterministically (degree,
// then level, then index order); jobs > 1 runs cells on that many threads with results
// reported in enumeration order regardless of scheduling.
struct JobSpec {
    int max_degree = 4;
    int k_min = 1;
    int k_max = 4;
    int jobs = 1;
};

struct SuiteCell {
    std::string params;
    VerdictStatus status = VerdictStatus::holds;
    std::string witness;
    long long millis = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCell> cells;
    bool all_hold() const;
};

// The closed set of suite names, "all" last.
const std::vector<std::string>& suite_names();

// Runs one suite; unknown names throw invalid_input.  Cells never abort the sweep:
// exceptions inside a cell are reported as counterexamples with the message as witness.
SuiteReport run_suite(const std::string& suite, const JobSpec& spec);

}  // namespace katabol
