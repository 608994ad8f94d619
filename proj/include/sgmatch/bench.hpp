#ifndef SGMATCH_BENCH_HPP
#define SGMATCH_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sgmatch/fpt.hpp"
#include "sgmatch/generate.hpp"

namespace sgmatch {

struct BenchInstance {
    std::string name;
    GenSpec spec;
};

struct BenchOptions {
    uint64_t seed = 0;
    unsigned repeats = 3;     // best-of timing
    unsigned workers = 1;     // fpt thread pool width
    double delta = 0.01;
    uint64_t oracle_budget = 100'000'000;
    bool cross_check = true;  // run every applicable solver and compare
};

struct BenchRecord {
    std::string instance;
    std::string solver;
    std::string answer;      // yes / no / probably-no / cost=<n> / none
    uint64_t micros = 0;     // best over repeats
    uint64_t trials = 0;     // fpt only
    bool agreed = true;      // false on cross-check divergence
};

struct SuiteResult {
    std::vector<BenchRecord> records;
    bool all_agreed = true;
};

// Runs solver groups per instance and compares answers inside each group:
// compatibility {oracle, fpt-det, fpt-mc}, restricted cost {oracle, dag
// matcher when applicable}, both-mode cost, query-only cost {poly, oracle}.
// An MC "probably-no" against an oracle "yes" counts as a miss, not a
// divergence; an MC "yes" against an oracle "no" is a divergence.
SuiteResult run_suite(const std::vector<BenchInstance>& instances,
                      const BenchOptions& opts);

std::vector<BenchInstance> default_suite();

std::string records_to_csv(const std::vector<BenchRecord>& records);
std::string records_to_text(const std::vector<BenchRecord>& records);

} // namespace sgmatch

#endif
