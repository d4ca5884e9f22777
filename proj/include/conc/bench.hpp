#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conc/measure.hpp"

namespace conc {

struct BenchRow {
    std::vector<int> dims;
    Bipartition cut;
    Route route = Route::trace;
    int reps = 0;
    std::int64_t median_ns = 0;  // median over reps, one warm-up discarded
    double e = 0.0;              // sanity echo; routes must agree within 1e-9
};

// For each (dims, cut) pair: one seeded random state, then wedge and trace
// timed back to back (steady_clock, median of reps, warm-up excluded).
// Single-threaded during timed sections.
std::vector<BenchRow> run_bench(const std::vector<std::vector<int>>& dims_list,
                                const std::vector<std::vector<int>>& cuts, int reps,
                                std::uint64_t seed);

// header: dims,cut,route,reps,median_ns,E  (dims joined by 'x', cut by '+')
std::string bench_to_csv(const std::vector<BenchRow>& rows);

}  // namespace conc
