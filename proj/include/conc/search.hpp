#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "conc/measure.hpp"
#include "conc/qstate.hpp"

namespace conc {

// Random-restart hill climbing over the unit sphere of amplitudes. RNG is
// std::mt19937_64; restart k owns the stream seeded with seed + k, so the
// result is independent of scheduling.
struct SearchConfig {
    std::vector<int> dims;
    int restarts = 16;
    int iters_per_restart = 5000;
    double initial_step = 0.3;
    double decay = 0.97;         // applied after every 20 consecutive rejections
    std::uint64_t seed = 0;
    Route route = Route::trace;
    double sep_epsilon = kDefaultSepEpsilon;
    // Called once per finished restart (progress logging).
    std::function<void(int restart, double best, long evaluations)> on_restart;
};

struct SearchResult {
    PureState best_state;
    EntanglementReport best_report;
    std::vector<double> trajectory;  // per-restart best values
    long evaluations = 0;
    double max_evaluated = 0.0;      // largest global E seen anywhere
};

// Adds complex Gaussian noise of scale step/sqrt(2D) to each amplitude and
// renormalizes. step = 0 returns the state unchanged.
PureState perturb(const PureState& state, double step, std::mt19937_64& rng);

// Gaussian-normalized random state (Haar-like).
PureState random_state(const QuditDims& dims, std::mt19937_64& rng);

SearchResult maximize(const SearchConfig& config);

}  // namespace conc
