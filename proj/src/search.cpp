#include "conc/search.hpp"

#include <cmath>

namespace conc {

PureState random_state(const QuditDims& dims, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> amps(dims.total());
    for (cplx& a : amps) {
        double re = gauss(rng);
        double im = gauss(rng);
        a = cplx{re, im};
    }
    return PureState(dims, std::move(amps));
}

PureState perturb(const PureState& state, double step, std::mt19937_64& rng) {
    if (step == 0.0) return state;
    std::normal_distribution<double> gauss(0.0, 1.0);
    double scale = step / std::sqrt(2.0 * static_cast<double>(state.dims().total()));
    std::vector<cplx> amps = state.amplitudes();
    for (cplx& a : amps) {
        double re = gauss(rng);
        double im = gauss(rng);
        a += scale * cplx{re, im};
    }
    return PureState(state.dims(), std::move(amps));
}

SearchResult maximize(const SearchConfig& config) {
    if (config.dims.empty() || config.restarts < 1 || config.iters_per_restart < 1 ||
        config.initial_step < 0.0 || config.decay <= 0.0 || config.decay >= 1.0)
        throw Error(errc::unsupported_params, "invalid search configuration");
    QuditDims dims(config.dims);
    if (dims.total() > (std::size_t{1} << 12))
        throw Error(errc::dim_too_large, "search capped at D = 2^12");

    auto evaluate = [&](const PureState& s) {
        return global_report(s, config.route, config.sep_epsilon).global_e;
    };

    SearchResult res{standard_state(StandardState::ghz, 2, 2),
                     EntanglementReport{}, {}, 0, 0.0};
    double best_overall = -1.0;
    PureState best_state = res.best_state;

    for (int r = 0; r < config.restarts; ++r) {
        std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(r));
        PureState current = random_state(dims, rng);
        double current_e = evaluate(current);
        ++res.evaluations;
        res.max_evaluated = std::max(res.max_evaluated, current_e);

        PureState restart_best = current;
        double restart_best_e = current_e;
        double step = config.initial_step;
        int rejections = 0;
        for (int it = 0; it < config.iters_per_restart; ++it) {
            PureState proposal = perturb(current, step, rng);
            double e = evaluate(proposal);
            ++res.evaluations;
            res.max_evaluated = std::max(res.max_evaluated, e);
            if (e > current_e) {
                current = std::move(proposal);
                current_e = e;
                rejections = 0;
                if (e > restart_best_e) {
                    restart_best = current;
                    restart_best_e = e;
                }
            } else if (++rejections >= 20) {
                step *= config.decay;
                rejections = 0;
            }
        }
        res.trajectory.push_back(restart_best_e);
        if (config.on_restart) config.on_restart(r, restart_best_e, res.evaluations);
        // strict > keeps the lowest restart index on ties
        if (restart_best_e > best_overall) {
            best_overall = restart_best_e;
            best_state = std::move(restart_best);
        }
    }

    res.best_state = std::move(best_state);
    res.best_report = global_report(res.best_state, config.route, config.sep_epsilon);
    return res;
}

}  // namespace conc
