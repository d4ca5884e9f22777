#include "conc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "conc/search.hpp"

namespace conc {

namespace {

std::int64_t time_once_ns(const PureState& state, const Bipartition& cut, Route route,
                          double& e_out) {
    auto t0 = std::chrono::steady_clock::now();
    e_out = concurrence(state, cut, route);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
}

std::int64_t median(std::vector<std::int64_t>& samples) {
    std::size_t mid = samples.size() / 2;
    std::nth_element(samples.begin(), samples.begin() + mid, samples.end());
    return samples[mid];
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<std::vector<int>>& dims_list,
                                const std::vector<std::vector<int>>& cuts, int reps,
                                std::uint64_t seed) {
    if (reps < 3)
        throw Error(errc::unsupported_params, "reps must be >= 3");

    std::vector<BenchRow> rows;
    for (const auto& dims_vec : dims_list) {
        QuditDims dims(dims_vec);
        for (const auto& cut_members : cuts) {
            Bipartition cut(dims.particle_count(), cut_members);
            std::mt19937_64 rng(seed);
            PureState state = random_state(dims, rng);

            double e_by_route[2] = {0.0, 0.0};
            const Route routes[2] = {Route::wedge, Route::trace};
            for (int ri = 0; ri < 2; ++ri) {
                double e = 0.0;
                time_once_ns(state, cut, routes[ri], e);  // warm-up, discarded
                std::vector<std::int64_t> samples;
                samples.reserve(static_cast<std::size_t>(reps));
                for (int rep = 0; rep < reps; ++rep)
                    samples.push_back(time_once_ns(state, cut, routes[ri], e));
                e_by_route[ri] = e;

                BenchRow row;
                row.dims = dims_vec;
                row.cut = cut;
                row.route = routes[ri];
                row.reps = reps;
                row.median_ns = std::max<std::int64_t>(1, median(samples));
                row.e = e;
                rows.push_back(std::move(row));
            }
            if (std::abs(e_by_route[0] - e_by_route[1]) > 1e-9)
                throw Error(errc::no_convergence,
                            "wedge and trace routes disagree on the benchmark state");
        }
    }
    return rows;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows) {
    std::string out = "dims,cut,route,reps,median_ns,E\n";
    char buf[64];
    for (const BenchRow& row : rows) {
        for (std::size_t i = 0; i < row.dims.size(); ++i) {
            if (i) out += 'x';
            out += std::to_string(row.dims[i]);
        }
        out += ',';
        for (std::size_t i = 0; i < row.cut.members.size(); ++i) {
            if (i) out += '+';
            out += std::to_string(row.cut.members[i]);
        }
        out += ',';
        out += route_name(row.route);
        out += ',';
        out += std::to_string(row.reps);
        out += ',';
        out += std::to_string(row.median_ns);
        out += ',';
        std::snprintf(buf, sizeof(buf), "%.17g", row.e);
        out += buf;
        out += '\n';
    }
    return out;
}

}  // namespace conc
