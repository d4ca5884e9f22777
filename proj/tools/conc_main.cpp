// Command-line frontend: measure / gen / search / bench / selftest / parse.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "conc/bench.hpp"
#include "conc/exterior.hpp"
#include "conc/ket_parser.hpp"
#include "conc/measure.hpp"
#include "conc/search.hpp"

#include "CLI11.hpp"

namespace {

using namespace conc;

std::vector<int> parse_int_list(const std::string& text, char sep) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t j = text.find(sep, i);
        if (j == std::string::npos) j = text.size();
        std::string piece = text.substr(i, j - i);
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
            throw Error(errc::unsupported_params, "bad integer list '" + text + "'");
        out.push_back(std::stoi(piece));
        i = j + 1;
        if (j == text.size()) break;
    }
    return out;
}

PureState resolve_input_state(const std::string& state_file, const std::string& ket,
                              const std::string& dims_str, const std::string& gen_name,
                              int n, int d) {
    int sources = (!state_file.empty()) + (!ket.empty()) + (!gen_name.empty());
    if (sources != 1)
        throw Error(errc::unsupported_params,
                    "exactly one of --state, --ket, --gen is required");
    if (!state_file.empty()) return load_state_file(state_file);
    if (!ket.empty()) {
        std::optional<QuditDims> dims;
        if (!dims_str.empty()) dims = QuditDims(parse_int_list(dims_str, ','));
        return parse_ket(ket, dims);
    }
    return standard_state(standard_state_by_name(gen_name), n, d);
}

int cmd_measure(const PureState& state, const std::string& cut_str, Route route,
                double eps, const std::string& format) {
    if (!cut_str.empty()) {
        Bipartition cut(state.dims().particle_count(), parse_int_list(cut_str, '+'));
        double e = concurrence(state, cut, route);
        std::cout << "E = " << e << '\n';
        return 0;
    }
    EntanglementReport rep = global_report(state, route, eps);
    if (format == "json")
        std::cout << report_to_json(rep) << '\n';
    else if (format == "csv")
        std::cout << report_to_csv(rep);
    else
        std::cout << report_to_text(rep);
    return 0;
}

int cmd_selftest_lagrange(long samples, int max_m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> m_dist(2, max_m);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (long s = 0; s < samples; ++s) {
        int m = m_dist(rng);
        std::vector<cplx> a(m), b(m);
        for (int k = 0; k < m; ++k) {
            a[k] = cplx{u(rng), u(rng)};
            b[k] = cplx{u(rng), u(rng)};
        }
        double na = 0.0, nb = 0.0;
        cplx dot{};
        for (int k = 0; k < m; ++k) {
            na += std::norm(a[k]);
            nb += std::norm(b[k]);
            dot += a[k] * std::conj(b[k]);
        }
        double lhs = na * nb - std::norm(dot);
        double gap = std::abs(lagrange_gap(a, b)) / std::max(1.0, lhs);
        worst = std::max(worst, gap);
    }
    std::cout << "lagrange selftest: samples=" << samples << " max-m=" << max_m
              << " max_relative_gap=" << worst << '\n';
    if (worst > 1e-10) {
        std::cerr << "error: no_convergence: Lagrange gap exceeds 1e-10\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized concurrence toolkit for multiparticle pure states"};
    app.require_subcommand(1);

    // measure
    auto* measure = app.add_subcommand("measure", "Entanglement report for a state");
    std::string m_state, m_ket, m_dims, m_gen, m_cut, m_format = "text", m_route = "trace";
    int m_n = 2, m_d = 2;
    bool m_all = false;
    double m_eps = kDefaultSepEpsilon;
    measure->add_option("--state", m_state, "input .qs state file");
    measure->add_option("--ket", m_ket, "ket DSL expression");
    measure->add_option("--dims", m_dims, "comma-separated local dimensions");
    measure->add_option("--gen", m_gen, "standard state: bell|ghz|w|hs");
    measure->add_option("--n", m_n, "particle count for --gen");
    measure->add_option("--d", m_d, "local dimension for --gen");
    measure->add_option("--cut", m_cut, "single cut, members joined by '+'");
    measure->add_flag("--all", m_all, "report over all canonical cuts (default)");
    measure->add_option("--route", m_route, "wedge|trace|eigen")
        ->check(CLI::IsMember({"wedge", "trace", "eigen"}));
    measure->add_option("--eps", m_eps, "separability threshold on E^2");
    measure->add_option("--format", m_format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a standard state");
    std::string g_name, g_emit;
    int g_n = 2, g_d = 2;
    gen->add_option("name", g_name, "bell|ghz|w|hs")->required();
    gen->add_option("--n", g_n, "particle count");
    gen->add_option("--d", g_d, "local dimension");
    gen->add_option("--emit-state", g_emit, "write .qs file instead of stdout");

    // search
    auto* search = app.add_subcommand("search", "Maximize global entanglement");
    std::string s_dims, s_out;
    int s_restarts = 16, s_iters = 5000;
    std::uint64_t s_seed = 0;
    std::string s_route = "trace";
    search->add_option("--dims", s_dims, "comma-separated local dimensions")->required();
    search->add_option("--restarts", s_restarts, "restart count");
    search->add_option("--iters", s_iters, "iterations per restart");
    search->add_option("--seed", s_seed, "RNG seed");
    search->add_option("--route", s_route, "wedge|trace|eigen")
        ->check(CLI::IsMember({"wedge", "trace", "eigen"}));
    search->add_option("--out", s_out, "basename: writes <out>.qs and <out>.json");

    // bench
    auto* bench = app.add_subcommand("bench", "Wedge vs trace timing");
    std::string b_dims_list, b_cuts;
    int b_reps = 5;
    std::uint64_t b_seed = 1;
    bench->add_option("--dims-list", b_dims_list, "comma-separated, dims joined by 'x'")
        ->required();
    bench->add_option("--cuts", b_cuts, "comma-separated, members joined by '+'")
        ->required();
    bench->add_option("--reps", b_reps, "timed repetitions per row");
    bench->add_option("--seed", b_seed, "RNG seed");

    // selftest
    auto* selftest = app.add_subcommand("selftest", "Built-in numeric checks");
    bool st_lagrange = false;
    long st_samples = 10000;
    int st_max_m = 64;
    std::uint64_t st_seed = 12345;
    selftest->add_flag("--lagrange", st_lagrange, "Lagrange identity fuzz");
    selftest->add_option("--samples", st_samples, "sample count");
    selftest->add_option("--max-m", st_max_m, "largest vector length");
    selftest->add_option("--seed", st_seed, "RNG seed");

    // parse
    auto* parse = app.add_subcommand("parse", "Parse a ket expression");
    std::string p_ket, p_dims;
    parse->add_option("--ket", p_ket, "ket DSL expression")->required();
    parse->add_option("--dims", p_dims, "comma-separated local dimensions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (measure->parsed()) {
            PureState st = resolve_input_state(m_state, m_ket, m_dims, m_gen, m_n, m_d);
            return cmd_measure(st, m_cut, route_by_name(m_route), m_eps, m_format);
        }
        if (gen->parsed()) {
            PureState st = standard_state(standard_state_by_name(g_name), g_n, g_d);
            if (g_emit.empty())
                save_state_file(std::cout, st);
            else
                save_state_file(g_emit, st);
            return 0;
        }
        if (search->parsed()) {
            SearchConfig cfg;
            cfg.dims = parse_int_list(s_dims, ',');
            cfg.restarts = s_restarts;
            cfg.iters_per_restart = s_iters;
            cfg.seed = s_seed;
            cfg.route = route_by_name(s_route);
            cfg.on_restart = [](int k, double best, long evals) {
                std::cerr << "restart=" << k << " best=" << best << " evals=" << evals
                          << '\n';
            };
            SearchResult res = maximize(cfg);
            std::cout << report_to_json(res.best_report) << '\n';
            if (!s_out.empty()) {
                save_state_file(s_out + ".qs", res.best_state);
                std::ofstream jf(s_out + ".json");
                jf << report_to_json(res.best_report) << '\n';
            }
            return 0;
        }
        if (bench->parsed()) {
            std::vector<std::vector<int>> dims_list, cuts;
            std::size_t i = 0;
            while (i <= b_dims_list.size()) {
                std::size_t j = b_dims_list.find(',', i);
                if (j == std::string::npos) j = b_dims_list.size();
                dims_list.push_back(parse_int_list(b_dims_list.substr(i, j - i), 'x'));
                i = j + 1;
                if (j == b_dims_list.size()) break;
            }
            i = 0;
            while (i <= b_cuts.size()) {
                std::size_t j = b_cuts.find(',', i);
                if (j == std::string::npos) j = b_cuts.size();
                cuts.push_back(parse_int_list(b_cuts.substr(i, j - i), '+'));
                i = j + 1;
                if (j == b_cuts.size()) break;
            }
            std::cout << bench_to_csv(run_bench(dims_list, cuts, b_reps, b_seed));
            return 0;
        }
        if (selftest->parsed()) {
            if (!st_lagrange) {
                std::cerr << "error: unsupported: selftest requires --lagrange\n";
                return 2;
            }
            return cmd_selftest_lagrange(st_samples, st_max_m, st_seed);
        }
        if (parse->parsed()) {
            std::optional<QuditDims> dims;
            if (!p_dims.empty()) dims = QuditDims(parse_int_list(p_dims, ','));
            PureState st = parse_ket(p_ket, dims);
            std::cout << "dims:";
            for (int d : st.dims().dims()) std::cout << ' ' << d;
            std::cout << '\n';
            std::cout << "normalized_input: " << (st.was_normalized() ? "yes" : "no")
                      << '\n';
            save_state_file(std::cout, st);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
