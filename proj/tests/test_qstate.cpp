#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "conc/ket_parser.hpp"
#include "conc/qstate.hpp"
#include "conc/search.hpp"

#include "doctest.h"

using namespace conc;

namespace {
const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("QuditDims validates and indexes") {
    QuditDims d({2, 3, 4});
    CHECK(d.total() == 24);
    CHECK(d.stride(0) == 12);
    CHECK(d.stride(1) == 4);
    CHECK(d.stride(2) == 1);
    int labels[3] = {1, 2, 3};
    CHECK(d.flat_index(labels) == 23);
    int out[3];
    d.unflatten(23, out);
    CHECK(out[0] == 1);
    CHECK(out[1] == 2);
    CHECK(out[2] == 3);

    CHECK_THROWS_AS(QuditDims({}), Error);
    CHECK_THROWS_AS(QuditDims({2, 1}), Error);
    CHECK_THROWS_AS(QuditDims(std::vector<int>(25, 2)), Error);  // D > 2^24
}

TEST_CASE("make_state normalizes") {
    PureState s = make_state(QuditDims({2, 2}), {2.0, 0.0, 0.0, 0.0});
    CHECK(s.amplitude(0) == cplx{1.0, 0.0});
    CHECK_FALSE(s.was_normalized());

    PureState t = make_state(QuditDims({2, 2}), {1.0, 0.0, 0.0, 1.0});
    CHECK(t.amplitude(0).real() == doctest::Approx(inv_sqrt2).epsilon(1e-12));
    CHECK(t.amplitude(3).real() == doctest::Approx(inv_sqrt2).epsilon(1e-12));

    CHECK_THROWS_AS(make_state(QuditDims({2, 3}), std::vector<cplx>(5)), Error);
    CHECK_THROWS_AS(make_state(QuditDims({2, 2}), std::vector<cplx>(4)), Error);
}

TEST_CASE("standard states match published amplitudes") {
    PureState ghz3 = standard_state(StandardState::ghz, 3, 2);
    CHECK(ghz3.amplitude(0).real() == doctest::Approx(inv_sqrt2));
    CHECK(ghz3.amplitude(7).real() == doctest::Approx(inv_sqrt2));
    for (std::size_t f = 1; f < 7; ++f) CHECK(std::abs(ghz3.amplitude(f)) == 0.0);

    PureState w3 = standard_state(StandardState::w, 3, 2);
    double third = 1.0 / std::sqrt(3.0);
    CHECK(w3.amplitude(4).real() == doctest::Approx(third));
    CHECK(w3.amplitude(2).real() == doctest::Approx(third));
    CHECK(w3.amplitude(1).real() == doctest::Approx(third));

    PureState ghz23 = standard_state(StandardState::ghz, 2, 3);
    CHECK(ghz23.amplitude(0).real() == doctest::Approx(third));
    CHECK(ghz23.amplitude(4).real() == doctest::Approx(third));
    CHECK(ghz23.amplitude(8).real() == doctest::Approx(third));

    CHECK_THROWS_AS(standard_state(StandardState::w, 3, 3), Error);
    CHECK_THROWS_AS(standard_state(StandardState::hs, 3, 2), Error);
}

TEST_CASE("conditional_vector slices interleaved subsets") {
    PureState ghz3 = standard_state(StandardState::ghz, 3, 2);
    auto v = conditional_vector(ghz3, {{0}, {0}});
    REQUIRE(v.size() == 4);
    CHECK(v[0].real() == doctest::Approx(inv_sqrt2));
    CHECK(std::abs(v[1]) == 0.0);
    CHECK(std::abs(v[2]) == 0.0);
    CHECK(std::abs(v[3]) == 0.0);

    PureState w3 = standard_state(StandardState::w, 3, 2);
    auto w = conditional_vector(w3, {{0}, {1}});
    CHECK(w[0].real() == doctest::Approx(1.0 / std::sqrt(3.0)));

    // middle particle: must interleave, not just split a prefix
    PureState s = make_state(QuditDims({2, 2, 2}),
                             {0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0});
    auto mid = conditional_vector(s, {{1}, {1}});
    REQUIRE(mid.size() == 4);
    // complement (0,2) row-major: amplitudes at flats 2,3,6,7 (j1=1)
    CHECK(mid[0] == s.amplitude(2));
    CHECK(mid[1] == s.amplitude(3));
    CHECK(mid[2] == s.amplitude(6));
    CHECK(mid[3] == s.amplitude(7));

    CHECK_THROWS_AS(conditional_vector(s, {{}, {}}), Error);
    CHECK_THROWS_AS(conditional_vector(s, {{0, 1, 2}, {0, 0, 0}}), Error);
}

TEST_CASE("reassembly: conditional vectors recover the amplitudes") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        QuditDims dims({2, 3, 2});
        PureState s = random_state(dims, rng);
        std::vector<int> subset = (trial % 2) ? std::vector<int>{1} : std::vector<int>{0, 2};

        // rebuild |psi> = sum_k |k_M> (x) <k_M|psi>
        std::vector<cplx> rebuilt(dims.total());
        std::vector<int> vals(subset.size(), 0);
        for (;;) {
            auto cv = conditional_vector(s, {subset, vals});
            // scatter: walk the complement labels alongside cv
            std::vector<int> labels(3, 0);
            for (std::size_t q = 0; q < subset.size(); ++q)
                labels[static_cast<std::size_t>(subset[q])] = vals[q];
            std::vector<int> comp;
            for (int p = 0; p < 3; ++p)
                if (std::find(subset.begin(), subset.end(), p) == subset.end())
                    comp.push_back(p);
            std::vector<int> cvals(comp.size(), 0);
            for (std::size_t k = 0; k < cv.size(); ++k) {
                for (std::size_t q = 0; q < comp.size(); ++q)
                    labels[static_cast<std::size_t>(comp[q])] = cvals[q];
                rebuilt[dims.flat_index(labels)] = cv[k];
                for (int i = static_cast<int>(comp.size()) - 1; i >= 0; --i) {
                    if (++cvals[static_cast<std::size_t>(i)] <
                        dims.dim(comp[static_cast<std::size_t>(i)]))
                        break;
                    cvals[static_cast<std::size_t>(i)] = 0;
                }
            }
            // odometer over subset values
            int i = static_cast<int>(subset.size()) - 1;
            for (; i >= 0; --i) {
                if (++vals[static_cast<std::size_t>(i)] <
                    dims.dim(subset[static_cast<std::size_t>(i)]))
                    break;
                vals[static_cast<std::size_t>(i)] = 0;
            }
            if (i < 0) break;
        }
        for (std::size_t f = 0; f < dims.total(); ++f)
            CHECK(std::abs(rebuilt[f] - s.amplitude(f)) == 0.0);
    }
}

TEST_CASE("prefix subset concatenation equals the amplitude vector") {
    std::mt19937_64 rng(7);
    QuditDims dims({2, 2, 3});
    PureState s = random_state(dims, rng);
    std::vector<cplx> concat;
    for (int j0 = 0; j0 < 2; ++j0)
        for (int j1 = 0; j1 < 2; ++j1) {
            auto cv = conditional_vector(s, {{0, 1}, {j0, j1}});
            REQUIRE(cv.size() == 3);
            concat.insert(concat.end(), cv.begin(), cv.end());
        }
    for (std::size_t f = 0; f < dims.total(); ++f)
        CHECK(concat[f] == s.amplitude(f));
}

TEST_CASE("render round-trips through the parser") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        PureState s = random_state(QuditDims({2, 3}), rng);
        PureState back = parse_ket(render_ket(s));
        REQUIRE(back.dims() == s.dims());
        for (std::size_t f = 0; f < s.amplitudes().size(); ++f)
            CHECK(std::abs(back.amplitude(f) - s.amplitude(f)) <= 1e-12);
    }
}

TEST_CASE("qs file round-trip") {
    std::mt19937_64 rng(5);
    PureState s = random_state(QuditDims({2, 2, 2}), rng);
    std::stringstream buf;
    save_state_file(buf, s);
    PureState back = load_state_file(buf);
    REQUIRE(back.dims() == s.dims());
    for (std::size_t f = 0; f < s.amplitudes().size(); ++f)
        CHECK(std::abs(back.amplitude(f) - s.amplitude(f)) <= 1e-15);

    std::stringstream bad("2 0.5 0.5\n");
    CHECK_THROWS_AS(load_state_file(bad), Error);

    std::stringstream commented("# leading comment\ndims: 2 2\n0 1 0\n");
    PureState c = load_state_file(commented);
    CHECK(c.amplitude(0) == cplx{1.0, 0.0});
}

TEST_CASE("norm invariant holds for random construction") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        PureState s = random_state(QuditDims({3, 2, 2}), rng);
        double n = 0.0;
        for (const cplx& a : s.amplitudes()) n += std::norm(a);
        CHECK(std::abs(n - 1.0) <= 1e-10);
    }
}
