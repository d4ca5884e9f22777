#include <cmath>

#include "conc/bench.hpp"

#include "doctest.h"

using namespace conc;

TEST_CASE("bench rows echo agreeing E values") {
    auto rows = run_bench({{2, 2}, {2, 2, 2}}, {{0}}, 3, 1);
    REQUIRE(rows.size() == 4);  // two dims x one cut x two routes
    for (std::size_t i = 0; i < rows.size(); i += 2) {
        CHECK(rows[i].route == Route::wedge);
        CHECK(rows[i + 1].route == Route::trace);
        CHECK(std::abs(rows[i].e - rows[i + 1].e) <= 1e-9);
        CHECK(rows[i].median_ns > 0);
        CHECK(rows[i + 1].median_ns > 0);
    }
}

TEST_CASE("bench CSV format") {
    auto rows = run_bench({{2, 3}}, {{1}}, 3, 7);
    std::string csv = bench_to_csv(rows);
    CHECK(csv.rfind("dims,cut,route,reps,median_ns,E\n", 0) == 0);
    CHECK(csv.find("2x3,1,wedge,3,") != std::string::npos);
    CHECK(csv.find("2x3,1,trace,3,") != std::string::npos);
}

TEST_CASE("reps below 3 are rejected") {
    CHECK_THROWS_AS(run_bench({{2, 2}}, {{0}}, 2, 1), Error);
}

TEST_CASE("wedge is visibly slower on an 8-qubit cut") {
    auto rows = run_bench({std::vector<int>(8, 2)}, {{0}}, 5, 3);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].median_ns > rows[1].median_ns);
}
