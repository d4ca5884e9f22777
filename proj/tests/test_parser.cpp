#include <cmath>

#include "conc/ket_parser.hpp"

#include "doctest.h"

using namespace conc;

TEST_CASE("bell expression") {
    PureState s = parse_ket("1/sqrt(2)*|00> + 1/sqrt(2)*|11>");
    REQUIRE(s.dims().dims() == std::vector<int>{2, 2});
    double v = 1.0 / std::sqrt(2.0);
    CHECK(s.amplitude(0).real() == doctest::Approx(v).epsilon(1e-12));
    CHECK(std::abs(s.amplitude(1)) == 0.0);
    CHECK(std::abs(s.amplitude(2)) == 0.0);
    CHECK(s.amplitude(3).real() == doctest::Approx(v).epsilon(1e-12));
    CHECK(s.was_normalized());
}

TEST_CASE("HS expression with complex phases") {
    PureState s = parse_ket(
        "1/sqrt(6)*(|0011>+|1100>) + exp(2i*pi/3)/sqrt(6)*(|1010>+|0101>) + "
        "exp(4i*pi/3)/sqrt(6)*(|1001>+|0110>)");
    REQUIRE(s.dims().dims() == std::vector<int>{2, 2, 2, 2});
    double v = 1.0 / std::sqrt(6.0);
    CHECK(s.amplitude(0b0011).real() == doctest::Approx(v).epsilon(1e-12));
    CHECK(s.amplitude(0b0011).imag() == doctest::Approx(0.0));
    cplx omega = std::polar(1.0, 2.0 * M_PI / 3.0);
    CHECK(std::abs(s.amplitude(0b1010) - v * omega) <= 1e-12);
    CHECK(std::abs(s.amplitude(0b0110) - v * omega * omega) <= 1e-12);
}

TEST_CASE("coefficient forms") {
    // bare ket, leading minus, "2i", parenthesized complex
    PureState a = parse_ket("|0> - |1>");
    CHECK(a.amplitude(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(a.amplitude(1).real() == doctest::Approx(-1.0 / std::sqrt(2.0)));

    PureState b = parse_ket("2i*|0> + (1+1i)*|1>");
    CHECK(b.amplitude(0).imag() > 0.0);
    CHECK(b.amplitude(1).real() == doctest::Approx(b.amplitude(1).imag()));

    PureState c = parse_ket("pi*|0> + |1>");
    CHECK(c.amplitude(0).real() / c.amplitude(1).real() == doctest::Approx(M_PI));

    // coefficient distributed over a parenthesized ket sum, no '*'
    PureState d = parse_ket("0.5(|00>+|11>) + 0.5*(|01>-|10>)");
    CHECK(d.amplitude(3).real() == doctest::Approx(0.5));
    CHECK(d.amplitude(2).real() == doctest::Approx(-0.5));
}

TEST_CASE("comma-separated labels for d > 10") {
    PureState s = parse_ket("|11,0> + |0,1>");
    REQUIRE(s.dims().dims() == std::vector<int>{12, 2});
    CHECK(s.amplitude(11 * 2 + 0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(s.amplitude(0 * 2 + 1).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("explicit dims validate labels") {
    PureState s = parse_ket("|01>", QuditDims({2, 3}));
    CHECK(s.dims().dims() == std::vector<int>{2, 3});
    CHECK(s.amplitude(1).real() == doctest::Approx(1.0));

    CHECK_THROWS_AS(parse_ket("|02>", QuditDims({2, 2})), Error);
    CHECK_THROWS_AS(parse_ket("|0>", QuditDims({2, 2})), Error);
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_ket("|01");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 3);
        CHECK(std::string(e.what()).find("'>'") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_ket("1/sqrt(2)*"), SyntaxError);
    CHECK_THROWS_AS(parse_ket("foo*|0>"), SyntaxError);
    CHECK_THROWS_AS(parse_ket("|0> + |01>"), Error);  // unequal arity
    CHECK_THROWS_AS(parse_ket("|01> - |01>"), Error);  // cancels to zero
    CHECK_THROWS_AS(parse_ket(""), SyntaxError);
    CHECK_THROWS_AS(parse_ket("|>"), SyntaxError);
}

TEST_CASE("normalization warning flag") {
    CHECK(parse_ket("1/sqrt(2)*|00> + 1/sqrt(2)*|11>").was_normalized());
    CHECK_FALSE(parse_ket("|00> + |11>").was_normalized());
}
