#include "doctest.h"
#include "test_support.hpp"

#include "horadam/horadam.hpp"

using namespace horadam;
using horadam::testing::ints;
using horadam::testing::P;

TEST_CASE("preset") {
    CHECK(preset("fibonacci") == HoradamParams::numeric(0, 1, 1, 1));
    CHECK(preset("lucas") == HoradamParams::numeric(2, 1, 1, 1));
    CHECK(preset("pell") == HoradamParams::numeric(0, 1, 2, 1));
    const HoradamParams cheb = preset("chebyshev-u");
    CHECK(cheb.a == QPolynomial(1));
    CHECK(cheb.b == QPolynomial(P("2t")));
    CHECK(cheb.p == QPolynomial(P("2t")));
    CHECK(cheb.q == QPolynomial(-1));
    CHECK_FALSE(cheb.is_numeric());
    CHECK(preset("pell").is_numeric());
    CHECK_THROWS_AS(preset("tribonacci"), std::invalid_argument);
}

TEST_CASE("horadam_seq") {
    CHECK(horadam_seq(preset("fibonacci"), 7) == ints({0, 1, 1, 2, 3, 5, 8}));
    CHECK(horadam_seq(preset("lucas"), 6) == ints({2, 1, 3, 4, 7, 11}));
    CHECK(horadam_seq(preset("pell"), 6) == ints({0, 1, 2, 5, 12, 29}));
    CHECK(horadam_seq(preset("pell"), 0).empty());
    CHECK(horadam_seq(preset("lucas"), 1) == ints({2}));

    const auto sym = horadam_seq(HoradamParams::symbolic(), 4);
    CHECK(sym[2] == QPolynomial(P("p*b + q*a")));
    CHECK(sym[3] == QPolynomial(P("p^2*b + p*q*a + q*b")));

    const auto half = horadam_seq(HoradamParams::numeric(1, Rational(1, 2), Rational(1, 2), Rational(1, 3)), 3);
    CHECK(half[2] == QPolynomial(Rational(7, 12)));
}

TEST_CASE("power_series_oracle") {
    CHECK(power_series_oracle(preset("fibonacci"), 2, 7) == ints({0, 1, 1, 4, 9, 25, 64}));
    const HoradamParams odd = HoradamParams::numeric(3, -2, 2, -3);
    CHECK(power_series_oracle(odd, 1, 12) == horadam_seq(odd, 12));
    const auto cheb = power_series_oracle(preset("chebyshev-u"), 1, 3);
    CHECK(cheb[0] == QPolynomial(1));
    CHECK(cheb[1] == QPolynomial(P("2t")));
    CHECK(cheb[2] == QPolynomial(P("4t^2 - 1")));
    CHECK_THROWS_AS(power_series_oracle(odd, 0, 3), std::invalid_argument);
}

TEST_CASE("mixed_series_oracle") {
    CHECK(mixed_series_oracle(preset("fibonacci"), 2, 1, 5) == ints({0, 0, 1, 2, 6, 15}));
    const auto lucas = mixed_series_oracle(preset("lucas"), 2, 1, 3);
    CHECK(lucas[0] == QPolynomial(0));
    CHECK(lucas[1] == QPolynomial(2));
    // d = k: the coefficient of x^{n+1} is w_{n+1}^k.
    CHECK(mixed_series_oracle(preset("pell"), 2, 2, 4) == ints({0, 1, 4, 25, 144}));
    CHECK_THROWS_AS(mixed_series_oracle(preset("pell"), 2, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(mixed_series_oracle(preset("pell"), 2, 3, 4), std::invalid_argument);
}

TEST_CASE("recurrence invariant") {
    for (const auto& name : preset_names()) {
        const HoradamParams params = preset(name);
        CHECK(satisfies_recurrence(horadam_seq(params, 30), params));
    }
    const HoradamParams sym = HoradamParams::symbolic();
    CHECK(satisfies_recurrence(horadam_seq(sym, 10), sym));
    auto broken = horadam_seq(preset("fibonacci"), 10);
    broken[6] = QPolynomial(9);
    CHECK_FALSE(satisfies_recurrence(broken, preset("fibonacci")));
}

TEST_CASE("homogeneity in the seeds") {
    const std::vector<HoradamParams> cases = {preset("fibonacci"), preset("lucas"), preset("pell"),
                                              HoradamParams::numeric(3, -2, 2, -3),
                                              HoradamParams::numeric(Rational(1, 2), 5, -1, Rational(2, 7))};
    const Rational lambda = 3;
    for (const auto& params : cases) {
        HoradamParams scaled = params;
        scaled.a = scaled.a * QPolynomial(lambda);
        scaled.b = scaled.b * QPolynomial(lambda);
        for (unsigned k = 1; k <= 4; ++k) {
            const auto base = power_series_oracle(params, k, 20);
            const auto big = power_series_oracle(scaled, k, 20);
            for (std::size_t n = 0; n < base.size(); ++n) {
                REQUIRE(big[n] == base[n] * QPolynomial(pow(lambda, k)));
            }
        }
    }
}

TEST_CASE("Chebyshev preset at t = 1 gives n + 1") {
    const auto seq = horadam_seq(preset("chebyshev-u"), 21);
    for (std::size_t n = 0; n < seq.size(); ++n) {
        const QPolynomial at_one = poly_substitute(seq[n].num(), {{Var::t, Rational(1)}});
        REQUIRE(at_one == QPolynomial(Rational(static_cast<long>(n) + 1)));
    }
}

TEST_CASE("params json") {
    const auto j = to_json(preset("chebyshev-u"));
    CHECK(j["a"] == "1");
    CHECK(j["b"] == "2*t");
    CHECK(j["q"] == "-1");
    CHECK(to_json(HoradamParams::numeric(Rational(1, 2), 0, 0, 0))["a"] == "1/2");
}
