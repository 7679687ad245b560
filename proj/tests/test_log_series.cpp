#include <doctest.h>

#include <cmath>

#include "modcount/hiprec.hpp"

using namespace modcount;
using namespace modcount::hiprec;

TEST_CASE("ln((1-x)(1+2x)/(1+x)) has c_n = 2^n - 2 (odd), -2^n (even)") {
    std::vector<ProductFactor> f = {{{Rat(1), Rat(-1)}, Rat(1)},
                                    {{Rat(1), Rat(2)}, Rat(1)},
                                    {{Rat(1), Rat(1)}, Rat(-1)}};
    auto c = expand_log_series(f, 12);
    CHECK(c[1].is_zero());
    for (int n = 2; n <= 12; ++n) {
        long want = n % 2 ? (1L << n) - 2 : -(1L << n);
        REQUIRE(c[n] == Rat(want));
    }
}

TEST_CASE("fractional exponents and the numeric series check") {
    // f = (1-x)^(1/2) (1+x/2): c_2 = 2*(1/2*(-1/2) + (-1/8)) = -3/4
    std::vector<ProductFactor> f = {{{Rat(1), Rat(-1)}, Rat(1, 2)},
                                    {{Rat(1), Rat(1, 2)}, Rat(1)}};
    auto c = expand_log_series(f, 40);
    CHECK(c[1].is_zero());
    CHECK(c[2] == Rat(-3, 4));

    // ln f(10) must match sum c_n/(n 10^n)
    double x = 0.1;
    double direct = 0.5 * std::log(1 - x) + std::log(1 + x / 2);
    double series = 0.0;
    for (int n = 2; n <= 40; ++n) series += c[n].to_double() / n * std::pow(x, n);
    CHECK(std::fabs(direct - series) < 1e-12);
}

TEST_CASE("empty factor list expands to zero") {
    auto c = expand_log_series({}, 6);
    for (int n = 0; n <= 6; ++n) CHECK(c[n].is_zero());
}

TEST_CASE("rejections") {
    // constant term != 1
    CHECK_THROWS_AS(expand_log_series({{{Rat(2), Rat(1)}, Rat(1)}}, 4), invalid_input);
    // nonzero c_1 marks a divergent prime product
    CHECK_THROWS_AS(expand_log_series({{{Rat(1), Rat(-1)}, Rat(1)}}, 4), math_error);
    CHECK_THROWS_AS(expand_log_series({}, 1), invalid_input);
}
