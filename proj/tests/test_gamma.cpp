#include <doctest.h>

#include "hiprec_internal.hpp"
#include "modcount/hiprec.hpp"

using namespace modcount;
using namespace modcount::hiprec;

TEST_CASE("gamma at the classical points") {
    BigReal pi = BigReal::pi(40);
    CHECK((gamma_rational(Rat(1, 2), 30) - pi.sqrt()).abs().to_double() < 1e-29);
    CHECK((gamma_rational(Rat(1), 30) - BigReal::from_u64(1, 40)).abs().to_double() < 1e-29);
    CHECK((gamma_rational(Rat(2), 30) - BigReal::from_u64(1, 40)).abs().to_double() < 1e-29);
    CHECK((gamma_rational(Rat(3), 30) - BigReal::from_u64(2, 40)).abs().to_double() < 1e-29);
    CHECK((gamma_rational(Rat(6), 30) - BigReal::from_u64(120, 40)).abs().to_double() < 1e-28);
    CHECK(gamma_rational(Rat(2, 3), 30).to_fixed_trunc(18) == "1.354117939426400416");
    CHECK_THROWS_AS(gamma_rational(Rat(0), 20), invalid_input);
    CHECK_THROWS_AS(gamma_rational(Rat(-1, 2), 20), invalid_input);
}

TEST_CASE("two Spouge parameters agree") {
    // the parameter tracks the working digits, so evaluating with a four-digit
    // offset shifts the Spouge a by ~5 while the first 40 digits must persist
    BigReal a = detail::gamma_core(Rat(2, 3), 45);
    BigReal b = detail::gamma_core(Rat(2, 3), 49);
    CHECK(agrees_to_digits(a, b, 42));
}

TEST_CASE("reflection: Gamma(1/3) Gamma(2/3) = 2 pi / sqrt(3)") {
    BigReal lhs = gamma_rational(Rat(1, 3), 30) * gamma_rational(Rat(2, 3), 30);
    BigReal rhs = BigReal::pi(45) * BigReal::from_u64(2, 45) /
                  BigReal::from_u64(3, 45).sqrt();
    CHECK((lhs - rhs).abs().to_double() < 1e-28);
}

TEST_CASE("gamma against the library oracle") {
    for (auto q : {Rat(1, 3), Rat(2, 3), Rat(5, 4), Rat(7, 2)}) {
        BigReal mine = gamma_rational(q, 30);
        BigReal ref(45);
        mpfr_t x;
        mpfr_init2(x, digits_to_bits(45));
        mpfr_set_q(x, q.raw(), MPFR_RNDN);
        mpfr_gamma(ref.raw(), x, MPFR_RNDN);
        mpfr_clear(x);
        REQUIRE((mine - ref).abs().to_double() < 1e-28);
    }
}
