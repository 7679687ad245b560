#include <doctest.h>

#include <cmath>

#include "modcount/asymptotics.hpp"
#include "modcount/hiprec.hpp"

using namespace modcount;

namespace {
u128 sweep_total(const char* w, u64 limit, u32 mod = 1, u32 res = 0) {
    SweepOptions opt;
    opt.limit = limit;
    opt.mod = mod;
    auto r = partial_sum_sweep(weight_from_name(w), opt);
    return r.scaled_total(mod > 1 ? res : mod);
}
}  // namespace

TEST_CASE("small partial sums by hand") {
    CHECK(sweep_total("phi", 10) == 32);
    CHECK(sweep_total("2^omega", 10) == 23);  // 1+2+2+2+2+4+2+2+2+4
    CHECK(sweep_total("sqrt_unity", 10, 8, 0) == 4);  // only n = 8 contributes
}

TEST_CASE("sweep equals the serial reference for every weight") {
    for (const char* w : {"phi", "2^omega", "3^omega_tilde", "phi/2^omega",
                          "phi/3^omega_tilde", "sqrt_unity", "cbrt_unity", "sqrt_nullity",
                          "cbrt_nullity", "squares_units", "cubes_units", "squares_ring",
                          "cubes_ring", "sqrt_neg_unity"}) {
        INFO(w);
        REQUIRE(sweep_total(w, 10000) == naive_weight_sum(weight_from_name(w), 10000));
    }
}

TEST_CASE("sweep equals the brute-force oracle loop for counting problems") {
    for (const char* w : {"sqrt_unity", "cbrt_unity", "sqrt_nullity", "cbrt_nullity",
                          "squares_units", "cubes_units", "squares_ring", "cubes_ring",
                          "sqrt_neg_unity"}) {
        Weight weight = weight_from_name(w);
        u128 oracle_sum = 0;
        for (u64 n = 1; n <= 10000; ++n) oracle_sum += count_oracle(weight.kind, n).value;
        INFO(w);
        REQUIRE(sweep_total(w, 10000) == oracle_sum);
    }
}

TEST_CASE("progression buckets match independent restricted sums") {
    for (const char* w : {"2^omega", "phi/2^omega"}) {
        for (u32 l = 0; l < 8; ++l) {
            INFO(w << " class " << l);
            REQUIRE(sweep_total(w, 4000, 8, l) ==
                    naive_weight_sum(weight_from_name(w), 4000, 8, l));
        }
    }
    for (const char* w : {"3^omega_tilde", "phi/3^omega_tilde"}) {
        for (u32 l = 0; l < 9; ++l) {
            INFO(w << " class " << l);
            REQUIRE(sweep_total(w, 4000, 9, l) ==
                    naive_weight_sum(weight_from_name(w), 4000, 9, l));
        }
    }
}

TEST_CASE("residue classes partition the unrestricted sum") {
    SweepOptions opt;
    opt.limit = 100000;
    for (const char* w : {"phi", "2^omega", "3^omega_tilde", "phi/2^omega",
                          "phi/3^omega_tilde", "sqrt_unity", "cbrt_unity", "sqrt_nullity",
                          "cbrt_nullity", "squares_units", "cubes_units", "squares_ring",
                          "cubes_ring", "sqrt_neg_unity"}) {
        for (u32 mod : {8u, 9u}) {
            opt.mod = mod;
            auto r = partial_sum_sweep(weight_from_name(w), opt);
            u128 total = 0;
            for (u32 l = 0; l < mod; ++l) total += r.scaled_total(l);
            INFO(w << " mod " << mod);
            REQUIRE(total == r.scaled_total(mod));
            REQUIRE(total == sweep_total(w, opt.limit));
        }
    }
}

TEST_CASE("block size does not change any result") {
    for (u64 bs : {1024u, 4096u, 1u << 20}) {
        SweepOptions opt;
        opt.limit = 50000;
        opt.mod = 9;
        opt.block_size = bs;
        auto r = partial_sum_sweep(weight_from_name("phi/3^omega_tilde"), opt);
        SweepOptions ref;
        ref.limit = 50000;
        ref.mod = 9;
        auto r0 = partial_sum_sweep(weight_from_name("phi/3^omega_tilde"), ref);
        REQUIRE(r.checkpoint_ns == r0.checkpoint_ns);
        REQUIRE(r.checkpoint_buckets == r0.checkpoint_buckets);
    }
}

TEST_CASE("case-split reconstruction of the sqrt-unity sum at N = 1e5") {
    // a(n) = 2^omega(n) scaled by 1/2, 1, 2 according to n mod 8, so the
    // partial sums must recombine exactly at any finite N
    SweepOptions opt;
    opt.limit = 100000;
    opt.mod = 8;
    auto two = partial_sum_sweep(weight_from_name("2^omega"), opt);
    u128 recombined = (two.scaled_total(2) + two.scaled_total(6)) / 2 +
                      two.scaled_total(1) + two.scaled_total(3) + two.scaled_total(5) +
                      two.scaled_total(7) + two.scaled_total(4) + 2 * two.scaled_total(0);
    REQUIRE(recombined == sweep_total("sqrt_unity", opt.limit));
}

TEST_CASE("checkpoints form the geometric ladder") {
    SweepOptions opt;
    opt.limit = 1000;
    opt.extra_checkpoints = {137};
    auto r = partial_sum_sweep(weight_from_name("phi"), opt);
    REQUIRE(!r.checkpoint_ns.empty());
    CHECK(r.checkpoint_ns.back() == 1000);
    bool has137 = false, has500 = false;
    for (size_t i = 0; i < r.checkpoint_ns.size(); ++i) {
        if (r.checkpoint_ns[i] == 137) has137 = true;
        if (r.checkpoint_ns[i] == 500) has500 = true;
        if (i) CHECK(r.checkpoint_ns[i] > r.checkpoint_ns[i - 1]);
    }
    CHECK(has137);
    CHECK(has500);
    // each checkpoint sum equals a fresh sweep at that limit
    for (size_t i = 0; i < r.checkpoint_ns.size(); ++i)
        REQUIRE(r.scaled_sum(i, 1) == sweep_total("phi", r.checkpoint_ns[i]));
}

TEST_CASE("bit-identical results across thread counts") {
    SweepOptions a;
    a.limit = 200000;
    a.mod = 9;
    a.threads = 1;
    auto ra = partial_sum_sweep(weight_from_name("phi/3^omega_tilde"), a);
    a.threads = 4;
    auto rb = partial_sum_sweep(weight_from_name("phi/3^omega_tilde"), a);
    REQUIRE(ra.checkpoint_ns == rb.checkpoint_ns);
    REQUIRE(ra.checkpoint_buckets == rb.checkpoint_buckets);
}

TEST_CASE("ratio ladder approaches 1 for the phi law") {
    SweepOptions opt;
    opt.limit = 1000000;
    auto r = partial_sum_sweep(weight_from_name("phi"), opt);
    const AsymptoticForm* form = lookup_form(weight_from_name("phi"), 1, 0);
    REQUIRE(form != nullptr);
    BigReal sum = sum_as_bigreal(r.scaled_total(1), r.scale, 25);
    double ratio = (sum / predicted_main_term(*form, opt.limit, 25)).to_double();
    CHECK(std::fabs(ratio - 1.0) < 1e-3);
}

TEST_CASE("progression coefficients carry the quoted fractions") {
    auto coeff = [](const AsymptoticForm& f) {
        return (hiprec::constant(f.constant_name, 25).value *
                BigReal::from_rat(f.scale, 25))
            .to_double();
    };
    double pi = 3.14159265358979323846;

    // 2^omega classes mod 8: odd -> 1/(2 pi^2), others balance to 1/pi^2
    const AsymptoticForm* f80 = lookup_form(weight_from_name("2^omega"), 8, 0);
    const AsymptoticForm* f81 = lookup_form(weight_from_name("2^omega"), 8, 1);
    REQUIRE(f80 != nullptr);
    REQUIRE(f81 != nullptr);
    CHECK(coeff(*f80) == doctest::Approx(1 / (pi * pi)).epsilon(1e-12));
    CHECK(coeff(*f81) == doctest::Approx(1 / (2 * pi * pi)).epsilon(1e-12));

    // 3^omega_tilde classes mod 9 all carry C/9
    double c3 = hiprec::constant("three_omega_tilde_sum", 25).value.to_double();
    const AsymptoticForm* f93 = lookup_form(weight_from_name("3^omega_tilde"), 9, 3);
    REQUIRE(f93 != nullptr);
    CHECK(coeff(*f93) == doctest::Approx(c3 / 9).epsilon(1e-12));

    // phi/2^omega: (8,2) carries C/40 where C is the N^2-law base constant
    double c4 = 2 * hiprec::constant("phi_over_2omega_sum", 25).value.to_double();
    const AsymptoticForm* f82 = lookup_form(weight_from_name("phi/2^omega"), 8, 2);
    REQUIRE(f82 != nullptr);
    CHECK(coeff(*f82) == doctest::Approx(c4 / 40).epsilon(1e-12));
    const AsymptoticForm* f83 = lookup_form(weight_from_name("phi/2^omega"), 8, 3);
    CHECK(coeff(*f83) == doctest::Approx(c4 / 10).epsilon(1e-12));

    // phi/3^omega_tilde: coprime classes C/16, the rest C/24
    double c5 = 2 * hiprec::constant("phi_over_3omega_tilde_sum", 25).value.to_double();
    CHECK(coeff(*lookup_form(weight_from_name("phi/3^omega_tilde"), 9, 5)) ==
          doctest::Approx(c5 / 16).epsilon(1e-12));
    CHECK(coeff(*lookup_form(weight_from_name("phi/3^omega_tilde"), 9, 6)) ==
          doctest::Approx(c5 / 24).epsilon(1e-12));
}

TEST_CASE("registry is complete and consistent") {
    CHECK(asymptotic_forms().size() == 14);
    CHECK(progression_targets().size() == 34);
    for (const auto& t : progression_targets()) {
        CHECK((t.k == 8 || t.k == 9));
        CHECK(t.l < t.k);
        // every referenced constant resolves
        REQUIRE_NOTHROW(hiprec::constant(t.form.constant_name, 20));
    }
    CHECK(lookup_form(weight_from_name("2^omega"), 8, 0) != nullptr);
    CHECK(lookup_form(weight_from_name("2^omega"), 8, 9) == nullptr);
    CHECK(lookup_form(weight_from_name("cbrt_unity"), 1, 0) != nullptr);
}

TEST_CASE("dirichlet partial sums") {
    SweepOptions opt;
    // single term
    Weight w{Weight::Tag::Count, ProblemKind::SqrtNullity};
    CHECK(dirichlet_partial_sum(w, Rat(2), 1, 30, opt).to_fixed(10) == "1.0000000000");

    // against the closed form zeta(3)zeta(2)/zeta(4), tail below 4/sqrt(N)
    BigReal closed = hiprec::riemann_zeta(Rat(3), 30) * hiprec::riemann_zeta(Rat(2), 30) /
                     hiprec::riemann_zeta(Rat(4), 30);
    BigReal partial = dirichlet_partial_sum(w, Rat(2), 10000, 30, opt);
    CHECK((partial - closed).abs().to_double() < 4.0 / 100.0);

    // phi: sum phi(n)/n^3 -> zeta(2)/zeta(3); phi tail ~ 1/N
    BigReal closed_phi = hiprec::riemann_zeta(Rat(2), 30) / hiprec::riemann_zeta(Rat(3), 30);
    BigReal partial_phi =
        dirichlet_partial_sum({Weight::Tag::Phi}, Rat(3), 100000, 30, opt);
    CHECK((partial_phi - closed_phi).abs().to_double() < 2e-5);

    // non-integer s path against a direct double loop
    BigReal got = dirichlet_partial_sum(w, Rat(3, 2), 1000, 30, opt);
    double direct = 0;
    for (u64 n = 1; n <= 1000; ++n)
        direct += double(count_formula(ProblemKind::SqrtNullity, factorize(n)).value) /
                  std::pow(double(n), 1.5);
    CHECK(std::fabs(got.to_double() - direct) < 1e-9);

    // determinism of the exact path across thread counts
    opt.threads = 1;
    BigReal t1 = dirichlet_partial_sum(w, Rat(2), 50000, 30, opt);
    opt.threads = 4;
    BigReal t4 = dirichlet_partial_sum(w, Rat(2), 50000, 30, opt);
    CHECK(t1.cmp(t4) == 0);

    CHECK_THROWS_AS(dirichlet_partial_sum(w, Rat(1), 100, 20, SweepOptions{}), invalid_input);
    CHECK_THROWS_AS(
        dirichlet_partial_sum({Weight::Tag::TwoOmega}, Rat(2), 100, 20, SweepOptions{}),
        invalid_input);
}

TEST_CASE("caps and argument validation") {
    SweepOptions opt;
    opt.limit = 100;
    opt.cap = 50;
    CHECK_THROWS_AS(partial_sum_sweep(weight_from_name("phi"), opt), cap_exceeded);
    opt.cap = kDefaultSumCap;
    opt.limit = 0;
    CHECK_THROWS_AS(partial_sum_sweep(weight_from_name("phi"), opt), invalid_input);
    CHECK_THROWS_AS(weight_from_name("totient"), invalid_input);
    Weight sixth{Weight::Tag::Count, ProblemKind::SixthPowersRing};
    opt.limit = 10;
    CHECK_THROWS_AS(partial_sum_sweep(sixth, opt), invalid_input);
}
