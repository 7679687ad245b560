#pragma once

#include <string>
#include <vector>

#include "modcount/bigreal.hpp"
#include "modcount/common.hpp"

namespace modcount::hiprec {

// ---------------------------------------------------------------------------
// zeta / L-series
// ---------------------------------------------------------------------------

// Hurwitz zeta(s, a) = sum_{k>=0} (k+a)^(-s) for rational s >= 3/2 and
// a in (0, 1], by Euler-Maclaurin with exact rational Bernoulli numbers.
BigReal hurwitz_zeta(const Rat& s, const Rat& a, int digits);

BigReal riemann_zeta(const Rat& s, int digits);

// Dirichlet L-series of the two characters mod 3:
//   L_j(s) = 3^(-s) * ( zeta(s,1/3) + chi_j(2) * zeta(s,2/3) ),  chi_0(2)=1, chi_1(2)=-1.
BigReal l_series_mod3(int j, const Rat& s, int digits);

// ---------------------------------------------------------------------------
// prime zeta functions
// ---------------------------------------------------------------------------

// Primes restricted to an arithmetic progression: k=1 is all primes; k=3
// selects p = l (mod 3). p=3 itself belongs to neither class mod 3.
struct PrimeClass {
    int k = 1;
    int l = 0;

    u64 p_min() const;
    bool contains(u64 p) const;
    std::string to_string() const;
};

// P(s) = sum_p p^(-s) via Moebius inversion of ln zeta(ns).
BigReal prime_zeta(const Rat& s, int digits);

// P_{3,1}, P_{3,2} via Moebius inversion of logarithms of L-series ratios.
BigReal prime_zeta_mod3(int l, const Rat& s, int digits);

BigReal prime_zeta_class(const PrimeClass& cls, const Rat& s, int digits);

// ---------------------------------------------------------------------------
// gamma
// ---------------------------------------------------------------------------

// Gamma at positive rational arguments by Spouge's approximation with
// parameter a ~ 1.3 * working digits; arguments > 2 are reduced by the
// recurrence. Checked against the reflection identity in the tests.
BigReal gamma_rational(const Rat& q, int digits);

// ---------------------------------------------------------------------------
// prime products: C = prod_{p in class} f(p)
// ---------------------------------------------------------------------------

// One factor of f as a polynomial in x = 1/p with exact rational coefficients
// (constant term must be 1) raised to an exact rational exponent.
struct ProductFactor {
    std::vector<Rat> poly;  // ascending powers of x
    Rat exponent = Rat(1);
};

// Tail coefficients of ln f: ln f(p) = sum_{n>=2} (c[n]/n) p^(-n).
// c[0] and c[1] are returned as zero; a nonzero c_1 (divergent product) and a
// constant term != 1 are rejected.
std::vector<Rat> expand_log_series(const std::vector<ProductFactor>& factors, int n_max);

struct ProductSpec {
    PrimeClass cls;
    std::vector<ProductFactor> factors;
};

// JSON wire format:
//   { "class": [k, l], "factors": [ { "poly": ["1","-1"], "exponent": "1" }, ... ] }
// Coefficients are rational strings in ascending degree of x = 1/p.
ProductSpec parse_product_spec(const std::string& json_text);
ProductSpec load_product_spec(const std::string& path);

struct PrimeProductOptions {
    u64 cutoff = 101;   // head product covers class primes <= cutoff
    int digits = 30;
    int truncate_n = 0; // 0 = run the tail series to its error bound
    bool validate = true;  // re-run at digits+10 and compare
};

struct PrimeProductResult {
    BigReal value;
    bool head_is_exact = false;  // all exponents integral
    Rat head_exact;              // exact rational head when head_is_exact
    std::vector<u64> head_primes;
    int terms_used = 0;          // highest tail index n evaluated
    u64 next_class_prime = 0;    // first class prime beyond the cutoff
};

PrimeProductResult prime_product(const ProductSpec& spec, const PrimeProductOptions& opt);

// ---------------------------------------------------------------------------
// named constants
// ---------------------------------------------------------------------------

struct ConstantInfo {
    std::string name;
    std::string description;
    std::string published_digits;  // quoted decimal prefix from the literature, empty if none
    bool conjectural = false;
    // the assembled partial-sum coefficient this constant feeds, e.g.
    // K_cbrt_unity -> cbrt_unity_sum = (11/9)(sqrt(3)/2pi) K; empty when the
    // entry already is a leading coefficient
    std::string assembled_form;
};

struct ConstantValue {
    BigReal value;
    ConstantInfo info;
};

const std::vector<ConstantInfo>& constant_registry();
ConstantValue constant(const std::string& name, int digits);

// Re-evaluate a public result at digits+10 and require agreement to one unit
// in the digits-th digit. Used by every evaluator above; exposed for tests.
struct precision_mismatch : math_error {
    using math_error::math_error;
};

}  // namespace modcount::hiprec
