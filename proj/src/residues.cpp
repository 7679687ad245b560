#include "modcount/residues.hpp"


namespace modcount {

const std::vector<ProblemInfo>& problem_catalog() {
    static const std::vector<ProblemInfo> catalog = {
        {ProblemKind::SqrtUnity, "sqrt_unity", "x^2 = 1 in Z_n^*", true, false},
        {ProblemKind::CbrtUnity, "cbrt_unity", "x^3 = 1 in Z_n^*", true, false},
        {ProblemKind::SqrtNullity, "sqrt_nullity", "x^2 = 0 in Z_n", true, false},
        {ProblemKind::CbrtNullity, "cbrt_nullity", "x^3 = 0 in Z_n", true, false},
        {ProblemKind::SquaresUnits, "squares_units", "images of y^2 in Z_n^*", true, false},
        {ProblemKind::CubesUnits, "cubes_units", "images of y^3 in Z_n^*", true, false},
        {ProblemKind::SquaresRing, "squares_ring", "images of y^2 in Z_n", true, false},
        {ProblemKind::CubesRing, "cubes_ring", "images of y^3 in Z_n", true, true},
        {ProblemKind::SqrtNegUnity, "sqrt_neg_unity", "x^2 = -1 in Z_n^*", false, false},
        {ProblemKind::SixthPowersRing, "sixth_powers_ring", "images of y^6 in Z_n", false, false},
    };
    return catalog;
}

const char* kind_name(ProblemKind kind) {
    for (const auto& info : problem_catalog()) {
        if (info.kind == kind) return info.name;
    }
    throw invalid_input("unknown problem kind");
}

std::optional<ProblemKind> kind_from_name(std::string_view name) {
    for (const auto& info : problem_catalog()) {
        if (name == info.name) return info.kind;
    }
    return std::nullopt;
}

bool is_closed_form(ProblemKind kind) {
    for (const auto& info : problem_catalog()) {
        if (info.kind == kind) return info.closed_form;
    }
    return false;
}

bool is_conjectural(ProblemKind kind) { return kind == ProblemKind::CubesRing; }

namespace {

u64 pow_u64(u64 p, u32 e) {
    u128 v = 1;
    while (e--) {
        v *= p;
        if (v > UINT64_MAX) throw math_error("local factor overflows 64 bits");
    }
    return u64(v);
}

// exact division with integrality check; the local tables must never truncate
u64 exact_div(u128 num, u128 den) {
    if (den == 0 || num % den != 0)
        throw math_error("local factor: non-integral division");
    u128 q = num / den;
    if (q > UINT64_MAX) throw math_error("local factor overflows 64 bits");
    return u64(q);
}

u128 pow_u128(u64 p, u32 e) {
    u128 v = 1;
    while (e--) v *= p;
    return v;
}

}  // namespace

u64 local_factor(ProblemKind kind, u64 p, u32 r) {
    if (r == 0) return 1;
    switch (kind) {
        case ProblemKind::SqrtUnity:
            if (p == 2) return r == 1 ? 1 : (r == 2 ? 2 : 4);
            return 2;
        case ProblemKind::CbrtUnity:
            if (p == 3) return r == 1 ? 1 : 3;
            return p % 3 == 1 ? 3 : 1;
        case ProblemKind::SqrtNullity:
            return pow_u64(p, r / 2);
        case ProblemKind::CbrtNullity:
            return pow_u64(p, 2 * r / 3);
        case ProblemKind::SquaresUnits:
            // phi(p^r) / sqrt-unity local factor; the quotient is integral
            if (p == 2) return r <= 2 ? 1 : pow_u64(2, r - 3);
            return pow_u64(p, r - 1) * ((p - 1) / 2);
        case ProblemKind::CubesUnits:
            if (p == 3) return r == 1 ? 2 : 2 * pow_u64(3, r - 2);
            if (p % 3 == 1) return pow_u64(p, r - 1) * ((p - 1) / 3);
            return pow_u64(p, r - 1) * (p - 1);
        case ProblemKind::SquaresRing:
            if (p == 2) return exact_div(pow_u128(2, r - 1) + (r % 2 == 0 ? 4 : 5), 3);
            // r = 1 collapses to (p+1)^2 / (2(p+1)); r >= 2 forces p < 2^31.5,
            // so the p^(r+1) intermediate below stays inside 128 bits
            if (r == 1) return (p + 1) / 2;
            return exact_div(pow_u128(p, r + 1) + (r % 2 == 0 ? p + 2 : 2 * p + 1),
                             2 * u128(p + 1));
        case ProblemKind::CubesRing: {
            u128 den = u128(p) * p + p + 1;
            if (p == 3) {
                static constexpr u64 add3[3] = {10, 30, 12};
                return exact_div(pow_u128(3, r + 1) + add3[r % 3], 13);
            }
            if (r == 1) return p % 3 == 2 ? p : (p + 2) / 3;  // avoids the p^3 intermediate
            if (p % 3 == 2) {
                u128 add = r % 3 == 0 ? u128(p) + 1
                         : r % 3 == 1 ? u128(p) * p + p
                                      : u128(p) * p + 1;
                return exact_div(pow_u128(p, r + 2) + add, den);
            }
            u128 add = r % 3 == 0 ? 2 * u128(p) * p + 3 * p + 3
                     : r % 3 == 1 ? 3 * u128(p) * p + 3 * p + 2
                                  : 3 * u128(p) * p + 2 * p + 3;
            return exact_div(pow_u128(p, r + 2) + add, 3 * den);
        }
        case ProblemKind::SqrtNegUnity:
        case ProblemKind::SixthPowersRing:
            throw invalid_input(std::string("local_factor: ") + kind_name(kind) +
                                " has no closed-form local factors");
    }
    throw invalid_input("local_factor: unknown kind");
}

u64 detail::sqrt_neg_unity_local(u64 p, u32 r) {
    if (p == 2) return r == 1 ? 1 : 0;
    return p % 4 == 1 ? 2 : 0;
}

CountResult count_formula(ProblemKind kind, const Factorization& f) {
    if (!is_closed_form(kind))
        throw invalid_input(std::string("count_formula: ") + kind_name(kind) +
                            " is oracle-only");
    u128 v = 1;
    for (const auto& [p, r] : f.factors) {
        v *= local_factor(kind, p, r);
        if (v > UINT64_MAX) throw math_error("count overflows 64 bits");
    }
    return {f.n, kind, u64(v), CountResult::Method::Formula, is_conjectural(kind)};
}

namespace {

// mask[x] = 1 iff gcd(x, n) > 1, built by marking multiples of each prime of n
std::vector<u8> non_unit_mask(u64 n) {
    std::vector<u8> mask(n, 0);
    for (const auto& [p, r] : factorize(n).factors) {
        for (u64 m = 0; m < n; m += p) mask[m] = 1;
    }
    return mask;
}

u64 pow_fixed(u64 x, u32 power, u64 n) {
    u64 sq = detail::mulmod(x, x, n);
    switch (power) {
        case 2: return sq;
        case 3: return detail::mulmod(sq, x, n);
        case 6: {
            u64 cb = detail::mulmod(sq, x, n);
            return detail::mulmod(cb, cb, n);
        }
        default: return detail::powmod(x, power, n);
    }
}

u64 oracle_roots(u64 n, u32 power, u64 target, bool units_only) {
    std::vector<u8> mask;
    if (units_only) mask = non_unit_mask(n);
    u64 count = 0;
    for (u64 x = 0; x < n; ++x) {
        if (units_only && mask[x]) continue;
        if (pow_fixed(x, power, n) == target) ++count;
    }
    return count;
}

u64 oracle_images(u64 n, u32 power, bool units_only) {
    std::vector<u8> mask;
    if (units_only) mask = non_unit_mask(n);
    std::vector<u64> bits((n + 63) / 64, 0);
    for (u64 y = 0; y < n; ++y) {
        if (units_only && mask[y]) continue;
        u64 v = pow_fixed(y, power, n);
        bits[v >> 6] |= u64{1} << (v & 63);
    }
    u64 count = 0;
    for (u64 w : bits) count += u64(__builtin_popcountll(w));
    return count;
}

}  // namespace

CountResult count_oracle(ProblemKind kind, u64 n, u64 cap) {
    if (n == 0) throw invalid_input("count_oracle: n must be positive");
    if (n > cap)
        throw cap_exceeded("count_oracle: n = " + std::to_string(n) +
                           " exceeds the oracle cap " + std::to_string(cap) +
                           " (enumeration would be too slow); raise the cap explicitly if intended");
    u64 value = 0;
    switch (kind) {
        case ProblemKind::SqrtUnity: value = oracle_roots(n, 2, 1 % n, true); break;
        case ProblemKind::CbrtUnity: value = oracle_roots(n, 3, 1 % n, true); break;
        case ProblemKind::SqrtNegUnity: value = oracle_roots(n, 2, (n - 1) % n, true); break;
        case ProblemKind::SqrtNullity: value = oracle_roots(n, 2, 0, false); break;
        case ProblemKind::CbrtNullity: value = oracle_roots(n, 3, 0, false); break;
        case ProblemKind::SquaresUnits: value = oracle_images(n, 2, true); break;
        case ProblemKind::CubesUnits: value = oracle_images(n, 3, true); break;
        case ProblemKind::SquaresRing: value = oracle_images(n, 2, false); break;
        case ProblemKind::CubesRing: value = oracle_images(n, 3, false); break;
        case ProblemKind::SixthPowersRing: value = oracle_images(n, 6, false); break;
    }
    return {n, kind, value, CountResult::Method::Oracle, is_conjectural(kind)};
}

}  // namespace modcount
