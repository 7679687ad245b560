#include "modcount/asymptotics.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <mutex>

#include "modcount/hiprec.hpp"

namespace modcount {

Weight weight_from_name(const std::string& name) {
    if (name == "phi") return {Weight::Tag::Phi};
    if (name == "2^omega") return {Weight::Tag::TwoOmega};
    if (name == "3^omega_tilde") return {Weight::Tag::ThreeOmegaTilde};
    if (name == "phi/2^omega") return {Weight::Tag::PhiOver2Omega};
    if (name == "phi/3^omega_tilde") return {Weight::Tag::PhiOver3OmegaTilde};
    if (auto kind = kind_from_name(name)) return {Weight::Tag::Count, *kind};
    throw invalid_input("unknown weight or problem '" + name + "'");
}

std::string weight_name(const Weight& w) {
    switch (w.tag) {
        case Weight::Tag::Phi: return "phi";
        case Weight::Tag::TwoOmega: return "2^omega";
        case Weight::Tag::ThreeOmegaTilde: return "3^omega_tilde";
        case Weight::Tag::PhiOver2Omega: return "phi/2^omega";
        case Weight::Tag::PhiOver3OmegaTilde: return "phi/3^omega_tilde";
        case Weight::Tag::Count: return kind_name(w.kind);
    }
    throw invalid_input("bad weight");
}

// omega(n) <= 15 and omega~(n) <= 11 for any 64-bit n, so these scales keep
// the per-term numerators integral.
namespace {
constexpr int kPow2Scale = 16;
constexpr int kPow3Scale = 12;
constexpr u64 kPow3[13] = {1,       3,       9,       27,     81,     243,   729,
                           2187,    6561,    19683,   59049,  177147, 531441};
}  // namespace

u64 SumScale::denominator() const {
    u64 d = u64{1} << pow2;
    for (int i = 0; i < pow3; ++i) d *= 3;
    return d;
}

SumScale weight_scale(const Weight& w) {
    switch (w.tag) {
        case Weight::Tag::PhiOver2Omega: return {kPow2Scale, 0};
        case Weight::Tag::PhiOver3OmegaTilde: return {0, kPow3Scale};
        default: return {0, 0};
    }
}

namespace {

u64 phi_local(u64 p, u32 e) {
    u64 v = p - 1;
    for (u32 i = 1; i < e; ++i) v *= p;
    return v;
}

u64 count_local(ProblemKind kind, u64 p, u32 e) {
    if (kind == ProblemKind::SqrtNegUnity) return detail::sqrt_neg_unity_local(p, e);
    return local_factor(kind, p, e);
}

void require_weight_sum_supported(const Weight& w) {
    if (w.tag == Weight::Tag::Count && w.kind == ProblemKind::SixthPowersRing)
        throw invalid_input(
            "sixth_powers_ring has no closed-form local factors; its sums are oracle-only "
            "(use the oracle for n-by-n values)");
}

}  // namespace

u128 weight_value(const Weight& w, const Factorization& f) {
    require_weight_sum_supported(w);
    switch (w.tag) {
        case Weight::Tag::Phi: return euler_phi(f);
        case Weight::Tag::TwoOmega: return u64{1} << omega(f);
        case Weight::Tag::ThreeOmegaTilde: return kPow3[omega_tilde(f)];
        case Weight::Tag::PhiOver2Omega:
            return u128(euler_phi(f)) << (kPow2Scale - omega(f));
        case Weight::Tag::PhiOver3OmegaTilde:
            return u128(euler_phi(f)) * kPow3[kPow3Scale - omega_tilde(f)];
        case Weight::Tag::Count: {
            u128 v = 1;
            for (const auto& [p, r] : f.factors) v *= count_local(w.kind, p, r);
            return v;
        }
    }
    throw invalid_input("bad weight");
}

// ---------------------------------------------------------------------------
// block sweep
// ---------------------------------------------------------------------------

namespace {

struct BlockOut {
    std::vector<u128> final_buckets;
    // (checkpoint index, bucket partials up to and including that position)
    std::vector<std::pair<size_t, std::vector<u128>>> partials;
};

// One block [lo, hi): multiplicative values built by dividing out each base
// prime from rem[], then the single remaining prime > sqrt(hi).
template <class LocalFn, class TermFn>
void sweep_block(u64 lo, u64 hi, u32 mod, const std::vector<u64>& cps, size_t cp_lo,
                 LocalFn&& local, TermFn&& term, BlockOut& out) {
    const size_t len = size_t(hi - lo);
    std::vector<u32> rem(len);
    std::vector<u64> val(len, 1);
    std::vector<u8> aux(len, 0);
    for (size_t i = 0; i < len; ++i) rem[i] = u32(lo + i);

    for (u32 p : small_primes()) {
        if (u64(p) * p >= hi) break;
        u64 first = std::max<u64>(p, (lo + p - 1) / p * p);
        for (u64 m = first; m < hi; m += p) {
            size_t i = size_t(m - lo);
            u32 e = 0;
            u32 r = rem[i];
            while (r % p == 0) {
                r /= p;
                ++e;
            }
            rem[i] = r;
            local(p, e, val[i], aux[i]);
        }
    }

    out.final_buckets.assign(mod, 0);
    size_t cp = cp_lo;
    u32 res = u32(lo % mod);
    for (size_t i = 0; i < len; ++i) {
        u64 n = lo + i;
        u64 v = val[i];
        u8 a = aux[i];
        if (rem[i] > 1) local(rem[i], 1, v, a);
        out.final_buckets[res] += term(n, v, a);
        if (++res == mod) res = 0;
        while (cp < cps.size() && cps[cp] == n) {
            out.partials.emplace_back(cp, out.final_buckets);
            ++cp;
        }
    }
}

template <class LocalFn, class TermFn>
std::vector<std::vector<u128>> run_sweep(u64 limit, u32 mod, const std::vector<u64>& cps,
                                         u64 block_size, int threads, LocalFn&& local,
                                         TermFn&& term) {
    const size_t nblocks = size_t((limit + block_size - 1) / block_size);
    std::vector<BlockOut> blocks(nblocks);

    int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (i64 b = 0; b < i64(nblocks); ++b) {
        u64 lo = 1 + u64(b) * block_size;
        u64 hi = std::min(limit + 1, lo + block_size);
        size_t cp_lo = size_t(std::lower_bound(cps.begin(), cps.end(), lo) - cps.begin());
        sweep_block(lo, hi, mod, cps, cp_lo, local, term, blocks[size_t(b)]);
    }

    // deterministic merge in block order
    std::vector<std::vector<u128>> result(cps.size(), std::vector<u128>(mod, 0));
    std::vector<u128> running(mod, 0);
    for (const auto& blk : blocks) {
        for (const auto& [cp, partial] : blk.partials) {
            for (u32 r = 0; r < mod; ++r) result[cp][r] = running[r] + partial[r];
        }
        for (u32 r = 0; r < mod; ++r) running[r] += blk.final_buckets[r];
    }
    return result;
}

std::vector<u64> checkpoint_ladder(u64 limit, const std::vector<u64>& extra) {
    std::vector<u64> cps;
    for (u64 n = limit; n >= 2; n = (n + 1) / 2) {
        cps.push_back(n);
        if (n == 2) break;
    }
    for (u64 n : extra) {
        if (n >= 1 && n <= limit) cps.push_back(n);
    }
    cps.push_back(limit);
    std::sort(cps.begin(), cps.end());
    cps.erase(std::unique(cps.begin(), cps.end()), cps.end());
    return cps;
}

}  // namespace

u128 SweepResult::scaled_sum(size_t checkpoint, u32 residue) const {
    const auto& buckets = checkpoint_buckets.at(checkpoint);
    if (residue < mod) return buckets[residue];
    u128 total = 0;
    for (u128 b : buckets) total += b;
    return total;
}

u128 SweepResult::scaled_total(u32 residue) const {
    return scaled_sum(checkpoint_buckets.size() - 1, residue);
}

SweepResult partial_sum_sweep(const Weight& w, const SweepOptions& opt) {
    require_weight_sum_supported(w);
    if (opt.limit == 0) throw invalid_input("partial_sum: limit must be positive");
    if (opt.limit > opt.cap)
        throw cap_exceeded("partial_sum: limit " + std::to_string(opt.limit) +
                           " exceeds the cap " + std::to_string(opt.cap));
    if (opt.limit >= (u64{1} << 32))
        throw cap_exceeded("partial_sum: limit must be below 2^32");
    if (opt.mod == 0) throw invalid_input("partial_sum: modulus must be >= 1");
    if (opt.mod > 4096) throw invalid_input("partial_sum: modulus above 4096 unsupported");

    SweepResult out;
    out.weight = w;
    out.mod = opt.mod;
    out.limit = opt.limit;
    out.scale = weight_scale(w);
    out.checkpoint_ns = checkpoint_ladder(opt.limit, opt.extra_checkpoints);

    const u64 bs = std::max<u64>(opt.block_size, 1024);

    auto run = [&](auto&& local, auto&& term) {
        out.checkpoint_buckets = run_sweep(opt.limit, opt.mod, out.checkpoint_ns, bs,
                                           opt.threads, local, term);
    };

    switch (w.tag) {
        case Weight::Tag::Phi:
            run([](u64 p, u32 e, u64& val, u8&) { val *= phi_local(p, e); },
                [](u64, u64 val, u8) -> u128 { return val; });
            break;
        case Weight::Tag::TwoOmega:
            run([](u64, u32, u64& val, u8&) { val <<= 1; },
                [](u64, u64 val, u8) -> u128 { return val; });
            break;
        case Weight::Tag::ThreeOmegaTilde:
            run([](u64 p, u32, u64& val, u8&) { if (p % 3 == 1) val *= 3; },
                [](u64, u64 val, u8) -> u128 { return val; });
            break;
        case Weight::Tag::PhiOver2Omega:
            run([](u64 p, u32 e, u64& val, u8& aux) {
                    val *= phi_local(p, e);
                    ++aux;
                },
                [](u64, u64 val, u8 aux) -> u128 { return u128(val) << (kPow2Scale - aux); });
            break;
        case Weight::Tag::PhiOver3OmegaTilde:
            run([](u64 p, u32 e, u64& val, u8& aux) {
                    val *= phi_local(p, e);
                    if (p % 3 == 1) ++aux;
                },
                [](u64, u64 val, u8 aux) -> u128 { return u128(val) * kPow3[kPow3Scale - aux]; });
            break;
        case Weight::Tag::Count: {
            ProblemKind kind = w.kind;
            run([kind](u64 p, u32 e, u64& val, u8&) { val *= count_local(kind, p, e); },
                [](u64, u64 val, u8) -> u128 { return val; });
            break;
        }
    }
    return out;
}

u128 naive_weight_sum(const Weight& w, u64 limit, u32 k, u32 l) {
    require_weight_sum_supported(w);
    u128 total = 0;
    for (u64 n = 1; n <= limit; ++n) {
        if (k > 1 && n % k != l) continue;
        total += weight_value(w, factorize(n));
    }
    return total;
}

BigReal sum_as_bigreal(u128 scaled, const SumScale& scale, int digits) {
    BigReal v = BigReal::from_u128(scaled, digits);
    if (scale.pow2 || scale.pow3)
        v /= BigReal::from_u64(scale.denominator(), digits);
    return v;
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

const std::vector<std::pair<Weight, AsymptoticForm>>& asymptotic_forms() {
    static const std::vector<std::pair<Weight, AsymptoticForm>> forms = [] {
        using T = Weight::Tag;
        using K = ProblemKind;
        auto form = [](std::string name, Rat alpha, Rat beta, bool conj = false) {
            return AsymptoticForm{name, name, Rat(1), std::move(alpha), std::move(beta), conj};
        };
        std::vector<std::pair<Weight, AsymptoticForm>> v;
        v.push_back({{T::Phi}, form("phi_sum", Rat(2), Rat(0))});
        v.push_back({{T::TwoOmega}, form("two_omega_sum", Rat(1), Rat(1))});
        v.push_back({{T::Count, K::SqrtUnity}, form("sqrt_unity_sum", Rat(1), Rat(1))});
        v.push_back({{T::ThreeOmegaTilde}, form("three_omega_tilde_sum", Rat(1), Rat(1))});
        v.push_back({{T::Count, K::CbrtUnity}, form("cbrt_unity_sum", Rat(1), Rat(1))});
        v.push_back({{T::PhiOver2Omega}, form("phi_over_2omega_sum", Rat(2), Rat(-1, 2))});
        v.push_back({{T::Count, K::SquaresUnits}, form("squares_units_sum", Rat(2), Rat(-1, 2))});
        v.push_back({{T::PhiOver3OmegaTilde},
                     form("phi_over_3omega_tilde_sum", Rat(2), Rat(-1, 3))});
        v.push_back({{T::Count, K::CubesUnits}, form("cubes_units_sum", Rat(2), Rat(-1, 3))});
        v.push_back({{T::Count, K::SqrtNullity}, form("sqrt_nullity_sum", Rat(1), Rat(1))});
        v.push_back({{T::Count, K::CbrtNullity}, form("cbrt_nullity_sum", Rat(1), Rat(2))});
        v.push_back({{T::Count, K::SquaresRing}, form("squares_ring_sum", Rat(2), Rat(-1, 2))});
        v.push_back({{T::Count, K::CubesRing},
                     form("cubes_ring_sum", Rat(2), Rat(-1, 3), true)});
        v.push_back({{T::Count, K::SqrtNegUnity}, form("sqrt_neg_unity_sum", Rat(1), Rat(0))});
        return v;
    }();
    return forms;
}

const std::vector<ProgressionTarget>& progression_targets() {
    static const std::vector<ProgressionTarget> targets = [] {
        std::vector<ProgressionTarget> v;
        auto add = [&v](u32 k, u32 l, Weight w, const char* cname, Rat scale, Rat alpha,
                        Rat beta) {
            AsymptoticForm f{std::string(cname) + "@" + std::to_string(k) + "," +
                                 std::to_string(l),
                             cname, std::move(scale), std::move(alpha), std::move(beta), false};
            v.push_back({k, l, w, std::move(f)});
        };
        // 2^omega mod 8: odd classes 4/(k pi^2) = (1/12)(6/pi^2); the even
        // classes 2,4,6,0 each balance to 1/pi^2 = (1/6)(6/pi^2)
        for (u32 l : {1u, 3u, 5u, 7u})
            add(8, l, {Weight::Tag::TwoOmega}, "two_omega_sum", Rat(1, 12), Rat(1), Rat(1));
        for (u32 l : {0u, 2u, 4u, 6u})
            add(8, l, {Weight::Tag::TwoOmega}, "two_omega_sum", Rat(1, 6), Rat(1), Rat(1));
        // 3^omega_tilde mod 9: every class carries C/9
        for (u32 l = 0; l < 9; ++l)
            add(9, l, {Weight::Tag::ThreeOmegaTilde}, "three_omega_tilde_sum", Rat(1, 9),
                Rat(1), Rat(1));
        // phi/2^omega mod 8: odd classes (4/5k)C = (1/5)(C/2); others C/40 = (1/20)(C/2)
        for (u32 l : {1u, 3u, 5u, 7u})
            add(8, l, {Weight::Tag::PhiOver2Omega}, "phi_over_2omega_sum", Rat(1, 5), Rat(2),
                Rat(-1, 2));
        for (u32 l : {0u, 2u, 4u, 6u})
            add(8, l, {Weight::Tag::PhiOver2Omega}, "phi_over_2omega_sum", Rat(1, 20), Rat(2),
                Rat(-1, 2));
        // phi/3^omega_tilde mod 9: coprime classes (9/16k)C = (1/8)(C/2); 0,3,6 C/24
        for (u32 l : {1u, 2u, 4u, 5u, 7u, 8u})
            add(9, l, {Weight::Tag::PhiOver3OmegaTilde}, "phi_over_3omega_tilde_sum", Rat(1, 8),
                Rat(2), Rat(-1, 3));
        for (u32 l : {0u, 3u, 6u})
            add(9, l, {Weight::Tag::PhiOver3OmegaTilde}, "phi_over_3omega_tilde_sum",
                Rat(1, 12), Rat(2), Rat(-1, 3));
        return v;
    }();
    return targets;
}

const AsymptoticForm* lookup_form(const Weight& w, u32 k, u32 l) {
    if (k <= 1) {
        for (const auto& [weight, form] : asymptotic_forms()) {
            if (weight == w) return &form;
        }
        return nullptr;
    }
    for (const auto& t : progression_targets()) {
        if (t.weight == w && t.k == k && t.l == l) return &t.form;
    }
    return nullptr;
}

namespace {

// the registry constants are pure functions of (name, digits); memoize them so
// per-checkpoint ratio reporting does not re-run the prime products
const BigReal& cached_constant(const std::string& name, int digits) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, BigReal> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(name, digits);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, hiprec::constant(name, digits).value).first;
    return it->second;
}

}  // namespace

BigReal predicted_main_term(const AsymptoticForm& form, u64 n, int digits) {
    if (n < 3) throw invalid_input("predicted_main_term: defined for N >= 3");
    BigReal coeff = cached_constant(form.constant_name, digits);
    coeff *= BigReal::from_rat(form.scale, digits);
    BigReal nb = BigReal::from_u64(n, digits);
    BigReal value = coeff * nb.pow_rat(form.alpha);
    if (!form.beta.is_zero()) value *= nb.ln().pow_rat(form.beta);
    return value;
}

// ---------------------------------------------------------------------------
// Dirichlet partial sums
// ---------------------------------------------------------------------------

namespace {

constexpr u128 kDirichletScale = u128(10'000'000'000'000ull) * u128(1'000'000'000'000ull);

// n^s saturating at u128 max; anything that overflows makes the term zero.
u128 pow_sat(u64 n, long s) {
    u128 v = 1;
    const u128 cap = ~u128(0);
    for (long i = 0; i < s; ++i) {
        if (v > cap / n) return cap;
        v *= n;
    }
    return v;
}

}  // namespace

BigReal dirichlet_partial_sum(const Weight& w, const Rat& s, u64 limit, int digits,
                              const SweepOptions& opt_in) {
    require_weight_sum_supported(w);
    if (w.tag != Weight::Tag::Phi && w.tag != Weight::Tag::Count)
        throw invalid_input("dirichlet_partial_sum: weight must be a counting problem or phi");
    if (s < Rat(3, 2))
        throw invalid_input("dirichlet_partial_sum: s must be >= 3/2");
    if (limit == 0) throw invalid_input("dirichlet_partial_sum: limit must be positive");
    if (limit > opt_in.cap)
        throw cap_exceeded("dirichlet_partial_sum: limit exceeds the cap");

    SweepOptions opt = opt_in;
    opt.limit = limit;
    opt.mod = 1;

    auto local = [&w](u64 p, u32 e, u64& val, u8&) {
        if (w.tag == Weight::Tag::Phi)
            val *= phi_local(p, e);
        else
            val *= count_local(w.kind, p, e);
    };

    const u64 bs = std::max<u64>(opt.block_size, 1024);
    std::vector<u64> no_cps;

    if (s.is_integer() && s.fits_slong()) {
        long si = s.to_slong();
        auto term = [si](u64 n, u64 val, u8) -> u128 {
            u128 den = pow_sat(n, si);
            return (u128(val) * kDirichletScale) / den;
        };
        std::vector<u64> cps{limit};
        auto buckets = run_sweep(limit, 1, cps, bs, opt.threads, local, term);
        BigReal num = BigReal::from_u128(buckets.back()[0], digits + 10);
        BigReal den = BigReal::from_u128(kDirichletScale, digits + 10);
        return (num / den).round_to(digits);
    }

    // non-integer rational s: MPFR accumulation per block, merged in block order
    const int work = digits + 10;
    const size_t nblocks = size_t((limit + bs - 1) / bs);
    std::vector<BigReal> partials(nblocks, BigReal(work));
    int nthreads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
    BigReal s_b = BigReal::from_rat(s, work);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (i64 b = 0; b < i64(nblocks); ++b) {
        u64 lo = 1 + u64(b) * bs;
        u64 hi = std::min(limit + 1, lo + bs);
        BlockOut out;
        std::vector<u64> vals;
        vals.reserve(size_t(hi - lo));
        sweep_block(lo, hi, 1, no_cps, 0, local,
                    [&vals](u64, u64 val, u8) -> u128 {
                        vals.push_back(val);
                        return 0;
                    },
                    out);
        BigReal acc = BigReal::from_u64(0, work);
        for (u64 n = lo; n < hi; ++n) {
            BigReal t = BigReal::from_u64(vals[size_t(n - lo)], work) *
                        BigReal::from_u64(n, work).pow(-s_b);
            acc += t;
        }
        partials[size_t(b)] = acc;
    }
    BigReal total = BigReal::from_u64(0, work);
    for (const auto& p : partials) total += p;
    return total.round_to(digits);
}

}  // namespace modcount
