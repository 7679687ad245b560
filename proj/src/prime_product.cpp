#include <algorithm>
#include <cmath>
#include <map>

#include "hiprec_internal.hpp"
#include "modcount/arith.hpp"

namespace modcount::hiprec {

namespace {

std::vector<u64> class_primes_up_to(const PrimeClass& cls, u64 cutoff) {
    if (cutoff >= u64{1} << 16)
        throw invalid_input("prime_product: cutoff beyond the small-prime table");
    std::vector<u64> out;
    for (u32 p : small_primes()) {
        if (p > cutoff) break;
        if (cls.k == 3 && p == 3) continue;
        if (cls.contains(p)) out.push_back(p);
    }
    return out;
}

u64 next_class_prime_after(const PrimeClass& cls, u64 cutoff) {
    for (u64 p = cutoff + 1;; ++p) {
        if (!is_prime(p)) continue;
        if (cls.k == 3 && p == 3) continue;
        if (cls.contains(p)) return p;
    }
}

// Coefficient growth bound |c_n| <= K * rho^n from a Cauchy-style lower bound
// on the polynomial root radii: every root of 1 + a_1 x + ... has modulus
// >= 1/(1 + max|a_i|).
struct TailGrowth {
    double rho = 1.0;
    double K = 0.0;
};

TailGrowth tail_growth(const std::vector<ProductFactor>& factors) {
    TailGrowth g;
    for (const auto& f : factors) {
        double maxc = 0.0;
        for (size_t i = 1; i < f.poly.size(); ++i)
            maxc = std::max(maxc, std::fabs(f.poly[i].to_double()));
        int degree = int(f.poly.size()) - 1;
        if (degree <= 0) continue;
        g.rho = std::max(g.rho, 1.0 + maxc);
        g.K += std::fabs(f.exponent.to_double()) * degree;
    }
    if (g.K == 0.0) g.K = 1.0;
    return g;
}

// log10 of the bound on |sum_{m>n} (c_m/m)(P_class(m) - head_m)|
double log10_tail_bound(const TailGrowth& g, u64 q, int n) {
    double r = g.rho / double(q);
    if (r >= 1.0) return 1e9;
    double lead = g.K * (1.0 + double(q) / std::max(1, n - 1)) / double(n + 1);
    return std::log10(lead) + (n + 1) * std::log10(r) - std::log10(1.0 - r);
}

}  // namespace

namespace detail {

BigReal prime_product_core(const ProductSpec& spec, u64 cutoff, int truncate_n,
                           int work_digits, PrimeProductResult* meta) {
    const PrimeClass& cls = spec.cls;
    if (cutoff < cls.p_min())
        throw invalid_input("prime_product: cutoff " + std::to_string(cutoff) +
                            " is below the smallest class prime " + std::to_string(cls.p_min()));

    const std::vector<u64> head_primes = class_primes_up_to(cls, cutoff);
    const u64 q = next_class_prime_after(cls, cutoff);
    const TailGrowth growth = tail_growth(spec.factors);
    if (growth.rho >= double(q))
        throw invalid_input("prime_product: tail coefficients grow like " +
                            std::to_string(growth.rho) + "^n, not dominated by the next class prime " +
                            std::to_string(q) + "; raise the cutoff");

    // choose how many tail terms the error bound demands
    int n_max = truncate_n;
    if (n_max <= 0) {
        n_max = 2;
        while (log10_tail_bound(growth, q, n_max) > -(work_digits + 2) && n_max < 4096) ++n_max;
    }

    std::vector<Rat> c = expand_log_series(spec.factors, std::max(2, n_max));

    // class-mod-p_min cancellation: P_class(n) ~ p_min^-n while the deflated
    // value ~ q^-n, so evaluating P_class needs extra digits when rho >= p_min
    int boost = std::max(
        0, int(std::ceil(n_max * std::log10(growth.rho / double(cls.p_min())))));
    const int zeta_digits = work_digits + boost + 4;

    // head product: exact rational part for integral exponents, numeric for
    // fractional ones, grouped per exponent so each group is one pow
    Rat head_exact(1);
    bool all_integer = true;
    std::map<std::string, std::pair<Rat, Rat>> frac_groups;  // exponent -> (exp, base)
    for (const auto& f : spec.factors) {
        Rat base_all(1);
        for (u64 p : head_primes) {
            Rat x = Rat(1) / Rat::from_u64(p);
            Rat value(0);
            Rat xp(1);
            for (const Rat& coef : f.poly) {
                value += coef * xp;
                xp *= x;
            }
            base_all *= value;
        }
        if (f.exponent.is_integer() && f.exponent.fits_slong()) {
            head_exact *= base_all.pow_int(f.exponent.to_slong());
        } else {
            all_integer = false;
            auto& slot = frac_groups[f.exponent.to_string()];
            if (slot.second.is_zero())
                slot = {f.exponent, base_all};
            else
                slot.second *= base_all;
        }
    }

    BigReal head = BigReal::from_rat(head_exact, work_digits);
    for (const auto& [key, group] : frac_groups) {
        head *= BigReal::from_rat(group.second, work_digits).pow_rat(group.first);
    }

    // tail: sum_{n=2}^{n_max} (c_n/n) * (P_class(n) - sum_{head p} p^-n)
    BigReal ln_tail = BigReal::from_u64(0, work_digits);
    int used = 0;
    for (int n = 2; n <= n_max; ++n) {
        if (c[n].is_zero()) continue;
        BigReal pz = cls.k == 1 ? prime_zeta_core(Rat(n), zeta_digits)
                                : prime_zeta_mod3_core(cls.l, Rat(n), zeta_digits);
        Rat head_sum(0);
        for (u64 p : head_primes) head_sum += (Rat(1) / Rat::from_u64(p)).pow_int(n);
        BigReal deflated = pz - BigReal::from_rat(head_sum, zeta_digits);
        ln_tail += BigReal::from_rat(c[n] / Rat(n), work_digits) * deflated;
        used = n;
    }

    if (meta) {
        meta->head_is_exact = all_integer;
        meta->head_exact = all_integer ? head_exact : Rat(0);
        meta->head_primes.assign(head_primes.begin(), head_primes.end());
        meta->terms_used = used;
        meta->next_class_prime = q;
    }
    return head * ln_tail.exp();
}

}  // namespace detail

PrimeProductResult prime_product(const ProductSpec& spec, const PrimeProductOptions& opt) {
    PrimeProductResult result{BigReal(opt.digits), false, Rat(0), {}, 0, 0};
    auto eval = [&](int d) {
        return detail::prime_product_core(spec, opt.cutoff, opt.truncate_n, d + 15, &result);
    };
    if (opt.validate) {
        result.value = detail::run_validated(opt.digits, eval);
    } else {
        result.value = eval(opt.digits).round_to(opt.digits);
    }
    return result;
}

}  // namespace modcount::hiprec
