#include <cmath>

#include "hiprec_internal.hpp"
#include "modcount/arith.hpp"

namespace modcount::hiprec {

u64 PrimeClass::p_min() const {
    if (k == 1) return 2;
    return l == 1 ? 7 : 2;
}

bool PrimeClass::contains(u64 p) const {
    if (k == 1) return true;
    return p % 3 == u64(l);
}

std::string PrimeClass::to_string() const {
    return std::to_string(k) + "," + std::to_string(l);
}

namespace {

void require_s_range(const Rat& s) {
    if (s < Rat(3, 2))
        throw invalid_input("prime_zeta: s must be >= 3/2 (got s = " + s.to_string() + ")");
}

// Moebius series over n can stop once ln zeta(ns) ~ 2^(-ns) is below target.
long moebius_cutoff(const Rat& s, int work_digits) {
    double sd = s.to_double();
    return long(std::ceil((work_digits + 6) * std::log(10.0) / (sd * std::log(2.0)))) + 1;
}

}  // namespace

namespace detail {

// P(s) = sum_{n>=1} mu(n)/n * ln zeta(ns)
BigReal prime_zeta_core(const Rat& s, int work_digits) {
    BigReal sum = BigReal::from_u64(0, work_digits);
    const long n_stop = moebius_cutoff(s, work_digits);
    for (long n = 1; n <= n_stop; ++n) {
        int mu = mobius(factorize(u64(n)));
        if (mu == 0) continue;
        BigReal lnz = riemann_core(s * Rat(n), work_digits).ln();
        BigReal term = lnz / BigReal::from_i64(n, work_digits);
        sum += mu > 0 ? term : -term;
    }
    return sum;
}

// P_{3,2}(s) = 1/2 sum_{n odd} mu(n)/n * ln( L0(ns) / L1(ns) )
// P_{3,1}(s) = 1/2 sum_{n odd} mu(n)/n * ln( L0(ns) L1(ns) / L0(2ns) )
BigReal prime_zeta_mod3_core(int l, const Rat& s, int work_digits) {
    BigReal sum = BigReal::from_u64(0, work_digits);
    const long n_stop = moebius_cutoff(s, work_digits);
    for (long n = 1; n <= n_stop; n += 2) {
        int mu = mobius(factorize(u64(n)));
        if (mu == 0) continue;
        Rat sigma = s * Rat(n);
        BigReal l0 = l_series_core(0, sigma, work_digits);
        BigReal l1 = l_series_core(1, sigma, work_digits);
        BigReal arg = l == 2 ? l0 / l1 : l0 * l1 / l_series_core(0, sigma * Rat(2), work_digits);
        BigReal term = arg.ln() / BigReal::from_i64(2 * n, work_digits);
        sum += mu > 0 ? term : -term;
    }
    return sum;
}

}  // namespace detail

BigReal prime_zeta(const Rat& s, int digits) {
    require_s_range(s);
    return detail::run_validated(
        digits, [&](int d) { return detail::prime_zeta_core(s, d + 15); });
}

BigReal prime_zeta_mod3(int l, const Rat& s, int digits) {
    if (l != 1 && l != 2) throw invalid_input("prime_zeta_mod3: class must be 3,1 or 3,2");
    require_s_range(s);
    return detail::run_validated(
        digits, [&](int d) { return detail::prime_zeta_mod3_core(l, s, d + 15); });
}

BigReal prime_zeta_class(const PrimeClass& cls, const Rat& s, int digits) {
    if (cls.k == 1) return prime_zeta(s, digits);
    if (cls.k == 3) return prime_zeta_mod3(cls.l, s, digits);
    throw invalid_input("prime_zeta_class: modulus must be 1 or 3");
}

}  // namespace modcount::hiprec
