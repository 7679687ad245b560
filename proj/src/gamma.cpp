#include "hiprec_internal.hpp"

namespace modcount::hiprec {

namespace detail {

// Spouge's approximation:
//   Gamma(z+1) = (z+a)^(z+1/2) e^(-(z+a)) [ c_0 + sum_{k=1}^{a-1} c_k/(z+k) ]
// with c_0 = sqrt(2 pi) and c_k = (-1)^(k-1) (a-k)^(k-1/2) e^(a-k) / (k-1)!.
// The relative error decays like (2 pi)^(-a), so a ~ 1.3 * digits suffices.
// Arguments above 2 are folded down with Gamma(q) = (q-1) Gamma(q-1).
BigReal gamma_core(const Rat& q, int work_digits) {
    if (q.sign() <= 0) throw invalid_input("gamma: argument must be positive");
    if (q > Rat(2)) {
        Rat down = q - Rat(1);
        return BigReal::from_rat(down, work_digits) * gamma_core(down, work_digits);
    }

    const long a = long(1.3 * work_digits) + 3;
    const BigReal one = BigReal::from_u64(1, work_digits);
    const BigReal z = BigReal::from_rat(q - Rat(1), work_digits);

    BigReal two_pi = BigReal::pi(work_digits) * BigReal::from_u64(2, work_digits);
    BigReal series = two_pi.sqrt();  // c_0

    const BigReal e = one.exp();
    BigReal factorial = one;  // (k-1)!
    for (long k = 1; k < a; ++k) {
        if (k > 1) factorial *= BigReal::from_i64(k - 1, work_digits);
        BigReal amk = BigReal::from_i64(a - k, work_digits);
        // (a-k)^(k-1/2) = (a-k)^(k-1) * sqrt(a-k)
        BigReal c = amk.powi(k - 1) * amk.sqrt() * e.powi(a - k) / factorial;
        if (k % 2 == 0) c = -c;
        series += c / (z + BigReal::from_i64(k, work_digits));
    }

    BigReal za = z + BigReal::from_i64(a, work_digits);
    BigReal half = one / BigReal::from_u64(2, work_digits);
    BigReal prefix = za.pow(z + half) * (-za).exp();
    return prefix * series;
}

}  // namespace detail

BigReal gamma_rational(const Rat& q, int digits) {
    if (q.sign() <= 0) throw invalid_input("gamma: argument must be positive");
    return detail::run_validated(
        digits, [&](int d) { return detail::gamma_core(q, d + 15); });
}

}  // namespace modcount::hiprec
