#include <algorithm>
#include <mutex>

#include "hiprec_internal.hpp"

namespace modcount::hiprec {

namespace {

// Bernoulli numbers as exact rationals via the classic recurrence
// sum_{i=0}^{m} C(m+1,i) B_i = 0, cached together with B_{2j}/(2j)!.
class BernoulliCache {
  public:
    Rat over_factorial(int j) {
        std::lock_guard<std::mutex> lock(mu_);
        while (int(ratio_.size()) <= j) {
            size_t m = 2 * ratio_.size();
            extend_bernoulli(m);
            Rat fact(1);
            for (size_t i = 2; i <= m; ++i) fact *= Rat(long(i));
            ratio_.push_back(bern_[m] / fact);
        }
        return ratio_[j];
    }

  private:
    void extend_bernoulli(size_t upto) {
        while (bern_.size() <= upto) {
            size_t m = bern_.size();
            if (m == 0) {
                bern_.push_back(Rat(1));
                continue;
            }
            Rat sum(0);
            Rat binom(1);  // C(m+1, i) for i = 0, then updated
            for (size_t i = 0; i < m; ++i) {
                sum += binom * bern_[i];
                binom *= Rat(long(m + 1 - i), long(i + 1));
            }
            bern_.push_back(-sum / Rat(long(m + 1)));
        }
    }

    std::mutex mu_;
    std::vector<Rat> bern_;   // B_0, B_1, ...
    std::vector<Rat> ratio_;  // B_{2j}/(2j)! for j = 0, 1, ...
};

BernoulliCache& bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

void require_s_range(const Rat& s) {
    if (s < Rat(3, 2))
        throw invalid_input("zeta: s must be >= 3/2 (got s = " + s.to_string() + ")");
}

void require_a_range(const Rat& a) {
    if (a <= Rat(0) || a > Rat(1))
        throw invalid_input("hurwitz_zeta: a must lie in (0, 1]");
}

}  // namespace

namespace detail {

// Euler-Maclaurin at a fixed working precision. The head length scales with
// the working digits; correction terms are added until they drop below the
// target, with the first-omitted-term bound guarding the truncation.
BigReal hurwitz_core(const Rat& s, const Rat& a, int work_digits) {
    const BigReal s_b = BigReal::from_rat(s, work_digits);
    const long M_target = std::max(20, int(0.6 * work_digits) + 1);

    BigReal sum = BigReal::from_u64(0, work_digits);
    const BigReal eps = BigReal::from_u64(10, work_digits).powi(-(work_digits + 4));

    long M = M_target;
    for (long k = 0; k < M_target; ++k) {
        BigReal term = BigReal::from_rat(a + Rat(k), work_digits).pow(-s_b);
        sum += term;
        if (k >= 1 && term < eps) {
            M = k + 1;
            break;
        }
    }

    const BigReal ma_b = BigReal::from_rat(a + Rat(M), work_digits);
    const BigReal ma_pow_minus_s = ma_b.pow(-s_b);
    const BigReal one = BigReal::from_u64(1, work_digits);

    sum += ma_pow_minus_s * ma_b / (s_b - one);       // (M+a)^(1-s) / (s-1)
    sum += ma_pow_minus_s / BigReal::from_u64(2, work_digits);

    // B_{2j}/(2j)! * s(s+1)...(s+2j-2) * (M+a)^(-s-2j+1)
    BigReal rising = s_b;
    BigReal power = ma_pow_minus_s / ma_b;            // exponent -s-1 at j = 1
    const BigReal ma_sq_inv = (ma_b * ma_b).recip();
    const int j_cap = int(4 * M) + 64;
    BigReal prev_mag(work_digits);
    mpfr_set_inf(prev_mag.raw(), 1);
    for (int j = 1;; ++j) {
        if (j > j_cap) throw math_error("hurwitz_zeta: Euler-Maclaurin failed to converge");
        BigReal coeff = BigReal::from_rat(bernoulli_cache().over_factorial(j), work_digits);
        BigReal term = coeff * rising * power;
        BigReal mag = term.abs();
        if (mag > prev_mag)
            throw math_error("hurwitz_zeta: correction terms diverging; head too short");
        sum += term;
        if (mag < eps) break;
        prev_mag = mag;
        rising *= (s_b + BigReal::from_i64(2 * j - 1, work_digits)) *
                  (s_b + BigReal::from_i64(2 * j, work_digits));
        power *= ma_sq_inv;
    }
    return sum;
}

BigReal riemann_core(const Rat& s, int work_digits) {
    return hurwitz_core(s, Rat(1), work_digits);
}

BigReal l_series_core(int j, const Rat& s, int work_digits) {
    BigReal z13 = hurwitz_core(s, Rat(1, 3), work_digits);
    BigReal z23 = hurwitz_core(s, Rat(2, 3), work_digits);
    BigReal base = j == 0 ? z13 + z23 : z13 - z23;
    return BigReal::from_u64(3, work_digits).pow(-BigReal::from_rat(s, work_digits)) * base;
}

BigReal run_validated(int digits, const std::function<BigReal(int)>& eval) {
    BigReal lo = eval(digits);
    BigReal hi = eval(digits + 10);  // last, so any caller-side metadata matches
    if (!agrees_to_digits(lo, hi, digits))
        throw precision_mismatch("double-run precision check failed at D = " +
                                 std::to_string(digits));
    return hi.round_to(digits);
}

}  // namespace detail

BigReal hurwitz_zeta(const Rat& s, const Rat& a, int digits) {
    require_s_range(s);
    require_a_range(a);
    return detail::run_validated(
        digits, [&](int d) { return detail::hurwitz_core(s, a, d + 15); });
}

BigReal riemann_zeta(const Rat& s, int digits) { return hurwitz_zeta(s, Rat(1), digits); }

BigReal l_series_mod3(int j, const Rat& s, int digits) {
    if (j != 0 && j != 1) throw invalid_input("l_series_mod3: j must be 0 or 1");
    require_s_range(s);
    return detail::run_validated(
        digits, [&](int d) { return detail::l_series_core(j, s, d + 15); });
}

}  // namespace modcount::hiprec
