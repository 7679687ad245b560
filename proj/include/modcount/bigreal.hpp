#pragma once

#include <stdint.h>

#include <gmp.h>
#define MPFR_USE_INTMAX_T
#include <mpfr.h>

#include <string>

#include "modcount/common.hpp"

namespace modcount {

// Exact rational, a thin RAII wrapper over mpq_t.
class Rat {
  public:
    Rat() { mpq_init(q_); }
    Rat(long v) : Rat() { mpq_set_si(q_, v, 1); }
    Rat(long num, long den);
    Rat(const Rat& o) : Rat() { mpq_set(q_, o.q_); }
    Rat(Rat&& o) noexcept : Rat() { mpq_swap(q_, o.q_); }
    Rat& operator=(const Rat& o) {
        mpq_set(q_, o.q_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rat() { mpq_clear(q_); }

    // Accepts "3", "-1/2", "3247695/3430336" and decimal literals like "1.5".
    static Rat from_string(const std::string& s);
    static Rat from_u64(u64 v);

    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
    Rat& operator+=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat operator-() const;
    Rat pow_int(long e) const;  // e may be negative
    Rat abs() const;

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    bool fits_slong() const;
    long to_slong() const;  // integer rationals only
    double to_double() const { return mpq_get_d(q_); }
    std::string to_string() const;

    bool operator==(const Rat& o) const { return mpq_equal(q_, o.q_) != 0; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return mpq_cmp(q_, o.q_) < 0; }
    bool operator<=(const Rat& o) const { return mpq_cmp(q_, o.q_) <= 0; }
    bool operator>(const Rat& o) const { return mpq_cmp(q_, o.q_) > 0; }
    bool operator>=(const Rat& o) const { return mpq_cmp(q_, o.q_) >= 0; }

    mpq_srcptr raw() const { return q_; }

  private:
    mpq_t q_;
};

// Arbitrary-precision real with an explicit decimal-digit working precision.
// Arithmetic results carry the larger operand precision; each operation is
// correctly rounded by MPFR. Public evaluators in hiprec re-run themselves at
// D+10 digits and require agreement to one unit in the D-th digit.
class BigReal {
  public:
    explicit BigReal(int digits = 30);
    BigReal(const BigReal& o);
    BigReal(BigReal&& o) noexcept;
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept;
    ~BigReal();

    static BigReal from_u64(u64 v, int digits);
    static BigReal from_i64(i64 v, int digits);
    static BigReal from_u128(u128 v, int digits);
    static BigReal from_rat(const Rat& r, int digits);
    static BigReal from_decimal(const std::string& s, int digits);
    static BigReal pi(int digits);

    int digits() const { return digits_; }

    BigReal operator+(const BigReal& o) const;
    BigReal operator-(const BigReal& o) const;
    BigReal operator*(const BigReal& o) const;
    BigReal operator/(const BigReal& o) const;
    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);
    BigReal operator-() const;

    BigReal sqrt() const;
    BigReal exp() const;
    BigReal ln() const;
    BigReal pow(const BigReal& e) const;
    BigReal pow_rat(const Rat& e) const;  // rational exponent
    BigReal powi(long e) const;
    BigReal abs() const;
    BigReal recip() const;

    int cmp(const BigReal& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigReal& o) const { return cmp(o) < 0; }
    bool operator<=(const BigReal& o) const { return cmp(o) <= 0; }
    bool operator>(const BigReal& o) const { return cmp(o) > 0; }
    bool operator>=(const BigReal& o) const { return cmp(o) >= 0; }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Fixed-point decimal string with `decimals` digits after the point,
    // round-half-even.
    std::string to_fixed(int decimals) const;
    // Same, truncated toward zero (matches printed-prefix conventions).
    std::string to_fixed_trunc(int decimals) const;
    std::string to_sci(int sig_digits) const;

    BigReal round_to(int digits) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

  private:
    mpfr_t v_;
    int digits_;
};

inline int digits_to_bits(int digits) {
    return int(double(digits) * 3.3219280948873623) + 16;
}

// |a - b| <= one unit in the D-th significant-ish digit of max(|a|,|b|,1).
bool agrees_to_digits(const BigReal& a, const BigReal& b, int digits);

}  // namespace modcount
