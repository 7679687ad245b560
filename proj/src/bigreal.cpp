#include "modcount/bigreal.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>

namespace modcount {

Rat::Rat(long num, long den) : Rat() {
    if (den == 0) throw math_error("Rat: zero denominator");
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

Rat Rat::from_string(const std::string& s) {
    Rat r;
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        if (mpq_set_str(r.q_, s.c_str(), 10) != 0)
            throw invalid_input("Rat: cannot parse '" + s + "'");
        mpq_canonicalize(r.q_);
        return r;
    }
    // decimal literal: digits.digits -> scaled integer over a power of ten
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac = s.size() - dot - 1;
    if (digits.empty() || frac == 0) throw invalid_input("Rat: cannot parse '" + s + "'");
    mpz_t num, den;
    mpz_init(num);
    mpz_init(den);
    if (mpz_set_str(num, digits.c_str(), 10) != 0) {
        mpz_clear(num);
        mpz_clear(den);
        throw invalid_input("Rat: cannot parse '" + s + "'");
    }
    mpz_ui_pow_ui(den, 10, frac);
    mpq_set_num(r.q_, num);
    mpq_set_den(r.q_, den);
    mpq_canonicalize(r.q_);
    mpz_clear(num);
    mpz_clear(den);
    return r;
}

Rat Rat::from_u64(u64 v) {
    Rat r;
    mpz_t z;
    mpz_init(z);
    mpz_import(z, 1, 1, sizeof(v), 0, 0, &v);
    mpq_set_z(r.q_, z);
    mpz_clear(z);
    return r;
}

Rat Rat::operator+(const Rat& o) const {
    Rat r;
    mpq_add(r.q_, q_, o.q_);
    return r;
}
Rat Rat::operator-(const Rat& o) const {
    Rat r;
    mpq_sub(r.q_, q_, o.q_);
    return r;
}
Rat Rat::operator*(const Rat& o) const {
    Rat r;
    mpq_mul(r.q_, q_, o.q_);
    return r;
}
Rat Rat::operator/(const Rat& o) const {
    if (o.is_zero()) throw math_error("Rat: division by zero");
    Rat r;
    mpq_div(r.q_, q_, o.q_);
    return r;
}
Rat& Rat::operator+=(const Rat& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
}
Rat& Rat::operator*=(const Rat& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
}
Rat Rat::operator-() const {
    Rat r;
    mpq_neg(r.q_, q_);
    return r;
}

Rat Rat::pow_int(long e) const {
    if (e == 0) return Rat(1);
    if (e < 0) return Rat(1) / pow_int(-e);
    Rat r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), static_cast<unsigned long>(e));
    mpq_canonicalize(r.q_);
    return r;
}

Rat Rat::abs() const {
    Rat r;
    mpq_abs(r.q_, q_);
    return r;
}

bool Rat::fits_slong() const {
    return is_integer() && mpz_fits_slong_p(mpq_numref(q_)) != 0;
}

long Rat::to_slong() const {
    if (!fits_slong()) throw math_error("Rat: not a machine integer");
    return mpz_get_si(mpq_numref(q_));
}

std::string Rat::to_string() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, std::strlen(s) + 1);
    return out;
}

BigReal::BigReal(int digits) : digits_(digits) {
    mpfr_init2(v_, digits_to_bits(digits));
    mpfr_set_nan(v_);
}
BigReal::BigReal(const BigReal& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}
BigReal::BigReal(BigReal&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
}
BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        digits_ = o.digits_;
    }
    return *this;
}
BigReal& BigReal::operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    std::swap(digits_, o.digits_);
    return *this;
}
BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::from_u64(u64 v, int digits) {
    BigReal r(digits);
    mpfr_set_uj(r.v_, v, MPFR_RNDN);
    return r;
}
BigReal BigReal::from_i64(i64 v, int digits) {
    BigReal r(digits);
    mpfr_set_sj(r.v_, v, MPFR_RNDN);
    return r;
}
BigReal BigReal::from_u128(u128 v, int digits) {
    mpfr_t t;
    mpfr_init2(t, 192);  // exact: 128 value bits fit
    mpfr_set_uj(t, u64(v >> 64), MPFR_RNDN);
    mpfr_mul_2ui(t, t, 64, MPFR_RNDN);
    mpfr_t lo;
    mpfr_init2(lo, 64);
    mpfr_set_uj(lo, u64(v), MPFR_RNDN);
    mpfr_add(t, t, lo, MPFR_RNDN);
    BigReal r(digits);
    mpfr_set(r.v_, t, MPFR_RNDN);
    mpfr_clear(lo);
    mpfr_clear(t);
    return r;
}
BigReal BigReal::from_rat(const Rat& q, int digits) {
    BigReal r(digits);
    mpfr_set_q(r.v_, q.raw(), MPFR_RNDN);
    return r;
}
BigReal BigReal::from_decimal(const std::string& s, int digits) {
    BigReal r(digits);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw invalid_input("BigReal: cannot parse '" + s + "'");
    return r;
}
BigReal BigReal::pi(int digits) {
    BigReal r(digits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

namespace {
int out_digits(const BigReal& a, const BigReal& b) { return std::max(a.digits(), b.digits()); }
}  // namespace

BigReal BigReal::operator+(const BigReal& o) const {
    BigReal r(out_digits(*this, o));
    mpfr_add(r.raw(), v_, o.v_, MPFR_RNDN);
    return r;
}
BigReal BigReal::operator-(const BigReal& o) const {
    BigReal r(out_digits(*this, o));
    mpfr_sub(r.raw(), v_, o.v_, MPFR_RNDN);
    return r;
}
BigReal BigReal::operator*(const BigReal& o) const {
    BigReal r(out_digits(*this, o));
    mpfr_mul(r.raw(), v_, o.v_, MPFR_RNDN);
    return r;
}
BigReal BigReal::operator/(const BigReal& o) const {
    if (o.is_zero()) throw math_error("BigReal: division by zero");
    BigReal r(out_digits(*this, o));
    mpfr_div(r.raw(), v_, o.v_, MPFR_RNDN);
    return r;
}
BigReal& BigReal::operator+=(const BigReal& o) { return *this = *this + o; }
BigReal& BigReal::operator-=(const BigReal& o) { return *this = *this - o; }
BigReal& BigReal::operator*=(const BigReal& o) { return *this = *this * o; }
BigReal& BigReal::operator/=(const BigReal& o) { return *this = *this / o; }
BigReal BigReal::operator-() const {
    BigReal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::sqrt() const {
    if (sign() < 0) throw math_error("BigReal: sqrt of negative value");
    BigReal r(digits_);
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}
BigReal BigReal::exp() const {
    BigReal r(digits_);
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}
BigReal BigReal::ln() const {
    if (sign() <= 0) throw math_error("BigReal: log of non-positive value");
    BigReal r(digits_);
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}
BigReal BigReal::pow(const BigReal& e) const {
    BigReal r(out_digits(*this, e));
    mpfr_pow(r.raw(), v_, e.v_, MPFR_RNDN);
    return r;
}
BigReal BigReal::pow_rat(const Rat& e) const {
    if (e.is_integer() && e.fits_slong()) return powi(e.to_slong());
    BigReal ex = BigReal::from_rat(e, digits_);
    return pow(ex);
}
BigReal BigReal::powi(long e) const {
    BigReal r(digits_);
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}
BigReal BigReal::abs() const {
    BigReal r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}
BigReal BigReal::recip() const {
    BigReal r(digits_);
    mpfr_ui_div(r.v_, 1, v_, MPFR_RNDN);
    return r;
}

std::string BigReal::to_fixed(int decimals) const {
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dRNf", decimals);
    char* out = nullptr;
    mpfr_asprintf(&out, fmt, v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

std::string BigReal::to_fixed_trunc(int decimals) const {
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dRZf", decimals);
    char* out = nullptr;
    mpfr_asprintf(&out, fmt, v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

std::string BigReal::to_sci(int sig_digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dRNe", sig_digits - 1);
    char* out = nullptr;
    mpfr_asprintf(&out, fmt, v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

BigReal BigReal::round_to(int digits) const {
    BigReal r(digits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

bool agrees_to_digits(const BigReal& a, const BigReal& b, int digits) {
    BigReal diff = (a - b).abs();
    if (diff.is_zero()) return true;
    BigReal scale = a.abs();
    if (BigReal one = BigReal::from_u64(1, a.digits()); scale < one) scale = one;
    // 10^(1-digits) * scale
    BigReal tol = BigReal::from_u64(10, std::max(a.digits(), digits) + 8)
                      .powi(long(1) - digits) *
                  scale;
    return diff <= tol;
}

}  // namespace modcount
