#pragma once

#include <vector>

#include "modcount/common.hpp"

namespace modcount {

// n as an ordered list of (prime, exponent) pairs, primes strictly increasing.
struct Factorization {
    struct Entry {
        u64 p;
        u32 r;
        bool operator==(const Entry&) const = default;
    };
    u64 n = 1;
    std::vector<Entry> factors;

    bool operator==(const Factorization&) const = default;
    // Rebuilds n from the factor list; true iff it matches and entries are sane.
    bool consistent() const;
};

namespace detail {

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = m > 1 ? 1 : 0;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

// Primes below 2^16, built once at startup; immutable thereafter.
const std::vector<u32>& small_primes();

// Deterministic for the full 64-bit range: Miller-Rabin with the fixed witness
// set {2,3,5,7,...,37}, which is exact for all n < 3.3e24.
bool is_prime(u64 n);

// Trial division by the small-prime table, then deterministic Brent-Pollard rho
// (fixed polynomial x^2 + c, c = 1,2,3,...) on the < 2^63 remainder.
Factorization factorize(u64 n);

u64 euler_phi(const Factorization& f);
int omega(const Factorization& f);        // # distinct primes
int omega_tilde(const Factorization& f);  // # distinct primes = 1 mod 3
int mobius(const Factorization& f);       // 0 on non-squarefree, else (-1)^omega

// Smallest-prime-factor marks for a block [lo, hi). spf(m) is the least prime
// dividing m for every m in the block; m prime (or 1) is detected from an
// absent mark. Full factorization via factor() follows the spf chain while the
// quotient stays inside the block and falls back to factorize() otherwise.
struct SpfSieve {
    u64 lo = 0;
    u64 hi = 0;
    std::vector<u32> mark;  // least prime factor <= sqrt(hi-1), or 0

    u64 spf(u64 m) const;
    Factorization factor(u64 m) const;
};

SpfSieve spf_sieve(u64 lo, u64 hi, u64 max_block = u64{1} << 26);

}  // namespace modcount
