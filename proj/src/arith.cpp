#include "modcount/arith.hpp"

#include <algorithm>
#include <cmath>

namespace modcount {

std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    char buf[48];
    int i = 48;
    while (v) {
        buf[--i] = char('0' + unsigned(v % 10));
        v /= 10;
    }
    return std::string(buf + i, buf + 48);
}

std::string to_string_i128(i128 v) {
    if (v < 0) return "-" + to_string_u128(u128(-v));
    return to_string_u128(u128(v));
}

bool Factorization::consistent() const {
    u128 prod = 1;
    u64 prev = 0;
    for (const auto& [p, r] : factors) {
        if (p <= prev || r == 0 || !is_prime(p)) return false;
        prev = p;
        for (u32 i = 0; i < r; ++i) {
            prod *= p;
            if (prod > u128(UINT64_MAX)) return false;
        }
    }
    return prod == n;
}

const std::vector<u32>& small_primes() {
    static const std::vector<u32> primes = [] {
        constexpr u32 limit = 1u << 16;
        std::vector<bool> comp(limit, false);
        std::vector<u32> ps;
        for (u32 i = 2; i < limit; ++i) {
            if (comp[i]) continue;
            ps.push_back(i);
            for (u64 j = u64(i) * i; j < limit; j += i) comp[j] = true;
        }
        return ps;
    }();
    return primes;
}

namespace {

bool miller_rabin(u64 n) {
    // Exact for n < 3,317,044,064,679,887,385,961,981 -- covers all u64.
    static constexpr u64 witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : witnesses) {
        if (a % n == 0) continue;
        u64 x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Brent's cycle variant of Pollard rho with x^2 + c; c is stepped
// deterministically so repeated runs always produce the same factor.
u64 pollard_brent(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 y = 2, m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (detail::mulmod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && g == 1; k += m) {
                ys = y;
                u64 steps = std::min(m, r - k);
                for (u64 i = 0; i < steps; ++i) {
                    y = (detail::mulmod(y, y, n) + c) % n;
                    q = detail::mulmod(q, x > y ? x - y : y - x, n);
                }
                g = gcd_u64(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            do {
                ys = (detail::mulmod(ys, ys, n) + c) % n;
                g = gcd_u64(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    while (n > 1) {
        if (is_prime(n)) {
            out.push_back(n);
            return;
        }
        u64 d = pollard_brent(n);
        factor_rec(d, out);
        n /= d;
    }
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;
    return miller_rabin(n);
}

Factorization factorize(u64 n) {
    if (n == 0) throw invalid_input("factorize: n must be positive");
    if (n >= (u64{1} << 63)) throw invalid_input("factorize: n must be < 2^63");
    Factorization f;
    f.n = n;
    for (u32 p : small_primes()) {
        if (u64(p) * p > n) break;
        if (n % p == 0) {
            u32 r = 0;
            while (n % p == 0) {
                n /= p;
                ++r;
            }
            f.factors.push_back({p, r});
        }
    }
    if (n > 1) {
        if (is_prime(n)) {
            f.factors.push_back({n, 1});
        } else {
            std::vector<u64> rest;
            factor_rec(n, rest);
            std::sort(rest.begin(), rest.end());
            for (size_t i = 0; i < rest.size();) {
                size_t j = i;
                while (j < rest.size() && rest[j] == rest[i]) ++j;
                f.factors.push_back({rest[i], u32(j - i)});
                i = j;
            }
        }
    }
    return f;
}

u64 euler_phi(const Factorization& f) {
    u64 v = 1;
    for (const auto& [p, r] : f.factors) {
        v *= p - 1;
        for (u32 i = 1; i < r; ++i) v *= p;
    }
    return v;
}

int omega(const Factorization& f) { return int(f.factors.size()); }

int omega_tilde(const Factorization& f) {
    int w = 0;
    for (const auto& [p, r] : f.factors) w += (p % 3 == 1);
    return w;
}

int mobius(const Factorization& f) {
    for (const auto& [p, r] : f.factors) {
        if (r >= 2) return 0;
    }
    return (f.factors.size() & 1) ? -1 : 1;
}

u64 SpfSieve::spf(u64 m) const {
    if (m < lo || m >= hi) throw invalid_input("SpfSieve::spf: value outside block");
    if (m < 2) throw invalid_input("SpfSieve::spf: undefined for m < 2");
    u32 v = mark[m - lo];
    return v ? v : m;  // unmarked means no prime factor <= sqrt(hi-1), i.e. m is prime
}

Factorization SpfSieve::factor(u64 m) const {
    Factorization f;
    f.n = m;
    u64 rem = m;
    while (rem > 1) {
        if (rem < lo || rem >= hi) {
            // quotient left the block; finish with the generic path
            Factorization tail = factorize(rem);
            for (const auto& e : tail.factors) f.factors.push_back(e);
            break;
        }
        u64 p = spf(rem);
        u32 r = 0;
        while (rem % p == 0) {
            rem /= p;
            ++r;
        }
        f.factors.push_back({p, r});
    }
    std::sort(f.factors.begin(), f.factors.end(),
              [](const auto& a, const auto& b) { return a.p < b.p; });
    return f;
}

SpfSieve spf_sieve(u64 lo, u64 hi, u64 max_block) {
    if (lo < 2 || hi <= lo) throw invalid_input("spf_sieve: need 2 <= lo < hi");
    if (hi > (u64{1} << 52))
        throw cap_exceeded("spf_sieve: hi beyond 2^52 (base prime table would exceed memory budget)");
    if (hi - lo > max_block)
        throw cap_exceeded("spf_sieve: block larger than configured budget");

    SpfSieve s;
    s.lo = lo;
    s.hi = hi;
    s.mark.assign(hi - lo, 0);

    u64 root = u64(std::sqrt(double(hi - 1))) + 2;
    for (u32 p : small_primes()) {
        if (u64(p) * p >= hi) break;
        u64 first = std::max<u64>(p, (lo + p - 1) / p * p);
        for (u64 m = first; m < hi; m += p) {
            if (s.mark[m - lo] == 0) s.mark[m - lo] = p;
        }
    }
    if (root > (1u << 16)) {
        // base table covers only primes < 2^16; extend by segmented sieve
        std::vector<bool> comp(root + 1, false);
        for (u32 p : small_primes()) {
            if (u64(p) * p > root) break;
            for (u64 j = u64(p) * p; j <= root; j += p) comp[j] = true;
        }
        for (u64 p = 1u << 16; p <= root; ++p) {
            if (comp[p] || p * p >= hi) continue;
            u64 first = std::max<u64>(p, (lo + p - 1) / p * p);
            for (u64 m = first; m < hi; m += p) {
                if (s.mark[m - lo] == 0) s.mark[m - lo] = u32(p);
            }
        }
    }
    return s;
}

}  // namespace modcount
