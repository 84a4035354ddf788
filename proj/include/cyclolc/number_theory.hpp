#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cyclolc/common.hpp"

namespace cyclolc {

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

inline u64 pow_mod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin; the 12-base set decides primality for all 64-bit inputs.
inline bool is_prime(u64 n) {
    constexpr u64 bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (u64 q : bases)
        if (n % q == 0) return n == q;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : bases) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline bool is_odd_prime(u64 p) { return p > 2 && is_prime(p); }

inline void require_odd_prime(u64 p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
}

// Trial division; inputs here never exceed p^4 at desk scale.
inline std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q) continue;
        unsigned mult = 0;
        while (n % q == 0) {
            n /= q;
            ++mult;
        }
        out.emplace_back(q, mult);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline u64 euler_phi(u64 n) {
    u64 phi = n;
    for (auto [q, mult] : factorize(n)) phi -= phi / q;
    return phi;
}

// Smallest t >= 1 with a^t = 1 (mod m), found by stripping prime factors of phi(m).
inline u64 multiplicative_order(u64 a, u64 m) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    a %= m;
    if (std::gcd(a, m) != 1) throw std::invalid_argument("element not invertible modulo m");
    u64 t = euler_phi(m);
    for (auto [q, mult] : factorize(t))
        while (t % q == 0 && pow_mod(a, t / q, m) == 1) t /= q;
    return t;
}

inline bool is_wieferich(u64 p) {
    require_odd_prime(p);
    return pow_mod(2, p - 1, p * p) == 1;
}

// Smallest g >= 2 whose order modulo p^2 is phi(p^2); such g is then a
// primitive root modulo every power of p.
inline u64 find_primitive_root(u64 p) {
    require_odd_prime(p);
    const u64 m = p * p;
    const u64 phi = p * (p - 1);
    std::vector<u64> prime_factors{p};
    for (auto [q, mult] : factorize(p - 1)) prime_factors.push_back(q);
    for (u64 g = 2; g < m; ++g) {
        if (g % p == 0) continue;
        bool primitive = true;
        for (u64 q : prime_factors) {
            if (pow_mod(g, phi / q, m) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw std::logic_error("no primitive root found");  // unreachable for odd prime p
}

// The exponent x in [0, ord_m(g)) with g^x = a (mod m). Exhaustive sweep for
// small groups, baby-step/giant-step above 2^16.
inline u64 discrete_log(u64 g, u64 a, u64 m) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    g %= m;
    a %= m;
    if (std::gcd(g, m) != 1) throw std::invalid_argument("base not invertible modulo m");
    if (std::gcd(a, m) != 1) throw std::invalid_argument("target not invertible modulo m");
    const u64 ord = multiplicative_order(g, m);
    if (ord < (u64{1} << 16)) {
        u64 x = 1;
        for (u64 t = 0; t < ord; ++t) {
            if (x == a) return t;
            x = mul_mod(x, g, m);
        }
        throw std::domain_error("target is outside the group generated by g");
    }
    u64 step = 1;
    while (step * step < ord) ++step;
    std::unordered_map<u64, u64> baby;
    baby.reserve(step);
    u64 x = 1;
    for (u64 j = 0; j < step; ++j) {
        baby.emplace(x, j);  // keeps the smallest j on collision
        x = mul_mod(x, g, m);
    }
    const u64 giant = pow_mod(pow_mod(g, ord - 1, m), step, m);  // g^(-step)
    u64 cur = a;
    for (u64 i = 0; i <= ord / step; ++i) {
        auto it = baby.find(cur);
        if (it != baby.end()) return (i * step + it->second) % ord;
        cur = mul_mod(cur, giant, m);
    }
    throw std::domain_error("target is outside the group generated by g");
}

// Parity indicator from the closed form: 1 if t is even, 0 if t is odd.
inline int delta(u64 t) { return t % 2 == 0 ? 1 : 0; }

// delta((p^n + 1)/2) without forming p^n: the half-period is even iff
// p^n = 3 (mod 4), i.e. p = 3 (mod 4) and n odd.
inline int delta_half_period(u64 p, unsigned n) {
    return (p % 4 == 3 && n % 2 == 1) ? 1 : 0;
}

// p^n with an overflow check; desk-scale inputs keep this well inside 64 bits.
inline u64 checked_pow(u64 p, unsigned n) {
    u64 r = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (__builtin_mul_overflow(r, p, &r)) throw SizeError("p^n overflows 64 bits");
    }
    return r;
}

// Everything the construction assumes about 2 modulo powers of p.
struct ModTwoProfile {
    u64 p = 0;
    u64 c = 0;       // least positive exponent with 2^c = 1 (mod p)
    bool wieferich = false;
    u64 g = 0;       // primitive root modulo p^2 used for the index
    u64 u = 0;       // index of 2 base g at modulus p^2
    std::vector<u64> orders;  // orders[j-1] = ord_{p^j}(2), 1 <= j <= n
};

inline ModTwoProfile mod_two_profile(u64 p, unsigned n, std::optional<u64> g = std::nullopt) {
    require_odd_prime(p);
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    ModTwoProfile prof;
    prof.p = p;
    prof.c = multiplicative_order(2, p);
    prof.wieferich = is_wieferich(p);
    prof.g = g ? *g : find_primitive_root(p);
    prof.u = discrete_log(prof.g, 2, p * p);
    prof.orders.reserve(n);
    for (unsigned j = 1; j <= n; ++j)
        prof.orders.push_back(multiplicative_order(2, checked_pow(p, j)));
    return prof;
}

}  // namespace cyclolc
