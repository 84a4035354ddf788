#pragma once

#include <bit>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclolc/common.hpp"

namespace cyclolc {

namespace detail {

// dst ^= src << shift, in raw 64-bit words; dst must already be long enough.
inline void xor_words_shifted(std::vector<u64>& dst, const std::vector<u64>& src,
                              std::size_t shift) {
    const std::size_t wshift = shift / 64;
    const unsigned bshift = shift % 64;
    if (bshift == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) dst[i + wshift] ^= src[i];
        return;
    }
    u64 carry = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i + wshift] ^= (src[i] << bshift) | carry;
        carry = src[i] >> (64 - bshift);
    }
    if (carry) dst[src.size() + wshift] ^= carry;
}

}  // namespace detail

// Polynomial over GF(2). Bit i of the packed word vector is the coefficient
// of x^i; the representation is kept canonical (no trailing zero words), so
// equality is plain word comparison. degree() of the zero polynomial is -1.
class Gf2Poly {
  public:
    Gf2Poly() = default;

    static Gf2Poly one() { return from_encoding(1); }
    static Gf2Poly x() { return from_encoding(2); }

    static Gf2Poly monomial(std::size_t d) {
        Gf2Poly f;
        f.set_coeff(d, true);
        return f;
    }

    static Gf2Poly from_terms(std::initializer_list<std::size_t> exponents) {
        Gf2Poly f;
        for (std::size_t e : exponents) f.set_coeff(e, f.coeff(e) ^ 1);
        return f;
    }

    // Interprets the integer's binary expansion as the coefficient vector.
    static Gf2Poly from_encoding(u64 bits) {
        Gf2Poly f;
        if (bits) f.w_.push_back(bits);
        return f;
    }

    static Gf2Poly from_bits(const std::vector<int>& bits) {
        Gf2Poly f;
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) f.set_coeff(i, true);
        return f;
    }

    // Adopts an already-packed coefficient word vector.
    static Gf2Poly from_raw_words(std::vector<u64> words) {
        Gf2Poly f;
        f.w_ = std::move(words);
        f.trim();
        return f;
    }

    bool is_zero() const { return w_.empty(); }

    long degree() const {
        if (w_.empty()) return -1;
        return static_cast<long>(64 * (w_.size() - 1) + std::bit_width(w_.back()) - 1);
    }

    bool coeff(std::size_t i) const {
        const std::size_t w = i / 64;
        return w < w_.size() && ((w_[w] >> (i % 64)) & 1);
    }

    void set_coeff(std::size_t i, bool v) {
        const std::size_t w = i / 64;
        if (v) {
            if (w >= w_.size()) w_.resize(w + 1, 0);
            w_[w] |= u64{1} << (i % 64);
        } else if (w < w_.size()) {
            w_[w] &= ~(u64{1} << (i % 64));
            trim();
        }
    }

    std::size_t weight() const {
        std::size_t n = 0;
        for (u64 w : w_) n += std::popcount(w);
        return n;
    }

    Gf2Poly& operator^=(const Gf2Poly& rhs) {
        if (rhs.w_.size() > w_.size()) w_.resize(rhs.w_.size(), 0);
        for (std::size_t i = 0; i < rhs.w_.size(); ++i) w_[i] ^= rhs.w_[i];
        trim();
        return *this;
    }

    friend Gf2Poly operator^(Gf2Poly a, const Gf2Poly& b) {
        a ^= b;
        return a;
    }

    // *this ^= rhs * x^shift
    void xor_shifted(const Gf2Poly& rhs, std::size_t shift) {
        if (rhs.is_zero()) return;
        const std::size_t need = rhs.w_.size() + shift / 64 + 1;
        if (w_.size() < need) w_.resize(need, 0);
        detail::xor_words_shifted(w_, rhs.w_, shift);
        trim();
    }

    Gf2Poly shifted(std::size_t shift) const {
        Gf2Poly r;
        r.xor_shifted(*this, shift);
        return r;
    }

    friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        const Gf2Poly& lo = a.w_.size() <= b.w_.size() ? a : b;
        const Gf2Poly& hi = a.w_.size() <= b.w_.size() ? b : a;
        Gf2Poly r;
        r.w_.assign(a.w_.size() + b.w_.size(), 0);
        for (std::size_t i = 0; i < lo.w_.size(); ++i) {
            u64 bits = lo.w_[i];
            while (bits) {
                const unsigned j = std::countr_zero(bits);
                bits &= bits - 1;
                detail::xor_words_shifted(r.w_, hi.w_, 64 * i + j);
            }
        }
        r.trim();
        return r;
    }

    friend Gf2Poly operator%(Gf2Poly a, const Gf2Poly& b) {
        if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
        const long db = b.degree();
        for (long da = a.degree(); da >= db; da = a.degree())
            a.xor_shifted(b, static_cast<std::size_t>(da - db));
        return a;
    }

    bool operator==(const Gf2Poly&) const = default;

    const std::vector<u64>& words() const { return w_; }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (long i = degree(); i >= 0; --i) {
            if (!coeff(static_cast<std::size_t>(i))) continue;
            if (!s.empty()) s += " + ";
            if (i == 0)
                s += "1";
            else if (i == 1)
                s += "x";
            else
                s += "x^" + std::to_string(i);
        }
        return s;
    }

  private:
    std::vector<u64> w_;

    void trim() {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
    }
};

// Monic gcd via Euclid; gcd(a, 0) = a. Over GF(2) every nonzero polynomial
// is already monic.
inline Gf2Poly poly_gcd(Gf2Poly a, Gf2Poly b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials is undefined");
    while (!b.is_zero()) {
        a = a % b;
        std::swap(a, b);
    }
    return a;
}

// x^(2^k) = x (mod f) together with gcd(x^(2^(k/q)) - x, f) = 1 for every
// prime q dividing k = deg f.
inline bool is_irreducible(const Gf2Poly& f) {
    const long k = f.degree();
    if (k <= 0) return false;
    if (k == 1) return true;
    std::vector<long> proper;  // k/q for prime q | k
    for (long q = 2; q <= k; ++q) {
        if (k % q) continue;
        bool prime = true;
        for (long d = 2; d * d <= q; ++d)
            if (q % d == 0) prime = false;
        if (prime) proper.push_back(k / q);
    }
    Gf2Poly t = Gf2Poly::x() % f;
    const Gf2Poly x_red = t;
    for (long i = 1; i <= k; ++i) {
        t = (t * t) % f;
        for (long d : proper) {
            if (i != d) continue;
            Gf2Poly diff = t ^ x_red;
            if (diff.is_zero() || poly_gcd(diff, f).degree() != 0) return false;
        }
    }
    return t == x_red;
}

// Smallest monic irreducible of degree k, ordered by the integer encoding of
// the coefficient vector. Deterministic, so field constructions reproduce.
inline Gf2Poly find_irreducible(unsigned k) {
    if (k == 0) throw std::invalid_argument("degree must be >= 1");
    for (u64 tail = 0;; ++tail) {
        Gf2Poly f = Gf2Poly::monomial(k) ^ Gf2Poly::from_encoding(tail);
        if (is_irreducible(f)) return f;
        if (k < 64 && tail + 1 == (u64{1} << k)) break;  // sweep exhausted
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace cyclolc
