#pragma once

#include <atomic>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclolc/common.hpp"
#include "cyclolc/gf2poly.hpp"
#include "cyclolc/number_theory.hpp"

namespace cyclolc {

// Residue of a Gf2Poly modulo the owning context's modulus, tagged with the
// context id so cross-context arithmetic is rejected instead of corrupting.
struct FieldElement {
    Gf2Poly rep;
    u32 ctx_id = 0;

    bool operator==(const FieldElement&) const = default;
    bool is_zero() const { return rep.is_zero(); }
    bool is_one() const { return rep == Gf2Poly::one(); }
};

// GF(2^k) with k = ord_{p^n}(2): the smallest binary field containing a
// primitive p^n-th root of unity alpha_n. alpha_level(j) = alpha_n^(p^(n-j))
// has multiplicative order exactly p^j.
class FieldCtx {
  public:
    static FieldCtx build(u64 p, unsigned n, const Caps& caps = {}) {
        require_odd_prime(p);
        if (n < 1) throw std::invalid_argument("n must be >= 1");
        if (caps.degree > kDegreeCapCeiling)
            throw std::invalid_argument("degree cap above 128 is unsupported");
        const u64 pn = checked_pow(p, n);
        FieldCtx ctx;
        ctx.p_ = p;
        ctx.n_ = n;
        ctx.k_ = static_cast<unsigned>(multiplicative_order(2, pn));
        if (ctx.k_ > caps.degree)
            throw SizeError("extension degree " + std::to_string(ctx.k_) +
                            " exceeds cap " + std::to_string(caps.degree));
        ctx.modulus_ = find_irreducible(ctx.k_);
        ctx.id_ = next_id_.fetch_add(1, std::memory_order_relaxed);

        // Deterministic sweep for a p^n-th root of unity: cofactor power of
        // ascending candidate encodings until the result has full order.
        const u128 group = ctx.k_ == 128 ? ~u128{0} : (u128{1} << ctx.k_) - 1;
        const u128 cofactor = group / pn;
        const u64 pn_down = pn / p;
        FieldElement alpha_n;
        for (u64 enc = 2;; ++enc) {
            const FieldElement w = ctx.pow(ctx.from_poly(Gf2Poly::from_encoding(enc)), cofactor);
            if (!ctx.pow(w, pn_down).is_one()) {
                alpha_n = w;
                break;
            }
        }
        ctx.alpha_.assign(n, ctx.zero());
        ctx.alpha_[n - 1] = alpha_n;
        for (unsigned j = n - 1; j >= 1; --j) ctx.alpha_[j - 1] = ctx.pow(ctx.alpha_[j], p);
        return ctx;
    }

    unsigned degree() const { return k_; }
    const Gf2Poly& modulus() const { return modulus_; }
    u64 p() const { return p_; }
    unsigned n() const { return n_; }

    FieldElement zero() const { return FieldElement{{}, id_}; }
    FieldElement one() const { return FieldElement{Gf2Poly::one(), id_}; }

    FieldElement from_poly(const Gf2Poly& f) const { return FieldElement{f % modulus_, id_}; }

    // alpha_n, of multiplicative order exactly p^n
    const FieldElement& alpha() const { return alpha_[n_ - 1]; }

    // alpha_j, of multiplicative order exactly p^j, 1 <= j <= n
    const FieldElement& alpha_level(unsigned j) const {
        if (j < 1 || j > n_) throw std::invalid_argument("level out of range");
        return alpha_[j - 1];
    }

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        check(a);
        check(b);
        return FieldElement{a.rep ^ b.rep, id_};
    }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        check(a);
        check(b);
        return FieldElement{(a.rep * b.rep) % modulus_, id_};
    }

    FieldElement square(const FieldElement& a) const { return mul(a, a); }

    FieldElement pow(FieldElement a, u128 e) const {
        check(a);
        FieldElement r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // Horner evaluation of an arbitrary GF(2)[x] polynomial at x.
    FieldElement eval(const Gf2Poly& f, const FieldElement& x) const {
        check(x);
        FieldElement acc = zero();
        for (long i = f.degree(); i >= 0; --i) {
            acc = mul(acc, x);
            if (f.coeff(static_cast<std::size_t>(i))) acc = add(acc, one());
        }
        return acc;
    }

  private:
    FieldCtx() = default;

    void check(const FieldElement& e) const {
        if (e.ctx_id != id_)
            throw std::invalid_argument("field element belongs to a different context");
    }

    u64 p_ = 0;
    unsigned n_ = 0;
    unsigned k_ = 0;
    Gf2Poly modulus_;
    std::vector<FieldElement> alpha_;
    u32 id_ = 0;

    inline static std::atomic<u32> next_id_{1};
};

}  // namespace cyclolc
