#pragma once

#include <bit>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclolc/common.hpp"
#include "cyclolc/cyclotomy.hpp"
#include "cyclolc/gf2field.hpp"
#include "cyclolc/gf2poly.hpp"
#include "cyclolc/number_theory.hpp"
#include "cyclolc/sequence.hpp"

namespace cyclolc {

namespace detail {

// 64 bits of v starting at bit offset off; reads past the end are zero.
inline u64 window64(const std::vector<u64>& v, u64 off) {
    const u64 w = off / 64;
    const unsigned r = off % 64;
    const u64 lo = w < v.size() ? v[w] : 0;
    if (r == 0) return lo;
    const u64 hi = w + 1 < v.size() ? v[w + 1] : 0;
    return (lo >> r) | (hi << (64 - r));
}

}  // namespace detail

// Linear complexity of the periodic sequence whose one period is given,
// by LFSR synthesis. The synthesis runs over two concatenated periods: the
// minimal LFSR of an N-periodic sequence has length at most N, and 2N terms
// pin it down exactly, whereas a single period can be generated by a shorter
// register that fails on the wrap-around. Word-packed discrepancy and update
// loops keep this at O(N^2/64).
inline u64 berlekamp_massey(const std::vector<u64>& period_words, u64 nbits) {
    if (nbits == 0) throw std::invalid_argument("empty sequence");
    const u64 total = 2 * nbits;
    // reversed doubled stream: rev[t] = s[(total-1-t) mod N], so the
    // discrepancy becomes a dot product of C with a window of rev
    std::vector<u64> rev((total + 63) / 64, 0);
    for (u64 t = 0; t < total; ++t) {
        const u64 i = (total - 1 - t) % nbits;
        if ((period_words[i / 64] >> (i % 64)) & 1) rev[t / 64] |= u64{1} << (t % 64);
    }
    Gf2Poly conn = Gf2Poly::one();  // C(x), degree <= L throughout
    Gf2Poly prev = Gf2Poly::one();  // B(x), last C before L changed
    u64 lfsr_len = 0;
    u64 gap = 1;  // x^gap multiplies B on update
    for (u64 step = 0; step < total; ++step) {
        const u64 off = total - 1 - step;
        u64 acc = 0;
        const auto& cw = conn.words();
        for (u64 w = 0; w < cw.size(); ++w) acc ^= cw[w] & detail::window64(rev, off + 64 * w);
        if ((std::popcount(acc) & 1) == 0) {
            ++gap;
            continue;
        }
        if (2 * lfsr_len <= step) {
            Gf2Poly keep = conn;
            conn.xor_shifted(prev, gap);
            prev = std::move(keep);
            lfsr_len = step + 1 - lfsr_len;
            gap = 1;
        } else {
            conn.xor_shifted(prev, gap);
            ++gap;
        }
    }
    return lfsr_len;
}

inline u64 berlekamp_massey(const BinarySequence& seq) {
    return berlekamp_massey(seq.words(), seq.size());
}

inline u64 berlekamp_massey(const std::vector<int>& bits) {
    std::vector<u64> words((bits.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) words[i / 64] |= u64{1} << (i % 64);
    return berlekamp_massey(words, bits.size());
}

// L = N - deg gcd(x^N + 1, S(x)). The all-zero period falls out of the
// general path: gcd(x^N + 1, 0) = x^N + 1 gives L = 0.
inline u64 lc_via_gcd(const Gf2Poly& gen_poly, u64 period) {
    if (period == 0) throw std::invalid_argument("empty sequence");
    const Gf2Poly xn1 = Gf2Poly::monomial(period) ^ Gf2Poly::one();
    return period - static_cast<u64>(poly_gcd(xn1, gen_poly).degree());
}

inline u64 lc_via_gcd(const BinarySequence& seq) {
    return lc_via_gcd(seq.generating_polynomial(), seq.size());
}

inline u64 lc_via_gcd(const std::vector<int>& bits) {
    return lc_via_gcd(Gf2Poly::from_bits(bits), bits.size());
}

struct RootCount {
    u64 lc = 0;
    u64 zero_count = 0;
};

// L = N - |{i : S(alpha_n^i) = 0}|. The default sweep evaluates every point;
// orbit_fold evaluates one representative per i -> 2i orbit instead, which is
// sound because S(x^2) = S(x)^2 in characteristic 2.
inline RootCount lc_via_roots(const Gf2Poly& gen_poly, u64 period, const FieldCtx& ctx,
                              bool orbit_fold = false) {
    if (checked_pow(ctx.p(), ctx.n()) != period)
        throw std::invalid_argument("field context does not match the period");
    u64 zeros = 0;
    if (!orbit_fold) {
        FieldElement pt = ctx.one();
        for (u64 i = 0; i < period; ++i) {
            if (ctx.eval(gen_poly, pt).is_zero()) ++zeros;
            pt = ctx.mul(pt, ctx.alpha());
        }
    } else {
        std::vector<char> seen(period, 0);
        for (u64 i = 0; i < period; ++i) {
            if (seen[i]) continue;
            u64 orbit = 0;
            u64 j = i;
            do {
                seen[j] = 1;
                ++orbit;
                j = 2 * j % period;
            } while (j != i);
            if (ctx.eval(gen_poly, ctx.pow(ctx.alpha(), i)).is_zero()) zeros += orbit;
        }
    }
    return {period - zeros, zeros};
}

inline RootCount lc_via_roots(const BinarySequence& seq, const FieldCtx& ctx,
                              bool orbit_fold = false) {
    return lc_via_roots(seq.generating_polynomial(), seq.size(), ctx, orbit_fold);
}

struct Prediction {
    std::optional<u64> lc;   // empty when p is Wieferich: the hypothesis fails
    bool two_in_d0 = false;  // branch selector, independent of b and g
};

// The closed form: L = p^n - (p-1)/2 * [2 in D_0^{(p)}] - delta((p^n+1)/2),
// defined only for non-Wieferich p. The branch test is ind_g(2) = 0 (mod d_1).
inline Prediction predict_lc(const CyclotomicParams& params) {
    Prediction out;
    out.two_in_d0 = discrete_log(params.g, 2, params.p) % params.d(1) == 0;
    if (is_wieferich(params.p)) return out;
    const u64 correction = out.two_in_d0 ? (params.p - 1) / 2 : 0;
    out.lc = params.period() - correction - delta_half_period(params.p, params.n);
    return out;
}

struct MeasureOptions {
    bool bm = true;
    bool gcd = true;
    bool roots = true;
    bool orbit_fold = false;
    Caps caps;
};

// One full measurement row: prediction plus whichever methods were requested.
struct LcReport {
    CyclotomicParams params;
    std::optional<u64> predicted;
    bool two_in_d0 = false;
    std::optional<u64> bm;
    std::optional<u64> gcd;
    std::optional<u64> roots;
    std::optional<u64> zero_count;
    std::optional<std::string> roots_skipped;
    bool agree = true;

    std::string branch() const { return two_in_d0 ? "2 in D0" : "2 not in D0"; }
};

inline LcReport measure(const CyclotomicParams& params, const MeasureOptions& opt = {}) {
    LcReport rep;
    rep.params = params;
    const Prediction pred = predict_lc(params);
    rep.predicted = pred.lc;
    rep.two_in_d0 = pred.two_in_d0;
    if (opt.bm || opt.gcd || opt.roots) {
        const Cyclotomy cy(params);
        const BinarySequence seq = BinarySequence::generate(cy);
        if (opt.bm) rep.bm = berlekamp_massey(seq);
        if (opt.gcd) rep.gcd = lc_via_gcd(seq);
        if (opt.roots) {
            try {
                const FieldCtx ctx = FieldCtx::build(params.p, params.n, opt.caps);
                const RootCount rc = lc_via_roots(seq, ctx, opt.orbit_fold);
                rep.roots = rc.lc;
                rep.zero_count = rc.zero_count;
            } catch (const SizeError& err) {
                rep.roots_skipped = err.what();
            }
        }
    }
    std::optional<u64> measured;
    rep.agree = true;
    for (const auto& m : {rep.bm, rep.gcd, rep.roots}) {
        if (!m) continue;
        if (measured && *measured != *m) rep.agree = false;
        measured = m;
    }
    if (rep.predicted && measured && *rep.predicted != *measured) rep.agree = false;
    return rep;
}

}  // namespace cyclolc
