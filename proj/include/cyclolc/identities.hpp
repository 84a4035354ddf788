#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclolc/common.hpp"
#include "cyclolc/cyclotomy.hpp"
#include "cyclolc/gf2field.hpp"
#include "cyclolc/number_theory.hpp"

namespace cyclolc {

inline void require_matching(const Cyclotomy& cy, const FieldCtx& ctx) {
    if (cy.params().p != ctx.p() || cy.params().n != ctx.n())
        throw std::invalid_argument("field context does not match the cyclotomy");
}

// E_l(x) = sum of x^i over the level-j class with index l.
inline FieldElement eval_E(const Cyclotomy& cy, const FieldCtx& ctx, unsigned j, u64 l,
                           const FieldElement& x) {
    require_matching(cy, ctx);
    FieldElement acc = ctx.zero();
    for (u64 i : cy.cyclotomic_class(j, l)) acc = ctx.add(acc, ctx.pow(x, i));
    return acc;
}

// H_k(x) = sum of E_{(i+k) mod d_j}(x) over the lower half of the indices.
inline FieldElement eval_H(const Cyclotomy& cy, const FieldCtx& ctx, unsigned j, u64 k,
                           const FieldElement& x) {
    const u64 dj = cy.params().d(j);
    FieldElement acc = ctx.zero();
    for (u64 i = 0; i < dj / 2; ++i) acc = ctx.add(acc, eval_E(cy, ctx, j, (i + k) % dj, x));
    return acc;
}

// T_k at level j stacks the H layers: T_k(x) = sum_t H_k^{(p^{j-t})}(x^{p^t}),
// the index reduced modulo each layer's own d.
inline FieldElement eval_T(const Cyclotomy& cy, const FieldCtx& ctx, unsigned j, u64 k,
                           const FieldElement& x) {
    if (j < 1 || j > cy.params().n) throw std::invalid_argument("level out of range");
    FieldElement acc = ctx.zero();
    FieldElement pt = x;
    for (unsigned t = 0; t < j; ++t) {
        const unsigned level = j - t;
        acc = ctx.add(acc, eval_H(cy, ctx, level, k % cy.params().d(level), pt));
        pt = ctx.pow(pt, cy.params().p);
    }
    return acc;
}

struct IdentityCheck {
    std::string name;
    u64 checked = 0;
    u64 failed = 0;
};

struct IdentityReport {
    std::vector<IdentityCheck> families;

    bool all_pass() const {
        for (const auto& f : families)
            if (f.failed) return false;
        return true;
    }
    u64 total_checked() const {
        u64 t = 0;
        for (const auto& f : families) t += f.checked;
        return t;
    }
};

// Checks the structural identities the closed form rests on:
//   complement_pair   T_i(a) + T_{i+d/2}(a) = 1 at every unit-power point
//   level_shift       T_i^{(p^j)} at a p^l-th power point equals T_i^{(p^{j-l})}
//                     at the level j-l point; the (p^l - 1)/2 constants picked
//                     up by the H layers cancel mod 2
//   frobenius_shift   squaring shifts the index by ind(2) at each level
//   t_outside_gf2     T at a point of full order p^n is never 0 or 1 (n >= 2)
// Exhaustive below 2500 period, otherwise a fixed-seed sample per family.
inline IdentityReport verify_identities(const Cyclotomy& cy, const FieldCtx& ctx,
                                        u64 sample_budget = 512) {
    require_matching(cy, ctx);
    const CyclotomicParams& pr = cy.params();
    const u64 period = pr.period();
    const bool exhaustive = period <= 2500;
    std::mt19937_64 rng(0x636c6f6c63u);

    auto random_unit = [&](u64 pj) {
        std::uniform_int_distribution<u64> dist(1, pj - 1);
        u64 a = dist(rng);
        while (a % pr.p == 0) a = dist(rng);
        return a;
    };

    IdentityReport rep;

    {
        IdentityCheck chk{"complement_pair", 0, 0};
        auto probe = [&](unsigned j, u64 a, u64 i) {
            const FieldElement pt = ctx.pow(ctx.alpha_level(j), a);
            const FieldElement lhs =
                ctx.add(eval_T(cy, ctx, j, i, pt), eval_T(cy, ctx, j, i + pr.d(j) / 2, pt));
            ++chk.checked;
            if (!lhs.is_one()) ++chk.failed;
        };
        if (exhaustive) {
            u64 pj = 1;
            for (unsigned j = 1; j <= pr.n; ++j) {
                pj *= pr.p;
                for (u64 a = 1; a < pj; ++a) {
                    if (a % pr.p == 0) continue;
                    for (u64 i = 0; i < pr.d(j); ++i) probe(j, a, i);
                }
            }
        } else {
            std::uniform_int_distribution<unsigned> jd(1, pr.n);
            for (u64 s = 0; s < sample_budget; ++s) {
                const unsigned j = jd(rng);
                const u64 pj = checked_pow(pr.p, j);
                probe(j, random_unit(pj), rng() % pr.d(j));
            }
        }
        rep.families.push_back(chk);
    }

    {
        IdentityCheck chk{"level_shift", 0, 0};
        auto probe = [&](unsigned j, unsigned l, u64 a, u64 i) {
            const u64 pl = checked_pow(pr.p, l);
            const FieldElement lhs =
                eval_T(cy, ctx, j, i, ctx.pow(ctx.alpha_level(j), static_cast<u128>(pl) * a));
            const FieldElement rhs =
                eval_T(cy, ctx, j - l, i, ctx.pow(ctx.alpha_level(j - l), a));
            ++chk.checked;
            if (!(lhs == rhs)) ++chk.failed;
        };
        if (exhaustive) {
            u64 pj = 1;
            for (unsigned j = 1; j <= pr.n; ++j) {
                pj *= pr.p;
                for (unsigned l = 0; l < j; ++l)
                    for (u64 a = 1; a < pj; ++a) {
                        if (a % pr.p == 0) continue;
                        for (u64 i = 0; i < pr.d(j); ++i) probe(j, l, a, i);
                    }
            }
        } else {
            std::uniform_int_distribution<unsigned> jd(1, pr.n);
            for (u64 s = 0; s < sample_budget; ++s) {
                const unsigned j = jd(rng);
                const unsigned l = static_cast<unsigned>(rng() % j);
                const u64 pj = checked_pow(pr.p, j);
                probe(j, l, random_unit(pj), rng() % pr.d(j));
            }
        }
        rep.families.push_back(chk);
    }

    {
        IdentityCheck chk{"frobenius_shift", 0, 0};
        for (unsigned j = 1; j <= pr.n; ++j) {
            const u64 pj = checked_pow(pr.p, j);
            const u64 shift = discrete_log(pr.g, 2, pj) % pr.d(j);
            const FieldElement pt = ctx.alpha_level(j);
            for (u64 i = 0; i < pr.d(j); ++i) {
                const FieldElement lhs = ctx.square(eval_T(cy, ctx, j, i, pt));
                const FieldElement rhs = eval_T(cy, ctx, j, i + shift, pt);
                ++chk.checked;
                if (!(lhs == rhs)) ++chk.failed;
            }
        }
        rep.families.push_back(chk);
    }

    {
        IdentityCheck chk{"t_outside_gf2", 0, 0};
        if (pr.n >= 2) {
            const u64 stride = period / pr.p;  // p^{n-1}; h on its multiples drops level
            auto probe = [&](u64 h, u64 k) {
                const FieldElement v = eval_T(cy, ctx, pr.n, k, ctx.pow(ctx.alpha(), h));
                ++chk.checked;
                if (v.is_zero() || v.is_one()) ++chk.failed;
            };
            if (exhaustive) {
                for (u64 h = 1; h < period; ++h) {
                    if (h % stride == 0) continue;
                    for (u64 k = 0; k < pr.d(pr.n); ++k) probe(h, k);
                }
            } else {
                std::uniform_int_distribution<u64> hd(1, period - 1);
                for (u64 s = 0; s < sample_budget; ++s) {
                    u64 h = hd(rng);
                    while (h % stride == 0) h = hd(rng);
                    probe(h, rng() % pr.d(pr.n));
                }
            }
        }
        rep.families.push_back(chk);
    }

    return rep;
}

}  // namespace cyclolc
