#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclolc/common.hpp"
#include "cyclolc/number_theory.hpp"

namespace cyclolc {

// The full parameter tuple (p, n, e, f = 2^r, b, g) defining one sequence
// instance. Constructed through make(), which validates every constraint, so
// a CyclotomicParams value is always internally consistent.
struct CyclotomicParams {
    u64 p = 0;
    unsigned n = 0;
    u64 e = 0;
    u64 f = 0;
    unsigned r = 0;
    u64 b = 0;
    u64 g = 0;

    static CyclotomicParams make(u64 p, unsigned n, u64 e, u64 b,
                                 std::optional<u64> g = std::nullopt, const Caps& caps = {}) {
        require_odd_prime(p);
        if (n < 1) throw std::invalid_argument("n must be >= 1");
        if (e < 1 || (p - 1) % e != 0) throw std::invalid_argument("e must divide p-1");
        const u64 f = (p - 1) / e;
        if (f < 2 || (f & (f - 1)) != 0)
            throw std::invalid_argument("f = (p-1)/e must be a power of two >= 2");
        if (caps.period > kPeriodCapCeiling)
            throw std::invalid_argument("period cap above 2^24 is unsupported");
        const u64 period = checked_pow(p, n);
        if (period > caps.period)
            throw SizeError("period p^n = " + std::to_string(period) + " exceeds cap " +
                            std::to_string(caps.period));
        CyclotomicParams params;
        params.p = p;
        params.n = n;
        params.e = e;
        params.f = f;
        params.r = static_cast<unsigned>(std::countr_zero(f));
        const u64 dn = f * (period / p);
        if (b >= dn)
            throw std::invalid_argument("b out of range [0, p^(n-1)*f - 1]");
        params.b = b;
        if (g) {
            if (*g < 2 || *g >= p * p || multiplicative_order(*g, p * p) != p * (p - 1))
                throw std::invalid_argument("g is not a primitive root modulo p^2");
            params.g = *g;
        } else {
            params.g = find_primitive_root(p);
        }
        return params;
    }

    u64 period() const { return checked_pow(p, n); }

    // d_j = phi(p^j)/e = f * p^(j-1), the number of classes at level j
    u64 d(unsigned j) const {
        if (j < 1 || j > n) throw std::invalid_argument("level out of range");
        return f * checked_pow(p, j - 1);
    }
};

// (level, index) of the class p^(n-j) * D_i^{(p^j)} containing a residue.
struct ClassId {
    unsigned level = 0;
    u64 index = 0;
    bool operator==(const ClassId&) const = default;
};

struct CharacteristicSets {
    std::vector<u64> c0;
    std::vector<u64> c1;
};

// Generalized cyclotomic classes D_i^{(p^j)} = g^i * {g^(d_j t) : t < e} with
// the induced partition of Z_{p^n} and the C_0/C_1 characteristic split.
//
// Construction precomputes, per level j, the table of indices ind_g(y) mod p^j
// for every unit y, so classify() and the C_1 membership predicate are O(1).
class Cyclotomy {
  public:
    explicit Cyclotomy(CyclotomicParams params) : params_(std::move(params)) {
        const unsigned n = params_.n;
        pj_.resize(n + 1);
        pj_[0] = 1;
        for (unsigned j = 1; j <= n; ++j) pj_[j] = pj_[j - 1] * params_.p;
        pow_.resize(n);
        ind_.resize(n);
        for (unsigned j = 1; j <= n; ++j) {
            const u64 m = pj_[j];
            const u64 phi = m / params_.p * (params_.p - 1);
            auto& pw = pow_[j - 1];
            auto& ind = ind_[j - 1];
            pw.resize(phi);
            ind.assign(m, kNonUnit);
            u64 v = 1;
            const u64 gj = params_.g % m;
            for (u64 t = 0; t < phi; ++t) {
                pw[t] = static_cast<u32>(v);
                ind[v] = static_cast<u32>(t);
                v = v * gj % m;
            }
        }
    }

    const CyclotomicParams& params() const { return params_; }
    u64 period() const { return pj_[params_.n]; }
    u64 d(unsigned j) const { return params_.d(j); }

    // Explicit residues of D_i^{(p^j)}, sorted; i is canonicalized mod d_j.
    const std::vector<u64>& cyclotomic_class(unsigned j, u64 i) const {
        if (j < 1 || j > params_.n) throw std::invalid_argument("level out of range");
        const u64 dj = d(j);
        i %= dj;
        std::scoped_lock lk(cache_mu_);
        auto [it, inserted] = class_cache_.try_emplace(std::make_pair(j, i));
        if (inserted) {
            auto& elems = it->second;
            elems.reserve(params_.e);
            for (u64 t = 0; t < params_.e; ++t) elems.push_back(pow_[j - 1][i + dj * t]);
            std::sort(elems.begin(), elems.end());
        }
        return it->second;
    }

    // The unique (j, i) with x in p^(n-j) * D_i^{(p^j)}; nullopt for x = 0.
    std::optional<ClassId> classify(u64 x) const {
        if (x >= period()) throw std::invalid_argument("residue out of range");
        if (x == 0) return std::nullopt;
        unsigned v = 0;
        while (x % params_.p == 0) {
            x /= params_.p;
            ++v;
        }
        const unsigned j = params_.n - v;
        return ClassId{j, ind_[j - 1][x] % d(j)};
    }

    // x in C_1^{(p^n)}: x = 0, or the class index of x lands in the b-shifted
    // lower half of its level.
    bool in_c1(u64 x) const {
        const auto cls = classify(x);
        if (!cls) return true;
        const u64 dj = d(cls->level);
        return (cls->index + dj - params_.b % dj) % dj < dj / 2;
    }

    CharacteristicSets characteristic_sets() const {
        CharacteristicSets sets;
        const u64 N = period();
        sets.c1.reserve((N + 1) / 2);
        sets.c0.reserve(N / 2);
        for (u64 x = 0; x < N; ++x) (in_c1(x) ? sets.c1 : sets.c0).push_back(x);
        return sets;
    }

  private:
    static constexpr u32 kNonUnit = 0xFFFFFFFFu;

    CyclotomicParams params_;
    std::vector<u64> pj_;                 // p^j, 0 <= j <= n
    std::vector<std::vector<u32>> pow_;   // pow_[j-1][t] = g^t mod p^j
    std::vector<std::vector<u32>> ind_;   // ind_[j-1][y] = ind_g(y) mod p^j
    mutable std::mutex cache_mu_;
    mutable std::map<std::pair<unsigned, u64>, std::vector<u64>> class_cache_;
};

}  // namespace cyclolc
