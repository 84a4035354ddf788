#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "cyclolc/lc.hpp"

namespace {

using namespace cyclolc;

// Shortest LFSR that reproduces the period cyclically, by trying every tap
// vector. The length-N register with the single wrap-around tap always works,
// so the answer is at most N.
u64 lc_brute(const std::vector<int>& s) {
    const u64 N = s.size();
    if (std::all_of(s.begin(), s.end(), [](int b) { return b == 0; })) return 0;
    for (u64 L = 1; L < N; ++L) {
        for (u64 taps = 0; taps < u64{1} << L; ++taps) {
            bool ok = true;
            for (u64 t = 0; t < N && ok; ++t) {
                int want = 0;
                for (u64 i = 1; i <= L; ++i)
                    if (taps >> (i - 1) & 1) want ^= s[(t + N - i) % N];
                ok = want == s[t];
            }
            if (ok) return L;
        }
    }
    return N;
}

std::vector<int> bits_of(u64 pattern, u64 len) {
    std::vector<int> s(len);
    for (u64 i = 0; i < len; ++i) s[i] = pattern >> i & 1;
    return s;
}

TEST(BerlekampMassey, MatchesBruteForceOnEveryShortPeriod) {
    for (u64 len = 1; len <= 6; ++len)
        for (u64 pat = 0; pat < u64{1} << len; ++pat) {
            const auto s = bits_of(pat, len);
            const u64 want = lc_brute(s);
            EXPECT_EQ(berlekamp_massey(s), want) << "len " << len << " pat " << pat;
            EXPECT_EQ(lc_via_gcd(s), want) << "len " << len << " pat " << pat;
        }
}

TEST(BerlekampMassey, KnownValues) {
    EXPECT_EQ(berlekamp_massey(std::vector<int>{0, 0, 0, 0}), 0u);
    EXPECT_EQ(berlekamp_massey(std::vector<int>{1, 1, 1, 1, 1}), 1u);
    EXPECT_EQ(berlekamp_massey(std::vector<int>{1, 0}), 2u);
    // the wrap-around matters: one period of 11001 alone fits a shorter LFSR
    EXPECT_EQ(berlekamp_massey(std::vector<int>{1, 1, 0, 0, 1}), 5u);
    EXPECT_EQ(berlekamp_massey(std::vector<int>{1, 1, 1, 0, 1, 0, 0}), 3u);
}

TEST(BerlekampMassey, EmptyInputIsAnError) {
    EXPECT_THROW(berlekamp_massey(std::vector<int>{}), std::invalid_argument);
    EXPECT_THROW(lc_via_gcd(std::vector<int>{}), std::invalid_argument);
}

TEST(BerlekampMassey, AgreesWithGcdOnRandomPeriods) {
    std::mt19937_64 rng(31);
    for (u64 len : {16u, 31u, 64u, 100u, 257u}) {
        for (int rep = 0; rep < 10; ++rep) {
            std::vector<int> s(len);
            for (auto& b : s) b = static_cast<int>(rng() & 1);
            EXPECT_EQ(berlekamp_massey(s), lc_via_gcd(s)) << len;
        }
    }
}

TEST(BerlekampMassey, RotationInvariant) {
    std::mt19937_64 rng(37);
    std::vector<int> s(50);
    for (auto& b : s) b = static_cast<int>(rng() & 1);
    const u64 want = berlekamp_massey(s);
    for (int rot : {1, 7, 49}) {
        std::vector<int> r(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) r[i] = s[(i + rot) % s.size()];
        EXPECT_EQ(berlekamp_massey(r), want) << rot;
    }
}

TEST(LcViaGcd, FixtureFactorizations) {
    // 1110100: S = (x+1)(x^3+x^2+1) divides x^7+1, so L = 7 - 4 = 3
    const Gf2Poly s7 = Gf2Poly::from_terms({0, 1, 2, 4});
    EXPECT_EQ(s7, Gf2Poly::from_terms({1, 0}) * Gf2Poly::from_terms({3, 2, 0}));
    EXPECT_TRUE(((Gf2Poly::monomial(7) ^ Gf2Poly::one()) % s7).is_zero());
    EXPECT_EQ(lc_via_gcd(s7, 7), 3u);
    // 11001: S = x^4 + x + 1 shares no factor with x^5 + 1, so L = 5
    const Gf2Poly s5 = Gf2Poly::from_terms({0, 1, 4});
    EXPECT_EQ(poly_gcd(Gf2Poly::monomial(5) ^ Gf2Poly::one(), s5), Gf2Poly::one());
    EXPECT_EQ(lc_via_gcd(s5, 5), 5u);
}

TEST(LcViaRoots, CountsVanishingPowers) {
    const auto seq5 = BinarySequence::generate(Cyclotomy(CyclotomicParams::make(5, 1, 2, 0)));
    const auto rc5 = lc_via_roots(seq5, FieldCtx::build(5, 1));
    EXPECT_EQ(rc5.lc, 5u);
    EXPECT_EQ(rc5.zero_count, 0u);

    const auto seq7 = BinarySequence::generate(Cyclotomy(CyclotomicParams::make(7, 1, 3, 0)));
    const auto rc7 = lc_via_roots(seq7, FieldCtx::build(7, 1));
    EXPECT_EQ(rc7.lc, 3u);
    EXPECT_EQ(rc7.zero_count, 4u);
}

TEST(LcViaRoots, OrbitFoldIsEquivalent) {
    for (auto [p, n, e, b] : {std::tuple<u64, unsigned, u64, u64>{7, 2, 3, 0},
                              {5, 2, 2, 7}, {3, 3, 1, 1}}) {
        const auto seq = BinarySequence::generate(Cyclotomy(CyclotomicParams::make(p, n, e, b)));
        const FieldCtx ctx = FieldCtx::build(p, n);
        const auto plain = lc_via_roots(seq, ctx, false);
        const auto folded = lc_via_roots(seq, ctx, true);
        EXPECT_EQ(plain.lc, folded.lc) << p << "^" << n;
        EXPECT_EQ(plain.zero_count, folded.zero_count) << p << "^" << n;
    }
}

TEST(LcViaRoots, ContextMustMatchThePeriod) {
    const auto seq = BinarySequence::generate(Cyclotomy(CyclotomicParams::make(5, 1, 2, 0)));
    EXPECT_THROW(lc_via_roots(seq, FieldCtx::build(7, 1)), std::invalid_argument);
}

TEST(Predict, ClosedFormKnownValues) {
    struct Row {
        u64 p;
        unsigned n;
        u64 e;
        bool two_in_d0;
        u64 lc;
    };
    // L = p^n - (p-1)/2 [2 in D_0] - [(p^n+1)/2 even]
    const Row rows[] = {
        {5, 1, 2, false, 5},  {7, 1, 3, true, 3},   {7, 2, 3, true, 46},
        {5, 2, 2, false, 25}, {3, 1, 1, false, 2},  {3, 2, 1, false, 9},
        {17, 1, 2, false, 17}, {17, 1, 8, true, 9}, {3, 3, 1, false, 26},
    };
    for (const Row& row : rows) {
        const auto pred = predict_lc(CyclotomicParams::make(row.p, row.n, row.e, 0));
        ASSERT_TRUE(pred.lc.has_value()) << row.p;
        EXPECT_EQ(pred.two_in_d0, row.two_in_d0) << row.p << "^" << row.n << " e=" << row.e;
        EXPECT_EQ(*pred.lc, row.lc) << row.p << "^" << row.n << " e=" << row.e;
    }
}

TEST(Predict, BranchIsIndependentOfBAndG) {
    const auto base = predict_lc(CyclotomicParams::make(7, 2, 3, 0));
    for (u64 b : {u64{1}, u64{13}})
        EXPECT_EQ(predict_lc(CyclotomicParams::make(7, 2, 3, b)).lc, base.lc);
    // 3 and 5 are both primitive roots modulo 49
    const auto other_g = predict_lc(CyclotomicParams::make(7, 2, 3, 0, 5));
    EXPECT_EQ(other_g.two_in_d0, base.two_in_d0);
    EXPECT_EQ(other_g.lc, base.lc);
}

TEST(Predict, WieferichPrimeHasNoClosedForm) {
    const auto pred = predict_lc(CyclotomicParams::make(1093, 1, 546, 0));
    EXPECT_FALSE(pred.lc.has_value());
}

TEST(Measure, AllMethodsAgreeWithTheClosedForm) {
    const auto rep = measure(CyclotomicParams::make(5, 2, 2, 3));
    EXPECT_EQ(rep.predicted, std::optional<u64>{25});
    EXPECT_EQ(rep.bm, rep.predicted);
    EXPECT_EQ(rep.gcd, rep.predicted);
    EXPECT_EQ(rep.roots, rep.predicted);
    EXPECT_EQ(rep.zero_count, std::optional<u64>{0});
    EXPECT_TRUE(rep.agree);
    EXPECT_EQ(rep.branch(), "2 not in D0");
}

TEST(Measure, MethodSelectionLeavesOthersEmpty) {
    MeasureOptions opt;
    opt.gcd = false;
    opt.roots = false;
    const auto rep = measure(CyclotomicParams::make(7, 1, 3, 0), opt);
    EXPECT_EQ(rep.bm, std::optional<u64>{3});
    EXPECT_FALSE(rep.gcd.has_value());
    EXPECT_FALSE(rep.roots.has_value());
    EXPECT_FALSE(rep.roots_skipped.has_value());
    EXPECT_TRUE(rep.agree);
    EXPECT_EQ(rep.branch(), "2 in D0");
}

TEST(Measure, OversizedFieldSkipsRootsGracefully) {
    const auto rep = measure(CyclotomicParams::make(37, 2, 18, 0));  // degree 1332
    EXPECT_TRUE(rep.bm.has_value());
    EXPECT_EQ(rep.bm, rep.gcd);
    EXPECT_FALSE(rep.roots.has_value());
    ASSERT_TRUE(rep.roots_skipped.has_value());
    EXPECT_NE(rep.roots_skipped->find("exceeds cap"), std::string::npos);
    EXPECT_TRUE(rep.agree);
}

TEST(Measure, WieferichParametersStillMeasure) {
    MeasureOptions opt;
    opt.roots = false;  // degree 364 is over the cap anyway
    const auto rep = measure(CyclotomicParams::make(1093, 1, 546, 0), opt);
    EXPECT_FALSE(rep.predicted.has_value());
    ASSERT_TRUE(rep.bm.has_value());
    EXPECT_EQ(rep.bm, rep.gcd);
    EXPECT_TRUE(rep.agree);
}

}  // namespace
