#include <gtest/gtest.h>

#include <sstream>

#include "cyclolc/grid.hpp"
#include "cyclolc/report.hpp"

namespace {

using namespace cyclolc;

bool same_report(const LcReport& a, const LcReport& b) {
    return a.params.p == b.params.p && a.params.n == b.params.n && a.params.e == b.params.e &&
           a.params.b == b.params.b && a.params.g == b.params.g && a.two_in_d0 == b.two_in_d0 &&
           a.predicted == b.predicted && a.bm == b.bm && a.gcd == b.gcd && a.roots == b.roots &&
           a.zero_count == b.zero_count && a.agree == b.agree;
}

TEST(Report, CsvHeaderIsTheDocumentedSchema) {
    EXPECT_EQ(csv_header(), "p,n,e,b,g,branch,predicted,bm,gcd,roots,zero_count,agree");
}

TEST(Report, MeasuredRowSerializesExactly) {
    const auto rep = measure(CyclotomicParams::make(5, 2, 2, 3));
    EXPECT_EQ(to_csv_row(rep), "5,2,2,3,2,2 not in D0,25,25,25,25,0,true");
}

TEST(Report, CsvRoundTripPreservesEveryField) {
    const auto rep = measure(CyclotomicParams::make(7, 2, 3, 4));
    EXPECT_TRUE(same_report(from_csv_row(to_csv_row(rep)), rep));

    // prediction-only row: measured columns come back empty
    LcReport pred;
    pred.params = CyclotomicParams::make(7, 1, 3, 0);
    pred.predicted = 3;
    pred.two_in_d0 = true;
    const std::string row = to_csv_row(pred);
    EXPECT_EQ(row, "7,1,3,0,3,2 in D0,3,NA,NA,NA,NA,true");
    EXPECT_TRUE(same_report(from_csv_row(row), pred));
}

TEST(Report, SkippedRootsSurviveTheRoundTrip) {
    const auto rep = measure(CyclotomicParams::make(37, 2, 18, 0));
    ASSERT_TRUE(rep.roots_skipped.has_value());
    const std::string row = to_csv_row(rep);
    EXPECT_NE(row.find(",SKIPPED,"), std::string::npos);
    const LcReport back = from_csv_row(row);
    EXPECT_FALSE(back.roots.has_value());
    EXPECT_TRUE(back.roots_skipped.has_value());
    EXPECT_TRUE(same_report(back, rep));
}

TEST(Report, JsonRoundTripPreservesEveryField) {
    const auto rep = measure(CyclotomicParams::make(5, 2, 2, 0));
    const auto j = to_json(rep);
    EXPECT_EQ(j.at("p"), 5);
    EXPECT_EQ(j.at("branch"), "2 not in D0");
    EXPECT_EQ(j.at("agree"), true);
    EXPECT_TRUE(same_report(from_json(j), rep));

    LcReport pred;
    pred.params = CyclotomicParams::make(3, 2, 1, 1);
    pred.predicted = 9;
    const auto jp = to_json(pred);
    EXPECT_TRUE(jp.at("bm").is_null());
    EXPECT_TRUE(same_report(from_json(jp), pred));
}

TEST(Report, JsonKeysStayInSchemaOrder) {
    const auto rep = measure(CyclotomicParams::make(5, 1, 2, 0));
    const std::string dumped = to_json(rep).dump();
    EXPECT_LT(dumped.find("\"p\""), dumped.find("\"n\""));
    EXPECT_LT(dumped.find("\"branch\""), dumped.find("\"predicted\""));
    EXPECT_LT(dumped.find("\"predicted\""), dumped.find("\"agree\""));
}

TEST(Report, MalformedRowsAreRejected) {
    EXPECT_THROW(from_csv_row("5,1,2,0,2"), std::invalid_argument);
    EXPECT_THROW(from_csv_row("5,1,2,0,2,bogus,5,5,5,5,0,true"), std::invalid_argument);
    EXPECT_THROW(from_csv_row("5,1,2,0,2,2 not in D0,5,5,5,5,0,maybe"), std::invalid_argument);
    EXPECT_THROW(from_csv_row("4,1,1,0,2,2 not in D0,5,5,5,5,0,true"), std::invalid_argument);
}

TEST(Report, EveryGridRowParsesBack) {
    GridSpec spec;
    spec.p_max = 7;
    spec.period_max = 50;
    const GridResult res = run_grid(spec);
    ASSERT_FALSE(res.rows.empty());
    const std::string csv = to_csv(res.rows);
    std::istringstream in(csv);
    std::string line;
    ASSERT_TRUE(std::getline(in, line));
    EXPECT_EQ(line, csv_header());
    std::size_t parsed = 0;
    while (std::getline(in, line)) {
        EXPECT_TRUE(same_report(from_csv_row(line), res.rows[parsed])) << line;
        EXPECT_TRUE(same_report(from_json(to_json(res.rows[parsed])), res.rows[parsed]));
        ++parsed;
    }
    EXPECT_EQ(parsed, res.rows.size());
}

TEST(Grid, RowsAreSortedAndComplete) {
    GridSpec spec;
    spec.p_max = 17;
    spec.n_max = 2;
    const GridResult res = run_grid(spec);
    EXPECT_EQ(res.rows.size(), 60u);
    EXPECT_TRUE(res.all_agree());
    EXPECT_TRUE(res.skipped_wieferich.empty());
    for (std::size_t i = 1; i < res.rows.size(); ++i) {
        const auto& a = res.rows[i - 1].params;
        const auto& b = res.rows[i].params;
        EXPECT_LE(std::tie(a.p, a.e, a.n, a.b), std::tie(b.p, b.e, b.n, b.b)) << i;
    }
    // every row keeps the measured value equal to the closed form
    for (const auto& row : res.rows) {
        ASSERT_TRUE(row.predicted.has_value());
        EXPECT_EQ(row.bm, row.predicted);
    }
}

TEST(Grid, EmptyRangeAndWieferichSkips) {
    GridSpec empty;
    empty.p_max = 2;
    EXPECT_TRUE(run_grid(empty).rows.empty());

    GridSpec wief;
    wief.p_max = 1093;
    wief.period_max = 1100;  // admits every prime at n = 1 only
    wief.with_roots = false;
    const GridResult res = run_grid(wief);
    ASSERT_EQ(res.skipped_wieferich.size(), 1u);
    EXPECT_EQ(res.skipped_wieferich[0], 1093u);
    ASSERT_FALSE(res.rows.empty());
    for (const auto& row : res.rows) EXPECT_NE(row.params.p, 1093u);
}

TEST(Grid, ThreadFanOutMatchesSerial) {
    GridSpec spec;
    spec.p_max = 13;
    spec.n_max = 1;
    spec.threads = 1;
    const GridResult serial = run_grid(spec);
    spec.threads = 4;
    const GridResult parallel = run_grid(spec);
    ASSERT_EQ(serial.rows.size(), parallel.rows.size());
    for (std::size_t i = 0; i < serial.rows.size(); ++i)
        EXPECT_EQ(to_csv_row(serial.rows[i]), to_csv_row(parallel.rows[i])) << i;
}

TEST(Grid, BSweepVariants) {
    GridSpec spec;
    spec.p_max = 5;
    spec.n_max = 1;
    spec.b_sweep = BSweep::all;
    u64 rows_all = run_grid(spec).rows.size();
    // p=3: d=2 -> 2 rows; p=5: e=2 d=2 -> 2, e=1 d=4 -> 4
    EXPECT_EQ(rows_all, 8u);
    spec.b_sweep = BSweep::edges;
    EXPECT_EQ(run_grid(spec).rows.size(), 8u);  // {0,1,d/2,d-1}: d=2 gives {0,1}
    spec.b_sweep = BSweep::standard;
    EXPECT_EQ(run_grid(spec).rows.size(), 7u);  // d=2: {0,1}; d=4: {0,1,2}
}

}  // namespace
