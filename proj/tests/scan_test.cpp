#include "twistcert/scan.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace twistcert {
namespace {

const ScanRow* find(const std::vector<ScanRow>& rows, int k, int l, long r) {
  for (const auto& row : rows)
    if (row.k == k && row.l == l && row.r == r) return &row;
  return nullptr;
}

TEST(Scan, SkipsOddOddAndTrivial) {
  ScanOptions opt{1, 3, -1, 2, 2};
  const auto knots = scan_knots(opt);
  for (auto [k, l] : knots) {
    EXPECT_FALSE(k % 2 != 0 && l % 2 != 0);
    EXPECT_FALSE(normalize(k, l).is_trivial());
  }
  EXPECT_EQ(std::count(knots.begin(), knots.end(), std::pair{1, 2}), 0);  // J(1, 2) is the unknot
  EXPECT_EQ(std::count(knots.begin(), knots.end(), std::pair{2, 2}), 1);
}

TEST(Scan, RowsForJ42) {
  ScanOptions opt{4, 4, 2, 2, 10};
  const auto rows = run_scan(opt);
  ASSERT_EQ(rows.size(), 9u);
  const ScanRow* r9 = find(rows, 4, 2, 9);
  ASSERT_TRUE(r9);
  EXPECT_EQ(r9->verdict, Verdict::certified);
  EXPECT_EQ(r9->p, 7);
  EXPECT_EQ(r9->m_schubert, 2);
  EXPECT_EQ(*r9->r_min, 9);
  const ScanRow* r2 = find(rows, 4, 2, 2);
  ASSERT_TRUE(r2);
  EXPECT_EQ(r2->verdict, Verdict::no_certificate);
}

TEST(Scan, KnownNonOrderableRows) {
  ScanOptions opt{4, 4, -2, -2, 6};
  const auto rows = run_scan(opt);
  ASSERT_EQ(rows.size(), 5u);
  for (const auto& row : rows) {
    EXPECT_EQ(row.verdict, Verdict::no_certificate);
    EXPECT_EQ(row.note, "known_non_orderable");
    EXPECT_FALSE(row.r_min);
  }
}

TEST(Scan, DeterministicAcrossWorkerCounts) {
  ScanOptions opt{2, 5, -4, 4, 12};
  opt.workers = 1;
  std::ostringstream one, four;
  write_scan_csv(one, run_scan(opt));
  opt.workers = 4;
  write_scan_csv(four, run_scan(opt));
  EXPECT_EQ(one.str(), four.str());
  EXPECT_EQ(one.str().substr(0, one.str().find('\n')), kScanHeader);
}

}  // namespace
}  // namespace twistcert
