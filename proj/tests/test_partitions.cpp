#include <gtest/gtest.h>

#include <schurres/partition.hpp>
#include <schurres/schur.hpp>

using namespace schurres;

namespace {

/// Every partition with at most `rows` parts, each at most `cols`, in `rows` slots.
std::vector<Partition> box(int rows, int cols)
{
  auto out = partitions_in_box(rows, cols);
  return out;
}

}  // namespace

TEST(Partition, RejectsDecreasingAndNegativeParts)
{
  EXPECT_THROW(Partition({2, 1}), std::invalid_argument);
  EXPECT_THROW(Partition({-1, 2}), std::invalid_argument);
  EXPECT_EQ(Partition::parse("2,2,3,5,8").weight(), 20);
  EXPECT_EQ(Partition::parse("").slots(), 0u);
  EXPECT_THROW(Partition::parse("1,,2"), std::invalid_argument);
}

TEST(Partition, LeadingZerosAreInert)
{
  EXPECT_EQ(Partition({0, 0, 1, 2}), Partition({1, 2}));
  EXPECT_EQ(Partition({0, 1, 2}).padded(5).parts(), (std::vector<int>{0, 0, 0, 1, 2}));
  EXPECT_EQ(Partition({0, 1, 2}).padded(2).parts(), (std::vector<int>{1, 2}));
  EXPECT_THROW(Partition({1, 1, 2}).padded(2), std::invalid_argument);
}

TEST(Conjugate, TextbookExamples)
{
  EXPECT_EQ(conjugate(Partition({2, 2, 3, 5, 8})).parts(), (std::vector<int>{1, 1, 1, 2, 2, 3, 5, 5}));
  EXPECT_EQ(conjugate(Partition({1, 2, 4})).parts(), (std::vector<int>{1, 1, 2, 3}));
  EXPECT_TRUE(conjugate(Partition()).is_zero());
}

TEST(Conjugate, IsAnInvolutionOnSixBySixBox)
{
  for (auto& P : box(6, 6)) EXPECT_EQ(conjugate(conjugate(P)), P) << P.to_string();
}

TEST(Durfee, Examples)
{
  EXPECT_EQ(durfee(Partition({2, 2, 3, 5, 8})), 3);
  EXPECT_EQ(durfee(Partition({7})), 1);
  EXPECT_EQ(durfee(Partition::rectangle(4, 4)), 4);
  EXPECT_EQ(durfee(Partition()), 0);
}

TEST(Durfee, InvariantUnderConjugation)
{
  for (auto& P : box(6, 6)) EXPECT_EQ(durfee(P), durfee(conjugate(P))) << P.to_string();
}

TEST(Contains, RightAlignedComparison)
{
  EXPECT_TRUE(contains(Partition({3, 4}), Partition({4, 4})));
  EXPECT_FALSE(contains(Partition({4, 4}), Partition({3, 4})));
  EXPECT_TRUE(contains(Partition(), Partition({5})));
  EXPECT_TRUE(contains(Partition({2}), Partition({1, 3})));
  EXPECT_FALSE(contains(Partition({1, 1, 1}), Partition({5, 5})));
}

TEST(Surgery, RectangleCase)
{
  auto r = lascoux_surgery(Partition({4, 4}), 2, 3, 2);
  ASSERT_TRUE(r.derived);
  EXPECT_EQ(r.derived->parts(), (std::vector<int>{2, 3, 3}));
  EXPECT_EQ(r.durfee, 2);
  EXPECT_EQ(r.shift, 2);
  EXPECT_EQ(r.homdeg, -6);
}

TEST(Surgery, NearRectangleCase)
{
  auto r = lascoux_surgery(Partition({3, 4}), 2, 3, 2);
  ASSERT_TRUE(r.derived);
  EXPECT_EQ(r.derived->parts(), (std::vector<int>{2, 2, 3}));
  EXPECT_EQ(r.homdeg, -5);
}

TEST(Surgery, GuardFailureGivesAbsent)
{
  EXPECT_FALSE(lascoux_surgery(Partition({1, 1}), 2, 3, 2).derived);
  EXPECT_FALSE(lascoux_surgery(Partition({0, 0}), 2, 3, 2).derived);
}

TEST(Surgery, RejectsBadInput)
{
  EXPECT_THROW(lascoux_surgery(Partition({4, 5}), 2, 3, 2), std::invalid_argument);  // part > t+c-1
  EXPECT_THROW(lascoux_surgery(Partition({1, 1, 1}), 2, 3, 2), std::invalid_argument);  // wrong slot count
  EXPECT_THROW(lascoux_surgery(Partition({1}), 0, 3, 2), std::invalid_argument);
  EXPECT_THROW(lascoux_surgery(Partition({1}), 4, 3, 2), std::invalid_argument);
}

TEST(Surgery, DerivedPartitionsAreWellFormedEverywhere)
{
  for (int t = 1; t <= 4; ++t)
    for (int c = 1; c <= 4; ++c)
      for (int i = 1; i <= t; ++i) {
        const int q = t - i + 1;
        for (auto& I : partitions_in_box(q, t + c - 1)) {
          SurgeryResult r;
          ASSERT_NO_THROW(r = lascoux_surgery(I, i, t, c)) << I.to_string();
          if (!r.derived || I.is_zero()) continue;
          EXPECT_EQ(static_cast<int>(r.derived->slots()), t);
          EXPECT_GE(r.homdeg, -q * (t + c - i));
          EXPECT_LE(r.homdeg, -1);
          // Splicing in i-1 copies of p and lowering the top p parts by i-1 keeps the weight.
          EXPECT_EQ(r.derived->weight(), I.weight()) << I.to_string();
        }
      }
}

TEST(Adjacency, OneSpotDifference)
{
  EXPECT_EQ(adjacency(Partition({4, 4}), Partition({3, 4}), 2, 3, 2), 1);
}

TEST(Adjacency, NotContainedIsZeroBlock)
{
  auto sI = lascoux_surgery(Partition({0, 5}), 2, 3, 3);
  auto sH = lascoux_surgery(Partition({1, 3}), 2, 3, 3);
  ASSERT_TRUE(sI.derived);
  ASSERT_TRUE(sH.derived);
  ASSERT_EQ(sI.homdeg, sH.homdeg - 1);
  EXPECT_FALSE(adjacency(Partition({0, 5}), Partition({1, 3}), 2, 3, 3));
}

TEST(Adjacency, RejectsPairsOutsideThePrecondition)
{
  // H = (2,4) has no derived partition, and the degrees are two apart.
  EXPECT_THROW(adjacency(Partition({4, 4}), Partition({2, 4}), 2, 3, 2), std::invalid_argument);
  EXPECT_THROW(adjacency(Partition({4, 4}), Partition({4, 4}), 2, 3, 2), std::invalid_argument);
}

TEST(Adjacency, AnomalyScanRunsOnSmallBoxes)
{
  for (int t = 1; t <= 4; ++t)
    for (int c = 1; c <= 3; ++c)
      for (int i = 1; i <= t; ++i)
        for (auto& [I, H] : adjacency_anomalies(i, t, c)) {
          // Any reported pair must really differ in two or more slots.
          EXPECT_GE(detail::differing_slots(I, H).size(), 2u);
        }
}

TEST(SchurRank, Examples)
{
  EXPECT_EQ(schur_rank(Partition({0, 0, 1, 2, 4}), 5), 700);
  for (int r = 1; r <= 6; ++r)
    for (int m = 0; m <= r; ++m) EXPECT_EQ(schur_rank(Partition(std::vector<int>(m, 1)), r), binomial(r, m));
  EXPECT_EQ(schur_rank(Partition({5}), 3), binomial(7, 5));
  EXPECT_EQ(schur_rank(Partition({1, 1, 1}), 2), 0);
}

TEST(SchurRank, AgreesWithTableauCount)
{
  for (auto& P : box(4, 4))
    for (int r = 1; r <= 5; ++r) {
      std::int64_t count = 0;
      for_each_ssyt(P, r, [&](const auto&) { ++count; });
      EXPECT_EQ(schur_rank(P, r), count) << P.to_string() << " r=" << r;
    }
}

TEST(LpqRank, Examples)
{
  EXPECT_EQ(lpq_rank(2, 1, 5), 15);
  EXPECT_EQ(lpq_rank(1, 3, 5), 10);
  EXPECT_EQ(lpq_rank(3, 2, 4), 45);
}

TEST(LpqRank, PropertiesAtRankLevel)
{
  for (int n = 0; n <= 6; ++n)
    for (int p = 0; p <= 6; ++p)
      for (int q = 0; q <= 6; ++q) {
        const auto r = lpq_rank(p, q, n);
        if (q == 1) EXPECT_EQ(r, binomial(n + p - 1, p));                  // L_p^1 = S_p
        if (p == 1 && q >= 1) EXPECT_EQ(r, binomial(n, q));                // L_1^q = wedge^q
        if (q == 0 || q > n) EXPECT_EQ(r, 0);                              // vanishing
        if (p == 0 && q != 1) EXPECT_EQ(r, 0);
        if (q == n && p >= 1) EXPECT_EQ(r, binomial(n + p - 2, p - 1));    // L_p^n = S_{p-1} (x) wedge^n
        if (q >= 2 && q <= n)
          EXPECT_EQ(r + lpq_rank(p + 1, q - 1, n), binomial(n + p - 1, p) * binomial(n, q - 1))
              << "p=" << p << " q=" << q << " n=" << n;
        if (p >= 1 && q >= 1 && q <= n) {
          std::vector<int> hook(static_cast<std::size_t>(q), 1);
          hook.back() = p;
          EXPECT_EQ(r, schur_rank(Partition(hook), n)) << "hook oracle p=" << p << " q=" << q << " n=" << n;
        }
      }
}
