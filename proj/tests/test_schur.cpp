#include <gtest/gtest.h>

#include <random>

#include <schurres/schur.hpp>

using namespace schurres;

namespace {

std::vector<Rational> random_point(std::mt19937_64& rng, int n)
{
  std::vector<Rational> v;
  for (int k = 0; k < n; ++k) {
    std::int64_t p = static_cast<std::int64_t>(rng() % 13) - 6;
    std::int64_t q = static_cast<std::int64_t>(rng() % 5) + 1;
    v.emplace_back(p, q);
  }
  return v;
}

std::vector<std::int64_t> ranks_of(const PieriExpansion& e)
{
  std::vector<std::int64_t> out;
  for (auto& [J, m] : e.terms) out.push_back(schur_rank(J, e.ambient_rank));
  return out;
}

}  // namespace

TEST(PieriWedge, Examples)
{
  auto e = pieri_wedge(Partition({0, 1, 1}), 2, 3);
  EXPECT_EQ(e.partitions(), (std::vector<Partition>{Partition({1, 1, 2}), Partition({0, 2, 2})}));
  EXPECT_EQ(e.total_rank(), 9);

  auto id = pieri_wedge(Partition({0, 1, 3}), 0, 3);
  ASSERT_EQ(id.terms.size(), 1u);
  EXPECT_EQ(id.terms[0].first, Partition({1, 3}));

  auto full = pieri_wedge(Partition({0, 1, 3}), 3, 3);
  ASSERT_EQ(full.terms.size(), 1u);
  EXPECT_EQ(full.terms[0].first.parts(), (std::vector<int>{1, 2, 4}));
}

TEST(PieriWedge, ExtraSlotOnlyWhenShort)
{
  // Two slots inside rank 3: the extra slot may receive a box.
  auto e = pieri_wedge(Partition({1, 1}), 1, 3);
  EXPECT_EQ(e.partitions(), (std::vector<Partition>{Partition({1, 1, 1}), Partition({1, 2})}));
  EXPECT_THROW(pieri_wedge(Partition({1}), 1, 3), std::invalid_argument);
  EXPECT_THROW(pieri_wedge(Partition({0, 1}), 3, 2), std::invalid_argument);
  EXPECT_THROW(pieri_wedge(Partition({0, 1}), -1, 2), std::invalid_argument);
}

TEST(PieriSym, ExampleFromRankSix)
{
  auto e = pieri_sym(Partition({0, 0, 0, 0, 1, 1}), 4, 6);
  EXPECT_EQ(e.partitions(), (std::vector<Partition>{Partition({0, 0, 0, 1, 1, 4}), Partition({0, 0, 0, 0, 1, 5})}));
  auto ranks = ranks_of(e);
  std::sort(ranks.begin(), ranks.end());
  EXPECT_EQ(ranks, (std::vector<std::int64_t>{840, 1050}));
  EXPECT_EQ(e.total_rank(), 1890);
}

TEST(PieriSym, SmallCases)
{
  auto e = pieri_sym(Partition({0, 1}), 1, 2);
  EXPECT_EQ(e.partitions(), (std::vector<Partition>{Partition({1, 1}), Partition({0, 2})}));
  EXPECT_EQ(e.total_rank(), 4);
  auto id = pieri_sym(Partition({2, 3}), 0, 4);
  ASSERT_EQ(id.terms.size(), 1u);
  EXPECT_EQ(id.terms[0].first, Partition({2, 3}));
  EXPECT_THROW(pieri_sym(Partition({1}), -1, 2), std::invalid_argument);
}

TEST(Pieri, RankConservationOnThreeByThreeBox)
{
  for (auto& I : partitions_in_box(3, 3))
    for (int r = 1; r <= 5; ++r) {
      if (I.length() > r) continue;
      const auto base = I.padded(static_cast<std::size_t>(r));
      for (int n = 0; n <= r; ++n) {
        auto w = pieri_wedge(base, n, r);
        EXPECT_EQ(w.total_rank(), schur_rank(I, r) * binomial(r, n)) << I.to_string() << " r=" << r << " n=" << n;
        auto s = pieri_sym(I, n, r);
        EXPECT_EQ(s.total_rank(), schur_rank(I, r) * binomial(r + n - 1, n)) << I.to_string();
        for (auto& [J, m] : w.terms) EXPECT_EQ(m, 1);
        for (auto& [J, m] : s.terms) EXPECT_EQ(m, 1);
      }
    }
}

TEST(Pieri, CharacterIdentityAtRationalPoints)
{
  std::mt19937_64 rng(7);
  for (auto& I : partitions_in_box(3, 3))
    for (int r = 1; r <= 4; ++r) {
      if (I.length() > r) continue;
      for (int n = 0; n <= r; ++n)
        for (int trial = 0; trial < 5; ++trial) {
          auto v = random_point(rng, r);
          Rational lhs_w = schur_eval(I, v) * elementary(v, n);
          Rational rhs_w = 0;
          for (auto& [J, m] : pieri_wedge(I.padded(static_cast<std::size_t>(r)), n, r).terms) rhs_w += schur_eval(J, v);
          EXPECT_EQ(lhs_w, rhs_w);
          Rational lhs_s = schur_eval(I, v) * complete_homogeneous(v, n)[static_cast<std::size_t>(n)];
          Rational rhs_s = 0;
          for (auto& [J, m] : pieri_sym(I, n, r).terms) rhs_s += schur_eval(J, v);
          EXPECT_EQ(lhs_s, rhs_s);
        }
    }
}

TEST(SchurEval, Examples)
{
  EXPECT_EQ(schur_eval(Partition({1, 1}), {Rational(2), Rational(3)}), Rational(6));
  EXPECT_EQ(schur_eval(Partition({0, 2}), {Rational(1), Rational(1)}), Rational(3));
  EXPECT_EQ(schur_eval(Partition({0, 0, 1, 2, 4}), std::vector<Rational>(5, Rational(1))), Rational(700));
  // Hook-content formula: 201600 / 448.
  EXPECT_EQ(schur_eval(Partition({0, 1, 1, 2, 4}), std::vector<Rational>(5, Rational(1))), Rational(450));
  EXPECT_EQ(schur_eval(Partition({1, 1, 1}), {Rational(1), Rational(1)}), Rational(0));
}

TEST(SchurEval, JacobiTrudiAgreesWithTableauSum)
{
  std::mt19937_64 rng(11);
  for (auto& P : partitions_in_box(4, 4))
    for (int r = 1; r <= 4; ++r)
      for (int trial = 0; trial < 3; ++trial) {
        auto v = random_point(rng, r);
        EXPECT_EQ(schur_eval(P, v), schur_eval_ssyt(P, v)) << P.to_string() << " r=" << r;
      }
}

TEST(GeneratorDegrees, Examples)
{
  EXPECT_EQ(schur_generator_degrees(Partition({1, 1}), {-1, -1, -1, -1, -1}), (GradedFreeModule{{-2, 10}}));
  EXPECT_EQ(schur_generator_degrees(Partition({0, 2}), {0, -1}), (GradedFreeModule{{0, 1}, {-1, 1}, {-2, 1}}));
  for (int r = 1; r <= 4; ++r)
    for (int m = 0; m <= 4; ++m)
      EXPECT_EQ(schur_generator_degrees(Partition({m}), std::vector<int>(r, 0)),
                GradedFreeModule::free(0, binomial(r + m - 1, m)));
}

TEST(GeneratorDegrees, BranchingAgreesWithTableauEnumeration)
{
  const std::vector<std::vector<int>> twist_sets{{0}, {3, -1}, {1, 1, 2}, {0, -1, 2, 5}, {-2, 0, 1, 1, 4}};
  for (auto& tw : twist_sets)
    for (auto& P : partitions_in_box(4, 4)) {
      auto fast = schur_generator_degrees(P, tw);
      EXPECT_EQ(fast, schur_generator_degrees_ssyt(P, tw)) << P.to_string();
      EXPECT_EQ(fast.rank(), schur_rank(P, static_cast<int>(tw.size())));
      if (P.length() <= static_cast<int>(tw.size()) && !P.is_zero() && fast.rank() > 0) {
        auto uniform = schur_generator_degrees(P, std::vector<int>(tw.size(), -1));
        EXPECT_EQ(uniform, GradedFreeModule::free(-P.weight(), fast.rank()));
      }
    }
}

TEST(Plethysm, ConjugateEvenReadingValidates)
{
  auto m1 = sym_wedge2_plethysm(1, 3);
  EXPECT_EQ(m1.reading, "conjugate-even");
  ASSERT_EQ(m1.partitions.size(), 1u);
  EXPECT_EQ(m1.partitions[0], Partition({1, 1}));

  auto m0 = sym_wedge2_plethysm(0, 3);
  ASSERT_EQ(m0.partitions.size(), 1u);
  EXPECT_TRUE(m0.partitions[0].is_zero());

  auto m2 = sym_wedge2_plethysm(2, 3);
  std::int64_t total = 0;
  for (auto& P : m2.partitions) total += schur_rank(P, 3);
  EXPECT_EQ(total, binomial(4, 2));
  EXPECT_EQ(m2.partitions, (std::vector<Partition>{Partition({2, 2})}));
}

TEST(Plethysm, RankValidatesAcrossSizes)
{
  for (int r = 2; r <= 6; ++r)
    for (int m = 0; m <= 4; ++m) {
      auto idx = sym_wedge2_plethysm(m, r);
      std::int64_t total = 0;
      for (auto& P : idx.partitions) total += schur_rank(P, r);
      EXPECT_EQ(total, binomial(binomial(r, 2) + m - 1, m));
      EXPECT_EQ(idx.reading, "conjugate-even") << "m=" << m << " r=" << r;
    }
  EXPECT_THROW(sym_wedge2_plethysm(1, 1), std::invalid_argument);
}
