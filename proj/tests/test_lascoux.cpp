#include <gtest/gtest.h>

#include <schurres/lascoux.hpp>

#include "tables.hpp"

using namespace schurres;

namespace {

std::vector<MorphismSpec> sweep_specs()
{
  std::vector<MorphismSpec> out;
  for (int t = 1; t <= 4; ++t)
    for (int c = 1; c <= 3; ++c) {
      out.push_back(MorphismSpec::linear(t, c));
      out.push_back(MorphismSpec::mixed(t, c));
    }
  return out;
}

}  // namespace

TEST(MorphismSpecTest, Validation)
{
  auto s = MorphismSpec::linear(3, 3);
  EXPECT_EQ(s.ell(), 5);
  EXPECT_EQ(MorphismSpec::mixed(3, 3).ell(), 7);
  MorphismSpec bad = s;
  bad.a.pop_back();
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = s;
  bad.b[0] = 1;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = s;
  bad.nvars = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Lascoux, HilbertBurch)
{
  auto L = lascoux_resolution(MorphismSpec::linear(2, 2), 2);
  EXPECT_EQ(L.modules(), tables::hilbert_burch().modules());
  EXPECT_EQ(L.minimality, Minimality::ClaimedMinimal);
}

TEST(Lascoux, GoldenTableForTwoByTwoMinors)
{
  auto L = lascoux_resolution(MorphismSpec::linear(3, 3), 2);
  EXPECT_EQ(L.modules(), tables::example_ri().modules());
  EXPECT_EQ(L.codim, 8);
  ASSERT_EQ(L.positions[1].size(), 1u);
  EXPECT_EQ(L.positions[1][0].source, "0,2");
  ASSERT_EQ(L.positions[8].size(), 1u);
  EXPECT_EQ(L.positions[8][0].source, "5,5");
  EXPECT_FALSE(L.notes.empty());
}

TEST(Lascoux, LastTermIsTheRectangleTwistedByPEll)
{
  auto L = lascoux_resolution(MorphismSpec::linear(3, 3), 2);
  EXPECT_EQ(L.module_at(8), (GradedFreeModule{{-10, 6}}));
}

TEST(Lascoux, RejectsOutOfRangeMinors)
{
  auto s = MorphismSpec::linear(3, 2);
  EXPECT_THROW(lascoux_resolution(s, 0), std::invalid_argument);
  EXPECT_THROW(lascoux_resolution(s, 4), std::invalid_argument);
  auto bad = s;
  bad.a[0] = 0;
  EXPECT_THROW(lascoux_resolution(bad, 1), std::invalid_argument);
}

TEST(Lascoux, StructuralPropertiesAcrossTheSweep)
{
  for (auto& s : sweep_specs())
    for (int i = 1; i <= s.t; ++i) {
      auto L = lascoux_resolution(s, i);
      const int len = (s.t - i + 1) * (s.t + s.c - i);
      EXPECT_EQ(L.length(), len) << s.to_string() << " i=" << i;
      EXPECT_EQ(euler_rank(L), 0);
      EXPECT_TRUE(hilbert_numerator(L).divisible_by_one_minus_t_power(len)) << s.to_string() << " i=" << i;
      EXPECT_EQ(L.positions[1].size(), 1u);
      EXPECT_EQ(L.positions.back().size(), 1u);
      EXPECT_EQ(L.rank_at(1), binomial(s.t, i) * binomial(s.t + s.c - 1, i));
    }
}

TEST(Lascoux, MaximalMinorsMatchEagonNorthcott)
{
  for (auto& s : sweep_specs())
    EXPECT_TRUE(same_betti(lascoux_resolution(s, s.t), eagon_northcott_family(s, 0))) << s.to_string();
}

TEST(EagonNorthcott, SmallTables)
{
  auto s = MorphismSpec::linear(2, 2);
  EXPECT_EQ(eagon_northcott_family(s, 0).modules(), tables::hilbert_burch().modules());
  EXPECT_EQ(eagon_northcott_family(s, 1).modules(),
            (std::vector<GradedFreeModule>{{{0, 2}}, {{-1, 3}}, {{-3, 1}}}));
  EXPECT_EQ(eagon_northcott_family(s, 2).modules(),
            (std::vector<GradedFreeModule>{{{0, 3}}, {{-1, 6}}, {{-2, 3}}}));
}

TEST(EagonNorthcott, DualStrandIsFlagged)
{
  auto d = eagon_northcott_family(MorphismSpec::linear(2, 2), -1);
  ASSERT_FALSE(d.notes.empty());
  EXPECT_NE(d.notes[0].find("convention-extended"), std::string::npos);
  EXPECT_EQ(d.length(), 2);
  EXPECT_EQ(euler_rank(d), 0);
}

TEST(EagonNorthcott, RangeAndShape)
{
  auto s = MorphismSpec::linear(3, 3);
  EXPECT_THROW(eagon_northcott_family(s, -2), std::invalid_argument);
  EXPECT_THROW(eagon_northcott_family(s, 4), std::invalid_argument);
  for (auto& sp : sweep_specs())
    for (int i = -1; i <= sp.c; ++i) {
      auto d = eagon_northcott_family(sp, i);
      EXPECT_EQ(d.length(), sp.c) << sp.to_string() << " i=" << i;
      EXPECT_EQ(euler_rank(d), 0);
      EXPECT_TRUE(hilbert_numerator(d).divisible_by_one_minus_t_power(sp.c));
    }
}

TEST(SchurPower, GoldenTable)
{
  auto s = MorphismSpec::linear(3, 3);
  auto S = schur_power_resolution(s, 2);
  EXPECT_EQ(S.modules(), tables::example_s2_wedge2().modules());
  EXPECT_TRUE(same_betti(S, complex_dual_twist(lascoux_resolution(s, 2), -10)));
  EXPECT_NE(S.resolved_name.find("Σ^(2^2)M"), std::string::npos);
}

TEST(SchurPower, CanonicalModuleIsATwistOfTheSchurPower)
{
  auto s = MorphismSpec::linear(3, 3);
  EXPECT_EQ(complex_dual_twist(lascoux_resolution(s, 2), -11).modules(), tables::example_canonical().modules());
  EXPECT_EQ(complex_twist(schur_power_resolution(s, 2), -1).modules(), tables::example_canonical().modules());
}

TEST(SchurPower, CodimTwoCases)
{
  auto s = MorphismSpec::linear(2, 2);
  auto S1 = schur_power_resolution(s, 1);
  EXPECT_EQ(S1.modules(), (std::vector<GradedFreeModule>{{{0, 2}}, {{-1, 3}}, {{-3, 1}}}));
  EXPECT_NE(S1.resolved_name.find("∧^1M"), std::string::npos);
  for (auto& sp : sweep_specs()) {
    if (sp.c != 2) continue;
    EXPECT_TRUE(same_betti(schur_power_resolution(sp, 1), eagon_northcott_family(sp, 1))) << sp.to_string();
  }
}

TEST(SchurPower, StartsWithSigmaJOfFDual)
{
  for (auto& sp : sweep_specs())
    for (int p = 1; p <= sp.t; ++p) {
      auto S = schur_power_resolution(sp, p);
      EXPECT_EQ(S.module_at(0), schur_generator_degrees(Partition::rectangle(p, sp.c - 1), sp.f_dual_twists()))
          << sp.to_string() << " p=" << p;
      if (sp.c == 2) EXPECT_EQ(S.module_at(0), exterior_power(sp.f_dual_twists(), p));
    }
}

TEST(SchurPower, RejectsOutOfRangePowers)
{
  auto s = MorphismSpec::linear(3, 3);
  EXPECT_THROW(schur_power_resolution(s, 0), std::invalid_argument);
  EXPECT_THROW(schur_power_resolution(s, 4), std::invalid_argument);
}
