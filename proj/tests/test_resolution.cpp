#include "multibraid/classifier.hpp"
#include "multibraid/obstruction.hpp"
#include "multibraid/resolution.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace multibraid;
using testsupport::mult;

namespace
{
std::vector<int> sorted(std::vector<int> v)
{
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> repeat(std::initializer_list<std::pair<int, int>> runs)
{
  std::vector<int> out;
  for (const auto& [degree, count] : runs)
    out.insert(out.end(), static_cast<std::size_t>(count), degree);
  return out;
}

Multiplicity from_vertex_weights(std::array<int, 4> n)
{
  Multiplicity m;
  for (int e = 0; e < 6; ++e)
  {
    const auto [i, j] = kEdges[static_cast<std::size_t>(e)];
    m[e] = n[static_cast<std::size_t>(i)] + n[static_cast<std::size_t>(j)];
  }
  return m;
}

// HF(S/J, d) from the table by alternating sums, evaluated with the
// brute-force ideal dimension as the reference.
bool euler_matches_brute_force(const Multiplicity& m, const BettiTable& t, int dmax)
{
  const auto gens = testsupport::a3_generators(m);
  for (int d = 0; d <= dmax; ++d)
  {
    std::int64_t chi = binom2(d + 2);
    for (int g : t.step0)
      chi -= binom2(d - g + 2);
    for (int g : t.step1)
      chi += binom2(d - g + 2);
    for (int g : t.step2)
      chi -= binom2(d - g + 2);
    const auto expected = binom2(d + 2) - static_cast<std::int64_t>(testsupport::brute_hf_ideal(gens, d));
    if (chi != expected)
      return false;
  }
  return true;
}
} // namespace

TEST(BettiTable, ConstantTwo)
{
  const auto t = betti_table_free(mult({2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(sorted(t.step0), repeat({{2, 6}}));
  EXPECT_EQ(sorted(t.step1), repeat({{3, 8}}));
  EXPECT_EQ(sorted(t.step2), repeat({{4, 3}}));
  EXPECT_EQ(to_text(t), "0: S(-2)^6\n1: S(-3)^8\n2: S(-4)^3\n");
}

TEST(BettiTable, ConstantThree)
{
  const auto t = betti_table_free(mult({3, 3, 3, 3, 3, 3}));
  EXPECT_EQ(sorted(t.step0), repeat({{3, 6}}));
  EXPECT_EQ(sorted(t.step1), repeat({{4, 4}, {5, 4}}));
  EXPECT_EQ(sorted(t.step2), (std::vector<int>{5, 6, 7}));
  EXPECT_EQ(to_text(t), "0: S(-3)^6\n1: S(-4)^4 + S(-5)^4\n2: S(-5) + S(-6) + S(-7)\n");
}

TEST(BettiTable, VertexWeightsMatchConstantTwo)
{
  EXPECT_EQ(sorted(betti_table_free(from_vertex_weights({1, 1, 1, 1})).step2),
            sorted(betti_table_free(mult({2, 2, 2, 2, 2, 2})).step2));
  EXPECT_EQ(sorted(betti_table_free(from_vertex_weights({1, 1, 1, 1})).step1),
            sorted(betti_table_free(mult({2, 2, 2, 2, 2, 2})).step1));
}

TEST(BettiTable, ExplicitWitness)
{
  const auto m = mult({2, 2, 2, 2, 2, 2});
  const AnnWitness good{{1, {0, 0, 0, 0}, {}}, {0, 1, 2, 3}};
  EXPECT_EQ(sorted(betti_table_free(m, good).step2), repeat({{4, 3}}));
  const AnnWitness wrong_m{{0, {1, 1, 1, 0}, {}}, {0, 1, 2, 3}};
  EXPECT_THROW(betti_table_free(m, wrong_m), ResolutionUnavailable);
}

TEST(BettiTable, RankAndDegreeIdentities)
{
  for (const auto& m : testsupport::all_multiplicities(1, 4))
  {
    const auto free = ann_free(m);
    if (!free || !twelve_inequalities(m))
      continue;
    const auto t = betti_table_free(m);
    ASSERT_EQ(1 - static_cast<int>(t.step0.size()) + static_cast<int>(t.step1.size()) -
                  static_cast<int>(t.step2.size()),
              0);
    // The top degrees are the three nonzero exponents.
    const int top = std::accumulate(t.step2.begin(), t.step2.end(), 0);
    ASSERT_EQ(top, std::accumulate(free->exponents.begin(), free->exponents.end(), 0))
        << m.to_string();
    ASSERT_EQ(top, m.total()) << m.to_string();
  }
}

TEST(EulerCheck, Examples)
{
  const auto two = mult({2, 2, 2, 2, 2, 2});
  EXPECT_TRUE(euler_hf_check(two, betti_table_free(two), 8).ok);
  const auto three = mult({3, 3, 3, 3, 3, 3});
  EXPECT_TRUE(euler_hf_check(three, betti_table_free(three), 10).ok);

  auto bad = betti_table_free(two);
  bad.step1[0] += 1;
  const auto r = euler_hf_check(two, bad, 8);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.first_failure, 3);
}

TEST(EulerCheck, AgreesWithBruteForceOnSmallTables)
{
  for (const auto& m : {mult({2, 2, 2, 2, 2, 2}), mult({3, 3, 3, 3, 3, 3}), mult({1, 1, 1, 1, 1, 1}),
                        mult({2, 2, 3, 3, 2, 3})})
  {
    const auto t = betti_table_free(m);
    EXPECT_TRUE(euler_matches_brute_force(m, t, 2 * m.max() + 3)) << m.to_string();
  }
}

TEST(EulerCheck, PassesForEveryAnnFreeMultiplicityWithoutRedundantPower)
{
  for (const auto& m : testsupport::all_multiplicities(1, 4))
  {
    if (!ann_free(m))
      continue;
    if (twelve_inequalities(m))
    {
      ASSERT_TRUE(euler_hf_check(m, betti_table_free(m), 2 * m.max() + 4).ok) << m.to_string();
      continue;
    }
    try
    {
      betti_table_free(m);
      FAIL() << m.to_string();
    }
    catch (const ResolutionUnavailable& e)
    {
      ASSERT_EQ(e.reason(), ResolutionUnavailable::Reason::RedundantPower);
    }
  }
}

TEST(EulerCheck, RedundantPowerShiftsTopDegrees)
{
  // Star of vertex 0 signed -, n = (0,2,2,2): free, exponents (0,5,5,5),
  // but the triangles 0jk each carry a redundant fourth power.
  const auto m = mult({1, 1, 1, 4, 4, 4});
  const auto free = ann_free(m);
  ASSERT_TRUE(free);
  BettiTable t;
  t.step0.assign(m.m.begin(), m.m.end());
  for (const auto& tri : kTriangles)
  {
    const auto e = triangle_edges(tri);
    const auto s = local_syzygy_structure(m.at(e[0]), m.at(e[1]), m.at(e[2]));
    t.step1.insert(t.step1.end(), s.gen_degrees.begin(), s.gen_degrees.end());
  }
  t.step2 = {5, 5, 5};
  EXPECT_FALSE(euler_matches_brute_force(m, t, 12));
  t.step2 = {3, 6, 6};
  EXPECT_TRUE(euler_matches_brute_force(m, t, 12));
  EXPECT_TRUE(euler_hf_check(m, t, 16).ok);
}

TEST(MinimalityProbe, Examples)
{
  const auto two = mult({2, 2, 2, 2, 2, 2});
  EXPECT_TRUE(minimality_probe(two, betti_table_free(two)));
  // Any five of the six linear forms span all linear forms.
  const auto ones = mult({1, 1, 1, 1, 1, 1});
  EXPECT_FALSE(minimality_probe(ones, betti_table_free(ones)));
  EXPECT_THROW(minimality_probe(two, betti_table_free(ones)), std::invalid_argument);
}

TEST(ResolutionUnavailable, Reasons)
{
  try
  {
    betti_table_free(mult({3, 2, 3, 3, 2, 3}));
    FAIL();
  }
  catch (const ResolutionUnavailable& e)
  {
    EXPECT_EQ(e.reason(), ResolutionUnavailable::Reason::NotFree);
    EXPECT_STREQ(e.what(), "not free");
  }
  // Free through vertex 0 only: no ANN structure is free.
  const auto m = mult({1, 1, 1, 1, 1, 4});
  ASSERT_TRUE(free_vertex(m));
  ASSERT_FALSE(ann_free(m));
  try
  {
    betti_table_free(m);
    FAIL();
  }
  catch (const ResolutionUnavailable& e)
  {
    EXPECT_EQ(e.reason(), ResolutionUnavailable::Reason::FreeVertexOnly);
  }
}
