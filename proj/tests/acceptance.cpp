// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "multibraid/classifier.hpp"
#include "multibraid/obstruction.hpp"
#include "multibraid/oracle.hpp"
#include "multibraid/resolution.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace multibraid;

namespace
{

std::vector<Multiplicity> cube(int hi)
{
  std::vector<Multiplicity> out;
  Multiplicity m;
  m.m.fill(1);
  while (true)
  {
    out.push_back(m);
    int e = 5;
    while (e >= 0 && m[e] == hi)
      m[e--] = 1;
    if (e < 0)
      break;
    ++m[e];
  }
  return out;
}

template <class T>
std::vector<T> sorted(std::vector<T> v)
{
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> repeat(int degree, int count) { return std::vector<int>(static_cast<std::size_t>(count), degree); }

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b)
{
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct Outcome
{
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& what)
  {
    pass = false;
    if (failures.size() < 5)
      failures.push_back(what);
  }
};

// 1. Closed form and oracle agree on every m in {1..4}^6.
Outcome classifier_matches_oracle()
{
  Outcome o;
  int free = 0, checked = 0;
  for (const auto& m : cube(4))
  {
    const auto a = classify(m).verdict;
    const auto b = oracle_classify(m).verdict;
    ++checked;
    free += a == Verdict::Free;
    if (a != b)
      o.fail(m.to_string() + " closed form " + std::string(to_string(a)) + ", oracle " + std::string(to_string(b)));
  }
  o.detail = std::to_string(checked) + " multiplicities, " + std::to_string(free) + " free";
  return o;
}

// 2. Oracle-computed triangle syzygy generators follow the closed-form degree
//    profile, and their spans have the predicted graded dimensions.
Outcome triangle_profiles()
{
  Outcome o;
  int non_minimal = 0, boundary = 0;
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b)
      for (int c = 1; c <= 8; ++c)
      {
        const auto s = local_syzygy_structure(a, b, c);
        non_minimal += !s.omega_branch;
        boundary += s.omega_branch && !s.minimal;
        const auto& syz = triangle_syzygies({0, 1, 2}, a, b, c);
        std::vector<int> got;
        for (const auto& g : syz.generators)
          got.push_back(g.degree);
        const std::string tag = std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
        if (got != std::vector<int>(s.gen_degrees.begin(), s.gen_degrees.end()))
        {
          o.fail(tag + " generator degrees differ");
          continue;
        }
        const auto dims = two_variable_kernel_dims(a, b, c, a + b + c);
        for (int d = 0; d <= a + b + c; ++d)
        {
          std::int64_t expected = 0;
          for (int g : s.gen_degrees)
            expected += std::max(0, d - g + 1);
          if (dims[static_cast<std::size_t>(d)] != expected)
            o.fail(tag + " kernel dimension at degree " + std::to_string(d));
          if (hf_triangle_span(syz, d) != hf_local_syz(a, b, c, d))
            o.fail(tag + " span dimension at degree " + std::to_string(d));
        }
      }
  o.detail = "512 triples, " + std::to_string(non_minimal) + " with a redundant power, " +
             std::to_string(boundary) + " on the boundary";
  return o;
}

// 3. LB(m, d) never exceeds the exact global-minus-local gap.
Outcome lb_below_gap()
{
  Outcome o;
  long pairs = 0, positive = 0;
  for (const auto& m : cube(4))
    for (int d = 0; d <= m.total(); ++d)
    {
      const auto bound = lb(m, d);
      const auto c = compare_degree(m, d);
      ++pairs;
      positive += bound > 0;
      if (bound > c.gap())
        o.fail(m.to_string() + " d=" + std::to_string(d) + ": LB " + std::to_string(bound) +
               " > gap " + std::to_string(c.gap()));
    }
  o.detail = std::to_string(pairs) + " (m, d) pairs, " + std::to_string(positive) + " with LB > 0";
  return o;
}

// 4. 2(D^2 - 9/4) = P - 3q on {1..6}^6 under the twelve inequalities.
Outcome discriminant_identity()
{
  Outcome o;
  int checked = 0;
  for (const auto& m : cube(6))
  {
    if (!twelve_inequalities(m))
      continue;
    ++checked;
    if (2 * (discriminant_sq(m) - Rational(9, 4)) != Rational(p_stat(m) - 3 * odd_triangle_count(m)))
      o.fail(m.to_string());
  }
  o.detail = std::to_string(checked) + " multiplicities";
  return o;
}

// 5. The twelve graphs with no signed-elimination ordering: (q, P) of the
//    ANN multiplicity 2 + m_G, and rejection under every ordering.
Outcome non_eliminable_table()
{
  struct Row
  {
    SignedGraph4 g;
    int q, p;
  };
  const std::vector<Row> rows{
      {SignedGraph4::from_edges({"03", "12"}, {"23"}), 2, 14},
      {SignedGraph4::from_edges({"01", "02"}, {"03"}), 0, 8},
      {SignedGraph4::from_edges({"01", "03", "12", "23"}, {}), 0, 8},
      {SignedGraph4::from_edges({"01", "03", "12"}, {"23"}), 0, 8},
      {SignedGraph4::from_edges({"03", "12", "13"}, {"23"}), 2, 14},
      {SignedGraph4::from_edges({"13", "23"}, {"03", "12"}), 2, 18},
      {SignedGraph4::from_edges({"03", "12"}, {"01", "23"}), 0, 24},
      {SignedGraph4::from_edges({"01", "03", "12", "23"}, {"02"}), 2, 18},
      {SignedGraph4::from_edges({"01", "12", "23"}, {"02", "03"}), 2, 14},
      {SignedGraph4::from_edges({"02", "03", "12"}, {"01", "23"}), 2, 26},
      {SignedGraph4::from_edges({"03", "12", "13"}, {"01", "02", "23"}), 4, 24},
      {SignedGraph4::from_edges({"01", "02", "13", "23"}, {"03", "12"}), 4, 32},
  };
  Outcome o;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& g : {rows[i].g, rows[i].g.swapped()})
    {
      const auto m = AnnDecomposition{1, {0, 0, 0, 0}, g}.reconstruct();
      const std::string tag = "pattern " + std::to_string(i + 1) + " m=" + m.to_string();
      if (odd_triangle_count(m) != rows[i].q || p_stat(m) != rows[i].p)
        o.fail(tag + ": (q, P) = (" + std::to_string(odd_triangle_count(m)) + ", " +
               std::to_string(p_stat(m)) + ")");
      std::array<int, 4> nu{0, 1, 2, 3};
      do
        if (is_elimination_ordering(g, nu))
          o.fail(tag + " accepted by an ordering");
      while (std::next_permutation(nu.begin(), nu.end()));
      if (is_signed_eliminable(g))
        o.fail(tag + " reported eliminable");
    }
  o.detail = "12 patterns and their sign swaps, 24 orderings each";
  return o;
}

// 6. Betti tables for the constant and vertex-weight families.
Outcome resolution_displays()
{
  struct Case
  {
    Multiplicity m;
    BettiTable expected;
  };
  std::vector<Case> cases;
  for (int k : {1, 2})
  {
    Multiplicity even, odd;
    even.m.fill(2 * k);
    odd.m.fill(2 * k + 1);
    cases.push_back({even, {repeat(2 * k, 6), repeat(3 * k, 8), repeat(4 * k, 3)}});
    cases.push_back({odd,
                     {repeat(2 * k + 1, 6), concat(repeat(3 * k + 1, 4), repeat(3 * k + 2, 4)),
                      {4 * k + 1, 4 * k + 2, 4 * k + 3}}});
  }
  for (const std::array<int, 4> n : {std::array<int, 4>{1, 1, 1, 1}, std::array<int, 4>{1, 2, 3, 4}})
  {
    Multiplicity m;
    BettiTable t;
    for (int e = 0; e < 6; ++e)
    {
      const auto [i, j] = kEdges[static_cast<std::size_t>(e)];
      m[e] = n[static_cast<std::size_t>(i)] + n[static_cast<std::size_t>(j)];
      t.step0.push_back(m[e]);
    }
    for (const auto& tri : kTriangles)
    {
      const int s = n[static_cast<std::size_t>(tri.i)] + n[static_cast<std::size_t>(tri.j)] +
                    n[static_cast<std::size_t>(tri.k)];
      t.step1.push_back(s);
      t.step1.push_back(s);
    }
    t.step2 = repeat(n[0] + n[1] + n[2] + n[3], 3);
    cases.push_back({m, t});
  }
  Outcome o;
  for (const auto& c : cases)
  {
    const auto t = betti_table_free(c.m);
    if (sorted(t.step0) != sorted(c.expected.step0) || sorted(t.step1) != sorted(c.expected.step1) ||
        sorted(t.step2) != sorted(c.expected.step2))
      o.fail(c.m.to_string() + " table differs");
    const int dmax = 2 * c.m.max() + 4;
    const auto check = euler_hf_check(c.m, t, dmax);
    if (!check.ok)
      o.fail(c.m.to_string() + " Euler check fails at degree " + std::to_string(*check.first_failure));
  }
  o.detail = std::to_string(cases.size()) + " tables, Euler check through 2 max(m) + 4";
  return o;
}

// 7. Two-valued families.
Outcome two_valued_grids()
{
  Outcome o;
  for (int r = 1; r <= 12; ++r)
    for (int s = 1; s <= 12; ++s)
    {
      Multiplicity m;
      m.m = {s, s, s, r, r, r};
      if (classify(m).verdict != Verdict::Free)
        o.fail("star-triangle r=" + std::to_string(r) + " s=" + std::to_string(s) + " not free");
    }
  Multiplicity ones;
  ones.m.fill(1);
  const auto r = classify(ones);
  auto ex = r.exponents.value_or(std::array<int, 4>{-1, -1, -1, -1});
  std::sort(ex.begin(), ex.end());
  if (r.verdict != Verdict::Free || ex != std::array<int, 4>{0, 1, 2, 3})
    o.fail("simple arrangement: exponents not (0,1,2,3)");

  const std::vector<std::pair<std::string, std::string>> patterns{
      {"star0", "srrrrr"}, {"adjacent-pair", "ssrrrr"}, {"star-triangle", "sssrrr"},
      {"path", "rrsssr"},  {"matching", "rrssrr"}};
  int cells = 0;
  for (const auto& [name, word] : patterns)
    for (int rr = 1; rr <= 6; ++rr)
      for (int ss = 1; ss <= 6; ++ss)
      {
        Multiplicity m;
        for (std::size_t e = 0; e < 6; ++e)
          m.m[e] = word[e] == 'r' ? rr : ss;
        ++cells;
        if (classify(m).verdict != oracle_classify(m).verdict)
          o.fail(name + " r=" + std::to_string(rr) + " s=" + std::to_string(ss) + " disagrees");
      }
  o.detail = "144 star-triangle cells free, " + std::to_string(cells) + " grid cells match the oracle";
  return o;
}

// 8. Three extra degrees past the default bound reveal nothing new.
Outcome degree_bound_overscan()
{
  Outcome o;
  int extended = 0;
  for (const auto& m : cube(4))
  {
    const int b = default_degree_bound(m);
    const auto base = is_locally_generated(m, b);
    const auto wide = is_locally_generated(m, b + 3);
    if (base.locally_generated)
      ++extended;
    if (base.locally_generated != wide.locally_generated)
      o.fail(m.to_string() + " new gap at degree " + std::to_string(wide.first_gap->degree));
  }
  o.detail = std::to_string(extended) + " locally generated cases rescanned to B + 3";
  return o;
}

} // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"classifier and oracle agree on {1..4}^6", classifier_matches_oracle},
      {"triangle syzygy degrees on {1..8}^3", triangle_profiles},
      {"LB(m,d) <= exact gap on {1..4}^6, d <= |m|", lb_below_gap},
      {"2(D^2 - 9/4) = P - 3q on {1..6}^6", discriminant_identity},
      {"(q, P) and rejection for the non-eliminable graphs", non_eliminable_table},
      {"Betti tables and Euler check", resolution_displays},
      {"two-valued families", two_valued_grids},
      {"no new gap within B + 3 on {1..4}^6", degree_bound_overscan},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i)
  {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try
    {
      o = criteria[i].second();
    }
    catch (const std::exception& e)
    {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::printf("%s criterion %zu: %s (%s; %.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    for (const auto& f : o.failures)
      std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
