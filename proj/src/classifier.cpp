#include "multibraid/classifier.hpp"

#include "multibraid/obstruction.hpp"

#include <algorithm>

namespace multibraid
{

std::optional<int> free_vertex(const Multiplicity& m)
{
  for (int i = 0; i < 4; ++i)
  {
    bool ok = true;
    for (int j = 0; j < 4 && ok; ++j)
      for (int k = j + 1; k < 4 && ok; ++k)
        if (j != i && k != i)
          ok = m.at(j, k) >= m.at(i, j) + m.at(i, k) - 1;
    if (ok)
      return i;
  }
  return std::nullopt;
}

std::vector<AnnDecomposition> ann_decompositions(const Multiplicity& m)
{
  static constexpr Sign digit[3] = {Sign::Absent, Sign::Plus, Sign::Minus};
  std::vector<AnnDecomposition> out;
  const int kmax = (m.min() + 1) / 2;
  for (int k = 0; k <= kmax; ++k)
  {
    for (int code = 0; code < 729; ++code)
    {
      SignedGraph4 g;
      int c = code;
      for (int e = 5; e >= 0; --e)
      {
        g.sign[static_cast<std::size_t>(e)] = digit[c % 3];
        c /= 3;
      }
      std::array<int, 6> r{};
      for (int e = 0; e < 6; ++e)
        r[static_cast<std::size_t>(e)] = m[e] - 2 * k - g.value(e);

      // n0 from triangle 012, then each n_i from its edge to 0.
      const int twice_n0 = r[0] + r[1] - r[3];
      if (twice_n0 < 0 || twice_n0 % 2 != 0)
        continue;
      AnnDecomposition dec{k, {twice_n0 / 2, 0, 0, 0}, g};
      dec.n[1] = r[0] - dec.n[0];
      dec.n[2] = r[1] - dec.n[0];
      dec.n[3] = r[2] - dec.n[0];
      if (std::any_of(dec.n.begin(), dec.n.end(), [](int v) { return v < 0; }))
        continue;
      if (dec.reconstruct() != m)
        continue;
      out.push_back(dec);
    }
  }
  return out;
}

bool is_elimination_ordering(const SignedGraph4& g, const EliminationOrdering& nu)
{
  for (int vk = 0; vk < 4; ++vk)
    for (int vi = 0; vi < 4; ++vi)
      for (int vj = 0; vj < 4; ++vj)
      {
        if (vi == vj || vi == vk || vj == vk)
          continue;
        const auto ui = static_cast<std::size_t>(vi), uj = static_cast<std::size_t>(vj),
                   uk = static_cast<std::size_t>(vk);
        if (nu[ui] >= nu[uk] || nu[uj] >= nu[uk])
          continue;
        for (Sign s : {Sign::Plus, Sign::Minus})
        {
          const Sign opp = s == Sign::Plus ? Sign::Minus : Sign::Plus;
          if (g.at(vi, vk) == s && g.at(vj, vk) == s && g.at(vi, vj) != s)
            return false;
          if (g.at(vk, vi) == s && g.at(vi, vj) == opp && !g.has_edge(vk, vj))
            return false;
        }
      }
  return true;
}

std::optional<EliminationOrdering> is_signed_eliminable(const SignedGraph4& g)
{
  EliminationOrdering nu{0, 1, 2, 3};
  do
  {
    if (is_elimination_ordering(g, nu))
      return nu;
  } while (std::next_permutation(nu.begin(), nu.end()));
  return std::nullopt;
}

std::array<int, 3> tilde_degrees(const SignedGraph4& g, const EliminationOrdering& nu)
{
  std::array<int, 4> vertex_at{};
  for (int v = 0; v < 4; ++v)
    vertex_at[static_cast<std::size_t>(nu[static_cast<std::size_t>(v)])] = v;
  std::array<int, 3> out{};
  for (int i = 1; i <= 3; ++i)
  {
    const int v = vertex_at[static_cast<std::size_t>(i)];
    int deg = 0;
    for (int p = 0; p < i; ++p)
      deg += static_cast<int>(g.at(v, vertex_at[static_cast<std::size_t>(p)]));
    out[static_cast<std::size_t>(i - 1)] = deg;
  }
  return out;
}

std::optional<AnnFree> ann_free(const Multiplicity& m)
{
  for (const auto& dec : ann_decompositions(m))
  {
    const bool hypothesis = dec.k > 0 || !dec.graph.has_minus() ||
                            (!dec.graph.has_plus() && m.min() > 0);
    if (!hypothesis)
      continue;
    const auto nu = is_signed_eliminable(dec.graph);
    if (!nu)
      continue;
    const auto deg = tilde_degrees(dec.graph, *nu);
    const int n = dec.N();
    return AnnFree{dec, *nu, {0, n + deg[0], n + deg[1], n + deg[2]}};
  }
  return std::nullopt;
}

ClassificationResult classify(const Multiplicity& m)
{
  m.require_positive();
  ClassificationResult r;
  if (const auto v = free_vertex(m))
  {
    r.verdict = Verdict::Free;
    r.witness = FreeVertexWitness{*v};
    if (const auto ann = ann_free(m))
      r.exponents = ann->exponents;
    return r;
  }
  if (const auto ann = ann_free(m))
  {
    r.verdict = Verdict::Free;
    r.witness = AnnWitness{ann->decomposition, ann->ordering};
    r.exponents = ann->exponents;
    return r;
  }

  r.verdict = Verdict::NonFree;
  if (twelve_inequalities(m))
    if (const auto bullet = general_nonfree_test(m))
    {
      r.certificate = GeneralNonFreeCase{*bullet};
      return r;
    }
  if (const auto pos = first_positive_lb(m))
    r.certificate = *pos;
  else
    r.certificate = NoFreeStructure{};
  return r;
}

std::optional<std::array<int, 4>> exponents(const Multiplicity& m)
{
  return classify(m).exponents;
}

bool classify_deleted_a3(int a, int b, int c, int d, int e)
{
  if (std::min({a, b, c, d, e}) < 1)
    throw InvalidMultiplicity("multiplicities must be ≥ 1");
  return c + e <= a + 1 || b + d <= a + 1;
}

} // namespace multibraid
