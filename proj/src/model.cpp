#include "multibraid/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace multibraid
{

int edge_index(int i, int j)
{
  if (i > j)
    std::swap(i, j);
  if (i < 0 || j > 3 || i == j)
    throw std::invalid_argument("edge_index: not an edge of K4");
  // 01 02 03 12 13 23
  static constexpr int offset[3] = {0, 3, 5};
  return offset[i] + (j - i - 1);
}

Edge opposite_edge(Edge e)
{
  int rest[2], n = 0;
  for (int v = 0; v < 4; ++v)
    if (v != e.i && v != e.j)
      rest[n++] = v;
  if (n != 2)
    throw std::invalid_argument("opposite_edge: not an edge of K4");
  return {rest[0], rest[1]};
}

std::array<Edge, 3> triangle_edges(Triangle t)
{
  std::array<int, 3> v{t.i, t.j, t.k};
  std::sort(v.begin(), v.end());
  return {Edge{v[0], v[1]}, Edge{v[0], v[2]}, Edge{v[1], v[2]}};
}

int Multiplicity::total() const { return std::accumulate(m.begin(), m.end(), 0); }
int Multiplicity::min() const { return *std::min_element(m.begin(), m.end()); }
int Multiplicity::max() const { return *std::max_element(m.begin(), m.end()); }

void Multiplicity::require_positive() const
{
  if (min() < 1)
    throw InvalidMultiplicity("multiplicities must be ≥ 1");
}

Multiplicity Multiplicity::parse(std::string_view text)
{
  Multiplicity out;
  int count = 0;
  std::size_t pos = 0;
  while (pos <= text.size())
  {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
      tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
      tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw InvalidMultiplicity("malformed multiplicity '" + std::string(text) +
                                "': expected six comma-separated integers");
    if (count == 6)
      throw InvalidMultiplicity("malformed multiplicity '" + std::string(text) +
                                "': more than six entries");
    out.m[static_cast<std::size_t>(count++)] = value;
    pos = end + 1;
  }
  if (count != 6)
    throw InvalidMultiplicity("malformed multiplicity '" + std::string(text) +
                              "': expected six entries");
  return out;
}

std::string Multiplicity::to_string() const
{
  std::string s;
  for (std::size_t e = 0; e < 6; ++e)
  {
    if (e)
      s += ',';
    s += std::to_string(m[e]);
  }
  return s;
}

Multiplicity relabel(const Multiplicity& m, const Permutation& perm)
{
  Multiplicity out;
  for (int e = 0; e < 6; ++e)
  {
    const auto [i, j] = kEdges[static_cast<std::size_t>(e)];
    out[edge_index(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])] =
        m[e];
  }
  return out;
}

Permutation compose(const Permutation& q, const Permutation& p)
{
  Permutation out{};
  for (std::size_t v = 0; v < 4; ++v)
    out[v] = q[static_cast<std::size_t>(p[v])];
  return out;
}

bool SignedGraph4::has_plus() const
{
  return std::find(sign.begin(), sign.end(), Sign::Plus) != sign.end();
}

bool SignedGraph4::has_minus() const
{
  return std::find(sign.begin(), sign.end(), Sign::Minus) != sign.end();
}

SignedGraph4 SignedGraph4::from_edges(std::initializer_list<std::string_view> plus,
                                      std::initializer_list<std::string_view> minus)
{
  SignedGraph4 g;
  auto put = [&](std::string_view name, Sign s) {
    if (name.size() != 2)
      throw std::invalid_argument("SignedGraph4: edge names are two digits");
    auto& slot = g.sign[static_cast<std::size_t>(edge_index(name[0] - '0', name[1] - '0'))];
    if (slot != Sign::Absent)
      throw std::invalid_argument("SignedGraph4: edge listed twice");
    slot = s;
  };
  for (auto e : plus)
    put(e, Sign::Plus);
  for (auto e : minus)
    put(e, Sign::Minus);
  return g;
}

SignedGraph4 SignedGraph4::swapped() const
{
  SignedGraph4 g;
  for (std::size_t e = 0; e < 6; ++e)
    g.sign[e] = static_cast<Sign>(-static_cast<int>(sign[e]));
  return g;
}

SignedGraph4 SignedGraph4::relabeled(const Permutation& perm) const
{
  SignedGraph4 g;
  for (int e = 0; e < 6; ++e)
  {
    const auto [i, j] = kEdges[static_cast<std::size_t>(e)];
    g.sign[static_cast<std::size_t>(
        edge_index(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))] =
        sign[static_cast<std::size_t>(e)];
  }
  return g;
}

Multiplicity AnnDecomposition::reconstruct() const
{
  Multiplicity out;
  for (int e = 0; e < 6; ++e)
  {
    const auto [i, j] = kEdges[static_cast<std::size_t>(e)];
    out[e] = 2 * k + n[static_cast<std::size_t>(i)] + n[static_cast<std::size_t>(j)] +
             graph.value(e);
  }
  return out;
}

std::string_view to_string(Verdict v)
{
  return v == Verdict::Free ? "FREE" : "NON-FREE";
}

} // namespace multibraid
