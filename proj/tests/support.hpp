#pragma once

// Small, deliberately naive reference implementations used to cross-check
// the library: textbook Gaussian elimination over Q and polynomial products
// kept in a std::map.

#include "multibraid/exactalg.hpp"
#include "multibraid/model.hpp"

#include <map>
#include <random>
#include <vector>

namespace testsupport
{

using multibraid::Exponent;
using multibraid::Integer;
using multibraid::Rational;

inline std::size_t naive_rank(std::vector<std::vector<Rational>> a)
{
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c)
  {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0)
      ++p;
    if (p == a.size())
      continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i)
    {
      if (i == r || a[i][c] == 0)
        continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

using MapPoly = std::map<Exponent, Integer>;

inline MapPoly map_linear(long cx, long cy, long cz)
{
  MapPoly p;
  if (cx)
    p[{1, 0, 0}] = cx;
  if (cy)
    p[{0, 1, 0}] = cy;
  if (cz)
    p[{0, 0, 1}] = cz;
  return p;
}

inline MapPoly map_mul(const MapPoly& a, const MapPoly& b)
{
  MapPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b)
    {
      auto& slot = out[{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}];
      slot += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline MapPoly map_pow(const MapPoly& a, int n)
{
  MapPoly out{{{0, 0, 0}, Integer(1)}};
  for (int i = 0; i < n; ++i)
    out = map_mul(out, a);
  return out;
}

/// All monomials of degree d, any order.
inline std::vector<Exponent> monomials(int d)
{
  std::vector<Exponent> out;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j)
      out.push_back({i, j, d - i - j});
  return out;
}

/// HF of an ideal generated by powers of linear forms, by brute force: rank
/// of the list of all monomial multiples, via naive elimination.
inline std::size_t brute_hf_ideal(const std::vector<std::pair<MapPoly, int>>& gens, int d)
{
  const auto target = monomials(d);
  std::map<Exponent, std::size_t> pos;
  for (std::size_t i = 0; i < target.size(); ++i)
    pos[target[i]] = i;
  std::vector<std::vector<Rational>> rows;
  for (const auto& [p, deg] : gens)
  {
    if (deg > d)
      continue;
    for (const auto& mono : monomials(d - deg))
    {
      std::vector<Rational> row(target.size());
      for (const auto& [e, c] : p)
        row[pos.at({e[0] + mono[0], e[1] + mono[1], e[2] + mono[2]})] = c;
      rows.push_back(std::move(row));
    }
  }
  return rows.empty() ? 0 : naive_rank(rows);
}

/// The six A3 forms x, y, z, y-x, z-x, z-y raised to the multiplicities.
inline std::vector<std::pair<MapPoly, int>> a3_generators(const multibraid::Multiplicity& m)
{
  const MapPoly forms[6] = {map_linear(1, 0, 0),  map_linear(0, 1, 0),  map_linear(0, 0, 1),
                            map_linear(-1, 1, 0), map_linear(-1, 0, 1), map_linear(0, -1, 1)};
  std::vector<std::pair<MapPoly, int>> out;
  for (int e = 0; e < 6; ++e)
    out.emplace_back(map_pow(forms[e], m[e]), m[e]);
  return out;
}

inline std::mt19937_64& rng()
{
  static std::mt19937_64 gen(0x5eed1234ULL);
  return gen;
}

/// Every multiplicity in {lo..hi}^6, lexicographic.
inline std::vector<multibraid::Multiplicity> all_multiplicities(int lo, int hi)
{
  std::vector<multibraid::Multiplicity> out;
  multibraid::Multiplicity m;
  m.m.fill(lo);
  while (true)
  {
    out.push_back(m);
    int e = 5;
    while (e >= 0 && m[e] == hi)
      m[e--] = lo;
    if (e < 0)
      break;
    ++m[e];
  }
  return out;
}

inline multibraid::Multiplicity mult(std::initializer_list<int> v)
{
  multibraid::Multiplicity m;
  std::copy(v.begin(), v.end(), m.m.begin());
  return m;
}

} // namespace testsupport
