#include "multibraid/oracle.hpp"

#include "multibraid/modular.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace multibraid
{

LinearForm edge_form(Edge e)
{
  std::array<std::int64_t, 3> c{};
  if (e.j > 0)
    c[static_cast<std::size_t>(e.j - 1)] += 1;
  if (e.i > 0)
    c[static_cast<std::size_t>(e.i - 1)] -= 1;
  return {c[0], c[1], c[2]};
}

PowerIdeal PowerIdeal::of(const Multiplicity& m, std::initializer_list<int> sigma)
{
  std::vector<int> v(sigma);
  std::sort(v.begin(), v.end());
  PowerIdeal ideal;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
    {
      const Edge e{v[a], v[b]};
      ideal.generators.emplace_back(edge_form(e), m.at(e));
    }
  return ideal;
}

PowerIdeal PowerIdeal::full(const Multiplicity& m) { return of(m, {0, 1, 2, 3}); }

PowerIdeal PowerIdeal::triangle(const Multiplicity& m, Triangle t)
{
  return of(m, {t.i, t.j, t.k});
}

namespace
{
using modular::kScreenPrime;

struct SparseTerm
{
  Exponent e;
  Integer c;
  std::uint32_t screen = 0;
};

struct SparsePoly
{
  int degree = 0;
  std::vector<SparseTerm> terms;
};

SparsePoly sparse(const HomPoly& p)
{
  SparsePoly out{p.degree, {}};
  if (p.degree < 0)
    return out;
  const auto& basis = MonoBasis::of(p.degree);
  for (std::size_t i = 0; i < p.coeffs.size(); ++i)
    if (p.coeffs[i] != 0)
      out.terms.push_back({basis[i], p.coeffs[i], modular::reduce(p.coeffs[i], kScreenPrime)});
  return out;
}

Exponent add(const Exponent& a, const Exponent& b)
{
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

/// alpha^power, shared across threads.
std::shared_ptr<const SparsePoly> power_of(const LinearForm& f, int power)
{
  using Key = std::tuple<std::int64_t, std::int64_t, std::int64_t, int>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const SparsePoly>> cache;
  const Key key{f.cx, f.cy, f.cz, power};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end())
      return it->second;
  }
  auto value = std::make_shared<const SparsePoly>(sparse(expand_power(f, power)));
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(value)).first->second;
}

/// Integer matrix kept as a list of nonzero entries.  The values point into
/// cached polynomials, which outlive every matrix built from them.
struct IntMatrix
{
  struct Entry
  {
    std::uint32_t row;
    std::uint32_t col;
    std::uint32_t screen;
    const Integer* value;
  };

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Entry> entries;

  void push(std::size_t r, std::size_t c, const SparseTerm& t)
  {
    entries.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), t.screen,
                       &t.c});
  }

  void fill(std::uint32_t p, std::span<std::uint32_t> buf) const
  {
    std::fill(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(rows * cols), 0u);
    if (p == kScreenPrime)
      for (const auto& e : entries)
        buf[e.row * cols + e.col] = e.screen;
    else
      for (const auto& e : entries)
        buf[e.row * cols + e.col] = modular::reduce(*e.value, p);
  }

  /// Hadamard bound over rows and over columns; the smaller one wins.
  double log2_minor_bound(std::size_t cap) const
  {
    std::vector<long double> row_sq(rows, 0), col_sq(cols, 0);
    for (const auto& e : entries)
    {
      long exp = 0;
      const double mant = mpz_get_d_2exp(&exp, e.value->get_mpz_t());
      const long double v = std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
      row_sq[e.row] += v * v;
      col_sq[e.col] += v * v;
    }
    auto logs = [](const std::vector<long double>& sq) {
      std::vector<double> out;
      out.reserve(sq.size());
      for (auto s : sq)
        out.push_back(s > 0 ? static_cast<double>(0.5L * std::log2(s)) : 0.0);
      return out;
    };
    return std::min(modular::hadamard_log2_bound(logs(row_sq), cap),
                    modular::hadamard_log2_bound(logs(col_sq), cap));
  }
};

modular::Echelon echelon_at(const IntMatrix& m, std::uint32_t p, std::size_t cap)
{
  thread_local std::vector<std::uint32_t> buf;
  buf.resize(m.rows * m.cols);
  m.fill(p, buf);
  return modular::echelon(buf, m.rows, m.cols, p, cap);
}

modular::CertifiedRank exact_rank(const IntMatrix& m, std::size_t cap)
{
  cap = std::min({cap, m.rows, m.cols});
  if (cap == 0 || m.entries.empty())
    return {0, kScreenPrime, 0};
  return modular::certified_rank(
      m.rows, m.cols, [&m](std::uint32_t p, std::span<std::uint32_t> buf) { m.fill(p, buf); },
      m.log2_minor_bound(cap), cap);
}

/// Degree-d Macaulay matrix: one column per monomial multiple of a generator.
IntMatrix macaulay(const std::vector<std::shared_ptr<const SparsePoly>>& gens, int d)
{
  IntMatrix mat;
  mat.rows = monomial_count(d);
  for (const auto& g : gens)
  {
    if (d < g->degree)
      continue;
    const auto& basis = MonoBasis::of(d - g->degree);
    for (std::size_t j = 0; j < basis.size(); ++j, ++mat.cols)
      for (const auto& t : g->terms)
        mat.push(monomial_index(add(t.e, basis[j])), mat.cols, t);
  }
  return mat;
}

//----------------------------------------------------------------------------
// Triangle syzygies in two variables.

using Vec = std::vector<Rational>;

/// Coefficients of u^a, (u+v)^b, v^c indexed by the power of v.
std::array<std::vector<Integer>, 3> two_variable_generators(int a, int b, int c)
{
  std::array<std::vector<Integer>, 3> f;
  f[0].assign(static_cast<std::size_t>(a) + 1, 0);
  f[0][0] = 1;
  f[1].resize(static_cast<std::size_t>(b) + 1);
  for (int r = 0; r <= b; ++r)
    mpz_bin_uiui(f[1][static_cast<std::size_t>(r)].get_mpz_t(), static_cast<unsigned long>(b),
                 static_cast<unsigned long>(r));
  f[2].assign(static_cast<std::size_t>(c) + 1, 0);
  f[2][static_cast<std::size_t>(c)] = 1;
  return f;
}

struct Blocks
{
  std::array<int, 3> offset{};
  std::array<int, 3> size{};
  int total = 0;
};

Blocks blocks_for(const std::array<int, 3>& powers, int g)
{
  Blocks b;
  for (std::size_t i = 0; i < 3; ++i)
  {
    b.offset[i] = b.total;
    b.size[i] = std::max(0, g - powers[i] + 1);
    b.total += b.size[i];
  }
  return b;
}

DenseMatrix two_variable_macaulay(const std::array<std::vector<Integer>, 3>& f,
                                  const std::array<int, 3>& powers, int g)
{
  const Blocks b = blocks_for(powers, g);
  DenseMatrix mat(static_cast<std::size_t>(g) + 1, static_cast<std::size_t>(b.total));
  for (std::size_t i = 0; i < 3; ++i)
    for (int s = 0; s < b.size[i]; ++s)
      for (std::size_t t = 0; t < f[i].size(); ++t)
        mat(static_cast<std::size_t>(s) + t, static_cast<std::size_t>(b.offset[i] + s)) = f[i][t];
  return mat;
}

/// A syzygy of degree h given as three coefficient vectors (power of v).
struct Syz2
{
  int degree = 0;
  std::array<std::vector<Integer>, 3> coeffs;
};

/// The multiple u^{g-h-s} v^s * syz, laid out in degree-g blocks.
Vec shifted(const Syz2& syz, const Blocks& b, int s)
{
  Vec v(static_cast<std::size_t>(b.total));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t t = 0; t < syz.coeffs[i].size(); ++t)
      v[static_cast<std::size_t>(b.offset[i] + s) + t] = syz.coeffs[i][t];
  return v;
}

std::size_t rank_of_rows(const std::vector<Vec>& rows, std::size_t cols)
{
  DenseMatrix mat(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      mat(r, c) = rows[r][c];
  return rank(mat);
}

std::vector<Syz2> minimal_two_variable_syzygies(int a, int b, int c)
{
  const std::array<int, 3> powers{a, b, c};
  const auto f = two_variable_generators(a, b, c);
  std::vector<Syz2> accepted;
  for (int g = std::min({a, b, c}); g <= a + b + c; ++g)
  {
    const Blocks blk = blocks_for(powers, g);
    const auto kernel = kernel_basis(two_variable_macaulay(f, powers, g));
    if (kernel.empty())
      continue;
    std::vector<Vec> span;
    for (const auto& syz : accepted)
      for (int s = 0; s <= g - syz.degree; ++s)
        span.push_back(shifted(syz, blk, s));
    std::size_t current = span.empty() ? 0 : rank_of_rows(span, static_cast<std::size_t>(blk.total));
    if (current == kernel.size())
      continue;
    for (const auto& k : kernel)
    {
      span.push_back(k);
      const auto next = rank_of_rows(span, static_cast<std::size_t>(blk.total));
      if (next == current)
      {
        span.pop_back();
        continue;
      }
      current = next;
      const auto ints = primitive_integer_vector(k);
      Syz2 syz{g, {}};
      for (std::size_t i = 0; i < 3; ++i)
        syz.coeffs[i].assign(ints.begin() + blk.offset[i],
                             ints.begin() + blk.offset[i] + blk.size[i]);
      accepted.push_back(std::move(syz));
      if (current == kernel.size())
        break;
    }
  }
  return accepted;
}

HomPoly power_or_one(const LinearForm& f, int n)
{
  if (n == 0)
  {
    HomPoly one = HomPoly::zero(0);
    one.coeffs[0] = 1;
    return one;
  }
  return expand_power(f, n);
}

struct TriangleData
{
  TriangleSyzygies syz;
  /// Per generator, the three coefficients in sparse form.
  std::vector<std::array<SparsePoly, 3>> sparse_coeffs;
};

std::unique_ptr<TriangleData> build_triangle(Triangle t, int mij, int mik, int mjk)
{
  const auto edges = triangle_edges(t);
  const LinearForm u = edge_form(edges[0]), v = edge_form(edges[2]);
  const std::array<LinearForm, 3> forms{u, edge_form(edges[1]), v};
  const std::array<int, 3> mults{mij, mik, mjk};

  auto data = std::make_unique<TriangleData>();
  data->syz.triangle = t;
  data->syz.mults = mults;
  for (const auto& s2 : minimal_two_variable_syzygies(mij, mik, mjk))
  {
    LocalGenerator gen;
    gen.degree = s2.degree;
    for (std::size_t i = 0; i < 3; ++i)
    {
      const int n = s2.degree - mults[i];
      HomPoly p = HomPoly::zero(n);
      for (int r = 0; r <= n; ++r)
      {
        const Integer& c = s2.coeffs[i][static_cast<std::size_t>(r)];
        if (c == 0)
          continue;
        HomPoly term = power_or_one(u, n - r) * power_or_one(v, r);
        for (auto& x : term.coeffs)
          x *= c;
        p += term;
      }
      gen.coeffs[i] = std::move(p);
    }

    HomPoly check = HomPoly::zero(gen.degree);
    for (std::size_t i = 0; i < 3; ++i)
      if (gen.coeffs[i].degree >= 0)
        check += gen.coeffs[i] * expand_power(forms[i], mults[i]);
    if (!check.is_zero())
      throw std::logic_error("triangle syzygy failed verification");

    std::array<SparsePoly, 3> sp;
    for (std::size_t i = 0; i < 3; ++i)
      sp[i] = sparse(gen.coeffs[i]);
    data->sparse_coeffs.push_back(std::move(sp));
    data->syz.generators.push_back(std::move(gen));
  }
  return data;
}

const TriangleData& triangle_data(Triangle t, int mij, int mik, int mjk)
{
  using Key = std::tuple<int, int, int, int, int, int>;
  static std::mutex mutex;
  static std::map<Key, std::unique_ptr<TriangleData>> cache;
  const Key key{t.i, t.j, t.k, mij, mik, mjk};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end())
      return *it->second;
  }
  auto built = build_triangle(t, mij, mik, mjk);
  std::lock_guard lock(mutex);
  return *cache.emplace(key, std::move(built)).first->second;
}

//----------------------------------------------------------------------------
// Global layout: F_d = sum over edges of S_{d - m_e}.

struct Layout
{
  std::array<std::size_t, 6> offset{};
  std::size_t cols = 0;
};

Layout layout_for(const Multiplicity& m, int d)
{
  Layout l;
  for (int e = 0; e < 6; ++e)
  {
    l.offset[static_cast<std::size_t>(e)] = l.cols;
    l.cols += monomial_count(d - m[e]);
  }
  return l;
}

std::vector<std::shared_ptr<const SparsePoly>> edge_powers(const Multiplicity& m)
{
  std::vector<std::shared_ptr<const SparsePoly>> out;
  for (int e = 0; e < 6; ++e)
    out.push_back(power_of(edge_form(kEdges[static_cast<std::size_t>(e)]), m[e]));
  return out;
}

/// Rows: monomial multiples of all local generators.  Columns: the F_d
/// coordinates kept by `colmap` (entry -1 drops a column).
IntMatrix local_rows(const Multiplicity& m, int d, const Layout& layout,
                     const std::vector<int>& colmap, std::size_t kept)
{
  IntMatrix mat;
  mat.cols = kept;
  for (const auto& t : kTriangles)
  {
    const auto edges = triangle_edges(t);
    std::array<int, 3> eidx{};
    for (std::size_t s = 0; s < 3; ++s)
      eidx[s] = edge_index(edges[s]);
    const auto& data = triangle_data(t, m[eidx[0]], m[eidx[1]], m[eidx[2]]);
    for (std::size_t g = 0; g < data.syz.generators.size(); ++g)
    {
      const int deg = data.syz.generators[g].degree;
      if (d < deg)
        continue;
      const auto& basis = MonoBasis::of(d - deg);
      for (std::size_t j = 0; j < basis.size(); ++j, ++mat.rows)
        for (std::size_t s = 0; s < 3; ++s)
          for (const auto& term : data.sparse_coeffs[g][s].terms)
          {
            const auto col = layout.offset[static_cast<std::size_t>(eidx[s])] +
                             monomial_index(add(term.e, basis[j]));
            if (colmap[col] >= 0)
              mat.push(mat.rows, static_cast<std::size_t>(colmap[col]), term);
          }
    }
  }
  return mat;
}

/// Column map keeping exactly the non-pivot columns.
std::vector<int> free_columns(std::size_t cols, const std::vector<std::size_t>& pivots,
                              std::size_t& kept)
{
  std::vector<int> map(cols, 0);
  for (auto p : pivots)
    map[p] = -1;
  kept = 0;
  for (auto& c : map)
    c = c < 0 ? -1 : static_cast<int>(kept++);
  return map;
}

} // namespace

//----------------------------------------------------------------------------

std::int64_t hf_ideal(const PowerIdeal& ideal, int d)
{
  if (d < 0)
    return 0;
  std::vector<std::shared_ptr<const SparsePoly>> gens;
  for (const auto& [form, power] : ideal.generators)
    gens.push_back(power_of(form, power));
  const IntMatrix mat = macaulay(gens, d);
  return static_cast<std::int64_t>(exact_rank(mat, mat.rows).rank);
}

std::int64_t hf_quotient(const PowerIdeal& ideal, int d)
{
  return static_cast<std::int64_t>(monomial_count(d)) - hf_ideal(ideal, d);
}

std::int64_t hf_syz_global(const Multiplicity& m, int d)
{
  std::int64_t total = 0;
  for (int e = 0; e < 6; ++e)
    total += binom2(d - m[e] + 2);
  return total - hf_ideal(PowerIdeal::full(m), d);
}

const TriangleSyzygies& triangle_syzygies(Triangle t, int mij, int mik, int mjk)
{
  if (std::min({mij, mik, mjk}) < 1)
    throw InvalidMultiplicity("multiplicities must be ≥ 1");
  return triangle_data(t, mij, mik, mjk).syz;
}

SyzygyGenerators local_syzygy_generators(const Multiplicity& m)
{
  m.require_positive();
  SyzygyGenerators out;
  for (std::size_t i = 0; i < 4; ++i)
  {
    const auto e = triangle_edges(kTriangles[i]);
    out[i] = triangle_syzygies(kTriangles[i], m.at(e[0]), m.at(e[1]), m.at(e[2]));
  }
  return out;
}

std::vector<std::int64_t> two_variable_kernel_dims(int a, int b, int c, int max_degree)
{
  const std::array<int, 3> powers{a, b, c};
  const auto f = two_variable_generators(a, b, c);
  std::vector<std::int64_t> out;
  for (int g = 0; g <= max_degree; ++g)
  {
    const auto mat = two_variable_macaulay(f, powers, g);
    out.push_back(static_cast<std::int64_t>(mat.cols() - rank(mat)));
  }
  return out;
}

std::int64_t hf_triangle_span(const TriangleSyzygies& syz, int d)
{
  const auto& data = triangle_data(syz.triangle, syz.mults[0], syz.mults[1], syz.mults[2]);
  std::array<std::size_t, 3> offset{};
  std::size_t cols = 0;
  for (std::size_t s = 0; s < 3; ++s)
  {
    offset[s] = cols;
    cols += monomial_count(d - syz.mults[s]);
  }
  IntMatrix mat;
  mat.cols = cols;
  for (std::size_t g = 0; g < data.syz.generators.size(); ++g)
  {
    const int deg = data.syz.generators[g].degree;
    if (d < deg)
      continue;
    const auto& basis = MonoBasis::of(d - deg);
    for (std::size_t j = 0; j < basis.size(); ++j, ++mat.rows)
      for (std::size_t s = 0; s < 3; ++s)
        for (const auto& term : data.sparse_coeffs[g][s].terms)
          mat.push(mat.rows, offset[s] + monomial_index(add(term.e, basis[j])), term);
  }
  return static_cast<std::int64_t>(exact_rank(mat, SIZE_MAX).rank);
}

std::int64_t hf_locally_generated(const Multiplicity& m, int d)
{
  m.require_positive();
  if (d < 0)
    return 0;
  const Layout layout = layout_for(m, d);
  std::vector<int> identity(layout.cols);
  for (std::size_t c = 0; c < layout.cols; ++c)
    identity[c] = static_cast<int>(c);
  const IntMatrix g = local_rows(m, d, layout, identity, layout.cols);
  return static_cast<std::int64_t>(exact_rank(g, SIZE_MAX).rank);
}

DegreeComparison compare_degree(const Multiplicity& m, int d)
{
  m.require_positive();
  DegreeComparison out{d, 0, 0, true};
  if (d < 0)
    return out;
  const Layout layout = layout_for(m, d);
  if (layout.cols == 0)
    return out;
  const IntMatrix mac = macaulay(edge_powers(m), d);

  // Screen with one prime.  rank_p <= rank_Q everywhere, so
  //   rank_p(G|F) <= rank_Q(G) = dim K <= dim V = C - rank_Q(M) <= C - rank_p(M) = T
  // and equality at both ends pins every quantity down exactly.
  const auto ech = echelon_at(mac, kScreenPrime, mac.rows);
  std::size_t kept = 0;
  auto colmap = free_columns(layout.cols, ech.pivot_cols, kept);
  if (kept == 0)
    return out;
  {
    const IntMatrix g = local_rows(m, d, layout, colmap, kept);
    const auto r = echelon_at(g, kScreenPrime, kept);
    if (r.rank == kept)
    {
      out.global = out.local = static_cast<std::int64_t>(kept);
      return out;
    }
  }

  // Exact route.  At a prime realising rank_Q(M) the pivot columns of M are
  // independent over Q, so V projects isomorphically onto the free columns and
  // rank_Q(G) = rank_Q(G restricted to them).
  out.screened = false;
  const auto rm = exact_rank(mac, mac.rows);
  const auto exact_ech = echelon_at(mac, rm.witness_prime, mac.rows);
  colmap = free_columns(layout.cols, exact_ech.pivot_cols, kept);
  out.global = static_cast<std::int64_t>(kept);
  if (kept > 0)
  {
    const IntMatrix g = local_rows(m, d, layout, colmap, kept);
    out.local = static_cast<std::int64_t>(exact_rank(g, kept).rank);
  }
  if (out.gap() < 0)
    throw std::logic_error("local syzygies exceed the global syzygy space");
  return out;
}

int default_degree_bound(const Multiplicity& m)
{
  auto v = m.m;
  std::sort(v.begin(), v.end(), std::greater<>());
  return v[0] + v[1] + 1;
}

LocalGenerationReport is_locally_generated(const Multiplicity& m, std::optional<int> max_degree)
{
  m.require_positive();
  LocalGenerationReport report;
  report.max_degree = max_degree.value_or(default_degree_bound(m));
  for (int d = 0; d <= report.max_degree; ++d)
  {
    const auto c = compare_degree(m, d);
    if (c.gap() > 0)
    {
      report.locally_generated = false;
      report.first_gap = OracleGap{d, c.gap()};
      return report;
    }
  }
  return report;
}

ClassificationResult oracle_classify(const Multiplicity& m, std::optional<int> max_degree)
{
  const auto report = is_locally_generated(m, max_degree);
  ClassificationResult r;
  if (report.locally_generated)
    return r;
  r.verdict = Verdict::NonFree;
  r.certificate = *report.first_gap;
  return r;
}

} // namespace multibraid
