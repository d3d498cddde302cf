#include "multibraid/exactalg.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace multibraid
{

MonoBasis::MonoBasis(int degree) : degree_(degree)
{
  if (degree < 0)
    throw std::invalid_argument("MonoBasis: negative degree");
  entries_.reserve(monomial_count(degree));
  for (int t = 0; t <= degree; ++t)
    for (int k = 0; k <= t; ++k)
      entries_.push_back({degree - t, t - k, k});
}

const MonoBasis& MonoBasis::of(int degree)
{
  static std::mutex mutex;
  static std::deque<MonoBasis> cache;
  std::lock_guard lock(mutex);
  while (static_cast<int>(cache.size()) <= degree)
    cache.emplace_back(static_cast<int>(cache.size()));
  return cache[static_cast<std::size_t>(degree)];
}

//----------------------------------------------------------------------------
HomPoly HomPoly::zero(int degree)
{
  return HomPoly{degree, std::vector<Integer>(monomial_count(degree))};
}

bool HomPoly::is_zero() const
{
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Integer& c) { return c == 0; });
}

HomPoly operator*(const HomPoly& a, const HomPoly& b)
{
  HomPoly out = HomPoly::zero(a.degree + b.degree);
  const auto& ba = MonoBasis::of(a.degree);
  const auto& bb = MonoBasis::of(b.degree);
  for (std::size_t i = 0; i < ba.size(); ++i)
  {
    if (a.coeffs[i] == 0)
      continue;
    for (std::size_t j = 0; j < bb.size(); ++j)
    {
      if (b.coeffs[j] == 0)
        continue;
      const Exponent e{ba[i][0] + bb[j][0], ba[i][1] + bb[j][1],
                       ba[i][2] + bb[j][2]};
      out.coeffs[monomial_index(e)] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return out;
}

HomPoly& HomPoly::operator+=(const HomPoly& other)
{
  if (other.degree != degree)
    throw std::invalid_argument("HomPoly: adding polynomials of different degree");
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    coeffs[i] += other.coeffs[i];
  return *this;
}

HomPoly linear(const LinearForm& form)
{
  HomPoly p = HomPoly::zero(1);
  p.coeffs[0] = form.cx;
  p.coeffs[1] = form.cy;
  p.coeffs[2] = form.cz;
  return p;
}

HomPoly expand_power(const LinearForm& form, int power)
{
  if (form == LinearForm{})
    throw std::invalid_argument("expand_power: zero linear form");
  if (power < 1)
    throw std::invalid_argument("expand_power: power must be >= 1");

  // Multinomial expansion: coefficient of x^i y^j z^k is
  // power! / (i! j! k!) * cx^i cy^j cz^k.
  HomPoly out = HomPoly::zero(power);
  const auto& basis = MonoBasis::of(power);
  Integer fact_n;
  mpz_fac_ui(fact_n.get_mpz_t(), static_cast<unsigned long>(power));
  for (std::size_t idx = 0; idx < basis.size(); ++idx)
  {
    const auto& e = basis[idx];
    Integer denom = 1, f;
    for (int v : e)
    {
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(v));
      denom *= f;
    }
    Integer c = fact_n / denom, pw;
    const std::array<std::int64_t, 3> base{form.cx, form.cy, form.cz};
    for (int v = 0; v < 3; ++v)
    {
      Integer b = static_cast<long>(base[v]);
      mpz_pow_ui(pw.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e[v]));
      c *= pw;
    }
    out.coeffs[idx] = c;
  }
  return out;
}

//----------------------------------------------------------------------------
DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows)
  {
    if (row.size() != cols_)
      throw std::invalid_argument("DenseMatrix: ragged initializer");
    for (long v : row)
      data_.emplace_back(v);
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n)
{
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

namespace
{
// Clears denominators row by row; rank and kernel are unchanged.
std::vector<Integer> integer_rows(const DenseMatrix& m)
{
  std::vector<Integer> a(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
  {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c)
      a[r * m.cols() + c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return a;
}
} // namespace

std::size_t rank(const DenseMatrix& m)
{
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Integer> a = integer_rows(m);
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * cols + c]; };

  Integer prev = 1, t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c)
  {
    std::size_t p = r;
    while (p < rows && at(p, c) == 0)
      ++p;
    if (p == rows)
      continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j)
        std::swap(at(p, j), at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i)
    {
      for (std::size_t j = c + 1; j < cols; ++j)
      {
        // Sylvester's identity keeps this division exact.
        t = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> kernel_basis(const DenseMatrix& m)
{
  const std::size_t rows = m.rows(), cols = m.cols();
  DenseMatrix a = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c)
  {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0)
      ++p;
    if (p == rows)
      continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j)
      a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i)
    {
      if (i == r || a(i, c) == 0)
        continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (a(r, j) != 0)
          a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols)
    is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f)
  {
    if (is_pivot[f])
      continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      v[pivot_cols[i]] = -a(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v)
{
  Integer l = 1;
  for (const auto& q : v)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
  {
    out[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g == 0)
    return out;
  const auto first = std::find_if(out.begin(), out.end(),
                                  [](const Integer& c) { return c != 0; });
  if (*first < 0)
    g = -g;
  for (auto& c : out)
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

} // namespace multibraid
