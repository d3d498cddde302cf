#pragma once

// Exact linear algebra over the rationals and monomial bookkeeping for
// homogeneous polynomials in x, y, z.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace multibraid
{

/// Arbitrary-precision rational, always kept in lowest terms by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

/// binom(n, 2) with the convention binom(A, B) = 0 for A < B.
constexpr std::int64_t binom2(std::int64_t n) noexcept
{
  return n >= 2 ? n * (n - 1) / 2 : 0;
}

/// Number of monomials of degree `degree` in three variables.
constexpr std::size_t monomial_count(int degree) noexcept
{
  return degree < 0 ? 0 : static_cast<std::size_t>(binom2(degree + 2));
}

/// Exponent vector x^i y^j z^k.
using Exponent = std::array<int, 3>;

/// Position of x^i y^j z^k inside MonoBasis(i + j + k).
///
/// Graded-lex with x > y > z: x^n, x^{n-1}y, x^{n-1}z, x^{n-2}y^2, ...
constexpr std::size_t monomial_index(const Exponent& e) noexcept
{
  const auto t = static_cast<std::size_t>(e[1] + e[2]);
  return t * (t + 1) / 2 + static_cast<std::size_t>(e[2]);
}

/// The monomials of one degree in the fixed graded-lex order.
class MonoBasis
{
public:
  explicit MonoBasis(int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return entries_.size(); }
  const Exponent& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Exponent>& entries() const { return entries_; }

  /// Shared immutable basis for `degree`; safe to call from any thread.
  static const MonoBasis& of(int degree);

private:
  int degree_;
  std::vector<Exponent> entries_;
};

/// A linear form cx*x + cy*y + cz*z with integer coefficients.
struct LinearForm
{
  std::int64_t cx = 0;
  std::int64_t cy = 0;
  std::int64_t cz = 0;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Homogeneous polynomial stored densely over MonoBasis(degree).
struct HomPoly
{
  int degree = 0;
  std::vector<Integer> coeffs;

  static HomPoly zero(int degree);
  bool is_zero() const;

  friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
  HomPoly& operator+=(const HomPoly& other);
  friend bool operator==(const HomPoly&, const HomPoly&) = default;
};

/// Coefficients of (cx x + cy y + cz z)^power over MonoBasis(power).
///
/// Throws std::invalid_argument for the zero form or power < 1.
HomPoly expand_power(const LinearForm& form, int power);

HomPoly linear(const LinearForm& form);

/// Row-major matrix of rationals.
class DenseMatrix
{
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const
  {
    return data_[r * cols_ + c];
  }

  static DenseMatrix identity(std::size_t n);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank over Q using fraction-free (Bareiss) elimination.
std::size_t rank(const DenseMatrix& m);

/// Basis of the right null space {v : m v = 0}, one vector per free column
/// of the reduced row echelon form.
std::vector<std::vector<Rational>> kernel_basis(const DenseMatrix& m);

/// Scales a rational vector to a primitive integer vector with the same
/// direction (first nonzero entry positive).
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v);

} // namespace multibraid
