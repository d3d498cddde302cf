#pragma once

// Rank computations over prime fields, and an exact rank over Q that is
// certified from several primes through the Hadamard bound.

#include "multibraid/exactalg.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace multibraid::modular
{

/// 2^31 - 1, used for the fast screening pass.
inline constexpr std::uint32_t kScreenPrime = 2147483647u;

/// The n-th prime below 2^31 in descending order (index 0 is 2^31 - 1).
std::uint32_t prime_at(std::size_t n);

std::uint32_t reduce(const Integer& z, std::uint32_t p);

struct Echelon
{
  std::size_t rank = 0;
  /// Leftmost independent columns, ascending.
  std::vector<std::size_t> pivot_cols;
};

/// Row echelon form of a row-major matrix over F_p, in place.
///
/// Stops early once `rank_cap` pivots are found.
Echelon echelon(std::span<std::uint32_t> a, std::size_t rows, std::size_t cols,
                std::uint32_t p, std::size_t rank_cap = SIZE_MAX);

/// Fills a rows x cols row-major buffer with the matrix reduced modulo p.
using ModularFill = std::function<void(std::uint32_t p, std::span<std::uint32_t>)>;

struct CertifiedRank
{
  std::size_t rank = 0;
  /// A prime for which rank mod p equals the rank over Q.
  std::uint32_t witness_prime = 0;
  std::size_t primes_used = 0;
};

/// Exact rank over Q of an integer matrix given only through its reductions.
///
/// The rank mod p never exceeds the rank over Q, and some nonzero maximal
/// minor is bounded by 2^log2_minor_bound; once the product of the primes
/// tried exceeds that bound, the largest modular rank seen is the true rank.
/// `rank_cap` is a known upper bound on the rank over Q.
CertifiedRank certified_rank(std::size_t rows, std::size_t cols, const ModularFill& fill,
                             double log2_minor_bound, std::size_t rank_cap);

/// Bound on log2 |det| of any square submatrix of size <= cap, from the
/// Hadamard inequality applied to the `cap` largest norms.
double hadamard_log2_bound(std::vector<double> log2_norms, std::size_t cap);

} // namespace multibraid::modular
