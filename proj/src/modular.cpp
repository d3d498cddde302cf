#include "multibraid/modular.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace multibraid::modular
{

namespace
{
std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
  std::uint64_t r = 1;
  b %= m;
  while (e)
  {
    if (e & 1)
      r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// Deterministic for n < 4,759,123,141.
bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t q : {2u, 3u, 5u, 7u})
    if (n % q == 0)
      return n == q;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0)
  {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 7u, 61u})
  {
    if (a % n == 0)
      continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int i = 1; i < s; ++i)
    {
      x = x * x % n;
      if (x == n - 1)
      {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

std::uint32_t inverse(std::uint32_t a, std::uint32_t p)
{
  return static_cast<std::uint32_t>(powmod(a, p - 2, p));
}

struct MersenneField
{
  static constexpr std::uint32_t p = kScreenPrime;
  static std::uint32_t reduce(std::uint64_t x)
  {
    x = (x & p) + (x >> 31);
    x = (x & p) + (x >> 31);
    return static_cast<std::uint32_t>(x >= p ? x - p : x);
  }
};

struct GenericField
{
  std::uint32_t p;
  std::uint32_t reduce(std::uint64_t x) const { return static_cast<std::uint32_t>(x % p); }
};

template <class Field>
Echelon echelon_impl(std::span<std::uint32_t> a, std::size_t rows, std::size_t cols,
                     const Field& field, std::size_t rank_cap)
{
  const std::uint32_t p = field.p;
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows && r < rank_cap; ++c)
  {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::uint32_t* prow = a.data() + r * cols;
    if (piv != r)
      std::swap_ranges(prow + c, prow + cols, a.data() + piv * cols + c);

    const std::uint32_t inv = inverse(prow[c], p);
    for (std::size_t j = c; j < cols; ++j)
      prow[j] = field.reduce(std::uint64_t{prow[j]} * inv);

    for (std::size_t i = piv + 1; i < rows; ++i)
    {
      std::uint32_t* row = a.data() + i * cols;
      if (row[c] == 0)
        continue;
      const std::uint64_t f = p - row[c];
      for (std::size_t j = c; j < cols; ++j)
        row[j] = field.reduce(row[j] + f * prow[j]);
    }
    // Rows strictly between r and piv are zero in column c already.
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}
} // namespace

std::uint32_t prime_at(std::size_t n)
{
  static std::mutex mutex;
  static std::vector<std::uint32_t> primes;
  std::lock_guard lock(mutex);
  std::uint64_t candidate = primes.empty() ? (1ull << 31) : primes.back();
  while (primes.size() <= n)
  {
    --candidate;
    while (!is_prime(candidate))
      --candidate;
    primes.push_back(static_cast<std::uint32_t>(candidate));
  }
  return primes[n];
}

std::uint32_t reduce(const Integer& z, std::uint32_t p)
{
  return static_cast<std::uint32_t>(mpz_fdiv_ui(z.get_mpz_t(), p));
}

Echelon echelon(std::span<std::uint32_t> a, std::size_t rows, std::size_t cols,
                std::uint32_t p, std::size_t rank_cap)
{
  if (a.size() < rows * cols)
    throw std::invalid_argument("echelon: buffer smaller than rows * cols");
  if (p == kScreenPrime)
    return echelon_impl(a, rows, cols, MersenneField{}, rank_cap);
  return echelon_impl(a, rows, cols, GenericField{p}, rank_cap);
}

double hadamard_log2_bound(std::vector<double> log2_norms, std::size_t cap)
{
  std::sort(log2_norms.begin(), log2_norms.end(), std::greater<>());
  double total = 0;
  for (std::size_t i = 0; i < log2_norms.size() && i < cap; ++i)
    total += std::max(0.0, log2_norms[i]);
  return total;
}

CertifiedRank certified_rank(std::size_t rows, std::size_t cols, const ModularFill& fill,
                             double log2_minor_bound, std::size_t rank_cap)
{
  rank_cap = std::min({rank_cap, rows, cols});
  CertifiedRank out;
  std::vector<std::uint32_t> buf(rows * cols);
  // Slack covers rounding in the floating-point norm estimates.
  const double needed = log2_minor_bound * (1 + 1e-9) + 2;
  double covered = 0;
  for (std::size_t n = 0;; ++n)
  {
    const std::uint32_t p = prime_at(n);
    fill(p, buf);
    const auto e = echelon(buf, rows, cols, p, rank_cap);
    ++out.primes_used;
    if (e.rank > out.rank || out.witness_prime == 0)
    {
      out.rank = e.rank;
      out.witness_prime = p;
    }
    covered += std::log2(static_cast<double>(p));
    if (out.rank == rank_cap || covered > needed)
      return out;
  }
}

} // namespace multibraid::modular
