#pragma once

// Independent freeness oracle.  A multiplicity is free exactly when every
// syzygy on the six powers generating J(0123) is a combination of syzygies
// living on the four triangle ideals J(ijk).  This module compares the two
// graded dimensions degree by degree with exact linear algebra.

#include "multibraid/exactalg.hpp"
#include "multibraid/model.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace multibraid
{

/// alpha_ij = x_j - x_i with x_0 = 0, (x_1, x_2, x_3) = (x, y, z).
LinearForm edge_form(Edge e);

struct PowerIdeal
{
  std::vector<std::pair<LinearForm, int>> generators;

  /// J(sigma): powers alpha_ij^{m_ij} for the edges inside sigma, lexicographic.
  static PowerIdeal of(const Multiplicity& m, std::initializer_list<int> sigma);
  static PowerIdeal full(const Multiplicity& m);
  static PowerIdeal triangle(const Multiplicity& m, Triangle t);
};

/// dim_K J_d, the rank of the degree-d Macaulay matrix.
std::int64_t hf_ideal(const PowerIdeal& ideal, int d);

/// binom(d+2, 2) - hf_ideal.
std::int64_t hf_quotient(const PowerIdeal& ideal, int d);

/// Degree-d syzygies on all six listed generators (redundant ones included).
std::int64_t hf_syz_global(const Multiplicity& m, int d);

/// One syzygy generator of a triangle ideal: coeffs[s] multiplies the power
/// on the s-th edge of the triangle (order ij, ik, jk).  A coefficient of
/// negative degree is empty.
struct LocalGenerator
{
  int degree = 0;
  std::array<HomPoly, 3> coeffs;
};

struct TriangleSyzygies
{
  Triangle triangle;
  /// (m_ij, m_ik, m_jk).
  std::array<int, 3> mults{};
  std::vector<LocalGenerator> generators;
};

using SyzygyGenerators = std::array<TriangleSyzygies, 4>;

/// Minimal generators of the syzygies of J(ijk), ascending degree.  They are
/// computed in the two coordinates u = alpha_ij, v = alpha_jk (so that
/// alpha_ik = u + v), then substituted back; each one is checked to vanish
/// when contracted against the three powers.
const TriangleSyzygies& triangle_syzygies(Triangle t, int mij, int mik, int mjk);

SyzygyGenerators local_syzygy_generators(const Multiplicity& m);

/// Dimensions of the syzygy space of <u^a, (u+v)^b, v^c> in K[u, v], for
/// degrees 0..max_degree.  Computed as kernel dimensions, independent of the
/// generator selection.
std::vector<std::int64_t> two_variable_kernel_dims(int a, int b, int c, int max_degree);

/// Rank in degree d of the monomial multiples of the computed generators of
/// one triangle, in three variables.
std::int64_t hf_triangle_span(const TriangleSyzygies& syz, int d);

/// dim K_d, the span of all local syzygies in degree d.
std::int64_t hf_locally_generated(const Multiplicity& m, int d);

/// Exact global and local dimensions in one degree.
struct DegreeComparison
{
  int degree = 0;
  std::int64_t global = 0;
  std::int64_t local = 0;
  /// True when the one-prime screen already proved global == local.
  bool screened = false;

  std::int64_t gap() const { return global - local; }
};

DegreeComparison compare_degree(const Multiplicity& m, int d);

/// M1 + M2 + 1 for the two largest entries M1 >= M2.
int default_degree_bound(const Multiplicity& m);

struct LocalGenerationReport
{
  bool locally_generated = true;
  std::optional<OracleGap> first_gap;
  int max_degree = 0;
};

/// Scans d = 0..max_degree (default: default_degree_bound) and stops at the
/// first degree with a gap.
LocalGenerationReport is_locally_generated(const Multiplicity& m,
                                           std::optional<int> max_degree = std::nullopt);

ClassificationResult oracle_classify(const Multiplicity& m,
                                     std::optional<int> max_degree = std::nullopt);

} // namespace multibraid
