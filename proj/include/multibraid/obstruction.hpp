#pragma once

// Closed-form non-freeness obstructions: syzygy degrees of the triangle
// ideals, the Hilbert-function lower bound LB(m, d), its quadratic tail and
// discriminant, and the parity statistic P(m).

#include "multibraid/exactalg.hpp"
#include "multibraid/model.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace multibraid
{

/// Raised when a closed form is asked for outside the range where it holds.
class OutsideFormulaRange : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

struct LocalSyzygyStructure
{
  /// Degrees of the two syzygy generators, ascending.
  std::array<int, 2> gen_degrees{};
  int omega = 0;
  int a = 0;
  /// True when the three powers minimally generate the triangle ideal.
  bool minimal = true;
  /// False when one power is redundant by a margin of at least two and the
  /// degrees come from the Koszul-plus-expression branch.
  bool omega_branch = true;
};

LocalSyzygyStructure local_syzygy_structure(int mi, int mj, int mk);

/// Dimension in degree d of the free module of triangle syzygies.
std::int64_t hf_local_syz(int mi, int mj, int mk, int d);

/// Constant Hilbert polynomial of S/J(ijk).  Only valid when each entry is at
/// most the sum of the other two plus one; throws OutsideFormulaRange otherwise.
std::int64_t hp_quotient_triangle(int mi, int mj, int mk);

/// HF(S/J(ijk), d) from the two-variable picture: three distinct points on a
/// line impose independent conditions, so the ideal in K[u,v] has dimension
/// min(e+1, sum_i max(0, e-m_i+1)) in degree e.
std::int64_t hf_quotient_triangle(int mi, int mj, int mk, int d);

/// LB(m, d) = sum binom(d+2-m_ij, 2) - binom(d+2, 2) - sum_ijk HF(syz J(ijk), d).
std::int64_t lb(const Multiplicity& m, int d);

/// The equivalent form 3 binom(d+2, 2) - sum binom(d+2-m_ij, 2) - sum HF(S/J(ijk), d).
std::int64_t lb_quotient_form(const Multiplicity& m, int d);

/// (2|m| - 9) / 6.
Rational d_max(const Multiplicity& m);

/// Coefficients of the eventual quadratic A d^2 + B d + C of LB(m, d).
struct LBQuadratic
{
  Rational A, B, C;
  Rational operator()(int d) const { return A * d * d + B * d + C; }
};

/// Throws OutsideFormulaRange unless the twelve inequalities hold.
LBQuadratic lb_quadratic(const Multiplicity& m);

/// B^2 - 4AC of the quadratic above.
Rational discriminant_sq(const Multiplicity& m);

/// Sum of squared alternating sums over the three opposite-edge pairings.
std::int64_t p_stat(const Multiplicity& m);

/// Number of triangles whose three multiplicities have odd sum (0, 2 or 4).
int odd_triangle_count(const Multiplicity& m);

/// m_ij <= m_ik + m_jk + 1 for every edge ij and third vertex k.
bool twelve_inequalities(const Multiplicity& m);

/// First bullet (1..6) of the residue / parity test that fires.
///
/// Requires the twelve inequalities and no free vertex; otherwise throws
/// OutsideFormulaRange.
std::optional<int> general_nonfree_test(const Multiplicity& m);

/// Smallest d in [0, ceil(d_max) + 2] with LB(m, d) > 0.
std::optional<LBPositive> first_positive_lb(const Multiplicity& m);

} // namespace multibraid
