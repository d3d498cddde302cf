#include "multibraid/obstruction.hpp"

#include "multibraid/classifier.hpp"

#include <algorithm>

namespace multibraid
{

namespace
{
std::array<int, 3> triangle_values(const Multiplicity& m, Triangle t)
{
  const auto e = triangle_edges(t);
  return {m.at(e[0]), m.at(e[1]), m.at(e[2])};
}

int omega_of(int sum) { return (sum - 3 >= 0 ? (sum - 3) / 2 : -((4 - sum) / 2)) + 1; }
} // namespace

LocalSyzygyStructure local_syzygy_structure(int mi, int mj, int mk)
{
  if (std::min({mi, mj, mk}) < 1)
    throw InvalidMultiplicity("multiplicities must be ≥ 1");
  std::array<int, 3> v{mi, mj, mk};
  std::sort(v.begin(), v.end());
  const int s = mi + mj + mk;

  LocalSyzygyStructure out;
  out.omega = omega_of(s);
  out.a = s - 2 * out.omega;
  // The largest power is redundant once the other two generate it.
  out.minimal = v[2] < v[0] + v[1] - 1;
  out.omega_branch = v[2] <= v[0] + v[1] + 1;
  if (out.omega_branch)
  {
    if (out.a == 2)
      out.gen_degrees = {out.omega + 1, out.omega + 1};
    else if (out.a == 1)
      out.gen_degrees = {out.omega, out.omega + 1};
    else
      out.gen_degrees = {out.omega, out.omega};
  }
  else
  {
    out.gen_degrees = {std::min(v[2], v[0] + v[1]), std::max(v[2], v[0] + v[1])};
  }
  return out;
}

std::int64_t hf_local_syz(int mi, int mj, int mk, int d)
{
  std::int64_t total = 0;
  for (int g : local_syzygy_structure(mi, mj, mk).gen_degrees)
    total += binom2(d - g + 2);
  return total;
}

std::int64_t hp_quotient_triangle(int mi, int mj, int mk)
{
  if (mi > mj + mk + 1 || mj > mi + mk + 1 || mk > mi + mj + 1)
    throw OutsideFormulaRange("hp_quotient_triangle: a power exceeds the sum of the "
                              "other two by more than one");
  const int omega = omega_of(mi + mj + mk);
  return binom2(omega + 1) - binom2(omega + 1 - mi) - binom2(omega + 1 - mj) -
         binom2(omega + 1 - mk);
}

std::int64_t hf_quotient_triangle(int mi, int mj, int mk, int d)
{
  std::int64_t total = 0;
  for (int e = 0; e <= d; ++e)
  {
    std::int64_t ideal = 0;
    for (int mult : {mi, mj, mk})
      ideal += std::max(0, e - mult + 1);
    total += std::max<std::int64_t>(0, e + 1 - ideal);
  }
  return total;
}

std::int64_t lb(const Multiplicity& m, int d)
{
  std::int64_t value = -binom2(d + 2);
  for (int e = 0; e < 6; ++e)
    value += binom2(d + 2 - m[e]);
  for (const auto& t : kTriangles)
  {
    const auto v = triangle_values(m, t);
    value -= hf_local_syz(v[0], v[1], v[2], d);
  }
  return value;
}

std::int64_t lb_quotient_form(const Multiplicity& m, int d)
{
  std::int64_t value = 3 * binom2(d + 2);
  for (int e = 0; e < 6; ++e)
    value -= binom2(d + 2 - m[e]);
  for (const auto& t : kTriangles)
  {
    const auto v = triangle_values(m, t);
    value -= hf_quotient_triangle(v[0], v[1], v[2], d);
  }
  return value;
}

Rational d_max(const Multiplicity& m)
{
  Rational r(2 * m.total() - 9, 6);
  r.canonicalize();
  return r;
}

LBQuadratic lb_quadratic(const Multiplicity& m)
{
  if (!twelve_inequalities(m))
    throw OutsideFormulaRange("lb_quadratic: the twelve inequalities fail");
  LBQuadratic q;
  q.A = Rational(-3, 2);
  q.B = Rational(2 * m.total() - 9, 2);
  q.B.canonicalize();
  std::int64_t c = 3;
  for (int e = 0; e < 6; ++e)
    c -= binom2(m[e] - 1);
  for (const auto& t : kTriangles)
  {
    const auto v = triangle_values(m, t);
    c -= hp_quotient_triangle(v[0], v[1], v[2]);
  }
  q.C = static_cast<long>(c);
  return q;
}

Rational discriminant_sq(const Multiplicity& m)
{
  const auto q = lb_quadratic(m);
  return q.B * q.B - 4 * q.A * q.C;
}

std::int64_t p_stat(const Multiplicity& m)
{
  auto sq = [](std::int64_t x) { return x * x; };
  // Slots: 0=01 1=02 2=03 3=12 4=13 5=23.
  return sq(m[0] + m[5] - m[1] - m[4]) + sq(m[1] + m[4] - m[2] - m[3]) +
         sq(m[2] + m[3] - m[0] - m[5]);
}

int odd_triangle_count(const Multiplicity& m)
{
  int q = 0;
  for (const auto& t : kTriangles)
  {
    const auto v = triangle_values(m, t);
    q += (v[0] + v[1] + v[2]) % 2 != 0;
  }
  return q;
}

bool twelve_inequalities(const Multiplicity& m)
{
  for (const auto& t : kTriangles)
  {
    const auto v = triangle_values(m, t);
    if (v[0] > v[1] + v[2] + 1 || v[1] > v[0] + v[2] + 1 || v[2] > v[0] + v[1] + 1)
      return false;
  }
  return true;
}

std::optional<int> general_nonfree_test(const Multiplicity& m)
{
  if (!twelve_inequalities(m))
    throw OutsideFormulaRange("general_nonfree_test: the twelve inequalities fail");
  if (free_vertex(m))
    throw OutsideFormulaRange("general_nonfree_test: multiplicity has a free vertex");

  const bool divisible = m.total() % 3 == 0;
  const int q = odd_triangle_count(m);
  const auto p = p_stat(m);
  if (divisible)
  {
    if (q == 0 && p > 0)
      return 1;
    if (q == 2 && p > 6)
      return 2;
    if (q == 4 && p > 12)
      return 3;
  }
  else
  {
    if (q == 0)
      return 4;
    if (q == 2 && p > 2)
      return 5;
    if (q == 4 && p > 8)
      return 6;
  }
  return std::nullopt;
}

std::optional<LBPositive> first_positive_lb(const Multiplicity& m)
{
  const Rational top = d_max(m);
  Integer ceil_top;
  mpz_cdiv_q(ceil_top.get_mpz_t(), top.get_num_mpz_t(), top.get_den_mpz_t());
  const long last = ceil_top.get_si() + 2;
  for (long d = 0; d <= last; ++d)
  {
    const auto v = lb(m, static_cast<int>(d));
    if (v > 0)
      return LBPositive{static_cast<int>(d), v};
  }
  return std::nullopt;
}

} // namespace multibraid
