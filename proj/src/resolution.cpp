#include "multibraid/resolution.hpp"

#include "multibraid/classifier.hpp"
#include "multibraid/exactalg.hpp"
#include "multibraid/obstruction.hpp"
#include "multibraid/oracle.hpp"

#include <algorithm>
#include <map>

namespace multibraid
{

BettiTable betti_table_free(const Multiplicity& m, const AnnWitness& witness)
{
  m.require_positive();
  const auto& dec = witness.decomposition;
  if (dec.reconstruct() != m)
    throw ResolutionUnavailable(ResolutionUnavailable::Reason::BadWitness,
                                "ANN decomposition does not reproduce the multiplicity");
  if (!is_elimination_ordering(dec.graph, witness.ordering))
    throw ResolutionUnavailable(ResolutionUnavailable::Reason::BadWitness,
                                "witness ordering is not a signed-elimination ordering");
  // Counterexample outside this range: (1,1,1,4,4,4) has top degrees 5,5,5
  // here, but the Hilbert function forces 3,6,6.
  if (!twelve_inequalities(m))
    throw ResolutionUnavailable(ResolutionUnavailable::Reason::RedundantPower,
                                "table unavailable: some m_ij exceeds m_ik + m_jk + 1");

  BettiTable t;
  t.step0.assign(m.m.begin(), m.m.end());
  for (const auto& tri : kTriangles)
  {
    const auto e = triangle_edges(tri);
    // 2 - a copies of Omega and a copies of Omega + 1.
    const auto s = local_syzygy_structure(m.at(e[0]), m.at(e[1]), m.at(e[2]));
    t.step1.insert(t.step1.end(), s.gen_degrees.begin(), s.gen_degrees.end());
  }
  const auto deg = tilde_degrees(dec.graph, witness.ordering);
  for (int d : deg)
    t.step2.push_back(dec.N() + d);
  return t;
}

BettiTable betti_table_free(const Multiplicity& m)
{
  m.require_positive();
  if (const auto ann = ann_free(m))
    return betti_table_free(m, AnnWitness{ann->decomposition, ann->ordering});
  if (free_vertex(m))
    throw ResolutionUnavailable(ResolutionUnavailable::Reason::FreeVertexOnly,
                                "table unavailable: free only through a free vertex");
  throw ResolutionUnavailable(ResolutionUnavailable::Reason::NotFree, "not free");
}

EulerCheck euler_hf_check(const Multiplicity& m, const BettiTable& table, int dmax)
{
  auto graded = [](const std::vector<int>& shifts, int d) {
    std::int64_t s = 0;
    for (int g : shifts)
      s += binom2(d - g + 2);
    return s;
  };
  const auto ideal = PowerIdeal::full(m);
  for (int d = 0; d <= dmax; ++d)
  {
    const std::int64_t euler = binom2(d + 2) - graded(table.step0, d) +
                               graded(table.step1, d) - graded(table.step2, d);
    if (euler != hf_quotient(ideal, d))
      return {false, d};
  }
  return {};
}

bool minimality_probe(const Multiplicity& m, const BettiTable& table)
{
  if (table.step0 != std::vector<int>(m.m.begin(), m.m.end()))
    throw std::invalid_argument("minimality_probe: table does not belong to this multiplicity");
  const auto full = PowerIdeal::full(m);
  for (std::size_t e = 0; e < 6; ++e)
  {
    PowerIdeal rest = full;
    rest.generators.erase(rest.generators.begin() + static_cast<std::ptrdiff_t>(e));
    const int d = m.m[e];
    if (hf_ideal(rest, d) == hf_ideal(full, d))
      return false;
  }
  return true;
}

std::string to_text(const BettiTable& table)
{
  auto line = [](int step, const std::vector<int>& shifts) {
    std::map<int, int> counts;
    for (int g : shifts)
      ++counts[g];
    std::string s = std::to_string(step) + ":";
    bool first = true;
    for (const auto& [g, n] : counts)
    {
      s += first ? " " : " + ";
      first = false;
      s += "S(-" + std::to_string(g) + ")";
      if (n > 1)
        s += "^" + std::to_string(n);
    }
    return s + "\n";
  };
  return line(0, table.step0) + line(1, table.step1) + line(2, table.step2);
}

} // namespace multibraid
