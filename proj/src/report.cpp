#include "multibraid/report.hpp"

#include <stdexcept>

namespace multibraid
{

using nlohmann::json;

namespace
{
std::string verdict_key(Verdict v) { return v == Verdict::Free ? "free" : "non-free"; }

Verdict verdict_from_key(const std::string& s)
{
  if (s == "free")
    return Verdict::Free;
  if (s == "non-free")
    return Verdict::NonFree;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

std::string tuple_text(const std::array<int, 4>& v)
{
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) +
         "," + std::to_string(v[3]) + ")";
}

std::string edge_name(int e)
{
  const auto [i, j] = kEdges[static_cast<std::size_t>(e)];
  return std::to_string(i) + std::to_string(j);
}

std::string graph_text(const SignedGraph4& g)
{
  std::string plus, minus;
  for (int e = 0; e < 6; ++e)
  {
    std::string& dst = g.value(e) > 0 ? plus : minus;
    if (g.value(e) == 0)
      continue;
    if (!dst.empty())
      dst += ",";
    dst += edge_name(e);
  }
  return "G{+:" + (plus.empty() ? std::string("none") : plus) +
         " -:" + (minus.empty() ? std::string("none") : minus) + "}";
}
} // namespace

json to_json(const Multiplicity& m) { return json(m.m); }

Multiplicity multiplicity_from_json(const json& j)
{
  if (!j.is_array() || j.size() != 6)
    throw InvalidMultiplicity("multiplicity JSON must be an array of six integers");
  Multiplicity m;
  for (std::size_t e = 0; e < 6; ++e)
    m.m[e] = j.at(e).get<int>();
  return m;
}

json to_json(const ClassificationResult& r)
{
  json out;
  out["verdict"] = verdict_key(r.verdict);
  out["witness"] = nullptr;
  if (r.witness)
  {
    if (const auto* fv = std::get_if<FreeVertexWitness>(&*r.witness))
      out["witness"] = {{"kind", "free_vertex"}, {"vertex", fv->vertex}};
    else
    {
      const auto& ann = std::get<AnnWitness>(*r.witness);
      std::array<int, 6> signs{};
      for (int e = 0; e < 6; ++e)
        signs[static_cast<std::size_t>(e)] = ann.decomposition.graph.value(e);
      out["witness"] = {{"kind", "ann"},
                        {"k", ann.decomposition.k},
                        {"n", ann.decomposition.n},
                        {"signs", signs},
                        {"ordering", ann.ordering}};
    }
  }
  out["exponents"] = r.exponents ? json(*r.exponents) : json(nullptr);
  out["certificate"] = nullptr;
  if (r.certificate)
  {
    out["certificate"] = std::visit(
        [](const auto& c) -> json {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, GeneralNonFreeCase>)
            return {{"kind", "general_nonfree_case"}, {"bullet", c.bullet}};
          else if constexpr (std::is_same_v<T, LBPositive>)
            return {{"kind", "lb_positive"}, {"degree", c.degree}, {"gap", c.gap}};
          else if constexpr (std::is_same_v<T, NoFreeStructure>)
            return {{"kind", "no_free_structure"}};
          else
            return {{"kind", "oracle_gap"}, {"degree", c.degree}, {"gap", c.gap}};
        },
        *r.certificate);
  }
  return out;
}

ClassificationResult result_from_json(const json& j)
{
  ClassificationResult r;
  r.verdict = verdict_from_key(j.at("verdict").get<std::string>());
  if (const auto& w = j.at("witness"); !w.is_null())
  {
    const auto kind = w.at("kind").get<std::string>();
    if (kind == "free_vertex")
      r.witness = FreeVertexWitness{w.at("vertex").get<int>()};
    else if (kind == "ann")
    {
      AnnWitness a;
      a.decomposition.k = w.at("k").get<int>();
      a.decomposition.n = w.at("n").get<std::array<int, 4>>();
      const auto signs = w.at("signs").get<std::array<int, 6>>();
      for (std::size_t e = 0; e < 6; ++e)
      {
        if (signs[e] < -1 || signs[e] > 1)
          throw std::invalid_argument("edge sign must be -1, 0 or 1");
        a.decomposition.graph.sign[e] = static_cast<Sign>(signs[e]);
      }
      a.ordering = w.at("ordering").get<EliminationOrdering>();
      r.witness = a;
    }
    else
      throw std::invalid_argument("unknown witness kind '" + kind + "'");
  }
  if (const auto& e = j.at("exponents"); !e.is_null())
    r.exponents = e.get<std::array<int, 4>>();
  if (const auto& c = j.at("certificate"); !c.is_null())
  {
    const auto kind = c.at("kind").get<std::string>();
    if (kind == "general_nonfree_case")
      r.certificate = GeneralNonFreeCase{c.at("bullet").get<int>()};
    else if (kind == "lb_positive")
      r.certificate = LBPositive{c.at("degree").get<int>(), c.at("gap").get<std::int64_t>()};
    else if (kind == "no_free_structure")
      r.certificate = NoFreeStructure{};
    else if (kind == "oracle_gap")
      r.certificate = OracleGap{c.at("degree").get<int>(), c.at("gap").get<std::int64_t>()};
    else
      throw std::invalid_argument("unknown certificate kind '" + kind + "'");
  }
  return r;
}

json to_json(const BettiTable& t)
{
  return {{"step0", t.step0}, {"step1", t.step1}, {"step2", t.step2}};
}

BettiTable betti_from_json(const json& j)
{
  return {j.at("step0").get<std::vector<int>>(), j.at("step1").get<std::vector<int>>(),
          j.at("step2").get<std::vector<int>>()};
}

std::string witness_kind(const ClassificationResult& r)
{
  if (!r.witness)
    return "";
  return std::holds_alternative<FreeVertexWitness>(*r.witness) ? "free_vertex" : "ann";
}

std::string certificate_kind(const ClassificationResult& r)
{
  if (!r.certificate)
    return "";
  return to_json(r).at("certificate").at("kind").get<std::string>();
}

std::string summary_line(const ClassificationResult& r)
{
  std::string s(to_string(r.verdict));
  if (r.verdict == Verdict::Free)
  {
    if (r.witness)
    {
      if (const auto* fv = std::get_if<FreeVertexWitness>(&*r.witness))
        s += ", witness: free vertex " + std::to_string(fv->vertex);
      else
      {
        const auto& a = std::get<AnnWitness>(*r.witness);
        const auto& dec = a.decomposition;
        s += ", witness: ANN k=" + std::to_string(dec.k) + " n=" + tuple_text(dec.n) + " " +
             graph_text(dec.graph) + " ordering " + tuple_text(a.ordering);
      }
    }
    s += r.exponents ? ", exponents " + tuple_text(*r.exponents) : ", exponents unavailable";
    return s;
  }
  if (!r.certificate)
    return s;
  return s + " (" +
         std::visit(
             [](const auto& c) -> std::string {
               using T = std::decay_t<decltype(c)>;
               if constexpr (std::is_same_v<T, GeneralNonFreeCase>)
                 return "general non-free case " + std::to_string(c.bullet);
               else if constexpr (std::is_same_v<T, LBPositive>)
                 return "LB(m," + std::to_string(c.degree) + ") = " + std::to_string(c.gap) +
                        " > 0";
               else if constexpr (std::is_same_v<T, NoFreeStructure>)
                 return "no free vertex and no free ANN structure";
               else
                 return "syzygy gap at degree " + std::to_string(c.degree) + " (dim " +
                        std::to_string(c.gap) + ")";
             },
             *r.certificate) +
         ")";
}

std::string oracle_suffix(const ClassificationResult& closed_form,
                          const ClassificationResult& oracle)
{
  std::string s = "; oracle ";
  if (oracle.certificate)
    if (const auto* g = std::get_if<OracleGap>(&*oracle.certificate))
      s += "gap at degree " + std::to_string(g->degree) + " (dim " + std::to_string(g->gap) + ")";
  if (oracle.verdict == Verdict::Free)
    s += "finds all syzygies locally generated";
  s += closed_form.verdict == oracle.verdict ? "; AGREE" : "; DISAGREE";
  return s;
}

std::string csv_row(const Multiplicity& m, const ClassificationResult& r,
                    const std::optional<ClassificationResult>& oracle)
{
  std::string row = m.to_string();
  row += ",";
  row += to_string(r.verdict);
  row += "," + witness_kind(r) + "," + certificate_kind(r) + ",";
  if (r.exponents)
    for (std::size_t i = 0; i < 4; ++i)
      row += (i ? " " : "") + std::to_string((*r.exponents)[i]);
  row += ",";
  if (oracle)
  {
    row += to_string(oracle->verdict);
    row += oracle->verdict == r.verdict ? ",true" : ",false";
  }
  else
    row += ",";
  return row;
}

} // namespace multibraid
