// multibraid: freeness of multiplicities on the A3 braid arrangement.
//
//   multibraid classify --m 3,2,3,3,2,3 --oracle
//   multibraid sweep --max 4 --oracle-max 4 --out sweep.csv
//   multibraid grid --pattern star0 --rmax 12 --smax 12 --format svg --out star0.svg
//   multibraid resolve --m 2,2,2,2,2,2
//   multibraid deleted --m 3,2,2,2,2
//   multibraid oracle --m 3,2,3,3,2,3 --max-degree 12

#include "multibraid/classifier.hpp"
#include "multibraid/grid.hpp"
#include "multibraid/oracle.hpp"
#include "multibraid/parallel.hpp"
#include "multibraid/report.hpp"
#include "multibraid/resolution.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace
{
using namespace multibraid;

/// Writes to --out when given, stdout otherwise.
void emit(const std::string& text, const std::string& out_path)
{
  if (out_path.empty())
  {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f)
    throw std::runtime_error("cannot write '" + out_path + "'");
  f << text;
  if (!f)
    throw std::runtime_error("cannot write '" + out_path + "'");
}

Multiplicity parse_positive(const std::string& text)
{
  const auto m = Multiplicity::parse(text);
  m.require_positive();
  return m;
}

std::optional<int> degree_flag(int value) { return value >= 0 ? std::optional(value) : std::nullopt; }

int run_classify(const std::string& mtext, bool with_oracle, int max_degree,
                 const std::string& format, const std::string& out)
{
  const auto m = parse_positive(mtext);
  const auto r = classify(m);
  std::optional<ClassificationResult> o;
  if (with_oracle)
    o = oracle_classify(m, degree_flag(max_degree));
  if (format == "json")
  {
    nlohmann::json j{{"m", to_json(m)}, {"result", to_json(r)}};
    if (o)
    {
      j["oracle"] = to_json(*o);
      j["agree"] = o->verdict == r.verdict;
    }
    emit(j.dump(2) + "\n", out);
    return 0;
  }
  if (format == "csv")
  {
    emit(std::string(kCsvHeader) + "\n" + csv_row(m, r, o) + "\n", out);
    return 0;
  }
  emit(summary_line(r) + (o ? oracle_suffix(r, *o) : "") + "\n", out);
  return 0;
}

int run_sweep(int max, int oracle_max, int max_degree, const std::string& out)
{
  if (max < 1)
    throw std::invalid_argument("--max must be ≥ 1");
  std::size_t total = 1;
  for (int i = 0; i < 6; ++i)
    total *= static_cast<std::size_t>(max);
  const auto rows = parallel_map(total, [&](std::size_t idx) {
    Multiplicity m;
    std::size_t rest = idx;
    for (int e = 5; e >= 0; --e)
    {
      m[e] = static_cast<int>(rest % static_cast<std::size_t>(max)) + 1;
      rest /= static_cast<std::size_t>(max);
    }
    const auto r = classify(m);
    std::optional<ClassificationResult> o;
    if (m.max() <= oracle_max)
      o = oracle_classify(m, degree_flag(max_degree));
    return csv_row(m, r, o);
  });
  std::string text = std::string(kCsvHeader) + "\n";
  for (const auto& row : rows)
    text += row + "\n";
  emit(text, out);
  return 0;
}

int run_grid(const std::string& pattern, int rmax, int smax, int oracle_max,
             const std::string& format, const std::string& out)
{
  const auto spec = make_grid_spec(pattern, rmax, smax);
  const auto cells = compute_grid(spec, oracle_max);
  if (format == "csv")
    emit(render_csv(spec, cells), out);
  else if (format == "svg")
    emit(render_svg(spec, cells), out);
  else if (format == "json")
  {
    nlohmann::json j{{"pattern", spec.name},
                     {"edges", std::string(spec.pattern.begin(), spec.pattern.end())},
                     {"cells", nlohmann::json::array()}};
    for (const auto& c : cells)
    {
      nlohmann::json cell{{"r", c.r}, {"s", c.s}, {"verdict", to_string(c.verdict)}};
      if (c.oracle)
        cell["oracle_verdict"] = to_string(*c.oracle);
      j["cells"].push_back(cell);
    }
    emit(j.dump(2) + "\n", out);
  }
  else
    emit(render_ascii(spec, cells), out);
  return 0;
}

int run_resolve(const std::string& mtext, const std::string& format, const std::string& out)
{
  const auto m = parse_positive(mtext);
  const auto table = betti_table_free(m);
  const int dmax = 2 * m.max() + 4;
  const auto check = euler_hf_check(m, table, dmax);
  const bool minimal = minimality_probe(m, table);
  if (format == "json")
  {
    nlohmann::json j{{"m", to_json(m)},
                     {"table", to_json(table)},
                     {"euler_check", check.ok},
                     {"checked_through", dmax},
                     {"minimal_generators", minimal}};
    if (check.first_failure)
      j["first_failure"] = *check.first_failure;
    emit(j.dump(2) + "\n", out);
    return 0;
  }
  std::ostringstream s;
  s << to_text(table);
  s << "Euler characteristic check through degree " << dmax << ": "
    << (check.ok ? "PASS" : "FAIL at degree " + std::to_string(*check.first_failure)) << "\n";
  s << "generators minimal: " << (minimal ? "yes" : "no") << "\n";
  emit(s.str(), out);
  return check.ok ? 0 : 3;
}

int run_deleted(const std::string& text, const std::string& out)
{
  std::vector<int> v;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');)
  {
    try
    {
      std::size_t used = 0;
      v.push_back(std::stoi(tok, &used));
      if (tok.find_first_not_of(" \t", used) != std::string::npos)
        throw std::invalid_argument(tok);
    }
    catch (const std::exception&)
    {
      throw InvalidMultiplicity("malformed multiplicity '" + text + "': expected five integers");
    }
  }
  if (v.size() != 5)
    throw InvalidMultiplicity("malformed multiplicity '" + text + "': expected five integers");
  const bool free = classify_deleted_a3(v[0], v[1], v[2], v[3], v[4]);
  emit(std::string(free ? "FREE" : "NON-FREE") + "\n", out);
  return 0;
}

int run_oracle(const std::string& mtext, int max_degree, const std::string& format,
               const std::string& out)
{
  const auto m = parse_positive(mtext);
  const int top = max_degree >= 0 ? max_degree : default_degree_bound(m);
  nlohmann::json degrees = nlohmann::json::array();
  std::ostringstream s;
  s << "d  global  local  gap\n";
  for (int d = 0; d <= top; ++d)
  {
    const auto c = compare_degree(m, d);
    degrees.push_back({{"d", d}, {"global", c.global}, {"local", c.local}, {"gap", c.gap()}});
    s << d << "  " << c.global << "  " << c.local << "  " << c.gap() << "\n";
  }
  const auto r = oracle_classify(m, top);
  s << summary_line(r) << "\n";
  if (format == "json")
    emit(nlohmann::json{{"m", to_json(m)}, {"degrees", degrees}, {"result", to_json(r)}}.dump(2) +
             "\n",
         out);
  else
    emit(s.str(), out);
  return 0;
}
} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Freeness of multiplicities on the A3 braid arrangement"};
  app.require_subcommand(1);

  std::string mtext, format = "text", out, pattern = "star-triangle";
  bool with_oracle = false;
  int max = 4, oracle_max = 0, max_degree = -1, rmax = 12, smax = 12;
  const std::vector<std::string> formats{"text", "ascii", "csv", "svg", "json"};

  auto* classify_cmd = app.add_subcommand("classify", "Classify one multiplicity");
  classify_cmd->add_option("--m", mtext, "m01,m02,m03,m12,m13,m23")->required();
  classify_cmd->add_flag("--oracle", with_oracle, "Cross-check with the syzygy oracle");
  classify_cmd->add_option("--max-degree", max_degree, "Oracle degree bound");
  classify_cmd->add_option("--format", format)->check(CLI::IsMember(formats));
  classify_cmd->add_option("--out", out, "Output path");

  auto* sweep_cmd = app.add_subcommand("sweep", "Classify every m in {1..max}^6 as CSV");
  sweep_cmd->add_option("--max", max)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--oracle-max", oracle_max, "Run the oracle when all entries <= this");
  sweep_cmd->add_option("--max-degree", max_degree, "Oracle degree bound");
  sweep_cmd->add_option("--out", out, "Output path");

  auto* grid_cmd = app.add_subcommand("grid", "Two-valued (r, s) grid");
  grid_cmd->add_option("--pattern", pattern,
                       "star0, adjacent-pair, star-triangle, path, matching, or six letters r/s");
  grid_cmd->add_option("--rmax", rmax)->check(CLI::PositiveNumber);
  grid_cmd->add_option("--smax", smax)->check(CLI::PositiveNumber);
  grid_cmd->add_option("--max", max, "Sets both --rmax and --smax");
  grid_cmd->add_option("--oracle-max", oracle_max, "Run the oracle when r, s <= this");
  grid_cmd->add_option("--format", format)->check(CLI::IsMember(formats));
  grid_cmd->add_option("--out", out, "Output path");

  auto* resolve_cmd = app.add_subcommand("resolve", "Betti table of a free ANN multiplicity");
  resolve_cmd->add_option("--m", mtext, "m01,m02,m03,m12,m13,m23")->required();
  resolve_cmd->add_option("--format", format)->check(CLI::IsMember(formats));
  resolve_cmd->add_option("--out", out, "Output path");

  auto* deleted_cmd = app.add_subcommand("deleted", "Deleted A3 (no edge 23)");
  deleted_cmd->add_option("--m", mtext, "a,b,c,d,e")->required();
  deleted_cmd->add_option("--out", out, "Output path");

  auto* oracle_cmd = app.add_subcommand("oracle", "Degree-by-degree syzygy comparison");
  oracle_cmd->add_option("--m", mtext, "m01,m02,m03,m12,m13,m23")->required();
  oracle_cmd->add_option("--max-degree", max_degree, "Degree bound");
  oracle_cmd->add_option("--format", format)->check(CLI::IsMember(formats));
  oracle_cmd->add_option("--out", out, "Output path");

  CLI11_PARSE(app, argc, argv);

  try
  {
    if (*classify_cmd)
      return run_classify(mtext, with_oracle, max_degree, format, out);
    if (*sweep_cmd)
      return run_sweep(max, oracle_max, max_degree, out);
    if (*grid_cmd)
    {
      if (grid_cmd->count("--max"))
        rmax = smax = max;
      return run_grid(pattern, rmax, smax, oracle_max, format, out);
    }
    if (*resolve_cmd)
      return run_resolve(mtext, format, out);
    if (*deleted_cmd)
      return run_deleted(mtext, out);
    if (*oracle_cmd)
      return run_oracle(mtext, max_degree, format, out);
  }
  catch (const ResolutionUnavailable& e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  catch (const std::exception& e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
