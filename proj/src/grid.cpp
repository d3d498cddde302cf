#include "multibraid/grid.hpp"

#include "multibraid/classifier.hpp"
#include "multibraid/oracle.hpp"
#include "multibraid/parallel.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace multibraid
{

namespace
{
constexpr std::array<std::pair<std::string_view, std::string_view>, 5> kNamed{{
    {"star0", "srrrrr"},
    {"adjacent-pair", "ssrrrr"},
    {"star-triangle", "sssrrr"},
    {"path", "rrsssr"},
    {"matching", "rrssrr"},
}};
} // namespace

std::vector<std::string> named_grid_patterns()
{
  std::vector<std::string> out;
  for (const auto& [name, _] : kNamed)
    out.emplace_back(name);
  return out;
}

GridSpec make_grid_spec(std::string_view pattern, int rmax, int smax)
{
  if (rmax < 1 || smax < 1)
    throw std::invalid_argument("grid bounds must be ≥ 1");
  std::string word(pattern);
  for (const auto& [name, letters] : kNamed)
    if (name == pattern)
      word = letters;
  if (word.size() != 6 || word.find_first_not_of("rs") != std::string::npos)
    throw std::invalid_argument("unknown grid pattern '" + std::string(pattern) +
                                "': use a named pattern or six letters from {r,s}");
  GridSpec spec{std::string(pattern), {}, rmax, smax};
  std::copy(word.begin(), word.end(), spec.pattern.begin());
  return spec;
}

Multiplicity grid_cell(const GridSpec& spec, int r, int s)
{
  Multiplicity m;
  for (std::size_t e = 0; e < 6; ++e)
    m.m[e] = spec.pattern[e] == 'r' ? r : s;
  return m;
}

std::vector<GridCell> compute_grid(const GridSpec& spec, int oracle_max)
{
  const auto n = static_cast<std::size_t>(spec.rmax) * static_cast<std::size_t>(spec.smax);
  return parallel_map(n, [&](std::size_t idx) {
    GridCell c;
    c.r = static_cast<int>(idx % static_cast<std::size_t>(spec.rmax)) + 1;
    c.s = static_cast<int>(idx / static_cast<std::size_t>(spec.rmax)) + 1;
    const auto m = grid_cell(spec, c.r, c.s);
    c.verdict = classify(m).verdict;
    if (c.r <= oracle_max && c.s <= oracle_max)
      c.oracle = oracle_classify(m).verdict;
    return c;
  });
}

std::string render_ascii(const GridSpec& spec, const std::vector<GridCell>& cells)
{
  // s grows upwards, r to the right, as in a plot.
  std::ostringstream out;
  out << "pattern " << spec.name << " (";
  for (std::size_t e = 0; e < 6; ++e)
    out << (e ? "," : "") << spec.pattern[e];
  out << "), o = free, x = non-free\n";
  for (int s = spec.smax; s >= 1; --s)
  {
    out << (s < 10 ? " " : "") << s << " |";
    for (int r = 1; r <= spec.rmax; ++r)
    {
      const auto& c = cells[static_cast<std::size_t>((s - 1) * spec.rmax + (r - 1))];
      out << ' ' << (c.verdict == Verdict::Free ? 'o' : 'x');
    }
    out << '\n';
  }
  out << "    ";
  for (int r = 1; r <= spec.rmax; ++r)
    out << "--";
  out << "\n  s/r";
  for (int r = 1; r <= spec.rmax; ++r)
    out << ' ' << r % 10;
  out << '\n';
  return out.str();
}

std::string render_csv(const GridSpec&, const std::vector<GridCell>& cells)
{
  std::ostringstream out;
  out << "r,s,verdict,oracle_verdict\n";
  for (const auto& c : cells)
  {
    out << c.r << ',' << c.s << ',' << to_string(c.verdict) << ',';
    if (c.oracle)
      out << to_string(*c.oracle);
    out << '\n';
  }
  return out.str();
}

std::string render_svg(const GridSpec& spec, const std::vector<GridCell>& cells)
{
  constexpr int step = 24, margin = 40, radius = 6;
  const int width = margin * 2 + step * (spec.rmax - 1);
  const int height = margin * 2 + step * (spec.smax - 1);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "  <title>" << spec.name << ": hollow = free, solid = non-free</title>\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& c : cells)
  {
    const int x = margin + step * (c.r - 1);
    const int y = height - margin - step * (c.s - 1);
    out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << radius
        << "\" stroke=\"black\" stroke-width=\"1.5\" fill=\""
        << (c.verdict == Verdict::Free ? "none" : "black") << "\"/>\n";
  }
  out << "  <text x=\"" << width / 2 << "\" y=\"" << height - 8
      << "\" font-size=\"12\" text-anchor=\"middle\">r</text>\n";
  out << "  <text x=\"10\" y=\"" << height / 2
      << "\" font-size=\"12\" text-anchor=\"middle\">s</text>\n";
  out << "</svg>\n";
  return out.str();
}

} // namespace multibraid
