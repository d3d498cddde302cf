#pragma once

// Two-valued multiplicities: every edge carries r or s according to a
// pattern, and the (r, s) plane is coloured free / non-free.

#include "multibraid/model.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace multibraid
{

struct GridSpec
{
  std::string name;
  /// 'r' or 's' per edge in the order 01 02 03 12 13 23.
  std::array<char, 6> pattern{};
  int rmax = 1;
  int smax = 1;
};

/// Named patterns:
///   star0          (s,r,r,r,r,r)
///   adjacent-pair  (s,s,r,r,r,r)
///   star-triangle  (s,s,s,r,r,r)  s on the star of vertex 0
///   path           (r,r,s,s,s,r)  s on the path 0-3-1-2
///   matching       (r,r,s,s,r,r)  s on the perfect matching {03, 12}
/// Any six-letter word over {r, s} is accepted as a custom pattern.
GridSpec make_grid_spec(std::string_view pattern, int rmax, int smax);

std::vector<std::string> named_grid_patterns();

Multiplicity grid_cell(const GridSpec& spec, int r, int s);

struct GridCell
{
  int r = 1;
  int s = 1;
  Verdict verdict = Verdict::Free;
  std::optional<Verdict> oracle;
};

/// Row-major over s then r, both ascending.  Runs the oracle as well when
/// both r and s are at most `oracle_max`.
std::vector<GridCell> compute_grid(const GridSpec& spec, int oracle_max = 0);

std::string render_ascii(const GridSpec& spec, const std::vector<GridCell>& cells);
std::string render_csv(const GridSpec& spec, const std::vector<GridCell>& cells);
std::string render_svg(const GridSpec& spec, const std::vector<GridCell>& cells);

} // namespace multibraid
