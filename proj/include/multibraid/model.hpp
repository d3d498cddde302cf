#pragma once

// Combinatorial data on the complete graph K4: multiplicities on its six
// edges, signed graphs, ANN decompositions and classification results.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace multibraid
{

struct Edge
{
  int i = 0;
  int j = 1;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Triangle
{
  int i = 0;
  int j = 1;
  int k = 2;
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// Edges in lexicographic order; position e is the slot m[e] of a multiplicity.
inline constexpr std::array<Edge, 6> kEdges{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline constexpr std::array<Triangle, 4> kTriangles{
    {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

/// Slot of the edge {i, j} (either order).  Throws for i == j or out of range.
int edge_index(int i, int j);
inline int edge_index(Edge e) { return edge_index(e.i, e.j); }

Edge opposite_edge(Edge e);

/// The three edges {ij, ik, jk} of a triangle, lexicographic.
std::array<Edge, 3> triangle_edges(Triangle t);

/// Raised when a multiplicity has a zero or negative entry where positive
/// entries are required, or cannot be parsed.
class InvalidMultiplicity : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Images of the vertices: perm[v] is where vertex v goes.
using Permutation = std::array<int, 4>;

struct Multiplicity
{
  /// (m01, m02, m03, m12, m13, m23), also written (a, b, c, d, e, f).
  std::array<int, 6> m{};

  int& operator[](int e) { return m[static_cast<std::size_t>(e)]; }
  int operator[](int e) const { return m[static_cast<std::size_t>(e)]; }
  int at(int i, int j) const { return (*this)[edge_index(i, j)]; }
  int at(Edge e) const { return (*this)[edge_index(e)]; }

  int total() const;
  int min() const;
  int max() const;

  /// Throws InvalidMultiplicity unless every entry is >= 1.
  void require_positive() const;

  /// Parses "a,b,c,d,e,f" (whitespace tolerated).
  static Multiplicity parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
  friend auto operator<=>(const Multiplicity&, const Multiplicity&) = default;
};

/// m'_{perm(i) perm(j)} = m_{ij}.
Multiplicity relabel(const Multiplicity& m, const Permutation& perm);

/// q o p, i.e. apply p first.
Permutation compose(const Permutation& q, const Permutation& p);

enum class Sign : std::int8_t
{
  Minus = -1,
  Absent = 0,
  Plus = 1,
};

struct SignedGraph4
{
  std::array<Sign, 6> sign{};

  Sign at(int i, int j) const { return sign[static_cast<std::size_t>(edge_index(i, j))]; }
  /// +1, -1 or 0.
  int value(int e) const { return static_cast<int>(sign[static_cast<std::size_t>(e)]); }
  bool has_edge(int i, int j) const { return at(i, j) != Sign::Absent; }
  bool has_plus() const;
  bool has_minus() const;

  /// Builds a graph from lists of edges such as {"03", "12"}.
  static SignedGraph4 from_edges(std::initializer_list<std::string_view> plus,
                                 std::initializer_list<std::string_view> minus);
  SignedGraph4 swapped() const;
  SignedGraph4 relabeled(const Permutation& perm) const;

  friend bool operator==(const SignedGraph4&, const SignedGraph4&) = default;
  friend auto operator<=>(const SignedGraph4&, const SignedGraph4&) = default;
};

/// m_ij = 2k + n_i + n_j + sign_ij.
struct AnnDecomposition
{
  int k = 0;
  std::array<int, 4> n{};
  SignedGraph4 graph;

  int N() const { return 4 * k + n[0] + n[1] + n[2] + n[3]; }
  Multiplicity reconstruct() const;

  friend bool operator==(const AnnDecomposition&, const AnnDecomposition&) = default;
};

/// nu[v] is the elimination position of vertex v.
using EliminationOrdering = std::array<int, 4>;

enum class Verdict
{
  Free,
  NonFree,
};

struct FreeVertexWitness
{
  int vertex = 0;
  friend bool operator==(const FreeVertexWitness&, const FreeVertexWitness&) = default;
};

struct AnnWitness
{
  AnnDecomposition decomposition;
  EliminationOrdering ordering{};
  friend bool operator==(const AnnWitness&, const AnnWitness&) = default;
};

using Witness = std::variant<FreeVertexWitness, AnnWitness>;

/// Bullet number (1..6) of the parity / residue non-freeness test.
struct GeneralNonFreeCase
{
  int bullet = 0;
  friend bool operator==(const GeneralNonFreeCase&, const GeneralNonFreeCase&) = default;
};

/// A degree where the closed-form lower bound on the syzygy gap is positive.
struct LBPositive
{
  int degree = 0;
  std::int64_t gap = 0;
  friend bool operator==(const LBPositive&, const LBPositive&) = default;
};

/// Non-free because neither a free vertex nor a free ANN structure exists.
struct NoFreeStructure
{
  friend bool operator==(const NoFreeStructure&, const NoFreeStructure&) = default;
};

/// The oracle found syzygies that are not locally generated.
struct OracleGap
{
  int degree = 0;
  std::int64_t gap = 0;
  friend bool operator==(const OracleGap&, const OracleGap&) = default;
};

using Certificate = std::variant<GeneralNonFreeCase, LBPositive, NoFreeStructure, OracleGap>;

struct ClassificationResult
{
  Verdict verdict = Verdict::Free;
  std::optional<Witness> witness;
  std::optional<std::array<int, 4>> exponents;
  std::optional<Certificate> certificate;

  friend bool operator==(const ClassificationResult&, const ClassificationResult&) = default;
};

std::string_view to_string(Verdict v);

} // namespace multibraid
