#pragma once

// Closed-form freeness classification on K4: a multiplicity is free exactly
// when it has a free vertex or is a free ANN multiplicity.

#include "multibraid/model.hpp"

#include <array>
#include <optional>
#include <vector>

namespace multibraid
{

/// Smallest vertex i with m_jk >= m_ij + m_ik - 1 for both pairs {j,k}
/// avoiding i.
std::optional<int> free_vertex(const Multiplicity& m);

/// Every (k, n, G) with m_ij = 2k + n_i + n_j + m_G(ij), in scan order:
/// k ascending, then sign vectors in base-3 order (digit 0, +1, -1) with the
/// 01 edge most significant.
std::vector<AnnDecomposition> ann_decompositions(const Multiplicity& m);

/// Whether nu satisfies both elimination conditions for every later vertex.
bool is_elimination_ordering(const SignedGraph4& g, const EliminationOrdering& nu);

/// First ordering (lexicographic in nu(0..3)) satisfying both elimination
/// conditions, or nullopt.
std::optional<EliminationOrdering> is_signed_eliminable(const SignedGraph4& g);

/// (deg~_1, deg~_2, deg~_3): signed degree of the i-th eliminated vertex
/// inside the subgraph induced on positions 0..i.
std::array<int, 3> tilde_degrees(const SignedGraph4& g, const EliminationOrdering& nu);

struct AnnFree
{
  AnnDecomposition decomposition;
  EliminationOrdering ordering{};
  std::array<int, 4> exponents{};
};

/// Exponents (0, N + deg~_1, N + deg~_2, N + deg~_3) of the first
/// decomposition that meets one of the three ANN hypotheses and whose graph
/// is signed-eliminable.
std::optional<AnnFree> ann_free(const Multiplicity& m);

/// Throws InvalidMultiplicity on entries < 1.
ClassificationResult classify(const Multiplicity& m);

std::optional<std::array<int, 4>> exponents(const Multiplicity& m);

/// The deleted A3 (K4 without the edge 23): free iff c+e <= a+1 or b+d <= a+1.
bool classify_deleted_a3(int a, int b, int c, int d, int e);

} // namespace multibraid
