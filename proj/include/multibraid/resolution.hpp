#pragma once

// Graded free resolutions of S/J(0123) for free ANN multiplicities:
//   0 <- S/J <- S <- (+) S(-m_ij) <- (+) triangle syzygies <- (+) S(-N - deg~_i) <- 0

#include "multibraid/model.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace multibraid
{

/// Why no table can be produced.
class ResolutionUnavailable : public std::runtime_error
{
public:
  enum class Reason
  {
    NotFree,
    FreeVertexOnly,
    BadWitness,
    /// Some m_ij > m_ik + m_jk + 1: a power is redundant and the table's top
    /// degrees no longer match N + deg~_i.
    RedundantPower,
  };

  ResolutionUnavailable(Reason reason, const std::string& what)
      : std::runtime_error(what), reason_(reason)
  {
  }
  Reason reason() const { return reason_; }

private:
  Reason reason_;
};

struct BettiTable
{
  /// Generator degrees, the six m_ij in edge order.
  std::vector<int> step0;
  /// Two first-syzygy degrees per triangle, triangles in lexicographic order.
  std::vector<int> step1;
  /// N + deg~_i for i = 1, 2, 3.
  std::vector<int> step2;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Table from an explicit ANN witness.  Throws ResolutionUnavailable
/// (BadWitness) if the witness does not reproduce m or its ordering fails,
/// and RedundantPower outside the twelve inequalities.
BettiTable betti_table_free(const Multiplicity& m, const AnnWitness& witness);

/// Table from the first free ANN structure of m.  Throws NotFree for non-free
/// input and FreeVertexOnly when m is free only through a free vertex.
BettiTable betti_table_free(const Multiplicity& m);

struct EulerCheck
{
  bool ok = true;
  std::optional<int> first_failure;
};

/// Compares the alternating sum of graded ranks with the oracle's
/// HF(S/J(0123), d) for d = 0..dmax.
EulerCheck euler_hf_check(const Multiplicity& m, const BettiTable& table, int dmax);

/// True iff no power alpha_ij^{m_ij} lies in the ideal of the other five,
/// decided by Macaulay ranks in degree m_ij.
bool minimality_probe(const Multiplicity& m, const BettiTable& table);

/// Plain-text display, one homological step per line:
///   0: S(-2)^6
///   1: S(-3)^8
///   2: S(-4)^3
std::string to_text(const BettiTable& table);

} // namespace multibraid
