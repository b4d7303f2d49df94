#pragma once

#include "orbiring/quotient.hpp"
#include "orbiring/rational.hpp"
#include "orbiring/weights.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace orbiring {

using Degree = Rational;

/// Isomorphism invariants of a finite graded algebra: the Hilbert function and,
/// for every pair of degrees (a, b) with a <= b, the rank of multiplication
/// A_a x A_b -> A_{a+b}.
struct Fingerprint {
  std::map<Degree, std::size_t> hilbert;
  std::map<std::pair<Degree, Degree>, std::size_t> pairing_ranks;

  /// Rank for (a, b) in either order; 0 when either part is empty.
  std::size_t pairing_rank(const Degree& a, const Degree& b) const;
};

Fingerprint fingerprint(const FiniteGradedAlgebra& a);

/// Rank over Q of a dense matrix given by rows.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

enum class Verdict { Distinguished, Indistinguishable };

struct Witness {
  std::string invariant;  // "hilbert" or "pairing_rank"
  std::vector<Degree> at;
  std::pair<std::size_t, std::size_t> values;
};

struct DistinguishResult {
  Verdict verdict = Verdict::Indistinguishable;
  std::optional<Witness> witness;
};

/// Compares Hilbert functions, then pairing ranks, in ascending degree order;
/// the first mismatch is the witness. DISTINGUISHED is always sound;
/// INDISTINGUISHABLE makes no isomorphism claim. Throws
/// DomainError(CoefficientMismatch) if the coefficient rings differ.
DistinguishResult distinguish(const FiniteGradedAlgebra& a, const FiniteGradedAlgebra& b);

/// Decidable criterion for diagonal circle representations: equal multisets of
/// nonzero weights.
bool rep_homotopy_equivalent(std::span<const Weight> a, std::span<const Weight> b);

/// True iff appending `extra_zeros` trivial summands leaves the inertial
/// presentation's relations unchanged.
bool check_homotopy_theorem(const CircleWeightSystem& ws, std::size_t extra_zeros);

}  // namespace orbiring
