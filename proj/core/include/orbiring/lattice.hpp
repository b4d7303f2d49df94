#pragma once

#include "orbiring/rational.hpp"
#include "orbiring/weights.hpp"

#include <span>
#include <vector>

namespace orbiring {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

/// Row-style Hermite normal form of the lattice spanned by `rows`: zero rows
/// dropped, pivots positive and strictly moving right, entries above each
/// pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix rows);

/// A Z-basis of { x in Z^n : sum_i weights[i] * x[i] = 0 }, in Hermite normal
/// form with rows sorted ascending.
IntMatrix integer_kernel(std::span<const Weight> weights);

/// True iff v lies in the Z-span of the rows of an HNF matrix.
bool in_lattice(const IntMatrix& hnf, const IntVector& v);

/// Integer data of the exact sequence 0 -> s^1 -> t^{n+1} -> t^n -> 0.
struct LatticeMaps {
  /// The inclusion s^1 -> t^{n+1}: (b_0, ..., b_n).
  std::vector<Weight> iota;
  /// Basis of the image of beta^*, i.e. the linear forms killed by iota.
  IntMatrix j_generators;
  /// iota restricted to the fixed coordinates S_g, indexed by sector.
  std::vector<std::vector<Weight>> per_sector_iota;
};

/// Throws DomainError(DegenerateWeights) when every weight is zero.
LatticeMaps lattice_maps(const CircleWeightSystem& ws);

}  // namespace orbiring
