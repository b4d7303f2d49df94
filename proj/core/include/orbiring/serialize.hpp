#pragma once

#include "orbiring/comparator.hpp"
#include "orbiring/inertial.hpp"
#include "orbiring/quotient.hpp"
#include "orbiring/upoly.hpp"
#include "orbiring/weights.hpp"

#include <string>

namespace orbiring {

/// [[exponent, "coefficient"], ...] sorted by exponent.
std::string upoly_to_json(const UPoly& p);
UPoly upoly_from_json(const std::string& text);

/// {"sectors": [{"g": g, "polynomial": [[e, "c"], ...]}, ...]}
std::string element_to_json(const InertialElement& x);

std::string presentation_to_json(const InertialPresentation& p);

/// Stable field order:
///   weights, mode, order, sectors, basis, structure_constants, hilbert,
///   coefficients[, kernel]
/// "kernel" appears only for the Z-conjectural ring and lists the torsion
/// generators c * u^d * a_g.
std::string cr_to_json(const CircleWeightSystem& ws, const FiniteGradedAlgebra& a,
                       int indent = 2);

struct ParsedCrRing {
  CircleWeightSystem system;
  FiniteGradedAlgebra algebra;
};

/// Inverse of cr_to_json. Throws std::invalid_argument on malformed input.
ParsedCrRing cr_from_json(const std::string& text);

/// {"verdict": "DISTINGUISHED"|"INDISTINGUISHABLE",
///  "witness": {"invariant": ..., "at": [...], "values": [a, b]} | null}
std::string distinguish_to_json(const DistinguishResult& r, int indent = 2);

std::string_view to_string(Verdict v) noexcept;

}  // namespace orbiring
