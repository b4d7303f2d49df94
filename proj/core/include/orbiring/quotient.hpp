#pragma once

#include "orbiring/lattice.hpp"
#include "orbiring/rational.hpp"
#include "orbiring/weights.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orbiring {

/// alpha_g * u^{u_exponent} generates the kernel in sector g over Q. Over Z
/// the conjectural generator is integral_coefficient * u^{u_exponent} alpha_g.
struct KernelGenerator {
  Residue g = 0;
  unsigned u_exponent = 0;
  /// Coordinates j whose u_j enter the product, i.e. the nonzero entries of
  /// iota projected to S_g.
  std::vector<std::size_t> support;
  Integer integral_coefficient{1};
};

struct KernelIdeal {
  std::vector<KernelGenerator> generators;  // indexed by sector

  unsigned truncation(Residue g) const {
    return generators.at(static_cast<std::size_t>(g)).u_exponent;
  }
};

/// Requires all weights >= 1 (PositivityRequired) and the default order
/// (OrderMismatch).
KernelIdeal truncation_exponents(const CircleWeightSystem& ws);

enum class CoefficientRing { Rational, IntegerConjectural };

std::string_view to_string(CoefficientRing ring) noexcept;

struct BasisElement {
  std::string label;
  Residue sector = 0;
  unsigned u_power = 0;
  Rational degree;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

struct Term {
  std::size_t index = 0;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse vector: terms sorted by basis index, no zero coefficients.
using Product = std::vector<Term>;

/// Finite-dimensional commutative graded algebra given by a basis and
/// structure constants b_i * b_j = sum_k c_ijk b_k. Constants are stored for
/// i <= j only; absent pairs multiply to zero.
class FiniteGradedAlgebra {
 public:
  using Constants = std::map<std::pair<std::size_t, std::size_t>, Product>;

  FiniteGradedAlgebra(std::vector<BasisElement> basis, Constants constants,
                      CoefficientRing ring);

  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<BasisElement>& basis() const noexcept { return basis_; }
  const Constants& constants() const noexcept { return constants_; }
  CoefficientRing ring() const noexcept { return ring_; }

  /// b_i * b_j in either argument order.
  const Product& product(std::size_t i, std::size_t j) const;

  /// Dense product of coordinate vectors.
  std::vector<Rational> multiply(const std::vector<Rational>& x,
                                 const std::vector<Rational>& y) const;

  /// Index of the basis element acting as two-sided identity, if one exists.
  std::optional<std::size_t> identity_index() const;
  bool is_degree_additive() const;
  bool is_associative() const;

  friend bool operator==(const FiniteGradedAlgebra&, const FiniteGradedAlgebra&) = default;

 private:
  std::vector<BasisElement> basis_;
  Constants constants_;
  CoefficientRing ring_;
};

/// Rational Chen-Ruan ring of the weighted projective (SYMPLECTIC) or weighted
/// hyperprojective (HYPER) quotient: basis u^k a_g with 0 <= k < d_g, products
/// from the inertial ring followed by truncation. Every build re-checks
/// commutativity, the unit, degree additivity, the dimension count and that
/// the truncation kernel is an ideal; a failure throws std::logic_error.
FiniteGradedAlgebra cr_algebra(const CircleWeightSystem& ws);

/// Same construction tagged Z-conjectural. The torsion coefficients of the
/// kernel generators are carried by truncation_exponents().
FiniteGradedAlgebra conjectural_integral_algebra(const CircleWeightSystem& ws);

/// The three ideals of the multivariable presentation
/// Q[u_0..u_n, a_0..a_{l-1}] / (I + J + K), rendered as strings.
struct MultivariablePresentation {
  CircleWeightSystem system;
  std::vector<std::string> i_relations;
  std::vector<std::string> j_relations;
  std::vector<std::string> k_generators;
  /// K after u_i -> b_i u and clearing unit coefficients: "u^d*a{g}".
  std::vector<std::string> k_reduced;
};

MultivariablePresentation multivariable_presentation(const CircleWeightSystem& ws);
std::string render_text(const MultivariablePresentation& p);
std::string render_latex(const MultivariablePresentation& p);

/// Text and LaTeX renderings of a quotient ring: basis with degrees and the
/// nonzero products b_i * b_j for i <= j.
std::string render_text(const CircleWeightSystem& ws, const FiniteGradedAlgebra& a);
std::string render_latex(const CircleWeightSystem& ws, const FiniteGradedAlgebra& a);

}  // namespace orbiring
