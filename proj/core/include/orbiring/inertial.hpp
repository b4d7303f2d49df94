#pragma once

#include "orbiring/rational.hpp"
#include "orbiring/upoly.hpp"
#include "orbiring/weights.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace orbiring {

/// Index sets of the twisted product of the sector units alpha_g, alpha_h,
/// read off from the logweights coordinate by coordinate.
struct ObstructionData {
  /// Base-copy lines with a(g) + a(h) + a((gh)^-1) = 2.
  std::vector<std::size_t> base_lines;
  /// Fiber-copy lines with the same condition for the weight -b_i (HYPER only).
  std::vector<std::size_t> fiber_lines;
  /// Coordinates fixed by g+h but by neither g nor h: the pushforward normal
  /// directions.
  std::vector<std::size_t> pushforward;
  /// Combined factor euler_coefficient * u^u_exponent.
  Integer euler_coefficient{1};
  unsigned u_exponent = 0;
};

/// alpha_g * alpha_h = coefficient * u^u_exponent * alpha_target.
struct ProductMonomial {
  Residue target = 0;
  Integer coefficient{1};
  unsigned u_exponent = 0;

  friend bool operator==(const ProductMonomial&, const ProductMonomial&) = default;
  /// "c u^e a{k}"
  std::string str() const;
};

/// Definitional computation straight from the logweight conditions. Valid for
/// any weights (including negative and zero) and any sector order.
ObstructionData obstruction_data(const CircleWeightSystem& ws, Residue g, Residue h);

/// Sector-unit product via obstruction_data.
ProductMonomial unit_product(const CircleWeightSystem& ws, Residue g, Residue h);

/// Per-coordinate exponents (e_base, e_fiber) of the factors (b_i u) and
/// (-b_i u) in the closed-form product; e_fiber is always 0 in SYMPLECTIC
/// mode. Same preconditions as unit_product_closed_form.
struct ClosedFormExponents {
  unsigned base = 0;
  unsigned fiber = 0;
};
std::vector<ClosedFormExponents> closed_form_exponents(const CircleWeightSystem& ws,
                                                       Residue g, Residue h);

/// Sector-unit product via the closed-form exponent formula
///   prod_i (b_i u)^{([b_i g]+[b_i h]-[b_i(g+h)])/l} (-b_i u)^{([-b_i g]+[-b_i h]-[-b_i(g+h)])/l}.
/// Throws DomainError(ClosedFormInapplicable) unless all weights are
/// nonnegative and the order is the lcm of the weights.
ProductMonomial unit_product_closed_form(const CircleWeightSystem& ws, Residue g,
                                         Residue h);

/// An element of the Z/mZ-graded inertial ring: one polynomial in u per
/// sector, expressed in the basis where alpha_g maps to 1. Absent sectors are
/// zero.
class InertialElement {
 public:
  using Components = std::map<Residue, UPoly>;

  explicit InertialElement(Residue order);

  static InertialElement unit(Residue order, Residue g);
  static InertialElement component(Residue order, Residue g, const UPoly& poly);

  Residue order() const noexcept { return order_; }
  const Components& components() const noexcept { return components_; }
  UPoly at(Residue g) const;
  bool is_zero() const noexcept { return components_.empty(); }

  InertialElement& add(Residue g, const UPoly& poly);
  InertialElement& operator+=(const InertialElement& rhs);
  friend InertialElement operator+(InertialElement a, const InertialElement& b) {
    return a += b;
  }

  friend bool operator==(const InertialElement&, const InertialElement&) = default;

  /// "c u^e a{g} + ..." in ascending sector order; "0" when empty.
  std::string str() const;

 private:
  Residue order_;
  Components components_;
};

/// Bilinear extension of unit_product (definitional path).
InertialElement inertial_product(const InertialElement& x, const InertialElement& y,
                                 const CircleWeightSystem& ws);

struct InertialRelation {
  Residue g = 0;
  Residue h = 0;
  ProductMonomial product;

  friend bool operator==(const InertialRelation&, const InertialRelation&) = default;
};

/// Z[u, a0..a{m-1}] modulo one relation a_g a_h - c u^e a_{g+h} per unordered
/// pair g <= h.
struct InertialPresentation {
  CircleWeightSystem system;
  /// Degree of alpha_g, indexed by g.
  std::vector<Rational> generator_degrees;
  std::vector<InertialRelation> relations;
};

/// Requires nonnegative weights. Products come from the definitional path;
/// when the order is the weight lcm they are also checked against the closed
/// form and a disagreement throws std::logic_error.
InertialPresentation inertial_presentation(const CircleWeightSystem& ws);

/// Line-oriented text form:
///   ring Z[u, a0..a{m-1}] mode=HYPER weights=2,1,1 order=2
///   a0*a0 = 1 u^0 a0
///   ...
std::string render_text(const InertialPresentation& p);
std::string render_latex(const InertialPresentation& p);

}  // namespace orbiring
