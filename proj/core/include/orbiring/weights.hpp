#pragma once

#include "orbiring/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbiring {

using Weight = std::int64_t;
/// Element of the cyclic sector group Z/mZ, always stored in [0, m).
using Residue = std::int64_t;

/// SYMPLECTIC: the circle acts on C^{n+1} with weights b_i.
/// HYPER: the circle acts on T*C^{n+1}, weights b_i on the base copy and
/// -b_i on the fiber copy.
enum class Mode { Symplectic, Hyper };

std::string_view to_string(Mode mode) noexcept;
/// Accepts "symplectic"/"hyper" in any letter case.
Mode parse_mode(std::string_view text);

/// lcm of |b_i| over the nonzero weights; 1 if there are none.
Residue default_order(std::span<const Weight> weights);

/// ([w*g] mod m) / m, a rational in [0, 1).
Rational logweight(Weight w, Residue g, Residue m);

/// Smallest nonnegative representative of value mod m.
constexpr Residue reduce(std::int64_t value, Residue m) noexcept {
  const auto r = value % m;
  return r < 0 ? r + m : r;
}

class CircleWeightSystem {
 public:
  /// Uses the default order (lcm of the nonzero weights).
  CircleWeightSystem(std::vector<Weight> weights, Mode mode);
  CircleWeightSystem(std::vector<Weight> weights, Mode mode, Residue order);

  const std::vector<Weight>& weights() const noexcept { return weights_; }
  Mode mode() const noexcept { return mode_; }
  Residue order() const noexcept { return order_; }
  std::size_t size() const noexcept { return weights_.size(); }

  bool all_positive() const noexcept;
  bool all_nonnegative() const noexcept;
  bool has_default_order() const noexcept { return default_order_; }

  /// Same system with k trivial (weight 0) summands appended.
  CircleWeightSystem with_appended_zeros(std::size_t k) const;

  /// "b0,b1,...,bn"
  std::string weights_string() const;

  friend bool operator==(const CircleWeightSystem&, const CircleWeightSystem&) = default;

 private:
  std::vector<Weight> weights_;
  Mode mode_;
  Residue order_;
  bool default_order_;
};

struct Sector {
  Residue g = 0;
  /// S_g = { i : b_i * g == 0 mod m }, ascending.
  std::vector<std::size_t> fixed;
  Rational age;
  /// Degree of the sector's unit class, 2 * age.
  Rational degree;
};

Sector sector_data(const CircleWeightSystem& ws, Residue g);
std::vector<Sector> all_sectors(const CircleWeightSystem& ws);

/// Parses "b0,b1,...,bn": signed decimal integers, commas, optional spaces.
/// The empty string yields the empty weight list.
std::vector<Weight> parse_weights(std::string_view text);

}  // namespace orbiring
