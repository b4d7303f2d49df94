#pragma once

#include "orbiring/weights.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbiring::checks {

enum class Suite { Oracle, Axioms, Combinatorics, Smooth, Homotopy, Quotient };

std::string_view to_string(Suite s) noexcept;
/// "all" expands to every suite in declaration order.
std::vector<Suite> parse_suites(std::string_view text);

struct SweepOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  std::size_t max_n = 5;         // max number of weights (n+1)
  Weight max_weight = 12;
  /// Systems whose weight lcm exceeds this are redrawn; triple-wise checks are
  /// cubic in the order.
  Residue max_order = 60;
};

/// Seeded draws of weight vectors with 1..max_n entries in [min_weight,
/// max_weight], redrawn until lcm <= max_order.
std::vector<std::vector<Weight>> random_weight_vectors(const SweepOptions& opt,
                                                       Weight min_weight);

struct Counterexample {
  std::string property;
  std::string detail;  // weights, mode, m, g, h and both computed values
};

struct SuiteReport {
  Suite suite;
  std::size_t systems = 0;
  std::size_t cases = 0;
  std::optional<Counterexample> failure;

  bool passed() const { return !failure.has_value(); }
  std::string summary() const;
};

SuiteReport run_suite(Suite suite, const SweepOptions& opt);

}  // namespace orbiring::checks
