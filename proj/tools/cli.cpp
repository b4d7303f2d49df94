#include "cli.hpp"

#include "checks.hpp"
#include "orbiring/comparator.hpp"
#include "orbiring/errors.hpp"
#include "orbiring/inertial.hpp"
#include "orbiring/quotient.hpp"
#include "orbiring/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace orbiring::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SystemFlags {
  std::string weights;
  std::string mode = "symplectic";
  std::optional<Residue> order;
};

struct Options {
  SystemFlags a;
  SystemFlags b;
  std::string format = "text";
  std::string product;
  bool integral = false;
  std::string suite = "all";
  checks::SweepOptions sweep;
  std::optional<std::uint64_t> seed;
};

CircleWeightSystem make_system(const SystemFlags& f) {
  std::vector<Weight> weights;
  Mode mode;
  try {
    weights = parse_weights(f.weights);
    mode = parse_mode(f.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (f.order) return CircleWeightSystem(std::move(weights), mode, *f.order);
  return CircleWeightSystem(std::move(weights), mode);
}

std::pair<Residue, Residue> parse_pair(const std::string& text) {
  const auto w = [&] {
    try {
      return parse_weights(text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--product: ") + e.what());
    }
  }();
  if (w.size() != 2) throw UsageError("--product expects two residues 'g,h'");
  return {w[0], w[1]};
}

std::string latex_monomial(const ProductMonomial& m) {
  if (m.coefficient == 0) return "0";
  std::string c = to_string(m.coefficient);
  std::string out;
  if (m.u_exponent == 0) {
    out = c;
  } else {
    out = m.coefficient == 1 ? "" : m.coefficient == -1 ? "-" : c;
    out += "u";
    if (m.u_exponent > 1) out += "^{" + std::to_string(m.u_exponent) + "}";
  }
  return out + "\\,\\alpha_{" + std::to_string(m.target) + "}";
}

int cmd_inertial(const Options& o, std::ostream& out) {
  const auto ws = make_system(o.a);
  if (!o.product.empty()) {
    const auto [g, h] = parse_pair(o.product);
    const auto mono = unit_product(ws, g, h);
    if (o.format == "json") {
      const auto x = InertialElement::unit(ws.order(), g);
      const auto y = InertialElement::unit(ws.order(), h);
      out << element_to_json(inertial_product(x, y, ws)) << '\n';
    } else if (o.format == "latex") {
      out << "\\alpha_{" << reduce(g, ws.order()) << "}\\smile\\alpha_{"
          << reduce(h, ws.order()) << "} = " << latex_monomial(mono) << '\n';
    } else {
      out << mono.str() << '\n';
    }
    return kExitOk;
  }
  const auto p = inertial_presentation(ws);
  if (o.format == "json") {
    out << presentation_to_json(p) << '\n';
  } else if (o.format == "latex") {
    out << render_latex(p);
  } else {
    out << render_text(p);
  }
  return kExitOk;
}

int cmd_cr(const Options& o, std::ostream& out) {
  const auto ws = make_system(o.a);
  const auto algebra = o.integral ? conjectural_integral_algebra(ws) : cr_algebra(ws);
  if (o.format == "json") {
    out << cr_to_json(ws, algebra) << '\n';
  } else if (o.format == "latex") {
    out << render_latex(ws, algebra);
  } else {
    out << render_text(ws, algebra);
  }
  return kExitOk;
}

int cmd_present(const Options& o, std::ostream& out) {
  const auto p = multivariable_presentation(make_system(o.a));
  out << (o.format == "latex" ? render_latex(p) : render_text(p));
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const auto wa = make_system(o.a);
  const auto wb = make_system(o.b);
  auto build = [&](const CircleWeightSystem& ws) {
    return o.integral ? conjectural_integral_algebra(ws) : cr_algebra(ws);
  };
  const auto result = distinguish(build(wa), build(wb));
  if (o.format == "json") {
    out << distinguish_to_json(result) << '\n';
    return kExitOk;
  }
  out << to_string(result.verdict);
  if (result.witness) {
    const auto& w = *result.witness;
    out << ": " << w.invariant << " at degree";
    for (const auto& d : w.at) out << ' ' << d.str();
    out << ": " << w.values.first << " vs " << w.values.second;
  }
  out << '\n';
  return kExitOk;
}

int cmd_rep_homotopy(const Options& o, std::ostream& out) {
  std::vector<Weight> a;
  std::vector<Weight> b;
  try {
    a = parse_weights(o.a.weights);
    b = parse_weights(o.b.weights);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bool equivalent = rep_homotopy_equivalent(a, b);
  if (o.format == "json") {
    out << "{\"equivalent\": " << (equivalent ? "true" : "false") << "}\n";
  } else {
    out << (equivalent ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int cmd_check(Options o, std::ostream& out) {
  if (!o.seed) {
    if (const char* env = std::getenv("ORBIRING_SEED")) {
      try {
        o.seed = std::stoull(env);
      } catch (const std::exception&) {
        throw UsageError("ORBIRING_SEED is not an unsigned integer");
      }
    }
  }
  if (!o.seed) throw UsageError("check needs --seed or ORBIRING_SEED");
  o.sweep.seed = *o.seed;
  std::vector<checks::Suite> suites;
  try {
    suites = checks::parse_suites(o.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << "seed " << *o.seed << " trials " << o.sweep.trials << " max-n " << o.sweep.max_n
      << " max-weight " << o.sweep.max_weight << " max-order " << o.sweep.max_order << '\n';
  for (auto s : suites) {
    const auto report = checks::run_suite(s, o.sweep);
    out << report.summary() << '\n';
    if (!report.passed()) return kExitCheckFailed;
  }
  return kExitOk;
}

void add_system_flags(CLI::App* cmd, Options& o, bool with_format_latex) {
  cmd->add_option("--weights", o.a.weights, "Comma-separated signed weights b0,...,bn")
      ->required();
  cmd->add_option("--mode", o.a.mode, "symplectic or hyper")
      ->check(CLI::IsMember({"symplectic", "hyper"}, CLI::ignore_case));
  cmd->add_option("--order", o.a.order, "Sector group order m (default lcm of weights)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", o.format, "Output format")
      ->check(with_format_latex ? CLI::IsMember({"text", "json", "latex"})
                                : CLI::IsMember({"text", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"orbiring: inertial and Chen-Ruan cohomology of circle quotients", "orbiring"};
  app.require_subcommand(1, 1);
  Options o;

  auto* inertial = app.add_subcommand("inertial", "Inertial ring presentation or one product");
  add_system_flags(inertial, o, true);
  inertial->add_option("--product", o.product, "Sector pair 'g,h' for a single product");

  auto* cr = app.add_subcommand("cr", "Chen-Ruan ring of the weighted (hyper)projective quotient");
  add_system_flags(cr, o, true);
  cr->add_flag("--integral", o.integral, "Keep integer coefficients (CONJECTURAL)");

  auto* present = app.add_subcommand("present", "Multivariable presentation with ideals I, J, K");
  present->add_option("--weights", o.a.weights, "Comma-separated weights")->required();
  present->add_option("--mode", o.a.mode, "symplectic or hyper")
      ->check(CLI::IsMember({"symplectic", "hyper"}, CLI::ignore_case));
  present->add_option("--order", o.a.order, "Sector group order")->check(CLI::PositiveNumber);
  present->add_option("--format", o.format, "text or latex")
      ->check(CLI::IsMember({"text", "latex"}));

  auto* compare = app.add_subcommand("compare", "Try to distinguish two Chen-Ruan rings");
  add_system_flags(compare, o, false);
  compare->add_option("--weights-b", o.b.weights, "Weights of the second system")->required();
  auto* mode_b = compare->add_option("--mode-b", o.b.mode, "Mode of the second system")
                     ->check(CLI::IsMember({"symplectic", "hyper"}, CLI::ignore_case));
  compare->add_option("--order-b", o.b.order, "Order of the second system")
      ->check(CLI::PositiveNumber);
  compare->add_flag("--integral", o.integral, "Compare the CONJECTURAL integral rings");

  auto* rep = app.add_subcommand("rep-homotopy",
                                 "Representation-homotopy test for diagonal circle actions");
  rep->add_option("--weights", o.a.weights, "First weight list (may be empty)")->required();
  rep->add_option("--weights-b", o.b.weights, "Second weight list (may be empty)")->required();
  rep->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check", "Seeded property sweeps");
  check->add_option("--suite", o.suite,
                    "oracle, axioms, combinatorics, smooth, homotopy, quotient or all");
  check->add_option("--trials", o.sweep.trials, "Random weight vectors per suite")
      ->check(CLI::PositiveNumber);
  check->add_option("--seed", o.seed, "RNG seed (falls back to ORBIRING_SEED)");
  check->add_option("--max-n", o.sweep.max_n, "Maximum number of weights")
      ->check(CLI::PositiveNumber);
  check->add_option("--max-weight", o.sweep.max_weight, "Maximum weight")
      ->check(CLI::NonNegativeNumber);
  check->add_option("--max-order", o.sweep.max_order, "Redraw systems with larger lcm")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  if (mode_b->count() == 0) o.b.mode = o.a.mode;

  try {
    if (*inertial) return cmd_inertial(o, out);
    if (*cr) return cmd_cr(o, out);
    if (*present) return cmd_present(o, out);
    if (*compare) return cmd_compare(o, out);
    if (*rep) return cmd_rep_homotopy(o, out);
    if (*check) return cmd_check(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << e.name() << ": " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace orbiring::cli
