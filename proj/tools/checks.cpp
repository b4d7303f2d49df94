#include "checks.hpp"

#include "orbiring/comparator.hpp"
#include "orbiring/errors.hpp"
#include "orbiring/inertial.hpp"
#include "orbiring/lattice.hpp"
#include "orbiring/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace orbiring::checks {
namespace {

std::string describe(const CircleWeightSystem& ws) {
  std::ostringstream out;
  out << "weights=" << ws.weights_string() << " mode=" << to_string(ws.mode())
      << " m=" << ws.order();
  return out.str();
}

std::string describe(const CircleWeightSystem& ws, Residue g, Residue h) {
  return describe(ws) + " g=" + std::to_string(g) + " h=" + std::to_string(h);
}

std::vector<CircleWeightSystem> both_modes(const std::vector<std::vector<Weight>>& vectors) {
  std::vector<CircleWeightSystem> out;
  for (const auto& w : vectors) {
    out.emplace_back(w, Mode::Symplectic);
    out.emplace_back(w, Mode::Hyper);
  }
  return out;
}

ProductMonomial times(const ProductMonomial& a, const ProductMonomial& b) {
  return {b.target, a.coefficient * b.coefficient, a.u_exponent + b.u_exponent};
}

bool disjoint(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::none_of(a.begin(), a.end(), [&](std::size_t x) {
    return std::find(b.begin(), b.end(), x) != b.end();
  });
}

// Table of alpha_g * alpha_h from the definitional path.
std::vector<std::vector<ProductMonomial>> product_table(const CircleWeightSystem& ws) {
  const auto m = static_cast<std::size_t>(ws.order());
  std::vector<std::vector<ProductMonomial>> table(m, std::vector<ProductMonomial>(m));
  for (Residue g = 0; g < ws.order(); ++g) {
    for (Residue h = 0; h < ws.order(); ++h) {
      table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] = unit_product(ws, g, h);
    }
  }
  return table;
}

void run_oracle(const SweepOptions& opt, SuiteReport& report) {
  for (const auto& ws : both_modes(random_weight_vectors(opt, 0))) {
    ++report.systems;
    for (Residue g = 0; g < ws.order(); ++g) {
      for (Residue h = 0; h < ws.order(); ++h) {
        ++report.cases;
        const auto oracle = unit_product(ws, g, h);
        const auto closed = unit_product_closed_form(ws, g, h);
        if (oracle != closed) {
          report.failure = Counterexample{
              "closed form == definitional product",
              describe(ws, g, h) + " oracle=" + oracle.str() + " closed_form=" + closed.str()};
          return;
        }
      }
    }
  }
}

void run_axioms(const SweepOptions& opt, SuiteReport& report) {
  for (const auto& ws : both_modes(random_weight_vectors(opt, 0))) {
    ++report.systems;
    const auto table = product_table(ws);
    const auto sectors = all_sectors(ws);
    const auto m = static_cast<std::size_t>(ws.order());
    auto fail = [&](std::string property, std::string detail) {
      report.failure = Counterexample{std::move(property), std::move(detail)};
    };
    for (std::size_t g = 0; g < m; ++g) {
      const ProductMonomial self{static_cast<Residue>(g), Integer(1), 0};
      ++report.cases;
      if (table[g][0] != self || table[0][g] != self) {
        return fail("a0 is a two-sided unit",
                    describe(ws, static_cast<Residue>(g), 0) + " a_g*a0=" + table[g][0].str() +
                        " a0*a_g=" + table[0][g].str());
      }
      for (std::size_t h = 0; h < m; ++h) {
        ++report.cases;
        const auto& gh = table[g][h];
        if (gh != table[h][g]) {
          return fail("commutativity", describe(ws, static_cast<Residue>(g),
                                                static_cast<Residue>(h)) +
                                           " gh=" + gh.str() + " hg=" + table[h][g].str());
        }
        if (gh.coefficient != 0) {
          const Rational lhs = sectors[g].age + sectors[h].age;
          const Rational rhs = sectors[static_cast<std::size_t>(gh.target)].age +
                               Rational(static_cast<std::int64_t>(gh.u_exponent));
          if (lhs != rhs) {
            return fail("degree additivity",
                        describe(ws, static_cast<Residue>(g), static_cast<Residue>(h)) +
                            " age(g)+age(h)=" + lhs.str() + " age(g+h)+e=" + rhs.str());
          }
        }
        for (std::size_t k = 0; k < m; ++k) {
          ++report.cases;
          const auto left = times(gh, table[static_cast<std::size_t>(gh.target)][k]);
          const auto& hk = table[h][k];
          const auto right = times(hk, table[g][static_cast<std::size_t>(hk.target)]);
          if (left != right) {
            return fail("associativity",
                        describe(ws, static_cast<Residue>(g), static_cast<Residue>(h)) +
                            " k=" + std::to_string(k) + " (gh)k=" + left.str() +
                            " g(hk)=" + right.str());
          }
        }
      }
    }
  }
}

void run_combinatorics(const SweepOptions& opt, SuiteReport& report) {
  for (const auto& ws : both_modes(random_weight_vectors(opt, 0))) {
    ++report.systems;
    const Residue m = ws.order();
    const auto sectors = all_sectors(ws);
    auto fail = [&](std::string property, std::string detail) {
      report.failure = Counterexample{std::move(property), std::move(detail)};
    };
    for (Residue g = 0; g < m; ++g) {
      const auto& sg = sectors[static_cast<std::size_t>(g)];
      ++report.cases;
      for (Weight w : ws.weights()) {
        const Rational a = logweight(w, g, m);
        const Rational sum = a + logweight(-w, g, m);
        const Rational expected = a.is_zero() ? Rational(0) : Rational(1);
        if (sum != expected) {
          return fail("logweight complement", describe(ws) + " w=" + std::to_string(w) +
                                                  " g=" + std::to_string(g) +
                                                  " a_w+a_-w=" + sum.str());
        }
      }
      if (ws.mode() == Mode::Hyper && !sg.age.is_integer()) {
        return fail("HYPER ages are integral",
                    describe(ws) + " g=" + std::to_string(g) + " age=" + sg.age.str());
      }
      // S_g depends only on <g>, and shrinks as <g> grows.
      for (Residue h = 0; h < m; ++h) {
        const auto& sh = sectors[static_cast<std::size_t>(h)];
        const bool h_in_g = h % std::gcd(g, m) == 0;  // <h> subset of <g>
        if (h_in_g && !std::includes(sh.fixed.begin(), sh.fixed.end(), sg.fixed.begin(),
                                     sg.fixed.end())) {
          return fail("S_g inclusion-reversing", describe(ws, g, h));
        }
      }
      for (Residue h = 0; h < m; ++h) {
        ++report.cases;
        try {
          (void)closed_form_exponents(ws, g, h);
        } catch (const std::logic_error& e) {
          return fail("closed-form exponents in {0,1}", describe(ws, g, h) + " " + e.what());
        }
        const auto data = obstruction_data(ws, g, h);
        if (!disjoint(data.base_lines, data.fiber_lines)) {
          return fail("base/fiber obstruction exclusivity", describe(ws, g, h));
        }
        if (!disjoint(data.base_lines, data.pushforward) ||
            !disjoint(data.fiber_lines, data.pushforward)) {
          return fail("(R u R') n R'' empty", describe(ws, g, h));
        }
        if (h == 0 && !(data.base_lines.empty() && data.fiber_lines.empty() &&
                        data.pushforward.empty())) {
          return fail("identity pair has no obstruction", describe(ws, g, h));
        }
      }
    }
  }
}

void run_smooth(SuiteReport& report) {
  for (std::size_t len = 1; len <= 6; ++len) {
    const std::vector<Weight> ones(len, 1);
    const CircleWeightSystem sym(ones, Mode::Symplectic);
    const CircleWeightSystem hyp(ones, Mode::Hyper);
    const auto a = cr_algebra(sym);
    const auto b = cr_algebra(hyp);
    report.systems += 2;
    for (const auto* alg : {&a, &b}) {
      ++report.cases;
      const auto fp = fingerprint(*alg);
      std::map<Degree, std::size_t> expected;
      for (std::size_t k = 0; k < len; ++k) expected[Rational(2 * static_cast<std::int64_t>(k))] = 1;
      bool truncated_ring = alg->dimension() == len;
      for (std::size_t i = 0; truncated_ring && i < len; ++i) {
        for (std::size_t j = 0; truncated_ring && j < len; ++j) {
          const auto& p = alg->product(i, j);
          truncated_ring = i + j < len ? (p.size() == 1 && p[0].index == i + j &&
                                          p[0].coefficient == Rational(1))
                                       : p.empty();
        }
      }
      if (fp.hilbert != expected || !truncated_ring) {
        report.failure = Counterexample{"smooth case is Q[u]/u^{n+1}",
                                        describe(alg == &a ? sym : hyp)};
        return;
      }
    }
    ++report.cases;
    if (distinguish(a, b).verdict != Verdict::Indistinguishable) {
      report.failure =
          Counterexample{"smooth SYMPLECTIC and HYPER indistinguishable", describe(sym)};
      return;
    }
  }
}

void run_homotopy(const SweepOptions& opt, SuiteReport& report) {
  auto fail = [&](std::string property, std::string detail) {
    report.failure = Counterexample{std::move(property), std::move(detail)};
  };
  const std::vector<Weight> weight_two{2};
  const std::vector<Weight> point{};
  const std::vector<Weight> one{1};
  const std::vector<Weight> one_padded{1, 0, 0};
  report.cases += 2;
  if (rep_homotopy_equivalent(weight_two, point)) {
    return fail("(2) vs () not representation homotopic", "returned true");
  }
  if (!rep_homotopy_equivalent(one, one_padded)) {
    return fail("(1) vs (1,0,0) representation homotopic", "returned false");
  }
  // Negative control: an equivariant contraction changes the product.
  ++report.cases;
  const auto line = unit_product(CircleWeightSystem(weight_two, Mode::Symplectic, 3), 1, 1);
  const auto pt = unit_product(CircleWeightSystem(point, Mode::Symplectic, 3), 1, 1);
  if (line == pt) {
    return fail("functoriality failure control", "weights (2) and () agree: " + line.str());
  }

  for (const auto& ws : both_modes(random_weight_vectors(opt, 0))) {
    ++report.systems;
    for (std::size_t k = 0; k <= 3; ++k) {
      ++report.cases;
      const auto padded = ws.with_appended_zeros(k);
      if (!rep_homotopy_equivalent(ws.weights(), padded.weights())) {
        return fail("w ~ w + zeros", describe(ws) + " zeros=" + std::to_string(k));
      }
      if (!check_homotopy_theorem(ws, k)) {
        return fail("appended zero weights leave relations unchanged",
                    describe(ws) + " zeros=" + std::to_string(k));
      }
    }
  }
}

void run_quotient(const SweepOptions& opt, SuiteReport& report) {
  for (const auto& ws : both_modes(random_weight_vectors(opt, 1))) {
    ++report.systems;
    ++report.cases;
    FiniteGradedAlgebra a = [&] {
      try {
        return cr_algebra(ws);
      } catch (const std::logic_error& e) {
        report.failure = Counterexample{"quotient build invariants", describe(ws) + " " + e.what()};
        return FiniteGradedAlgebra({}, {}, CoefficientRing::Rational);
      }
    }();
    if (report.failure) return;
    if (!a.is_associative()) {
      report.failure = Counterexample{"quotient associativity", describe(ws)};
      return;
    }
    const auto maps = lattice_maps(ws);
    for (const auto& row : maps.j_generators) {
      ++report.cases;
      Integer dot = 0;
      for (std::size_t i = 0; i < row.size(); ++i) dot += row[i] * Integer(static_cast<long>(ws.weights()[i]));
      if (dot != 0) {
        report.failure = Counterexample{"J generators vanish under u_i -> b_i u", describe(ws)};
        return;
      }
    }
    if (maps.j_generators.size() + 1 != ws.size()) {
      report.failure = Counterexample{"J has rank n", describe(ws)};
      return;
    }
  }
}

}  // namespace

std::string_view to_string(Suite s) noexcept {
  switch (s) {
    case Suite::Oracle: return "oracle";
    case Suite::Axioms: return "axioms";
    case Suite::Combinatorics: return "combinatorics";
    case Suite::Smooth: return "smooth";
    case Suite::Homotopy: return "homotopy";
    case Suite::Quotient: return "quotient";
  }
  return "?";
}

std::vector<Suite> parse_suites(std::string_view text) {
  const std::vector<Suite> all{Suite::Oracle, Suite::Axioms, Suite::Combinatorics,
                               Suite::Smooth, Suite::Homotopy, Suite::Quotient};
  if (text == "all") return all;
  for (auto s : all) {
    if (to_string(s) == text) return {s};
  }
  throw std::invalid_argument("unknown suite '" + std::string(text) + "'");
}

std::vector<std::vector<Weight>> random_weight_vectors(const SweepOptions& opt,
                                                       Weight min_weight) {
  if (opt.max_n < 1 || opt.max_weight < min_weight || opt.max_order < 1) {
    throw std::invalid_argument("sweep bounds are empty");
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> length(1, opt.max_n);
  std::uniform_int_distribution<Weight> weight(min_weight, opt.max_weight);
  std::vector<std::vector<Weight>> out;
  out.reserve(opt.trials);
  while (out.size() < opt.trials) {
    std::vector<Weight> w(length(rng));
    for (auto& b : w) b = weight(rng);
    if (default_order(w) <= opt.max_order) out.push_back(std::move(w));
  }
  return out;
}

std::string SuiteReport::summary() const {
  std::ostringstream out;
  if (passed()) {
    out << "PASS " << to_string(suite) << ": " << systems << " systems, " << cases
        << " cases";
  } else {
    out << "FAIL " << to_string(suite) << ": " << failure->property
        << " counterexample " << failure->detail;
  }
  return out.str();
}

SuiteReport run_suite(Suite suite, const SweepOptions& opt) {
  SuiteReport report{suite, 0, 0, std::nullopt};
  switch (suite) {
    case Suite::Oracle: run_oracle(opt, report); break;
    case Suite::Axioms: run_axioms(opt, report); break;
    case Suite::Combinatorics: run_combinatorics(opt, report); break;
    case Suite::Smooth: run_smooth(report); break;
    case Suite::Homotopy: run_homotopy(opt, report); break;
    case Suite::Quotient: run_quotient(opt, report); break;
  }
  return report;
}

}  // namespace orbiring::checks
