#include "orbiring/quotient.hpp"

#include "orbiring/errors.hpp"
#include "orbiring/inertial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbiring {
namespace {

void require_quotient_preconditions(const CircleWeightSystem& ws) {
  if (ws.size() == 0 || !ws.all_positive()) {
    throw DomainError(ErrorKind::PositivityRequired,
                      "quotient rings need all weights >= 1 (weights=" +
                          ws.weights_string() + ")");
  }
  if (!ws.has_default_order()) {
    throw DomainError(ErrorKind::OrderMismatch,
                      "quotient rings need order = lcm(weights) = " +
                          std::to_string(default_order(ws.weights())) + ", got " +
                          std::to_string(ws.order()));
  }
}

std::string basis_label(Residue g, unsigned k) {
  return "u^" + std::to_string(k) + "*a" + std::to_string(g);
}

std::string latex_label(Residue g, unsigned k) {
  std::string out;
  if (k == 1) out = "u";
  if (k > 1) out = "u^{" + std::to_string(k) + "}";
  if (g != 0) out += "\\alpha_{" + std::to_string(g) + "}";
  return out.empty() ? "1" : out;
}

// Maps inertial elements onto the truncated monomial basis.
class TruncatedBasis {
 public:
  TruncatedBasis(const CircleWeightSystem& ws, const KernelIdeal& kernel) : ws_(ws) {
    index_.resize(static_cast<std::size_t>(ws.order()));
    for (const auto& sector : all_sectors(ws)) {
      const unsigned d = kernel.truncation(sector.g);
      for (unsigned k = 0; k < d; ++k) {
        index_[static_cast<std::size_t>(sector.g)].push_back(basis_.size());
        basis_.push_back({basis_label(sector.g, k), sector.g, k,
                          sector.degree + Rational(2 * static_cast<std::int64_t>(k))});
      }
    }
  }

  const std::vector<BasisElement>& basis() const { return basis_; }

  unsigned truncation(Residue g) const {
    return static_cast<unsigned>(index_[static_cast<std::size_t>(g)].size());
  }

  InertialElement lift(Residue g, unsigned k) const {
    return InertialElement::component(ws_.order(), g, UPoly::monomial(Rational(1), k));
  }

  Product project(const InertialElement& x) const {
    Product out;
    for (const auto& [g, poly] : x.components()) {
      const auto& slots = index_[static_cast<std::size_t>(g)];
      for (const auto& [k, c] : poly.terms()) {
        if (k < slots.size()) out.push_back({slots[k], c});
      }
    }
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return a.index < b.index; });
    return out;
  }

 private:
  const CircleWeightSystem& ws_;
  std::vector<std::vector<std::size_t>> index_;
  std::vector<BasisElement> basis_;
};

std::vector<Rational> dense(const Product& p, std::size_t dim) {
  std::vector<Rational> out(dim);
  for (const auto& t : p) out[t.index] = t.coefficient;
  return out;
}

FiniteGradedAlgebra build_quotient(const CircleWeightSystem& ws, CoefficientRing ring) {
  const auto kernel = truncation_exponents(ws);
  const TruncatedBasis tb(ws, kernel);
  const auto& basis = tb.basis();

  FiniteGradedAlgebra::Constants constants;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto x = tb.lift(basis[i].sector, basis[i].u_power);
    for (std::size_t j = i; j < basis.size(); ++j) {
      const auto y = tb.lift(basis[j].sector, basis[j].u_power);
      auto xy = tb.project(inertial_product(x, y, ws));
      if (j != i && tb.project(inertial_product(y, x, ws)) != xy) {
        throw std::logic_error("quotient product is not commutative at " + basis[i].label +
                               ", " + basis[j].label);
      }
      if (!xy.empty()) constants.emplace(std::pair{i, j}, std::move(xy));
    }
  }
  FiniteGradedAlgebra algebra(basis, std::move(constants), ring);

  std::size_t expected_dim = 0;
  for (const auto& sector : all_sectors(ws)) expected_dim += sector.fixed.size();
  if (algebra.dimension() != expected_dim) {
    throw std::logic_error("quotient dimension differs from sum of |S_g|");
  }
  if (algebra.identity_index() != std::optional<std::size_t>{0}) {
    throw std::logic_error("u^0*a0 is not the identity of the quotient");
  }
  if (!algebra.is_degree_additive()) {
    throw std::logic_error("quotient structure constants are not degree-additive");
  }

  // Truncation must commute with multiplication, including on the first
  // killed power u^{d_g} a_g; otherwise the kernel is not an ideal.
  for (Residue g = 0; g < ws.order(); ++g) {
    for (unsigned k = 0; k <= tb.truncation(g); ++k) {
      const auto x = tb.lift(g, k);
      const auto x_bar = dense(tb.project(x), basis.size());
      for (Residue h = 0; h < ws.order(); ++h) {
        for (unsigned l = 0; l <= tb.truncation(h); ++l) {
          const auto y = tb.lift(h, l);
          const auto lhs = dense(tb.project(inertial_product(x, y, ws)), basis.size());
          const auto rhs = algebra.multiply(x_bar, dense(tb.project(y), basis.size()));
          if (lhs != rhs) {
            throw std::logic_error("truncation kernel is not an ideal at " +
                                   basis_label(g, k) + ", " + basis_label(h, l));
          }
        }
      }
    }
  }
  return algebra;
}

std::string linear_form(const IntVector& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    const Integer& c = row[i];
    if (c == 0) continue;
    const Integer mag = abs(c);
    const std::string var = "u" + std::to_string(i);
    const std::string body = mag == 1 ? var : to_string(mag) + "*" + var;
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + body;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string_view to_string(CoefficientRing ring) noexcept {
  return ring == CoefficientRing::Rational ? "Q" : "Z-conjectural";
}

KernelIdeal truncation_exponents(const CircleWeightSystem& ws) {
  require_quotient_preconditions(ws);
  const auto maps = lattice_maps(ws);
  const auto sectors = all_sectors(ws);
  KernelIdeal kernel;
  kernel.generators.reserve(sectors.size());
  for (const auto& sector : sectors) {
    const auto& projected = maps.per_sector_iota[static_cast<std::size_t>(sector.g)];
    KernelGenerator gen;
    gen.g = sector.g;
    // The only real vectors c supported on S_g with sum c_j e_j in the image
    // of the projected iota are nonzero multiples of it, so the minimal
    // support is where the projection is nonzero.
    for (std::size_t pos = 0; pos < projected.size(); ++pos) {
      if (projected[pos] == 0) continue;
      const Integer b(static_cast<long>(projected[pos]));
      gen.support.push_back(sector.fixed[pos]);
      // u_j -> b_j u turns b_j u_j into b_j^2 u (HYPER generators carry b_j
      // u_j); the SYMPLECTIC Stanley-Reisner product u_j becomes b_j u.
      gen.integral_coefficient *= ws.mode() == Mode::Hyper ? b * b : b;
    }
    gen.u_exponent = static_cast<unsigned>(gen.support.size());
    kernel.generators.push_back(std::move(gen));
  }
  return kernel;
}

FiniteGradedAlgebra::FiniteGradedAlgebra(std::vector<BasisElement> basis,
                                         Constants constants, CoefficientRing ring)
    : basis_(std::move(basis)), constants_(std::move(constants)), ring_(ring) {
  for (auto it = constants_.begin(); it != constants_.end();) {
    const auto [i, j] = it->first;
    if (i > j || j >= basis_.size()) {
      throw std::invalid_argument("structure constants must be keyed (i, j) with i <= j < dim");
    }
    auto& terms = it->second;
    std::erase_if(terms, [](const Term& t) { return t.coefficient.is_zero(); });
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.index < b.index; });
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (terms[k].index >= basis_.size() || (k && terms[k].index == terms[k - 1].index)) {
        throw std::invalid_argument("structure constant term index out of range or repeated");
      }
    }
    it = terms.empty() ? constants_.erase(it) : std::next(it);
  }
}

const Product& FiniteGradedAlgebra::product(std::size_t i, std::size_t j) const {
  static const Product kZero;
  const auto it = constants_.find(std::minmax(i, j));
  return it == constants_.end() ? kZero : it->second;
}

std::vector<Rational> FiniteGradedAlgebra::multiply(const std::vector<Rational>& x,
                                                    const std::vector<Rational>& y) const {
  std::vector<Rational> out(dimension());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      const Rational xy = x[i] * y[j];
      for (const auto& t : product(i, j)) out[t.index] += xy * t.coefficient;
    }
  }
  return out;
}

std::optional<std::size_t> FiniteGradedAlgebra::identity_index() const {
  for (std::size_t e = 0; e < dimension(); ++e) {
    bool is_unit = true;
    for (std::size_t j = 0; j < dimension() && is_unit; ++j) {
      const auto& p = product(e, j);
      is_unit = p.size() == 1 && p.front().index == j && p.front().coefficient == Rational(1);
    }
    if (is_unit) return e;
  }
  return std::nullopt;
}

bool FiniteGradedAlgebra::is_degree_additive() const {
  for (const auto& [key, terms] : constants_) {
    const Rational sum = basis_[key.first].degree + basis_[key.second].degree;
    for (const auto& t : terms) {
      if (basis_[t.index].degree != sum) return false;
    }
  }
  return true;
}

bool FiniteGradedAlgebra::is_associative() const {
  const std::size_t n = dimension();
  std::map<std::size_t, Rational> left;
  std::map<std::size_t, Rational> right;
  auto accumulate = [](std::map<std::size_t, Rational>& acc, const Rational& c,
                       const Product& p) {
    for (const auto& t : p) {
      auto& slot = acc[t.index];
      slot += c * t.coefficient;
      if (slot.is_zero()) acc.erase(t.index);
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ij = product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        left.clear();
        right.clear();
        for (const auto& t : ij) accumulate(left, t.coefficient, product(t.index, k));
        for (const auto& t : product(j, k)) accumulate(right, t.coefficient, product(i, t.index));
        if (left != right) return false;
      }
    }
  }
  return true;
}

FiniteGradedAlgebra cr_algebra(const CircleWeightSystem& ws) {
  return build_quotient(ws, CoefficientRing::Rational);
}

FiniteGradedAlgebra conjectural_integral_algebra(const CircleWeightSystem& ws) {
  return build_quotient(ws, CoefficientRing::IntegerConjectural);
}

MultivariablePresentation multivariable_presentation(const CircleWeightSystem& ws) {
  const auto kernel = truncation_exponents(ws);
  const auto maps = lattice_maps(ws);
  MultivariablePresentation p{ws, {}, {}, {}, {}};

  for (Residue g = 0; g < ws.order(); ++g) {
    for (Residue h = g; h < ws.order(); ++h) {
      const auto exponents = closed_form_exponents(ws, g, h);
      std::string factors;
      for (std::size_t i = 0; i < exponents.size(); ++i) {
        const auto b = ws.weights()[i];
        const std::string var = " u" + std::to_string(i) + ")";
        if (exponents[i].base) factors += "(" + std::to_string(b) + var;
        if (exponents[i].fiber) factors += "(" + std::to_string(-b) + var;
      }
      std::string rel = "a" + std::to_string(g) + "*a" + std::to_string(h) + " - a" +
                        std::to_string(reduce(g + h, ws.order()));
      if (!factors.empty()) rel += "*" + factors;
      p.i_relations.push_back(std::move(rel));
    }
  }
  for (const auto& row : maps.j_generators) p.j_relations.push_back(linear_form(row));
  for (const auto& gen : kernel.generators) {
    std::string line = "a" + std::to_string(gen.g) + "*";
    for (auto j : gen.support) {
      line += "(" + std::to_string(ws.weights()[j]) + " u" + std::to_string(j) + ")";
    }
    p.k_generators.push_back(std::move(line));
    p.k_reduced.push_back(basis_label(gen.g, gen.u_exponent));
  }
  return p;
}

std::string render_text(const MultivariablePresentation& p) {
  const auto& ws = p.system;
  std::ostringstream out;
  out << "ring Q[u0..u" << ws.size() - 1 << ", a0..a" << ws.order() - 1
      << "]/(I+J+K) mode=" << to_string(ws.mode()) << " weights=" << ws.weights_string()
      << " order=" << ws.order() << '\n';
  out << "I:\n";
  for (const auto& line : p.i_relations) out << "  " << line << '\n';
  out << "J:\n";
  for (const auto& line : p.j_relations) out << "  " << line << '\n';
  out << "K:\n";
  for (const auto& line : p.k_generators) out << "  " << line << '\n';
  out << "K over Q (u_i -> b_i u):\n";
  for (const auto& line : p.k_reduced) out << "  " << line << '\n';
  return out.str();
}

std::string render_latex(const MultivariablePresentation& p) {
  const auto& ws = p.system;
  const auto& b = ws.weights();
  std::ostringstream out;
  out << "\\mathbb{Q}[u_0,\\dots,u_{" << ws.size() - 1 << "},\\alpha_0,\\dots,\\alpha_{"
      << ws.order() - 1 << "}]/\\mathcal{I}+\\mathcal{J}+\\mathcal{K}\n";

  out << "\\mathcal{I} = \\langle ";
  bool first = true;
  for (Residue g = 0; g < ws.order(); ++g) {
    for (Residue h = g; h < ws.order(); ++h) {
      const auto exponents = closed_form_exponents(ws, g, h);
      out << (first ? "" : ",\\ ") << "\\alpha_{" << g << "}\\smile\\alpha_{" << h
          << "} - \\alpha_{" << reduce(g + h, ws.order()) << '}';
      for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i].base) out << '(' << b[i] << "u_{" << i << "})";
        if (exponents[i].fiber) out << '(' << -b[i] << "u_{" << i << "})";
      }
      first = false;
    }
  }
  out << " \\rangle\n";

  const auto maps = lattice_maps(ws);
  out << "\\mathcal{J} = \\langle ";
  for (std::size_t r = 0; r < maps.j_generators.size(); ++r) {
    std::string form = linear_form(maps.j_generators[r]);
    std::string tex;
    for (std::size_t c = 0; c < form.size(); ++c) {
      if (form[c] == '*') continue;
      if (form[c] == 'u') {
        std::size_t e = c + 1;
        while (e < form.size() && std::isdigit(static_cast<unsigned char>(form[e]))) ++e;
        tex += "u_{" + form.substr(c + 1, e - c - 1) + "}";
        c = e - 1;
      } else {
        tex += form[c];
      }
    }
    out << (r ? ",\\ " : "") << tex;
  }
  out << " \\rangle\n";

  const auto kernel = truncation_exponents(ws);
  out << "\\mathcal{K} = \\langle ";
  for (std::size_t s = 0; s < kernel.generators.size(); ++s) {
    const auto& gen = kernel.generators[s];
    out << (s ? ",\\ " : "") << "\\alpha_{" << gen.g << '}';
    for (auto j : gen.support) out << '(' << b[j] << "u_{" << j << "})";
  }
  out << " \\rangle\n";
  return out.str();
}

std::string render_text(const CircleWeightSystem& ws, const FiniteGradedAlgebra& a) {
  std::ostringstream out;
  out << "ring " << to_string(a.ring()) << " mode=" << to_string(ws.mode())
      << " weights=" << ws.weights_string() << " order=" << ws.order()
      << " dim=" << a.dimension() << '\n';
  if (a.ring() == CoefficientRing::IntegerConjectural) {
    out << "CONJECTURAL: integral structure is not certified\n";
  }
  out << "basis:\n";
  for (const auto& e : a.basis()) out << "  " << e.label << " deg " << e.degree.str() << '\n';
  out << "products:\n";
  for (const auto& [key, terms] : a.constants()) {
    out << "  " << a.basis()[key.first].label << " * " << a.basis()[key.second].label
        << " =";
    for (std::size_t t = 0; t < terms.size(); ++t) {
      out << (t ? " + " : " ") << terms[t].coefficient.str() << ' '
          << a.basis()[terms[t].index].label;
    }
    out << '\n';
  }
  if (a.ring() == CoefficientRing::IntegerConjectural) {
    out << "kernel:\n";
    for (const auto& gen : truncation_exponents(ws).generators) {
      out << "  " << to_string(gen.integral_coefficient) << ' '
          << basis_label(gen.g, gen.u_exponent) << '\n';
    }
  }
  return out.str();
}

std::string render_latex(const CircleWeightSystem& ws, const FiniteGradedAlgebra& a) {
  std::ostringstream out;
  out << "% " << to_string(a.ring()) << " Chen-Ruan ring, mode " << to_string(ws.mode())
      << ", weights " << ws.weights_string() << '\n';
  out << "\\begin{align*}\n";
  for (const auto& [key, terms] : a.constants()) {
    const auto& x = a.basis()[key.first];
    const auto& y = a.basis()[key.second];
    out << latex_label(x.sector, x.u_power) << "\\smile " << latex_label(y.sector, y.u_power)
        << " &= ";
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const auto& z = a.basis()[terms[t].index];
      const auto& c = terms[t].coefficient;
      if (t) out << " + ";
      if (c != Rational(1)) out << c.str() << "\\,";
      out << latex_label(z.sector, z.u_power);
    }
    out << " \\\\\n";
  }
  out << "\\end{align*}\n";
  return out.str();
}

}  // namespace orbiring
