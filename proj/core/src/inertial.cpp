#include "orbiring/inertial.hpp"

#include "orbiring/errors.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace orbiring {
std::string ProductMonomial::str() const {
  if (coefficient == 0) return "0";
  return to_string(coefficient) + " u^" + std::to_string(u_exponent) + " a" +
         std::to_string(target);
}

ObstructionData obstruction_data(const CircleWeightSystem& ws, Residue g, Residue h) {
  const Residue m = ws.order();
  g = reduce(g, m);
  h = reduce(h, m);
  const Residue gh = reduce(g + h, m);
  const Residue inverse = reduce(-gh, m);
  const bool hyper = ws.mode() == Mode::Hyper;

  // Logweights are compared through their numerators over the common
  // denominator m: a_w(t) = [w t] / m, so a(g) + a(h) + a(k) = 2 iff the
  // numerators sum to 2m.
  auto numerator = [m](Weight w, Residue t) { return reduce(reduce(w, m) * t, m); };

  ObstructionData out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const Weight b = ws.weights()[i];
    const Residue ag = numerator(b, g);
    const Residue ah = numerator(b, h);
    if (ag + ah + numerator(b, inverse) == 2 * m) {
      out.base_lines.push_back(i);
      out.euler_coefficient *= Integer(static_cast<long>(b));
      out.u_exponent += 1;
    }
    if (hyper && numerator(-b, g) + numerator(-b, h) + numerator(-b, inverse) == 2 * m) {
      out.fiber_lines.push_back(i);
      out.euler_coefficient *= Integer(static_cast<long>(-b));
      out.u_exponent += 1;
    }
    if (ag != 0 && ah != 0 && numerator(b, gh) == 0) {
      out.pushforward.push_back(i);
      const Integer bz(static_cast<long>(b));
      if (hyper) {
        // the plane C_i + C_{n+1+i} carries weights b and -b
        out.euler_coefficient *= -bz * bz;
        out.u_exponent += 2;
      } else {
        out.euler_coefficient *= bz;
        out.u_exponent += 1;
      }
    }
  }
  return out;
}

namespace {

// Accumulates the Euler coefficient in 64 bits and reports overflow, so the
// hot paths avoid GMP and fall back to it only when needed.
struct SmallProduct {
  std::int64_t coefficient = 1;
  unsigned u_exponent = 0;
  bool overflow = false;

  void times(std::int64_t factor) {
    overflow = overflow || __builtin_mul_overflow(coefficient, factor, &coefficient);
    ++u_exponent;
  }
};

}  // namespace

ProductMonomial unit_product(const CircleWeightSystem& ws, Residue g, Residue h) {
  const Residue m = ws.order();
  g = reduce(g, m);
  h = reduce(h, m);
  const Residue gh = reduce(g + h, m);
  const bool hyper = ws.mode() == Mode::Hyper;

  // same conditions as obstruction_data, without building the index sets;
  // [b(g+h)] and [-b t] follow from [bg], [bh] without further divisions
  SmallProduct acc;
  for (const Weight b : ws.weights()) {
    const Residue r = (b >= 0 && b < m) ? b : reduce(b, m);
    const Residue ag = r * g % m;
    const Residue ah = r * h % m;
    if (ag == 0 && ah == 0) continue;
    Residue agh = ag + ah;
    if (agh >= m) agh -= m;
    const Residue ak = agh ? m - agh : 0;
    if (ag + ah + ak == 2 * m) acc.times(b);
    if (hyper && (ag ? m - ag : 0) + (ah ? m - ah : 0) + agh == 2 * m)
      acc.times(-b);
    if (ag != 0 && ah != 0 && agh == 0) {
      acc.times(b);
      if (hyper) acc.times(-b);
    }
  }
  if (acc.overflow) {
    const auto data = obstruction_data(ws, g, h);
    return {gh, data.euler_coefficient, data.u_exponent};
  }
  return {gh, Integer(static_cast<long>(acc.coefficient)), acc.u_exponent};
}

namespace {

void require_closed_form(const CircleWeightSystem& ws) {
  if (!ws.all_nonnegative()) {
    throw DomainError(ErrorKind::ClosedFormInapplicable,
                      "closed form requires nonnegative weights");
  }
  if (!ws.has_default_order()) {
    throw DomainError(ErrorKind::ClosedFormInapplicable,
                      "closed form requires the order to equal the weight lcm");
  }
}

// The brackets are not taken mod l, so each numerator is 0 or l.
unsigned closed_exponent(Residue numerator, Residue l) {
  if (numerator != 0 && numerator != l) {
    throw std::logic_error("closed-form exponent is not 0 or 1");
  }
  return numerator == l ? 1U : 0U;
}

ClosedFormExponents exponents_at(Weight b, Residue g, Residue h, Residue l, bool hyper) {
  const Residue r = b < l ? b : b % l;
  const Residue bg = r * g % l;
  const Residue bh = r * h % l;
  const Residue bgh = r * ((g + h) % l) % l;
  ClosedFormExponents e;
  e.base = closed_exponent(bg + bh - bgh, l);
  if (hyper) {
    auto neg = [l](Residue x) { return x ? l - x : 0; };
    e.fiber = closed_exponent(neg(bg) + neg(bh) - neg(bgh), l);
  }
  return e;
}

}  // namespace

std::vector<ClosedFormExponents> closed_form_exponents(const CircleWeightSystem& ws,
                                                       Residue g, Residue h) {
  require_closed_form(ws);
  const Residue l = ws.order();
  g = reduce(g, l);
  h = reduce(h, l);
  std::vector<ClosedFormExponents> out;
  out.reserve(ws.size());
  for (Weight b : ws.weights()) out.push_back(exponents_at(b, g, h, l, ws.mode() == Mode::Hyper));
  return out;
}

ProductMonomial unit_product_closed_form(const CircleWeightSystem& ws, Residue g,
                                         Residue h) {
  require_closed_form(ws);
  const Residue l = ws.order();
  g = reduce(g, l);
  h = reduce(h, l);
  const bool hyper = ws.mode() == Mode::Hyper;

  SmallProduct acc;
  for (Weight b : ws.weights()) {
    const auto e = exponents_at(b, g, h, l, hyper);
    if (e.base) acc.times(b);
    if (e.fiber) acc.times(-b);
  }
  if (!acc.overflow) return {reduce(g + h, l), Integer(static_cast<long>(acc.coefficient)), acc.u_exponent};

  ProductMonomial out{reduce(g + h, l), Integer(1), 0};
  for (Weight b : ws.weights()) {
    const auto e = exponents_at(b, g, h, l, hyper);
    const Integer bz(static_cast<long>(b));
    if (e.base) out.coefficient *= bz;
    if (e.fiber) out.coefficient *= -bz;
    out.u_exponent += e.base + e.fiber;
  }
  return out;
}

InertialElement::InertialElement(Residue order) : order_(order) {
  if (order < 1) throw std::invalid_argument("InertialElement: order must be positive");
}

InertialElement InertialElement::unit(Residue order, Residue g) {
  return component(order, g, UPoly(Rational(1)));
}

InertialElement InertialElement::component(Residue order, Residue g, const UPoly& poly) {
  InertialElement x(order);
  x.add(g, poly);
  return x;
}

UPoly InertialElement::at(Residue g) const {
  const auto it = components_.find(reduce(g, order_));
  return it == components_.end() ? UPoly() : it->second;
}

InertialElement& InertialElement::add(Residue g, const UPoly& poly) {
  if (poly.is_zero()) return *this;
  g = reduce(g, order_);
  auto [it, inserted] = components_.try_emplace(g, poly);
  if (!inserted) {
    it->second += poly;
    if (it->second.is_zero()) components_.erase(it);
  }
  return *this;
}

InertialElement& InertialElement::operator+=(const InertialElement& rhs) {
  if (rhs.order_ != order_) {
    throw std::invalid_argument("InertialElement: sector orders differ");
  }
  for (const auto& [g, p] : rhs.components_) add(g, p);
  return *this;
}

std::string InertialElement::str() const {
  if (components_.empty()) return "0";
  std::string out;
  for (const auto& [g, p] : components_) {
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += it->second.str() + " u^" + std::to_string(it->first) + " a" +
             std::to_string(g);
    }
  }
  return out;
}

InertialElement inertial_product(const InertialElement& x, const InertialElement& y,
                                 const CircleWeightSystem& ws) {
  if (x.order() != ws.order() || y.order() != ws.order()) {
    throw std::invalid_argument("inertial_product: element order differs from system");
  }
  InertialElement out(ws.order());
  for (const auto& [g, p] : x.components()) {
    for (const auto& [h, q] : y.components()) {
      const auto mono = unit_product(ws, g, h);
      if (mono.coefficient == 0) continue;
      out.add(mono.target, p * q * UPoly::monomial(Rational(mono.coefficient),
                                                   mono.u_exponent));
    }
  }
  return out;
}

InertialPresentation inertial_presentation(const CircleWeightSystem& ws) {
  if (!ws.all_nonnegative()) {
    throw DomainError(ErrorKind::ClosedFormInapplicable,
                      "inertial presentation requires nonnegative weights");
  }
  const bool cross_check = ws.has_default_order();
  InertialPresentation p{ws, {}, {}};
  p.generator_degrees.reserve(static_cast<std::size_t>(ws.order()));
  for (Residue g = 0; g < ws.order(); ++g) {
    p.generator_degrees.push_back(sector_data(ws, g).degree);
  }
  for (Residue g = 0; g < ws.order(); ++g) {
    for (Residue h = g; h < ws.order(); ++h) {
      auto mono = unit_product(ws, g, h);
      if (cross_check && unit_product_closed_form(ws, g, h) != mono) {
        throw std::logic_error("closed form disagrees with the definitional product at (" +
                               std::to_string(g) + "," + std::to_string(h) + ")");
      }
      p.relations.push_back({g, h, std::move(mono)});
    }
  }
  return p;
}

std::string render_text(const InertialPresentation& p) {
  const auto& ws = p.system;
  std::ostringstream out;
  out << "ring Z[u, a0..a" << ws.order() - 1 << "] mode=" << to_string(ws.mode())
      << " weights=" << ws.weights_string() << " order=" << ws.order() << '\n';
  for (const auto& r : p.relations) {
    out << 'a' << r.g << "*a" << r.h << " = " << r.product.str() << '\n';
  }
  return out.str();
}

std::string render_latex(const InertialPresentation& p) {
  const auto& ws = p.system;
  std::ostringstream out;
  out << "\\mathbb{Z}[u,\\alpha_0,\\dots,\\alpha_{" << ws.order() - 1
      << "}]/\\mathcal{I}\\quad\\text{(" << to_string(ws.mode()) << ", weights "
      << ws.weights_string() << ")}\n";
  out << "\\begin{align*}\n";
  for (const auto& r : p.relations) {
    out << "\\alpha_{" << r.g << "}\\smile\\alpha_{" << r.h << "} &= ";
    const auto& mono = r.product;
    if (mono.coefficient == 0) {
      out << "0";
    } else {
      if (mono.u_exponent == 0) {
        out << to_string(mono.coefficient);
      } else {
        if (mono.coefficient == -1) {
          out << '-';
        } else if (mono.coefficient != 1) {
          out << to_string(mono.coefficient);
        }
        out << 'u';
        if (mono.u_exponent > 1) out << "^{" << mono.u_exponent << '}';
      }
      out << "\\,\\alpha_{" << mono.target << '}';
    }
    out << " \\\\\n";
  }
  out << "\\end{align*}\n";
  return out.str();
}

}  // namespace orbiring
