#include "orbiring/serialize.hpp"

#include <json.hpp>

#include <stdexcept>

namespace orbiring {
namespace {

using Json = nlohmann::ordered_json;

Json upoly_json(const UPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, c.str()}));
  return out;
}

Json hilbert_json(const FiniteGradedAlgebra& a) {
  Json out = Json::object();
  for (const auto& [d, n] : fingerprint(a).hilbert) out[d.str()] = n;
  return out;
}

std::pair<Residue, unsigned> parse_label(const std::string& label) {
  // u^k*a{g}
  const auto star = label.find("*a");
  if (label.rfind("u^", 0) != 0 || star == std::string::npos) {
    throw std::invalid_argument("malformed basis label '" + label + "'");
  }
  return {std::stoll(label.substr(star + 2)),
          static_cast<unsigned>(std::stoul(label.substr(2, star - 2)))};
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  return v == Verdict::Distinguished ? "DISTINGUISHED" : "INDISTINGUISHABLE";
}

std::string upoly_to_json(const UPoly& p) { return upoly_json(p).dump(); }

UPoly upoly_from_json(const std::string& text) {
  try {
    UPoly::Terms terms;
    for (const auto& pair : Json::parse(text)) {
      terms[pair.at(0).get<unsigned>()] = Rational::parse(pair.at(1).get<std::string>());
    }
    return UPoly::from_terms(terms);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("upoly_from_json: ") + e.what());
  }
}

std::string element_to_json(const InertialElement& x) {
  Json sectors = Json::array();
  for (const auto& [g, p] : x.components()) {
    sectors.push_back({{"g", g}, {"polynomial", upoly_json(p)}});
  }
  return Json{{"order", x.order()}, {"sectors", sectors}}.dump();
}

std::string presentation_to_json(const InertialPresentation& p) {
  const auto& ws = p.system;
  Json degrees = Json::array();
  for (const auto& d : p.generator_degrees) degrees.push_back(d.str());
  Json relations = Json::array();
  for (const auto& r : p.relations) {
    relations.push_back({{"g", r.g},
                         {"h", r.h},
                         {"target", r.product.target},
                         {"coefficient", to_string(r.product.coefficient)},
                         {"u_exponent", r.product.u_exponent}});
  }
  Json out{{"weights", ws.weights()},
           {"mode", to_string(ws.mode())},
           {"order", ws.order()},
           {"coefficients", "Z"},
           {"generator_degrees", degrees},
           {"relations", relations}};
  return out.dump(2);
}

std::string cr_to_json(const CircleWeightSystem& ws, const FiniteGradedAlgebra& a,
                       int indent) {
  const auto kernel = truncation_exponents(ws);
  Json sectors = Json::array();
  for (const auto& s : all_sectors(ws)) {
    sectors.push_back({{"g", s.g},
                       {"fixed", s.fixed},
                       {"age", s.age.str()},
                       {"degree", s.degree.str()},
                       {"truncation", kernel.truncation(s.g)}});
  }
  Json basis = Json::array();
  for (const auto& e : a.basis()) {
    basis.push_back({{"label", e.label}, {"degree", e.degree.str()}});
  }
  Json constants = Json::array();
  for (const auto& [key, terms] : a.constants()) {
    Json row = Json::array();
    for (const auto& t : terms) row.push_back(Json::array({t.index, t.coefficient.str()}));
    constants.push_back(Json::array({key.first, key.second, row}));
  }
  Json out{{"weights", ws.weights()},
           {"mode", to_string(ws.mode())},
           {"order", ws.order()},
           {"sectors", sectors},
           {"basis", basis},
           {"structure_constants", constants},
           {"hilbert", hilbert_json(a)},
           {"coefficients", to_string(a.ring())}};
  if (a.ring() == CoefficientRing::IntegerConjectural) {
    Json torsion = Json::array();
    for (const auto& gen : kernel.generators) {
      torsion.push_back({{"g", gen.g},
                         {"coefficient", to_string(gen.integral_coefficient)},
                         {"u_exponent", gen.u_exponent}});
    }
    out["kernel"] = torsion;
  }
  return out.dump(indent);
}

ParsedCrRing cr_from_json(const std::string& text) {
  try {
    const auto j = Json::parse(text);
    CircleWeightSystem ws(j.at("weights").get<std::vector<Weight>>(),
                          parse_mode(j.at("mode").get<std::string>()),
                          j.at("order").get<Residue>());
    std::vector<BasisElement> basis;
    for (const auto& e : j.at("basis")) {
      const auto label = e.at("label").get<std::string>();
      const auto [g, k] = parse_label(label);
      basis.push_back({label, g, k, Rational::parse(e.at("degree").get<std::string>())});
    }
    FiniteGradedAlgebra::Constants constants;
    for (const auto& row : j.at("structure_constants")) {
      Product terms;
      for (const auto& t : row.at(2)) {
        terms.push_back({t.at(0).get<std::size_t>(),
                         Rational::parse(t.at(1).get<std::string>())});
      }
      constants[{row.at(0).get<std::size_t>(), row.at(1).get<std::size_t>()}] =
          std::move(terms);
    }
    const auto ring_tag = j.at("coefficients").get<std::string>();
    CoefficientRing ring;
    if (ring_tag == "Q") {
      ring = CoefficientRing::Rational;
    } else if (ring_tag == "Z-conjectural") {
      ring = CoefficientRing::IntegerConjectural;
    } else {
      throw std::invalid_argument("unknown coefficients tag '" + ring_tag + "'");
    }
    return {std::move(ws), FiniteGradedAlgebra(std::move(basis), std::move(constants), ring)};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("cr_from_json: ") + e.what());
  }
}

std::string distinguish_to_json(const DistinguishResult& r, int indent) {
  Json out{{"verdict", to_string(r.verdict)}, {"witness", nullptr}};
  if (r.witness) {
    Json at = Json::array();
    for (const auto& d : r.witness->at) at.push_back(d.str());
    out["witness"] = {{"invariant", r.witness->invariant},
                      {"at", at},
                      {"values", {r.witness->values.first, r.witness->values.second}}};
  }
  return out.dump(indent);
}

}  // namespace orbiring
