#include "orbiring/weights.hpp"

#include "orbiring/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>

namespace orbiring {
namespace {

// Sector enumeration is linear in m, and residue products w*g must fit in
// 64 bits, so orders are capped well below that.
constexpr Residue kMaxOrder = Residue{1} << 31;

Residue checked_order(Residue m) {
  if (m < 1) {
    throw DomainError(ErrorKind::InvalidArgument,
                      "sector order must be positive, got " + std::to_string(m));
  }
  if (m > kMaxOrder) {
    throw DomainError(ErrorKind::InvalidArgument,
                      "sector order " + std::to_string(m) + " is too large");
  }
  return m;
}

bool is_default_order(std::span<const Weight> weights, Residue m) {
  try {
    return default_order(weights) == m;
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace

std::string_view to_string(Mode mode) noexcept {
  return mode == Mode::Symplectic ? "SYMPLECTIC" : "HYPER";
}

Mode parse_mode(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "symplectic") return Mode::Symplectic;
  if (lower == "hyper") return Mode::Hyper;
  throw std::invalid_argument("unknown mode '" + std::string(text) +
                              "' (expected symplectic or hyper)");
}

Residue default_order(std::span<const Weight> weights) {
  Residue l = 1;
  for (Weight w : weights) {
    if (w == 0) continue;
    const Residue a = w < 0 ? -w : w;
    l = std::lcm(l, a);
    if (l > kMaxOrder) {
      throw DomainError(ErrorKind::InvalidArgument, "lcm of weights is too large");
    }
  }
  return l;
}

Rational logweight(Weight w, Residue g, Residue m) {
  checked_order(m);
  const Residue r = reduce(reduce(w, m) * reduce(g, m), m);
  return Rational(Integer(static_cast<long>(r)), Integer(static_cast<long>(m)));
}

CircleWeightSystem::CircleWeightSystem(std::vector<Weight> weights, Mode mode)
    : weights_(std::move(weights)),
      mode_(mode),
      order_(default_order(weights_)),
      default_order_(true) {}

CircleWeightSystem::CircleWeightSystem(std::vector<Weight> weights, Mode mode,
                                       Residue order)
    : weights_(std::move(weights)),
      mode_(mode),
      order_(checked_order(order)),
      default_order_(is_default_order(weights_, order_)) {}

bool CircleWeightSystem::all_positive() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](Weight w) { return w > 0; });
}

bool CircleWeightSystem::all_nonnegative() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](Weight w) { return w >= 0; });
}

CircleWeightSystem CircleWeightSystem::with_appended_zeros(std::size_t k) const {
  auto w = weights_;
  w.insert(w.end(), k, 0);
  return CircleWeightSystem(std::move(w), mode_, order_);
}

std::string CircleWeightSystem::weights_string() const {
  std::string out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(weights_[i]);
  }
  return out;
}

Sector sector_data(const CircleWeightSystem& ws, Residue g) {
  const Residue m = ws.order();
  Sector s;
  s.g = reduce(g, m);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const Weight b = ws.weights()[i];
    if (reduce(reduce(b, m) * s.g, m) == 0) s.fixed.push_back(i);
    s.age += logweight(b, s.g, m);
    if (ws.mode() == Mode::Hyper) s.age += logweight(-b, s.g, m);
  }
  s.degree = Rational(2) * s.age;
  return s;
}

std::vector<Sector> all_sectors(const CircleWeightSystem& ws) {
  std::vector<Sector> out;
  out.reserve(static_cast<std::size_t>(ws.order()));
  for (Residue g = 0; g < ws.order(); ++g) out.push_back(sector_data(ws, g));
  return out;
}

std::vector<Weight> parse_weights(std::string_view text) {
  std::vector<Weight> out;
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  auto trim = [&](std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    Weight value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last) {
      throw std::invalid_argument("malformed weight '" + std::string(token) + "'");
    }
    // keep |w| * m within 64 bits downstream
    if (value > kMaxOrder || value < -kMaxOrder) {
      throw std::invalid_argument("weight " + std::string(token) + " out of range");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

}  // namespace orbiring
