#include "orbiring/comparator.hpp"

#include "orbiring/errors.hpp"
#include "orbiring/inertial.hpp"

#include <algorithm>
#include <set>

namespace orbiring {

std::size_t Fingerprint::pairing_rank(const Degree& a, const Degree& b) const {
  const auto it = pairing_ranks.find(std::minmax(a, b));
  return it == pairing_ranks.end() ? 0 : it->second;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                              [c](const auto& r) { return !r[c].is_zero(); });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    const auto& p = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Rational factor = rows[r][c] / p[c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * p[k];
    }
    ++rank;
  }
  return rank;
}

Fingerprint fingerprint(const FiniteGradedAlgebra& a) {
  Fingerprint fp;
  std::map<Degree, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    by_degree[a.basis()[i].degree].push_back(i);
  }
  for (const auto& [d, members] : by_degree) fp.hilbert[d] = members.size();

  for (auto x = by_degree.begin(); x != by_degree.end(); ++x) {
    for (auto y = x; y != by_degree.end(); ++y) {
      const Degree target = x->first + y->first;
      const auto z = by_degree.find(target);
      std::size_t rank = 0;
      if (z != by_degree.end()) {
        // one row per product of basis elements, in coordinates of A_{a+b}
        std::vector<std::vector<Rational>> rows;
        for (auto i : x->second) {
          for (auto j : y->second) {
            std::vector<Rational> row(z->second.size());
            for (const auto& t : a.product(i, j)) {
              const auto pos = std::find(z->second.begin(), z->second.end(), t.index);
              row[static_cast<std::size_t>(pos - z->second.begin())] = t.coefficient;
            }
            rows.push_back(std::move(row));
          }
        }
        rank = rational_rank(std::move(rows));
      }
      fp.pairing_ranks[{x->first, y->first}] = rank;
    }
  }
  return fp;
}

DistinguishResult distinguish(const FiniteGradedAlgebra& a, const FiniteGradedAlgebra& b) {
  if (a.ring() != b.ring()) {
    throw DomainError(ErrorKind::CoefficientMismatch,
                      "cannot compare algebras over different coefficient rings");
  }
  const auto fa = fingerprint(a);
  const auto fb = fingerprint(b);

  std::set<Degree> degrees;
  for (const auto& [d, n] : fa.hilbert) degrees.insert(d);
  for (const auto& [d, n] : fb.hilbert) degrees.insert(d);
  auto dim_at = [](const Fingerprint& fp, const Degree& d) -> std::size_t {
    const auto it = fp.hilbert.find(d);
    return it == fp.hilbert.end() ? 0 : it->second;
  };
  for (const auto& d : degrees) {
    const auto va = dim_at(fa, d);
    const auto vb = dim_at(fb, d);
    if (va != vb) {
      return {Verdict::Distinguished, Witness{"hilbert", {d}, {va, vb}}};
    }
  }

  std::set<std::pair<Degree, Degree>> pairs;
  for (const auto& [k, r] : fa.pairing_ranks) pairs.insert(k);
  for (const auto& [k, r] : fb.pairing_ranks) pairs.insert(k);
  for (const auto& [x, y] : pairs) {
    const auto va = fa.pairing_rank(x, y);
    const auto vb = fb.pairing_rank(x, y);
    if (va != vb) {
      return {Verdict::Distinguished, Witness{"pairing_rank", {x, y}, {va, vb}}};
    }
  }
  return {Verdict::Indistinguishable, std::nullopt};
}

bool rep_homotopy_equivalent(std::span<const Weight> a, std::span<const Weight> b) {
  auto nonzero_sorted = [](std::span<const Weight> w) {
    std::vector<Weight> out;
    std::copy_if(w.begin(), w.end(), std::back_inserter(out), [](Weight x) { return x != 0; });
    std::sort(out.begin(), out.end());
    return out;
  };
  return nonzero_sorted(a) == nonzero_sorted(b);
}

bool check_homotopy_theorem(const CircleWeightSystem& ws, std::size_t extra_zeros) {
  const auto base = inertial_presentation(ws);
  const auto padded = inertial_presentation(ws.with_appended_zeros(extra_zeros));
  return base.relations == padded.relations;
}

}  // namespace orbiring
