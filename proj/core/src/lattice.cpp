#include "orbiring/lattice.hpp"

#include "orbiring/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbiring {
namespace {

void axpy(IntVector& y, const Integer& a, const IntVector& x) {
  for (std::size_t k = 0; k < y.size(); ++k) y[k] += a * x[k];
}

bool is_zero_row(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
  std::erase_if(rows, is_zero_row);
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("hermite_normal_form: ragged rows");
  }

  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    // Euclid on column c over rows [pivot_row, end): repeatedly move the
    // smallest nonzero entry up and reduce the others by it.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[pivot_row][c].get_mpz_t());
        axpy(rows[r], -q, rows[pivot_row]);
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[pivot_row][c] == 0) continue;
    if (rows[pivot_row][c] < 0) {
      for (auto& x : rows[pivot_row]) x = -x;
    }
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[pivot_row][c].get_mpz_t());
      axpy(rows[r], -q, rows[pivot_row]);
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

IntMatrix integer_kernel(std::span<const Weight> weights) {
  const std::size_t n = weights.size();
  // Unimodular column operations on the 1 x n matrix (b_i); basis[j] tracks
  // the column of the transform, so value[j] = b . basis[j] throughout.
  IntVector value(n);
  IntMatrix basis(n, IntVector(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) {
    value[i] = Integer(static_cast<long>(weights[i]));
    basis[i][i] = 1;
  }
  while (true) {
    std::size_t pivot = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (value[j] == 0) continue;
      if (pivot == n || abs(value[j]) < abs(value[pivot])) pivot = j;
    }
    if (pivot == n) break;
    bool done = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == pivot || value[j] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), value[j].get_mpz_t(), value[pivot].get_mpz_t());
      value[j] -= q * value[pivot];
      axpy(basis[j], -q, basis[pivot]);
      if (value[j] != 0) done = false;
    }
    if (done) {
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(pivot));
      break;
    }
  }
  auto hnf = hermite_normal_form(std::move(basis));
  std::sort(hnf.begin(), hnf.end());
  return hnf;
}

bool in_lattice(const IntMatrix& hnf, const IntVector& v) {
  // Rows of an HNF have strictly increasing pivot columns in some order; peel
  // them off from the leftmost pivot.
  IntMatrix rows = hnf;
  auto pivot_of = [](const IntVector& r) {
    return static_cast<std::size_t>(
        std::find_if(r.begin(), r.end(), [](const Integer& x) { return x != 0; }) -
        r.begin());
  };
  std::sort(rows.begin(), rows.end(), [&](const IntVector& a, const IntVector& b) {
    return pivot_of(a) < pivot_of(b);
  });
  IntVector rest = v;
  for (const auto& r : rows) {
    if (r.size() != rest.size()) return false;
    const auto c = pivot_of(r);
    if (c == r.size()) continue;
    if (rest[c] % r[c] != 0) return false;
    axpy(rest, -(rest[c] / r[c]), r);
  }
  return is_zero_row(rest);
}

LatticeMaps lattice_maps(const CircleWeightSystem& ws) {
  const auto& b = ws.weights();
  if (std::all_of(b.begin(), b.end(), [](Weight w) { return w == 0; })) {
    throw DomainError(ErrorKind::DegenerateWeights,
                      "lattice maps need at least one nonzero weight");
  }
  LatticeMaps maps;
  maps.iota = b;
  maps.j_generators = integer_kernel(b);
  for (const auto& sector : all_sectors(ws)) {
    std::vector<Weight> restricted;
    restricted.reserve(sector.fixed.size());
    for (auto i : sector.fixed) restricted.push_back(b[i]);
    maps.per_sector_iota.push_back(std::move(restricted));
  }
  return maps;
}

}  // namespace orbiring
