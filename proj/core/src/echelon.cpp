#include "pcoset/echelon.hpp"

#include "pcoset/errors.hpp"

namespace pcoset {

namespace {

// row_dst -= f * row_src, starting at column c0.
void axpy_row(RatMatrix& m, std::size_t dst, std::size_t src, const PadicRational& f, std::size_t c0) {
  PadicRational t;
  for (std::size_t j = c0; j < m.cols(); ++j) {
    if (sgn(m(src, j)) == 0) continue;
    t = f * m(src, j);
    m(dst, j) -= t;
  }
}

}  // namespace

DvrEchelon dvr_echelon(const RatMatrix& input, const Prime& p) {
  RatMatrix m = input.without_zero_rows();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  DvrEchelon out;
  std::vector<std::size_t> pivot_cols;

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    int best_v = kInfiniteValuation;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      const int v = valuation(m(i, c), p);
      if (v < best_v) {
        best_v = v;
        best = i;
      }
    }
    if (best == rows) continue;
    m.swap_rows(r, best);

    const PadicRational pa = prime_power(p, best_v);
    const PadicRational unit_inv = pa / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= unit_inv;

    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      const PadicRational f = m(i, c) / pa;
      axpy_row(m, i, r, f, c);
    }
    pivot_cols.push_back(c);
    out.exponents.push_back(best_v);
    ++r;
  }

  // Canonical residues above each pivot; ascending j keeps earlier columns fixed.
  for (std::size_t j = 0; j < r; ++j) {
    const std::size_t c = pivot_cols[j];
    const PadicRational pa = prime_power(p, out.exponents[j]);
    for (std::size_t i = 0; i < j; ++i) {
      const PadicRational& x = m(i, c);
      if (sgn(x) == 0) continue;
      const PadicRational rep = residue_below(x, out.exponents[j], p);
      if (rep == x) continue;
      const PadicRational f = (x - rep) / pa;
      axpy_row(m, i, j, f, c);
    }
  }

  out.matrix = m.block(0, 0, r, cols);
  for (std::size_t i = 0; i < r; ++i) out.pivots.emplace_back(i, pivot_cols[i]);
  return out;
}

std::optional<RatVector> echelon_coordinates(const DvrEchelon& e, std::span<const PadicRational> x) {
  if (x.size() != e.matrix.cols()) throw DimensionMismatch("echelon_coordinates: length mismatch");
  RatVector rest(x.begin(), x.end());
  RatVector coeff(e.rank());
  PadicRational t;
  for (std::size_t i = 0; i < e.rank(); ++i) {
    const std::size_t c = e.pivots[i].second;
    for (std::size_t j = (i == 0 ? 0 : e.pivots[i - 1].second + 1); j < c; ++j) {
      if (sgn(rest[j]) != 0) return std::nullopt;
    }
    if (sgn(rest[c]) == 0) continue;
    coeff[i] = rest[c] / e.matrix(i, c);
    for (std::size_t j = c; j < rest.size(); ++j) {
      if (sgn(e.matrix(i, j)) == 0) continue;
      t = coeff[i] * e.matrix(i, j);
      rest[j] -= t;
    }
  }
  for (const auto& v : rest)
    if (sgn(v) != 0) return std::nullopt;
  return coeff;
}

bool echelon_contains(const DvrEchelon& e, std::span<const PadicRational> x, const Prime& p) {
  const auto coeff = echelon_coordinates(e, x);
  if (!coeff) return false;
  for (const auto& c : *coeff)
    if (valuation(c, p) < 0) return false;
  return true;
}

}  // namespace pcoset
