#pragma once

#include "pcoset/matrix.hpp"

#include <utility>
#include <vector>

namespace pcoset {

/// Canonical generator matrix of a Z_(p)-row span (Hermite form over the
/// local ring). Row i has pivot p^{exponents[i]} at column pivots[i].second;
/// pivot columns strictly increase, entries below pivots vanish, and each
/// entry above pivot j is the expansion residue below p^{exponents[j]}.
/// Equal row spans produce identical echelons.
struct DvrEchelon {
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::vector<int> exponents;
  RatMatrix matrix;  // nonzero rows only

  std::size_t rank() const { return matrix.rows(); }
  friend bool operator==(const DvrEchelon&, const DvrEchelon&) = default;
};

DvrEchelon dvr_echelon(const RatMatrix& m, const Prime& p);

/// Coefficients c in Q^rank with x = sum c_i row_i when x lies in the Q-span
/// of the echelon rows; nullopt otherwise. x is in the Z_(p)-span iff all
/// c_i have nonnegative valuation.
std::optional<RatVector> echelon_coordinates(const DvrEchelon& e, std::span<const PadicRational> x);

bool echelon_contains(const DvrEchelon& e, std::span<const PadicRational> x, const Prime& p);

}  // namespace pcoset
