#pragma once

#include "pcoset/matrix.hpp"

namespace pcoset {

/// Invertible matrix of size alpha + k*m with rows and columns grouped as
/// (alpha, slot_1[m], ..., slot_k[m]). Represents its double coset.
class BlockElement {
public:
  /// Throws DimensionMismatch on a size mismatch, Singular if not invertible.
  BlockElement(std::size_t alpha, std::size_t k, std::size_t m, RatMatrix matrix);
  static BlockElement identity(std::size_t alpha, std::size_t k, std::size_t m);

  std::size_t alpha() const { return alpha_; }
  std::size_t k() const { return k_; }
  std::size_t m() const { return m_; }
  std::size_t size() const { return alpha_ + k_ * m_; }
  const RatMatrix& matrix() const { return matrix_; }

  /// Offset of slot i (0-based) inside the row/column index range.
  std::size_t slot_offset(std::size_t i) const { return alpha_ + i * m_; }

  RatMatrix a() const;
  RatMatrix b(std::size_t i) const;
  RatMatrix c(std::size_t i) const;
  RatMatrix d(std::size_t i, std::size_t j) const;

  friend bool operator==(const BlockElement&, const BlockElement&) = default;

private:
  std::size_t alpha_ = 0;
  std::size_t k_ = 0;
  std::size_t m_ = 0;
  RatMatrix matrix_;
};

/// 1_alpha ⊕ u ⊕ ... ⊕ u (k copies). u must be orthogonal with entries in Z_(p).
BlockElement embed_I(const RatMatrix& u, std::size_t alpha, std::size_t k, const Prime& p);

/// The swap [[0, 1_N], [1_N, 0]] ⊕ 1 in each slot of size max(m, 2N).
BlockElement theta_N(std::size_t m, std::size_t N, std::size_t alpha, std::size_t k);

/// Same-shape matrix product.
BlockElement operator*(const BlockElement& g, const BlockElement& h);

/// The product of double cosets as an explicit block matrix of slot size
/// l + m: within each slot the g-side coordinates come first.
BlockElement coset_mul(const BlockElement& g, const BlockElement& h);

/// Places a square matrix acting on (alpha, slots of size `from`) into a
/// larger slot size `to`, at offset `at` inside every slot; identity elsewhere.
/// Applied to each half separately when `halves` is 2 (symplectic layout).
RatMatrix spread_slots(const RatMatrix& g, std::size_t alpha, std::size_t k, std::size_t from, std::size_t to,
                       std::size_t at, std::size_t halves = 1);

/// coset_mul computed as the product of the two slot embeddings.
BlockElement coset_mul_by_embedding(const BlockElement& g, const BlockElement& h);

/// g · 𝕀(Θ_N) · h after padding both to slot size 2N; needs N ≥ max(l, m).
BlockElement theta_product(const BlockElement& g, const BlockElement& h, std::size_t N);

BlockElement involute(const BlockElement& g);

/// Extends every slot to size m_new by an identity tail.
BlockElement pad(const BlockElement& g, std::size_t m_new);

}  // namespace pcoset
