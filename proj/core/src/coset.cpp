#include "pcoset/coset.hpp"

#include "pcoset/errors.hpp"

#include <algorithm>
#include <string>

namespace pcoset {

namespace {

void require_compatible(const BlockElement& g, const BlockElement& h, const char* what) {
  if (g.alpha() != h.alpha() || g.k() != h.k()) {
    throw DimensionMismatch(std::string(what) + ": block shapes (alpha, k) differ");
  }
}

}  // namespace

BlockElement::BlockElement(std::size_t alpha, std::size_t k, std::size_t m, RatMatrix matrix)
    : alpha_(alpha), k_(k), m_(m), matrix_(std::move(matrix)) {
  const std::size_t n = alpha + k * m;
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw DimensionMismatch("block element: expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
  if (sgn(determinant(matrix_)) == 0) throw Singular("block element: matrix is not invertible");
}

BlockElement BlockElement::identity(std::size_t alpha, std::size_t k, std::size_t m) {
  return BlockElement(alpha, k, m, RatMatrix::identity(alpha + k * m));
}

RatMatrix BlockElement::a() const { return matrix_.block(0, 0, alpha_, alpha_); }
RatMatrix BlockElement::b(std::size_t i) const { return matrix_.block(0, slot_offset(i), alpha_, m_); }
RatMatrix BlockElement::c(std::size_t i) const { return matrix_.block(slot_offset(i), 0, m_, alpha_); }
RatMatrix BlockElement::d(std::size_t i, std::size_t j) const {
  return matrix_.block(slot_offset(i), slot_offset(j), m_, m_);
}

BlockElement embed_I(const RatMatrix& u, std::size_t alpha, std::size_t k, const Prime& p) {
  if (!u.is_square()) throw InputError("embed_I: u is not square");
  if (u.transpose() * u != RatMatrix::identity(u.rows())) throw InputError("embed_I: u is not orthogonal");
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j)
      if (valuation(u(i, j), p) < 0) throw InputError("embed_I: u has a non-integral entry");
  const std::size_t m = u.rows();
  RatMatrix g = RatMatrix::identity(alpha + k * m);
  for (std::size_t i = 0; i < k; ++i) g.set_block(alpha + i * m, alpha + i * m, u);
  return BlockElement(alpha, k, m, std::move(g));
}

BlockElement theta_N(std::size_t m, std::size_t N, std::size_t alpha, std::size_t k) {
  const std::size_t slot = std::max(m, 2 * N);
  RatMatrix t = RatMatrix::identity(alpha + k * slot);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t o = alpha + i * slot;
    for (std::size_t s = 0; s < N; ++s) {
      t(o + s, o + s) = 0;
      t(o + N + s, o + N + s) = 0;
      t(o + s, o + N + s) = 1;
      t(o + N + s, o + s) = 1;
    }
  }
  return BlockElement(alpha, k, slot, std::move(t));
}

BlockElement operator*(const BlockElement& g, const BlockElement& h) {
  require_compatible(g, h, "block product");
  if (g.m() != h.m()) throw DimensionMismatch("block product: slot sizes differ");
  return BlockElement(g.alpha(), g.k(), g.m(), g.matrix() * h.matrix());
}

BlockElement coset_mul(const BlockElement& g, const BlockElement& h) {
  require_compatible(g, h, "coset_mul");
  const std::size_t alpha = g.alpha();
  const std::size_t k = g.k();
  const std::size_t l = g.m();
  const std::size_t m = h.m();
  const std::size_t w = l + m;
  RatMatrix f(alpha + k * w, alpha + k * w);
  const RatMatrix a = g.a();
  const RatMatrix a2 = h.a();
  f.set_block(0, 0, a * a2);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t oi = alpha + i * w;
    f.set_block(0, oi, g.b(i));
    f.set_block(0, oi + l, a * h.b(i));
    f.set_block(oi, 0, g.c(i) * a2);
    f.set_block(oi + l, 0, h.c(i));
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t oj = alpha + j * w;
      f.set_block(oi, oj, g.d(i, j));
      f.set_block(oi, oj + l, g.c(i) * h.b(j));
      f.set_block(oi + l, oj + l, h.d(i, j));
    }
  }
  return BlockElement(alpha, k, w, std::move(f));
}

RatMatrix spread_slots(const RatMatrix& g, std::size_t alpha, std::size_t k, std::size_t from, std::size_t to,
                       std::size_t at, std::size_t halves) {
  const std::size_t src_half = alpha + k * from;
  const std::size_t dst_half = alpha + k * to;
  if (g.rows() != halves * src_half || !g.is_square()) throw DimensionMismatch("spread_slots: matrix size");
  if (at + from > to) throw DimensionMismatch("spread_slots: target slot too small");
  std::vector<std::size_t> place(halves * src_half);
  for (std::size_t h = 0; h < halves; ++h) {
    for (std::size_t i = 0; i < alpha; ++i) place[h * src_half + i] = h * dst_half + i;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t s = 0; s < from; ++s)
        place[h * src_half + alpha + i * from + s] = h * dst_half + alpha + i * to + at + s;
  }
  RatMatrix out = RatMatrix::identity(halves * dst_half);
  for (std::size_t i = 0; i < place.size(); ++i) out(place[i], place[i]) = 0;
  for (std::size_t i = 0; i < place.size(); ++i)
    for (std::size_t j = 0; j < place.size(); ++j) out(place[i], place[j]) = g(i, j);
  return out;
}

BlockElement coset_mul_by_embedding(const BlockElement& g, const BlockElement& h) {
  require_compatible(g, h, "coset_mul_by_embedding");
  const std::size_t w = g.m() + h.m();
  const RatMatrix ge = spread_slots(g.matrix(), g.alpha(), g.k(), g.m(), w, 0);
  const RatMatrix he = spread_slots(h.matrix(), h.alpha(), h.k(), h.m(), w, g.m());
  return BlockElement(g.alpha(), g.k(), w, ge * he);
}

BlockElement theta_product(const BlockElement& g, const BlockElement& h, std::size_t N) {
  require_compatible(g, h, "theta_product");
  if (N < std::max(g.m(), h.m())) throw DimensionMismatch("theta_product: N below the slot sizes");
  const std::size_t slot = 2 * N;
  return pad(g, slot) * theta_N(slot, N, g.alpha(), g.k()) * pad(h, slot);
}

BlockElement involute(const BlockElement& g) {
  return BlockElement(g.alpha(), g.k(), g.m(), invert(g.matrix()));
}

BlockElement pad(const BlockElement& g, std::size_t m_new) {
  if (m_new < g.m()) throw DimensionMismatch("pad: new slot size is smaller");
  if (m_new == g.m()) return g;
  return BlockElement(g.alpha(), g.k(), m_new, spread_slots(g.matrix(), g.alpha(), g.k(), g.m(), m_new, 0));
}

}  // namespace pcoset
