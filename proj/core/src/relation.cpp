#include "pcoset/relation.hpp"

#include "pcoset/errors.hpp"

#include <string>

namespace pcoset {

namespace {

// [0 | I] or [I | 0] style projections out of V ⊕ W.
RatMatrix projector(std::size_t keep, std::size_t before, std::size_t after) {
  RatMatrix m(keep, before + keep + after);
  for (std::size_t i = 0; i < keep; ++i) m(i, before + i) = 1;
  return m;
}

}  // namespace

Relation::Relation(std::size_t src, std::size_t dst, Module body) : src_(src), dst_(dst), body_(std::move(body)) {
  if (body_.ambient_dim() != src + dst) {
    throw DimensionMismatch("relation: body ambient " + std::to_string(body_.ambient_dim()) + " != " +
                            std::to_string(src) + " + " + std::to_string(dst));
  }
}

Relation canonicalize(const Relation& r, const Prime& p) {
  return Relation(r.src_dim(), r.dst_dim(), canonicalize(r.body(), p));
}

bool equal(const Relation& a, const Relation& b, const Prime& p) {
  return a.src_dim() == b.src_dim() && a.dst_dim() == b.dst_dim() && equal(a.body(), b.body(), p);
}

Relation graph_of(const RatMatrix& a) {
  const std::size_t src = a.cols();
  const std::size_t dst = a.rows();
  return Relation(src, dst, Module::subspace(hstack(RatMatrix::identity(src), a.transpose())));
}

Relation from_point(const Module& t) { return Relation(0, t.ambient_dim(), t); }

Module kernel(const Relation& r, const Prime& p) {
  const std::size_t s = r.src_dim();
  const std::size_t d = r.dst_dim();
  const Module k = module_kernel(projector(d, s, 0), r.body(), p);
  return image(projector(s, 0, d), k, p);
}

Module indef(const Relation& r, const Prime& p) {
  const std::size_t s = r.src_dim();
  const std::size_t d = r.dst_dim();
  const Module k = module_kernel(projector(s, 0, d), r.body(), p);
  return image(projector(d, s, 0), k, p);
}

Module dom(const Relation& r, const Prime& p) { return image(projector(r.src_dim(), 0, r.dst_dim()), r.body(), p); }

Module im(const Relation& r, const Prime& p) { return image(projector(r.dst_dim(), r.src_dim(), 0), r.body(), p); }

Relation pseudo_inverse(const Relation& r) {
  const std::size_t s = r.src_dim();
  const std::size_t d = r.dst_dim();
  // (v, w) -> (w, v)
  RatMatrix swap(s + d, s + d);
  for (std::size_t i = 0; i < d; ++i) swap(i, s + i) = 1;
  for (std::size_t i = 0; i < s; ++i) swap(d + i, i) = 1;
  const RatMatrix st = swap.transpose();
  const Module& b = r.body();
  return Relation(d, s, Module(s + d, b.free_gens() * st, b.int_gens() * st));
}

Relation compose(const Relation& q, const Relation& pr, const Prime& p) {
  if (pr.dst_dim() != q.src_dim()) {
    throw DimensionMismatch("compose: middle dimensions " + std::to_string(pr.dst_dim()) + " and " +
                            std::to_string(q.src_dim()));
  }
  const std::size_t v = pr.src_dim();
  const std::size_t w = pr.dst_dim();
  const std::size_t y = q.dst_dim();
  const std::size_t total = v + 2 * w + y;

  // Intersect P ⊕ Q with the diagonal H = {(v, w, w, y)} inside V⊕W⊕W⊕Y...
  RatMatrix diag(w, total);
  for (std::size_t i = 0; i < w; ++i) {
    diag(i, v + i) = 1;
    diag(i, v + w + i) = -1;
  }
  const Module inter = module_kernel(diag, direct_sum(pr.body(), q.body()), p);

  // ...then pass to H / (0⊕W⊕W⊕0), i.e. keep (v, y).
  RatMatrix theta(v + y, total);
  for (std::size_t i = 0; i < v; ++i) theta(i, i) = 1;
  for (std::size_t i = 0; i < y; ++i) theta(v + i, v + 2 * w + i) = 1;
  return Relation(v, y, image(theta, inter, p));
}

Module apply_to_module(const Relation& r, const Module& t, const Prime& p) {
  if (t.ambient_dim() != r.src_dim()) throw DimensionMismatch("apply_to_module: module is not over the source");
  return compose(r, from_point(t), p).body();
}

SymplecticForm difference_form(const SymplecticForm& src, const SymplecticForm& dst) {
  return SymplecticForm::difference(src, dst);
}

bool is_nazarov(const Relation& r, const SymplecticForm& src, const SymplecticForm& dst, const Prime& p,
                bool strict) {
  if (src.dim() != r.src_dim() || dst.dim() != r.dst_dim()) throw DimensionMismatch("is_nazarov: form dimensions");
  if (!is_selfdual(r.body(), difference_form(src, dst), p)) return false;
  if (!strict) return true;
  return is_compact(kernel(r, p)) && is_compact(indef(r, p));
}

}  // namespace pcoset
