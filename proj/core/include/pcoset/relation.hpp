#pragma once

#include "pcoset/module.hpp"

namespace pcoset {

/// A relation V ⇒ W: a submodule of V ⊕ W, source coordinates first.
class Relation {
public:
  Relation() = default;
  Relation(std::size_t src, std::size_t dst, Module body);

  std::size_t src_dim() const { return src_; }
  std::size_t dst_dim() const { return dst_; }
  const Module& body() const { return body_; }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.body_ == b.body_;
  }

private:
  std::size_t src_ = 0;
  std::size_t dst_ = 0;
  Module body_;
};

Relation canonicalize(const Relation& r, const Prime& p);
bool equal(const Relation& a, const Relation& b, const Prime& p);

/// {(v, A v)} for A of shape dst x src.
Relation graph_of(const RatMatrix& a);
/// T regarded as a relation 0 ⇒ W.
Relation from_point(const Module& t);

Module kernel(const Relation& r, const Prime& p);
Module indef(const Relation& r, const Prime& p);
Module dom(const Relation& r, const Prime& p);
Module im(const Relation& r, const Prime& p);

Relation pseudo_inverse(const Relation& r);

/// Q ∘ P for P: V ⇒ W and Q: W ⇒ Y.
Relation compose(const Relation& q, const Relation& pr, const Prime& p);
/// {w : (v, w) in P for some v in T}.
Module apply_to_module(const Relation& r, const Module& t, const Prime& p);

/// B_src ⊕ (-B_dst) on source-first coordinates.
SymplecticForm difference_form(const SymplecticForm& src, const SymplecticForm& dst);

/// Self-dual under the difference form; with `strict`, kernel and
/// indefiniteness must also be compact.
bool is_nazarov(const Relation& r, const SymplecticForm& src, const SymplecticForm& dst, const Prime& p,
                bool strict);

}  // namespace pcoset
