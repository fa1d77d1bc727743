#pragma once

#include "pcoset/coset.hpp"
#include "pcoset/relation.hpp"

#include <optional>

namespace pcoset {

// Coordinate layouts.
//   V       = (u+ [alpha], u- [alpha])
//   H ⊗ l_m = (x+ [k*m], x- [k*m]); h+_i ⊗ e_s sits at i*m + s
//   doubled = (u+, x+, u-, x-), acted on by diag(g, g^{t-1})

struct ChiOptions {
  /// Run both constructions and throw InternalConsistencyError on mismatch.
  bool cross_check = true;
  /// Reject Q, T that are not almost self-dual.
  bool require_almost_selfdual = true;
};

/// diag(g, g^{t-1}) in the doubled layout.
RatMatrix doubled(const BlockElement& g);

/// Standard [[0, I_n], [-I_n, 0]].
RatMatrix standard_J(std::size_t n);

/// {(x, y, u, v) : (v, y) = G (u, x)} as a relation (H⊗l_m)^2 ⇒ V ⊕ V.
Relation xi_relation(const RatMatrix& G, std::size_t alpha, std::size_t k, std::size_t m);

/// {(u, (u, x)) : x in Q ⊗ O^m} as a relation V ⇒ doubled space.
Relation attach_relation(const Module& q, std::size_t alpha, std::size_t k, std::size_t m, const Prime& p);

/// χ for an arbitrary matrix G acting on the doubled space.
Relation chi_doubled(const RatMatrix& G, std::size_t alpha, std::size_t k, std::size_t m, const Module& q,
                     const Module& t, const Prime& p, const ChiOptions& opt = {});

/// χ_g(Q, T) as a relation V ⇒ V.
Relation chi(const BlockElement& g, const Module& q, const Module& t, const Prime& p, const ChiOptions& opt = {});

/// χ for a symplectic matrix of size 2(alpha + k*m) in the doubled layout.
Relation chi_sp(const RatMatrix& gs, std::size_t alpha, std::size_t k, std::size_t m, const Module& q,
                const Module& t, const Prime& p, const ChiOptions& opt = {});

/// Product of symplectic representatives with slot sizes l and m.
RatMatrix sp_coset_mul(const RatMatrix& gs, std::size_t l, const RatMatrix& hs, std::size_t m, std::size_t alpha,
                       std::size_t k);

/// Basis rows of Λ(g) inside V ⊕ V.
RatMatrix lambda_subspace(const BlockElement& g);

struct SandwichReport {
  bool lattices = false;      // Q and T are both lattices
  bool down_contains = false; // Λ ⊆ χ_↓
  bool up_contained = false;  // χ^↑ ⊆ Λ^⊥
  bool down_equal = false;
  bool up_equal = false;
  bool pass() const { return down_contains && up_contained && (!lattices || (down_equal && up_equal)); }
};

SandwichReport lambda_sandwich_check(const BlockElement& g, const Module& q, const Module& t, const Prime& p);
/// Same comparison for an already computed χ_g(Q, T).
SandwichReport lambda_sandwich_from(const BlockElement& g, const Relation& chi_value, bool lattices, const Prime& p);

/// Symmetric kappa, tau; Q = graph(tau), T = graph(kappa) inside H.
struct BoundaryPair {
  RatMatrix kappa;
  RatMatrix tau;
};

/// Graph {(x, s x)} of a symmetric s as a Lagrangian subspace of H.
Module symmetric_graph(const RatMatrix& s);

struct BoundaryResult {
  Relation relation;              // Lagrangian subspace of V ⊕ V
  RatMatrix z;                    // (v+, u-) = Z (v-, u+)
  std::optional<RatMatrix> map;   // set when the relation is the graph of V -> V
};

/// Solves the boundary system; throws SingularBoundary when det Ω(kappa, tau) = 0.
BoundaryResult chi_boundary(const BlockElement& g, const BoundaryPair& bp, const Prime& p, bool cross_check = true);

/// det Ω(kappa, tau).
PadicRational omega_determinant(const BlockElement& g, const BoundaryPair& bp);

RatMatrix z_matrix(const BlockElement& g, const BoundaryPair& bp);

/// diag(λ I_half, λ^{-1} I_half).
RatMatrix m_lambda(const PadicRational& lambda, std::size_t half);

}  // namespace pcoset
