#pragma once

#include "pcoset/charfn.hpp"

#include <string>
#include <vector>

namespace pcoset {

enum class VertexClass { selfdual, almost_selfdual, neither };
std::string to_string(VertexClass c);

VertexClass classify(const Module& r, const SymplecticForm& b, const Prime& p);

/// R ⊇ R2. For lattices also checks that the flags R_↓, R^↑ agree.
bool has_arrow(const Module& r, const Module& r2, const Prime& p);

/// All almost self-dual R with O^{2n} ⊆ R ⊆ p^{-1} O^{2n}; the first entry is
/// O^{2n} itself. Bounded to n ≤ 2, p ≤ 5.
std::vector<Module> neighbors_over(std::size_t n, const Prime& p);

/// Subspaces of F_p^dim as row-reduced bases with entries in [0, p).
std::vector<RatMatrix> subspaces_mod_p(std::size_t dim, std::uint64_t p);

struct MorphismReport {
  bool equal = false;            // χ(Q, T) = χ(Q', T')
  bool contains = false;         // χ(Q, T) ⊇ χ(Q', T')
  bool source_almost = false;    // χ(Q, T) almost self-dual
  bool target_almost = false;    // χ(Q', T') almost self-dual
  bool pass() const { return contains && source_almost && target_almost; }
};

/// Requires Q ⊇ Q' and T ⊇ T'; throws InputError otherwise.
MorphismReport chi_graph_morphism_check(const BlockElement& g, const Module& q, const Module& t, const Module& q2,
                                        const Module& t2, const Prime& p);

struct ConvergenceReport {
  std::vector<int> first_absorbing;  // per depth 0..t: first index from which the probe stays inside
  std::vector<int> closeness;        // per index: largest t_j with R_j ⊆ R + p^{t_j} O^n (capped)
  bool absorbs = false;              // clause (i)
  bool approaches = false;           // clause (ii)
  bool down_inside = false;          // (R_j)_↓ ⊆ R_↓ from the first absorbing index on
  std::vector<std::string> witnesses;
  bool pass() const { return absorbs && approaches && down_inside; }
};

/// Finite-depth ↗ test of seq against limit.
ConvergenceReport arrow_convergence(const std::vector<Module>& seq, const Module& limit, int depth, int cap,
                                    const Prime& p);

/// The same test applied to χ(Q_j, T) against χ(Q∞, T).
ConvergenceReport continuity_check(const BlockElement& g, const std::vector<Module>& qseq, const Module& qlim,
                                   const Module& t, int depth, const Prime& p);

/// Q_j = p^{-j} O ⊕ p^j O inside Q^2, j = 0..count-1, and its limit line Q ⊕ 0.
std::vector<Module> standard_continuity_sequence(int count, const Prime& p);
Module standard_continuity_limit();

}  // namespace pcoset
