#pragma once

#include "pcoset/matrix.hpp"

#include <cstdint>
#include <utility>

namespace pcoset {

/// A finitely generated O_p-submodule of Q_p^n: the Q-span of the free
/// generators plus the Z_(p)-span of the integral generators.
///
/// Canonical form (produced by canonicalize and by every operation below):
/// free generators in reduced row echelon form; integral generators zero on
/// the free pivot columns and in DvrEchelon form. Two modules are equal as
/// sets iff their canonical forms compare equal with operator==.
class Module {
public:
  Module() = default;
  /// The zero module of Q^n.
  explicit Module(std::size_t ambient) : ambient_(ambient), free_(0, ambient), int_(0, ambient) {}
  Module(std::size_t ambient, RatMatrix free_gens, RatMatrix int_gens);

  static Module standard_lattice(std::size_t n);
  static Module whole_space(std::size_t n);
  static Module subspace(RatMatrix rows);
  static Module lattice(RatMatrix rows);

  std::size_t ambient_dim() const { return ambient_; }
  const RatMatrix& free_gens() const { return free_; }
  const RatMatrix& int_gens() const { return int_; }

  /// True iff the module has been canonicalized for prime p.
  bool canonical_for(const Prime& p) const { return canonical_prime_ == p.value(); }

  friend bool operator==(const Module& a, const Module& b) {
    return a.ambient_ == b.ambient_ && a.free_ == b.free_ && a.int_ == b.int_;
  }

private:
  friend Module canonicalize(const Module&, const Prime&);
  std::size_t ambient_ = 0;
  RatMatrix free_;
  RatMatrix int_;
  std::uint64_t canonical_prime_ = 0;
};

/// Non-degenerate skew-symmetric form B(u, w) = u^T gram w.
class SymplecticForm {
public:
  /// Validates gram^T = -gram and invertibility; throws InputError otherwise.
  explicit SymplecticForm(RatMatrix gram);
  /// [[0, I_n], [-I_n, 0]] on Q^{2n}.
  static SymplecticForm standard(std::size_t n);
  /// B_a(v, v') - B_b(w, w') on (source coordinates, target coordinates).
  static SymplecticForm difference(const SymplecticForm& a, const SymplecticForm& b);

  std::size_t dim() const { return gram_.rows(); }
  const RatMatrix& gram() const { return gram_; }
  PadicRational operator()(std::span<const PadicRational> u, std::span<const PadicRational> w) const;

private:
  RatMatrix gram_;
};

Module canonicalize(const Module& r, const Prime& p);

/// Membership of x, decided against the canonical form.
bool contains_vector(const Module& r, std::span<const PadicRational> x, const Prime& p);
/// inner ⊆ outer.
bool contains(const Module& outer, const Module& inner, const Prime& p);
bool equal(const Module& a, const Module& b, const Prime& p);

Module sum(const Module& a, const Module& b, const Prime& p);
Module intersect(const Module& a, const Module& b, const Prime& p);
/// { A x : x in r }.
Module image(const RatMatrix& a, const Module& r, const Prime& p);
/// { x : A x in r }.
Module preimage(const RatMatrix& a, const Module& r, const Prime& p);
/// { x in domain : A x = 0 }.
Module module_kernel(const RatMatrix& a, const Module& domain, const Prime& p);

/// { x in Q^n : eqs x = 0 and integrality x in Z_(p)^h }. The primitive
/// behind kernels, intersections, preimages and duals.
Module solve_mixed(const RatMatrix& eqs, const RatMatrix& integrality, std::size_t n, const Prime& p);

struct DownUp {
  RatMatrix down;  // basis of the maximal subspace inside R
  RatMatrix up;    // basis of the minimal subspace containing R
};
DownUp down_up(const Module& r, const Prime& p);

/// Vectors w with B(v, w) in O_p for every v in r.
Module dual(const Module& r, const SymplecticForm& b, const Prime& p);
bool is_isotropic(const Module& r, const SymplecticForm& b, const Prime& p);
bool is_selfdual(const Module& r, const SymplecticForm& b, const Prime& p);
/// dual(R) ⊆ R and p R ⊆ dual(R).
bool is_almost_selfdual(const Module& r, const SymplecticForm& b, const Prime& p);

/// x ∈ R + p^t O_p^n.
bool approx_contains(std::span<const PadicRational> x, const Module& r, int t, const Prime& p);

/// Q ⊗ O_p^m inside H ⊗ ℓ_m for Q ⊆ H = Q^{2k}; coordinates follow the
/// slot layout: plus-block index i*m + s, minus-block offset k*m.
Module tensor_with_standard_lattice(const Module& q, std::size_t m, const Prime& p);

/// p^e R.
Module scaled(const Module& r, int e, const Prime& p);
/// R1 ⊕ R2 in Q^{n1+n2}; not canonicalized.
Module direct_sum(const Module& a, const Module& b);
/// Orthocomplement of a subspace (rows) under b.
RatMatrix orthocomplement(const RatMatrix& rows, const SymplecticForm& b);

bool is_compact(const Module& canonical);
bool is_lattice(const Module& canonical);
bool is_subspace(const Module& canonical);

}  // namespace pcoset
