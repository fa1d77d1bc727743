#pragma once

#include "pcoset/coset.hpp"
#include "pcoset/relation.hpp"

#include <cstdint>
#include <string_view>

namespace pcoset {

/// splitmix64; cheap, splittable, and identical on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin(unsigned one_in = 2) { return uniform(0, one_in - 1) == 0; }

private:
  std::uint64_t state_;
};

/// Per-trial seed derived from (seed, suite, trial).
std::uint64_t subseed(std::uint64_t seed, std::string_view suite, std::uint64_t trial);

/// Cayley transform (1 - S)(1 + S)^{-1} of a skew S with entries in pZ, times
/// a random signed permutation.
RatMatrix sample_orthogonal_int(std::size_t size, const Prime& p, Rng& rng);

/// Invertible matrix with small integer entries, sometimes one row scaled by p^{±1}.
BlockElement sample_block_element(std::size_t alpha, std::size_t k, std::size_t m, const Prime& p, Rng& rng);

/// SL(2, Z) element with small entries.
RatMatrix sample_sl2_integral(Rng& rng);

/// Random product of elementary symplectic matrices for standard_J(n).
RatMatrix sample_symplectic(std::size_t n, const Prime& p, Rng& rng, int steps = 3);

/// Random symmetric matrix with small integer entries.
RatMatrix sample_symmetric(std::size_t k, Rng& rng);

enum class SelfDualKind { lattice, lagrangian, mixed, any };

/// Self-dual module of Q^{2n} under the standard form: a symplectic image of a normal form.
Module sample_selfdual(std::size_t n, const Prime& p, Rng& rng, SelfDualKind kind = SelfDualKind::any);

/// Almost self-dual module (at least one p^{-1}O ⊕ O pair in its normal form).
Module sample_almost_selfdual(std::size_t n, const Prime& p, Rng& rng, bool allow_lines = true);

/// Change of basis turning the standard form on Q^{2(s+d)} into the
/// difference form of standard(s) and standard(d).
RatMatrix difference_basis(std::size_t s, std::size_t d);

/// Self-dual relation Q^{2s} ⇒ Q^{2d} under the difference form, as a symplectic image.
Relation sample_selfdual_relation(std::size_t s, std::size_t d, const Prime& p, Rng& rng,
                                  SelfDualKind kind = SelfDualKind::any);

/// Grows `seed` (isotropic under b) to a self-dual module by adjoining random
/// elements of its dual. Throws SamplerFailure after 64 steps.
Module saturate(const Module& seed, const SymplecticForm& b, const Prime& p, Rng& rng);

/// Self-dual relation from a random isotropic seed, saturated.
Relation sample_saturated_relation(std::size_t s, std::size_t d, const Prime& p, Rng& rng);

}  // namespace pcoset
