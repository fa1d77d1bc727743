#include "pcoset/charfn.hpp"

#include "pcoset/errors.hpp"

#include <string>

namespace pcoset {

namespace {

struct Dims {
  std::size_t alpha, k, m;
  std::size_t km() const { return k * m; }
  std::size_t half() const { return alpha + k * m; }  // one half of the doubled space
};

// Doubled-layout index of V coordinate i and of H⊗l_m coordinate j.
std::size_t v_slot(const Dims& d, std::size_t i) { return i < d.alpha ? i : d.half() + (i - d.alpha); }
std::size_t x_slot(const Dims& d, std::size_t j) {
  return j < d.km() ? d.alpha + j : d.half() + d.alpha + (j - d.km());
}

RatMatrix kron_identity(const RatMatrix& s, std::size_t m) {
  RatMatrix out(s.rows() * m, s.cols() * m);
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      for (std::size_t t = 0; t < m; ++t) out(i * m + t, j * m + t) = s(i, j);
  return out;
}

void require_symmetric(const RatMatrix& s, std::size_t k, const char* what) {
  if (s.rows() != k || s.cols() != k) throw DimensionMismatch(std::string(what) + ": expected a k x k matrix");
  if (s.transpose() != s) throw InputError(std::string(what) + ": matrix is not symmetric");
}

void check_inputs(const Module& q, const Module& t, std::size_t k, const Prime& p, const ChiOptions& opt) {
  if (q.ambient_dim() != 2 * k || t.ambient_dim() != 2 * k) throw DimensionMismatch("chi: Q and T must live in H");
  if (!opt.require_almost_selfdual) return;
  const SymplecticForm bh = SymplecticForm::standard(k);
  if (!is_almost_selfdual(q, bh, p)) throw InputError("chi: Q is not almost self-dual");
  if (!is_almost_selfdual(t, bh, p)) throw InputError("chi: T is not almost self-dual");
}

// System matrix of y+ - d x+ = c u+ and tau x+ - d^t kappa y+ = b^t v-.
RatMatrix build_omega(const BlockElement& g, const BoundaryPair& bp) {
  const std::size_t n = g.k() * g.m();
  const RatMatrix d = g.matrix().block(g.alpha(), g.alpha(), n, n);
  RatMatrix omega(2 * n, 2 * n);
  omega.set_block(0, 0, -d);
  omega.set_block(0, n, RatMatrix::identity(n));
  omega.set_block(n, 0, kron_identity(bp.tau, g.m()));
  omega.set_block(n, n, -(d.transpose() * kron_identity(bp.kappa, g.m())));
  return omega;
}

struct BoundarySolve {
  RatMatrix z;
  RatMatrix plus;   // v+ as a function of (u+, v-)
  RatMatrix minus;  // u- as a function of (u+, v-)
};

BoundarySolve solve_boundary(const BlockElement& g, const BoundaryPair& bp) {
  const std::size_t alpha = g.alpha();
  const std::size_t n = g.k() * g.m();
  require_symmetric(bp.kappa, g.k(), "boundary kappa");
  require_symmetric(bp.tau, g.k(), "boundary tau");
  const RatMatrix& G = g.matrix();
  const RatMatrix a = G.block(0, 0, alpha, alpha);
  const RatMatrix b = G.block(0, alpha, alpha, n);
  const RatMatrix c = G.block(alpha, 0, n, alpha);
  const RatMatrix d = G.block(alpha, alpha, n, n);
  const RatMatrix kap = kron_identity(bp.kappa, g.m());
  const RatMatrix omega = build_omega(g, bp);
  if (sgn(determinant(omega)) == 0) throw SingularBoundary("chi-boundary: det Omega(kappa, tau) = 0");

  RatMatrix rhs(2 * n, 2 * alpha);
  rhs.set_block(0, 0, c);
  rhs.set_block(n, alpha, b.transpose());
  const RatMatrix sol = invert(omega) * rhs;
  const RatMatrix xp = sol.block(0, 0, n, 2 * alpha);
  const RatMatrix yp = sol.block(n, 0, n, 2 * alpha);

  RatMatrix plus = b * xp;
  plus.set_block(0, 0, plus.block(0, 0, alpha, alpha) + a);
  RatMatrix minus = c.transpose() * kap * yp;
  minus.set_block(0, alpha, minus.block(0, alpha, alpha, alpha) + a.transpose());

  // Reorder the inputs from (u+, v-) to (v-, u+).
  RatMatrix z(2 * alpha, 2 * alpha);
  z.set_block(0, 0, plus.block(0, alpha, alpha, alpha));
  z.set_block(0, alpha, plus.block(0, 0, alpha, alpha));
  z.set_block(alpha, 0, minus.block(0, alpha, alpha, alpha));
  z.set_block(alpha, alpha, minus.block(0, 0, alpha, alpha));
  return {z, plus, minus};
}

}  // namespace

RatMatrix doubled(const BlockElement& g) { return block_diagonal(g.matrix(), invert(g.matrix()).transpose()); }

RatMatrix standard_J(std::size_t n) { return SymplecticForm::standard(n).gram(); }

Relation xi_relation(const RatMatrix& G, std::size_t alpha, std::size_t k, std::size_t m) {
  const Dims d{alpha, k, m};
  const std::size_t two_half = 2 * d.half();
  if (G.rows() != two_half || G.cols() != two_half) throw DimensionMismatch("xi_relation: G has the wrong size");
  const std::size_t h = 2 * d.km();
  const std::size_t v = 2 * alpha;
  // Coordinates: x [h], y [h], u [v], v [v].
  RatMatrix gens(two_half, 2 * h + 2 * v);
  for (std::size_t e = 0; e < two_half; ++e) {
    for (std::size_t j = 0; j < h; ++j) {
      if (x_slot(d, j) == e) gens(e, j) = 1;
      gens(e, h + j) = G(x_slot(d, j), e);
    }
    for (std::size_t i = 0; i < v; ++i) {
      if (v_slot(d, i) == e) gens(e, 2 * h + i) = 1;
      gens(e, 2 * h + v + i) = G(v_slot(d, i), e);
    }
  }
  return Relation(2 * h, 2 * v, Module::subspace(std::move(gens)));
}

Relation attach_relation(const Module& q, std::size_t alpha, std::size_t k, std::size_t m, const Prime& p) {
  const Dims d{alpha, k, m};
  const std::size_t v = 2 * alpha;
  const std::size_t total = v + 2 * d.half();
  const Module qt = tensor_with_standard_lattice(q, m, p);

  RatMatrix free(v, total);
  for (std::size_t i = 0; i < v; ++i) {
    free(i, i) = 1;
    free(i, v + v_slot(d, i)) = 1;
  }
  auto place = [&](const RatMatrix& xs) {
    RatMatrix out(xs.rows(), total);
    for (std::size_t r = 0; r < xs.rows(); ++r)
      for (std::size_t j = 0; j < xs.cols(); ++j) out(r, v + x_slot(d, j)) = xs(r, j);
    return out;
  };
  return Relation(v, 2 * d.half(), Module(total, vstack(free, place(qt.free_gens())), place(qt.int_gens())));
}

Relation chi_doubled(const RatMatrix& G, std::size_t alpha, std::size_t k, std::size_t m, const Module& q,
                     const Module& t, const Prime& p, const ChiOptions& opt) {
  check_inputs(q, t, k, p, opt);
  const Relation lq = attach_relation(q, alpha, k, m, p);
  const Relation lt = attach_relation(t, alpha, k, m, p);
  const Relation pipeline = compose(pseudo_inverse(lt), compose(graph_of(G), lq, p), p);
  if (opt.cross_check) {
    const Module eta =
        direct_sum(tensor_with_standard_lattice(q, m, p), tensor_with_standard_lattice(t, m, p));
    const Relation direct(2 * alpha, 2 * alpha, apply_to_module(xi_relation(G, alpha, k, m), eta, p));
    if (!(direct == pipeline)) {
      throw InternalConsistencyError("chi: relation pipeline and direct image disagree");
    }
  }
  return pipeline;
}

Relation chi(const BlockElement& g, const Module& q, const Module& t, const Prime& p, const ChiOptions& opt) {
  return chi_doubled(doubled(g), g.alpha(), g.k(), g.m(), q, t, p, opt);
}

Relation chi_sp(const RatMatrix& gs, std::size_t alpha, std::size_t k, std::size_t m, const Module& q,
                const Module& t, const Prime& p, const ChiOptions& opt) {
  const std::size_t n = alpha + k * m;
  if (gs.rows() != 2 * n || gs.cols() != 2 * n) throw DimensionMismatch("chi_sp: matrix has the wrong size");
  const RatMatrix j = standard_J(n);
  if (gs.transpose() * j * gs != j) throw InputError("chi_sp: matrix is not symplectic");
  return chi_doubled(gs, alpha, k, m, q, t, p, opt);
}

RatMatrix sp_coset_mul(const RatMatrix& gs, std::size_t l, const RatMatrix& hs, std::size_t m, std::size_t alpha,
                       std::size_t k) {
  const std::size_t w = l + m;
  return spread_slots(gs, alpha, k, l, w, 0, 2) * spread_slots(hs, alpha, k, m, w, l, 2);
}

RatMatrix lambda_subspace(const BlockElement& g) {
  const std::size_t alpha = g.alpha();
  const std::size_t n = g.k() * g.m();
  const RatMatrix& G = g.matrix();
  const RatMatrix a = G.block(0, 0, alpha, alpha);
  const RatMatrix b = G.block(0, alpha, alpha, n);
  const RatMatrix c = G.block(alpha, 0, n, alpha);
  // Unknowns (u+, u-, v+, v-).
  RatMatrix eq(2 * alpha + 2 * n, 4 * alpha);
  const RatMatrix id = RatMatrix::identity(alpha);
  eq.set_block(0, 0, -a);                       // v+ = a u+
  eq.set_block(0, 2 * alpha, id);
  eq.set_block(alpha, 0, c);                    // c u+ = 0
  eq.set_block(alpha + n, alpha, id);           // u- = a^t v-
  eq.set_block(alpha + n, 3 * alpha, -a.transpose());
  eq.set_block(2 * alpha + n, 3 * alpha, b.transpose());  // b^t v- = 0
  return rref(nullspace(eq)).reduced.without_zero_rows();
}

SandwichReport lambda_sandwich_check(const BlockElement& g, const Module& q, const Module& t, const Prime& p) {
  const bool lattices = is_lattice(canonicalize(q, p)) && is_lattice(canonicalize(t, p));
  return lambda_sandwich_from(g, chi(g, q, t, p), lattices, p);
}

SandwichReport lambda_sandwich_from(const BlockElement& g, const Relation& chi_value, bool lattices, const Prime& p) {
  const std::size_t alpha = g.alpha();
  const DownUp du = down_up(chi_value.body(), p);
  const RatMatrix lam = lambda_subspace(g);
  const SymplecticForm bv = SymplecticForm::standard(alpha);
  const Module lam_m = Module::subspace(lam);
  const Module perp_m = Module::subspace(orthocomplement(lam, SymplecticForm::difference(bv, bv)));
  const Module down = Module::subspace(du.down);
  const Module up = Module::subspace(du.up);

  SandwichReport r;
  r.lattices = lattices;
  r.down_contains = contains(down, lam_m, p);
  r.up_contained = contains(perp_m, up, p);
  r.down_equal = equal(down, lam_m, p);
  r.up_equal = equal(up, perp_m, p);
  return r;
}

Module symmetric_graph(const RatMatrix& s) {
  require_symmetric(s, s.rows(), "symmetric_graph");
  return Module::subspace(hstack(RatMatrix::identity(s.rows()), s));
}

PadicRational omega_determinant(const BlockElement& g, const BoundaryPair& bp) {
  require_symmetric(bp.kappa, g.k(), "boundary kappa");
  require_symmetric(bp.tau, g.k(), "boundary tau");
  return determinant(build_omega(g, bp));
}

RatMatrix z_matrix(const BlockElement& g, const BoundaryPair& bp) {
  RatMatrix z = solve_boundary(g, bp).z;
  if (z.transpose() != z) throw InternalConsistencyError("z_matrix: Z is not symmetric");
  return z;
}

BoundaryResult chi_boundary(const BlockElement& g, const BoundaryPair& bp, const Prime& p, bool cross_check) {
  const std::size_t alpha = g.alpha();
  const BoundarySolve s = solve_boundary(g, bp);
  if (s.z.transpose() != s.z) throw InternalConsistencyError("chi-boundary: Z is not symmetric");

  // Free generators indexed by (u+, v-), written as (u+, u-, v+, v-).
  RatMatrix gens(2 * alpha, 4 * alpha);
  for (std::size_t e = 0; e < 2 * alpha; ++e) {
    for (std::size_t i = 0; i < alpha; ++i) {
      gens(e, alpha + i) = s.minus(i, e);
      gens(e, 2 * alpha + i) = s.plus(i, e);
    }
    if (e < alpha) gens(e, e) = 1;
    else gens(e, 3 * alpha + (e - alpha)) = 1;
  }
  BoundaryResult out{Relation(2 * alpha, 2 * alpha, canonicalize(Module::subspace(gens), p)), s.z, std::nullopt};

  const SymplecticForm bv = SymplecticForm::standard(alpha);
  if (!is_selfdual(out.relation.body(), SymplecticForm::difference(bv, bv), p)) {
    throw InternalConsistencyError("chi-boundary: value is not Lagrangian");
  }

  const RatMatrix z11 = s.z.block(0, 0, alpha, alpha);
  const RatMatrix z12 = s.z.block(0, alpha, alpha, alpha);
  const RatMatrix z21 = s.z.block(alpha, 0, alpha, alpha);
  const RatMatrix z22 = s.z.block(alpha, alpha, alpha, alpha);
  if (sgn(determinant(z21)) != 0) {
    const RatMatrix z21i = invert(z21);
    RatMatrix vminus(alpha, 2 * alpha);  // v- from (u+, u-)
    vminus.set_block(0, 0, -(z21i * z22));
    vminus.set_block(0, alpha, z21i);
    RatMatrix vplus = z11 * vminus;
    vplus.set_block(0, 0, vplus.block(0, 0, alpha, alpha) + z12);
    const RatMatrix sm = vstack(vplus, vminus);
    const RatMatrix j = standard_J(alpha);
    if (sm.transpose() * j * sm != j) throw InternalConsistencyError("chi-boundary: graph is not symplectic");
    out.map = sm;
  }

  if (cross_check) {
    const Relation viamodules =
        chi(g, symmetric_graph(bp.tau), symmetric_graph(bp.kappa), p, ChiOptions{true, false});
    if (!(viamodules == out.relation)) {
      throw InternalConsistencyError("chi-boundary: boundary solve and module pipeline disagree");
    }
  }
  return out;
}

RatMatrix m_lambda(const PadicRational& lambda, std::size_t half) {
  if (sgn(lambda) == 0) throw InputError("m_lambda: lambda must be nonzero");
  RatMatrix m(2 * half, 2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    m(i, i) = lambda;
    m(half + i, half + i) = 1 / lambda;
  }
  return m;
}

}  // namespace pcoset
