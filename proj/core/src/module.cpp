#include "pcoset/module.hpp"

#include "pcoset/echelon.hpp"
#include "pcoset/errors.hpp"

#include <string>

namespace pcoset {

namespace {

void require_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// The DvrEchelon bookkeeping of canonical integral generators.
DvrEchelon echelon_view(const RatMatrix& ints, const Prime& p) {
  DvrEchelon e;
  e.matrix = ints;
  for (std::size_t i = 0; i < ints.rows(); ++i) {
    std::size_t c = 0;
    while (sgn(ints(i, c)) == 0) ++c;
    e.pivots.emplace_back(i, c);
    e.exponents.push_back(valuation(ints(i, c), p));
  }
  return e;
}

// x minus its component along the canonical free part (zero on free pivots).
RatVector reduce_by_free(const RatMatrix& free, std::span<const PadicRational> x) {
  RatVector rest(x.begin(), x.end());
  PadicRational t;
  for (std::size_t i = 0; i < free.rows(); ++i) {
    std::size_t c = 0;
    while (sgn(free(i, c)) == 0) ++c;
    if (sgn(rest[c]) == 0) continue;
    const PadicRational f = rest[c];
    for (std::size_t j = c; j < rest.size(); ++j) {
      if (sgn(free(i, j)) == 0) continue;
      t = f * free(i, j);
      rest[j] -= t;
    }
  }
  return rest;
}

bool is_zero_vector(std::span<const PadicRational> x) {
  for (const auto& v : x)
    if (sgn(v) != 0) return false;
  return true;
}

}  // namespace

Module::Module(std::size_t ambient, RatMatrix free_gens, RatMatrix int_gens)
    : ambient_(ambient), free_(std::move(free_gens)), int_(std::move(int_gens)) {
  if (free_.rows() == 0 && free_.cols() == 0) free_ = RatMatrix(0, ambient);
  if (int_.rows() == 0 && int_.cols() == 0) int_ = RatMatrix(0, ambient);
  require_dim(free_.cols(), ambient, "Module: free generator length");
  require_dim(int_.cols(), ambient, "Module: integral generator length");
}

Module Module::standard_lattice(std::size_t n) { return Module(n, RatMatrix(0, n), RatMatrix::identity(n)); }
Module Module::whole_space(std::size_t n) { return Module(n, RatMatrix::identity(n), RatMatrix(0, n)); }
Module Module::subspace(RatMatrix rows) {
  const std::size_t n = rows.cols();
  return Module(n, std::move(rows), RatMatrix(0, n));
}
Module Module::lattice(RatMatrix rows) {
  const std::size_t n = rows.cols();
  return Module(n, RatMatrix(0, n), std::move(rows));
}

SymplecticForm::SymplecticForm(RatMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw InputError("symplectic form: gram matrix is not square");
  if (gram_.transpose() != -gram_) throw InputError("symplectic form: gram matrix is not skew-symmetric");
  if (sgn(determinant(gram_)) == 0) throw InputError("symplectic form: gram matrix is degenerate");
}

SymplecticForm SymplecticForm::standard(std::size_t n) {
  RatMatrix g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = 1;
    g(n + i, i) = -1;
  }
  return SymplecticForm(std::move(g));
}

SymplecticForm SymplecticForm::difference(const SymplecticForm& a, const SymplecticForm& b) {
  return SymplecticForm(block_diagonal(a.gram(), -b.gram()));
}

PadicRational SymplecticForm::operator()(std::span<const PadicRational> u, std::span<const PadicRational> w) const {
  require_dim(u.size(), dim(), "symplectic form: first argument");
  require_dim(w.size(), dim(), "symplectic form: second argument");
  PadicRational s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(gram_(i, j)) == 0 || sgn(w[j]) == 0) continue;
      s += u[i] * gram_(i, j) * w[j];
    }
  }
  return s;
}

Module canonicalize(const Module& r, const Prime& p) {
  if (r.canonical_for(p)) return r;
  const std::size_t n = r.ambient_;
  const auto [red, pivots] = rref(r.free_);
  RatMatrix free = red.block(0, 0, pivots.size(), n);

  RatMatrix ints = r.int_;
  PadicRational t;
  for (std::size_t i = 0; i < ints.rows(); ++i) {
    for (std::size_t j = 0; j < pivots.size(); ++j) {
      const std::size_t c = pivots[j];
      if (sgn(ints(i, c)) == 0) continue;
      const PadicRational f = ints(i, c);
      for (std::size_t col = c; col < n; ++col) {
        if (sgn(free(j, col)) == 0) continue;
        t = f * free(j, col);
        ints(i, col) -= t;
      }
    }
  }

  Module out(n);
  out.free_ = std::move(free);
  out.int_ = dvr_echelon(ints, p).matrix;
  out.canonical_prime_ = p.value();
  return out;
}

bool contains_vector(const Module& r, std::span<const PadicRational> x, const Prime& p) {
  require_dim(x.size(), r.ambient_dim(), "contains_vector");
  const Module c = canonicalize(r, p);
  const RatVector rest = reduce_by_free(c.free_gens(), x);
  if (c.int_gens().rows() == 0) return is_zero_vector(rest);
  return echelon_contains(echelon_view(c.int_gens(), p), rest, p);
}

bool contains(const Module& outer, const Module& inner, const Prime& p) {
  require_dim(outer.ambient_dim(), inner.ambient_dim(), "contains");
  const Module o = canonicalize(outer, p);
  const Module i = canonicalize(inner, p);
  for (std::size_t r = 0; r < i.free_gens().rows(); ++r) {
    // A line lies in a module only through its free part.
    if (!is_zero_vector(reduce_by_free(o.free_gens(), i.free_gens().row(r)))) return false;
  }
  for (std::size_t r = 0; r < i.int_gens().rows(); ++r) {
    if (!contains_vector(o, i.int_gens().row(r), p)) return false;
  }
  return true;
}

bool equal(const Module& a, const Module& b, const Prime& p) {
  return canonicalize(a, p) == canonicalize(b, p);
}

Module sum(const Module& a, const Module& b, const Prime& p) {
  require_dim(a.ambient_dim(), b.ambient_dim(), "sum");
  return canonicalize(Module(a.ambient_dim(), vstack(a.free_gens(), b.free_gens()), vstack(a.int_gens(), b.int_gens())), p);
}

Module solve_mixed(const RatMatrix& eqs, const RatMatrix& integrality, std::size_t n, const Prime& p) {
  require_dim(eqs.cols(), n, "solve_mixed: equation width");
  require_dim(integrality.cols(), n, "solve_mixed: integrality width");
  const RatMatrix k = eqs.rows() == 0 ? RatMatrix::identity(n) : nullspace(eqs);
  const std::size_t d = k.rows();
  if (d == 0) return canonicalize(Module(n), p);
  if (integrality.rows() == 0) return canonicalize(Module(n, k, RatMatrix(0, n)), p);

  // x = k^T c; the integrality constraints read m c ∈ Z_(p)^h.
  const RatMatrix m = integrality * k.transpose();
  const DvrEchelon e = dvr_echelon(m, p);
  const RatMatrix free_c = nullspace(e.matrix);

  // For each echelon row i, the solution of e z = unit_i supported on pivot columns.
  const std::size_t r = e.rank();
  RatMatrix int_c(r, d);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t jj = r; jj-- > 0;) {
      PadicRational rhs = (jj == i) ? 1 : 0;
      for (std::size_t l = jj + 1; l < r; ++l) {
        const std::size_t cl = e.pivots[l].second;
        if (sgn(e.matrix(jj, cl)) == 0 || sgn(int_c(i, cl)) == 0) continue;
        rhs -= e.matrix(jj, cl) * int_c(i, cl);
      }
      const std::size_t cj = e.pivots[jj].second;
      int_c(i, cj) = rhs / e.matrix(jj, cj);
    }
  }
  return canonicalize(Module(n, free_c * k, int_c * k), p);
}

Module module_kernel(const RatMatrix& a, const Module& domain, const Prime& p) {
  require_dim(a.cols(), domain.ambient_dim(), "module_kernel");
  const Module d = canonicalize(domain, p);
  const std::size_t f = d.free_gens().rows();
  const std::size_t l = d.int_gens().rows();
  const RatMatrix gens = vstack(d.free_gens(), d.int_gens());  // (f+l) x n
  const RatMatrix eqs = a * gens.transpose();
  RatMatrix integrality(l, f + l);
  for (std::size_t i = 0; i < l; ++i) integrality(i, f + i) = 1;
  const Module coeffs = solve_mixed(eqs, integrality, f + l, p);
  return canonicalize(Module(d.ambient_dim(), coeffs.free_gens() * gens, coeffs.int_gens() * gens), p);
}

Module image(const RatMatrix& a, const Module& r, const Prime& p) {
  require_dim(a.cols(), r.ambient_dim(), "image");
  const RatMatrix at = a.transpose();
  return canonicalize(Module(a.rows(), r.free_gens() * at, r.int_gens() * at), p);
}

Module intersect(const Module& a, const Module& b, const Prime& p) {
  require_dim(a.ambient_dim(), b.ambient_dim(), "intersect");
  const std::size_t n = a.ambient_dim();
  // (x1, x2) ∈ a ⊕ b with x1 - x2 = 0, then keep x1.
  const RatMatrix diff = hstack(RatMatrix::identity(n), -RatMatrix::identity(n));
  const Module k = module_kernel(diff, direct_sum(canonicalize(a, p), canonicalize(b, p)), p);
  return image(hstack(RatMatrix::identity(n), RatMatrix(n, n)), k, p);
}

Module preimage(const RatMatrix& a, const Module& r, const Prime& p) {
  require_dim(a.rows(), r.ambient_dim(), "preimage");
  const std::size_t n = a.cols();
  const std::size_t m = a.rows();
  // (x, y) ∈ Q^n ⊕ r with A x - y = 0, then keep x.
  const RatMatrix eq = hstack(a, -RatMatrix::identity(m));
  const Module k = module_kernel(eq, direct_sum(Module::whole_space(n), canonicalize(r, p)), p);
  return image(hstack(RatMatrix::identity(n), RatMatrix(n, m)), k, p);
}

DownUp down_up(const Module& r, const Prime& p) {
  const Module c = canonicalize(r, p);
  const auto [red, pivots] = rref(vstack(c.free_gens(), c.int_gens()));
  return {c.free_gens(), red.block(0, 0, pivots.size(), c.ambient_dim())};
}

Module dual(const Module& r, const SymplecticForm& b, const Prime& p) {
  require_dim(r.ambient_dim(), b.dim(), "dual");
  const Module c = canonicalize(r, p);
  return solve_mixed(c.free_gens() * b.gram(), c.int_gens() * b.gram(), b.dim(), p);
}

bool is_isotropic(const Module& r, const SymplecticForm& b, const Prime& p) {
  return contains(dual(r, b, p), r, p);
}

bool is_selfdual(const Module& r, const SymplecticForm& b, const Prime& p) {
  return canonicalize(r, p) == dual(r, b, p);
}

bool is_almost_selfdual(const Module& r, const SymplecticForm& b, const Prime& p) {
  const Module d = dual(r, b, p);
  return contains(r, d, p) && contains(d, scaled(r, 1, p), p);
}

bool approx_contains(std::span<const PadicRational> x, const Module& r, int t, const Prime& p) {
  const std::size_t n = r.ambient_dim();
  require_dim(x.size(), n, "approx_contains");
  const Module ball = scaled(Module::standard_lattice(n), t, p);
  return contains_vector(sum(r, ball, p), x, p);
}

Module tensor_with_standard_lattice(const Module& q, std::size_t m, const Prime& p) {
  const std::size_t n = q.ambient_dim();
  if (n % 2 != 0) throw DimensionMismatch("tensor_with_standard_lattice: odd ambient dimension");
  const std::size_t k = n / 2;
  const Module c = canonicalize(q, p);
  auto spread = [&](const RatMatrix& gens) {
    RatMatrix out(gens.rows() * m, n * m);
    for (std::size_t g = 0; g < gens.rows(); ++g) {
      for (std::size_t s = 0; s < m; ++s) {
        const std::size_t row = g * m + s;
        for (std::size_t i = 0; i < k; ++i) {
          out(row, i * m + s) = gens(g, i);
          out(row, k * m + i * m + s) = gens(g, k + i);
        }
      }
    }
    return out;
  };
  return canonicalize(Module(n * m, spread(c.free_gens()), spread(c.int_gens())), p);
}

Module scaled(const Module& r, int e, const Prime& p) {
  const PadicRational s = prime_power(p, e);
  return canonicalize(Module(r.ambient_dim(), r.free_gens(), s * r.int_gens()), p);
}

Module direct_sum(const Module& a, const Module& b) {
  return Module(a.ambient_dim() + b.ambient_dim(), block_diagonal(a.free_gens(), b.free_gens()),
                block_diagonal(a.int_gens(), b.int_gens()));
}

RatMatrix orthocomplement(const RatMatrix& rows, const SymplecticForm& b) {
  require_dim(rows.cols(), b.dim(), "orthocomplement");
  if (rows.rows() == 0) return RatMatrix::identity(b.dim());
  return rref(nullspace(rows * b.gram())).reduced.without_zero_rows();
}

bool is_compact(const Module& canonical) { return canonical.free_gens().rows() == 0; }

bool is_lattice(const Module& canonical) {
  return is_compact(canonical) && canonical.int_gens().rows() == canonical.ambient_dim();
}

bool is_subspace(const Module& canonical) { return canonical.int_gens().rows() == 0; }

}  // namespace pcoset
