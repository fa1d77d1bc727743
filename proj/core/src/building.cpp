#include "pcoset/building.hpp"

#include "pcoset/errors.hpp"

#include <algorithm>

namespace pcoset {

std::string to_string(VertexClass c) {
  switch (c) {
    case VertexClass::selfdual: return "selfdual";
    case VertexClass::almost_selfdual: return "almost_selfdual";
    case VertexClass::neither: return "neither";
  }
  return "neither";
}

VertexClass classify(const Module& r, const SymplecticForm& b, const Prime& p) {
  if (r.ambient_dim() % 2 != 0) throw DimensionMismatch("classify: odd ambient dimension");
  if (is_selfdual(r, b, p)) return VertexClass::selfdual;
  if (is_almost_selfdual(r, b, p)) return VertexClass::almost_selfdual;
  return VertexClass::neither;
}

bool has_arrow(const Module& r, const Module& r2, const Prime& p) {
  if (r.ambient_dim() != r2.ambient_dim()) throw DimensionMismatch("has_arrow: ambient dimensions differ");
  if (!contains(r, r2, p)) return false;
  const Module a = canonicalize(r, p);
  const Module b = canonicalize(r2, p);
  if (is_lattice(a) && is_lattice(b)) {
    const DownUp da = down_up(a, p);
    const DownUp db = down_up(b, p);
    if (da.down != db.down || da.up != db.up) throw InternalConsistencyError("has_arrow: lattice flags differ");
  }
  return true;
}

std::vector<RatMatrix> subspaces_mod_p(std::size_t dim, std::uint64_t p) {
  std::vector<RatMatrix> out;
  for (std::size_t r = 0; r <= dim; ++r) {
    // Pivot sets as increasing index tuples.
    std::vector<std::size_t> piv(r);
    for (std::size_t i = 0; i < r; ++i) piv[i] = i;
    while (true) {
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = piv[i] + 1; j < dim; ++j)
          if (std::find(piv.begin(), piv.end(), j) == piv.end()) slots.emplace_back(i, j);
      std::vector<std::uint64_t> digits(slots.size(), 0);
      while (true) {
        RatMatrix m(r, dim);
        for (std::size_t i = 0; i < r; ++i) m(i, piv[i]) = 1;
        for (std::size_t s = 0; s < slots.size(); ++s) m(slots[s].first, slots[s].second) = static_cast<unsigned long>(digits[s]);
        out.push_back(std::move(m));
        std::size_t s = 0;
        while (s < digits.size() && ++digits[s] == p) digits[s++] = 0;
        if (s == digits.size()) break;
      }
      // Next pivot tuple.
      std::size_t i = r;
      while (i > 0 && piv[i - 1] == dim - r + i - 1) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  return out;
}

std::vector<Module> neighbors_over(std::size_t n, const Prime& p) {
  if (n == 0 || n > 2 || p.value() > 5) throw InputError("neighbors_over: enumeration limited to n <= 2, p <= 5");
  const SymplecticForm b = SymplecticForm::standard(n);
  const mpz_class pz = p.as_mpz();
  const PadicRational inv_p = prime_power(p, -1);
  std::vector<Module> out;
  for (const RatMatrix& u : subspaces_mod_p(2 * n, p.value())) {
    bool isotropic = true;
    for (std::size_t i = 0; i < u.rows() && isotropic; ++i)
      for (std::size_t j = i + 1; j < u.rows() && isotropic; ++j) {
        const PadicRational v = b(u.row(i), u.row(j));
        isotropic = mpz_class(v.get_num() % pz) == 0;
      }
    if (!isotropic) continue;
    Module r = canonicalize(Module(2 * n, RatMatrix(0, 2 * n), vstack(RatMatrix::identity(2 * n), inv_p * u)), p);
    if (!is_almost_selfdual(r, b, p)) throw InternalConsistencyError("neighbors_over: lift is not almost self-dual");
    out.push_back(std::move(r));
  }
  return out;
}

MorphismReport chi_graph_morphism_check(const BlockElement& g, const Module& q, const Module& t, const Module& q2,
                                        const Module& t2, const Prime& p) {
  if (!contains(q, q2, p) || !contains(t, t2, p)) throw InputError("morphism-check: expected Q ⊇ Q' and T ⊇ T'");
  const Relation a = chi(g, q, t, p);
  const Relation b = chi(g, q2, t2, p);
  const SymplecticForm bv = SymplecticForm::standard(g.alpha());
  const SymplecticForm bd = SymplecticForm::difference(bv, bv);
  MorphismReport r;
  r.equal = a == b;
  r.contains = contains(a.body(), b.body(), p);
  r.source_almost = is_almost_selfdual(a.body(), bd, p);
  r.target_almost = is_almost_selfdual(b.body(), bd, p);
  return r;
}

namespace {

std::string describe(const RatMatrix& m, std::size_t row) {
  std::string s = "(";
  for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + to_string(m(row, j));
  return s + ")";
}

}  // namespace

ConvergenceReport arrow_convergence(const std::vector<Module>& seq, const Module& limit, int depth, int cap,
                                    const Prime& p) {
  ConvergenceReport rep;
  const std::size_t n = limit.ambient_dim();
  const int count = static_cast<int>(seq.size());

  // (i) compact probes R ∩ p^{-t} O^n are eventually inside R_j.
  rep.absorbs = true;
  for (int t = 0; t <= depth; ++t) {
    const Module probe = intersect(limit, scaled(Module::standard_lattice(n), -t, p), p);
    int first = count;
    for (int j = count - 1; j >= 0; --j) {
      if (!contains(seq[j], probe, p)) break;
      first = j;
    }
    rep.first_absorbing.push_back(first);
    if (first == count) {
      rep.absorbs = false;
      rep.witnesses.push_back("depth " + std::to_string(t) + ": probe never absorbed");
    }
  }

  // (ii) R_j ⊆ R + p^{t_j} O^n with t_j growing.
  for (int j = 0; j < count; ++j) {
    int best = -cap - 1;
    for (int t = cap; t >= -cap; --t) {
      if (contains(sum(limit, scaled(Module::standard_lattice(n), t, p), p), seq[j], p)) {
        best = t;
        break;
      }
    }
    rep.closeness.push_back(best);
  }
  rep.approaches = count > 0;
  for (int j = 1; j < count; ++j) {
    if (rep.closeness[j] < rep.closeness[j - 1]) {
      rep.approaches = false;
      rep.witnesses.push_back("closeness drops at index " + std::to_string(j));
    }
  }
  // reaching the cap means R_j ⊆ R at every tested depth, which is not a stall
  const bool capped = count > 0 && rep.closeness.back() >= cap;
  if (count > 0 && (rep.closeness.back() < depth || (!capped && rep.closeness.back() <= rep.closeness.front()))) {
    rep.approaches = false;
    rep.witnesses.push_back("closeness stalls at " + std::to_string(rep.closeness.back()));
  }

  // (R_j)_↓ ⊆ R_↓ along the absorbed tail.
  rep.down_inside = true;
  const Module limit_down = Module::subspace(down_up(limit, p).down);
  const int from = rep.first_absorbing.empty() ? 0 : std::min(rep.first_absorbing.front(), count);
  for (int j = from; j < count; ++j) {
    const RatMatrix d = down_up(seq[j], p).down;
    for (std::size_t r = 0; r < d.rows(); ++r) {
      if (!contains(limit_down, Module::subspace(RatMatrix::from_rows({d.row_vector(r)})), p)) {
        rep.down_inside = false;
        rep.witnesses.push_back("index " + std::to_string(j) + ": line " + describe(d, r) + " escapes");
      }
    }
  }
  return rep;
}

ConvergenceReport continuity_check(const BlockElement& g, const std::vector<Module>& qseq, const Module& qlim,
                                   const Module& t, int depth, const Prime& p) {
  std::vector<Module> images;
  images.reserve(qseq.size());
  for (const auto& q : qseq) images.push_back(chi(g, q, t, p).body());
  const int cap = depth + 2 * static_cast<int>(qseq.size());
  return arrow_convergence(images, chi(g, qlim, t, p).body(), depth, cap, p);
}

std::vector<Module> standard_continuity_sequence(int count, const Prime& p) {
  std::vector<Module> out;
  for (int j = 0; j < count; ++j) {
    RatMatrix m(2, 2);
    m(0, 0) = prime_power(p, -j);
    m(1, 1) = prime_power(p, j);
    out.push_back(canonicalize(Module::lattice(std::move(m)), p));
  }
  return out;
}

Module standard_continuity_limit() { return Module::subspace(RatMatrix::of({{1, 0}})); }

}  // namespace pcoset
