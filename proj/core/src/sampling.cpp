#include "pcoset/sampling.hpp"

#include "pcoset/errors.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace pcoset {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the distribution exact.
  const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
  std::uint64_t x = next();
  while (limit != 0 && x >= limit) x = next();
  return lo + static_cast<std::int64_t>(span == 0 ? x : x % span);
}

std::uint64_t subseed(std::uint64_t seed, std::string_view suite, std::uint64_t trial) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the suite name
  for (unsigned char ch : suite) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  Rng r(seed ^ h);
  r.next();
  Rng t(r.next() ^ (trial * 0xd1b54a32d192ed03ULL));
  return t.next();
}

namespace {

PadicRational small_int(Rng& rng, int bound = 2) { return PadicRational(static_cast<long>(rng.uniform(-bound, bound))); }

int small_exponent(Rng& rng) {
  // Mostly 0, sometimes ±1.
  const auto r = rng.uniform(0, 5);
  return r == 0 ? -1 : (r == 1 ? 1 : 0);
}

RatMatrix random_signed_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform(0, static_cast<std::int64_t>(i) - 1)]);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, perm[i]) = rng.coin() ? 1 : -1;
  return m;
}

}  // namespace

RatMatrix sample_orthogonal_int(std::size_t size, const Prime& p, Rng& rng) {
  RatMatrix s(size, size);
  const PadicRational pv(p.as_mpz());
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) {
      s(i, j) = pv * small_int(rng, 1);
      s(j, i) = -s(i, j);
    }
  const RatMatrix id = RatMatrix::identity(size);
  return (id - s) * invert(id + s) * random_signed_permutation(size, rng);
}

BlockElement sample_block_element(std::size_t alpha, std::size_t k, std::size_t m, const Prime& p, Rng& rng) {
  const std::size_t n = alpha + k * m;
  for (int attempt = 0; attempt < 64; ++attempt) {
    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = small_int(rng);
    if (rng.coin()) {
      const std::size_t r = rng.uniform(0, n - 1);
      const PadicRational s = prime_power(p, rng.coin() ? 1 : -1);
      for (std::size_t j = 0; j < n; ++j) g(r, j) *= s;
    }
    if (sgn(determinant(g)) != 0) return BlockElement(alpha, k, m, std::move(g));
  }
  throw SamplerFailure("sample_block_element: no invertible matrix after 64 attempts");
}

RatMatrix sample_sl2_integral(Rng& rng) {
  RatMatrix g = RatMatrix::identity(2);
  for (int i = 0; i < 3; ++i) {
    RatMatrix e = RatMatrix::identity(2);
    if (rng.coin()) e(0, 1) = small_int(rng);
    else e(1, 0) = small_int(rng);
    g = g * e;
  }
  return g;
}

RatMatrix sample_symmetric(std::size_t k, Rng& rng) {
  RatMatrix s(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) s(i, j) = s(j, i) = small_int(rng);
  return s;
}

RatMatrix sample_symplectic(std::size_t n, const Prime& p, Rng& rng, int steps) {
  RatMatrix out = RatMatrix::identity(2 * n);
  const RatMatrix id = RatMatrix::identity(n);
  for (int step = 0; step < steps; ++step) {
    RatMatrix e = RatMatrix::identity(2 * n);
    switch (rng.uniform(0, 2)) {
      case 0:
      case 1: {
        const RatMatrix s = prime_power(p, small_exponent(rng)) * sample_symmetric(n, rng);
        if (rng.coin()) e.set_block(0, n, s);
        else e.set_block(n, 0, s);
        break;
      }
      default: {
        RatMatrix a = id;
        if (n > 1 && rng.coin()) {
          const std::size_t i = rng.uniform(0, n - 1);
          std::size_t j = rng.uniform(0, n - 2);
          if (j >= i) ++j;
          a(i, j) = small_int(rng);
        } else {
          const std::size_t i = rng.uniform(0, n - 1);
          a(i, i) = prime_power(p, rng.coin() ? 1 : -1);
        }
        e.set_block(0, 0, a);
        e.set_block(n, n, invert(a).transpose());
        break;
      }
    }
    out = out * e;
  }
  return out;
}

namespace {

enum class Piece { lattice, line, almost };

Module normal_form(std::size_t n, const std::vector<Piece>& pieces, const Prime& p, Rng& rng) {
  RatMatrix free(0, 2 * n);
  RatMatrix ints(0, 2 * n);
  RatVector row(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(row.begin(), row.end(), PadicRational(0));
    switch (pieces[i]) {
      case Piece::line:
        row[rng.coin() ? i : n + i] = 1;
        free.append_row(row);
        break;
      case Piece::lattice:
      case Piece::almost: {
        const int a = small_exponent(rng);
        const int shift = pieces[i] == Piece::almost ? -1 : 0;
        row[i] = prime_power(p, a + shift);
        ints.append_row(row);
        row[i] = 0;
        row[n + i] = prime_power(p, -a);
        ints.append_row(row);
        break;
      }
    }
  }
  return Module(2 * n, std::move(free), std::move(ints));
}

}  // namespace

Module sample_selfdual(std::size_t n, const Prime& p, Rng& rng, SelfDualKind kind) {
  std::vector<Piece> pieces(n);
  for (auto& piece : pieces) {
    switch (kind) {
      case SelfDualKind::lattice: piece = Piece::lattice; break;
      case SelfDualKind::lagrangian: piece = Piece::line; break;
      default: piece = rng.coin() ? Piece::lattice : Piece::line; break;
    }
  }
  if (kind == SelfDualKind::mixed && n >= 2) {
    const std::size_t i = rng.uniform(0, n - 1);
    pieces[i] = Piece::line;
    pieces[(i + 1) % n] = Piece::lattice;
  }
  return image(sample_symplectic(n, p, rng), normal_form(n, pieces, p, rng), p);
}

Module sample_almost_selfdual(std::size_t n, const Prime& p, Rng& rng, bool allow_lines) {
  std::vector<Piece> pieces(n);
  for (auto& piece : pieces) {
    const auto r = rng.uniform(0, allow_lines ? 2 : 1);
    piece = r == 0 ? Piece::almost : (r == 1 ? Piece::lattice : Piece::line);
  }
  pieces[rng.uniform(0, n - 1)] = Piece::almost;
  return image(sample_symplectic(n, p, rng), normal_form(n, pieces, p, rng), p);
}

RatMatrix difference_basis(std::size_t s, std::size_t d) {
  const std::size_t n = s + d;
  RatMatrix phi(2 * n, 2 * n);
  // Standard coordinates (p[s], q[d], m[s], r[d]) -> (p, m | r, q).
  for (std::size_t i = 0; i < s; ++i) {
    phi(i, i) = 1;
    phi(s + i, n + i) = 1;
  }
  for (std::size_t i = 0; i < d; ++i) {
    phi(2 * s + i, n + s + i) = 1;
    phi(2 * s + d + i, s + i) = 1;
  }
  return phi;
}

Relation sample_selfdual_relation(std::size_t s, std::size_t d, const Prime& p, Rng& rng, SelfDualKind kind) {
  const Module body = image(difference_basis(s, d), sample_selfdual(s + d, p, rng, kind), p);
  return Relation(2 * s, 2 * d, body);
}

Module saturate(const Module& seed, const SymplecticForm& b, const Prime& p, Rng& rng) {
  Module r = canonicalize(seed, p);
  const std::size_t n = r.ambient_dim();
  for (int step = 0; step < 64; ++step) {
    const Module dl = dual(r, b, p);
    if (dl == r) return r;

    // Lines of the dual missing from r go in first, as lines.
    RatVector line(n);
    bool have_line = false;
    for (std::size_t i = 0; i < dl.free_gens().rows(); ++i) {
      if (contains(r, Module::subspace(RatMatrix::from_rows({dl.free_gens().row_vector(i)})), p)) continue;
      const PadicRational c = have_line ? small_int(rng) : PadicRational(1);
      for (std::size_t j = 0; j < n; ++j) line[j] += c * dl.free_gens()(i, j);
      have_line = true;
    }
    if (have_line) {
      r = sum(r, Module::subspace(RatMatrix::from_rows({line})), p);
      continue;
    }

    RatVector w(n);
    for (std::size_t i = 0; i < dl.int_gens().rows(); ++i) {
      const PadicRational c = small_int(rng);
      for (std::size_t j = 0; j < n; ++j) w[j] += c * dl.int_gens()(i, j);
    }
    if (contains_vector(r, w, p)) {
      for (std::size_t i = 0; i < dl.int_gens().rows(); ++i) {
        if (!contains_vector(r, dl.int_gens().row(i), p)) {
          w = dl.int_gens().row_vector(i);
          break;
        }
      }
    }
    r = sum(r, Module::lattice(RatMatrix::from_rows({w})), p);
  }
  throw SamplerFailure("saturate: no self-dual module after 64 steps");
}

Relation sample_saturated_relation(std::size_t s, std::size_t d, const Prime& p, Rng& rng) {
  const std::size_t n = 2 * (s + d);
  RatVector v(n);
  for (auto& x : v) x = small_int(rng);
  if (std::all_of(v.begin(), v.end(), [](const PadicRational& x) { return sgn(x) == 0; })) v[rng.uniform(0, n - 1)] = 1;
  const PadicRational scale = prime_power(p, small_exponent(rng));
  for (auto& x : v) x *= scale;
  const RatMatrix rows = RatMatrix::from_rows({v});
  const Module seed = rng.coin(4) ? Module::subspace(rows) : Module::lattice(rows);
  const SymplecticForm b = SymplecticForm::difference(SymplecticForm::standard(s), SymplecticForm::standard(d));
  return Relation(2 * s, 2 * d, saturate(seed, b, p, rng));
}

}  // namespace pcoset
