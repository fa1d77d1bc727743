#include "pcoset/verify.hpp"

#include "pcoset/building.hpp"
#include "pcoset/charfn.hpp"
#include "pcoset/echelon.hpp"
#include "pcoset/errors.hpp"
#include "pcoset/sampling.hpp"
#include "pcoset/weil.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>

namespace pcoset {

namespace {

constexpr std::size_t kMaxWitnesses = 20;

using Clock = std::chrono::steady_clock;

class Stopwatch {
public:
  double seconds() const { return std::chrono::duration<double>(Clock::now() - t0_).count(); }

private:
  Clock::time_point t0_ = Clock::now();
};

SuiteReport make_report(std::string name, std::uint64_t seed) {
  SuiteReport r;
  r.name = std::move(name);
  r.seed = seed;
  return r;
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

// Small integer times p^e, e in [emin, emax]; zero about one time in seven.
PadicRational small_rational(Rng& rng, const Prime& p, int emin, int emax) {
  PadicRational x(static_cast<long>(rng.uniform(-3, 3)));
  return x * prime_power(p, static_cast<int>(rng.uniform(emin, emax)));
}

RatMatrix random_rows(std::size_t rows, std::size_t cols, Rng& rng, const Prime& p, int emin, int emax) {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_rational(rng, p, emin, emax);
  return m;
}

Module random_module(std::size_t n, Rng& rng, const Prime& p, int e = 3) {
  const std::size_t nf = pick(rng, 0, 1);
  const std::size_t ni = pick(rng, 0, n);
  return Module(n, random_rows(nf, n, rng, p, -e, e), random_rows(ni, n, rng, p, -e, e));
}

// Unit of Z_(p): ratio of integers prime to p, random sign.
PadicRational random_unit(Rng& rng, const Prime& p) {
  auto prime_to_p = [&] {
    for (;;) {
      const std::int64_t a = rng.uniform(1, 12);
      if (a % static_cast<std::int64_t>(p.value()) != 0) return a;
    }
  };
  PadicRational u(static_cast<long>(prime_to_p()), static_cast<unsigned long>(prime_to_p()));
  u.canonicalize();
  return rng.coin() ? u : PadicRational(-u);
}

// Invertible over Z_(p): small entries with unit denominators, det a unit.
RatMatrix random_gl_zp(std::size_t n, Rng& rng, const Prime& p) {
  for (;;) {
    RatMatrix u(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const unsigned long den = rng.coin() ? 1 : (p.value() == 2 ? 3 : 2);
        PadicRational x(static_cast<long>(rng.uniform(-3, 3)), den);
        x.canonicalize();
        u(i, j) = x;
      }
    const PadicRational d = determinant(u);
    if (sgn(d) != 0 && valuation(d, p) == 0) return u;
  }
}

RatMatrix random_invertible(std::size_t n, Rng& rng, const Prime& p, int e) {
  for (;;) {
    RatMatrix a = random_rows(n, n, rng, p, -e, e);
    if (sgn(determinant(a)) != 0) return a;
  }
}

// Same module, different generators: unit rescaling, integral row operations,
// free-line shifts of int rows, a redundant int row, and a shuffle.
Module perturb_generators(const Module& r, Rng& rng, const Prime& p) {
  RatMatrix f = r.free_gens();
  RatMatrix g = r.int_gens();
  const std::size_t n = r.ambient_dim();
  for (std::size_t i = 0; i < f.rows(); ++i) {
    PadicRational s = small_rational(rng, p, -2, 2);
    if (sgn(s) == 0) s = 1;
    for (std::size_t c = 0; c < n; ++c) f(i, c) *= s;
  }
  for (std::size_t i = 0; i < g.rows(); ++i) {
    const PadicRational u = random_unit(rng, p);
    for (std::size_t c = 0; c < n; ++c) g(i, c) *= u;
    for (std::size_t j = 0; j < g.rows(); ++j) {
      if (j == i) continue;
      const PadicRational t(static_cast<long>(rng.uniform(-2, 2)));
      for (std::size_t c = 0; c < n; ++c) g(i, c) += t * g(j, c);
    }
    for (std::size_t j = 0; j < f.rows(); ++j) {
      const PadicRational t = small_rational(rng, p, -3, 3);
      for (std::size_t c = 0; c < n; ++c) g(i, c) += t * f(j, c);
    }
  }
  if (g.rows() > 0) {
    RatVector extra(n);
    for (std::size_t i = 0; i < g.rows(); ++i) {
      const PadicRational t(static_cast<long>(rng.uniform(-2, 2)));
      for (std::size_t c = 0; c < n; ++c) extra[c] += t * g(i, c);
    }
    g.append_row(extra);
  }
  for (std::size_t i = g.rows(); i > 1; --i) g.swap_rows(i - 1, pick(rng, 0, i - 1));
  return Module(n, f, g);
}

Module subspace_of(const RatMatrix& rows, std::size_t n) {
  if (rows.rows() == 0) return Module(n, RatMatrix(0, n), RatMatrix(0, n));
  return Module(n, rows, RatMatrix(0, n));
}

bool lattices(const Module& q, const Module& t, const Prime& p) {
  return is_lattice(canonicalize(q, p)) && is_lattice(canonicalize(t, p));
}

constexpr std::array<SelfDualKind, 4> kKinds{SelfDualKind::lattice, SelfDualKind::lagrangian, SelfDualKind::mixed,
                                              SelfDualKind::any};

SelfDualKind random_kind(Rng& rng) { return kKinds[pick(rng, 0, kKinds.size() - 1)]; }

// Runs `count` trials; trial i uses primes[i mod #primes] and its own RNG
// stream. An escaping exception counts as a failure of that trial.
template <class Body>
void run_trials(SuiteReport& rep, const SuiteConfig& cfg, std::string_view tag, std::size_t count, Body&& body) {
  for (std::size_t i = 0; i < count; ++i) {
    const Prime p = Prime::checked(cfg.primes[i % cfg.primes.size()]);
    Rng rng(subseed(cfg.seed, tag, i));
    ++rep.trials;
    try {
      body(i, p, rng);
    } catch (const std::exception& e) {
      rep.fail({{"trial", i}, {"p", p.value()}, {"error", e.what()}});
    }
  }
}

// Merge of two JSON objects; keys of b win.
json operator+(json a, const json& b) {
  a.update(b);
  return a;
}

json trial_tag(std::size_t i, const Prime& p, std::string_view what) {
  return {{"trial", i}, {"p", p.value()}, {"check", what}};
}

}  // namespace

void SuiteReport::fail(json witness) {
  ++failures;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

void SuiteReport::absorb(const SuiteReport& other) {
  trials += other.trials;
  failures += other.failures;
  wall_time += other.wall_time;
  for (const auto& w : other.witnesses) {
    if (witnesses.size() >= kMaxWitnesses) break;
    json tagged = w;
    tagged["suite"] = other.name;
    witnesses.push_back(std::move(tagged));
  }
  json sub = {{"trials", other.trials}, {"failures", other.failures}, {"wall_time", other.wall_time}};
  if (!other.info.empty()) sub["info"] = other.info;
  info[other.name] = std::move(sub);
}

namespace {

void strip_timing(json& j) {
  if (!j.is_object()) return;
  j.erase("wall_time");
  for (auto& [key, value] : j.items()) strip_timing(value);
}

}  // namespace

json SuiteReport::to_json(bool timing) const {
  json j = {{"suite", name}, {"trials", trials},       {"failures", failures}, {"pass", pass()},
            {"seed", seed},  {"witnesses", witnesses}, {"info", info}};
  if (timing)
    j["wall_time"] = wall_time;
  else
    strip_timing(j["info"]);
  return j;
}

// ---------------------------------------------------------------- arithmetic

SuiteReport check_arith(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep = make_report("arith", cfg.seed);
  run_trials(rep, cfg, "arith", cfg.trials, [&](std::size_t i, const Prime& p, Rng& rng) {
    auto nonzero = [&] {
      PadicRational x(static_cast<long>(rng.uniform(1, 60)), static_cast<unsigned long>(rng.uniform(1, 60)));
      x.canonicalize();
      x *= prime_power(p, static_cast<int>(rng.uniform(-4, 4)));
      return rng.coin() ? x : PadicRational(-x);
    };
    for (int r = 0; r < 10; ++r) {
      const PadicRational x = nonzero(), y = nonzero();
      if (valuation(PadicRational(x * y), p) != valuation(x, p) + valuation(y, p))
        rep.fail(trial_tag(i, p, "valuation multiplicative") + json{{"x", to_string(x)}, {"y", to_string(y)}});
      const PadicRational s = x + y;
      if (sgn(s) != 0 && valuation(s, p) < std::min(valuation(x, p), valuation(y, p)))
        rep.fail(trial_tag(i, p, "ultrametric") + json{{"x", to_string(x)}, {"y", to_string(y)}});
      const PadicRational f = frac_part(x, p);
      const bool ok = f >= 0 && f < 1 && frac_part(f, p) == f && sgn(frac_part(PadicRational(x - f), p)) == 0;
      if (!ok) rep.fail(trial_tag(i, p, "fractional part") + json{{"x", to_string(x)}});
    }

    const std::size_t rows = pick(rng, 1, 3), cols = pick(rng, 1, 4);
    const RatMatrix m = random_rows(rows, cols, rng, p, -2, 2);
    const RatMatrix u = random_gl_zp(rows, rng, p);
    if (!(dvr_echelon(u * m, p) == dvr_echelon(m, p)))
      rep.fail(trial_tag(i, p, "echelon canonical") + json{{"m", matrix_to_json(m)}, {"u", matrix_to_json(u)}});

    const RatMatrix a = random_invertible(pick(rng, 1, 4), rng, p, 2);
    if (!(a * invert(a) == RatMatrix::identity(a.rows())))
      rep.fail(trial_tag(i, p, "inverse") + json{{"a", matrix_to_json(a)}});
  });
  rep.wall_time = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------- modules

SuiteReport check_module_laws(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep = make_report("module-laws", cfg.seed);
  run_trials(rep, cfg, "module-laws", cfg.trials, [&](std::size_t i, const Prime& p, Rng& rng) {
    const std::size_t half = pick(rng, 1, 2), n = 2 * half;
    const SymplecticForm b = SymplecticForm::standard(half);
    const Module r = random_module(n, rng, p);
    const Module r2 = random_module(n, rng, p);
    auto witness = [&](std::string_view what) {
      return trial_tag(i, p, what) + json{{"r", module_to_json(r)}, {"r2", module_to_json(r2)}};
    };

    const Module c1 = canonicalize(r, p), c2 = canonicalize(perturb_generators(r, rng, p), p);
    if (!(c1.free_gens() == c2.free_gens() && c1.int_gens() == c2.int_gens())) rep.fail(witness("canonical form"));

    const Module d = dual(r, b, p);
    if (!equal(dual(d, b, p), r, p)) rep.fail(witness("dual involution"));

    const Module bigger = sum(r, r2, p);
    if (!contains(d, dual(bigger, b, p), p)) rep.fail(witness("dual antitone"));

    const Module lhs = dual(intersect(r, r2, p), b, p);
    const Module rhs = sum(d, dual(r2, b, p), p);
    if (!equal(lhs, rhs, p)) rep.fail(witness("dual of intersection"));

    const DownUp du = down_up(r, p);
    const DownUp ddu = down_up(d, p);
    if (!equal(subspace_of(ddu.down, n), subspace_of(orthocomplement(du.up, b), n), p))
      rep.fail(witness("dual down = up perp"));
  });
  rep.wall_time = sw.seconds();
  return rep;
}

SuiteReport check_fig1() {
  Stopwatch sw;
  SuiteReport rep = make_report("fig1", 0);
  std::size_t almost = 0;
  for (std::int64_t pv : {3, 5, 7}) {
    const Prime p = Prime::checked(pv);
    const SymplecticForm b = SymplecticForm::standard(2);
    for (int k1 = -2; k1 <= 2; ++k1)
      for (int l1 = -2; l1 <= 2; ++l1)
        for (int k2 = -2; k2 <= 2; ++k2)
          for (int l2 = -2; l2 <= 2; ++l2) {
            ++rep.trials;
            // pairs (e1, f1), (e2, f2) sit at coordinates (0, 2), (1, 3)
            const Module r = Module::lattice(RatMatrix::diagonal(
                {prime_power(p, k1), prime_power(p, k2), prime_power(p, l1), prime_power(p, l2)}));
            const bool expect = (k1 + l1 == 0 || k1 + l1 == -1) && (k2 + l2 == 0 || k2 + l2 == -1);
            const bool expect_sd = k1 + l1 == 0 && k2 + l2 == 0;
            const bool got = is_almost_selfdual(r, b, p);
            const VertexClass cls = classify(r, b, p);
            const VertexClass want =
                expect_sd ? VertexClass::selfdual : (expect ? VertexClass::almost_selfdual : VertexClass::neither);
            almost += got;
            if (got != expect || cls != want)
              rep.fail({{"p", pv}, {"k1", k1}, {"l1", l1}, {"k2", k2}, {"l2", l2}, {"expected", expect},
                        {"got", got}, {"class", to_string(cls)}});
          }
  }
  rep.info["almost_selfdual_tuples"] = almost;
  rep.wall_time = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------- relations

SuiteReport check_relation_laws(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep = make_report("relation-laws", cfg.seed);
  run_trials(rep, cfg, "relation-laws", cfg.trials, [&](std::size_t i, const Prime& p, Rng& rng) {
    std::array<std::size_t, 4> dims{};
    for (auto& d : dims) d = pick(rng, 1, 2);
    auto rel = [&](std::size_t s, std::size_t t) { return Relation(s, t, random_module(s + t, rng, p, 2)); };
    const Relation t = rel(dims[0], dims[1]);
    const Relation s = rel(dims[1], dims[2]);
    const Relation r = rel(dims[2], dims[3]);
    auto witness = [&](std::string_view what) {
      return trial_tag(i, p, what) +
             json{{"r", relation_to_json(r)}, {"s", relation_to_json(s)}, {"t", relation_to_json(t)}};
    };

    if (!equal(compose(compose(r, s, p), t, p), compose(r, compose(s, t, p), p), p))
      rep.fail(witness("associativity"));
    if (!equal(pseudo_inverse(compose(s, t, p)), compose(pseudo_inverse(t), pseudo_inverse(s), p), p))
      rep.fail(witness("pseudo-inverse contravariant"));
    if (!equal(pseudo_inverse(pseudo_inverse(r)), r, p)) rep.fail(witness("pseudo-inverse involutive"));

    const RatMatrix a = random_rows(dims[1], dims[0], rng, p, -2, 2);
    const Module m = random_module(dims[0], rng, p, 2);
    if (!equal(apply_to_module(graph_of(a), m, p), image(a, m, p), p)) rep.fail(witness("graph action"));

    const std::size_t hs = pick(rng, 1, 2), hd = pick(rng, 1, 2);
    const Relation nz = sample_selfdual_relation(hs, hd, p, rng);
    const SymplecticForm bs = SymplecticForm::standard(hs), bd = SymplecticForm::standard(hd);
    if (!equal(dual(kernel(nz, p), bs, p), dom(nz, p), p) || !equal(dual(indef(nz, p), bd, p), im(nz, p), p))
      rep.fail(trial_tag(i, p, "ker/dom, indef/im duality") + json{{"relation", relation_to_json(nz)}});
  });
  rep.wall_time = sw.seconds();
  return rep;
}

SuiteReport check_nazarov_closure(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep = make_report("nazarov-closure", cfg.seed);
  std::size_t strict_pairs = 0, lattice_pairs = 0;
  run_trials(rep, cfg, "nazarov-closure", cfg.trials, [&](std::size_t i, const Prime& p, Rng& rng) {
    const std::size_t s = pick(rng, 1, 2), w = pick(rng, 1, 2), y = pick(rng, 1, 2);
    Relation pr, qr;
    switch (i % 3) {
      case 0:
        pr = sample_selfdual_relation(s, w, p, rng, SelfDualKind::lattice);
        qr = sample_selfdual_relation(w, y, p, rng, SelfDualKind::lattice);
        break;
      case 1:
        pr = sample_selfdual_relation(s, w, p, rng, random_kind(rng));
        qr = sample_selfdual_relation(w, y, p, rng, random_kind(rng));
        break;
      default:
        pr = sample_saturated_relation(s, w, p, rng);
        qr = rng.coin() ? sample_saturated_relation(w, y, p, rng) : sample_selfdual_relation(w, y, p, rng);
        break;
    }
    const SymplecticForm bs = SymplecticForm::standard(s), bw = SymplecticForm::standard(w),
                         by = SymplecticForm::standard(y);
    const Relation c = compose(qr, pr, p);
    auto witness = [&](std::string_view what) {
      return trial_tag(i, p, what) + json{{"P", relation_to_json(pr)}, {"Q", relation_to_json(qr)},
                                          {"QP", relation_to_json(c)}};
    };
    if (!is_selfdual(pr.body(), difference_form(bs, bw), p) || !is_selfdual(qr.body(), difference_form(bw, by), p))
      rep.fail(witness("sampler produced a non-self-dual relation"));
    if (!is_selfdual(c.body(), difference_form(bs, by), p)) rep.fail(witness("composite self-dual"));
    if (is_nazarov(pr, bs, bw, p, true) && is_nazarov(qr, bw, by, p, true)) {
      ++strict_pairs;
      if (!is_nazarov(c, bs, by, p, true)) rep.fail(witness("composite strict"));
    }
    if (is_lattice(canonicalize(pr.body(), p)) && is_lattice(canonicalize(qr.body(), p))) {
      ++lattice_pairs;
      if (!is_lattice(canonicalize(c.body(), p))) rep.fail(witness("composite lattice"));
    }
  });
  rep.info["strict_pairs"] = strict_pairs;
  rep.info["lattice_pairs"] = lattice_pairs;
  rep.wall_time = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------- χ

namespace {

struct ChiTrial {
  std::size_t alpha, k;
  BlockElement g, h;
  Module q, t;
};

ChiTrial sample_chi_trial(std::size_t i, const Prime& p, Rng& rng, bool two = true) {
  const std::size_t alpha = pick(rng, 1, 2), k = pick(rng, 1, 2);
  const std::size_t l = pick(rng, 1, 2), m = pick(rng, 1, 2);
  BlockElement g = sample_block_element(alpha, k, l, p, rng);
  BlockElement h = two ? sample_block_element(alpha, k, m, p, rng) : g;
  const SelfDualKind kind = kKinds[i % kKinds.size()];
  Module q = sample_selfdual(k, p, rng, kind);
  Module t = sample_selfdual(k, p, rng, kind == SelfDualKind::lattice ? kind : random_kind(rng));
  return {alpha, k, std::move(g), std::move(h), std::move(q), std::move(t)};
}

json chi_witness(std::size_t i, const Prime& p, std::string_view what, const ChiTrial& c) {
  return trial_tag(i, p, what) + json{{"g", block_to_json(c.g)},
                                      {"h", block_to_json(c.h)},
                                      {"Q", module_to_json(c.q)},
                                      {"T", module_to_json(c.t)}};
}

SymplecticForm chi_form(std::size_t alpha) {
  const SymplecticForm bv = SymplecticForm::standard(alpha);
  return difference_form(bv, bv);
}

}  // namespace

CharfnReports check_charfn_core(const SuiteConfig& cfg) {
  Stopwatch sw;
  CharfnReports out{make_report("multiplicativity", cfg.seed), make_report("selfduality", cfg.seed),
                    make_report("sandwich", cfg.seed)};
  std::size_t lattice_trials = 0;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    const Prime p = Prime::checked(cfg.primes[i % cfg.primes.size()]);
    Rng rng(subseed(cfg.seed, "charfn", i));
    ++out.multiplicativity.trials;
    ++out.selfduality.trials;
    ++out.sandwich.trials;
    try {
      const ChiTrial c = sample_chi_trial(i, p, rng);
      const Relation cg = chi(c.g, c.q, c.t, p);
      const Relation ch = chi(c.h, c.q, c.t, p);
      const Relation cf = chi(coset_mul(c.g, c.h), c.q, c.t, p);
      if (!equal(cf, compose(cg, ch, p), p)) out.multiplicativity.fail(chi_witness(i, p, "multiplicativity", c));

      const SymplecticForm bf = chi_form(c.alpha);
      if (!is_selfdual(cg.body(), bf, p) || !is_selfdual(ch.body(), bf, p) || !is_selfdual(cf.body(), bf, p))
        out.selfduality.fail(chi_witness(i, p, "chi self-dual", c));
      const Module qa = sample_almost_selfdual(c.k, p, rng);
      const Module ta = rng.coin() ? sample_almost_selfdual(c.k, p, rng) : c.t;
      if (!is_almost_selfdual(chi(c.g, qa, ta, p).body(), bf, p))
        out.selfduality.fail(chi_witness(i, p, "chi almost self-dual", c) +
                             json{{"Qa", module_to_json(qa)}, {"Ta", module_to_json(ta)}});

      const bool lat = lattices(c.q, c.t, p);
      lattice_trials += lat;
      const SandwichReport sr = lambda_sandwich_from(c.g, cg, lat, p);
      if (!sr.pass())
        out.sandwich.fail(chi_witness(i, p, "sandwich", c) + json{{"down_contains", sr.down_contains},
                                                                  {"up_contained", sr.up_contained},
                                                                  {"down_equal", sr.down_equal},
                                                                  {"up_equal", sr.up_equal},
                                                                  {"lattices", sr.lattices}});
    } catch (const std::exception& e) {
      const json w = {{"trial", i}, {"p", p.value()}, {"error", e.what()}};
      out.multiplicativity.fail(w);
      out.selfduality.fail(w);
      out.sandwich.fail(w);
    }
  }
  out.sandwich.info["lattice_trials"] = lattice_trials;
  const double t = sw.seconds();
  out.multiplicativity.wall_time = out.selfduality.wall_time = out.sandwich.wall_time = t;
  return out;
}

SuiteReport check_representative_independence(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep = make_report("representative-independence", cfg.seed);
  run_trials(rep, cfg, "representative-independence", cfg.trials, [&](std::size_t i, const Prime& p, Rng& rng) {
    const ChiTrial c = sample_chi_trial(i, p, rng, false);
    const std::size_t m = c.g.m();
    const RatMatrix u = sample_orthogonal_int(m, p, rng), u2 = sample_orthogonal_int(m, p, rng);
    const BlockElement g2 = embed_I(u, c.alpha, c.k, p) * c.g * embed_I(u2, c.alpha, c.k, p);
    const Relation base = chi(c.g, c.q, c.t, p);
    if (!equal(chi(g2, c.q, c.t, p), base, p))
      rep.fail(chi_witness(i, p, "representative", c) + json{{"u", matrix_to_json(u)}, {"u2", matrix_to_json(u2)}});
    if (!equal(chi(pad(c.g, m + 1), c.q, c.t, p), base, p)) rep.fail(chi_witness(i, p, "padding", c));
  });
  rep.wall_time = sw.seconds();
  return rep;
}

SuiteReport check_theta_stabilization(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep = make_report("theta-stabilization", cfg.seed);
  std::size_t compared = 0, matrix_equal = 0;
  run_trials(rep, cfg, "theta-stabilization", cfg.trials, [&](std::size_t i, const Prime& p, Rng& rng) {
    const ChiTrial c = sample_chi_trial(i, p, rng);
    const BlockElement f = coset_mul(c.g, c.h);
    if (!(f.matrix() == coset_mul_by_embedding(c.g, c.h).matrix())) rep.fail(chi_witness(i, p, "embedding product", c));
    const Relation target = chi(f, c.q, c.t, p);
    const std::size_t n0 = std::max(c.g.m(), c.h.m());
    for (std::size_t n = n0; n <= n0 + 2; ++n)
      if (!equal(chi(theta_product(c.g, c.h, n), c.q, c.t, p), target, p))
        rep.fail(chi_witness(i, p, "theta stabilization", c) + json{{"N", n}});
    if (c.g.m() == c.h.m()) {
      ++compared;
      matrix_equal += theta_product(c.g, c.h, n0).matrix() == f.matrix();
    }
  });
  rep.info["matrix_comparisons"] = compared;
  rep.info["matrix_equal_at_N_eq_m"] = matrix_equal;
  rep.wall_time = sw.seconds();
  return rep;
}

SuiteReport check_coset_laws(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep = make_report("coset-laws", cfg.seed);
  std::size_t assoc_matrix_equal = 0;
  run_trials(rep, cfg, "coset-laws", cfg.trials, [&](std::size_t i, const Prime& p, Rng& rng) {
    const ChiTrial c = sample_chi_trial(i, p, rng);
    const BlockElement f = sample_block_element(c.alpha, c.k, pick(rng, 1, 2), p, rng);
    const BlockElement left = coset_mul(coset_mul(c.g, c.h), f);
    const BlockElement right = coset_mul(c.g, coset_mul(c.h, f));
    assoc_matrix_equal += left.matrix() == right.matrix();
    if (!equal(chi(left, c.q, c.t, p), chi(right, c.q, c.t, p), p))
      rep.fail(chi_witness(i, p, "associativity", c) + json{{"f", block_to_json(f)}});

    if (!equal(chi(involute(coset_mul(c.g, c.h)), c.q, c.t, p),
               chi(coset_mul(involute(c.h), involute(c.g)), c.q, c.t, p), p))
      rep.fail(chi_witness(i, p, "involution anti-homomorphism", c));
    if (!(involute(involute(c.g)) == c.g)) rep.fail(chi_witness(i, p, "involution involutive", c));

    const std::size_t m = pick(rng, 1, 3), n = pick(rng, 1, 3);
    const RatMatrix th = theta_N(m, n, c.alpha, c.k).matrix();
    const RatMatrix id = RatMatrix::identity(th.rows());
    bool integral = true;
    for (std::size_t r = 0; r < th.rows(); ++r)
      for (const auto& x : th.row(r)) integral = integral && x.get_den() == 1;
    if (!(th.transpose() * th == id) || !(th * th == id) || !integral)
      rep.fail(trial_tag(i, p, "theta orthogonal, involutive, integral") + json{{"m", m}, {"N", n}});
  });
  rep.info["matrix_associative"] = assoc_matrix_equal;
  rep.wall_time = sw.seconds();
  return rep;
}

SuiteReport check_involution_and_scaling(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep = make_report("involution-scaling", cfg.seed);
  std::size_t literal_hits = 0, literal_total = 0;
  run_trials(rep, cfg, "involution-scaling", cfg.trials, [&](std::size_t i, const Prime& p, Rng& rng) {
    const ChiTrial c = sample_chi_trial(i, p, rng, false);
    const Relation base = chi(c.g, c.q, c.t, p);
    if (!equal(chi(involute(c.g), c.t, c.q, p), pseudo_inverse(base), p)) rep.fail(chi_witness(i, p, "involution", c));

    const PadicRational pv(static_cast<long>(p.value()));
    for (const PadicRational& lam : {pv, PadicRational(1 / pv), PadicRational(2)}) {
      const RatMatrix mh = m_lambda(lam, c.k);
      const Relation scaled_chi = chi(c.g, image(mh, c.q, p), image(mh, c.t, p), p);
      const Relation mv = graph_of(m_lambda(lam, c.alpha));
      const Relation mv_inv = graph_of(m_lambda(1 / lam, c.alpha));
      // χ(MQ, MT) = M_V χ M_V^{-1}, with χ applied after M_V^{-1}
      if (!equal(scaled_chi, compose(mv, compose(base, mv_inv, p), p), p))
        rep.fail(chi_witness(i, p, "M(lambda) equivariance", c) + json{{"lambda", to_string(lam)}});
      ++literal_total;
      literal_hits += equal(scaled_chi, compose(mv_inv, compose(base, mv, p), p), p);
    }
  });
  rep.info["literal_order_matches"] = literal_hits;
  rep.info["literal_order_total"] = literal_total;
  rep.wall_time = sw.seconds();
  return rep;
}

SuiteReport check_sp_variant(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep = make_report("sp-variant", cfg.seed);
  {
    ++rep.trials;
    const Prime p = Prime::checked(cfg.primes.front());
    try {
      const Module o2 = Module::standard_lattice(2);
      const Relation j = chi_sp(standard_J(2), 1, 1, 1, o2, o2, p);
      if (!is_selfdual(j.body(), chi_form(1), p)) rep.fail({{"check", "J on O^2"}, {"chi", relation_to_json(j)}});
    } catch (const std::exception& e) {
      rep.fail({{"check", "J on O^2"}, {"error", e.what()}});
    }
  }
  run_trials(rep, cfg, "sp-variant", cfg.trials, [&](std::size_t i, const Prime& p, Rng& rng) {
    const ChiTrial c = sample_chi_trial(i, p, rng);
    const std::size_t l = c.g.m(), m = c.h.m();
    if (!equal(chi_sp(doubled(c.g), c.alpha, c.k, l, c.q, c.t, p), chi(c.g, c.q, c.t, p), p))
      rep.fail(chi_witness(i, p, "doubled embedding", c));

    const RatMatrix gs = sample_symplectic(c.alpha + c.k * l, p, rng);
    const RatMatrix hs = sample_symplectic(c.alpha + c.k * m, p, rng);
    const Relation xg = chi_sp(gs, c.alpha, c.k, l, c.q, c.t, p);
    const Relation xh = chi_sp(hs, c.alpha, c.k, m, c.q, c.t, p);
    if (!is_selfdual(xg.body(), chi_form(c.alpha), p)) rep.fail(chi_witness(i, p, "sp self-dual", c));
    const RatMatrix fs = sp_coset_mul(gs, l, hs, m, c.alpha, c.k);
    if (!equal(chi_sp(fs, c.alpha, c.k, l + m, c.q, c.t, p), compose(xg, xh, p), p))
      rep.fail(chi_witness(i, p, "sp multiplicativity", c) +
               json{{"gs", matrix_to_json(gs)}, {"hs", matrix_to_json(hs)}});
  });
  rep.wall_time = sw.seconds();
  return rep;
}

SuiteReport check_boundary(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep = make_report("boundary", cfg.seed);
  std::size_t graphs = 0, resampled = 0, singular_raised = 0;
  run_trials(rep, cfg, "boundary", cfg.trials, [&](std::size_t i, const Prime& p, Rng& rng) {
    const std::size_t alpha = pick(rng, 1, 2), k = pick(rng, 1, 2), m = pick(rng, 1, 2);
    const BlockElement g = sample_block_element(alpha, k, m, p, rng);
    BoundaryPair bp{sample_symmetric(k, rng), sample_symmetric(k, rng)};
    for (int tries = 0; sgn(omega_determinant(g, bp)) == 0; ++tries) {
      // a singular draw must be refused, not answered
      try {
        chi_boundary(g, bp, p);
        rep.fail(trial_tag(i, p, "singular draw answered") + json{{"g", block_to_json(g)}});
      } catch (const SingularBoundary&) {
        ++singular_raised;
      }
      if (tries == 16) throw SamplerFailure("boundary: no nonsingular pair");
      bp = {sample_symmetric(k, rng), sample_symmetric(k, rng)};
      ++resampled;
    }
    auto witness = [&](std::string_view what) {
      return trial_tag(i, p, what) +
             json{{"g", block_to_json(g)}, {"kappa", matrix_to_json(bp.kappa)}, {"tau", matrix_to_json(bp.tau)}};
    };
    const BoundaryResult res = chi_boundary(g, bp, p, true);
    if (!(res.z.transpose() == res.z)) rep.fail(witness("Z symmetric"));
    const SymplecticForm bf = chi_form(alpha);
    if (!is_selfdual(res.relation.body(), bf, p) || !is_subspace(canonicalize(res.relation.body(), p)))
      rep.fail(witness("Lagrangian output"));
    const Relation pipeline = chi(g, symmetric_graph(bp.tau), symmetric_graph(bp.kappa), p);
    if (!equal(pipeline, res.relation, p)) rep.fail(witness("matrix and module paths agree"));
    if (res.map) {
      ++graphs;
      const RatMatrix j = standard_J(alpha);
      if (!(res.map->transpose() * j * *res.map == j)) rep.fail(witness("symplectic value"));
    }

    // Forced singular configuration: one slot, tau = d^t kappa d.
    const BlockElement g1 = sample_block_element(alpha, k, 1, p, rng);
    const RatMatrix d = g1.matrix().block(alpha, alpha, k, k);
    const RatMatrix kappa = sample_symmetric(k, rng);
    const BoundaryPair sing{kappa, d.transpose() * kappa * d};
    bool raised = false;
    try {
      chi_boundary(g1, sing, p);
    } catch (const SingularBoundary&) {
      raised = true;
      ++singular_raised;
    }
    if (!raised || sgn(omega_determinant(g1, sing)) != 0)
      rep.fail(trial_tag(i, p, "singular configuration raises") + json{{"g", block_to_json(g1)}});
    const Relation fallback = chi(g1, symmetric_graph(sing.tau), symmetric_graph(sing.kappa), p);
    if (!is_selfdual(fallback.body(), bf, p)) rep.fail(trial_tag(i, p, "singular module pipeline self-dual"));
  });
  rep.info["graph_outputs"] = graphs;
  rep.info["singular_resamples"] = resampled;
  rep.info["singular_raised"] = singular_raised;
  rep.wall_time = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------- building

SuiteReport check_neighbors() {
  Stopwatch sw;
  SuiteReport rep = make_report("neighbors", 0);
  for (std::int64_t pv : {3, 5}) {
    const Prime p = Prime::checked(pv);
    const SymplecticForm b1 = SymplecticForm::standard(1);
    const Module o2 = Module::standard_lattice(2);
    const Module top = scaled(o2, -1, p);
    ++rep.trials;
    const std::vector<Module> nb = neighbors_over(1, p);
    const std::size_t strict = nb.empty() ? 0 : nb.size() - 1;
    rep.info["p" + std::to_string(pv) + "_strict"] = strict;
    if (strict != static_cast<std::size_t>(pv) + 1 || nb.empty() || !equal(nb.front(), o2, p))
      rep.fail({{"p", pv}, {"check", "valence"}, {"strict", strict}});
    for (std::size_t i = 1; i < nb.size(); ++i) {
      ++rep.trials;
      if (!is_almost_selfdual(nb[i], b1, p) || !contains(nb[i], o2, p) || !contains(top, nb[i], p) ||
          equal(nb[i], o2, p))
        rep.fail({{"p", pv}, {"check", "neighbor"}, {"module", module_to_json(nb[i])}});
    }

    ++rep.trials;
    const std::size_t n2 = neighbors_over(2, p).size();
    const std::size_t q = pv;
    const std::size_t expected = 1 + (q * q * q * q - 1) / (q - 1) + (q * q + 1) * (q + 1);
    rep.info["p" + std::to_string(pv) + "_rank2_total"] = n2;
    if (n2 != expected) rep.fail({{"p", pv}, {"check", "rank-2 count"}, {"got", n2}, {"expected", expected}});

    if (pv != 3) continue;
    // Oracle: every subset of F_3^2, keep the subgroups, lift, test.
    ++rep.trials;
    std::vector<std::array<int, 2>> pts;
    for (int a = 0; a < 3; ++a)
      for (int c = 0; c < 3; ++c) pts.push_back({a, c});
    std::size_t found = 0;
    bool complete = true;
    for (unsigned mask = 0; mask < (1u << 9); ++mask) {
      if (!(mask & 1u)) continue;
      bool closed = true;
      for (unsigned x = 0; x < 9 && closed; ++x)
        for (unsigned y = 0; y < 9 && closed; ++y)
          if ((mask >> x & 1u) && (mask >> y & 1u)) {
            const unsigned z = ((pts[x][0] + pts[y][0]) % 3) * 3 + (pts[x][1] + pts[y][1]) % 3;
            closed = mask >> z & 1u;
          }
      if (!closed || mask == 1u) continue;
      RatMatrix gens = RatMatrix::identity(2);
      for (unsigned x = 1; x < 9; ++x)
        if (mask >> x & 1u)
          gens.append_row(RatVector{PadicRational(pts[x][0]) / 3, PadicRational(pts[x][1]) / 3});
      const Module lift = Module::lattice(gens);
      if (!is_almost_selfdual(lift, b1, p)) continue;
      ++found;
      complete = complete && std::any_of(nb.begin() + 1, nb.end(), [&](const Module& m) { return equal(m, lift, p); });
    }
    rep.info["oracle_p3_strict"] = found;
    if (!complete || found != strict) rep.fail({{"p", 3}, {"check", "oracle"}, {"oracle", found}, {"got", strict}});
  }
  rep.wall_time = sw.seconds();
  return rep;
}

SuiteReport check_graph_morphism(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep = make_report("graph-morphism", cfg.seed);
  std::size_t equal_cases = 0, strict_cases = 0;
  run_trials(rep, cfg, "graph-morphism", cfg.trials, [&](std::size_t i, const Prime& p, Rng& rng) {
    const std::size_t alpha = pick(rng, 1, 2), k = pick(rng, 1, 2), m = pick(rng, 1, 2);
    const BlockElement g = sample_block_element(alpha, k, m, p, rng);
    // Q = S·(⊕ p^{a} O ⊕ p^{-a-s} O) with shifts s in {0, 1}; Q' drops some shifts.
    auto arrow = [&](bool same) {
      const RatMatrix s = sample_symplectic(k, p, rng);
      RatVector big(2 * k), small(2 * k);
      for (std::size_t j = 0; j < k; ++j) {
        const int a = static_cast<int>(rng.uniform(-1, 1));
        // the first coordinate always carries a proper step unless same
        const int shift = j == 0 && !same ? 1 : static_cast<int>(rng.uniform(0, 1));
        const int shift2 = same ? shift : (j == 0 ? 0 : static_cast<int>(rng.uniform(0, shift)));
        big[j] = small[j] = prime_power(p, a);
        big[k + j] = prime_power(p, -a - shift);
        small[k + j] = prime_power(p, -a - shift2);
      }
      return std::pair{image(s, Module::lattice(RatMatrix::diagonal(big)), p),
                       image(s, Module::lattice(RatMatrix::diagonal(small)), p)};
    };
    const bool same = i % 4 == 0;
    const auto [q, q2] = arrow(same);
    const auto [t, t2] = arrow(same);
    const MorphismReport r = chi_graph_morphism_check(g, q, t, q2, t2, p);
    if (same) {
      ++equal_cases;
      if (!r.equal) rep.fail(trial_tag(i, p, "identity arrow gives equal chi"));
    } else {
      strict_cases += !(equal(q, q2, p) && equal(t, t2, p));
    }
    if (!r.pass())
      rep.fail(trial_tag(i, p, "graph morphism") + json{{"g", block_to_json(g)},
                                                        {"Q", module_to_json(q)},
                                                        {"Q2", module_to_json(q2)},
                                                        {"T", module_to_json(t)},
                                                        {"T2", module_to_json(t2)},
                                                        {"contains", r.contains},
                                                        {"source_almost", r.source_almost},
                                                        {"target_almost", r.target_almost}});
  });
  rep.info["identity_arrows"] = equal_cases;
  rep.info["proper_arrows"] = strict_cases;
  rep.wall_time = sw.seconds();
  return rep;
}

SuiteReport check_continuity(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep = make_report("continuity", cfg.seed);
  constexpr int kCount = 7, kDepth = 4;
  const Module lim = standard_continuity_limit();
  auto record = [&](const ConvergenceReport& r, std::string_view what, json extra) {
    if (r.pass()) return;
    json w = {{"check", what}, {"absorbs", r.absorbs}, {"approaches", r.approaches},
              {"down_inside", r.down_inside}, {"closeness", r.closeness}, {"first_absorbing", r.first_absorbing},
              {"witnesses", r.witnesses}};
    w.update(extra);
    rep.fail(std::move(w));
  };
  for (std::int64_t pv : cfg.primes) {
    ++rep.trials;
    const Prime p = Prime::checked(pv);
    const ConvergenceReport r =
        arrow_convergence(standard_continuity_sequence(kCount, p), lim, kDepth, kDepth + 2 * kCount, p);
    rep.info["sequence_closeness_p" + std::to_string(pv)] = r.closeness;
    record(r, "Q_j sequence", {{"p", pv}});
  }
  bool first = true;
  run_trials(rep, cfg, "continuity", cfg.trials, [&](std::size_t i, const Prime& p, Rng& rng) {
    const std::vector<Module> seq = standard_continuity_sequence(kCount, p);
    const std::size_t alpha = pick(rng, 1, 2), m = pick(rng, 1, 2);
    const BlockElement g = sample_block_element(alpha, 1, m, p, rng);
    const Module t = sample_selfdual(1, p, rng, random_kind(rng));
    const ConvergenceReport r = continuity_check(g, seq, lim, t, kDepth, p);
    if (first) {
      rep.info["chi_closeness_first_trial"] = r.closeness;
      rep.info["chi_first_absorbing_first_trial"] = r.first_absorbing;
      first = false;
    }
    record(r, "chi continuity", {{"trial", i}, {"p", p.value()}, {"g", block_to_json(g)}, {"T", module_to_json(t)}});

    // Stability under intersection with a fixed lattice and under a linear image.
    const Module l = Module::lattice(random_invertible(2, rng, p, 1));
    std::vector<Module> cut, moved;
    const RatMatrix a = random_invertible(2, rng, p, 1);
    for (const Module& q : seq) {
      cut.push_back(intersect(l, q, p));
      moved.push_back(image(a, q, p));
    }
    record(arrow_convergence(cut, intersect(l, lim, p), kDepth, kDepth + 2 * kCount, p), "intersection",
           {{"trial", i}, {"p", p.value()}, {"L", module_to_json(l)}});
    record(arrow_convergence(moved, image(a, lim, p), kDepth, kDepth + 2 * kCount, p), "image",
           {{"trial", i}, {"p", p.value()}, {"A", matrix_to_json(a)}});
  });
  rep.wall_time = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------- Weil

SuiteReport check_weil(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep = make_report("weil", cfg.seed);
  const Prime p = Prime::checked(3);
  const FiniteModel model(p, 2);
  const std::size_t n = model.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  double worst_unitary = 0, worst_proj = 0, worst_scalar = 0, worst_cov = 0, worst_comm = 0;

  auto unitary_residual = [&](const ComplexMatrix& u) { return max_abs_diff(u * u.adjoint(), id); };
  auto check = [&](bool ok, json w) {
    ++rep.trials;
    if (!ok) rep.fail(std::move(w));
  };

  const PadicRational third(1, 3), ninth(1, 9);
  std::vector<std::pair<std::string, ComplexMatrix>> gens;
  for (long a : {2L, -1L, 4L}) gens.emplace_back("D(" + std::to_string(a) + ")", weil_diag(model, a));
  for (long b : {1L, -2L, 3L}) gens.emplace_back("U(" + std::to_string(b) + ")", weil_upper(model, b));
  gens.emplace_back("J", weil_fourier(model));
  gens.emplace_back("Psi(1/9,2/3)", heis_op(model, ninth, 2 * third));
  for (const auto& [name, u] : gens) {
    const double r = unitary_residual(u);
    worst_unitary = std::max(worst_unitary, r);
    check(r < 1e-9, {{"check", "unitary"}, {"operator", name}, {"residual", r}});
  }

  const ComplexMatrix f = weil_fourier(model);
  const ComplexMatrix f2 = f * f;
  const double r4 = projective_fit(f2 * f2, id).second;
  const double r2 = projective_fit(f2, weil_diag(model, -1)).second;
  check(r4 < 1e-9, {{"check", "fourier^4"}, {"residual", r4}});
  check(r2 < 1e-9, {{"check", "fourier^2 parity"}, {"residual", r2}});

  const PadicRational scale = prime_power(p, -model.depth());
  Rng crng(subseed(cfg.seed, "weil-commutator", 0));
  double as_written_dev = 0;
  for (int r = 0; r < 10; ++r) {
    std::array<PadicRational, 4> v;
    for (auto& x : v) x = PadicRational(static_cast<long>(crng.uniform(-8, 8))) * scale;
    const ComplexMatrix a = heis_op(model, v[0], v[1]), b = heis_op(model, v[2], v[3]);
    const ComplexMatrix comm = a * b * a.adjoint() * b.adjoint();
    const double dev = max_abs_diff(comm, char_value(PadicRational(v[0] * v[3] - v[1] * v[2]), p) * id);
    worst_comm = std::max(worst_comm, dev);
    check(dev < 1e-10, {{"check", "heisenberg commutator"}, {"residual", dev}});
    const ComplexMatrix a0 = heis_op(model, v[0], v[1], 1.0, HeisConvention::as_written);
    const ComplexMatrix b0 = heis_op(model, v[2], v[3], 1.0, HeisConvention::as_written);
    as_written_dev = std::max(as_written_dev, max_abs_diff(a0 * b0 * a0.adjoint() * b0.adjoint(), id));
  }
  rep.info["as_written_commutator_deviation_from_identity"] = as_written_dev;
  rep.info["as_written_all_commute"] = as_written_dev < 1e-10;

  for (std::size_t i = 0; i < cfg.trials; ++i) {
    Rng rng(subseed(cfg.seed, "weil", i));
    ++rep.trials;
    try {
      const RatMatrix g = sample_sl2_integral(rng), h = sample_sl2_integral(rng);
      const ComplexMatrix wg = weil_of(model, g), wh = weil_of(model, h);
      const auto [s, res] = projective_fit(wg * wh, weil_of(model, g * h));
      const double sdev = std::abs(std::abs(s) - 1.0);
      const double ures = unitary_residual(wg);
      worst_proj = std::max(worst_proj, res);
      worst_scalar = std::max(worst_scalar, sdev);
      worst_unitary = std::max(worst_unitary, ures);
      const RatVector v{PadicRational(static_cast<long>(rng.uniform(-8, 8))) * scale,
                        PadicRational(static_cast<long>(rng.uniform(-8, 8))) * scale};
      const RatVector gv = g * v;
      const double cov = projective_fit(heis_op(model, gv[0], gv[1]) * wg, wg * heis_op(model, v[0], v[1])).second;
      worst_cov = std::max(worst_cov, cov);
      if (res >= 1e-8 || sdev >= 1e-9 || ures >= 1e-9 || cov >= 1e-8)
        rep.fail({{"trial", i}, {"g", matrix_to_json(g)}, {"h", matrix_to_json(h)}, {"projective", res},
                  {"scalar", sdev}, {"unitary", ures}, {"covariance", cov}});
    } catch (const std::exception& e) {
      rep.fail({{"trial", i}, {"error", e.what()}});
    }
  }

  const FiniteModel src(p, 1, 1), dst(p, 1, 2);
  const ComplexMatrix lam = lambda_op(src, dst), lam_star = lambda_adjoint(src, dst), th = theta_op(src, dst);
  const double e1 = max_abs_diff(lam_star * lam, ComplexMatrix::Identity(lam.cols(), lam.cols()));
  const double e2 = max_abs_diff(th, lam * lam_star);
  const double e3 = max_abs_diff(th * th, th);
  check(e1 < 1e-12, {{"check", "lambda* lambda = 1"}, {"residual", e1}});
  check(e2 < 1e-12, {{"check", "theta = lambda lambda*"}, {"residual", e2}});
  check(e3 < 1e-12, {{"check", "theta^2 = theta"}, {"residual", e3}});

  rep.info["worst_unitary"] = worst_unitary;
  rep.info["worst_projective"] = worst_proj;
  rep.info["worst_scalar"] = worst_scalar;
  rep.info["worst_covariance"] = worst_cov;
  rep.info["worst_commutator"] = worst_comm;
  rep.info["lambda_theta"] = {e1, e2, e3};
  rep.wall_time = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------- driver

namespace {

using SuiteFn = std::function<std::vector<SuiteReport>(const SuiteConfig&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"arith", [](const SuiteConfig& c) { return std::vector{check_arith(c)}; }},
      {"modules", [](const SuiteConfig& c) { return std::vector{check_module_laws(c), check_fig1()}; }},
      {"relations", [](const SuiteConfig& c) { return std::vector{check_relation_laws(c)}; }},
      {"nazarov", [](const SuiteConfig& c) { return std::vector{check_nazarov_closure(c)}; }},
      {"cosets",
       [](const SuiteConfig& c) {
         return std::vector{check_coset_laws(c), check_representative_independence(c), check_theta_stabilization(c)};
       }},
      {"charfn",
       [](const SuiteConfig& c) {
         CharfnReports core = check_charfn_core(c);
         return std::vector{core.multiplicativity, core.selfduality, core.sandwich, check_involution_and_scaling(c),
                            check_sp_variant(c)};
       }},
      {"boundary", [](const SuiteConfig& c) { return std::vector{check_boundary(c)}; }},
      {"buildings", [](const SuiteConfig& c) { return std::vector{check_neighbors(), check_graph_morphism(c)}; }},
      {"continuity", [](const SuiteConfig& c) { return std::vector{check_continuity(c)}; }},
      {"weil", [](const SuiteConfig& c) { return std::vector{check_weil(c)}; }},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  out.emplace_back("all");
  return out;
}

SuiteReport run_suite(std::string_view name, const SuiteConfig& cfg) {
  if (cfg.primes.empty()) throw InputError("verify: no primes given");
  for (std::int64_t pv : cfg.primes) {
    Prime::checked(pv);
  }
  if (cfg.trials == 0) throw InputError("verify: trials must be positive");

  SuiteReport out = make_report(std::string(name), cfg.seed);
  bool found = false;
  for (const auto& [suite, fn] : registry()) {
    if (name != "all" && name != suite) continue;
    found = true;
    SuiteReport group = make_report(suite, cfg.seed);
    Stopwatch sw;
    for (const SuiteReport& r : fn(cfg)) group.absorb(r);
    group.wall_time = sw.seconds();  // sub-reports may share one timed loop
    if (name == "all")
      out.absorb(group);
    else
      out = group;
  }
  if (!found) throw InputError("verify: unknown suite '" + std::string(name) + "'");
  return out;
}

}  // namespace pcoset
