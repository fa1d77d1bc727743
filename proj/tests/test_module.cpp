#include "support.hpp"

#include "pcoset/errors.hpp"
#include "pcoset/sampling.hpp"

#include <gtest/gtest.h>

using namespace pcoset;
using namespace pcoset::test;

namespace {

RatVector vec(std::initializer_list<const char*> xs) {
  RatVector v;
  for (const char* x : xs) v.push_back(q(x));
  return v;
}

// Independent membership oracle for full-rank lattices: x ∈ L iff the
// coordinates of x in the generator basis are all integral at p.
bool lattice_oracle(const RatMatrix& basis, const RatVector& x, const Prime& p) {
  const auto c = solve_linear(basis.transpose(), x);
  if (!c) return false;
  for (const auto& ci : *c)
    if (valuation(ci, p) < 0) return false;
  return true;
}

}  // namespace

TEST(Canonicalize, Examples) {
  const Prime p = P(3);
  const Module r(2, RatMatrix::of({{1, 0}}), RatMatrix::of({{3, 0}, {0, 1}}));
  const Module c = canonicalize(r, p);
  EXPECT_EQ(c.free_gens(), RatMatrix::of({{1, 0}}));
  EXPECT_EQ(c.int_gens(), RatMatrix::of({{0, 1}}));

  const Module o2 = canonicalize(Module::standard_lattice(2), p);
  EXPECT_EQ(o2.int_gens(), RatMatrix::identity(2));
  EXPECT_EQ(o2.free_gens().rows(), 0u);

  EXPECT_EQ(canonicalize(lat({{1, 0}, {3, 0}}), p).int_gens(), RatMatrix::of({{1, 0}}));
  EXPECT_TRUE(canonicalize(r, p).canonical_for(p));
  EXPECT_EQ(canonicalize(canonicalize(r, p), p), canonicalize(r, p));
}

TEST(Canonicalize, ZeroModuleKeepsAmbient) {
  const Module z(3, RatMatrix(0, 3), RatMatrix(0, 3));
  const Module c = canonicalize(z, P(5));
  EXPECT_EQ(c.ambient_dim(), 3u);
  EXPECT_TRUE(is_compact(c));
  EXPECT_TRUE(equal(z, lat({{0, 0, 0}}), P(5)));
}

TEST(Membership, Examples) {
  const Prime p = P(3);
  EXPECT_FALSE(contains_vector(Module::standard_lattice(2), vec({"1/3", "1"}), p));
  EXPECT_TRUE(contains_vector(diag_lattice(p, {-1, 0}), vec({"1/3", "1"}), p));
  const Module line(2, RatMatrix::of({{1, 0}}), RatMatrix(0, 2));
  EXPECT_TRUE(contains_vector(line, vec({"5/7", "0"}), p));
  EXPECT_FALSE(contains_vector(line, vec({"0", "1"}), p));
}

TEST(Membership, AgreesWithCoordinateOracle) {
  const Prime p = P(5);
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    RatMatrix b(2, 2);
    do {
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          b(i, j) = PadicRational(static_cast<long>(rng.uniform(-6, 6))) * prime_power(p, static_cast<int>(rng.uniform(-1, 1)));
    } while (sgn(determinant(b)) == 0);
    const Module l = Module::lattice(b);
    for (int k = 0; k < 20; ++k) {
      const RatVector x{PadicRational(static_cast<long>(rng.uniform(-30, 30))) / 25,
                        PadicRational(static_cast<long>(rng.uniform(-30, 30))) / 5};
      EXPECT_EQ(contains_vector(l, x, p), lattice_oracle(b, x, p));
    }
  }
}

TEST(SumIntersect, Examples) {
  const Prime p = P(3);
  const Module o2 = Module::standard_lattice(2);
  EXPECT_TRUE(equal(intersect(o2, diag_lattice(p, {1, -1}), p), diag_lattice(p, {1, 0}), p));

  const Module diag_line(2, RatMatrix::of({{1, 1}}), RatMatrix(0, 2));
  const Module cut = intersect(diag_line, o2, p);
  EXPECT_EQ(cut.free_gens().rows(), 0u);
  EXPECT_EQ(cut.int_gens(), RatMatrix::of({{1, 1}}));
  // brute force over t (1,1): inside iff v(t) >= 0
  for (const char* t : {"1", "1/3", "3", "2/9", "5"})
    EXPECT_EQ(contains_vector(cut, RatVector{q(t), q(t)}, p), valuation(q(t), p) >= 0) << t;

  EXPECT_TRUE(equal(sum(lat({{1, 0}}), lat({{0, 1}}), p), o2, p));
}

TEST(ImagePreimageKernel, Examples) {
  const Prime p = P(3);
  const Module o2 = Module::standard_lattice(2);
  EXPECT_TRUE(equal(image(RatMatrix::of({{3, 0}, {0, 1}}), o2, p), diag_lattice(p, {1, 0}), p));

  const Module pre = preimage(RatMatrix::of({{1, 0}}), Module::standard_lattice(1), p);
  EXPECT_TRUE(equal(pre, Module(2, RatMatrix::of({{0, 1}}), RatMatrix::of({{1, 0}})), p));

  const Module k = module_kernel(RatMatrix::of({{1, 1}}), o2, p);
  EXPECT_TRUE(equal(k, lat({{1, -1}}), p));
  EXPECT_FALSE(contains_vector(k, vec({"1/3", "-1/3"}), p));
}

TEST(DownUp, Examples) {
  const Prime p = P(3);
  const DownUp a = down_up(Module::standard_lattice(2), p);
  EXPECT_EQ(a.down.rows(), 0u);
  EXPECT_EQ(rank(a.up), 2u);

  const Module r(4, RatMatrix::of({{1, 0, 0, 0}}), RatMatrix::of({{0, 1, 0, 0}}));
  const DownUp b = down_up(r, p);
  EXPECT_EQ(rank(b.down), 1u);
  EXPECT_EQ(rank(b.up), 2u);
  EXPECT_EQ(rank(vstack(b.up, RatMatrix::of({{1, 0, 0, 0}, {0, 1, 0, 0}}))), 2u);
}

TEST(Dual, Examples) {
  const Prime p = P(3);
  const SymplecticForm b1 = SymplecticForm::standard(1), b2 = SymplecticForm::standard(2);
  EXPECT_TRUE(equal(dual(Module::standard_lattice(4), b2, p), Module::standard_lattice(4), p));
  EXPECT_TRUE(equal(dual(diag_lattice(p, {-1, 0}), b1, p), diag_lattice(p, {0, 1}), p));
  const Module line(2, RatMatrix::of({{1, 0}}), RatMatrix(0, 2));
  EXPECT_TRUE(equal(dual(line, b1, p), line, p));
  // dual of a subspace is its orthocomplement
  const Module plane(4, RatMatrix::of({{1, 0, 0, 0}, {0, 1, 0, 0}}), RatMatrix(0, 4));
  EXPECT_TRUE(equal(dual(plane, b2, p), plane, p));
}

TEST(SelfDuality, Examples) {
  const Prime p = P(3);
  const SymplecticForm b2 = SymplecticForm::standard(2);
  EXPECT_TRUE(is_selfdual(Module::standard_lattice(4), b2, p));
  EXPECT_TRUE(is_isotropic(scaled(Module::standard_lattice(4), 1, p), b2, p));
  EXPECT_FALSE(is_selfdual(scaled(Module::standard_lattice(4), 1, p), b2, p));
  // graph of a symmetric matrix
  const Module graph(4, RatMatrix::of({{1, 0, 2, 1}, {0, 1, 1, 5}}), RatMatrix(0, 4));
  EXPECT_TRUE(is_selfdual(graph, b2, p));
  const Module skew(4, RatMatrix::of({{1, 0, 2, 1}, {0, 1, 3, 5}}), RatMatrix(0, 4));
  EXPECT_FALSE(is_isotropic(skew, b2, p));
}

TEST(AlmostSelfDual, Examples) {
  const Prime p = P(5);
  const SymplecticForm b1 = SymplecticForm::standard(1);
  EXPECT_TRUE(is_almost_selfdual(Module::standard_lattice(2), b1, p));
  EXPECT_TRUE(is_almost_selfdual(diag_lattice(p, {-1, 0}), b1, p));
  EXPECT_FALSE(is_almost_selfdual(diag_lattice(p, {-1, -1}), b1, p));
  EXPECT_FALSE(is_almost_selfdual(diag_lattice(p, {1, 0}), b1, p));
}

TEST(AlmostSelfDual, FigureOneExhaustive) {
  const Prime p = P(3);
  const SymplecticForm b2 = SymplecticForm::standard(2);
  int agree = 0;
  for (int k1 = -2; k1 <= 2; ++k1)
    for (int l1 = -2; l1 <= 2; ++l1)
      for (int k2 = -2; k2 <= 2; ++k2)
        for (int l2 = -2; l2 <= 2; ++l2) {
          const bool expect = (k1 + l1 == 0 || k1 + l1 == -1) && (k2 + l2 == 0 || k2 + l2 == -1);
          agree += is_almost_selfdual(diag_lattice(p, {k1, k2, l1, l2}), b2, p) == expect;
        }
  EXPECT_EQ(agree, 625);
}

TEST(ApproxContains, Examples) {
  const Prime p = P(3);
  const Module zero(2, RatMatrix(0, 2), RatMatrix(0, 2));
  EXPECT_TRUE(approx_contains(RatVector{PadicRational(27), PadicRational(0)}, zero, 3, p));
  const Module p_o2 = scaled(Module::standard_lattice(2), 1, p);
  EXPECT_TRUE(approx_contains(RatVector{PadicRational(1), PadicRational(0)}, p_o2, 0, p));
  EXPECT_FALSE(approx_contains(RatVector{PadicRational(1), PadicRational(0)}, p_o2, 1, p));
}

TEST(Tensor, Examples) {
  const Prime p = P(3);
  EXPECT_TRUE(equal(tensor_with_standard_lattice(Module::standard_lattice(2), 3, p), Module::standard_lattice(6), p));
  const Module line(2, RatMatrix::of({{1, 0}}), RatMatrix(0, 2));
  const Module t = canonicalize(tensor_with_standard_lattice(line, 2, p), p);
  EXPECT_EQ(t.free_gens().rows(), 2u);
  EXPECT_EQ(t.int_gens().rows(), 0u);
  // graph of κ = [[2]] becomes graph of 2·I_2 in (x+_1, x+_2, x-_1, x-_2)
  const Module g(2, RatMatrix::of({{1, 2}}), RatMatrix(0, 2));
  const Module tg = tensor_with_standard_lattice(g, 2, p);
  EXPECT_TRUE(equal(tg, Module(4, RatMatrix::of({{1, 0, 2, 0}, {0, 1, 0, 2}}), RatMatrix(0, 4)), p));
}

TEST(Orthocomplement, OfALine) {
  const SymplecticForm b1 = SymplecticForm::standard(1);
  const RatMatrix perp = orthocomplement(RatMatrix::of({{1, 0}}), b1);
  EXPECT_EQ(rank(perp), 1u);
  EXPECT_EQ(b1(perp.row(0), RatMatrix::of({{1, 0}}).row(0)), 0);
}

TEST(SymplecticForm, RejectsBadGram) {
  EXPECT_THROW(SymplecticForm(RatMatrix::of({{1, 0}, {0, 1}})), InputError);
  EXPECT_THROW(SymplecticForm(RatMatrix::of({{0, 0}, {0, 0}})), InputError);
}

TEST(ModuleLaws, DualInvolutionOnSamples) {
  for (std::int64_t pv : {3, 5, 7}) {
    const Prime p = P(pv);
    Rng rng(subseed(5, "dual-samples", static_cast<std::uint64_t>(pv)));
    for (int i = 0; i < 10; ++i) {
      const Module s = sample_selfdual(2, p, rng);
      EXPECT_TRUE(is_selfdual(s, SymplecticForm::standard(2), p));
      const Module a = sample_almost_selfdual(2, p, rng);
      EXPECT_TRUE(is_almost_selfdual(a, SymplecticForm::standard(2), p));
    }
  }
}
