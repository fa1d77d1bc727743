#include "support.hpp"

#include "pcoset/errors.hpp"
#include "pcoset/weil.hpp"

#include <gtest/gtest.h>

using namespace pcoset;
using namespace pcoset::test;

namespace {

constexpr double kTol = 1e-10;

ComplexMatrix eye(const FiniteModel& m) { return ComplexMatrix::Identity(m.dim(), m.dim()); }

RatMatrix product(const std::vector<Sl2Token>& ts) {
  RatMatrix r = RatMatrix::identity(2);
  for (const auto& t : ts) r = r * token_matrix(t);
  return r;
}

}  // namespace

TEST(FiniteModel, Shape) {
  const FiniteModel m(P(3), 2);
  EXPECT_EQ(m.side(), 81u);
  EXPECT_EQ(m.dim(), 81u);
  EXPECT_EQ(m.point(1), q("1/9"));
  EXPECT_EQ(m.index_of(q("1/9") + 9), 1u);
  EXPECT_TRUE(m.in_window(q("5/9")));
  EXPECT_FALSE(m.in_window(q("1/27")));
  EXPECT_THROW(FiniteModel(P(2), 1), InputError);
  EXPECT_EQ(FiniteModel(P(3), 1, 2).dim(), 81u);
}

TEST(Heis, ZeroIsIdentity) {
  const FiniteModel m(P(3), 1);
  EXPECT_LT(max_abs_diff(heis_op(m, PadicRational(0), PadicRational(0)), eye(m)), kTol);
}

TEST(Heis, Unitary) {
  const FiniteModel m(P(5), 1);
  const ComplexMatrix h = heis_op(m, q("2/5"), q("-3/5"));
  EXPECT_LT(max_abs_diff(h * h.adjoint(), eye(m)), kTol);
}

TEST(Generators, Trivial) {
  const FiniteModel m(P(3), 2);
  EXPECT_LT(max_abs_diff(weil_diag(m, PadicRational(1)), eye(m)), kTol);
  EXPECT_LT(max_abs_diff(weil_upper(m, PadicRational(0)), eye(m)), kTol);
  EXPECT_ANY_THROW(weil_diag(m, PadicRational(3)));
}

TEST(Fourier, SquareIsParity) {
  const FiniteModel m(P(3), 2);
  const ComplexMatrix f = weil_fourier(m);
  EXPECT_LT(max_abs_diff(f * f.adjoint(), eye(m)), kTol);
  const ComplexMatrix f2 = f * f;
  const auto [s, err] = projective_fit(f2, weil_diag(m, PadicRational(-1)));
  EXPECT_LT(err, 1e-9);
  EXPECT_NEAR(std::abs(s), 1.0, kTol);
  const auto [s4, err4] = projective_fit(f2 * f2, eye(m));
  EXPECT_LT(err4, 1e-9);
}

TEST(Sl2Factor, Products) {
  for (const RatMatrix& g : {RatMatrix::identity(2), RatMatrix::of({{0, 1}, {-1, 0}}), RatMatrix::of({{2, 1}, {1, 1}}),
                             RatMatrix::from_rows({{q("1/3"), 0}, {0, PadicRational(3)}})}) {
    EXPECT_EQ(product(sl2_factor(g)), g);
    EXPECT_EQ(product(sl2_factor(g, P(3))), g);
  }
  EXPECT_THROW(sl2_factor(RatMatrix::of({{2, 0}, {0, 1}})), InputError);
}

TEST(Sl2Factor, IntegralRoute) {
  // c = 3 is not a unit; the lower route keeps every parameter integral
  const RatMatrix g = RatMatrix::of({{1, 0}, {3, 1}});
  for (const auto& t : sl2_factor(g, P(3))) EXPECT_GE(t.kind == Sl2Token::fourier ? 0 : valuation(t.value, P(3)), 0);
}

TEST(WeilOf, IdentityAndProjectivity) {
  const FiniteModel m(P(3), 1);
  EXPECT_LT(max_abs_diff(weil_of(m, RatMatrix::identity(2)), eye(m)), kTol);
  const RatMatrix g = RatMatrix::of({{2, 1}, {1, 1}}), h = RatMatrix::of({{1, 2}, {0, 1}});
  const auto [s, err] = projective_fit(weil_of(m, g * h), weil_of(m, g) * weil_of(m, h));
  EXPECT_LT(err, 1e-9);
  EXPECT_NEAR(std::abs(s), 1.0, 1e-9);
}

TEST(WeilOf, Unitary) {
  const FiniteModel m(P(5), 1);
  const ComplexMatrix w = weil_of(m, RatMatrix::of({{2, 1}, {1, 1}}));
  EXPECT_LT(max_abs_diff(w * w.adjoint(), eye(m)), kTol);
}

TEST(LambdaTheta, Identities) {
  const FiniteModel src(P(3), 1, 1), dst(P(3), 1, 2);
  const ComplexMatrix l = lambda_op(src, dst), la = lambda_adjoint(src, dst);
  EXPECT_EQ(l.rows(), static_cast<Eigen::Index>(dst.dim()));
  EXPECT_EQ(l.cols(), static_cast<Eigen::Index>(src.dim()));
  // Λ is an isometry onto its image
  EXPECT_LT(max_abs_diff(la * l, eye(src)), 1e-12);
  const ComplexMatrix t = theta_op(src, dst);
  EXPECT_LT(max_abs_diff(t, l * la), 1e-12);
  EXPECT_LT(max_abs_diff(t * t, t), 1e-12);
  EXPECT_THROW(lambda_op(src, src), InputError);
}
