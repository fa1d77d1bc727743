#include "support.hpp"

#include "pcoset/echelon.hpp"
#include "pcoset/errors.hpp"

#include <gtest/gtest.h>

#include <climits>
#include <cmath>

using namespace pcoset;
using pcoset::test::P;
using pcoset::test::q;

TEST(Prime, RejectsComposites) {
  EXPECT_THROW(Prime::checked(9), InputError);
  EXPECT_THROW(Prime::checked(1), InputError);
  EXPECT_THROW(Prime::checked(-3), InputError);
  EXPECT_EQ(Prime::checked(2).value(), 2u);
  EXPECT_EQ(Prime::checked(1'000'003).value(), 1'000'003u);
}

TEST(Valuation, Examples) {
  EXPECT_EQ(valuation(PadicRational(18), P(3)), 2);
  EXPECT_EQ(valuation(q("7/25"), P(5)), -2);
  EXPECT_EQ(valuation(PadicRational(0), P(7)), INT_MAX);
  EXPECT_EQ(valuation(q("-1/3"), P(3)), -1);
  EXPECT_EQ(valuation(q("10/3"), P(2)), 1);
}

TEST(FracPart, Examples) {
  EXPECT_EQ(frac_part(q("7/25"), P(5)), q("7/25"));
  EXPECT_EQ(frac_part(q("5/3"), P(3)), q("2/3"));
  EXPECT_EQ(frac_part(PadicRational(4), P(7)), 0);
  EXPECT_EQ(frac_part(q("5/6"), P(3)), q("1/3"));
  // negative input: -1/3 = 2/3 - 1
  EXPECT_EQ(frac_part(q("-1/3"), P(3)), q("2/3"));
  // units in the denominator do not contribute
  EXPECT_EQ(frac_part(q("1/2"), P(3)), 0);
}

TEST(CharValue, Examples) {
  const auto w = char_value(q("1/3"), P(3));
  EXPECT_NEAR(w.real(), -0.5, 1e-12);
  EXPECT_NEAR(w.imag(), std::sqrt(3.0) / 2, 1e-12);
  const auto one = char_value(PadicRational(2), P(5));
  EXPECT_NEAR(one.real(), 1.0, 1e-12);
  EXPECT_NEAR(one.imag(), 0.0, 1e-12);
  const auto a = char_value(q("5/6"), P(3)), b = char_value(q("1/3"), P(3));
  EXPECT_NEAR(std::abs(a - b), 0.0, 1e-12);
}

TEST(ResidueBelow, TruncatesExpansion) {
  const Prime p = P(3);
  // 7 = 1 + 2*3, truncated below 3^1 is 1
  EXPECT_EQ(residue_below(PadicRational(7), 1, p), 1);
  EXPECT_EQ(residue_below(PadicRational(9), 2, p), 0);
  // v(x) >= a gives zero; otherwise x - r has valuation >= a
  for (const char* s : {"5/9", "-4", "11/2", "1/27"}) {
    const PadicRational x = q(s);
    const PadicRational r = residue_below(x, 1, p);
    EXPECT_GE(valuation(PadicRational(x - r), p), 1) << s;
  }
}

TEST(ParseRational, AcceptsAndRejects) {
  EXPECT_EQ(q("-3/7"), PadicRational(-3) / 7);
  EXPECT_EQ(q("+12"), 12);
  EXPECT_EQ(q("4/6"), q("2/3"));
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
  EXPECT_THROW(parse_rational("1.5"), InputError);
  EXPECT_EQ(to_string(q("-6/4")), "-3/2");
}

TEST(Matrix, RrefExamples) {
  EXPECT_EQ(rref(RatMatrix::identity(3)).reduced, RatMatrix::identity(3));
  const auto r = rref(RatMatrix::of({{2, 4}, {1, 2}}));
  EXPECT_EQ(r.reduced, RatMatrix::of({{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});
  EXPECT_EQ(rref(RatMatrix::of({{0, 1}, {1, 0}})).reduced, RatMatrix::identity(2));
  EXPECT_EQ(rank(RatMatrix::of({{1, 2, 3}, {2, 4, 6}})), 1u);
}

TEST(Matrix, InverseExamples) {
  EXPECT_EQ(invert(RatMatrix::identity(2)), RatMatrix::identity(2));
  EXPECT_EQ(invert(RatMatrix::of({{1, 1}, {0, 1}})), RatMatrix::of({{1, -1}, {0, 1}}));
  EXPECT_THROW(invert(RatMatrix::of({{1, 1}, {1, 1}})), Singular);
  EXPECT_EQ(determinant(RatMatrix::of({{2, 1, 0}, {0, 1, 0}, {3, 0, 1}})), 2);
}

TEST(Matrix, SolveAndNullspace) {
  const RatMatrix a = RatMatrix::of({{1, 1}, {1, -1}});
  const auto x = solve_linear(a, RatVector{PadicRational(3), PadicRational(1)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], 2);
  EXPECT_EQ((*x)[1], 1);
  EXPECT_FALSE(solve_linear(RatMatrix::of({{1, 1}, {1, 1}}), RatVector{PadicRational(0), PadicRational(1)}));
  const RatMatrix k = nullspace(RatMatrix::of({{1, 1, 0}}));
  EXPECT_EQ(k.rows(), 2u);
  for (std::size_t i = 0; i < k.rows(); ++i) EXPECT_EQ(k(i, 0) + k(i, 1), 0);
}

TEST(Matrix, ShapeErrors) {
  EXPECT_THROW(RatMatrix::of({{1, 2}}) * RatMatrix::of({{1, 2}}), DimensionMismatch);
  EXPECT_THROW(hstack(RatMatrix::of({{1}}), RatMatrix::of({{1}, {2}})), DimensionMismatch);
}

TEST(DvrEchelon, Examples) {
  const Prime p = P(3);
  const DvrEchelon id = dvr_echelon(RatMatrix::identity(2), p);
  EXPECT_EQ(id.matrix, RatMatrix::identity(2));
  EXPECT_EQ(id.exponents, (std::vector<int>{0, 0}));

  // (p, 0) is absorbed by (1, 0)
  EXPECT_EQ(dvr_echelon(RatMatrix::of({{3, 0}, {0, 1}, {1, 0}}), p), id);

  const DvrEchelon e = dvr_echelon(RatMatrix::from_rows({{q("1/3"), PadicRational(1)}}), p);
  ASSERT_EQ(e.rank(), 1u);
  EXPECT_EQ(e.exponents[0], -1);
  EXPECT_EQ(e.pivots[0].second, 0u);
  // same span: each generator lies in the other's span
  EXPECT_TRUE(echelon_contains(e, RatVector{q("1/3"), PadicRational(1)}, p));
  EXPECT_TRUE(echelon_contains(dvr_echelon(RatMatrix::from_rows({{q("1/3"), PadicRational(1)}}), p),
                               e.matrix.row_vector(0), p));
}

TEST(DvrEchelon, UnitRowOperationsDoNotChangeIt) {
  const Prime p = P(5);
  const RatMatrix m = RatMatrix::from_rows({{q("1/5"), q("2"), q("3/25")}, {q("0"), q("5"), q("1")}});
  const RatMatrix u = RatMatrix::from_rows({{q("2"), q("1")}, {q("1/3"), q("1")}});  // det 5/3, not a unit
  const RatMatrix v = RatMatrix::from_rows({{q("2"), q("1")}, {q("1"), q("1")}});    // det 1
  EXPECT_EQ(dvr_echelon(v * m, p), dvr_echelon(m, p));
  EXPECT_NE(dvr_echelon(u * m, p), dvr_echelon(m, p));
}

TEST(DvrEchelon, Membership) {
  const Prime p = P(3);
  const DvrEchelon e = dvr_echelon(RatMatrix::of({{3, 0}, {0, 1}}), p);
  EXPECT_TRUE(echelon_contains(e, RatVector{PadicRational(6), PadicRational(5)}, p));
  EXPECT_FALSE(echelon_contains(e, RatVector{PadicRational(1), PadicRational(0)}, p));
  EXPECT_TRUE(echelon_contains(e, RatVector{PadicRational(3), q("1/2")}, p));
}
