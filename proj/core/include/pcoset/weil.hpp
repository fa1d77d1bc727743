#pragma once

#include "pcoset/matrix.hpp"

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace pcoset {

using ComplexMatrix = Eigen::MatrixXcd;

/// Functions on p^{-N} O^n / p^N O^n. A point of one coordinate is j p^{-N}
/// with j in [0, p^{2N}); several coordinates are indexed lexicographically,
/// the first coordinate most significant. Each point has mass p^{-N n}.
class FiniteModel {
public:
  /// Throws InputError for p = 2 or N = 0.
  FiniteModel(const Prime& p, int N, int n = 1);

  const Prime& prime() const { return p_; }
  int depth() const { return N_; }
  int coordinates() const { return n_; }
  /// p^{2N}
  std::size_t side() const { return side_; }
  std::size_t dim() const;

  /// The point j p^{-N}.
  PadicRational point(std::size_t j) const;
  /// Index of x modulo p^N O; requires v_p(x) >= -N.
  std::size_t index_of(const PadicRational& x) const;
  bool in_window(const PadicRational& x) const;

private:
  Prime p_;
  int N_;
  int n_;
  std::size_t side_;
};

enum class HeisConvention { as_written, corrected };

/// λ f(x + v+) e(v- x + v+ v- / 2) (corrected) or with phase v+ x (as written).
ComplexMatrix heis_op(const FiniteModel& model, const PadicRational& vplus, const PadicRational& vminus,
                      std::complex<double> lambda = 1.0, HeisConvention convention = HeisConvention::corrected);

/// f(z) -> f(z A); needs v_p(A) = 0.
ComplexMatrix weil_diag(const FiniteModel& model, const PadicRational& a);
/// f(z) -> e(B z^2 / 2) f(z); needs v_p(B) >= 0.
ComplexMatrix weil_upper(const FiniteModel& model, const PadicRational& b);
/// f -> p^{-N} Σ_x f(x) e(x z).
ComplexMatrix weil_fourier(const FiniteModel& model);

struct Sl2Token {
  enum Kind { upper, lower, diag, fourier } kind;
  PadicRational value;  // U(x), L(y), D(a); unused for J
};

/// 2x2 matrix of a token: U(x) = [[1,x],[0,1]], L(y) = [[1,0],[y,1]],
/// D(a) = diag(a, 1/a), J = [[0,1],[-1,0]].
RatMatrix token_matrix(const Sl2Token& t);
std::string to_string(const Sl2Token& t);

/// Factorization of a det-1 matrix whose product reproduces it exactly:
/// U(a/c) D(-1/c) J U(d/c) when c != 0, D(a) U(b/a) when c = 0.
/// Throws InputError if det != 1.
std::vector<Sl2Token> sl2_factor(const RatMatrix& g);
/// As above, but picks a route whose parameters are integral at p when one
/// exists; L(c/a) D(a) U(b/a) covers a unit and c a non-unit.
std::vector<Sl2Token> sl2_factor(const RatMatrix& g, const Prime& p);

/// Operator of one token. Throws WindowViolation if its parameter is outside the window.
ComplexMatrix token_op(const FiniteModel& model, const Sl2Token& t);
/// Product of the token operators along sl2_factor(g).
ComplexMatrix weil_of(const FiniteModel& model, const RatMatrix& g);

/// f(x) -> f(x) I(y) from `src` to the model with one more coordinate.
ComplexMatrix lambda_op(const FiniteModel& src, const FiniteModel& dst);
/// Adjoint of lambda_op for the weighted inner products.
ComplexMatrix lambda_adjoint(const FiniteModel& src, const FiniteModel& dst);
ComplexMatrix theta_op(const FiniteModel& src, const FiniteModel& dst);

/// Max-abs entry of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// Scalar s minimizing the Frobenius norm of a - s b, and that norm.
std::pair<std::complex<double>, double> projective_fit(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace pcoset
