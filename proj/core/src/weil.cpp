#include "pcoset/weil.hpp"

#include "pcoset/errors.hpp"

namespace pcoset {

FiniteModel::FiniteModel(const Prime& p, int N, int n) : p_(p), N_(N), n_(n), side_(1) {
  if (p.value() == 2) throw InputError("finite model: p must be odd");
  if (N <= 0 || n <= 0) throw InputError("finite model: depth and coordinate count must be positive");
  for (int i = 0; i < 2 * N; ++i) side_ *= p.value();
}

std::size_t FiniteModel::dim() const {
  std::size_t d = 1;
  for (int i = 0; i < n_; ++i) d *= side_;
  return d;
}

PadicRational FiniteModel::point(std::size_t j) const {
  return PadicRational(mpz_class(static_cast<unsigned long>(j))) * prime_power(p_, -N_);
}

bool FiniteModel::in_window(const PadicRational& x) const { return valuation(x, p_) >= -N_; }

std::size_t FiniteModel::index_of(const PadicRational& x) const {
  if (!in_window(x)) throw WindowViolation("finite model: " + to_string(x) + " lies outside p^{-N} O");
  const PadicRational y = x * prime_power(p_, N_);
  const mpz_class mod(static_cast<unsigned long>(side_));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), y.get_den().get_mpz_t(), mod.get_mpz_t());
  mpz_class r = (y.get_num() * inv) % mod;
  if (r < 0) r += mod;
  return r.get_ui();
}

namespace {

void require_single(const FiniteModel& m, const char* what) {
  if (m.coordinates() != 1) throw InputError(std::string(what) + ": model must have one coordinate");
}

}  // namespace

ComplexMatrix heis_op(const FiniteModel& model, const PadicRational& vplus, const PadicRational& vminus,
                      std::complex<double> lambda, HeisConvention convention) {
  require_single(model, "heis_op");
  if (!model.in_window(vplus) || !model.in_window(vminus)) throw WindowViolation("heis_op: vector outside window");
  const Prime& p = model.prime();
  const std::size_t n = model.side();
  const PadicRational centre = vplus * vminus / 2;
  const PadicRational& slope = convention == HeisConvention::corrected ? vminus : vplus;
  const std::size_t shift = model.index_of(vplus);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const PadicRational x = model.point(j);
    m(j, (j + shift) % n) = lambda * char_value(slope * x + centre, p);
  }
  return m;
}

ComplexMatrix weil_diag(const FiniteModel& model, const PadicRational& a) {
  require_single(model, "weil_diag");
  if (sgn(a) == 0 || valuation(a, model.prime()) != 0) throw WindowViolation("weil_diag: A must be a unit");
  const std::size_t n = model.side();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (std::size_t j = 0; j < n; ++j) m(j, model.index_of(model.point(j) * a)) = 1.0;
  return m;
}

ComplexMatrix weil_upper(const FiniteModel& model, const PadicRational& b) {
  require_single(model, "weil_upper");
  if (valuation(b, model.prime()) < 0) throw WindowViolation("weil_upper: B must be integral");
  const std::size_t n = model.side();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const PadicRational z = model.point(j);
    m(j, j) = char_value(b * z * z / 2, model.prime());
  }
  return m;
}

ComplexMatrix weil_fourier(const FiniteModel& model) {
  require_single(model, "weil_fourier");
  const std::size_t n = model.side();
  const double mass = prime_power(model.prime(), -model.depth()).get_d();
  ComplexMatrix m(n, n);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x < n; ++x) m(z, x) = mass * char_value(model.point(x) * model.point(z), model.prime());
  return m;
}

RatMatrix token_matrix(const Sl2Token& t) {
  switch (t.kind) {
    case Sl2Token::upper: {
      RatMatrix m = RatMatrix::identity(2);
      m(0, 1) = t.value;
      return m;
    }
    case Sl2Token::lower: {
      RatMatrix m = RatMatrix::identity(2);
      m(1, 0) = t.value;
      return m;
    }
    case Sl2Token::diag: {
      RatMatrix m(2, 2);
      m(0, 0) = t.value;
      m(1, 1) = 1 / t.value;
      return m;
    }
    case Sl2Token::fourier: return RatMatrix::of({{0, 1}, {-1, 0}});
  }
  return RatMatrix::identity(2);
}

std::string to_string(const Sl2Token& t) {
  switch (t.kind) {
    case Sl2Token::upper: return "U(" + to_string(t.value) + ")";
    case Sl2Token::lower: return "L(" + to_string(t.value) + ")";
    case Sl2Token::diag: return "D(" + to_string(t.value) + ")";
    case Sl2Token::fourier: return "J";
  }
  return "?";
}

namespace {

enum class Route { upper_diag, through_j, lower_first };

std::vector<Sl2Token> factor_by(const RatMatrix& g, Route route) {
  const PadicRational &a = g(0, 0), &b = g(0, 1), &c = g(1, 0), &d = g(1, 1);
  std::vector<Sl2Token> raw;
  switch (route) {
    case Route::upper_diag: raw = {{Sl2Token::diag, a}, {Sl2Token::upper, b / a}}; break;
    case Route::through_j:
      raw = {{Sl2Token::upper, a / c}, {Sl2Token::diag, -1 / c}, {Sl2Token::fourier, 0}, {Sl2Token::upper, d / c}};
      break;
    case Route::lower_first: raw = {{Sl2Token::lower, c / a}, {Sl2Token::diag, a}, {Sl2Token::upper, b / a}}; break;
  }
  std::vector<Sl2Token> out;
  for (auto& t : raw) {
    const bool trivial = (t.kind == Sl2Token::diag && t.value == 1) ||
                         ((t.kind == Sl2Token::upper || t.kind == Sl2Token::lower) && sgn(t.value) == 0);
    if (!trivial) out.push_back(t);
  }
  RatMatrix prod = RatMatrix::identity(2);
  for (const auto& t : out) prod = prod * token_matrix(t);
  if (prod != g) throw InternalConsistencyError("sl2_factor: product does not reproduce the input");
  return out;
}

void require_sl2(const RatMatrix& g) {
  if (g.rows() != 2 || g.cols() != 2) throw DimensionMismatch("sl2_factor: expected a 2x2 matrix");
  if (determinant(g) != 1) throw InputError("sl2_factor: determinant is not 1");
}

}  // namespace

std::vector<Sl2Token> sl2_factor(const RatMatrix& g) {
  require_sl2(g);
  return factor_by(g, sgn(g(1, 0)) == 0 ? Route::upper_diag : Route::through_j);
}

std::vector<Sl2Token> sl2_factor(const RatMatrix& g, const Prime& p) {
  require_sl2(g);
  if (sgn(g(1, 0)) == 0) return factor_by(g, Route::upper_diag);
  if (valuation(g(1, 0), p) == 0) return factor_by(g, Route::through_j);
  if (sgn(g(0, 0)) != 0 && valuation(g(0, 0), p) == 0) return factor_by(g, Route::lower_first);
  return factor_by(g, Route::through_j);
}

namespace {

ComplexMatrix token_op_with(const FiniteModel& model, const Sl2Token& t, const ComplexMatrix& f) {
  switch (t.kind) {
    case Sl2Token::diag: return weil_diag(model, 1 / t.value);
    case Sl2Token::lower: return weil_upper(model, -t.value);
    case Sl2Token::fourier: return f;
    case Sl2Token::upper: return f.adjoint() * weil_upper(model, t.value) * f;
  }
  return ComplexMatrix::Identity(model.side(), model.side());
}

}  // namespace

ComplexMatrix token_op(const FiniteModel& model, const Sl2Token& t) {
  return token_op_with(model, t, weil_fourier(model));
}

ComplexMatrix weil_of(const FiniteModel& model, const RatMatrix& g) {
  require_single(model, "weil_of");
  const ComplexMatrix f = weil_fourier(model);
  ComplexMatrix w = ComplexMatrix::Identity(model.side(), model.side());
  for (const auto& t : sl2_factor(g, model.prime())) w = w * token_op_with(model, t, f);
  return w;
}

ComplexMatrix lambda_op(const FiniteModel& src, const FiniteModel& dst) {
  if (!(src.prime() == dst.prime()) || src.depth() != dst.depth() || dst.coordinates() != src.coordinates() + 1) {
    throw InputError("lambda_op: target model must add one coordinate to the source");
  }
  const std::size_t side = src.side();
  ComplexMatrix m = ComplexMatrix::Zero(dst.dim(), src.dim());
  for (std::size_t x = 0; x < src.dim(); ++x)
    for (std::size_t y = 0; y < side; ++y)
      if (valuation(src.point(y), src.prime()) >= 0) m(x * side + y, x) = 1.0;
  return m;
}

ComplexMatrix lambda_adjoint(const FiniteModel& src, const FiniteModel& dst) {
  // Weighted adjoint: the target has point mass p^{-N} times that of the source.
  const double ratio = prime_power(src.prime(), -src.depth()).get_d();
  return ratio * lambda_op(src, dst).adjoint();
}

ComplexMatrix theta_op(const FiniteModel& src, const FiniteModel& dst) {
  return lambda_op(src, dst) * lambda_adjoint(src, dst);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

std::pair<std::complex<double>, double> projective_fit(const ComplexMatrix& a, const ComplexMatrix& b) {
  const double bb = b.squaredNorm();
  const std::complex<double> s = bb == 0.0 ? std::complex<double>(0.0) : (b.adjoint() * a).trace() / bb;
  return {s, (a - s * b).norm()};
}

}  // namespace pcoset
