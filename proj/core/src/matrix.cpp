#include "pcoset/matrix.hpp"

#include "pcoset/errors.hpp"

#include <string>
#include <utility>

namespace pcoset {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DimensionMismatch(what);
}

}  // namespace

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  RatMatrix m(0, cols);
  for (const auto& r : rows) {
    require(r.size() == cols, "ragged rows");
    m.append_row(r);
  }
  return m;
}

RatMatrix RatMatrix::of(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  RatMatrix m(rows.size(), cols);
  std::size_t i = 0;
  for (const auto& r : rows) {
    require(r.size() == cols, "ragged rows");
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

RatMatrix RatMatrix::diagonal(const RatVector& d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

void RatMatrix::append_row(std::span<const PadicRational> r) {
  require(r.size() == cols_, "append_row: length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void RatMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

RatMatrix RatMatrix::without_zero_rows() const {
  RatMatrix out(0, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row(i);
    for (const auto& x : r) {
      if (sgn(x) != 0) {
        out.append_row(r);
        break;
      }
    }
  }
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  RatMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void RatMatrix::set_block(std::size_t r0, std::size_t c0, const RatMatrix& m) {
  require(r0 + m.rows() <= rows_ && c0 + m.cols() <= cols_, "set_block out of range");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

RatMatrix RatMatrix::select_rows(std::span<const std::size_t> idx) const {
  RatMatrix out(0, cols_);
  for (std::size_t i : idx) out.append_row(row(i));
  return out;
}

RatMatrix RatMatrix::select_cols(std::span<const std::size_t> idx) const {
  RatMatrix out(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
  return out;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  require(a.cols_ == b.rows_, "matrix product: inner dimensions differ");
  RatMatrix c(a.rows_, b.cols_);
  PadicRational t;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const PadicRational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const PadicRational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        t = aik * bkj;
        c(i, j) += t;
      }
    }
  }
  return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum: shapes differ");
  RatMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference: shapes differ");
  RatMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

RatMatrix operator*(const PadicRational& s, const RatMatrix& a) {
  RatMatrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

RatMatrix operator-(const RatMatrix& a) {
  RatMatrix c = a;
  for (auto& x : c.data_) x = -x;
  return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& x) {
  require(a.cols() == x.size(), "matrix-vector product: length mismatch");
  RatVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(x[j]) != 0) y[i] += a(i, j) * x[j];
  return y;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
  require(a.rows() == b.rows(), "hstack: row counts differ");
  RatMatrix c(a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
  require(a.cols() == b.cols(), "vstack: column counts differ");
  RatMatrix c(a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), a.cols(), b);
  return c;
}

RrefResult rref(RatMatrix m) {
  RrefResult out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  PadicRational t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(m(piv, c)) == 0) ++piv;
    if (piv == rows) continue;
    m.swap_rows(r, piv);
    const PadicRational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const PadicRational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(r, j)) == 0) continue;
        t = f * m(r, j);
        m(i, j) -= t;
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

RatMatrix nullspace(const RatMatrix& m) {
  const auto [red, pivots] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  RatMatrix basis(0, n);
  RatVector v(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    for (auto& x : v) x = 0;
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, f);
    basis.append_row(v);
  }
  return basis;
}

std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b) {
  require(a.rows() == b.size(), "solve_linear: rhs length mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
  const auto [red, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, a.cols());
  return x;
}

RatMatrix invert(const RatMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("invert: matrix is not square");
  const std::size_t n = a.rows();
  const auto [red, pivots] = rref(hstack(a, RatMatrix::identity(n)));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
    throw Singular("invert: matrix is singular");
  }
  return red.block(0, n, n, n);
}

PadicRational determinant(const RatMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant: matrix is not square");
  RatMatrix m = a;
  const std::size_t n = m.rows();
  PadicRational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m(piv, c)) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      m.swap_rows(c, piv);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      const PadicRational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

}  // namespace pcoset
