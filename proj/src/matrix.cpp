#include "tsrforge/matrix.hpp"

#include <algorithm>

#include "tsrforge/numbers.hpp"

namespace tsrforge {

namespace {
using u64 = std::uint64_t;

void require_same_ctx(const Matrix& a, const Matrix& b) {
  if (!same_field(a.ctx(), b.ctx())) fail(Err::CtxMismatch, "matrices over different fields");
}
}  // namespace

Matrix::Matrix(const FieldCtx& ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), e_(rows * cols, ctx.zero()) {
  if (rows == 0 || cols == 0) fail(Err::DimMismatch, "matrix dimensions must be positive");
}

Matrix Matrix::identity(const FieldCtx& ctx, std::size_t n) {
  Matrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, ctx.one());
  return m;
}

Matrix Matrix::zero(const FieldCtx& ctx, std::size_t rows, std::size_t cols) {
  return Matrix(ctx, rows, cols);
}

Matrix Matrix::from_rows(const FieldCtx& ctx,
                         const std::vector<std::vector<FieldElem>>& rows) {
  if (rows.empty() || rows[0].empty()) fail(Err::DimMismatch, "empty matrix");
  Matrix m(ctx, rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) fail(Err::DimMismatch, "ragged rows");
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_ints(const FieldCtx& ctx,
                         const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty() || rows[0].empty()) fail(Err::DimMismatch, "empty matrix");
  Matrix m(ctx, rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) fail(Err::DimMismatch, "ragged rows");
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m.set(r, c, ctx.from_integer(rows[r][c]));
  }
  return m;
}

const FieldElem& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) fail(Err::DimMismatch, "matrix index out of range");
  return e_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, const FieldElem& v) {
  if (r >= rows_ || c >= cols_) fail(Err::DimMismatch, "matrix index out of range");
  if (!same_field(v.ctx(), ctx_)) fail(Err::CtxMismatch, "entry from another field");
  e_[r * cols_ + c] = v;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_ctx(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Err::DimMismatch, "shape mismatch in sum");
  Matrix m = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_ctx(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Err::DimMismatch, "shape mismatch in difference");
  Matrix m = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_ctx(*this, o);
  if (cols_ != o.rows_) fail(Err::DimMismatch, "shape mismatch in product");
  Matrix m(ctx_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElem& aik = e_[i * cols_ + k];
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        m.e_[i * o.cols_ + j] = m.e_[i * o.cols_ + j] + aik * o.e_[k * o.cols_ + j];
    }
  return m;
}

Matrix Matrix::operator*(const FieldElem& s) const {
  Matrix m = *this;
  for (auto& v : m.e_) v = v * s;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(ctx_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.set(c, r, at(r, c));
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  if (!same_field(ctx_, o.ctx_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!(e_[i] == o.e_[i])) return false;
  return true;
}

std::vector<FieldElem> mat_vec(const Matrix& m, const std::vector<FieldElem>& v) {
  if (v.size() != m.cols()) fail(Err::DimMismatch, "vector length mismatch");
  std::vector<FieldElem> out(m.rows(), m.ctx().zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] = out[i] + m.at(i, j) * v[j];
  return out;
}

FieldElem det(const Matrix& a) {
  if (a.rows() != a.cols()) fail(Err::NotSquare, "determinant needs a square matrix");
  std::size_t n = a.rows();
  Matrix w = a;
  const FieldCtx& ctx = a.ctx();
  bool negate = false;
  FieldElem acc = ctx.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && w.at(piv, col).is_zero()) ++piv;
    if (piv == n) return ctx.zero();
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) {
        FieldElem tmp = w.at(piv, c);
        w.set(piv, c, w.at(col, c));
        w.set(col, c, tmp);
      }
      negate = !negate;
    }
    FieldElem inv = w.at(col, col).inv();
    acc = acc * w.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (w.at(r, col).is_zero()) continue;
      FieldElem f = w.at(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) w.set(r, c, w.at(r, c) - f * w.at(col, c));
    }
  }
  return negate ? -acc : acc;
}

bool is_invertible(const Matrix& a) { return !det(a).is_zero(); }

Poly char_poly(const Matrix& a) {
  if (a.rows() != a.cols()) fail(Err::NotSquare, "characteristic polynomial needs a square matrix");
  std::size_t n = a.rows();
  const FieldCtx& ctx = a.ctx();
  Matrix h = a;
  // similarity reduction to upper Hessenberg with pivot search
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h.at(piv, j).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) {
        FieldElem tmp = h.at(piv, c);
        h.set(piv, c, h.at(j + 1, c));
        h.set(j + 1, c, tmp);
      }
      for (std::size_t r = 0; r < n; ++r) {
        FieldElem tmp = h.at(r, piv);
        h.set(r, piv, h.at(r, j + 1));
        h.set(r, j + 1, tmp);
      }
    }
    FieldElem inv = h.at(j + 1, j).inv();
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h.at(i, j).is_zero()) continue;
      FieldElem f = h.at(i, j) * inv;
      for (std::size_t c = 0; c < n; ++c) h.set(i, c, h.at(i, c) - f * h.at(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) h.set(r, j + 1, h.at(r, j + 1) + f * h.at(r, i));
    }
  }
  // leading-minor recurrence for Hessenberg matrices
  std::vector<Poly> p;
  p.reserve(n + 1);
  p.push_back(Poly(ctx, {ctx.one()}));
  Poly x = Poly::x(ctx);
  for (std::size_t k = 1; k <= n; ++k) {
    Poly pk = (x - Poly::constant(h.at(k - 1, k - 1))) * p[k - 1];
    FieldElem prod = ctx.one();
    for (std::size_t i = 1; i < k; ++i) {
      prod = prod * h.at(k - i, k - i - 1);
      if (prod.is_zero()) break;
      FieldElem coef = h.at(k - 1 - i, k - 1) * prod;
      if (!coef.is_zero()) pk = pk - p[k - 1 - i] * coef;
    }
    p.push_back(std::move(pk));
  }
  return p[n];
}

Matrix companion(const Poly& f) {
  if (!f.is_monic()) fail(Err::NotMonic, "companion matrix requires a monic polynomial");
  if (f.degree() < 1) fail(Err::ConstantPolynomial, "companion matrix needs degree >= 1");
  std::size_t d = static_cast<std::size_t>(f.degree());
  Matrix m(f.ctx(), d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) m.set(i + 1, i, f.ctx().one());
  for (std::size_t i = 0; i < d; ++i) m.set(i, d - 1, -f.coeff(i));
  return m;
}

u64 gl_order(std::size_t m, u64 q) {
  if (m < 1) fail(Err::DomainBound, "matrix size must be >= 1");
  if (!prime_power_decompose(q)) fail(Err::DomainBound, "q must be a prime power");
  u64 qm = checked_pow(q, m);
  u64 acc = 1;
  u64 qi = 1;
  for (std::size_t i = 0; i < m; ++i) {
    acc = checked_mul(acc, qm - qi);
    qi = checked_mul(qi, q);
  }
  return acc;
}

void for_each_gl(std::size_t m, const FieldCtx& ctx,
                 const std::function<void(const Matrix&)>& fn, u64 ceiling) {
  u64 q = ctx.cardinality();
  if (gl_order(m, q) > ceiling)
    fail(Err::CeilingExceeded, "general linear group too large to enumerate");
  u64 total = checked_pow(q, m * m);
  Matrix w(ctx, m, m);
  for (u64 idx = 0; idx < total; ++idx) {
    u64 rest = idx;
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        w.set(r, c, ctx.element_at(rest % q));
        rest /= q;
      }
    if (is_invertible(w)) fn(w);
  }
}

std::vector<Matrix> enumerate_gl(std::size_t m, const FieldCtx& ctx, u64 ceiling) {
  std::vector<Matrix> out;
  for_each_gl(m, ctx, [&](const Matrix& a) { out.push_back(a); }, ceiling);
  return out;
}

}  // namespace tsrforge
