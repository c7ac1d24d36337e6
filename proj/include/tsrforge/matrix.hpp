#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tsrforge/poly.hpp"

namespace tsrforge {

/// Dense row-major matrix over a FieldCtx.
class Matrix {
 public:
  Matrix(const FieldCtx& ctx, std::size_t rows, std::size_t cols);  // zero-filled
  static Matrix identity(const FieldCtx& ctx, std::size_t n);
  static Matrix zero(const FieldCtx& ctx, std::size_t rows, std::size_t cols);
  static Matrix from_rows(const FieldCtx& ctx,
                          const std::vector<std::vector<FieldElem>>& rows);
  static Matrix from_ints(const FieldCtx& ctx,
                          const std::vector<std::vector<std::int64_t>>& rows);

  const FieldCtx& ctx() const noexcept { return ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldElem& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const FieldElem& v);

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const FieldElem& s) const;
  Matrix transpose() const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  FieldCtx ctx_;
  std::size_t rows_, cols_;
  std::vector<FieldElem> e_;
};

std::vector<FieldElem> mat_vec(const Matrix& m, const std::vector<FieldElem>& v);

FieldElem det(const Matrix& a);
bool is_invertible(const Matrix& a);

/// Characteristic polynomial det(X*I - a): Hessenberg reduction with nonzero
/// pivot search, then the Hessenberg leading-minor recurrence.
Poly char_poly(const Matrix& a);

/// Companion matrix of a monic f: ones on the subdiagonal, last column -f_i.
Matrix companion(const Poly& f);

/// |GL_m(GF(q))| = prod_{i=0}^{m-1} (q^m - q^i).
std::uint64_t gl_order(std::size_t m, std::uint64_t q);

/// All invertible m x m matrices in enumeration order (entry (0,0) counts
/// fastest). Requires gl_order(m, q) <= ceiling.
void for_each_gl(std::size_t m, const FieldCtx& ctx,
                 const std::function<void(const Matrix&)>& fn,
                 std::uint64_t ceiling = kDefaultCeiling);
std::vector<Matrix> enumerate_gl(std::size_t m, const FieldCtx& ctx,
                                 std::uint64_t ceiling = kDefaultCeiling);

}  // namespace tsrforge
