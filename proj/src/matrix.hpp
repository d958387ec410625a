// matrix.hpp -- dense exact matrices and the elimination kernel
// (rank, kernel basis, solve, span membership) everything else reduces to.
#ifndef QUIVERHOM_MATRIX_HPP
#define QUIVERHOM_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"

namespace quiverhom {

// Row-major dense matrix over one field context. Values are immutable in
// spirit: operations return fresh matrices; in-place mutation is confined
// to construction sites.
class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows);
  static Matrix column(const Field& f, const std::vector<Scalar>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);

  std::vector<Scalar> col(std::size_t j) const;
  std::vector<Scalar> row(std::size_t i) const;

  Matrix operator*(const Matrix& o) const;
  std::vector<Scalar> operator*(const std::vector<Scalar>& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  Matrix transpose() const;
  // Columns of `o` appended on the right.
  Matrix hstack(const Matrix& o) const;
  // Rows of `o` appended below.
  Matrix vstack(const Matrix& o) const;
  // Writes `block` with its top-left corner at (i, j).
  void place(std::size_t i, std::size_t j, const Matrix& block);

  std::string str() const;  // [[..],[..]] with Scalar::str entries

 private:
  void check_field(const Matrix& o) const;

  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

// Exact Gaussian elimination with deterministic pivoting: scanning columns
// left to right, the pivot is the first row with a nonzero entry. Outputs
// are therefore byte-reproducible across runs.
std::size_t rank(const Matrix& m);

// Columns form a basis of the right null space; column count equals
// cols(m) - rank(m). Free coordinates are taken in ascending column order.
Matrix kernel_basis(const Matrix& m);

// Some exact solution of m x = b, or nullopt when the system is
// inconsistent. Free variables are set to zero.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

// True iff v lies in the column space of `basis`.
bool in_span(const std::vector<Scalar>& v, const Matrix& basis);

}  // namespace quiverhom

#endif
