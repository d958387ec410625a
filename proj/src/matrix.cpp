#include "matrix.hpp"

#include <sstream>
#include <utility>

namespace quiverhom {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ShapeError("ragged rows in matrix literal");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::column(const Field& f, const std::vector<Scalar>& entries) {
  Matrix m(f, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
  return data_[i * cols_ + j];
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
  if (v.field() != field_) throw FieldMismatchError("entry from a different field context");
  data_[i * cols_ + j] = v;
}

std::vector<Scalar> Matrix::col(std::size_t j) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  std::vector<Scalar> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(at(i, j));
  return out;
}

void Matrix::check_field(const Matrix& o) const {
  if (field_ != o.field_) throw FieldMismatchError("matrices from different field contexts");
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_field(o);
  if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = data_[i * cols_ + k];
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.data_[k * o.cols_ + j];
        if (b.is_zero()) continue;
        out.data_[i * out.cols_ + j] += a * b;
      }
    }
  }
  return out;
}

std::vector<Scalar> Matrix::operator*(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw ShapeError("matrix-vector shape mismatch");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!data_[i * cols_ + j].is_zero() && !v[j].is_zero())
        out[i] += data_[i * cols_ + j] * v[j];
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  check_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

Matrix Matrix::hstack(const Matrix& o) const {
  check_field(o);
  if (rows_ != o.rows_) throw ShapeError("hstack row mismatch");
  Matrix out(field_, rows_, cols_ + o.cols_);
  out.place(0, 0, *this);
  out.place(0, cols_, o);
  return out;
}

Matrix Matrix::vstack(const Matrix& o) const {
  check_field(o);
  if (cols_ != o.cols_) throw ShapeError("vstack column mismatch");
  Matrix out(field_, rows_ + o.rows_, cols_);
  out.place(0, 0, *this);
  out.place(rows_, 0, o);
  return out;
}

void Matrix::place(std::size_t i, std::size_t j, const Matrix& block) {
  check_field(block);
  if (i + block.rows_ > rows_ || j + block.cols_ > cols_)
    throw ShapeError("block placement out of range");
  for (std::size_t r = 0; r < block.rows_; ++r)
    for (std::size_t c = 0; c < block.cols_; ++c)
      data_[(i + r) * cols_ + (j + c)] = block.data_[r * block.cols_ + c];
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ",";
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << at(i, j).str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

struct Echelon {
  Matrix m;                        // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column per pivot row
};

// Gauss-Jordan with the deterministic first-nonzero pivot rule.
Echelon reduced_echelon(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;  // next pivot row
  for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
    std::size_t sel = m.rows();
    for (std::size_t r = pr; r < m.rows(); ++r) {
      if (!m.at(r, c).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel == m.rows()) continue;
    if (sel != pr) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Scalar tmp = m.at(pr, j);
        m.set(pr, j, m.at(sel, j));
        m.set(sel, j, tmp);
      }
    }
    Scalar inv = m.at(pr, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m.at(pr, j).is_zero()) m.set(pr, j, m.at(pr, j) * inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pr) continue;
      const Scalar& factor = m.at(r, c);
      if (factor.is_zero()) continue;
      Scalar fcopy = factor;
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m.at(pr, j).is_zero()) continue;
        m.set(r, j, m.at(r, j) - fcopy * m.at(pr, j));
      }
    }
    pivots.push_back(c);
    ++pr;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

}  // namespace

std::size_t rank(const Matrix& m) { return reduced_echelon(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  const Field f = m.field();
  Echelon e = reduced_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(f, m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis.set(fc, k, Scalar::one(f));
    for (std::size_t pi = 0; pi < e.pivots.size(); ++pi)
      basis.set(e.pivots[pi], k, -e.m.at(pi, fc));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
  if (b.size() != m.rows()) throw ShapeError("solve: rhs height mismatch");
  const Field f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  aug.place(0, 0, m);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].field() != f) throw FieldMismatchError("rhs from a different field context");
    aug.set(i, m.cols(), b[i]);
  }
  Echelon e = reduced_echelon(std::move(aug));
  // A pivot in the appended column means the system is inconsistent.
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols(), Scalar::zero(f));
  for (std::size_t pi = 0; pi < e.pivots.size(); ++pi)
    x[e.pivots[pi]] = e.m.at(pi, m.cols());
  return x;
}

bool in_span(const std::vector<Scalar>& v, const Matrix& basis) {
  if (v.size() != basis.rows()) throw ShapeError("in_span: height mismatch");
  return solve(basis, v).has_value();
}

}  // namespace quiverhom
