#ifndef GALOISLIE_LINALG_HPP
#define GALOISLIE_LINALG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galoislie/field.hpp"

namespace galoislie {

using Vector = std::vector<FieldElement>;

Vector zero_vector(const FieldTower& field, std::size_t n);
Vector unit_vector(const FieldTower& field, std::size_t n, std::size_t k);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Vector& a, const FieldElement& c);
/// a += c * b
void axpy(Vector& a, const FieldElement& c, const Vector& b);

/// Dense row-major matrix over one tower level.
class Matrix {
 public:
  Matrix(FieldTower field, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldTower& field, std::size_t n);
  static Matrix from_columns(const FieldTower& field, std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_rows(const FieldTower& field, std::size_t cols, const std::vector<Vector>& rows);

  const FieldTower& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;
  /// Concatenation of the columns (column-major flattening).
  Vector flatten() const;
  FieldElement trace() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const FieldElement& c, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldTower field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

/// Reduced row echelon form. Pivots are taken on the first nonzero entry of
/// each column, searching rows from the lowest index.
struct Echelon {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
};
Echelon rref(const FieldTower& field, std::vector<Vector> rows, std::size_t ncols);

std::size_t rank(const Matrix& a);
std::size_t rank_of_vectors(const FieldTower& field, const std::vector<Vector>& vectors, std::size_t n);
/// Basis of {x : a x = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& a);
std::optional<Vector> solve(const Matrix& a, const Vector& b);
std::optional<Matrix> inverse(const Matrix& a);
FieldElement determinant(const Matrix& a);
/// For a matrix with independent columns, a matrix L with L * b = I that
/// reads coordinates of vectors in the column span off a set of pivot rows.
/// nullopt when the columns are dependent.
std::optional<Matrix> left_inverse(const Matrix& b);

/// Incrementally maintained RREF basis of a subspace of F^n.
class Subspace {
 public:
  Subspace(FieldTower field, std::size_t n) : field_(std::move(field)), n_(n) {}

  /// Adds v to the span; returns true when it was independent.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  /// Coordinates of v in basis() or nullopt when v is outside the span.
  std::optional<Vector> coords(const Vector& v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const FieldTower& field() const { return field_; }

 private:
  Vector reduce(Vector v) const;
  FieldTower field_;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

using SparseRow = std::vector<std::pair<std::size_t, FieldElement>>;

/// Homogeneous linear system collected one sparse equation at a time.
/// Keeps rows in (non-reduced) echelon form keyed by leading column.
class SparseSystem {
 public:
  SparseSystem(FieldTower field, std::size_t unknowns);
  void add_equation(SparseRow row);
  std::size_t rank() const { return pivot_count_; }
  std::size_t unknowns() const { return n_; }
  /// Solution basis, one vector per free unknown in increasing order.
  std::vector<Vector> nullspace() const;

 private:
  FieldTower field_;
  std::size_t n_;
  std::vector<std::optional<SparseRow>> pivot_rows_;  // indexed by leading column
  std::size_t pivot_count_ = 0;
};

std::string to_string(const Vector& v);
std::string to_string(const Matrix& m);

}  // namespace galoislie

#endif
