#include "galoislie/linalg.hpp"

#include <algorithm>

#include "galoislie/error.hpp"

namespace galoislie {

Vector zero_vector(const FieldTower& field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(const FieldTower& field, std::size_t n, std::size_t k) {
  Vector v = zero_vector(field, n);
  v.at(k) = field.one();
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::WrongShape, "vector length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::WrongShape, "vector length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Vector& a, const FieldElement& c) {
  Vector r = a;
  for (auto& x : r) x *= c;
  return r;
}

void axpy(Vector& a, const FieldElement& c, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::WrongShape, "vector length mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += c * b[i];
}

Matrix::Matrix(FieldTower field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

Matrix Matrix::identity(const FieldTower& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_columns(const FieldTower& field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorKind::WrongShape, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const FieldTower& field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::WrongShape, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::WrongShape, "matrix/vector size mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Vector Matrix::flatten() const {
  Vector v;
  v.reserve(data_.size());
  for (std::size_t c = 0; c < cols_; ++c)
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

FieldElement Matrix::trace() const {
  FieldElement t = field_.zero();
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_ || !(a.field_ == b.field_)) throw Error(ErrorKind::WrongShape, "matrix product shape");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const auto& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::WrongShape, "matrix sum shape");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::WrongShape, "matrix difference shape");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const FieldElement& c, const Matrix& a) {
  Matrix out = a;
  for (auto& x : out.data_) x *= c;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Echelon rref(const FieldTower& field, std::vector<Vector> rows, std::size_t ncols) {
  Echelon e;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < ncols && lead_row < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = lead_row; r < rows.size(); ++r)
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[lead_row], rows[pivot]);
    FieldElement inv = rows[lead_row][col].inverse();
    for (auto& x : rows[lead_row]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead_row || rows[r][col].is_zero()) continue;
      FieldElement f = -rows[r][col];
      axpy(rows[r], f, rows[lead_row]);
    }
    e.pivots.push_back(col);
    ++lead_row;
  }
  rows.resize(lead_row);
  e.rows = std::move(rows);
  (void)field;
  return e;
}

std::size_t rank(const Matrix& a) {
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
  return rref(a.field(), std::move(rows), a.cols()).pivots.size();
}

std::size_t rank_of_vectors(const FieldTower& field, const std::vector<Vector>& vectors, std::size_t n) {
  Subspace s(field, n);
  for (const auto& v : vectors) s.add(v);
  return s.dim();
}

std::vector<Vector> nullspace(const Matrix& a) {
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
  Echelon e = rref(a.field(), std::move(rows), a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x = unit_vector(a.field(), a.cols(), f);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::WrongShape, "solve: right-hand side length");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vector row = a.row(r);
    row.push_back(b[r]);
    rows.push_back(std::move(row));
  }
  Echelon e = rref(a.field(), std::move(rows), a.cols() + 1);
  Vector x = zero_vector(a.field(), a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == a.cols()) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][a.cols()];
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::WrongShape, "inverse of non-square matrix");
  std::size_t n = a.rows();
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < n; ++r) {
    Vector row = a.row(r);
    for (std::size_t c = 0; c < n; ++c) row.push_back(r == c ? a.field().one() : a.field().zero());
    rows.push_back(std::move(row));
  }
  Echelon e = rref(a.field(), std::move(rows), 2 * n);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(a.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rows[r][n + c];
  return inv;
}

FieldElement determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::WrongShape, "determinant of non-square matrix");
  std::size_t n = a.rows();
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < n; ++r) rows.push_back(a.row(r));
  FieldElement det = a.field().one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r)
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == n) return a.field().zero();
    if (pivot != col) {
      std::swap(rows[pivot], rows[col]);
      det = -det;
    }
    det *= rows[col][col];
    FieldElement inv = rows[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (rows[r][col].is_zero()) continue;
      axpy(rows[r], -(rows[r][col] * inv), rows[col]);
    }
  }
  return det;
}

std::optional<Matrix> left_inverse(const Matrix& b) {
  const FieldTower& F = b.field();
  const std::size_t n = b.rows(), k = b.cols();
  std::vector<Vector> rows;
  for (std::size_t c = 0; c < k; ++c) rows.push_back(b.column(c));
  Echelon e = rref(F, rows, n);
  if (e.pivots.size() != k) return std::nullopt;
  Matrix sub(F, k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) sub(r, c) = b(e.pivots[r], c);
  auto inv = inverse(sub);
  if (!inv) return std::nullopt;
  Matrix out(F, k, n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < k; ++j) out(r, e.pivots[j]) = (*inv)(r, j);
  return out;
}

Vector Subspace::reduce(Vector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& c = v[pivots_[i]];
    if (!c.is_zero()) axpy(v, -c, rows_[i]);
  }
  return v;
}

bool Subspace::add(const Vector& v) {
  if (v.size() != n_) throw Error(ErrorKind::WrongShape, "subspace vector length");
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < n_ && r[p].is_zero()) ++p;
  if (p == n_) return false;
  FieldElement inv = r[p].inverse();
  for (auto& x : r) x *= inv;
  for (auto& row : rows_)
    if (!row[p].is_zero()) axpy(row, -row[p], r);
  // keep rows sorted by pivot column
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(r));
  pivots_.insert(pivots_.begin() + static_cast<long>(pos), p);
  return true;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

std::optional<Vector> Subspace::coords(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c;
  c.reserve(rows_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

SparseSystem::SparseSystem(FieldTower field, std::size_t unknowns)
    : field_(std::move(field)), n_(unknowns), pivot_rows_(unknowns) {}

namespace {

// a - c * b for sorted sparse rows
SparseRow sparse_axpy(const SparseRow& a, const FieldElement& c, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(c * b[j].second));
      ++j;
    } else {
      FieldElement v = a[i].second - c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void SparseSystem::add_equation(SparseRow row) {
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  // merge duplicate columns
  SparseRow merged;
  for (auto& entry : row) {
    if (entry.first >= n_) throw Error(ErrorKind::IndexRange, "sparse equation column out of range");
    if (!merged.empty() && merged.back().first == entry.first)
      merged.back().second += entry.second;
    else
      merged.push_back(std::move(entry));
  }
  row.clear();
  for (auto& entry : merged)
    if (!entry.second.is_zero()) row.push_back(std::move(entry));

  while (!row.empty()) {
    std::size_t lead = row.front().first;
    const auto& pivot = pivot_rows_[lead];
    if (!pivot) {
      FieldElement inv = row.front().second.inverse();
      for (auto& entry : row) entry.second *= inv;
      pivot_rows_[lead] = std::move(row);
      ++pivot_count_;
      return;
    }
    FieldElement c = row.front().second;
    row = sparse_axpy(row, c, *pivot);
  }
}

std::vector<Vector> SparseSystem::nullspace() const {
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n_; ++f) {
    if (pivot_rows_[f]) continue;
    Vector x = unit_vector(field_, n_, f);
    for (std::size_t c = n_; c-- > 0;) {
      if (!pivot_rows_[c]) continue;
      FieldElement value = field_.zero();
      const auto& row = *pivot_rows_[c];
      for (std::size_t k = 1; k < row.size(); ++k)
        if (!x[row[k].first].is_zero()) value -= row[k].second * x[row[k].first];
      x[c] = std::move(value);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::string to_string(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + "]";
}

std::string to_string(const Matrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += ", ";
    s += to_string(m.row(r));
  }
  return s + "]";
}

}  // namespace galoislie
