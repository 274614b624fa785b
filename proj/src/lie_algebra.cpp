#include "galoislie/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "galoislie/error.hpp"

namespace galoislie {

namespace {

void accumulate(Vector& acc, const FieldElement& c, const SparseRow& row) {
  if (c.is_zero()) return;
  for (const auto& [k, v] : row) acc[k] += c * v;
}

}  // namespace

LieAlgebra::LieAlgebra(FieldTower field, std::size_t dim, const std::vector<StructureConstant>& constants,
                       std::vector<std::string> labels)
    : field_(std::move(field)), dim_(dim), labels_(std::move(labels)) {
  if (dim_ == 0) throw Error(ErrorKind::IndexRange, "dimension must be positive");
  if (labels_.empty())
    for (std::size_t k = 0; k < dim_; ++k) labels_.push_back("e" + std::to_string(k + 1));
  if (labels_.size() != dim_) throw Error(ErrorKind::WrongShape, "label count differs from dimension");

  std::vector<std::map<std::size_t, FieldElement>> acc(dim_ * (dim_ - 1) / 2);
  for (const auto& c : constants) {
    if (c.i >= dim_ || c.j >= dim_ || c.k >= dim_ || c.i == c.j)
      throw Error(ErrorKind::IndexRange, "structure constant index out of range (" + std::to_string(c.i + 1) + "," +
                                             std::to_string(c.j + 1) + "," + std::to_string(c.k + 1) + ")");
    if (!(c.value.field() == field_)) throw Error(ErrorKind::FieldMismatch, "structure constant from another field");
    std::size_t i = c.i, j = c.j;
    FieldElement v = c.value;
    if (i > j) {
      std::swap(i, j);
      v = -v;
    }
    auto& slot = acc[pair_index(i, j)];
    auto it = slot.find(c.k);
    if (it == slot.end())
      slot.emplace(c.k, v);
    else
      it->second += v;
  }
  table_.resize(acc.size());
  for (std::size_t p = 0; p < acc.size(); ++p)
    for (auto& [k, v] : acc[p])
      if (!v.is_zero()) table_[p].emplace_back(k, v);
  check_jacobi();
}

void LieAlgebra::check_jacobi() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k) {
        Vector acc = zero_vector();
        // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
        auto term = [&](std::size_t a, std::size_t b, std::size_t c) {
          for (const auto& [m, v] : bracket_row(std::min(a, b), std::max(a, b))) {
            FieldElement s = a < b ? v : -v;
            if (m == c) continue;
            const SparseRow& r = bracket_row(std::min(m, c), std::max(m, c));
            accumulate(acc, m < c ? s : -s, r);
          }
        };
        term(i, j, k);
        term(j, k, i);
        term(k, i, j);
        if (!is_zero(acc))
          throw Error(ErrorKind::JacobiFailure, "Jacobi identity fails on (" + labels_[i] + "," + labels_[j] + "," +
                                                    labels_[k] + "): sum = " + format(acc));
      }
}

FieldElement LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw Error(ErrorKind::IndexRange, "index out of range");
  if (i == j) return field_.zero();
  const SparseRow& row = bracket_row(std::min(i, j), std::max(i, j));
  for (const auto& [m, v] : row)
    if (m == k) return i < j ? v : -v;
  return field_.zero();
}

std::vector<StructureConstant> LieAlgebra::constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (const auto& [k, v] : bracket_row(i, j)) out.push_back({i, j, k, v});
  return out;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector v = zero_vector();
  if (i == j) return v;
  accumulate(v, i < j ? field_.one() : -field_.one(), bracket_row(std::min(i, j), std::max(i, j)));
  return v;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorKind::OwnerMismatch, "vector does not belong to algebra");
  Vector out = zero_vector();
  std::vector<std::size_t> nx, ny;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!x[i].is_zero()) nx.push_back(i);
    if (!y[i].is_zero()) ny.push_back(i);
  }
  for (auto i : nx)
    for (auto j : ny) {
      if (i == j) continue;
      FieldElement c = x[i] * y[j];
      accumulate(out, i < j ? c : -c, bracket_row(std::min(i, j), std::max(i, j)));
    }
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim_; ++j) cols.push_back(bracket(x, basis_vector(j)));
  return Matrix::from_columns(field_, dim_, cols);
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(table_.begin(), table_.end(), [](const SparseRow& r) { return r.empty(); });
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  if (!(a.field_ == b.field_) || a.dim_ != b.dim_) return false;
  for (std::size_t p = 0; p < a.table_.size(); ++p) {
    const auto& x = a.table_[p];
    const auto& y = b.table_[p];
    if (x.size() != y.size()) return false;
    for (std::size_t t = 0; t < x.size(); ++t)
      if (x[t].first != y[t].first || !(x[t].second == y[t].second)) return false;
  }
  return true;
}

std::string LieAlgebra::format(const Vector& v) const {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    bool neg = v[k].is_rational() && v[k].to_rational().sign() < 0;
    std::string cs = (neg ? -v[k] : v[k]).to_string();
    bool compound = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos || cs[0] == '-';
    if (!out.empty())
      out += neg ? " - " : " + ";
    else if (neg)
      out += "-";
    if (cs != "1") out += (compound ? "(" + cs + ")" : cs) + "*";
    out += labels_[k];
  }
  return out.empty() ? "0" : out;
}

std::string LieAlgebra::bracket_table() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (!bracket_row(i, j).empty())
        os << "[" << labels_[i] << "," << labels_[j] << "] = " << format(bracket_basis(i, j)) << "\n";
  return os.str();
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) { return direct_sum(std::vector<LieAlgebra>{a, b}); }

LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts) {
  if (parts.empty()) throw Error(ErrorKind::IndexRange, "empty direct sum");
  const FieldTower& F = parts.front().field();
  std::vector<StructureConstant> cs;
  std::vector<std::string> labels;
  std::size_t offset = 0;
  bool relabel = parts.size() > 1;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& L = parts[p];
    if (!(L.field() == F)) throw Error(ErrorKind::FieldMismatch, "direct sum of algebras over different fields");
    for (const auto& c : L.constants()) cs.push_back({c.i + offset, c.j + offset, c.k + offset, c.value});
    for (const auto& l : L.labels()) labels.push_back(relabel ? l + "_" + std::to_string(p + 1) : l);
    offset += L.dim();
  }
  return LieAlgebra(F, offset, cs, labels);
}

std::vector<Vector> bracket_span(const LieAlgebra& L, const std::vector<Vector>& a, const std::vector<Vector>& b) {
  Subspace s(L.field(), L.dim());
  for (const auto& x : a)
    for (const auto& y : b) {
      s.add(L.bracket(x, y));
      if (s.dim() == L.dim()) return s.basis();
    }
  return s.basis();
}

std::vector<Vector> center(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  SparseSystem sys(L.field(), n);
  // sum_i x_i c_ij^k = 0 for all j, k
  std::vector<std::vector<SparseRow>> eqs(n, std::vector<SparseRow>(n));
  for (const auto& c : L.constants()) {
    eqs[c.j][c.k].emplace_back(c.i, c.value);
    eqs[c.i][c.k].emplace_back(c.j, -c.value);
  }
  for (auto& row : eqs)
    for (auto& e : row)
      if (!e.empty()) sys.add_equation(std::move(e));
  return sys.nullspace();
}

Fingerprint fingerprint(const LieAlgebra& L) {
  Fingerprint f;
  const std::size_t n = L.dim();
  f.dim = n;
  std::vector<Vector> all;
  for (std::size_t k = 0; k < n; ++k) all.push_back(L.basis_vector(k));

  std::vector<Vector> cur = all;
  f.lower_central.push_back(n);
  for (;;) {
    auto next = bracket_span(L, all, cur);
    if (next.size() == cur.size()) break;
    f.lower_central.push_back(next.size());
    cur = std::move(next);
    if (cur.empty()) break;
  }
  cur = all;
  f.derived.push_back(n);
  for (;;) {
    auto next = bracket_span(L, cur, cur);
    if (next.size() == cur.size()) break;
    f.derived.push_back(next.size());
    cur = std::move(next);
    if (cur.empty()) break;
  }
  f.center_dim = center(L).size();
  f.commutator_dim = f.lower_central.size() > 1 ? f.lower_central[1] : n;
  if (f.lower_central.back() == 0) f.nilpotency_class = f.lower_central.size() - 1;
  f.solvable = f.derived.back() == 0;
  if (f.solvable) f.derived_length = f.derived.size() - 1;
  if (f.nilpotency_class && *f.nilpotency_class <= 2)
    f.two_step_type = std::make_pair(n - f.commutator_dim, f.commutator_dim);
  return f;
}

std::string to_string(const Fingerprint& f) {
  auto seq = [](const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  std::ostringstream os;
  os << "dim " << f.dim << "\n";
  os << "lower central series " << seq(f.lower_central) << "\n";
  os << "derived series " << seq(f.derived) << "\n";
  os << "center dim " << f.center_dim << "\n";
  os << "commutator dim " << f.commutator_dim << "\n";
  os << "nilpotency class " << (f.nilpotency_class ? std::to_string(*f.nilpotency_class) : "none") << "\n";
  os << "solvable " << (f.solvable ? "yes" : "no") << "\n";
  if (f.derived_length) os << "derived length " << *f.derived_length << "\n";
  if (f.two_step_type) os << "type (" << f.two_step_type->first << "," << f.two_step_type->second << ")\n";
  return os.str();
}

MorphismCheck verify_morphism(const LieAlgebra& source, const LieAlgebra& target, const Matrix& m) {
  MorphismCheck r;
  if (!(source.field() == target.field()) || !(m.field() == source.field()) || m.rows() != target.dim() ||
      m.cols() != source.dim())
    return r;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < source.dim(); ++i) images.push_back(m.column(i));
  r.homomorphism = true;
  for (std::size_t i = 0; i < source.dim() && r.homomorphism; ++i)
    for (std::size_t j = i + 1; j < source.dim(); ++j) {
      Vector lhs = m.apply(source.bracket_basis(i, j));
      Vector rhs = target.bracket(images[i], images[j]);
      if (lhs != rhs) {
        r.homomorphism = false;
        break;
      }
    }
  r.bijective = source.dim() == target.dim() && rank(m) == source.dim();
  return r;
}

bool verify_sigma_isomorphism(const LieAlgebra& source, const LieAlgebra& target, const SemiLinearMap& phi) {
  const Matrix& m = phi.matrix;
  if (!(source.field() == target.field()) || !(phi.sigma.field() == source.field()) || m.rows() != target.dim() ||
      m.cols() != source.dim() || source.dim() != target.dim())
    return false;
  if (rank(m) != source.dim()) return false;
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = i + 1; j < source.dim(); ++j) {
      Vector twisted = source.zero_vector();
      for (const auto& [k, v] : source.bracket_row(i, j)) twisted[k] = phi.sigma.apply(v);
      if (m.apply(twisted) != target.bracket(m.column(i), m.column(j))) return false;
    }
  return true;
}

IdealCheck ideal_check(const LieAlgebra& L, const std::vector<Vector>& spanning) {
  Subspace s(L.field(), L.dim());
  for (const auto& v : spanning) s.add(v);
  IdealCheck r;
  r.basis = s.basis();
  r.is_ideal = true;
  for (std::size_t i = 0; i < L.dim() && r.is_ideal; ++i)
    for (const auto& b : r.basis)
      if (!s.contains(L.bracket(L.basis_vector(i), b))) {
        r.is_ideal = false;
        break;
      }
  return r;
}

LieAlgebra change_basis(const LieAlgebra& L, const Matrix& p) {
  if (p.rows() != L.dim() || p.cols() != L.dim()) throw Error(ErrorKind::WrongShape, "basis change must be square");
  auto inv = inverse(p);
  if (!inv) throw Error(ErrorKind::SingularMatrix, "basis change matrix is singular");
  std::vector<StructureConstant> cs;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      Vector c = inv->apply(L.bracket(p.column(i), p.column(j)));
      for (std::size_t k = 0; k < L.dim(); ++k)
        if (!c[k].is_zero()) cs.push_back({i, j, k, c[k]});
    }
  return LieAlgebra(L.field(), L.dim(), cs);
}

LieAlgebra subalgebra(const LieAlgebra& L, const std::vector<Vector>& basis) {
  Matrix b = Matrix::from_columns(L.field(), L.dim(), basis);
  auto li = left_inverse(b);
  if (!li) throw Error(ErrorKind::Degenerate, "subalgebra basis is dependent");
  std::vector<StructureConstant> cs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Vector v = L.bracket(basis[i], basis[j]);
      Vector c = li->apply(v);
      if (b.apply(c) != v) throw Error(ErrorKind::NotClosed, "bracket leaves the span");
      for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) cs.push_back({i, j, k, c[k]});
    }
  return LieAlgebra(L.field(), basis.size(), cs);
}

}  // namespace galoislie
