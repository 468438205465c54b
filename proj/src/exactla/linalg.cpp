#include "balcat/exactla/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "balcat/common/errors.hpp"

namespace balcat {

// ---------------------------------------------------------------- RowSpace

RowSpace::RowSpace(Field field, std::size_t width)
    : field_(field), width_(width), row_of_pivot_(width, -1) {}

std::vector<std::size_t> RowSpace::support_of(const Vector& v) {
  std::vector<std::size_t> s;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!v[j].is_zero()) s.push_back(j);
  }
  return s;
}

void RowSpace::eliminate_with(Vector& v, const StoredRow& r) const {
  const Scalar factor = v[r.pivot];
  for (std::size_t j : r.support) v[j].sub_mul(factor, r.values[j]);
}

Vector RowSpace::reduce(Vector v) const {
  if (v.size() != width_) throw DimensionMismatch("RowSpace: row length");
  // Eliminating with a stored row touches no other pivot column, so a single
  // left-to-right sweep suffices.
  for (std::size_t j = 0; j < width_; ++j) {
    if (v[j].is_zero()) continue;
    const long r = row_of_pivot_[j];
    if (r >= 0) eliminate_with(v, rows_[static_cast<std::size_t>(r)]);
  }
  return v;
}

bool RowSpace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool RowSpace::insert(Vector row) {
  if (full()) {
    if (row.size() != width_) throw DimensionMismatch("RowSpace: row length");
    return false;
  }
  Vector v = reduce(std::move(row));
  std::size_t pivot = width_;
  for (std::size_t j = 0; j < width_; ++j) {
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot == width_) return false;
  const Scalar inv = v[pivot].inverse();
  for (std::size_t j = pivot; j < width_; ++j) {
    if (!v[j].is_zero()) v[j] *= inv;
  }
  StoredRow fresh{std::move(v), {}, pivot};
  fresh.support = support_of(fresh.values);
  for (auto& r : rows_) {
    if (r.values[pivot].is_zero()) continue;
    eliminate_with(r.values, fresh);
    r.support = support_of(r.values);
  }
  row_of_pivot_[pivot] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(fresh));
  return true;
}

std::vector<std::size_t> RowSpace::pivots() const {
  std::vector<std::size_t> p;
  for (std::size_t j = 0; j < width_; ++j) {
    if (row_of_pivot_[j] >= 0) p.push_back(j);
  }
  return p;
}

std::vector<Vector> RowSpace::basis() const {
  std::vector<Vector> out;
  for (std::size_t j : pivots()) out.push_back(rows_[static_cast<std::size_t>(row_of_pivot_[j])].values);
  return out;
}

std::vector<Vector> RowSpace::null_space() const {
  std::vector<Vector> out;
  for (std::size_t f = 0; f < width_; ++f) {
    if (row_of_pivot_[f] >= 0) continue;
    Vector v = zero_vector(field_, width_);
    v[f] = field_.one();
    for (const auto& r : rows_) {
      if (!r.values[f].is_zero()) v[r.pivot] = -r.values[f];
    }
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------- free functions

namespace {

RowSpace row_space_of(const Matrix& m) {
  RowSpace rs(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows() && !rs.full(); ++i) rs.insert(m.row(i));
  return rs;
}

}  // namespace

std::size_t rank(const Matrix& m) { return row_space_of(m).rank(); }

std::vector<Vector> kernel_basis(const Matrix& m) { return row_space_of(m).null_space(); }

Cokernel cokernel(const Matrix& m) {
  // Left null space of m: vectors p with p m = 0, i.e. the null space of the
  // row space spanned by the columns of m.
  RowSpace rs(m.field(), m.rows());
  for (std::size_t j = 0; j < m.cols() && !rs.full(); ++j) rs.insert(m.column(j));
  const auto ann = rs.null_space();
  Cokernel c;
  c.dim = ann.size();
  c.projection = Matrix::from_rows(m.field(), m.rows(), ann);
  return c;
}

Cokernel cokernel_of_columns(const Field& field, std::size_t ambient,
                             const std::vector<Matrix>& blocks) {
  RowSpace rs(field, ambient);
  for (const auto& b : blocks) {
    if (b.rows() != ambient) throw DimensionMismatch("cokernel_of_columns: block height");
    for (std::size_t j = 0; j < b.cols() && !rs.full(); ++j) {
      Vector col = b.column(j);
      if (!is_zero(col)) rs.insert(std::move(col));
    }
  }
  const auto ann = rs.null_space();
  Cokernel c;
  c.dim = ann.size();
  c.projection = Matrix::from_rows(field, ambient, ann);
  return c;
}

std::optional<Vector> solve_affine(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve_affine: rhs length");
  const std::size_t n = m.cols();
  RowSpace rs(m.field(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vector row = m.row(i);
    row.push_back(b[i]);
    rs.insert(std::move(row));
  }
  const auto piv = rs.pivots();
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  Vector x = zero_vector(m.field(), n);
  const auto rows = rs.basis();
  for (std::size_t k = 0; k < rows.size(); ++k) x[piv[k]] = rows[k][n];
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse: matrix not square");
  const std::size_t n = m.rows();
  RowSpace rs(m.field(), 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector row = m.row(i);
    for (std::size_t j = 0; j < n; ++j) row.push_back(i == j ? m.field().one() : m.field().zero());
    rs.insert(std::move(row));
  }
  const auto piv = rs.pivots();
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  const auto rows = rs.basis();
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rows[i][n + j];
  }
  return inv;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant: matrix not square");
  const std::size_t n = m.rows();
  Matrix a = m;
  Scalar det = m.field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return m.field().zero();
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const Scalar inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Scalar f = a(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) {
        if (!a(c, j).is_zero()) a(r, j).sub_mul(f, a(c, j));
      }
    }
  }
  return det;
}

Matrix right_inverse(const Matrix& p) {
  const std::size_t r = p.rows();
  const std::size_t n = p.cols();
  // Row reduce [p | I]: the result is [R | T] with R = T p in reduced form.
  // With pivots q_k of R, placing row k of T at row q_k of s gives p s = I.
  RowSpace rs(p.field(), n + r);
  for (std::size_t i = 0; i < r; ++i) {
    Vector row = p.row(i);
    for (std::size_t j = 0; j < r; ++j) row.push_back(i == j ? p.field().one() : p.field().zero());
    rs.insert(std::move(row));
  }
  const auto piv = rs.pivots();
  if (piv.size() < r || (r > 0 && piv[r - 1] >= n)) {
    throw PreconditionError("right_inverse: matrix does not have full row rank");
  }
  const auto rows = rs.basis();
  Matrix s(p.field(), n, r);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t j = 0; j < r; ++j) s(piv[k], j) = rows[k][n + j];
  }
  return s;
}

std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& target) {
  if (basis.empty()) {
    if (is_zero(target)) return Vector{};
    return std::nullopt;
  }
  const Field f = basis.front().front().field();
  return CoordinateSystem(f, target.size(), basis).coordinates(target);
}

CoordinateSystem::CoordinateSystem(Field field, std::size_t ambient_dim, std::vector<Vector> basis)
    : field_(field), ambient_(ambient_dim), basis_(std::move(basis)) {
  const std::size_t r = basis_.size();
  RowSpace rs(field_, ambient_);
  for (const auto& b : basis_) {
    if (b.size() != ambient_) throw DimensionMismatch("CoordinateSystem: vector length");
    if (!rs.insert(b)) throw PreconditionError("CoordinateSystem: basis is dependent");
  }
  // Rows of the basis matrix (n x r) indexed by the pivots of its transpose
  // form an invertible r x r block.
  probe_rows_ = rs.pivots();
  Matrix probe(field_, r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) probe(i, j) = basis_[j][probe_rows_[i]];
  }
  probe_inverse_ = *inverse(probe);
}

std::optional<Vector> CoordinateSystem::coordinates(const Vector& target) const {
  if (target.size() != ambient_) throw DimensionMismatch("coordinates: target length");
  const std::size_t r = basis_.size();
  Vector probe_vals;
  probe_vals.reserve(r);
  for (std::size_t i : probe_rows_) probe_vals.push_back(target[i]);
  Vector x = r == 0 ? Vector{} : probe_inverse_.apply(probe_vals);
  // Verify: the probe block only pins down the candidate.
  Vector residual = target;
  for (std::size_t j = 0; j < r; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < ambient_; ++i) {
      if (!basis_[j][i].is_zero()) residual[i].sub_mul(x[j], basis_[j][i]);
    }
  }
  if (!is_zero(residual)) return std::nullopt;
  return x;
}

}  // namespace balcat
