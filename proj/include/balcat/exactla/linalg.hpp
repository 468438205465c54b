#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "balcat/exactla/matrix.hpp"

namespace balcat {

/// Incrementally maintained reduced row echelon form of a row space.
///
/// Rows are inserted one at a time and reduced against the stored basis, so a
/// tall system (many more equations than unknowns) never has to be
/// materialized. Stored rows are normalized to a leading 1 and are zero in
/// every other pivot column.
class RowSpace {
 public:
  RowSpace(Field field, std::size_t width);

  /// Returns true if the row was independent of the stored ones.
  bool insert(Vector row);
  /// Reduce v against the stored rows (zero iff v lies in the span).
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;

  const Field& field() const { return field_; }
  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == width_; }

  /// Stored rows ordered by increasing pivot column.
  std::vector<Vector> basis() const;
  /// Pivot columns, increasing.
  std::vector<std::size_t> pivots() const;
  /// Basis of {v : r . v = 0 for every stored row r}, one vector per free
  /// column (in increasing order) with a 1 in that column.
  std::vector<Vector> null_space() const;

 private:
  struct StoredRow {
    Vector values;
    std::vector<std::size_t> support;
    std::size_t pivot;
  };
  void eliminate_with(Vector& v, const StoredRow& r) const;
  static std::vector<std::size_t> support_of(const Vector& v);

  Field field_;
  std::size_t width_;
  std::vector<StoredRow> rows_;
  std::vector<long> row_of_pivot_;
};

std::size_t rank(const Matrix& m);

/// Basis of the right null space {v : m v = 0}; size cols(m) - rank(m).
std::vector<Vector> kernel_basis(const Matrix& m);

struct Cokernel {
  /// (rows(m) - rank(m)) x rows(m), full row rank, projection * m = 0.
  Matrix projection;
  std::size_t dim = 0;
};

/// Cokernel k^rows / im(m). The projection is the identity on the non-pivot
/// coordinates of the echelonized image, so a zero map gets the identity.
Cokernel cokernel(const Matrix& m);

/// Cokernel of the map whose image is spanned by the columns of all blocks
/// (each with `ambient` rows), without stacking them into one matrix.
Cokernel cokernel_of_columns(const Field& field, std::size_t ambient,
                             const std::vector<Matrix>& blocks);

/// Some x with m x = b, or nullopt if the system is inconsistent. Free
/// variables are set to zero.
std::optional<Vector> solve_affine(const Matrix& m, const Vector& b);

std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

/// For p of full row rank, some s with p * s = identity.
Matrix right_inverse(const Matrix& p);

/// Coordinates of `target` in the span of `basis` (vectors of equal length),
/// or nullopt when it is not in the span. `basis` must be independent.
std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& target);

/// Precomputed coordinate map for a fixed independent family, for repeated
/// coordinate queries against the same basis.
class CoordinateSystem {
 public:
  CoordinateSystem(Field field, std::size_t ambient_dim, std::vector<Vector> basis);

  std::size_t size() const { return basis_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<Vector>& basis() const { return basis_; }
  /// nullopt when the target is outside the span.
  std::optional<Vector> coordinates(const Vector& target) const;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> probe_rows_;
  Matrix probe_inverse_;
};

}  // namespace balcat
