#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balcat/common/check.hpp"
#include "balcat/exactla/linalg.hpp"
#include "balcat/groups/finite_group.hpp"

namespace balcat {

/// Sorted (index, nonzero value) pairs.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

SparseVector sparsify(const Vector& v);
Vector densify(const Field& f, std::size_t n, const SparseVector& v);

struct AlgebraOptions {
  std::string name;
  /// Characteristic divides the order of the group the algebra came from.
  bool maschke_risk = false;
  /// Elements known to generate. They are checked and extended greedily by
  /// basis vectors if they fall short.
  std::optional<std::vector<SparseVector>> generator_hint;
};

/// A finite-dimensional unital algebra over an exact field, given by structure
/// constants e_i e_j = sum_k c[i][j][k] e_k (stored sparsely per pair).
///
/// Construction only checks shapes; the axioms are checked by
/// validate_algebra. The constructor also fixes a generating set: elements
/// whose products span the algebra together with the unit.
/// Several solvers (centers, intertwiners, tensor products) impose equations
/// for generators only, which keeps the large enveloping algebras tractable.
class FinAlgebra {
 public:
  using Options = AlgebraOptions;

  FinAlgebra() = default;
  /// products[i * dim + j] = e_i e_j.
  FinAlgebra(Field field, std::size_t dim, std::vector<SparseVector> products, Vector unit,
             Options options);
  FinAlgebra(Field field, std::size_t dim, std::vector<SparseVector> products, Vector unit)
      : FinAlgebra(field, dim, std::move(products), std::move(unit), Options{}) {}
  /// structure[i][j] is the coefficient vector of e_i e_j.
  static FinAlgebra from_dense(Field field, const std::vector<std::vector<Vector>>& structure,
                               Vector unit, Options options = {});

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  bool maschke_risk() const { return maschke_risk_; }

  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  const Vector& unit() const { return unit_; }
  const std::vector<SparseVector>& generators() const { return generators_; }

  Vector multiply(const Vector& x, const Vector& y) const;
  /// Matrix of left multiplication by e_i (column j is e_i e_j).
  Matrix left_multiplication(std::size_t i) const;
  /// Matrix of right multiplication by e_i (column j is e_j e_i).
  Matrix right_multiplication(std::size_t i) const;
  Matrix left_multiplication(const Vector& x) const;
  /// x e_i for a sparse x.
  Vector right_multiply_basis(const SparseVector& x, std::size_t i) const;

  /// A copy with one structure constant replaced; used by fault-injection
  /// tests to produce invalid data on purpose.
  FinAlgebra with_structure_constant(std::size_t i, std::size_t j, std::size_t k,
                                     const Scalar& value) const;

 private:
  void compute_generators(const std::optional<std::vector<SparseVector>>& hint);

  Field field_;
  std::size_t dim_ = 0;
  std::vector<SparseVector> products_;
  Vector unit_;
  std::vector<SparseVector> generators_;
  std::string name_;
  bool maschke_risk_ = false;
};

/// Associativity on every basis triple and both unit laws; the first failure
/// names the offending indices.
CheckReport validate_algebra(const FinAlgebra& a);

FinAlgebra ground_field_algebra(const Field& f);
/// Basis indexed by group elements. Over F_p with p dividing |G| the result is
/// still built but flagged with maschke_risk.
FinAlgebra group_algebra(const FiniteGroup& g, const Field& f);
/// n x n matrices with the basis of matrix units E_rc at index r * n + c.
FinAlgebra matrix_algebra(std::size_t n, const Field& f);
/// k[x]/(x^2) with basis 1, x.
FinAlgebra dual_numbers(const Field& f);
FinAlgebra opposite_algebra(const FinAlgebra& a);
/// a ⊗ b with basis index i * dim(b) + j and Kronecker structure constants.
/// The same algebra on the basis given by the columns of an invertible p.
FinAlgebra transport_algebra(const FinAlgebra& a, const Matrix& p);

FinAlgebra tensor_product_algebra(const FinAlgebra& a, const FinAlgebra& b);

/// Basis of the center, solving x g = g x for the generators g.
std::vector<Vector> center_basis(const FinAlgebra& a);
/// Same, with one equation block per basis element. Slower; a cross-check.
std::vector<Vector> center_basis_exhaustive(const FinAlgebra& a);

struct SemisimplicityCertificate {
  enum class Verdict { certified_semisimple, unknown };
  Verdict verdict = Verdict::unknown;
  /// T(e_i, e_j) = trace(L_{e_i} L_{e_j}).
  Matrix gram;
  Scalar determinant;
  bool certified() const { return verdict == Verdict::certified_semisimple; }
};

/// Nondegenerate trace form of the regular representation certifies
/// semisimplicity; a degenerate form says nothing.
SemisimplicityCertificate semisimplicity_certificate(const FinAlgebra& a);

/// Number of simple modules of a split semisimple algebra, as dim Z(a).
/// The trace-form certificate must hold and the caller must assert that the
/// field splits the algebra; otherwise throws PreconditionError.
std::size_t split_simple_count(const FinAlgebra& a, bool field_is_splitting);

/// Central primitive idempotents of a split semisimple algebra, found by
/// splitting the center with minimal polynomials of its basis elements.
/// Throws PreconditionError if some minimal polynomial does not split into
/// distinct linear factors over the field.
std::vector<Vector> central_primitive_idempotents(const FinAlgebra& a);

/// Dimensions n_i of the simple modules, read off the blocks e_i a of
/// dimension n_i^2. Throws PreconditionError if a block is not a square.
std::vector<std::size_t> simple_dimensions(const FinAlgebra& a);

}  // namespace balcat
