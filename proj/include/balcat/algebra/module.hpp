#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "balcat/algebra/algebra.hpp"

namespace balcat {

enum class Side { left, right };
const char* side_name(Side s);

using AlgebraPtr = std::shared_ptr<const FinAlgebra>;

inline AlgebraPtr share(FinAlgebra a) { return std::make_shared<const FinAlgebra>(std::move(a)); }

/// Same pointer, or identical field, dimension, unit and structure constants.
bool same_algebra(const FinAlgebra& a, const FinAlgebra& b);

/// A module given by one action matrix per algebra basis element. For a left
/// module action(i) is x -> e_i . x; for a right module it is x -> x . e_i.
/// Either way it is a matrix acting on column vectors, so a right module has
/// action(xy) = action(y) action(x).
class AlgModule {
 public:
  AlgModule(AlgebraPtr algebra, Side side, std::size_t dim, std::vector<Matrix> action);

  static AlgModule regular(AlgebraPtr algebra, Side side);
  static AlgModule zero(AlgebraPtr algebra, Side side);

  const FinAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  Side side() const { return side_; }
  std::size_t dim() const { return dim_; }
  const Matrix& action(std::size_t i) const { return action_[i]; }
  const std::vector<Matrix>& actions() const { return action_; }
  /// Action matrices of algebra().generators(), in order.
  const std::vector<Matrix>& generator_actions() const { return generator_action_; }
  Matrix action_of(const Vector& x) const;
  Matrix action_of(const SparseVector& x) const;

 private:
  AlgebraPtr algebra_;
  Side side_;
  std::size_t dim_;
  std::vector<Matrix> action_;
  std::vector<Matrix> generator_action_;
};

/// Unit acts as the identity and the action is multiplicative. The default
/// checks products with generators only (enough, by induction on words);
/// `exhaustive` checks every pair of basis elements.
CheckReport validate_module(const AlgModule& m, bool exhaustive = false);

AlgModule direct_sum(const AlgModule& a, const AlgModule& b);
/// The module transported along an invertible p: actions p^{-1} rho p.
AlgModule change_of_basis(const AlgModule& m, const Matrix& p);
/// Same matrices over the opposite algebra on the other side.
AlgModule opposite_side(const AlgModule& m, AlgebraPtr opposite);

/// Left module over `left`, right module over `right`, commuting actions.
class AlgBimodule {
 public:
  AlgBimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Matrix> left_action,
              std::vector<Matrix> right_action);

  const FinAlgebra& left_algebra() const { return *left_.algebra_ptr(); }
  const FinAlgebra& right_algebra() const { return *right_.algebra_ptr(); }
  std::size_t dim() const { return left_.dim(); }
  const AlgModule& as_left() const { return left_; }
  const AlgModule& as_right() const { return right_; }

 private:
  AlgModule left_;
  AlgModule right_;
};

CheckReport validate_bimodule(const AlgBimodule& x, bool exhaustive = false);

/// Basis of {f : f S_k = T_k f for every k}, where f maps k^src_dim to
/// k^dst_dim. When labels are given, only entries f(r, c) with
/// dst_labels[r] == src_labels[c] are unknowns; all others are fixed to zero.
std::vector<Matrix> intertwiner_basis(const Field& field, std::size_t src_dim,
                                      std::size_t dst_dim,
                                      const std::vector<const Matrix*>& src_ops,
                                      const std::vector<const Matrix*>& dst_ops,
                                      const std::vector<std::size_t>* src_labels = nullptr,
                                      const std::vector<std::size_t>* dst_labels = nullptr);

/// Module maps m -> n. Throws StructureMismatch unless the algebras agree and
/// the sides match.
std::vector<Matrix> hom_space(const AlgModule& m, const AlgModule& n);
std::vector<Matrix> hom_space(const AlgBimodule& m, const AlgBimodule& n);

/// m ⊗_A n for m a right and n a left A-module: the cokernel of
/// (x.a) ⊗ y - x ⊗ (a.y) on m ⊗ n, index x * dim(n) + y. Relations are
/// imposed for generators of A, which span the same subspace as all of A.
Cokernel tensor_over_algebra(const AlgModule& m, const AlgModule& n);
/// Same with relations for every basis element of A.
Cokernel tensor_over_algebra_exhaustive(const AlgModule& m, const AlgModule& n);

}  // namespace balcat
