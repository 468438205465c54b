#pragma once

#include <memory>
#include <vector>

#include "balcat/algebra/module.hpp"
#include "balcat/gradedcat/graded.hpp"

namespace balcat {

/// An algebra object in Vect[K]: a FinAlgebra whose basis vectors are
/// homogeneous, with grades recorded by the underlying object.
class GradedAlgebraObject {
 public:
  GradedAlgebraObject(GradedObject object, AlgebraPtr algebra);

  const GradedObject& object() const { return object_; }
  const FiniteGroup& group() const { return object_.group(); }
  const GroupPtr& group_ptr() const { return object_.group_ptr(); }
  const FinAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const Field& field() const { return algebra_->field(); }
  std::size_t dim() const { return algebra_->dim(); }
  std::size_t grade(std::size_t i) const { return object_.grade(i); }

 private:
  GradedObject object_;
  AlgebraPtr algebra_;
};

using AlgebraObjectPtr = std::shared_ptr<const GradedAlgebraObject>;
inline AlgebraObjectPtr share(GradedAlgebraObject a) {
  return std::make_shared<const GradedAlgebraObject>(std::move(a));
}
bool same_algebra_object(const GradedAlgebraObject& a, const GradedAlgebraObject& b);

/// Algebra axioms, structure constants respecting grades, unit in grade e.
CheckReport validate_algebra_object(const GradedAlgebraObject& a);

/// The tensor unit as a one-dimensional algebra.
GradedAlgebraObject unit_algebra_object(const GroupPtr& k, const Field& f);
/// k[K] with e_g in grade g.
GradedAlgebraObject group_algebra_object(const GroupPtr& k, const Field& f);
/// k[H] with every basis vector in the neutral grade of K.
GradedAlgebraObject trivially_graded_group_algebra(const GroupPtr& k, const FiniteGroup& h,
                                                  const Field& f);
/// End(V) = V ⊗ V*, matrix unit E_rc (index r * dim + c) in grade g_r g_c^-1.
GradedAlgebraObject endomorphism_algebra_object(const GradedObject& v, const Field& f);

/// A left or right module object over an algebra object. The action matrices
/// are indexed by the algebra basis as in AlgModule.
class GradedModuleObject {
 public:
  GradedModuleObject(AlgebraObjectPtr algebra, Side side, GradedObject object,
                     std::vector<Matrix> action);

  Side side() const { return module_.side(); }
  const GradedAlgebraObject& algebra_object() const { return *algebra_; }
  const AlgebraObjectPtr& algebra_object_ptr() const { return algebra_; }
  const GradedObject& object() const { return object_; }
  const AlgModule& module() const { return module_; }
  std::size_t dim() const { return object_.dim(); }
  const Field& field() const { return algebra_->field(); }

 private:
  AlgebraObjectPtr algebra_;
  GradedObject object_;
  AlgModule module_;
};

/// Module axioms plus grade compatibility of every action matrix.
CheckReport validate_module_object(const GradedModuleObject& m);

/// Free module on v: v ⊗ B for the right side, B ⊗ v for the left side.
GradedModuleObject free_module(const AlgebraObjectPtr& b, Side side, const GradedObject& v);
GradedModuleObject regular_module(const AlgebraObjectPtr& b, Side side);
GradedModuleObject zero_module(const AlgebraObjectPtr& b, Side side);
GradedModuleObject direct_sum(const GradedModuleObject& m, const GradedModuleObject& n);
/// Transport along a grade-preserving invertible matrix p (new basis = columns of p).
GradedModuleObject change_of_basis(const GradedModuleObject& m, const Matrix& p);

/// c ⊗ m for a right module m; B acts on the right factor.
GradedModuleObject act_on_module_object(const GradedObject& c, const GradedModuleObject& m);
/// x ⊗ c for a left module x; A acts on the left factor.
GradedModuleObject act_on_module_object(const GradedModuleObject& x, const GradedObject& c);

/// Grade-preserving module maps m -> n.
std::vector<Matrix> graded_hom(const GradedModuleObject& m, const GradedModuleObject& n);
/// Module maps of degree g: Hom(k_g ⊗ m, n) for right modules and
/// Hom(m ⊗ k_g, n) for left modules, as matrices on the underlying spaces.
std::vector<Matrix> graded_hom_shifted(const GradedModuleObject& m, const GradedModuleObject& n,
                                       std::size_t g);

struct GradedCokernel {
  GradedObject object;
  /// Grade-preserving surjection from the target, killing the image.
  Matrix projection;
};

/// Cokernel of a grade-preserving map src -> dst, computed grade by grade.
GradedCokernel graded_cokernel(const Matrix& f, const GradedObject& src, const GradedObject& dst);
/// Cokernel of the span of the columns of all blocks. The span must be a
/// graded subspace of dst (homogeneous components of the columns then lie in
/// it); this is not checked.
GradedCokernel graded_cokernel_of_span(const Field& field, const std::vector<Matrix>& blocks,
                                       const GradedObject& dst);
/// The quotient module n / im(f) for a module map f: m -> n.
struct QuotientModule {
  GradedModuleObject module;
  Matrix projection;
};
QuotientModule quotient_module(const GradedModuleObject& n, const Matrix& f,
                               const GradedObject& src);

/// A bimodule object: left A-action and right B-action on one graded space.
class GradedBimoduleObject {
 public:
  GradedBimoduleObject(AlgebraObjectPtr left, AlgebraObjectPtr right, GradedObject object,
                       std::vector<Matrix> left_action, std::vector<Matrix> right_action);

  const GradedAlgebraObject& left_algebra() const { return *left_; }
  const GradedAlgebraObject& right_algebra() const { return *right_; }
  const AlgebraObjectPtr& left_ptr() const { return left_; }
  const AlgebraObjectPtr& right_ptr() const { return right_; }
  const GradedObject& object() const { return object_; }
  const AlgBimodule& bimodule() const { return bimodule_; }
  std::size_t dim() const { return object_.dim(); }
  const Field& field() const { return left_->field(); }
  GradedModuleObject as_left() const;
  GradedModuleObject as_right() const;

 private:
  AlgebraObjectPtr left_;
  AlgebraObjectPtr right_;
  GradedObject object_;
  AlgBimodule bimodule_;
};

CheckReport validate_bimodule_object(const GradedBimoduleObject& x);

/// Grade-preserving bimodule maps.
std::vector<Matrix> graded_hom(const GradedBimoduleObject& m, const GradedBimoduleObject& n);
bool is_bimodule_map(const Matrix& f, const GradedBimoduleObject& m,
                     const GradedBimoduleObject& n);
bool is_module_map(const Matrix& f, const GradedModuleObject& m, const GradedModuleObject& n);

/// 0 -> a -f-> b -g-> c -> 0 of module objects on one side.
struct ShortExactSequence {
  GradedModuleObject a;
  GradedModuleObject b;
  GradedModuleObject c;
  Matrix f;
  Matrix g;
};

/// Module maps, grade preservation, injectivity of f, surjectivity of g,
/// g f = 0 and dim b = dim a + dim c (which together give exactness).
CheckReport check_short_exact(const ShortExactSequence& s);
/// Tensors the sequence with c (on the left of right modules, on the right of
/// left modules) and checks the result. Throws PreconditionError if the input
/// sequence is not exact.
CheckReport exactness_probe(const GradedObject& c, const ShortExactSequence& s);

}  // namespace balcat
