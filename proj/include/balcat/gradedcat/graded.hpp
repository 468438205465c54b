#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "balcat/common/check.hpp"
#include "balcat/exactla/linalg.hpp"
#include "balcat/groups/finite_group.hpp"

namespace balcat {

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }
bool same_group(const FiniteGroup& a, const FiniteGroup& b);

/// A finite-dimensional K-graded vector space: every basis vector carries a
/// grade. Objects built from a dimension vector list their basis grade-major;
/// tensor products list ordered pairs lexicographically, which makes the
/// associator of Vect[K] the literal identity on indices.
class GradedObject {
 public:
  GradedObject(GroupPtr group, std::vector<std::size_t> grades);

  /// dims[g] basis vectors of grade g, grade-major.
  static GradedObject from_dims(GroupPtr group, const std::vector<std::size_t>& dims);
  /// The tensor unit k_e.
  static GradedObject unit(GroupPtr group);
  /// The one-dimensional object k_g.
  static GradedObject simple(GroupPtr group, std::size_t g);
  static GradedObject zero(GroupPtr group);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t dim() const { return grades_.size(); }
  std::size_t grade(std::size_t i) const { return grades_[i]; }
  const std::vector<std::size_t>& grades() const { return grades_; }
  /// Dimension of each homogeneous component, indexed by group element.
  std::vector<std::size_t> dims() const;
  std::vector<std::size_t> indices_of_grade(std::size_t g) const;

  friend bool operator==(const GradedObject& a, const GradedObject& b);
  friend bool operator!=(const GradedObject& a, const GradedObject& b) { return !(a == b); }

 private:
  GroupPtr group_;
  std::vector<std::size_t> grades_;
};

/// Throws StructureMismatch if the objects are graded by different groups.
void require_same_group(const GradedObject& a, const GradedObject& b, const char* where);

/// u ⊗ v with basis (i, j) at index i * dim(v) + j of grade g_i g_j.
GradedObject tensor_objects(const GradedObject& u, const GradedObject& v);
GradedObject direct_sum(const GradedObject& u, const GradedObject& v);

/// Entry (r, c) vanishes whenever grade_dst(r) != grade_src(c).
bool is_grade_preserving(const Matrix& m, const GradedObject& src, const GradedObject& dst);

/// A grade-preserving linear map. Construction throws ValidationError for a
/// matrix with nonzero entries between different grades.
class GradedMorphism {
 public:
  GradedMorphism(GradedObject source, GradedObject target, Matrix matrix);

  static GradedMorphism identity(const GradedObject& u, const Field& f);

  const GradedObject& source() const { return source_; }
  const GradedObject& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

 private:
  GradedObject source_;
  GradedObject target_;
  Matrix matrix_;
};

/// g ∘ f.
GradedMorphism compose(const GradedMorphism& g, const GradedMorphism& f);
/// f ⊗ g on the lexicographic bases.
GradedMorphism tensor_morphisms(const GradedMorphism& f, const GradedMorphism& g);

struct Duality {
  /// dims(g) = dims_u(g^-1); basis vector i of the dual pairs with vector i of u.
  GradedObject dual;
  /// Right duality: ev: dual ⊗ u -> 1, coev: 1 -> u ⊗ dual.
  GradedMorphism ev;
  GradedMorphism coev;
  /// Left duality: ev_left: u ⊗ dual -> 1, coev_left: 1 -> dual ⊗ u.
  GradedMorphism ev_left;
  GradedMorphism coev_left;
  /// The four zigzag composites compared with identities.
  CheckReport zigzag;
};

Duality dual_object_with_zigzag(const GradedObject& u, const Field& f);

}  // namespace balcat
