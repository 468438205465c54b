#include "balcat/gradedcat/graded.hpp"

#include "balcat/common/errors.hpp"

namespace balcat {

bool same_group(const FiniteGroup& a, const FiniteGroup& b) { return &a == &b || a == b; }

GradedObject::GradedObject(GroupPtr group, std::vector<std::size_t> grades)
    : group_(std::move(group)), grades_(std::move(grades)) {
  if (!group_) throw std::invalid_argument("GradedObject: null group");
  for (std::size_t g : grades_) {
    if (g >= group_->order()) throw ValidationError("grade index out of range for " + group_->name());
  }
}

GradedObject GradedObject::from_dims(GroupPtr group, const std::vector<std::size_t>& dims) {
  if (dims.size() != group->order()) {
    throw DimensionMismatch("from_dims: need one dimension per group element");
  }
  std::vector<std::size_t> grades;
  for (std::size_t g = 0; g < dims.size(); ++g) grades.insert(grades.end(), dims[g], g);
  return GradedObject(std::move(group), std::move(grades));
}

GradedObject GradedObject::unit(GroupPtr group) {
  const std::size_t e = group->identity();
  return GradedObject(std::move(group), {e});
}

GradedObject GradedObject::simple(GroupPtr group, std::size_t g) {
  return GradedObject(std::move(group), {g});
}

GradedObject GradedObject::zero(GroupPtr group) { return GradedObject(std::move(group), {}); }

std::vector<std::size_t> GradedObject::dims() const {
  std::vector<std::size_t> d(group_->order(), 0);
  for (std::size_t g : grades_) ++d[g];
  return d;
}

std::vector<std::size_t> GradedObject::indices_of_grade(std::size_t g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < grades_.size(); ++i) {
    if (grades_[i] == g) out.push_back(i);
  }
  return out;
}

bool operator==(const GradedObject& a, const GradedObject& b) {
  return same_group(*a.group_, *b.group_) && a.grades_ == b.grades_;
}

void require_same_group(const GradedObject& a, const GradedObject& b, const char* where) {
  if (!same_group(a.group(), b.group())) {
    throw StructureMismatch(std::string(where) + ": objects graded by different groups");
  }
}

GradedObject tensor_objects(const GradedObject& u, const GradedObject& v) {
  require_same_group(u, v, "tensor_objects");
  std::vector<std::size_t> grades;
  grades.reserve(u.dim() * v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t j = 0; j < v.dim(); ++j) grades.push_back(u.group().mul(u.grade(i), v.grade(j)));
  }
  return GradedObject(u.group_ptr(), std::move(grades));
}

GradedObject direct_sum(const GradedObject& u, const GradedObject& v) {
  require_same_group(u, v, "direct_sum");
  auto grades = u.grades();
  grades.insert(grades.end(), v.grades().begin(), v.grades().end());
  return GradedObject(u.group_ptr(), std::move(grades));
}

bool is_grade_preserving(const Matrix& m, const GradedObject& src, const GradedObject& dst) {
  if (m.rows() != dst.dim() || m.cols() != src.dim()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (dst.grade(r) != src.grade(c) && !m(r, c).is_zero()) return false;
    }
  }
  return true;
}

GradedMorphism::GradedMorphism(GradedObject source, GradedObject target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  require_same_group(source_, target_, "GradedMorphism");
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim()) {
    throw DimensionMismatch("GradedMorphism: matrix shape does not match the objects");
  }
  if (!is_grade_preserving(matrix_, source_, target_)) {
    throw ValidationError("GradedMorphism: matrix mixes different grades");
  }
}

GradedMorphism GradedMorphism::identity(const GradedObject& u, const Field& f) {
  return GradedMorphism(u, u, Matrix::identity(f, u.dim()));
}

GradedMorphism compose(const GradedMorphism& g, const GradedMorphism& f) {
  if (f.target() != g.source()) throw StructureMismatch("compose: objects do not match");
  return GradedMorphism(f.source(), g.target(), g.matrix() * f.matrix());
}

GradedMorphism tensor_morphisms(const GradedMorphism& f, const GradedMorphism& g) {
  return GradedMorphism(tensor_objects(f.source(), g.source()),
                        tensor_objects(f.target(), g.target()), kron(f.matrix(), g.matrix()));
}

Duality dual_object_with_zigzag(const GradedObject& u, const Field& f) {
  const FiniteGroup& k = u.group();
  const std::size_t n = u.dim();
  std::vector<std::size_t> grades;
  for (std::size_t i = 0; i < n; ++i) grades.push_back(k.inv(u.grade(i)));
  GradedObject dual(u.group_ptr(), std::move(grades));
  const GradedObject one = GradedObject::unit(u.group_ptr());

  // Pairing e_i* ⊗ e_j -> delta_ij at index i * n + j, in either order of
  // factors, and copairing 1 -> sum_i e_i ⊗ e_i*.
  Matrix pairing(f, 1, n * n);
  Matrix copairing(f, n * n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    pairing(0, i * n + i) = f.one();
    copairing(i * n + i, 0) = f.one();
  }
  Duality d{dual,
            GradedMorphism(tensor_objects(dual, u), one, pairing),
            GradedMorphism(one, tensor_objects(u, dual), copairing),
            GradedMorphism(tensor_objects(u, dual), one, pairing),
            GradedMorphism(one, tensor_objects(dual, u), copairing),
            CheckReport("zigzag")};

  const Matrix iu = Matrix::identity(f, n);
  // u = 1 ⊗ u -> (u ⊗ u*) ⊗ u = u ⊗ (u* ⊗ u) -> u ⊗ 1 = u
  d.zigzag.add("right: (id ⊗ ev)(coev ⊗ id) = id_u",
               (kron(iu, d.ev.matrix()) * kron(d.coev.matrix(), iu)).is_identity());
  // u* = u* ⊗ 1 -> u* ⊗ (u ⊗ u*) = (u* ⊗ u) ⊗ u* -> 1 ⊗ u* = u*
  d.zigzag.add("right: (ev ⊗ id)(id ⊗ coev) = id_u*",
               (kron(d.ev.matrix(), iu) * kron(iu, d.coev.matrix())).is_identity());
  // u = u ⊗ 1 -> u ⊗ (u* ⊗ u) = (u ⊗ u*) ⊗ u -> 1 ⊗ u = u
  d.zigzag.add("left: (ev_l ⊗ id)(id ⊗ coev_l) = id_u",
               (kron(d.ev_left.matrix(), iu) * kron(iu, d.coev_left.matrix())).is_identity());
  // u* = 1 ⊗ u* -> (u* ⊗ u) ⊗ u* = u* ⊗ (u ⊗ u*) -> u* ⊗ 1 = u*
  d.zigzag.add("left: (id ⊗ ev_l)(coev_l ⊗ id) = id_u*",
               (kron(iu, d.ev_left.matrix()) * kron(d.coev_left.matrix(), iu)).is_identity());
  return d;
}

}  // namespace balcat
