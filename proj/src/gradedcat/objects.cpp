#include "balcat/gradedcat/objects.hpp"

#include "balcat/common/errors.hpp"

namespace balcat {

// ---------------------------------------------------------------- algebra objects

GradedAlgebraObject::GradedAlgebraObject(GradedObject object, AlgebraPtr algebra)
    : object_(std::move(object)), algebra_(std::move(algebra)) {
  if (!algebra_) throw std::invalid_argument("GradedAlgebraObject: null algebra");
  if (object_.dim() != algebra_->dim()) {
    throw DimensionMismatch("GradedAlgebraObject: one grade per basis vector is needed");
  }
}

bool same_algebra_object(const GradedAlgebraObject& a, const GradedAlgebraObject& b) {
  return &a == &b || (a.object() == b.object() && same_algebra(a.algebra(), b.algebra()));
}

CheckReport validate_algebra_object(const GradedAlgebraObject& a) {
  CheckReport report("algebra object " + a.algebra().name());
  report.merge(validate_algebra(a.algebra()));
  const FiniteGroup& k = a.group();
  std::string failure;
  for (std::size_t i = 0; i < a.dim() && failure.empty(); ++i) {
    for (std::size_t j = 0; j < a.dim() && failure.empty(); ++j) {
      const std::size_t g = k.mul(a.grade(i), a.grade(j));
      for (const auto& [m, c] : a.algebra().product(i, j)) {
        if (a.grade(m) != g) {
          failure = "e_" + std::to_string(i) + " e_" + std::to_string(j) + " has a component e_" +
                    std::to_string(m) + " outside grade " + std::to_string(g);
          break;
        }
      }
    }
  }
  report.add("multiplication respects grades", failure.empty(), failure);
  bool unit_ok = true;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!a.algebra().unit()[i].is_zero() && a.grade(i) != k.identity()) unit_ok = false;
  }
  report.add("unit lies in the neutral grade", unit_ok);
  return report;
}

GradedAlgebraObject unit_algebra_object(const GroupPtr& k, const Field& f) {
  return GradedAlgebraObject(GradedObject::unit(k), share(ground_field_algebra(f)));
}

GradedAlgebraObject group_algebra_object(const GroupPtr& k, const Field& f) {
  std::vector<std::size_t> grades(k->order());
  for (std::size_t g = 0; g < k->order(); ++g) grades[g] = g;
  return GradedAlgebraObject(GradedObject(k, std::move(grades)), share(group_algebra(*k, f)));
}

GradedAlgebraObject trivially_graded_group_algebra(const GroupPtr& k, const FiniteGroup& h,
                                                  const Field& f) {
  return GradedAlgebraObject(GradedObject(k, std::vector<std::size_t>(h.order(), k->identity())),
                             share(group_algebra(h, f)));
}

GradedAlgebraObject endomorphism_algebra_object(const GradedObject& v, const Field& f) {
  const std::size_t n = v.dim();
  if (n == 0) throw PreconditionError("endomorphism_algebra_object: V must be nonzero");
  const FiniteGroup& k = v.group();
  std::vector<std::size_t> grades;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) grades.push_back(k.mul(v.grade(r), k.inv(v.grade(c))));
  }
  return GradedAlgebraObject(GradedObject(v.group_ptr(), std::move(grades)),
                             share(matrix_algebra(n, f)));
}

// ---------------------------------------------------------------- module objects

GradedModuleObject::GradedModuleObject(AlgebraObjectPtr algebra, Side side, GradedObject object,
                                       std::vector<Matrix> action)
    : algebra_(std::move(algebra)),
      object_(std::move(object)),
      module_(algebra_->algebra_ptr(), side, object_.dim(), std::move(action)) {
  require_same_group(object_, algebra_->object(), "GradedModuleObject");
}

namespace {

// Nonzero entries of rho(e_i) must go from grade h to g_i h (left) or h g_i (right).
std::string grade_compatibility_failure(const GradedObject& obj, const GradedAlgebraObject& a,
                                        Side side, const std::vector<Matrix>& action) {
  const FiniteGroup& k = a.group();
  for (std::size_t i = 0; i < action.size(); ++i) {
    const Matrix& m = action[i];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m(r, c).is_zero()) continue;
        const std::size_t want = side == Side::left ? k.mul(a.grade(i), obj.grade(c))
                                                    : k.mul(obj.grade(c), a.grade(i));
        if (obj.grade(r) != want) {
          return "action of e_" + std::to_string(i) + " sends basis vector " + std::to_string(c) +
                 " into the wrong grade (entry " + std::to_string(r) + ")";
        }
      }
    }
  }
  return {};
}

}  // namespace

CheckReport validate_module_object(const GradedModuleObject& m) {
  CheckReport report(std::string(side_name(m.side())) + " module object");
  report.merge(validate_module(m.module()));
  const std::string failure = grade_compatibility_failure(m.object(), m.algebra_object(), m.side(),
                                                          m.module().actions());
  report.add("action respects grades", failure.empty(), failure);
  return report;
}

GradedModuleObject free_module(const AlgebraObjectPtr& b, Side side, const GradedObject& v) {
  const Field& f = b->field();
  const Matrix iv = Matrix::identity(f, v.dim());
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < b->dim(); ++i) {
    action.push_back(side == Side::right ? kron(iv, b->algebra().right_multiplication(i))
                                         : kron(b->algebra().left_multiplication(i), iv));
  }
  GradedObject obj = side == Side::right ? tensor_objects(v, b->object()) : tensor_objects(b->object(), v);
  return GradedModuleObject(b, side, std::move(obj), std::move(action));
}

GradedModuleObject regular_module(const AlgebraObjectPtr& b, Side side) {
  return free_module(b, side, GradedObject::unit(b->group_ptr()));
}

GradedModuleObject zero_module(const AlgebraObjectPtr& b, Side side) {
  return GradedModuleObject(b, side, GradedObject::zero(b->group_ptr()),
                            std::vector<Matrix>(b->dim(), Matrix(b->field(), 0, 0)));
}

GradedModuleObject direct_sum(const GradedModuleObject& m, const GradedModuleObject& n) {
  if (m.side() != n.side() || !same_algebra_object(m.algebra_object(), n.algebra_object())) {
    throw StructureMismatch("direct_sum: module objects over different algebras or sides");
  }
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < m.algebra_object().dim(); ++i) {
    action.push_back(direct_sum(m.module().action(i), n.module().action(i)));
  }
  return GradedModuleObject(m.algebra_object_ptr(), m.side(), direct_sum(m.object(), n.object()),
                            std::move(action));
}

GradedModuleObject change_of_basis(const GradedModuleObject& m, const Matrix& p) {
  if (!is_grade_preserving(p, m.object(), m.object())) {
    throw ValidationError("change_of_basis: matrix mixes grades");
  }
  const auto inv = inverse(p);
  if (!inv) throw PreconditionError("change_of_basis: matrix is singular");
  std::vector<Matrix> action;
  for (const auto& a : m.module().actions()) action.push_back(*inv * a * p);
  return GradedModuleObject(m.algebra_object_ptr(), m.side(), m.object(), std::move(action));
}

GradedModuleObject act_on_module_object(const GradedObject& c, const GradedModuleObject& m) {
  if (m.side() != Side::right) throw StructureMismatch("c ⊗ m needs a right module object");
  require_same_group(c, m.object(), "act_on_module_object");
  const Matrix ic = Matrix::identity(m.field(), c.dim());
  std::vector<Matrix> action;
  for (const auto& a : m.module().actions()) action.push_back(kron(ic, a));
  return GradedModuleObject(m.algebra_object_ptr(), Side::right, tensor_objects(c, m.object()),
                            std::move(action));
}

GradedModuleObject act_on_module_object(const GradedModuleObject& x, const GradedObject& c) {
  if (x.side() != Side::left) throw StructureMismatch("x ⊗ c needs a left module object");
  require_same_group(c, x.object(), "act_on_module_object");
  const Matrix ic = Matrix::identity(x.field(), c.dim());
  std::vector<Matrix> action;
  for (const auto& a : x.module().actions()) action.push_back(kron(a, ic));
  return GradedModuleObject(x.algebra_object_ptr(), Side::left, tensor_objects(x.object(), c),
                            std::move(action));
}

namespace {

std::vector<const Matrix*> pointers(const std::vector<Matrix>& ms) {
  std::vector<const Matrix*> out;
  for (const auto& m : ms) out.push_back(&m);
  return out;
}

void require_compatible(const GradedModuleObject& m, const GradedModuleObject& n, const char* where) {
  if (m.side() != n.side()) throw StructureMismatch(std::string(where) + ": sides differ");
  if (!same_algebra_object(m.algebra_object(), n.algebra_object())) {
    throw StructureMismatch(std::string(where) + ": module objects over different algebras");
  }
}

}  // namespace

std::vector<Matrix> graded_hom(const GradedModuleObject& m, const GradedModuleObject& n) {
  return graded_hom_shifted(m, n, m.object().group().identity());
}

std::vector<Matrix> graded_hom_shifted(const GradedModuleObject& m, const GradedModuleObject& n,
                                       std::size_t g) {
  require_compatible(m, n, "graded_hom");
  const FiniteGroup& k = m.object().group();
  std::vector<std::size_t> src;
  for (std::size_t c = 0; c < m.dim(); ++c) {
    src.push_back(m.side() == Side::right ? k.mul(g, m.object().grade(c))
                                          : k.mul(m.object().grade(c), g));
  }
  return intertwiner_basis(m.field(), m.dim(), n.dim(), pointers(m.module().generator_actions()),
                           pointers(n.module().generator_actions()), &src, &n.object().grades());
}

namespace {

// Cokernel grade by grade; `block(g, rows)` yields the columns spanning the
// image inside grade g, restricted to those rows.
template <class Block>
GradedCokernel cokernel_by_grade(const Field& field, const GradedObject& dst, Block block) {
  std::vector<std::size_t> grades;
  std::vector<Vector> rows;
  for (std::size_t g = 0; g < dst.group().order(); ++g) {
    const auto r = dst.indices_of_grade(g);
    if (r.empty()) continue;
    const Cokernel q = cokernel_of_columns(field, r.size(), block(g, r));
    for (std::size_t i = 0; i < q.dim; ++i) {
      Vector row = zero_vector(field, dst.dim());
      for (std::size_t k = 0; k < r.size(); ++k) row[r[k]] = q.projection(i, k);
      rows.push_back(std::move(row));
      grades.push_back(g);
    }
  }
  return GradedCokernel{GradedObject(dst.group_ptr(), std::move(grades)),
                        Matrix::from_rows(field, dst.dim(), rows)};
}

}  // namespace

GradedCokernel graded_cokernel(const Matrix& f, const GradedObject& src, const GradedObject& dst) {
  if (!is_grade_preserving(f, src, dst)) {
    throw ValidationError("graded_cokernel: map is not grade preserving");
  }
  return cokernel_by_grade(f.field(), dst, [&](std::size_t g, const std::vector<std::size_t>& r) {
    return std::vector<Matrix>{f.select(r, src.indices_of_grade(g))};
  });
}

GradedCokernel graded_cokernel_of_span(const Field& field, const std::vector<Matrix>& blocks,
                                       const GradedObject& dst) {
  return cokernel_by_grade(field, dst, [&](std::size_t, const std::vector<std::size_t>& r) {
    std::vector<std::size_t> all;
    std::vector<Matrix> out;
    for (const auto& b : blocks) {
      if (b.rows() != dst.dim()) throw DimensionMismatch("graded_cokernel_of_span");
      all.resize(b.cols());
      for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
      out.push_back(b.select(r, all));
    }
    return out;
  });
}

QuotientModule quotient_module(const GradedModuleObject& n, const Matrix& f,
                               const GradedObject& src) {
  GradedCokernel q = graded_cokernel(f, src, n.object());
  std::vector<Matrix> action;
  if (q.object.dim() == 0) {
    action.assign(n.algebra_object().dim(), Matrix(n.field(), 0, 0));
  } else {
    const Matrix section = right_inverse(q.projection);
    for (const auto& a : n.module().actions()) {
      if (!(q.projection * a * f).is_zero()) {
        throw ValidationError("quotient_module: the image is not a submodule");
      }
      action.push_back(q.projection * a * section);
    }
  }
  return QuotientModule{
      GradedModuleObject(n.algebra_object_ptr(), n.side(), q.object, std::move(action)),
      std::move(q.projection)};
}

// ---------------------------------------------------------------- bimodule objects

GradedBimoduleObject::GradedBimoduleObject(AlgebraObjectPtr left, AlgebraObjectPtr right,
                                           GradedObject object, std::vector<Matrix> left_action,
                                           std::vector<Matrix> right_action)
    : left_(std::move(left)),
      right_(std::move(right)),
      object_(std::move(object)),
      bimodule_(left_->algebra_ptr(), right_->algebra_ptr(), object_.dim(), std::move(left_action),
                std::move(right_action)) {
  require_same_group(object_, left_->object(), "GradedBimoduleObject");
  require_same_group(object_, right_->object(), "GradedBimoduleObject");
}

GradedModuleObject GradedBimoduleObject::as_left() const {
  return GradedModuleObject(left_, Side::left, object_, bimodule_.as_left().actions());
}

GradedModuleObject GradedBimoduleObject::as_right() const {
  return GradedModuleObject(right_, Side::right, object_, bimodule_.as_right().actions());
}

CheckReport validate_bimodule_object(const GradedBimoduleObject& x) {
  CheckReport report("bimodule object");
  report.merge(validate_module_object(x.as_left()));
  report.merge(validate_module_object(x.as_right()));
  std::string failure;
  const auto& ls = x.bimodule().as_left().generator_actions();
  const auto& rs = x.bimodule().as_right().generator_actions();
  for (std::size_t i = 0; i < ls.size() && failure.empty(); ++i) {
    for (std::size_t j = 0; j < rs.size(); ++j) {
      if (ls[i] * rs[j] != rs[j] * ls[i]) {
        failure = "left generator " + std::to_string(i) + " and right generator " +
                  std::to_string(j) + " do not commute";
        break;
      }
    }
  }
  report.add("actions commute", failure.empty(), failure);
  return report;
}

std::vector<Matrix> graded_hom(const GradedBimoduleObject& m, const GradedBimoduleObject& n) {
  if (!same_algebra_object(m.left_algebra(), n.left_algebra()) ||
      !same_algebra_object(m.right_algebra(), n.right_algebra())) {
    throw StructureMismatch("graded_hom: bimodule objects over different algebras");
  }
  auto src = pointers(m.bimodule().as_left().generator_actions());
  auto dst = pointers(n.bimodule().as_left().generator_actions());
  for (const auto& a : m.bimodule().as_right().generator_actions()) src.push_back(&a);
  for (const auto& a : n.bimodule().as_right().generator_actions()) dst.push_back(&a);
  return intertwiner_basis(m.field(), m.dim(), n.dim(), src, dst, &m.object().grades(),
                           &n.object().grades());
}

bool is_module_map(const Matrix& f, const GradedModuleObject& m, const GradedModuleObject& n) {
  if (!is_grade_preserving(f, m.object(), n.object())) return false;
  const auto& a = m.module().generator_actions();
  const auto& b = n.module().generator_actions();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f * a[i] != b[i] * f) return false;
  }
  return true;
}

bool is_bimodule_map(const Matrix& f, const GradedBimoduleObject& m,
                     const GradedBimoduleObject& n) {
  return is_module_map(f, m.as_left(), n.as_left()) && is_module_map(f, m.as_right(), n.as_right());
}

// ---------------------------------------------------------------- exactness

CheckReport check_short_exact(const ShortExactSequence& s) {
  CheckReport report("short exact sequence");
  report.add("f is a module map", is_module_map(s.f, s.a, s.b));
  report.add("g is a module map", is_module_map(s.g, s.b, s.c));
  const std::size_t rf = rank(s.f);
  const std::size_t rg = rank(s.g);
  report.add("f injective", rf == s.a.dim(),
             "rank f = " + std::to_string(rf) + ", dim a = " + std::to_string(s.a.dim()));
  report.add("g surjective", rg == s.c.dim(),
             "rank g = " + std::to_string(rg) + ", dim c = " + std::to_string(s.c.dim()));
  const bool composite_zero = s.b.dim() == 0 || (s.g * s.f).is_zero();
  report.add("g f = 0", composite_zero);
  report.add("dim b = dim a + dim c", s.b.dim() == s.a.dim() + s.c.dim(),
             std::to_string(s.b.dim()) + " vs " + std::to_string(s.a.dim()) + " + " +
                 std::to_string(s.c.dim()));
  return report;
}

CheckReport exactness_probe(const GradedObject& c, const ShortExactSequence& s) {
  const CheckReport input = check_short_exact(s);
  if (!input.passed()) {
    throw PreconditionError("exactness_probe: input sequence is not exact (" +
                            input.first_failure()->name + ")");
  }
  const Matrix ic = Matrix::identity(s.a.field(), c.dim());
  const bool right = s.a.side() == Side::right;
  auto act = [&](const GradedModuleObject& m) {
    return right ? act_on_module_object(c, m) : act_on_module_object(m, c);
  };
  const ShortExactSequence t{act(s.a), act(s.b), act(s.c), right ? kron(ic, s.f) : kron(s.f, ic),
                             right ? kron(ic, s.g) : kron(s.g, ic)};
  CheckReport report("tensored sequence");
  report.merge(check_short_exact(t));
  return report;
}

}  // namespace balcat
