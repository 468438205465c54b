#include "balcat/balanced/balanced.hpp"

#include "balcat/common/errors.hpp"
#include "balcat/modcat/modcat.hpp"

namespace balcat {

namespace {

void add_term(SparseVector& v, std::size_t index, const Scalar& value) {
  if (!value.is_zero()) v.emplace_back(index, value);
}

// Merge repeated indices and drop zeros.
SparseVector normalize(const Field& f, std::size_t n, const SparseVector& v) {
  return sparsify(densify(f, n, v));
}

FinAlgebra build_enveloping(const GradedAlgebraObject& a, const GradedAlgebraObject& b,
                            std::vector<SparseVector> hint_left, std::vector<SparseVector> hint_mid,
                            std::vector<SparseVector> hint_right, const Vector& unit) {
  const FiniteGroup& k = a.group();
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const std::size_t nk = k.order();
  const std::size_t n = na * nk * nb;
  auto index = [&](std::size_t i, std::size_t h, std::size_t j) { return (i * nk + h) * nb + j; };
  std::vector<SparseVector> products(n * n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t kk = 0; kk < na; ++kk) {
      const SparseVector& pa = a.algebra().product(i, kk);
      if (pa.empty()) continue;
      for (std::size_t l = 0; l < nb; ++l) {
        for (std::size_t j = 0; j < nb; ++j) {
          const SparseVector& pb = b.algebra().product(l, j);
          if (pb.empty()) continue;
          for (std::size_t h2 = 0; h2 < nk; ++h2) {
            const std::size_t h = k.mul(k.mul(a.grade(kk), h2), b.grade(l));
            SparseVector& out = products[index(i, h, j) * n + index(kk, h2, l)];
            for (const auto& [m, cm] : pa)
              for (const auto& [q, cq] : pb) add_term(out, index(m, h2, q), cm * cq);
          }
        }
      }
    }
  }
  for (auto& p : products) {
    if (p.size() > 1) p = normalize(a.field(), n, p);
  }
  std::vector<SparseVector> hint;
  for (auto* part : {&hint_left, &hint_mid, &hint_right})
    for (auto& g : *part) hint.push_back(std::move(g));
  return FinAlgebra(a.field(), n, std::move(products), unit,
                    {"E(" + a.algebra().name() + ", " + b.algebra().name() + ")",
                     a.algebra().maschke_risk() || b.algebra().maschke_risk(), std::move(hint)});
}

}  // namespace

// ---------------------------------------------------------------- enveloping algebra

EnvelopingAlgebra::EnvelopingAlgebra(AlgebraObjectPtr a, AlgebraObjectPtr b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (!same_group(a_->group(), b_->group())) {
    throw StructureMismatch("enveloping_algebra: A and B are graded by different groups");
  }
  if (a_->field() != b_->field()) throw FieldMismatch("enveloping_algebra: fields differ");
  const Field& f = a_->field();
  const std::size_t nk = group().order();
  const std::size_t n = a_->dim() * nk * b_->dim();
  Vector unit = zero_vector(f, n);
  for (std::size_t h = 0; h < nk; ++h)
    for (const auto& [idx, c] : grade_projector(h)) unit[idx] += c;
  std::vector<SparseVector> left, mid, right;
  for (const auto& g : a_->algebra().generators()) {
    SparseVector v;
    for (const auto& [i, c] : g)
      for (const auto& [idx, d] : from_left(i)) add_term(v, idx, c * d);
    left.push_back(normalize(f, n, v));
  }
  for (std::size_t h = 0; h < nk; ++h) mid.push_back(grade_projector(h));
  for (const auto& g : b_->algebra().generators()) {
    SparseVector v;
    for (const auto& [j, c] : g)
      for (const auto& [idx, d] : from_right(j)) add_term(v, idx, c * d);
    right.push_back(normalize(f, n, v));
  }
  algebra_ = share(build_enveloping(*a_, *b_, std::move(left), std::move(mid), std::move(right), unit));
}

std::size_t EnvelopingAlgebra::index(std::size_t i, std::size_t h, std::size_t j) const {
  return (i * group().order() + h) * b_->dim() + j;
}

EnvelopingAlgebra::Triple EnvelopingAlgebra::triple(std::size_t index) const {
  const std::size_t nb = b_->dim();
  const std::size_t nk = group().order();
  return Triple{index / (nb * nk), (index / nb) % nk, index % nb};
}

SparseVector EnvelopingAlgebra::grade_projector(std::size_t h) const {
  SparseVector v;
  const Vector& ua = a_->algebra().unit();
  const Vector& ub = b_->algebra().unit();
  for (std::size_t i = 0; i < ua.size(); ++i) {
    if (ua[i].is_zero()) continue;
    for (std::size_t j = 0; j < ub.size(); ++j) add_term(v, index(i, h, j), ua[i] * ub[j]);
  }
  return v;
}

SparseVector EnvelopingAlgebra::from_left(std::size_t i) const {
  SparseVector v;
  const Vector& ub = b_->algebra().unit();
  for (std::size_t h = 0; h < group().order(); ++h)
    for (std::size_t j = 0; j < ub.size(); ++j) add_term(v, index(i, h, j), ub[j]);
  return v;
}

SparseVector EnvelopingAlgebra::from_right(std::size_t j) const {
  SparseVector v;
  const Vector& ua = a_->algebra().unit();
  for (std::size_t i = 0; i < ua.size(); ++i)
    for (std::size_t h = 0; h < group().order(); ++h) add_term(v, index(i, h, j), ua[i]);
  return v;
}

AlgModule EnvelopingAlgebra::to_module(const GradedBimoduleObject& x) const {
  if (!same_algebra_object(x.left_algebra(), *a_) || !same_algebra_object(x.right_algebra(), *b_)) {
    throw StructureMismatch("EnvelopingAlgebra::to_module: bimodule over other algebras");
  }
  const Field& f = a_->field();
  const std::size_t n = x.dim();
  const std::size_t nk = group().order();
  const auto& ls = x.bimodule().as_left().actions();
  const auto& rs = x.bimodule().as_right().actions();
  std::vector<Matrix> action(algebra_->dim());
  for (std::size_t i = 0; i < a_->dim(); ++i) {
    for (std::size_t j = 0; j < b_->dim(); ++j) {
      const Matrix lr = ls[i] * rs[j];
      for (std::size_t h = 0; h < nk; ++h) {
        Matrix m(f, n, n);
        for (std::size_t c : x.object().indices_of_grade(h))
          for (std::size_t r = 0; r < n; ++r) m(r, c) = lr(r, c);
        action[index(i, h, j)] = std::move(m);
      }
    }
  }
  return AlgModule(algebra_, Side::left, n, std::move(action));
}

GradedBimoduleObject EnvelopingAlgebra::to_bimodule(const AlgModule& m) const {
  if (m.side() != Side::left || !same_algebra(m.algebra(), *algebra_)) {
    throw StructureMismatch("EnvelopingAlgebra::to_bimodule: not a left E-module");
  }
  const Field& f = a_->field();
  const std::size_t n = m.dim();
  const std::size_t nk = group().order();
  std::vector<Matrix> proj;
  bool diagonal = true;
  for (std::size_t h = 0; h < nk; ++h) {
    proj.push_back(m.action_of(grade_projector(h)));
    const Matrix& p = proj.back();
    for (std::size_t r = 0; r < n && diagonal; ++r)
      for (std::size_t c = 0; c < n && diagonal; ++c) {
        if (r != c && !p(r, c).is_zero()) diagonal = false;
        if (r == c && !p(r, c).is_zero() && !p(r, c).is_one()) diagonal = false;
      }
  }
  const AlgModule* src = &m;
  std::optional<AlgModule> moved;
  if (!diagonal) {
    std::vector<Vector> cols;
    for (const auto& p : proj) {
      RowSpace image(f, n);
      for (std::size_t c = 0; c < n; ++c) image.insert(p.column(c));
      for (auto& v : image.basis()) cols.push_back(std::move(v));
    }
    if (cols.size() != n) {
      throw ValidationError("to_bimodule: grade projectors do not decompose the module");
    }
    moved = change_of_basis(m, Matrix::from_columns(f, n, cols));
    src = &*moved;
    for (std::size_t h = 0; h < nk; ++h) proj[h] = src->action_of(grade_projector(h));
  }
  std::vector<std::size_t> grades(n, nk);
  for (std::size_t h = 0; h < nk; ++h)
    for (std::size_t r = 0; r < n; ++r)
      if (proj[h](r, r).is_one()) grades[r] = h;
  for (std::size_t r = 0; r < n; ++r) {
    if (grades[r] == nk) throw ValidationError("to_bimodule: basis vector in no grade");
  }
  std::vector<Matrix> ls, rs;
  for (std::size_t i = 0; i < a_->dim(); ++i) ls.push_back(src->action_of(from_left(i)));
  for (std::size_t j = 0; j < b_->dim(); ++j) rs.push_back(src->action_of(from_right(j)));
  return GradedBimoduleObject(a_, b_, GradedObject(a_->group_ptr(), std::move(grades)), std::move(ls),
                              std::move(rs));
}

std::shared_ptr<const EnvelopingAlgebra> enveloping_algebra(const AlgebraObjectPtr& a,
                                                            const AlgebraObjectPtr& b) {
  for (const auto* x : {a.get(), b.get()}) {
    const CheckReport r = validate_algebra_object(*x);
    if (!r.passed()) throw ValidationError("enveloping_algebra: " + r.first_failure()->name);
  }
  auto e = std::make_shared<const EnvelopingAlgebra>(a, b);
  const CheckReport r = validate_algebra(e->algebra());
  if (!r.passed()) {
    throw ValidationError("enveloping_algebra: E fails " + r.first_failure()->name + " " +
                          r.first_failure()->detail);
  }
  return e;
}

BalancedProduct balanced_product(const AlgebraObjectPtr& a, const AlgebraObjectPtr& b,
                                 bool field_is_splitting) {
  BalancedProduct bp;
  bp.group = a->group_ptr();
  bp.a = a;
  bp.b = b;
  bp.enveloping = enveloping_algebra(a, b);
  bp.certificate = semisimplicity_certificate(bp.enveloping->algebra());
  if (bp.certificate.certified() && field_is_splitting) {
    bp.simple_count = split_simple_count(bp.enveloping->algebra(), true);
  }
  return bp;
}

std::size_t simple_count_balanced(const BalancedProduct& bp) {
  if (!bp.simple_count) {
    throw PreconditionError(bp.certificate.certified()
                                ? "simple count needs a field asserted to split E"
                                : "E is not certified semisimple");
  }
  return *bp.simple_count;
}

// ---------------------------------------------------------------- box and balancing

GradedBimoduleObject box_object(const GradedModuleObject& x, const GradedModuleObject& y) {
  if (x.side() != Side::left || y.side() != Side::right) {
    throw StructureMismatch("box_object: needs a left module and a right module");
  }
  require_same_group(x.object(), y.object(), "box_object");
  if (x.field() != y.field()) throw FieldMismatch("box_object: fields differ");
  const Field& f = x.field();
  const Matrix ix = Matrix::identity(f, x.dim());
  const Matrix iy = Matrix::identity(f, y.dim());
  std::vector<Matrix> ls, rs;
  for (const auto& l : x.module().actions()) ls.push_back(kron(l, iy));
  for (const auto& r : y.module().actions()) rs.push_back(kron(ix, r));
  return GradedBimoduleObject(x.algebra_object_ptr(), y.algebra_object_ptr(),
                              tensor_objects(x.object(), y.object()), std::move(ls), std::move(rs));
}

GradedBimoduleObject free_bimodule(const AlgebraObjectPtr& a, const AlgebraObjectPtr& b) {
  return box_object(regular_module(a, Side::left), regular_module(b, Side::right));
}

namespace {

// The associator (u ⊗ v) ⊗ w -> u ⊗ (v ⊗ w), by tracking each basis vector.
Matrix associator(const Field& f, std::size_t du, std::size_t dv, std::size_t dw) {
  const std::size_t n = du * dv * dw;
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t k = 0; k < dv; ++k)
      for (std::size_t j = 0; j < dw; ++j) m(i * (dv * dw) + (k * dw + j), (i * dv + k) * dw + j) = f.one();
  return m;
}

}  // namespace

BalancingWitness canonical_balancing(const GradedModuleObject& x, const GradedObject& c,
                                     const GradedModuleObject& y) {
  const Field& f = x.field();
  GradedBimoduleObject source = box_object(act_on_module_object(x, c), y);
  GradedBimoduleObject target = box_object(x, act_on_module_object(c, y));
  Matrix beta = associator(f, x.dim(), c.dim(), y.dim());
  CheckReport report("balancing");
  report.add("beta is a bimodule map", is_bimodule_map(beta, source, target));
  report.add("beta is invertible", rank(beta) == source.dim() && source.dim() == target.dim());
  GradedMorphism m(source.object(), target.object(), std::move(beta));
  return BalancingWitness{std::move(source), std::move(target), std::move(m), std::move(report)};
}

CheckReport pentagon_check(const GradedModuleObject& x, const GradedObject& c, const GradedObject& c2,
                           const GradedModuleObject& y) {
  const Field& f = x.field();
  CheckReport report("pentagon");
  const auto xc = act_on_module_object(x, c);
  const auto c2y = act_on_module_object(c2, y);
  const auto cc2 = tensor_objects(c, c2);

  const BalancingWitness b1 = canonical_balancing(xc, c2, y);
  const BalancingWitness b2 = canonical_balancing(x, c, c2y);
  const BalancingWitness b3 = canonical_balancing(x, cc2, y);
  report.merge(b1.report);
  report.merge(b2.report);
  report.merge(b3.report);
  const Matrix route1 = b2.beta.matrix() * b1.beta.matrix();

  // module associators of M and N
  const Matrix m_assoc = associator(f, x.dim(), c.dim(), c2.dim());
  const Matrix n_assoc = associator(f, c.dim(), c2.dim(), y.dim());
  const Matrix left = kron(m_assoc, Matrix::identity(f, y.dim()));
  const Matrix right = kron(Matrix::identity(f, x.dim()), n_assoc);
  const auto from = box_object(act_on_module_object(xc, c2), y);
  const auto to = box_object(x, act_on_module_object(c, c2y));
  report.add("assoc ⊠ id is a bimodule map", is_bimodule_map(left, from, b3.source));
  report.add("id ⊠ assoc is a bimodule map", is_bimodule_map(right, b3.target, to));
  report.add("routes share endpoints", b1.source.object() == from.object() && b2.target.object() == to.object());
  const Matrix route2 = right * b3.beta.matrix() * left;
  report.add("pentagon closes", route1 == route2);
  return report;
}

CheckReport triangle_check(const GradedModuleObject& x, const GradedModuleObject& y) {
  const Field& f = x.field();
  CheckReport report("triangle");
  const GradedObject one = GradedObject::unit(x.object().group_ptr());
  const BalancingWitness b = canonical_balancing(x, one, y);
  report.merge(b.report);
  // unitors x ⊗ 1 -> x and 1 ⊗ y -> y
  Matrix r(f, x.dim(), x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) r(i, i * 1 + 0) = f.one();
  Matrix l(f, y.dim(), y.dim());
  for (std::size_t j = 0; j < y.dim(); ++j) l(j, 0 * y.dim() + j) = f.one();
  report.add("right unitor is a module map", is_module_map(r, act_on_module_object(x, one), x));
  report.add("left unitor is a module map", is_module_map(l, act_on_module_object(one, y), y));
  const Matrix lhs = kron(Matrix::identity(f, x.dim()), l) * b.beta.matrix();
  const Matrix rhs = kron(r, Matrix::identity(f, y.dim()));
  report.add("triangle closes", lhs == rhs);
  return report;
}

HomFormula hom_formula_check(const GradedModuleObject& x, const GradedModuleObject& x2,
                             const GradedModuleObject& y, const GradedModuleObject& y2) {
  HomFormula out;
  out.lhs = graded_hom(box_object(x, y), box_object(x2, y2)).size();
  const auto dm = internal_hom(x, x2).value().dims();
  const auto dn = internal_hom(y, y2).value().dims();
  const FiniteGroup& k = x.object().group();
  for (std::size_t g = 0; g < k.order(); ++g) out.rhs += dm[g] * dn[k.inv(g)];
  return out;
}

// ---------------------------------------------------------------- coequalizer

namespace {

// X ⊗ B -> X, (x, b) -> x . b, index k * dim B + j.
Matrix right_action_map(const GradedBimoduleObject& x) {
  const auto& rs = x.bimodule().as_right().actions();
  const std::size_t nx = x.dim();
  const std::size_t nb = rs.size();
  Matrix m(x.field(), nx, nx * nb);
  for (std::size_t k = 0; k < nx; ++k)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t r = 0; r < nx; ++r) m(r, k * nb + j) = rs[j](r, k);
  return m;
}

// A ⊗ X -> X, (a, x) -> a . x, index i * dim X + k.
Matrix left_action_map(const GradedBimoduleObject& x) {
  const auto& ls = x.bimodule().as_left().actions();
  const std::size_t nx = x.dim();
  const std::size_t na = ls.size();
  Matrix m(x.field(), nx, na * nx);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < nx; ++k)
      for (std::size_t r = 0; r < nx; ++r) m(r, i * nx + k) = ls[i](r, k);
  return m;
}

// B ⊗ B -> B.
Matrix multiplication_map(const FinAlgebra& b) {
  const std::size_t n = b.dim();
  Matrix m(b.field(), n, n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l)
      for (const auto& [q, c] : b.product(j, l)) m(q, j * n + l) = c;
  return m;
}

// (x . b) ⊗ b' - x ⊗ b b' on X ⊗ B ⊗ B.
Matrix bar_differential(const GradedBimoduleObject& x) {
  const Field& f = x.field();
  const FinAlgebra& b = x.right_algebra().algebra();
  return kron(right_action_map(x), Matrix::identity(f, b.dim())) -
         kron(Matrix::identity(f, x.dim()), multiplication_map(b));
}

Matrix safe_section(const Matrix& p) {
  if (p.rows() == 0) return Matrix(p.field(), p.cols(), 0);
  return right_inverse(p);
}

}  // namespace

CheckReport coequalizer_presentation(const GradedBimoduleObject& x) {
  const Field& f = x.field();
  CheckReport report("coequalizer presentation");
  const AlgebraObjectPtr& b = x.right_ptr();
  const FinAlgebra& bb = b->algebra();
  const GradedBimoduleObject xb = box_object(x.as_left(), regular_module(b, Side::right));
  const Matrix mu = right_action_map(x);
  report.add("action X ⊗ B -> X is a bimodule map", is_bimodule_map(mu, xb, x));
  // d0 = mu ⊗ id and d1 = id ⊗ m are bimodule maps once mu and m are.
  std::vector<Matrix> ls, rs;
  for (std::size_t i = 0; i < bb.dim(); ++i) {
    ls.push_back(bb.left_multiplication(i));
    rs.push_back(bb.right_multiplication(i));
  }
  const GradedBimoduleObject breg(b, b, b->object(), std::move(ls), std::move(rs));
  report.add("multiplication B ⊗ B -> B is a bimodule map",
             is_bimodule_map(multiplication_map(bb), free_bimodule(b, b), breg));

  // im(d0 - d1) is spanned by x.c ⊗ b' - x ⊗ c b' for c running over the
  // homogeneous components of the generators of B: x.(cd) ⊗ b' - x ⊗ cd b'
  // is the relation for (x.c, d, b') plus the one for (x, c, d b').
  const Matrix ix = Matrix::identity(f, x.dim());
  const Matrix ib = Matrix::identity(f, bb.dim());
  std::vector<Matrix> blocks;
  for (const auto& g : bb.generators()) {
    std::vector<SparseVector> parts(x.object().group().order());
    for (const auto& [j, c] : g) parts[b->grade(j)].emplace_back(j, c);
    for (const auto& part : parts) {
      if (part.empty()) continue;
      Vector dense = zero_vector(f, bb.dim());
      for (const auto& [j, c] : part) dense[j] = c;
      blocks.push_back(kron(x.bimodule().as_right().action_of(part), ib) -
                       kron(ix, bb.left_multiplication(dense)));
    }
  }
  bool coequalizes = true;
  for (const auto& blk : blocks) coequalizes = coequalizes && (mu * blk).is_zero();
  report.add("the action coequalizes", coequalizes);
  const GradedCokernel q = graded_cokernel_of_span(f, blocks, xb.object());
  if (xb.dim() * bb.dim() <= 400) {
    // small instances: the generator relations span all of im(d0 - d1)
    const Matrix delta = bar_differential(x);
    report.add("generator relations span the image of δ", rank(delta) + q.object.dim() == xb.dim(),
               "rank δ " + std::to_string(rank(delta)) + ", dim coker " + std::to_string(q.object.dim()));
  }
  const Matrix section = safe_section(q.projection);
  const Matrix iso = mu * section;
  report.add("action factors through the cokernel", iso * q.projection == mu);
  bool equivariant = is_grade_preserving(iso, q.object, x.object());
  auto intertwines = [&](const AlgModule& on_xb, const AlgModule& on_x) {
    for (std::size_t i = 0; i < on_xb.generator_actions().size(); ++i) {
      const Matrix induced = q.projection * (on_xb.generator_actions()[i] * section);
      if (iso * induced != on_x.generator_actions()[i] * iso) return false;
    }
    return true;
  };
  equivariant = equivariant && intertwines(xb.bimodule().as_left(), x.bimodule().as_left()) &&
                intertwines(xb.bimodule().as_right(), x.bimodule().as_right());
  report.add("induced map is a bimodule map", equivariant);
  const std::size_t r = rank(iso);
  report.add("coker(δ) -> X is an isomorphism", r == x.dim() && q.object.dim() == x.dim(),
             "dim coker " + std::to_string(q.object.dim()) + ", rank " + std::to_string(r) +
                 ", dim X " + std::to_string(x.dim()));
  return report;
}

// ---------------------------------------------------------------- functors W ⊗_E -

FunctorValue apply_functor(const AlgBimodule& w, const AlgModule& m) {
  if (m.side() != Side::left || !same_algebra(w.right_algebra(), m.algebra())) {
    throw StructureMismatch("apply_functor: module is not over the right algebra of W");
  }
  const Cokernel q = tensor_over_algebra(w.as_right(), m);
  Matrix section = safe_section(q.projection);
  const Matrix im = Matrix::identity(m.algebra().field(), m.dim());
  std::vector<Matrix> action;
  for (const auto& d : w.as_left().actions()) action.push_back(q.projection * kron(d, im) * section);
  return FunctorValue{AlgModule(w.as_left().algebra_ptr(), Side::left, q.dim, std::move(action)),
                      q.projection, std::move(section)};
}

Matrix apply_functor(const AlgBimodule& w, const FunctorValue& src, const FunctorValue& dst,
                     const Matrix& phi) {
  const Matrix iw = Matrix::identity(w.left_algebra().field(), w.dim());
  return dst.projection * kron(iw, phi) * src.section;
}

namespace {

bool is_plain_module_map(const Matrix& f, const AlgModule& m, const AlgModule& n) {
  for (std::size_t i = 0; i < m.generator_actions().size(); ++i) {
    if (f * m.generator_actions()[i] != n.generator_actions()[i] * f) return false;
  }
  return true;
}

}  // namespace

Extension extend_balanced_functor(const EnvelopingAlgebra& e, const AlgBimodule& w,
                                  const GradedBimoduleObject& x) {
  if (!same_algebra(w.right_algebra(), e.algebra())) {
    throw ValidationError("extend_balanced_functor: W is not a right E-module");
  }
  const CheckReport wv = validate_bimodule(w);
  if (!wv.passed()) throw ValidationError("extend_balanced_functor: W fails " + wv.first_failure()->name);
  if (!same_algebra_object(x.left_algebra(), *e.left()) ||
      !same_algebra_object(x.right_algebra(), *e.right())) {
    throw StructureMismatch("extend_balanced_functor: X is over other algebras");
  }
  const Field& f = x.field();
  CheckReport report("balanced extension");

  const GradedModuleObject areg = regular_module(e.left(), Side::left);
  const GradedModuleObject breg = regular_module(e.right(), Side::right);
  const GradedModuleObject xa = x.as_left();
  const GradedObject& xo = x.object();
  const GradedModuleObject ax = act_on_module_object(areg, xo);
  const GradedModuleObject bb = act_on_module_object(e.right()->object(), breg);
  const GradedModuleObject xbb = act_on_module_object(xo, bb);
  const GradedModuleObject xb = act_on_module_object(xo, breg);

  auto F = [&](const GradedModuleObject& l, const GradedModuleObject& r) {
    return apply_functor(w, e.to_module(box_object(l, r)));
  };
  const FunctorValue f_ax_bb = F(ax, bb);
  const FunctorValue f_x_bb = F(xa, bb);
  const FunctorValue f_a_xbb = F(areg, xbb);
  const FunctorValue f_a_xb = F(areg, xb);
  const FunctorValue f_ax_b = F(ax, breg);
  const FunctorValue f_x_b = F(xa, breg);

  const Matrix aug = left_action_map(x);
  report.add("A ⊗ X -> X is a module map", is_module_map(aug, ax, xa));
  const Matrix delta2 = bar_differential(x);
  report.add("δ₂ is a module map", is_module_map(delta2, xbb, xb));
  const BalancingWitness beta_bb = canonical_balancing(areg, xo, bb);
  const BalancingWitness beta_b = canonical_balancing(areg, xo, breg);
  report.merge(beta_bb.report);
  report.merge(beta_b.report);
  const auto beta_b_inv = inverse(beta_b.beta.matrix());

  const Matrix tau_top = apply_functor(w, f_ax_bb, f_x_bb, kron(aug, Matrix::identity(f, bb.dim())));
  const Matrix tau_bottom = apply_functor(w, f_ax_b, f_x_b, kron(aug, Matrix::identity(f, breg.dim())));
  const Matrix phi = tau_bottom * apply_functor(w, f_a_xb, f_ax_b, *beta_b_inv) *
                     apply_functor(w, f_a_xbb, f_a_xb, kron(Matrix::identity(f, areg.dim()), delta2)) *
                     apply_functor(w, f_ax_bb, f_a_xbb, beta_bb.beta.matrix());

  const std::size_t tau_rank = rank(tau_top);
  report.add("F(A ⊗ X, B ⊗ B) -> F(X, B ⊗ B) is onto", tau_rank == f_x_bb.module.dim(),
             "rank " + std::to_string(tau_rank) + " of " + std::to_string(f_x_bb.module.dim()));
  const Matrix delta_bar = phi * safe_section(tau_top);
  report.add("δ̄ τ = Φ (Φ vanishes on ker τ)", delta_bar * tau_top == phi);
  report.add("δ̄ is a D-module map", is_plain_module_map(delta_bar, f_x_bb.module, f_x_b.module));

  const Cokernel q = cokernel(delta_bar);
  const Matrix section = safe_section(q.projection);
  std::vector<Matrix> action;
  for (const auto& d : f_x_b.module.actions()) action.push_back(q.projection * d * section);
  AlgModule value(f_x_b.module.algebra_ptr(), Side::left, q.dim, std::move(action));

  // comparison with the represented functor applied to X
  const FunctorValue oracle = apply_functor(w, e.to_module(x));
  const Matrix mu = right_action_map(x);
  report.add("X ⊗ B -> X is a bimodule map", is_bimodule_map(mu, box_object(xa, breg), x));
  const Matrix g_mu = apply_functor(w, f_x_b, oracle, mu);
  Matrix comparison = g_mu * section;
  report.add("F(X, B) -> W ⊗_E X kills im δ̄", (g_mu * delta_bar).is_zero());
  report.add("comparison factors through coker δ̄", comparison * q.projection == g_mu);
  report.add("comparison is a D-module map", is_plain_module_map(comparison, value, oracle.module));
  const std::size_t r = rank(comparison);
  report.add("coker δ̄ ≅ W ⊗_E X", r == q.dim && q.dim == oracle.module.dim(),
             "dim coker " + std::to_string(q.dim) + ", dim W ⊗_E X " +
                 std::to_string(oracle.module.dim()) + ", rank " + std::to_string(r));
  if (oracle.module.dim() > 0) {
    const std::size_t ends = hom_space(oracle.module, oracle.module).size();
    const std::size_t homs = hom_space(value, oracle.module).size();
    const std::string detail =
        "dim Hom " + std::to_string(homs) + ", dim End " + std::to_string(ends);
    if (ends == 1) {
      report.add("comparison unique up to scalar", homs == 1, detail);
    } else {
      report.add("comparison uniqueness not asserted (End has dimension > 1)", true, detail);
    }
  }
  return Extension{std::move(value), std::move(comparison), std::move(report)};
}

// ---------------------------------------------------------------- Deligne product and exactness

FinAlgebra deligne_product_plain(const FinAlgebra& a1, const FinAlgebra& a2) {
  if (a1.field() != a2.field()) throw FieldMismatch("deligne_product_plain: fields differ");
  return tensor_product_algebra(a1, a2);
}

namespace {

CheckReport boxed_sequence(const GradedBimoduleObject& ba, const GradedBimoduleObject& bb,
                           const GradedBimoduleObject& bc, const Matrix& f, const Matrix& g) {
  CheckReport report("box exactness");
  report.add("boxed f is a bimodule map", is_bimodule_map(f, ba, bb));
  report.add("boxed g is a bimodule map", is_bimodule_map(g, bb, bc));
  const std::size_t rf = rank(f);
  const std::size_t rg = rank(g);
  report.add("boxed f is injective", rf == ba.dim(), std::to_string(rf) + " of " + std::to_string(ba.dim()));
  report.add("boxed g is onto", rg == bc.dim(), std::to_string(rg) + " of " + std::to_string(bc.dim()));
  report.add("boxed g f = 0", (g * f).is_zero());
  report.add("dimensions add up", ba.dim() + bc.dim() == bb.dim(),
             std::to_string(ba.dim()) + " + " + std::to_string(bc.dim()) + " vs " + std::to_string(bb.dim()));
  return report;
}

void require_exact(const ShortExactSequence& s) {
  if (!check_short_exact(s).passed()) throw PreconditionError("box_exactness_probe: input not exact");
}

}  // namespace

CheckReport box_exactness_probe(const ShortExactSequence& s, const GradedModuleObject& y) {
  require_exact(s);
  const Matrix iy = Matrix::identity(y.field(), y.dim());
  return boxed_sequence(box_object(s.a, y), box_object(s.b, y), box_object(s.c, y), kron(s.f, iy),
                        kron(s.g, iy));
}

CheckReport box_exactness_probe(const GradedModuleObject& x, const ShortExactSequence& s) {
  require_exact(s);
  const Matrix ix = Matrix::identity(x.field(), x.dim());
  return boxed_sequence(box_object(x, s.a), box_object(x, s.b), box_object(x, s.c), kron(ix, s.f),
                        kron(ix, s.g));
}

}  // namespace balcat
