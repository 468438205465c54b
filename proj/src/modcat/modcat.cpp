#include "balcat/modcat/modcat.hpp"

#include <numeric>

#include "balcat/common/errors.hpp"

namespace balcat {

namespace {

void require_compatible(const GradedModuleObject& m, const GradedModuleObject& n, const char* where) {
  if (m.side() != n.side()) throw StructureMismatch(std::string(where) + ": sides differ");
  if (!same_algebra_object(m.algebra_object(), n.algebra_object())) {
    throw StructureMismatch(std::string(where) + ": module objects over different algebras");
  }
}

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

std::vector<std::size_t> range(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> out(end - begin);
  std::iota(out.begin(), out.end(), begin);
  return out;
}

// Rank of a family of matrices of one shape, as vectors.
std::size_t family_rank(const Field& f, const std::vector<Matrix>& ms, std::size_t width) {
  RowSpace space(f, width);
  for (const auto& m : ms) space.insert(flatten(m));
  return space.rank();
}

GradedModuleObject act(const GradedObject& c, const GradedModuleObject& m) {
  return m.side() == Side::right ? act_on_module_object(c, m) : act_on_module_object(m, c);
}

std::string grade_label(const FiniteGroup& k, std::size_t g) {
  return "k_" + std::to_string(g) + (g == k.identity() ? " (unit)" : "");
}

}  // namespace

// ---------------------------------------------------------------- internal hom

namespace {

GradedMorphism assemble_evaluation(const GradedModuleObject& source, const GradedModuleObject& target,
                                   const GradedObject& value, const std::vector<Matrix>& maps) {
  const Field& f = source.field();
  const std::size_t ns = source.dim();
  const std::size_t nv = value.dim();
  Matrix ev(f, target.dim(), nv * ns);
  const bool right = source.side() == Side::right;
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t i = 0; i < ns; ++i) {
      const std::size_t col = right ? v * ns + i : i * nv + v;
      for (std::size_t r = 0; r < target.dim(); ++r) ev(r, col) = maps[v](r, i);
    }
  }
  GradedObject src = right ? tensor_objects(value, source.object()) : tensor_objects(source.object(), value);
  return GradedMorphism(std::move(src), target.object(), std::move(ev));
}

GradedObject collect_components(const GradedModuleObject& source, const GradedModuleObject& target,
                                std::vector<Matrix>& maps) {
  const FiniteGroup& k = source.object().group();
  std::vector<std::size_t> grades;
  for (std::size_t g = 0; g < k.order(); ++g) {
    for (auto& m : graded_hom_shifted(source, target, g)) {
      maps.push_back(std::move(m));
      grades.push_back(g);
    }
  }
  return GradedObject(source.object().group_ptr(), std::move(grades));
}

}  // namespace

InternalHomValue::InternalHomValue(GradedModuleObject source, GradedModuleObject target)
    : source_(std::move(source)),
      target_(std::move(target)),
      value_(collect_components(source_, target_, maps_)),
      evaluation_(assemble_evaluation(source_, target_, value_, maps_)) {
  const std::size_t width = source_.dim() * target_.dim();
  for (std::size_t g = 0; g < value_.group().order(); ++g) {
    const auto idx = value_.indices_of_grade(g);
    if (idx.empty()) {
      coordinates_.emplace_back(std::nullopt);
      continue;
    }
    std::vector<Vector> basis;
    for (std::size_t v : idx) basis.push_back(flatten(maps_[v]));
    coordinates_.emplace_back(CoordinateSystem(source_.field(), width, std::move(basis)));
  }
}

std::optional<Vector> InternalHomValue::classify(std::size_t g, const Matrix& phi) const {
  if (phi.rows() != target_.dim() || phi.cols() != source_.dim()) return std::nullopt;
  Vector out = zero_vector(source_.field(), value_.dim());
  if (!coordinates_[g]) {
    if (phi.is_zero()) return out;
    return std::nullopt;
  }
  const auto c = coordinates_[g]->coordinates(flatten(phi));
  if (!c) return std::nullopt;
  const auto idx = value_.indices_of_grade(g);
  for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] = (*c)[k];
  return out;
}

InternalHomValue internal_hom(const GradedModuleObject& m1, const GradedModuleObject& m2) {
  require_compatible(m1, m2, "internal_hom");
  return InternalHomValue(m1, m2);
}

CheckReport verify_internal_hom_adjunction(const InternalHomValue& ihom,
                                           const std::vector<GradedObject>& extra) {
  const GradedModuleObject& s = ihom.source();
  const GradedModuleObject& t = ihom.target();
  const GradedObject& value = ihom.value();
  const Field& f = s.field();
  const FiniteGroup& k = value.group();
  CheckReport report("internal hom adjunction");
  report.add("evaluation is a module map",
             is_module_map(ihom.evaluation().matrix(), act(value, s), t));

  std::vector<std::pair<std::string, GradedObject>> cs;
  for (std::size_t g = 0; g < k.order(); ++g) {
    cs.emplace_back(grade_label(k, g), GradedObject::simple(value.group_ptr(), g));
  }
  for (std::size_t i = 0; i < extra.size(); ++i) cs.emplace_back("extra " + std::to_string(i), extra[i]);

  const bool right = s.side() == Side::right;
  for (const auto& [label, c] : cs) {
    require_same_group(c, value, "verify_internal_hom_adjunction");
    const GradedModuleObject cm = act(c, s);
    const std::size_t hom_m = graded_hom(cm, t).size();
    // grade-preserving c -> value: matrix units
    std::vector<Matrix> images;
    for (std::size_t v = 0; v < value.dim(); ++v) {
      for (std::size_t j = 0; j < c.dim(); ++j) {
        if (value.grade(v) != c.grade(j)) continue;
        Matrix unit(f, value.dim(), c.dim());
        unit(v, j) = f.one();
        const Matrix id = Matrix::identity(f, s.dim());
        images.push_back(ihom.evaluation().matrix() * (right ? kron(unit, id) : kron(id, unit)));
      }
    }
    report.add("dim Hom_C(c, IHom) = dim Hom_M(c.m1, m2) at " + label, images.size() == hom_m,
               std::to_string(images.size()) + " vs " + std::to_string(hom_m));
    bool maps_ok = true;
    for (const auto& img : images) maps_ok = maps_ok && is_module_map(img, cm, t);
    report.add("transposes are module maps at " + label, maps_ok);
    report.add("transposition is injective at " + label,
               family_rank(f, images, t.dim() * cm.dim()) == images.size());
  }
  return report;
}

// ---------------------------------------------------------------- cotensor

GradedModuleObject cotensor(const GradedObject& c, const GradedModuleObject& m) {
  require_same_group(c, m.object(), "cotensor");
  const GradedObject dual = dual_object_with_zigzag(c, m.field()).dual;
  return act(dual, m);
}

CheckReport verify_cotensor_adjunction(const GradedObject& c, const GradedModuleObject& m,
                                       const std::vector<GradedModuleObject>& ns) {
  require_same_group(c, m.object(), "verify_cotensor_adjunction");
  const Field& f = m.field();
  const Duality d = dual_object_with_zigzag(c, f);
  const GradedModuleObject mc = cotensor(c, m);
  const bool right = m.side() == Side::right;
  CheckReport report("cotensor adjunction");
  report.add("zigzag identities", d.zigzag.passed());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const GradedModuleObject& n = ns[i];
    require_compatible(n, m, "verify_cotensor_adjunction");
    const auto lhs = graded_hom(act(c, n), m);
    const auto rhs = graded_hom(n, mc);
    const std::string tag = " for n_" + std::to_string(i);
    report.add("dim Hom(c.n, m) = dim Hom(n, m^c)" + tag, lhs.size() == rhs.size(),
               std::to_string(lhs.size()) + " vs " + std::to_string(rhs.size()));
    const Matrix id_n = Matrix::identity(f, n.dim());
    const Matrix id_c = Matrix::identity(f, c.dim());
    // right: n -> c* c n -> c* m; left: n -> n c c* -> m c*
    const Matrix unit_side = right ? kron(d.coev_left.matrix(), id_n) : kron(id_n, d.coev.matrix());
    std::vector<Matrix> images;
    bool maps_ok = true;
    for (const auto& g : lhs) {
      images.push_back((right ? kron(id_c, g) : kron(g, id_c)) * unit_side);
      maps_ok = maps_ok && is_module_map(images.back(), n, mc);
    }
    report.add("transposes are module maps" + tag, maps_ok);
    report.add("transposition is injective" + tag,
               family_rank(f, images, mc.dim() * n.dim()) == images.size());
  }
  return report;
}

// ---------------------------------------------------------------- ostrik algebra

OstrikData ostrik_algebra_data(const GradedModuleObject& p) {
  if (p.dim() == 0) throw PreconditionError("ostrik_algebra: p is zero");
  InternalHomValue ihom = internal_hom(p, p);
  const GradedObject& value = ihom.value();
  const FiniteGroup& k = value.group();
  const Field& f = p.field();
  const std::size_t n = value.dim();
  const bool right = p.side() == Side::right;
  std::vector<SparseVector> products;
  products.reserve(n * n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      const Matrix composite = right ? ihom.maps()[v] * ihom.maps()[w] : ihom.maps()[w] * ihom.maps()[v];
      const auto c = ihom.classify(k.mul(value.grade(v), value.grade(w)), composite);
      if (!c) throw std::logic_error("ostrik_algebra: composite escapes the internal hom");
      products.push_back(sparsify(*c));
    }
  }
  const auto unit = ihom.classify(k.identity(), Matrix::identity(f, p.dim()));
  if (!unit) throw std::logic_error("ostrik_algebra: identity is not classified");
  FinAlgebra alg(f, n, std::move(products), *unit, {"IHom(p,p)", false, std::nullopt});
  AlgebraObjectPtr a = share(GradedAlgebraObject(value, share(std::move(alg))));
  return OstrikData{std::move(ihom), std::move(a)};
}

GradedAlgebraObject ostrik_algebra(const GradedModuleObject& p) {
  return *ostrik_algebra_data(p).algebra;
}

Matrix regular_identification(const OstrikData& data) {
  const GradedModuleObject& p = data.ihom.source();
  const GradedAlgebraObject& b = p.algebra_object();
  const GradedModuleObject reg = regular_module(p.algebra_object_ptr(), p.side());
  if (p.object() != reg.object() || p.module().actions() != reg.module().actions()) {
    throw PreconditionError("regular_identification: p is not the regular module");
  }
  Matrix t(p.field(), data.algebra->dim(), b.dim());
  for (std::size_t j = 0; j < b.dim(); ++j) {
    const Matrix mult = p.side() == Side::right ? b.algebra().left_multiplication(j)
                                                : b.algebra().right_multiplication(j);
    const auto c = data.ihom.classify(b.grade(j), mult);
    if (!c) throw std::logic_error("regular_identification: multiplication is not classified");
    for (std::size_t r = 0; r < c->size(); ++r) t(r, j) = (*c)[r];
  }
  return t;
}

// ---------------------------------------------------------------- generators and projectivity

CheckReport generator_check(const GradedModuleObject& p, const std::vector<GradedModuleObject>& xs) {
  CheckReport report("generator check");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const InternalHomValue ihom = internal_hom(p, xs[i]);
    const std::size_t r = rank(ihom.evaluation().matrix());
    report.add("IHom(p, x_" + std::to_string(i) + ") . p -> x_" + std::to_string(i) + " is onto",
               r == xs[i].dim(), "rank " + std::to_string(r) + " of " + std::to_string(xs[i].dim()));
  }
  return report;
}

CheckReport projectivity_probe(const GradedModuleObject& p, const ShortExactSequence& s) {
  if (!check_short_exact(s).passed()) {
    throw PreconditionError("projectivity_probe: the probe sequence is not exact");
  }
  const InternalHomValue ia = internal_hom(p, s.a);
  const InternalHomValue ib = internal_hom(p, s.b);
  const InternalHomValue ic = internal_hom(p, s.c);
  const FiniteGroup& k = p.object().group();
  CheckReport report("projectivity probe");
  bool classified = true;
  Matrix induced(p.field(), ic.value().dim(), ib.value().dim());
  for (std::size_t v = 0; v < ib.value().dim(); ++v) {
    const auto c = ic.classify(ib.value().grade(v), s.g * ib.maps()[v]);
    if (!c) {
      classified = false;
      continue;
    }
    for (std::size_t r = 0; r < c->size(); ++r) induced(r, v) = (*c)[r];
  }
  report.add("g . - maps IHom(p, b) into IHom(p, c)", classified);
  const std::size_t r = rank(induced);
  report.add("IHom(p, b) -> IHom(p, c) is onto", r == ic.value().dim(),
             "rank " + std::to_string(r) + " of " + std::to_string(ic.value().dim()));
  for (std::size_t g = 0; g < k.order(); ++g) {
    const std::size_t da = ia.component(g).size();
    const std::size_t db = ib.component(g).size();
    const std::size_t dc = ic.component(g).size();
    report.add("dimensions add up at " + grade_label(k, g), da + dc == db,
               std::to_string(da) + " + " + std::to_string(dc) + " vs " + std::to_string(db));
  }
  return report;
}

// ---------------------------------------------------------------- reconstruction

namespace {

void require_right(const OstrikData& data, const char* where) {
  if (data.ihom.side() != Side::right) {
    throw StructureMismatch(std::string(where) + ": only right module categories are supported");
  }
}

GradedModuleObject ihom_module(const OstrikData& data, const InternalHomValue& pm) {
  require_right(data, "ihom_as_module");
  const InternalHomValue& pp = data.ihom;
  const FiniteGroup& k = pm.value().group();
  const std::size_t n = pm.value().dim();
  std::vector<Matrix> action;
  for (std::size_t w = 0; w < pp.value().dim(); ++w) {
    Matrix a(pm.source().field(), n, n);
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t g = k.mul(pm.value().grade(v), pp.value().grade(w));
      const auto c = pm.classify(g, pm.maps()[v] * pp.maps()[w]);
      if (!c) throw std::logic_error("ihom_as_module: composite escapes the internal hom");
      for (std::size_t r = 0; r < n; ++r) a(r, v) = (*c)[r];
    }
    action.push_back(std::move(a));
  }
  return GradedModuleObject(data.algebra, Side::right, pm.value(), std::move(action));
}

}  // namespace

GradedModuleObject ihom_as_module(const OstrikData& data, const GradedModuleObject& m) {
  return ihom_module(data, internal_hom(data.ihom.source(), m));
}

Reconstruction reconstruction_functor(const OstrikData& data, const GradedModuleObject& x) {
  require_right(data, "reconstruction_functor");
  if (x.side() != Side::right || !same_algebra_object(x.algebra_object(), *data.algebra)) {
    throw StructureMismatch("reconstruction_functor: x must be a right module over IHom(p,p)");
  }
  const CheckReport valid = validate_module_object(x);
  if (!valid.passed()) {
    throw ValidationError("reconstruction_functor: x fails " + valid.first_failure()->name);
  }
  const GradedModuleObject& p = data.ihom.source();
  const Field& f = p.field();
  const std::size_t nx = x.dim();
  const std::size_t np = p.dim();

  // Relations (x a) ⊗ y - x ⊗ (a y) for generators a of A span all of them.
  const Matrix id_x = Matrix::identity(f, nx);
  const Matrix id_p = Matrix::identity(f, np);
  std::vector<Matrix> relations;
  for (const SparseVector& a : data.algebra->algebra().generators()) {
    const Matrix on_x = x.module().action_of(a);
    Matrix on_p(f, np, np);
    for (const auto& [v, c] : a) on_p = on_p + data.ihom.maps()[v].scaled(c);
    relations.push_back(kron(on_x, id_p) - kron(id_x, on_p));
  }
  GradedCokernel q = graded_cokernel_of_span(f, relations, tensor_objects(x.object(), p.object()));

  std::vector<Matrix> action;
  if (q.object.dim() == 0) {
    for (std::size_t b = 0; b < p.algebra_object().dim(); ++b) action.emplace_back(f, 0, 0);
  } else {
    const Matrix section = right_inverse(q.projection);
    for (std::size_t b = 0; b < p.algebra_object().dim(); ++b) {
      action.push_back(q.projection * kron(id_x, p.module().action(b)) * section);
    }
  }
  GradedModuleObject module(p.algebra_object_ptr(), Side::right, q.object, std::move(action));
  return Reconstruction{std::move(module), std::move(q.projection)};
}

CheckReport reconstruction_unit_check(const OstrikData& data, const GradedModuleObject& x) {
  const Reconstruction fx = reconstruction_functor(data, x);
  const GradedModuleObject& p = data.ihom.source();
  const InternalHomValue back = internal_hom(p, fx.module);
  const GradedModuleObject back_module = ihom_module(data, back);
  const Field& f = p.field();
  const std::size_t np = p.dim();
  CheckReport report("reconstruction unit");
  report.add("x . p -> F(x) carries a module structure", validate_module_object(fx.module).passed());
  Matrix unit(f, back.value().dim(), x.dim());
  bool classified = true;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const Matrix slice = fx.projection.select(range(0, fx.projection.rows()), range(i * np, (i + 1) * np));
    const auto c = back.classify(x.object().grade(i), slice);
    if (!c) {
      classified = false;
      continue;
    }
    for (std::size_t r = 0; r < c->size(); ++r) unit(r, i) = (*c)[r];
  }
  report.add("y -> [e_i . y] lies in IHom(p, F(x))", classified);
  report.add("unit is a module map", is_module_map(unit, x, back_module));
  const std::size_t r = rank(unit);
  report.add("unit is an isomorphism", r == x.dim() && r == back.value().dim(),
             "rank " + std::to_string(r) + ", dims " + std::to_string(x.dim()) + " -> " +
                 std::to_string(back.value().dim()));
  return report;
}

CheckReport reconstruction_counit_check(const OstrikData& data, const GradedModuleObject& m) {
  const GradedModuleObject& p = data.ihom.source();
  const InternalHomValue pm = internal_hom(p, m);
  const GradedModuleObject ihom_m = ihom_module(data, pm);
  const Reconstruction fx = reconstruction_functor(data, ihom_m);
  CheckReport report("reconstruction counit");
  const Matrix& ev = pm.evaluation().matrix();
  Matrix counit(p.field(), m.dim(), fx.module.dim());
  if (fx.module.dim() > 0) counit = ev * right_inverse(fx.projection);
  report.add("evaluation factors through IHom(p, m) ._A p", counit * fx.projection == ev);
  report.add("counit is a module map", is_module_map(counit, fx.module, m));
  const std::size_t r = rank(counit);
  report.add("counit is an isomorphism", r == m.dim() && r == fx.module.dim(),
             "rank " + std::to_string(r) + ", dims " + std::to_string(fx.module.dim()) + " -> " +
                 std::to_string(m.dim()));
  return report;
}

}  // namespace balcat
