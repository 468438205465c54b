#include <random>

#include "balcat/common/errors.hpp"
#include "balcat/gradedcat/io.hpp"
#include "doctest.h"

using namespace balcat;

namespace {

const Field Q = Field::rational();

// Random invertible grade-preserving matrix on obj, block by block.
Matrix random_graded_automorphism(const GradedObject& obj, const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  for (;;) {
    Matrix p(f, obj.dim(), obj.dim());
    for (std::size_t r = 0; r < obj.dim(); ++r)
      for (std::size_t c = 0; c < obj.dim(); ++c)
        if (obj.grade(r) == obj.grade(c)) p(r, c) = f.from_int(d(rng));
    if (inverse(p)) return p;
  }
}

// Dimension of grade-preserving module maps by a dense system: commutation
// with every basis action plus one equation per off-grade entry.
std::size_t brute_force_graded_hom_dim(const GradedModuleObject& m, const GradedModuleObject& n) {
  const Field& f = m.field();
  const std::size_t vars = m.dim() * n.dim();
  Matrix system(f, 0, vars);
  for (std::size_t i = 0; i < m.algebra_object().dim(); ++i) {
    system = vstack(system, kron(Matrix::identity(f, n.dim()), m.module().action(i).transpose()) -
                                kron(n.module().action(i), Matrix::identity(f, m.dim())));
  }
  for (std::size_t r = 0; r < n.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (n.object().grade(r) != m.object().grade(c)) {
        Matrix row(f, 1, vars);
        row(0, r * m.dim() + c) = f.one();
        system = vstack(system, row);
      }
  return vars - rank(system);
}

std::vector<std::size_t> convolve(const FiniteGroup& k, const std::vector<std::size_t>& a,
                                  const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out(k.order(), 0);
  for (std::size_t g = 0; g < k.order(); ++g)
    for (std::size_t h = 0; h < k.order(); ++h) out[k.mul(g, h)] += a[g] * b[h];
  return out;
}

}  // namespace

TEST_CASE("tensor_objects") {
  const GroupPtr z2 = share(FiniteGroup::cyclic(2));
  const GroupPtr s3 = share(FiniteGroup::symmetric(3));
  const auto v = GradedObject::from_dims(s3, {1, 0, 2, 1, 0, 3});
  CHECK(tensor_objects(GradedObject::unit(s3), v) == v);
  CHECK(tensor_objects(v, GradedObject::unit(s3)) == v);
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t h = 0; h < 6; ++h)
      CHECK(tensor_objects(GradedObject::simple(s3, g), GradedObject::simple(s3, h)) ==
            GradedObject::simple(s3, s3->mul(g, h)));
  const auto u = GradedObject::from_dims(z2, {1, 1});
  CHECK(tensor_objects(u, u).dims() == std::vector<std::size_t>{2, 2});

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> d(0, 2);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::size_t> a(6), b(6);
    for (auto& x : a) x = d(rng);
    for (auto& x : b) x = d(rng);
    const auto ta = GradedObject::from_dims(s3, a);
    const auto tb = GradedObject::from_dims(s3, b);
    CHECK(tensor_objects(ta, tb).dims() == convolve(*s3, a, b));
    // associator is the identity on indices
    CHECK(tensor_objects(tensor_objects(ta, tb), v) == tensor_objects(ta, tensor_objects(tb, v)));
  }
  CHECK_THROWS_AS(tensor_objects(u, v), StructureMismatch);
}

TEST_CASE("duals and zigzag equations") {
  const GroupPtr z2 = share(FiniteGroup::cyclic(2));
  const GroupPtr s3 = share(FiniteGroup::symmetric(3));
  for (std::size_t g = 0; g < 6; ++g) {
    const auto d = dual_object_with_zigzag(GradedObject::simple(s3, g), Q);
    CHECK(d.dual == GradedObject::simple(s3, s3->inv(g)));
    CHECK(d.zigzag.passed());
  }
  const auto unit = dual_object_with_zigzag(GradedObject::unit(s3), Q);
  CHECK(unit.dual == GradedObject::unit(s3));

  const auto u = GradedObject::from_dims(z2, {2, 1});
  const auto d = dual_object_with_zigzag(u, Q);
  CHECK(d.dual.dims() == std::vector<std::size_t>{2, 1});
  CHECK(d.zigzag.checks().size() == 4);
  CHECK(d.zigzag.passed());
  // explicit composite of size 3
  const Matrix i3 = Matrix::identity(Q, 3);
  CHECK(kron(i3, d.ev.matrix()) * kron(d.coev.matrix(), i3) == i3);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> dd(0, 2);
  for (int t = 0; t < 10; ++t) {
    std::vector<std::size_t> dims(6);
    for (auto& x : dims) x = dd(rng);
    const auto obj = GradedObject::from_dims(s3, dims);
    const auto du = dual_object_with_zigzag(obj, Field::prime(7));
    CHECK(du.zigzag.passed());
    CHECK(du.dual.dim() == obj.dim());
    CHECK(dual_object_with_zigzag(du.dual, Q).dual == obj);
  }
}

TEST_CASE("graded morphisms must preserve grades") {
  const GroupPtr z2 = share(FiniteGroup::cyclic(2));
  const auto u = GradedObject::from_dims(z2, {1, 1});
  CHECK_NOTHROW(GradedMorphism(u, u, Matrix::from_ints(Q, {{1, 0}, {0, 3}})));
  CHECK_THROWS_AS(GradedMorphism(u, u, Matrix::from_ints(Q, {{0, 1}, {1, 0}})), ValidationError);
}

TEST_CASE("validate_algebra_object") {
  const GroupPtr s3 = share(FiniteGroup::symmetric(3));
  const auto kk = group_algebra_object(s3, Q);
  CHECK(validate_algebra_object(kk).passed());
  CHECK(validate_algebra_object(unit_algebra_object(s3, Q)).passed());
  const auto flat = trivially_graded_group_algebra(s3, *s3, Q);
  CHECK(validate_algebra_object(flat).passed());
  CHECK_FALSE(same_algebra_object(kk, flat));
  CHECK(same_algebra(kk.algebra(), flat.algebra()));
  const auto end = endomorphism_algebra_object(GradedObject::from_dims(s3, {1, 1, 0, 0, 0, 1}), Q);
  CHECK(validate_algebra_object(end).passed());

  // k[S3] with two grades exchanged is not a graded algebra
  std::vector<std::size_t> grades{0, 2, 1, 3, 4, 5};
  const GradedAlgebraObject bad(GradedObject(s3, grades), kk.algebra_ptr());
  CHECK_FALSE(validate_algebra_object(bad).passed());
  // unit outside the neutral grade
  const GroupPtr z2 = share(FiniteGroup::cyclic(2));
  const GradedAlgebraObject bad_unit(GradedObject(z2, {1}), share(ground_field_algebra(Q)));
  CHECK_FALSE(validate_algebra_object(bad_unit).passed());
}

TEST_CASE("act_on_module_object") {
  const GroupPtr z2 = share(FiniteGroup::cyclic(2));
  const AlgebraObjectPtr b = share(group_algebra_object(z2, Q));
  const auto reg = regular_module(b, Side::right);
  CHECK(validate_module_object(reg).passed());

  const auto one = act_on_module_object(GradedObject::unit(z2), reg);
  CHECK(one.object() == reg.object());
  CHECK(one.module().actions() == reg.module().actions());

  // k_1 ⊗ B: basis 1 ⊗ e_0 in grade 1, 1 ⊗ e_1 in grade 0; e_1 swaps them
  const auto shifted = act_on_module_object(GradedObject::simple(z2, 1), reg);
  CHECK(shifted.object().grades() == std::vector<std::size_t>{1, 0});
  CHECK(shifted.module().action(0) == Matrix::identity(Q, 2));
  CHECK(shifted.module().action(1) == Matrix::from_ints(Q, {{0, 1}, {1, 0}}));
  CHECK(validate_module_object(shifted).passed());

  const GroupPtr s3 = share(FiniteGroup::symmetric(3));
  const AlgebraObjectPtr bs = share(group_algebra_object(s3, Q));
  const auto m = free_module(bs, Side::right, GradedObject::from_dims(s3, {1, 0, 0, 1, 0, 0}));
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t h = 0; h < 6; ++h) {
      const auto lhs = act_on_module_object(
          tensor_objects(GradedObject::simple(s3, g), GradedObject::simple(s3, h)), m);
      const auto rhs = act_on_module_object(GradedObject::simple(s3, s3->mul(g, h)), m);
      CHECK(lhs.object() == rhs.object());
      CHECK(lhs.module().actions() == rhs.module().actions());
    }
  // left modules: x ⊗ c
  const auto left = act_on_module_object(regular_module(bs, Side::left), GradedObject::simple(s3, 4));
  CHECK(validate_module_object(left).passed());
  CHECK_THROWS_AS(act_on_module_object(GradedObject::unit(s3), regular_module(bs, Side::left)),
                  StructureMismatch);
}

TEST_CASE("graded hom agrees with the dense system") {
  const GroupPtr s3 = share(FiniteGroup::symmetric(3));
  const AlgebraObjectPtr b = share(group_algebra_object(s3, Q));
  const AlgebraObjectPtr flat = share(trivially_graded_group_algebra(s3, FiniteGroup::cyclic(2), Q));
  std::mt19937_64 rng(5);
  for (const auto& alg : {b, flat}) {
    std::vector<GradedModuleObject> mods;
    mods.push_back(regular_module(alg, Side::right));
    mods.push_back(free_module(alg, Side::right, GradedObject::simple(s3, 4)));
    auto sum = direct_sum(mods[0], mods[1]);
    mods.push_back(change_of_basis(sum, random_graded_automorphism(sum.object(), Q, rng)));
    for (const auto& m : mods) {
      CHECK(validate_module_object(m).passed());
      for (const auto& n : mods) CHECK(graded_hom(m, n).size() == brute_force_graded_hom_dim(m, n));
    }
  }
}

TEST_CASE("graded cokernels and quotient modules") {
  const GroupPtr z2 = share(FiniteGroup::cyclic(2));
  const auto src = GradedObject::from_dims(z2, {1, 1});
  const auto dst = GradedObject::from_dims(z2, {2, 1});
  const Matrix f = Matrix::from_ints(Q, {{1, 0}, {2, 0}, {0, 1}});
  const auto q = graded_cokernel(f, src, dst);
  CHECK(q.object.dims() == std::vector<std::size_t>{1, 0});
  CHECK((q.projection * f).is_zero());
  CHECK(is_grade_preserving(q.projection, dst, q.object));
  CHECK_THROWS_AS(graded_cokernel(Matrix::from_ints(Q, {{0, 1}, {0, 0}, {1, 0}}), src, dst),
                  ValidationError);

  // B ⊕ B modulo the diagonal copy of B is B again
  const AlgebraObjectPtr b = share(group_algebra_object(z2, Q));
  const auto reg = regular_module(b, Side::right);
  const auto two = direct_sum(reg, reg);
  const Matrix diag = vstack(Matrix::identity(Q, 2), Matrix::identity(Q, 2));
  const auto quo = quotient_module(two, diag, reg.object());
  CHECK(quo.module.dim() == 2);
  CHECK(validate_module_object(quo.module).passed());
  CHECK(is_module_map(quo.projection, two, quo.module));
}

TEST_CASE("exactness probes") {
  const GroupPtr z2 = share(FiniteGroup::cyclic(2));
  const AlgebraObjectPtr b = share(group_algebra_object(z2, Q));
  const auto reg = regular_module(b, Side::right);
  const auto two = direct_sum(reg, reg);
  const Matrix incl = vstack(Matrix::identity(Q, 2), Matrix(Q, 2, 2));
  const Matrix proj = hstack(Matrix(Q, 2, 2), Matrix::identity(Q, 2));
  const ShortExactSequence split{reg, two, reg, incl, proj};
  CHECK(check_short_exact(split).passed());
  CHECK(exactness_probe(GradedObject::unit(z2), split).passed());
  for (std::size_t g = 0; g < 2; ++g) CHECK(exactness_probe(GradedObject::simple(z2, g), split).passed());
  CHECK(exactness_probe(GradedObject::from_dims(z2, {2, 3}), split).passed());

  const ShortExactSequence broken{reg, two, reg, incl, Matrix(Q, 2, 4)};
  CHECK_THROWS_AS(exactness_probe(GradedObject::unit(z2), broken), PreconditionError);

  SUBCASE("random non-split extensions over F_2") {
    // k[Z2] in the neutral grade over F_2 is k[x]/(x^2): the regular module is
    // a non-split extension of the trivial module by itself.
    const Field f2 = Field::prime(2);
    const AlgebraObjectPtr flat = share(trivially_graded_group_algebra(z2, FiniteGroup::cyclic(2), f2));
    std::mt19937_64 rng(17);
    for (int t = 0; t < 10; ++t) {
      const std::size_t h = rng() % 2;
      const auto k_h = GradedObject::simple(z2, h);
      const GradedModuleObject triv(flat, Side::right, k_h,
                                    {Matrix::identity(f2, 1), Matrix::identity(f2, 1)});
      const auto free = free_module(flat, Side::right, k_h);
      const Matrix p = random_graded_automorphism(free.object(), f2, rng);
      const auto mid = change_of_basis(free, p);
      const Matrix f = *inverse(p) * Matrix::from_ints(f2, {{1}, {1}});
      const Matrix g = Matrix::from_ints(f2, {{1, 1}}) * p;
      const ShortExactSequence ext{triv, mid, triv, f, g};
      REQUIRE(check_short_exact(ext).passed());
      for (const auto& s : graded_hom(triv, mid)) CHECK((g * s).is_zero());
      const auto c = GradedObject::simple(z2, rng() % 2);
      const auto report = exactness_probe(c, ext);
      CHECK(report.passed());
    }
  }
}

TEST_CASE("module object json") {
  const GroupPtr s3 = share(FiniteGroup::symmetric(3));
  const AlgebraObjectPtr b = share(group_algebra_object(s3, Field::prime(7)));
  const auto m = free_module(b, Side::right, GradedObject::from_dims(s3, {0, 1, 0, 0, 0, 1}));
  const auto back = module_object_from_json(module_object_to_json(m), b);
  CHECK(back.object() == m.object());
  CHECK(back.module().actions() == m.module().actions());
  auto j = module_object_to_json(m);
  j["action"][1][0][0] = 3;
  CHECK_THROWS_AS(module_object_from_json(j, b), ValidationError);
  const auto alg = graded_algebra_from_json(graded_algebra_to_json(*b), s3);
  CHECK(same_algebra_object(alg, *b));
}
