#include <random>

#include "balcat/common/errors.hpp"
#include "balcat/modcat/modcat.hpp"
#include "doctest.h"

using namespace balcat;

namespace {

const Field Q = Field::rational();

// Right B-modules to exercise: regular, shifted free, a sum, and a random
// change of basis of the sum.
std::vector<GradedModuleObject> sample_modules(const AlgebraObjectPtr& b, Side side, unsigned seed) {
  const GroupPtr& k = b->group_ptr();
  std::vector<GradedModuleObject> out;
  out.push_back(regular_module(b, side));
  out.push_back(free_module(b, side, GradedObject::simple(k, k->order() - 1)));
  const auto sum = direct_sum(out[0], out[1]);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-1, 1);
  for (;;) {
    Matrix p(b->field(), sum.dim(), sum.dim());
    for (std::size_t r = 0; r < sum.dim(); ++r)
      for (std::size_t c = 0; c < sum.dim(); ++c)
        if (sum.object().grade(r) == sum.object().grade(c)) p(r, c) = b->field().from_int(d(rng));
    if (inverse(p)) {
      out.push_back(change_of_basis(sum, p));
      break;
    }
  }
  return out;
}

GradedModuleObject character(const AlgebraObjectPtr& b, std::size_t grade, int sign) {
  const Field& f = b->field();
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < b->dim(); ++i) {
    Matrix m(f, 1, 1);
    m(0, 0) = f.from_int(i == 0 ? 1 : sign);
    action.push_back(m);
  }
  return GradedModuleObject(b, Side::right, GradedObject::simple(b->group_ptr(), grade), action);
}

}  // namespace

TEST_CASE("internal hom examples") {
  const GroupPtr z2 = share(FiniteGroup::cyclic(2));
  const GroupPtr s3 = share(FiniteGroup::symmetric(3));
  SUBCASE("IHom of the regular k[K]-module is k[K]") {
    for (const auto& k : {z2, s3}) {
      const AlgebraObjectPtr b = share(group_algebra_object(k, Q));
      const auto reg = regular_module(b, Side::right);
      const auto ihom = internal_hom(reg, reg);
      CHECK(ihom.value().dims() == std::vector<std::size_t>(k->order(), 1));
      CHECK(verify_internal_hom_adjunction(ihom).passed());
    }
  }
  SUBCASE("C over itself") {
    const AlgebraObjectPtr one = share(unit_algebra_object(s3, Q));
    const auto unit = regular_module(one, Side::right);
    const auto ihom = internal_hom(unit, unit);
    CHECK(ihom.value() == GradedObject::unit(s3));
    const auto m = free_module(one, Side::right, GradedObject::from_dims(s3, {1, 2, 0, 0, 1, 0}));
    const auto n = free_module(one, Side::right, GradedObject::from_dims(s3, {0, 1, 1, 0, 0, 2}));
    // in C the internal hom is n ⊗ dual(m)
    const auto mn = internal_hom(m, n);
    const auto dm = dual_object_with_zigzag(m.object(), Q).dual;
    CHECK(mn.value().dims() == tensor_objects(n.object(), dm).dims());
    CHECK(verify_internal_hom_adjunction(mn, {m.object(), n.object()}).passed());
  }
  SUBCASE("IHom(m, 0) = 0") {
    const AlgebraObjectPtr b = share(group_algebra_object(s3, Q));
    const auto ihom = internal_hom(regular_module(b, Side::right), zero_module(b, Side::right));
    CHECK(ihom.value().dim() == 0);
    CHECK(verify_internal_hom_adjunction(ihom).passed());
  }
  SUBCASE("mismatches") {
    const AlgebraObjectPtr b = share(group_algebra_object(z2, Q));
    const AlgebraObjectPtr c = share(trivially_graded_group_algebra(z2, FiniteGroup::cyclic(2), Q));
    CHECK_THROWS_AS(internal_hom(regular_module(b, Side::right), regular_module(c, Side::right)),
                    StructureMismatch);
    CHECK_THROWS_AS(internal_hom(regular_module(b, Side::right), regular_module(b, Side::left)),
                    StructureMismatch);
  }
}

TEST_CASE("adjunction dimension identity on a corpus") {
  const GroupPtr s3 = share(FiniteGroup::symmetric(3));
  const GroupPtr z3 = share(FiniteGroup::cyclic(3));
  const Field f7 = Field::prime(7);
  std::vector<AlgebraObjectPtr> algebras{
      share(group_algebra_object(s3, Q)),
      share(trivially_graded_group_algebra(s3, FiniteGroup::cyclic(2), Q)),
      share(group_algebra_object(z3, f7)),
      share(endomorphism_algebra_object(GradedObject::from_dims(z3, {1, 1, 0}), f7)),
  };
  for (const auto& b : algebras) {
    for (Side side : {Side::right, Side::left}) {
      const auto mods = sample_modules(b, side, 11);
      for (const auto& m1 : mods)
        for (const auto& m2 : mods) {
          const auto ihom = internal_hom(m1, m2);
          const auto report = verify_internal_hom_adjunction(ihom);
          CHECK_MESSAGE(report.passed(), b->algebra().name());
        }
    }
  }
}

TEST_CASE("cotensor") {
  const GroupPtr z2 = share(FiniteGroup::cyclic(2));
  const GroupPtr s3 = share(FiniteGroup::symmetric(3));
  const AlgebraObjectPtr one = share(unit_algebra_object(z2, Q));
  const auto m = free_module(one, Side::right, GradedObject::from_dims(z2, {2, 1}));
  CHECK(cotensor(GradedObject::unit(z2), m).object() == m.object());
  CHECK(cotensor(GradedObject::from_dims(z2, {1, 1}), m).object().dims() ==
        std::vector<std::size_t>{3, 3});

  const AlgebraObjectPtr b = share(group_algebra_object(s3, Q));
  const auto mods = sample_modules(b, Side::right, 3);
  for (std::size_t g = 0; g < 6; ++g) {
    const auto kg = GradedObject::simple(s3, g);
    const auto mc = cotensor(kg, mods[2]);
    const auto shifted = act_on_module_object(GradedObject::simple(s3, s3->inv(g)), mods[2]);
    CHECK(mc.object() == shifted.object());
    CHECK(mc.module().actions() == shifted.module().actions());
    CHECK(verify_cotensor_adjunction(kg, mods[2], mods).passed());
  }
  const auto c = GradedObject::from_dims(s3, {1, 0, 1, 0, 0, 1});
  CHECK(verify_cotensor_adjunction(c, mods[1], mods).passed());
  const auto left = sample_modules(b, Side::left, 4);
  CHECK(verify_cotensor_adjunction(c, left[2], left).passed());
  CHECK(verify_cotensor_adjunction(GradedObject::from_dims(z2, {2, 1}), m,
                                   {m, regular_module(one, Side::right)})
            .passed());
}

TEST_CASE("ostrik algebra") {
  const GroupPtr z2 = share(FiniteGroup::cyclic(2));
  const GroupPtr s3 = share(FiniteGroup::symmetric(3));
  SUBCASE("regular module recovers B") {
    for (const auto& b : {share(group_algebra_object(z2, Q)), share(group_algebra_object(s3, Q)),
                          share(trivially_graded_group_algebra(z2, FiniteGroup::symmetric(3), Q))}) {
      for (Side side : {Side::right, Side::left}) {
        const auto data = ostrik_algebra_data(regular_module(b, side));
        CHECK(validate_algebra_object(*data.algebra).passed());
        const Matrix t = regular_identification(data);
        const FinAlgebra moved = transport_algebra(data.algebra->algebra(), t);
        for (std::size_t i = 0; i < b->dim(); ++i)
          for (std::size_t j = 0; j < b->dim(); ++j)
            CHECK(densify(Q, b->dim(), moved.product(i, j)) ==
                  densify(Q, b->dim(), b->algebra().product(i, j)));
        CHECK(moved.unit() == b->algebra().unit());
        // grades carried along
        for (std::size_t j = 0; j < b->dim(); ++j)
          for (std::size_t r = 0; r < t.rows(); ++r)
            if (!t(r, j).is_zero()) CHECK(data.algebra->grade(r) == b->grade(j));
      }
    }
  }
  SUBCASE("the unit of C") {
    const AlgebraObjectPtr one = share(unit_algebra_object(s3, Q));
    const auto a = ostrik_algebra(regular_module(one, Side::right));
    CHECK(a.object() == GradedObject::unit(s3));
    CHECK(a.algebra().product(0, 0) == SparseVector{{0, Q.one()}});
    CHECK(a.algebra().unit() == Vector{Q.one()});
  }
  SUBCASE("a one-dimensional module of the trivially graded k[Z2]") {
    const AlgebraObjectPtr flat = share(trivially_graded_group_algebra(z2, FiniteGroup::cyclic(2), Q));
    const auto a = ostrik_algebra(character(flat, 0, -1));
    CHECK(a.object().dims() == std::vector<std::size_t>{1, 0});
    CHECK(validate_algebra_object(a).passed());
  }
  SUBCASE("larger generators give valid algebras") {
    const AlgebraObjectPtr b = share(group_algebra_object(s3, Q));
    for (const auto& p : sample_modules(b, Side::right, 9)) {
      const auto a = ostrik_algebra(p);
      CHECK(validate_algebra_object(a).passed());
      CHECK(a.dim() * b->dim() == p.dim() * p.dim());
    }
    const auto left = sample_modules(b, Side::left, 9);
    CHECK(validate_algebra_object(ostrik_algebra(left[2])).passed());
  }
  CHECK_THROWS_AS(ostrik_algebra(zero_module(share(group_algebra_object(z2, Q)), Side::right)),
                  PreconditionError);
}

TEST_CASE("generator check and projectivity probe") {
  const GroupPtr z2 = share(FiniteGroup::cyclic(2));
  const GroupPtr s3 = share(FiniteGroup::symmetric(3));
  const AlgebraObjectPtr b = share(group_algebra_object(s3, Q));
  const auto mods = sample_modules(b, Side::right, 21);
  CHECK(generator_check(regular_module(b, Side::right), mods).passed());
  for (const auto& x : mods) CHECK(generator_check(x, {x}).passed());
  CHECK_FALSE(generator_check(zero_module(b, Side::right), {mods[0]}).passed());

  // over the trivially graded k[Z2] the sign character does not generate
  const AlgebraObjectPtr flat = share(trivially_graded_group_algebra(z2, FiniteGroup::cyclic(2), Q));
  const auto sign = character(flat, 0, -1);
  const auto triv = character(flat, 0, 1);
  CHECK_FALSE(generator_check(sign, {triv}).passed());
  CHECK(generator_check(regular_module(flat, Side::right), {sign, triv}).passed());

  // the projection B ⊕ B -> B
  const auto reg = regular_module(b, Side::right);
  const auto two = direct_sum(reg, reg);
  const ShortExactSequence s{reg, two, reg, vstack(Matrix::identity(Q, 6), Matrix(Q, 6, 6)),
                             hstack(Matrix(Q, 6, 6), Matrix::identity(Q, 6))};
  for (const auto& p : mods) CHECK(projectivity_probe(p, s).passed());

  // over F_2 the trivial module of the flat k[Z2] is not projective
  const Field f2 = Field::prime(2);
  const AlgebraObjectPtr flat2 = share(trivially_graded_group_algebra(z2, FiniteGroup::cyclic(2), f2));
  const auto t2 = character(flat2, 0, 1);
  const auto free2 = regular_module(flat2, Side::right);
  const ShortExactSequence ext{t2, free2, t2, Matrix::from_ints(f2, {{1}, {1}}),
                               Matrix::from_ints(f2, {{1, 1}})};
  CHECK_FALSE(projectivity_probe(t2, ext).passed());
  CHECK(projectivity_probe(free2, ext).passed());
  const ShortExactSequence bad{t2, free2, t2, Matrix::from_ints(f2, {{1}, {0}}),
                               Matrix::from_ints(f2, {{1, 1}})};
  CHECK_THROWS_AS(projectivity_probe(free2, bad), PreconditionError);
}

TEST_CASE("reconstruction") {
  const GroupPtr z2 = share(FiniteGroup::cyclic(2));
  const GroupPtr s3 = share(FiniteGroup::symmetric(3));
  SUBCASE("x = IHom(p,p) gives back p") {
    const AlgebraObjectPtr b = share(group_algebra_object(s3, Q));
    for (const auto& p : sample_modules(b, Side::right, 2)) {
      const auto data = ostrik_algebra_data(p);
      const auto fx = reconstruction_functor(data, regular_module(data.algebra, Side::right));
      CHECK(fx.module.object().dims() == p.object().dims());
      // some module map F(x) -> p is invertible: the induced action map
      const Matrix ev = data.ihom.evaluation().matrix();
      const Matrix iso = ev * right_inverse(fx.projection);
      CHECK(iso * fx.projection == ev);
      CHECK(is_module_map(iso, fx.module, p));
      CHECK(rank(iso) == p.dim());
    }
  }
  SUBCASE("regular p: F(x) is x") {
    const AlgebraObjectPtr b = share(group_algebra_object(s3, Q));
    const auto data = ostrik_algebra_data(regular_module(b, Side::right));
    const Matrix t = regular_identification(data);
    const Matrix tinv = *inverse(t);
    for (const auto& m : sample_modules(b, Side::right, 8)) {
      // m as a module over IHom(B, B) through the identification
      std::vector<Matrix> action;
      for (std::size_t v = 0; v < data.algebra->dim(); ++v) {
        Matrix a(Q, m.dim(), m.dim());
        for (std::size_t j = 0; j < b->dim(); ++j)
          if (!tinv(j, v).is_zero()) a = a + m.module().action(j).scaled(tinv(j, v));
        action.push_back(a);
      }
      const GradedModuleObject x(data.algebra, Side::right, m.object(), action);
      REQUIRE(validate_module_object(x).passed());
      const auto fx = reconstruction_functor(data, x);
      // x ⊗ B -> m, (x_i, e_k) -> x_i . e_k
      Matrix act_map(Q, m.dim(), m.dim() * b->dim());
      for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t k = 0; k < b->dim(); ++k)
          for (std::size_t r = 0; r < m.dim(); ++r) act_map(r, i * b->dim() + k) = m.module().action(k)(r, i);
      const Matrix iso = act_map * right_inverse(fx.projection);
      CHECK(iso * fx.projection == act_map);
      CHECK(is_module_map(iso, fx.module, m));
      CHECK(rank(iso) == m.dim());
      CHECK(fx.module.dim() == m.dim());
    }
  }
  SUBCASE("x = 0") {
    const AlgebraObjectPtr b = share(group_algebra_object(z2, Q));
    const auto data = ostrik_algebra_data(regular_module(b, Side::right));
    const auto fx = reconstruction_functor(data, zero_module(data.algebra, Side::right));
    CHECK(fx.module.dim() == 0);
  }
  SUBCASE("unit and counit for projective generators") {
    for (const auto& b : {share(group_algebra_object(s3, Q)),
                          share(trivially_graded_group_algebra(z2, FiniteGroup::cyclic(2), Q)),
                          share(group_algebra_object(share(FiniteGroup::cyclic(3)), Field::prime(7)))}) {
      const auto mods = sample_modules(b, Side::right, 13);
      const auto& p = mods[2];
      REQUIRE(generator_check(p, mods).passed());
      const auto data = ostrik_algebra_data(p);
      for (const auto& m : mods) {
        CHECK(reconstruction_counit_check(data, m).passed());
        CHECK(reconstruction_unit_check(data, ihom_as_module(data, m)).passed());
      }
      CHECK(reconstruction_unit_check(data, regular_module(data.algebra, Side::right)).passed());
    }
  }
  SUBCASE("a non-generator loses information") {
    const AlgebraObjectPtr flat = share(trivially_graded_group_algebra(z2, FiniteGroup::cyclic(2), Q));
    const auto data = ostrik_algebra_data(character(flat, 0, -1));
    CHECK_FALSE(reconstruction_counit_check(data, character(flat, 0, 1)).passed());
  }
  SUBCASE("invalid input") {
    const AlgebraObjectPtr b = share(group_algebra_object(z2, Q));
    const auto data = ostrik_algebra_data(regular_module(b, Side::right));
    auto reg = regular_module(data.algebra, Side::right);
    std::vector<Matrix> action = reg.module().actions();
    action[1] = action[1].scaled(Q.from_int(2));
    const GradedModuleObject broken(data.algebra, Side::right, reg.object(), action);
    CHECK_THROWS_AS(reconstruction_functor(data, broken), ValidationError);
    const AlgebraObjectPtr flat = share(trivially_graded_group_algebra(z2, FiniteGroup::cyclic(2), Q));
    CHECK_THROWS_AS(reconstruction_functor(data, regular_module(flat, Side::right)), StructureMismatch);
  }
}
