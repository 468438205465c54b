#include <numeric>

#include "balcat/algebra/io.hpp"
#include "balcat/algebra/morita.hpp"
#include "balcat/common/errors.hpp"
#include "doctest.h"

using namespace balcat;

namespace {

const Field Q = Field::rational();

// Kernel dimension of the full intertwiner system, built independently of
// intertwiner_basis: row-major vec(f S - T f) = (I ⊗ S^T - T ⊗ I) vec(f).
std::size_t brute_force_hom_dim(const AlgModule& m, const AlgModule& n) {
  const Field& f = m.algebra().field();
  Matrix system(f, 0, m.dim() * n.dim());
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
    const Matrix block = kron(Matrix::identity(f, n.dim()), m.action(i).transpose()) -
                         kron(n.action(i), Matrix::identity(f, m.dim()));
    system = vstack(system, block);
  }
  return m.dim() * n.dim() - rank(system);
}

// One-dimensional representation of k[G] given by a character table row.
AlgModule one_dim_module(const AlgebraPtr& a, Side side, const std::vector<long long>& values) {
  std::vector<Matrix> action;
  for (long long v : values) action.push_back(Matrix::from_ints(a->field(), {{v}}));
  return AlgModule(a, side, 1, std::move(action));
}

std::vector<long long> sign_character(const FiniteGroup& g, std::size_t n) {
  // parity of the permutation with lexicographic index k, recomputed here
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<long long> out;
  do {
    long long inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    out.push_back(inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(p.begin(), p.end()));
  REQUIRE(out.size() == g.order());
  return out;
}

}  // namespace

TEST_CASE("validate_algebra") {
  CHECK(validate_algebra(ground_field_algebra(Q)).passed());
  CHECK(validate_algebra(matrix_algebra(2, Q)).passed());
  CHECK(validate_algebra(dual_numbers(Q)).passed());
  CHECK(validate_algebra(group_algebra(FiniteGroup::symmetric(3), Q)).passed());

  SUBCASE("perturbed constants are caught with a named triple") {
    const FinAlgebra m2 = matrix_algebra(2, Q);
    // E_01 E_10 = E_00 becomes 2 E_00
    const FinAlgebra bad = m2.with_structure_constant(1, 2, 0, Q.from_int(2));
    const auto report = validate_algebra(bad);
    CHECK_FALSE(report.passed());
    REQUIRE(report.first_failure() != nullptr);
    CHECK(report.first_failure()->detail.find("triple") != std::string::npos);
  }
  SUBCASE("broken unit") {
    const FinAlgebra z2 = group_algebra(FiniteGroup::cyclic(2), Q);
    const FinAlgebra bad = z2.with_structure_constant(0, 1, 0, Q.one());
    CHECK_FALSE(validate_algebra(bad).passed());
  }
}

TEST_CASE("group algebras") {
  const FinAlgebra z2 = group_algebra(FiniteGroup::cyclic(2), Q);
  CHECK(z2.dim() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(z2.product(i, j) == z2.product(j, i));
  CHECK_FALSE(z2.maschke_risk());
  CHECK(group_algebra(FiniteGroup::cyclic(4), Field::prime(2)).maschke_risk());

  const auto s3 = FiniteGroup::symmetric(3);
  CHECK(center_basis(group_algebra(s3, Q)).size() == s3.conjugacy_class_count());
}

TEST_CASE("center from generators agrees with the exhaustive system") {
  for (const auto& a : {group_algebra(FiniteGroup::symmetric(3), Q), matrix_algebra(3, Q),
                        dual_numbers(Q), group_algebra(FiniteGroup::cyclic(4), Field::prime(5)),
                        tensor_product_algebra(matrix_algebra(2, Q), dual_numbers(Q))}) {
    const auto fast = center_basis(a);
    const auto slow = center_basis_exhaustive(a);
    CHECK(fast.size() == slow.size());
    RowSpace rs(a.field(), a.dim());
    for (const auto& v : slow) rs.insert(v);
    for (const auto& v : fast) CHECK(rs.contains(v));
    // every center element commutes with every basis element
    for (const auto& z : fast) {
      for (std::size_t i = 0; i < a.dim(); ++i) {
        const Vector e = unit_vector(a.field(), a.dim(), i);
        CHECK(a.multiply(z, e) == a.multiply(e, z));
      }
    }
  }
}

TEST_CASE("center dimension equals the class count under the splitting policy") {
  struct Case {
    FiniteGroup g;
    Field f;
  };
  const std::vector<Case> cases{{FiniteGroup::cyclic(3), Field::prime(7)},
                                {FiniteGroup::cyclic(4), Field::prime(5)},
                                {FiniteGroup::cyclic(5), Field::prime(11)},
                                {FiniteGroup::symmetric(3), Q},
                                {FiniteGroup::symmetric(4), Q}};
  for (const auto& c : cases) {
    const FinAlgebra a = group_algebra(c.g, c.f);
    CHECK(split_simple_count(a, true) == c.g.conjugacy_class_count());
  }
}

TEST_CASE("hom_space") {
  const AlgebraPtr z2 = share(group_algebra(FiniteGroup::cyclic(2), Q));
  const AlgModule reg = AlgModule::regular(z2, Side::left);
  CHECK(validate_module(reg, true).passed());
  const auto h = hom_space(reg, reg);
  CHECK(h.size() == 2);
  CHECK(brute_force_hom_dim(reg, reg) == 2);
  CHECK(hom_space(reg, AlgModule::zero(z2, Side::left)).empty());
  CHECK(hom_space(AlgModule::zero(z2, Side::left), reg).empty());

  SUBCASE("Schur: endomorphisms of a simple over a split algebra are scalars") {
    const AlgebraPtr m2 = share(matrix_algebra(2, Q));
    std::vector<Matrix> action;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        Matrix e(Q, 2, 2);
        e(r, c) = Q.one();
        action.push_back(e);
      }
    const AlgModule natural(m2, Side::left, 2, action);
    CHECK(validate_module(natural, true).passed());
    const auto end = hom_space(natural, natural);
    REQUIRE(end.size() == 1);
    CHECK(end[0] == Matrix::identity(Q, 2).scaled(end[0](0, 0)));

    const AlgebraPtr z3 = share(group_algebra(FiniteGroup::cyclic(3), Field::prime(7)));
    const AlgModule chi = one_dim_module(z3, Side::left, {1, 2, 4});
    CHECK(validate_module(chi, true).passed());
    CHECK(hom_space(chi, chi).size() == 1);
    CHECK(hom_space(chi, one_dim_module(z3, Side::left, {1, 4, 2})).empty());
  }

  SUBCASE("mismatches are rejected") {
    const AlgModule right = AlgModule::regular(z2, Side::right);
    CHECK_THROWS_AS(hom_space(reg, right), StructureMismatch);
    const AlgModule other = AlgModule::regular(share(dual_numbers(Q)), Side::left);
    CHECK_THROWS_AS(hom_space(reg, other), StructureMismatch);
  }
}

TEST_CASE("hom dimensions agree with the brute-force system on S3 modules") {
  const auto s3 = FiniteGroup::symmetric(3);
  const AlgebraPtr a = share(group_algebra(s3, Q));
  const AlgModule reg = AlgModule::regular(a, Side::left);
  const AlgModule triv = one_dim_module(a, Side::left, std::vector<long long>(6, 1));
  const AlgModule sign = one_dim_module(a, Side::left, sign_character(s3, 3));
  const std::vector<AlgModule> mods{reg, triv, sign, direct_sum(triv, sign), direct_sum(reg, sign)};
  for (const auto& m : mods) {
    CHECK(validate_module(m).passed());
    for (const auto& n : mods) CHECK(hom_space(m, n).size() == brute_force_hom_dim(m, n));
  }
}

TEST_CASE("hom dimension is unchanged by passing to the opposite algebra") {
  const auto s3 = FiniteGroup::symmetric(3);
  const AlgebraPtr a = share(group_algebra(s3, Q));
  const AlgebraPtr op = share(opposite_algebra(*a));
  const AlgModule reg = AlgModule::regular(a, Side::left);
  const AlgModule sign = one_dim_module(a, Side::left, sign_character(s3, 3));
  const std::vector<AlgModule> mods{reg, sign, direct_sum(sign, reg)};
  for (const auto& m : mods) {
    for (const auto& n : mods) {
      const auto mo = opposite_side(m, op);
      const auto no = opposite_side(n, op);
      CHECK(validate_module(mo).passed());
      CHECK(hom_space(m, n).size() == hom_space(mo, no).size());
    }
  }
}

TEST_CASE("invalid module data is rejected by validation") {
  const AlgebraPtr z3 = share(group_algebra(FiniteGroup::cyclic(3), Field::prime(7)));
  // 3 is not a cube root of unity mod 7
  const AlgModule bad = one_dim_module(z3, Side::left, {1, 3, 2});
  CHECK_FALSE(validate_module(bad).passed());
  CHECK_FALSE(validate_module(bad, true).passed());
}

TEST_CASE("tensor_over_algebra") {
  const auto s3 = FiniteGroup::symmetric(3);
  const AlgebraPtr a = share(group_algebra(s3, Q));
  const AlgModule a_right = AlgModule::regular(a, Side::right);
  const AlgModule a_left = AlgModule::regular(a, Side::left);
  const AlgModule sign = one_dim_module(a, Side::left, sign_character(s3, 3));
  const AlgModule n = direct_sum(sign, a_left);

  SUBCASE("unit law A ⊗_A N = N") {
    const Cokernel t = tensor_over_algebra(a_right, n);
    CHECK(t.dim == n.dim());
    // restriction of the projection to 1 ⊗ N
    Matrix incl(Q, a->dim() * n.dim(), n.dim());
    for (std::size_t k = 0; k < a->dim(); ++k)
      for (std::size_t y = 0; y < n.dim(); ++y) incl(k * n.dim() + y, y) = a->unit()[k];
    CHECK(inverse(t.projection * incl).has_value());
  }
  SUBCASE("unit law M ⊗_A A = M") {
    // sign is one-dimensional, so its matrices also define a right A-module
    const AlgModule m_right(a, Side::right, 1, sign.actions());
    CHECK(validate_module(m_right, true).passed());
    const AlgModule mm = direct_sum(m_right, a_right);
    const Cokernel t = tensor_over_algebra(mm, a_left);
    CHECK(t.dim == mm.dim());
    Matrix incl(Q, mm.dim() * a->dim(), mm.dim());
    for (std::size_t x = 0; x < mm.dim(); ++x)
      for (std::size_t k = 0; k < a->dim(); ++k) incl(x * a->dim() + k, x) = a->unit()[k];
    CHECK(inverse(t.projection * incl).has_value());
  }
  SUBCASE("regular k[Z2] over itself, generator and exhaustive relations agree") {
    const AlgebraPtr z2 = share(group_algebra(FiniteGroup::cyclic(2), Q));
    const AlgModule r = AlgModule::regular(z2, Side::right);
    const AlgModule l = AlgModule::regular(z2, Side::left);
    CHECK(tensor_over_algebra(r, l).dim == 2);
    CHECK(tensor_over_algebra_exhaustive(r, l).dim == 2);
  }
  SUBCASE("trivial ⊗ sign over k[S3] vanishes") {
    const AlgModule triv_right(a, Side::right, 1,
                               one_dim_module(a, Side::left, std::vector<long long>(6, 1)).actions());
    CHECK(tensor_over_algebra(triv_right, sign).dim == 0);
    CHECK(tensor_over_algebra_exhaustive(triv_right, sign).dim == 0);
    CHECK(tensor_over_algebra(triv_right, a_left).dim == 1);
  }
  CHECK_THROWS_AS(tensor_over_algebra(a_left, a_left), StructureMismatch);
}

TEST_CASE("semisimplicity certificate") {
  const auto z2 = semisimplicity_certificate(group_algebra(FiniteGroup::cyclic(2), Q));
  CHECK(z2.certified());
  CHECK(z2.determinant == Q.from_int(4));

  const auto dn = semisimplicity_certificate(dual_numbers(Q));
  CHECK_FALSE(dn.certified());
  CHECK(dn.gram == Matrix::from_ints(Q, {{2, 0}, {0, 0}}));

  CHECK(semisimplicity_certificate(matrix_algebra(2, Q)).certified());
  // modular group algebra: the trace form degenerates
  CHECK_FALSE(semisimplicity_certificate(group_algebra(FiniteGroup::cyclic(2), Field::prime(2)))
                  .certified());
}

TEST_CASE("split_simple_count") {
  CHECK(split_simple_count(group_algebra(FiniteGroup::symmetric(3), Q), true) ==
        FiniteGroup::symmetric(3).conjugacy_class_count());
  CHECK(split_simple_count(group_algebra(FiniteGroup::cyclic(3), Field::prime(7)), true) == 3);
  CHECK(split_simple_count(ground_field_algebra(Q), true) == 1);
  CHECK(split_simple_count(matrix_algebra(3, Q), true) == 1);
  CHECK_THROWS_AS(split_simple_count(group_algebra(FiniteGroup::cyclic(3), Q), false),
                  PreconditionError);
  CHECK_THROWS_AS(split_simple_count(dual_numbers(Q), true), PreconditionError);
}

TEST_CASE("sum of squared simple dimensions equals the algebra dimension") {
  struct Case {
    FinAlgebra a;
    std::vector<std::size_t> dims;
  };
  const std::vector<Case> cases{
      {group_algebra(FiniteGroup::symmetric(3), Q), {1, 1, 2}},
      {group_algebra(FiniteGroup::symmetric(4), Q), {1, 1, 2, 3, 3}},
      {group_algebra(FiniteGroup::cyclic(3), Field::prime(7)), {1, 1, 1}},
      {matrix_algebra(2, Q), {2}},
      {tensor_product_algebra(matrix_algebra(2, Q), group_algebra(FiniteGroup::cyclic(2), Q)),
       {2, 2}}};
  for (const auto& c : cases) {
    auto dims = simple_dimensions(c.a);
    std::size_t sum = 0;
    for (auto d : dims) sum += d * d;
    CHECK(sum == c.a.dim());
    CHECK(dims.size() == split_simple_count(c.a, true));
    std::sort(dims.begin(), dims.end());
    CHECK(dims == c.dims);
  }
  // over Q the group Z3 does not split: x^2 + x + 1 has no rational root
  CHECK_THROWS_AS(central_primitive_idempotents(group_algebra(FiniteGroup::cyclic(3), Q)),
                  PreconditionError);
}

TEST_CASE("central primitive idempotents are orthogonal and sum to 1") {
  const FinAlgebra a = group_algebra(FiniteGroup::symmetric(3), Q);
  const auto es = central_primitive_idempotents(a);
  REQUIRE(es.size() == 3);
  Vector sum = zero_vector(Q, a.dim());
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t k = 0; k < a.dim(); ++k) sum[k] += es[i][k];
    for (std::size_t j = 0; j < es.size(); ++j) {
      const Vector p = a.multiply(es[i], es[j]);
      CHECK(p == (i == j ? es[i] : zero_vector(Q, a.dim())));
    }
  }
  CHECK(sum == a.unit());
}

TEST_CASE("Morita: endomorphism algebra of a projective generator") {
  const auto s3 = FiniteGroup::symmetric(3);
  const AlgebraPtr a = share(group_algebra(s3, Q));
  const AlgModule reg = AlgModule::regular(a, Side::left);
  const AlgModule triv = one_dim_module(a, Side::left, std::vector<long long>(6, 1));
  const AlgModule sign = one_dim_module(a, Side::left, sign_character(s3, 3));
  const std::vector<AlgModule> tests{reg, triv, sign, direct_sum(triv, sign)};

  SUBCASE("p = A") {
    const MoritaData d = endomorphism_algebra_morita(reg, tests);
    CHECK(validate_algebra(*d.b).passed());
    CHECK(d.b->dim() == a->dim());
    CHECK(d.counit_check.passed());
    // a -> R_a (right multiplication) is an algebra isomorphism A -> b,
    // because phi . psi = psi ∘ phi turns R_a . R_c into R_{ac}.
    std::vector<Vector> flat;
    for (const auto& phi : d.basis) {
      Vector v;
      for (std::size_t r = 0; r < phi.rows(); ++r)
        for (std::size_t c = 0; c < phi.cols(); ++c) v.push_back(phi(r, c));
      flat.push_back(v);
    }
    const CoordinateSystem cs(Q, 36, flat);
    std::vector<Vector> image;
    for (std::size_t i = 0; i < a->dim(); ++i) {
      const Matrix ri = a->right_multiplication(i);
      Vector v;
      for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) v.push_back(ri(r, c));
      image.push_back(*cs.coordinates(v));
    }
    for (std::size_t i = 0; i < a->dim(); ++i) {
      for (std::size_t j = 0; j < a->dim(); ++j) {
        Vector ij = zero_vector(Q, a->dim());
        for (const auto& [k, c] : a->product(i, j))
          for (std::size_t t = 0; t < a->dim(); ++t) ij[t].add_mul(c, image[k][t]);
        CHECK(d.b->multiply(image[i], image[j]) == ij);
      }
    }
  }
  SUBCASE("p = A ⊕ A") {
    const MoritaData d = endomorphism_algebra_morita(direct_sum(reg, reg), tests);
    CHECK(validate_algebra(*d.b).passed());
    CHECK(d.b->dim() == 4 * a->dim());
    CHECK(d.counit_check.passed());
    CHECK(split_simple_count(*d.b, true) == split_simple_count(*a, true));
  }
  SUBCASE("a module that is not a generator fails the counit check") {
    const MoritaData d = endomorphism_algebra_morita(triv, {sign});
    CHECK_FALSE(d.counit_check.passed());
  }
  CHECK_THROWS_AS(endomorphism_algebra_morita(AlgModule::zero(a, Side::left), tests),
                  PreconditionError);
}

TEST_CASE("algebra json round trip") {
  const FinAlgebra a = tensor_product_algebra(dual_numbers(Q), matrix_algebra(2, Q));
  const FinAlgebra b = algebra_from_json(algebra_to_json(a));
  CHECK(same_algebra(a, b));
  const FinAlgebra z3 = group_algebra(FiniteGroup::cyclic(3), Field::prime(7));
  CHECK(same_algebra(z3, algebra_from_json(algebra_to_json(z3))));
  CHECK_THROWS_AS(algebra_from_json(nlohmann::json{{"dim", 1}}), ValidationError);
  auto j = algebra_to_json(z3);
  j["field"] = {{"p", 9}};
  CHECK_THROWS_AS(algebra_from_json(j), ValidationError);
  CHECK(scalar_from_json(Q, "3/6") == Q.from_fraction(1, 2));
}
