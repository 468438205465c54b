#include <random>

#include "balcat/common/errors.hpp"
#include "balcat/exactla/linalg.hpp"
#include "doctest.h"

using namespace balcat;

namespace {

// Independent rank oracle: plain mpq_class Gaussian elimination with partial
// pivot search, no shared code with RowSpace.
std::size_t oracle_rank(const std::vector<std::vector<long long>>& a) {
  if (a.empty()) return 0;
  std::vector<std::vector<mpq_class>> m;
  for (const auto& row : a) {
    std::vector<mpq_class> r;
    for (long long v : row) r.emplace_back(static_cast<long>(v));
    m.push_back(r);
  }
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<long long>> random_rank_matrix(std::mt19937_64& rng, std::size_t rows,
                                                        std::size_t cols, std::size_t r) {
  // product of random rows x r and r x cols integer factors
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<std::vector<long long>> left(rows, std::vector<long long>(r));
  std::vector<std::vector<long long>> right(r, std::vector<long long>(cols));
  for (auto& row : left)
    for (auto& v : row) v = d(rng);
  for (auto& row : right)
    for (auto& v : row) v = d(rng);
  std::vector<std::vector<long long>> out(rows, std::vector<long long>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += left[i][k] * right[k][j];
  return out;
}

Matrix to_matrix(const Field& f, const std::vector<std::vector<long long>>& a,
                 std::size_t cols = 0) {
  Matrix m(f, a.size(), a.empty() ? cols : a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) m(i, j) = f.from_int(a[i][j]);
  return m;
}

}  // namespace

TEST_CASE("scalars are kept in canonical form") {
  const Field q = Field::rational();
  CHECK(q.from_fraction(2, 4) == q.from_fraction(1, 2));
  CHECK(q.from_fraction(-3, -6).to_string() == "1/2");
  CHECK((q.from_fraction(1, 3) + q.from_fraction(2, 3)).is_one());
  const Field f7 = Field::prime(7);
  CHECK(f7.from_int(-1).as_residue() == 6);
  CHECK((f7.from_int(3) * f7.from_int(5)).as_residue() == 1);
  CHECK(f7.from_fraction(1, 3) == f7.from_int(5));
  CHECK(f7.parse("2/3") == f7.from_int(3));
  CHECK_THROWS_AS(f7.parse("1/7"), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(9), std::invalid_argument);
}

TEST_CASE("mixing fields is rejected") {
  const auto a = Field::rational().one();
  const auto b = Field::prime(5).one();
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_FALSE(a == b);
  const Matrix mq = Matrix::identity(Field::rational(), 2);
  const Matrix mp = Matrix::identity(Field::prime(5), 2);
  CHECK_THROWS_AS(mq * mp, FieldMismatch);
}

TEST_CASE("kernel_basis examples") {
  const Field q = Field::rational();
  CHECK(kernel_basis(Matrix::identity(q, 2)).empty());

  const auto k = kernel_basis(Matrix::from_ints(q, {{1, 1}}));
  REQUIRE(k.size() == 1);
  // one-dimensional: any basis vector is a multiple of (1, -1)
  CHECK(k[0][0] == -k[0][1]);
  CHECK_FALSE(k[0][0].is_zero());
}

TEST_CASE("kernel of random 5x8 matrices of prescribed rank") {
  std::mt19937_64 rng(11);
  const Field q = Field::rational();
  for (std::size_t r = 0; r <= 5; ++r) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto a = random_rank_matrix(rng, 5, 8, r);
      const std::size_t expected_rank = oracle_rank(a);
      const Matrix m = to_matrix(q, a);
      const auto ker = kernel_basis(m);
      CHECK(rank(m) == expected_rank);
      CHECK(ker.size() == 8 - expected_rank);
      for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
      CHECK(rank(Matrix::from_rows(q, 8, ker)) == ker.size());
    }
  }
}

TEST_CASE("cokernel examples") {
  const Field q = Field::rational();
  SUBCASE("zero map k^2 -> k^3") {
    const auto c = cokernel(Matrix(q, 3, 2));
    CHECK(c.dim == 3);
    CHECK(c.projection == Matrix::identity(q, 3));
  }
  SUBCASE("identity") {
    const auto c = cokernel(Matrix::identity(q, 4));
    CHECK(c.dim == 0);
    CHECK(c.projection.rows() == 0);
  }
  SUBCASE("rank 2 map k^4 -> k^3") {
    const std::vector<std::vector<long long>> a{{1, 0, 1, 2}, {0, 1, 1, -1}, {1, 1, 2, 1}};
    REQUIRE(oracle_rank(a) == 2);
    const Matrix m = to_matrix(q, a);
    const auto c = cokernel(m);
    CHECK(c.dim == 1);
    CHECK((c.projection * m).is_zero());
    CHECK(rank(c.projection) == 1);
  }
}

TEST_CASE("solve_affine examples") {
  const Field q = Field::rational();
  const Vector b{q.from_int(3), q.from_fraction(-1, 2)};
  CHECK(*solve_affine(Matrix::identity(q, 2), b) == b);

  const Matrix ones = Matrix::from_ints(q, {{1, 1}});
  const auto x = solve_affine(ones, Vector{q.zero()});
  REQUIRE(x);
  CHECK(is_zero(ones.apply(*x)));

  CHECK_FALSE(solve_affine(Matrix::from_ints(q, {{0}}), Vector{q.one()}));
  CHECK_THROWS_AS(solve_affine(ones, Vector{q.one(), q.one()}), DimensionMismatch);
}

TEST_CASE("rank-nullity and cokernel annihilation on random matrices") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> dim(0, 7);
  for (const Field f : {Field::rational(), Field::prime(7), Field::prime(2)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = dim(rng);
      const std::size_t cols = dim(rng);
      const std::size_t r = std::min<std::size_t>(dim(rng), std::min(rows, cols));
      const Matrix m = to_matrix(f, random_rank_matrix(rng, rows, cols, r), cols);
      const std::size_t rk = rank(m);
      const auto ker = kernel_basis(m);
      CHECK(rk + ker.size() == cols);
      for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
      const auto c = cokernel(m);
      CHECK(c.dim == rows - rk);
      if (c.dim > 0 && cols > 0) CHECK((c.projection * m).is_zero());
      CHECK(rank(c.projection) == c.dim);
    }
  }
}

TEST_CASE("prime-field arithmetic agrees with reduced rational arithmetic") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  const Field q = Field::rational();
  const Field f = Field::prime(101);
  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::vector<long long>> a(4, std::vector<long long>(4));
    for (auto& row : a)
      for (auto& v : row) v = d(rng);
    const Matrix mq = to_matrix(q, a);
    const Matrix mf = to_matrix(f, a);
    // the determinant of an integer matrix is an integer; reduction commutes
    CHECK(f.from_rational(determinant(mq).as_rational()) == determinant(mf));
    const auto inv_q = inverse(mq);
    if (!inv_q) continue;
    bool units = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if ((*inv_q)(i, j).as_rational().get_den() % 101 == 0) units = false;
    if (!units) continue;
    const auto inv_f = inverse(mf);
    REQUIRE(inv_f);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(f.from_rational((*inv_q)(i, j).as_rational()) == (*inv_f)(i, j));
    ++compared;
  }
  CHECK(compared > 20);
}

TEST_CASE("right inverse, coordinates, inverse") {
  const Field q = Field::rational();
  const Matrix p = Matrix::from_ints(q, {{1, 2, 0, 1}, {0, 1, 1, 3}});
  const Matrix s = right_inverse(p);
  CHECK((p * s).is_identity());
  CHECK_THROWS_AS(right_inverse(Matrix::from_ints(q, {{1, 1}, {2, 2}})), PreconditionError);

  const std::vector<Vector> basis{{q.one(), q.one(), q.zero()}, {q.zero(), q.one(), q.one()}};
  const auto c = coordinates(basis, Vector{q.from_int(2), q.from_int(5), q.from_int(3)});
  REQUIRE(c);
  CHECK((*c)[0] == q.from_int(2));
  CHECK((*c)[1] == q.from_int(3));
  CHECK_FALSE(coordinates(basis, Vector{q.one(), q.zero(), q.zero()}));

  const Matrix m = Matrix::from_ints(q, {{2, 1}, {1, 1}});
  CHECK((m * *inverse(m)).is_identity());
  CHECK_FALSE(inverse(Matrix::from_ints(q, {{1, 2}, {2, 4}})));
  CHECK(determinant(m) == q.one());
}

TEST_CASE("kron indexes pairs lexicographically") {
  const Field q = Field::rational();
  const Matrix a = Matrix::from_ints(q, {{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_ints(q, {{0, 1}, {1, 0}});
  const Matrix k = kron(a, b);
  CHECK(k(0, 1) == q.one());
  CHECK(k(3, 2) == q.from_int(4));
  CHECK(k(2, 1) == q.from_int(3));
  // mixed product property
  CHECK(kron(a, b) * kron(b, a) == kron(a * b, b * a));
}
