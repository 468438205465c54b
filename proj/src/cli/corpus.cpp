#include "balcat/cli/corpus.hpp"

#include "balcat/common/errors.hpp"

namespace balcat {

Matrix Corpus::matrix(const Field& f, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.from_int(d(rng_));
  return m;
}

GradedObject Corpus::graded_object(const GroupPtr& k, std::size_t max_total, std::size_t min_total) {
  const std::size_t n = min_total + below(max_total - min_total + 1);
  std::vector<std::size_t> dims(k->order(), 0);
  for (std::size_t i = 0; i < n; ++i) ++dims[below(k->order())];
  return GradedObject::from_dims(k, dims);
}

Matrix Corpus::graded_automorphism(const GradedObject& obj, const Field& f) {
  std::uniform_int_distribution<int> d(-2, 2);
  for (;;) {
    Matrix p(f, obj.dim(), obj.dim());
    for (std::size_t r = 0; r < obj.dim(); ++r)
      for (std::size_t c = 0; c < obj.dim(); ++c)
        if (obj.grade(r) == obj.grade(c)) p(r, c) = f.from_int(d(rng_));
    if (inverse(p)) return p;
  }
}

GradedModuleObject Corpus::free_module(const AlgebraObjectPtr& b, Side side, std::size_t max_rank) {
  const GradedModuleObject m = balcat::free_module(b, side, graded_object(b->group_ptr(), max_rank, 1));
  return change_of_basis(m, graded_automorphism(m.object(), b->field()));
}

GradedBimoduleObject Corpus::bimodule(const EnvelopingAlgebra& e, std::size_t max_rank) {
  auto one = [&] {
    return box_object(free_module(e.left(), Side::left, max_rank),
                      free_module(e.right(), Side::right, max_rank));
  };
  GradedBimoduleObject x = below(3) == 0 ? direct_sum(one(), one()) : one();
  return change_of_basis(x, graded_automorphism(x.object(), x.field()));
}

GradedBimoduleObject change_of_basis(const GradedBimoduleObject& x, const Matrix& p) {
  if (!is_grade_preserving(p, x.object(), x.object())) {
    throw ValidationError("change_of_basis: basis change is not grade preserving");
  }
  const auto pinv = inverse(p);
  if (!pinv) throw std::invalid_argument("change_of_basis: singular basis change");
  std::vector<Matrix> ls, rs;
  for (const auto& l : x.bimodule().as_left().actions()) ls.push_back(*pinv * l * p);
  for (const auto& r : x.bimodule().as_right().actions()) rs.push_back(*pinv * r * p);
  return GradedBimoduleObject(x.left_ptr(), x.right_ptr(), x.object(), std::move(ls), std::move(rs));
}

GradedBimoduleObject direct_sum(const GradedBimoduleObject& x, const GradedBimoduleObject& y) {
  if (!same_algebra_object(x.left_algebra(), y.left_algebra()) ||
      !same_algebra_object(x.right_algebra(), y.right_algebra())) {
    throw StructureMismatch("direct_sum: bimodules over different algebras");
  }
  const auto& xl = x.bimodule().as_left().actions();
  const auto& yl = y.bimodule().as_left().actions();
  const auto& xr = x.bimodule().as_right().actions();
  const auto& yr = y.bimodule().as_right().actions();
  std::vector<Matrix> ls, rs;
  for (std::size_t i = 0; i < xl.size(); ++i) ls.push_back(balcat::direct_sum(xl[i], yl[i]));
  for (std::size_t j = 0; j < xr.size(); ++j) rs.push_back(balcat::direct_sum(xr[j], yr[j]));
  return GradedBimoduleObject(x.left_ptr(), x.right_ptr(), balcat::direct_sum(x.object(), y.object()),
                              std::move(ls), std::move(rs));
}

}  // namespace balcat
