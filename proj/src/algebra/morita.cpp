#include "balcat/algebra/morita.hpp"

#include "balcat/common/errors.hpp"

namespace balcat {

namespace {

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  }
  return v;
}

Vector coordinates_in(const CoordinateSystem& cs, const Matrix& m) {
  auto c = cs.coordinates(flatten(m));
  if (!c) throw std::logic_error("morita: composite left the hom space");
  return *c;
}

}  // namespace

MoritaData endomorphism_algebra_morita(const AlgModule& p, const std::vector<AlgModule>& tests) {
  if (p.side() != Side::left) throw StructureMismatch("morita: p must be a left module");
  if (p.dim() == 0) throw PreconditionError("morita: p must be nonzero");
  const Field& f = p.algebra().field();
  std::vector<Matrix> basis = hom_space(p, p);
  const std::size_t r = basis.size();
  std::vector<Vector> flat;
  for (const auto& phi : basis) flat.push_back(flatten(phi));
  const CoordinateSystem cs(f, p.dim() * p.dim(), flat);

  std::vector<SparseVector> products;
  products.reserve(r * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      products.push_back(sparsify(coordinates_in(cs, basis[j] * basis[i])));
    }
  }
  Vector unit = coordinates_in(cs, Matrix::identity(f, p.dim()));
  AlgebraPtr b = share(FinAlgebra(f, r, std::move(products), std::move(unit),
                                  {"End(" + p.algebra().name() + "-module)", false, {}}));

  MoritaData data{p, b, basis, AlgModule(b, Side::right, p.dim(), basis), CheckReport("counit")};
  for (std::size_t t = 0; t < tests.size(); ++t) {
    const AlgModule& x = tests[t];
    std::vector<Matrix> hb;
    const AlgModule h = hom_from_generator(data, x, &hb);
    const Cokernel tensor = tensor_over_algebra(data.p_over_b, h);
    // ev(p_i ⊗ f_s) = f_s(p_i), at index i * dim(h) + s
    Matrix ev(f, x.dim(), p.dim() * h.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) {
      for (std::size_t s = 0; s < h.dim(); ++s) {
        for (std::size_t k = 0; k < x.dim(); ++k) ev(k, i * h.dim() + s) = hb[s](k, i);
      }
    }
    bool ok = tensor.dim == x.dim();
    std::string detail = "dim p⊗_b Hom(p,X) = " + std::to_string(tensor.dim) +
                         ", dim X = " + std::to_string(x.dim());
    if (ok && tensor.dim > 0) {
      const Matrix section = right_inverse(tensor.projection);
      const Matrix induced = ev * section;
      const bool factors = induced * tensor.projection == ev;
      const std::size_t rk = rank(induced);
      ok = factors && rk == x.dim();
      detail += ", induced map " + std::string(factors ? "well defined" : "not well defined") +
                " of rank " + std::to_string(rk);
    }
    data.counit_check.add("test module " + std::to_string(t), ok, detail);
  }
  return data;
}

AlgModule hom_from_generator(const MoritaData& data, const AlgModule& x,
                             std::vector<Matrix>* hom_basis) {
  const Field& f = data.b->field();
  std::vector<Matrix> hb = hom_space(data.p, x);
  const std::size_t s = hb.size();
  std::vector<Matrix> action;
  if (s > 0) {
    std::vector<Vector> flat;
    for (const auto& h : hb) flat.push_back(flatten(h));
    const CoordinateSystem cs(f, x.dim() * data.p.dim(), flat);
    for (const auto& phi : data.basis) {
      Matrix a(f, s, s);
      for (std::size_t col = 0; col < s; ++col) {
        const Vector c = coordinates_in(cs, hb[col] * phi);
        for (std::size_t row = 0; row < s; ++row) a(row, col) = c[row];
      }
      action.push_back(std::move(a));
    }
  } else {
    action.assign(data.basis.size(), Matrix(f, 0, 0));
  }
  if (hom_basis) *hom_basis = std::move(hb);
  return AlgModule(data.b, Side::left, s, std::move(action));
}

}  // namespace balcat
