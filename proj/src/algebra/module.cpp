#include "balcat/algebra/module.hpp"

#include "balcat/common/errors.hpp"

namespace balcat {

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

bool same_algebra(const FinAlgebra& a, const FinAlgebra& b) {
  if (&a == &b) return true;
  if (a.field() != b.field() || a.dim() != b.dim() || a.unit() != b.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (a.product(i, j) != b.product(i, j)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- AlgModule

AlgModule::AlgModule(AlgebraPtr algebra, Side side, std::size_t dim, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), side_(side), dim_(dim), action_(std::move(action)) {
  if (!algebra_) throw std::invalid_argument("AlgModule: null algebra");
  if (action_.size() != algebra_->dim()) {
    throw DimensionMismatch("AlgModule: expected " + std::to_string(algebra_->dim()) +
                            " action matrices, got " + std::to_string(action_.size()));
  }
  for (const auto& m : action_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw DimensionMismatch("AlgModule: action shape");
    if (m.field() != algebra_->field()) throw FieldMismatch("AlgModule: action field");
  }
  for (const auto& g : algebra_->generators()) generator_action_.push_back(action_of(g));
}

AlgModule AlgModule::regular(AlgebraPtr algebra, Side side) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < algebra->dim(); ++i) {
    action.push_back(side == Side::left ? algebra->left_multiplication(i)
                                        : algebra->right_multiplication(i));
  }
  const std::size_t n = algebra->dim();
  return AlgModule(std::move(algebra), side, n, std::move(action));
}

AlgModule AlgModule::zero(AlgebraPtr algebra, Side side) {
  std::vector<Matrix> action(algebra->dim(), Matrix(algebra->field(), 0, 0));
  return AlgModule(std::move(algebra), side, 0, std::move(action));
}

Matrix AlgModule::action_of(const Vector& x) const { return action_of(sparsify(x)); }

Matrix AlgModule::action_of(const SparseVector& x) const {
  Matrix out(algebra_->field(), dim_, dim_);
  for (const auto& [i, c] : x) {
    const Matrix& a = action_[i];
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t s = 0; s < dim_; ++s) {
        if (!a(r, s).is_zero()) out(r, s).add_mul(c, a(r, s));
      }
    }
  }
  return out;
}

CheckReport validate_module(const AlgModule& m, bool exhaustive) {
  CheckReport report(std::string(side_name(m.side())) + " module over " + m.algebra().name());
  const FinAlgebra& a = m.algebra();
  const Matrix unit = m.action_of(a.unit());
  report.add("unit acts as identity", unit.is_identity());

  std::vector<SparseVector> elements;
  if (exhaustive) {
    for (std::size_t i = 0; i < a.dim(); ++i) elements.push_back({{i, a.field().one()}});
  } else {
    elements = a.generators();
  }
  std::string failure;
  for (std::size_t i = 0; i < a.dim() && failure.empty(); ++i) {
    for (std::size_t g = 0; g < elements.size(); ++g) {
      // rho(e_i g) against rho(e_i) rho(g) (left) or rho(g) rho(e_i) (right)
      Vector eig = zero_vector(a.field(), a.dim());
      for (const auto& [k, c] : elements[g]) {
        for (const auto& [t, d] : a.product(i, k)) eig[t].add_mul(c, d);
      }
      const Matrix lhs = m.action_of(eig);
      const Matrix rg = m.action_of(elements[g]);
      const Matrix rhs = m.side() == Side::left ? m.action(i) * rg : rg * m.action(i);
      if (lhs != rhs) {
        failure = "action not multiplicative at basis element " + std::to_string(i) + " and " +
                  (exhaustive ? "basis element " : "generator ") + std::to_string(g);
        break;
      }
    }
  }
  report.add("action is multiplicative", failure.empty(), failure);
  return report;
}

AlgModule direct_sum(const AlgModule& a, const AlgModule& b) {
  if (!same_algebra(a.algebra(), b.algebra()) || a.side() != b.side()) {
    throw StructureMismatch("direct_sum: modules over different algebras or sides");
  }
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a.algebra().dim(); ++i) {
    action.push_back(direct_sum(a.action(i), b.action(i)));
  }
  return AlgModule(a.algebra_ptr(), a.side(), a.dim() + b.dim(), std::move(action));
}

AlgModule change_of_basis(const AlgModule& m, const Matrix& p) {
  const auto inv = inverse(p);
  if (!inv) throw PreconditionError("change_of_basis: matrix is singular");
  std::vector<Matrix> action;
  for (const auto& a : m.actions()) action.push_back(*inv * a * p);
  return AlgModule(m.algebra_ptr(), m.side(), m.dim(), std::move(action));
}

AlgModule opposite_side(const AlgModule& m, AlgebraPtr opposite) {
  if (opposite->dim() != m.algebra().dim()) throw StructureMismatch("opposite_side: dimension");
  return AlgModule(std::move(opposite), m.side() == Side::left ? Side::right : Side::left, m.dim(),
                   m.actions());
}

// ---------------------------------------------------------------- AlgBimodule

AlgBimodule::AlgBimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim,
                         std::vector<Matrix> left_action, std::vector<Matrix> right_action)
    : left_(std::move(left), Side::left, dim, std::move(left_action)),
      right_(std::move(right), Side::right, dim, std::move(right_action)) {
  if (left_.algebra().field() != right_.algebra().field()) {
    throw FieldMismatch("AlgBimodule: algebras over different fields");
  }
}

CheckReport validate_bimodule(const AlgBimodule& x, bool exhaustive) {
  CheckReport report("bimodule");
  report.merge(validate_module(x.as_left(), exhaustive));
  report.merge(validate_module(x.as_right(), exhaustive));
  std::string failure;
  const auto& ls = exhaustive ? x.as_left().actions() : x.as_left().generator_actions();
  const auto& rs = exhaustive ? x.as_right().actions() : x.as_right().generator_actions();
  for (std::size_t i = 0; i < ls.size() && failure.empty(); ++i) {
    for (std::size_t j = 0; j < rs.size(); ++j) {
      if (ls[i] * rs[j] != rs[j] * ls[i]) {
        failure = "left element " + std::to_string(i) + " and right element " +
                  std::to_string(j) + " do not commute";
        break;
      }
    }
  }
  report.add("actions commute", failure.empty(), failure);
  return report;
}

// ---------------------------------------------------------------- intertwiners

std::vector<Matrix> intertwiner_basis(const Field& field, std::size_t src_dim,
                                      std::size_t dst_dim,
                                      const std::vector<const Matrix*>& src_ops,
                                      const std::vector<const Matrix*>& dst_ops,
                                      const std::vector<std::size_t>* src_labels,
                                      const std::vector<std::size_t>* dst_labels) {
  if (src_ops.size() != dst_ops.size()) throw DimensionMismatch("intertwiner_basis: op counts");
  // Unknowns are the allowed entries f(r, c).
  std::vector<long> var(dst_dim * src_dim, -1);
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t r = 0; r < dst_dim; ++r) {
    for (std::size_t c = 0; c < src_dim; ++c) {
      if (src_labels && dst_labels && (*src_labels)[c] != (*dst_labels)[r]) continue;
      var[r * src_dim + c] = static_cast<long>(entries.size());
      entries.emplace_back(r, c);
    }
  }
  const std::size_t nvars = entries.size();
  RowSpace eqs(field, nvars);
  for (std::size_t k = 0; k < src_ops.size() && !eqs.full(); ++k) {
    const Matrix& s = *src_ops[k];
    const Matrix& t = *dst_ops[k];
    // sparse columns of S and rows of T
    std::vector<SparseVector> scol(src_dim);
    for (std::size_t a = 0; a < src_dim; ++a) {
      for (std::size_t c = 0; c < src_dim; ++c) {
        if (!s(a, c).is_zero()) scol[c].emplace_back(a, s(a, c));
      }
    }
    std::vector<SparseVector> trow(dst_dim);
    for (std::size_t r = 0; r < dst_dim; ++r) {
      for (std::size_t a = 0; a < dst_dim; ++a) {
        if (!t(r, a).is_zero()) trow[r].emplace_back(a, t(r, a));
      }
    }
    // (f S - T f)(r, c) = sum_a f(r, a) S(a, c) - sum_a T(r, a) f(a, c)
    Vector row = zero_vector(field, nvars);
    std::vector<std::size_t> touched;
    for (std::size_t r = 0; r < dst_dim && !eqs.full(); ++r) {
      for (std::size_t c = 0; c < src_dim && !eqs.full(); ++c) {
        touched.clear();
        for (const auto& [a, v] : scol[c]) {
          const long x = var[r * src_dim + a];
          if (x < 0) continue;
          row[x] += v;
          touched.push_back(static_cast<std::size_t>(x));
        }
        for (const auto& [a, v] : trow[r]) {
          const long x = var[a * src_dim + c];
          if (x < 0) continue;
          row[x] -= v;
          touched.push_back(static_cast<std::size_t>(x));
        }
        bool nonzero = false;
        for (std::size_t x : touched) nonzero = nonzero || !row[x].is_zero();
        if (nonzero) {
          Vector copy = row;
          eqs.insert(std::move(copy));
        }
        for (std::size_t x : touched) row[x] = field.zero();
      }
    }
  }
  std::vector<Matrix> out;
  for (const Vector& v : eqs.null_space()) {
    Matrix f(field, dst_dim, src_dim);
    for (std::size_t x = 0; x < nvars; ++x) f(entries[x].first, entries[x].second) = v[x];
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

std::vector<const Matrix*> pointers(const std::vector<Matrix>& ms) {
  std::vector<const Matrix*> out;
  for (const auto& m : ms) out.push_back(&m);
  return out;
}

}  // namespace

std::vector<Matrix> hom_space(const AlgModule& m, const AlgModule& n) {
  if (m.side() != n.side()) throw StructureMismatch("hom_space: modules on different sides");
  if (!same_algebra(m.algebra(), n.algebra())) {
    throw StructureMismatch("hom_space: modules over different algebras");
  }
  return intertwiner_basis(m.algebra().field(), m.dim(), n.dim(), pointers(m.generator_actions()),
                           pointers(n.generator_actions()));
}

std::vector<Matrix> hom_space(const AlgBimodule& m, const AlgBimodule& n) {
  if (!same_algebra(m.left_algebra(), n.left_algebra()) ||
      !same_algebra(m.right_algebra(), n.right_algebra())) {
    throw StructureMismatch("hom_space: bimodules over different algebras");
  }
  auto src = pointers(m.as_left().generator_actions());
  auto dst = pointers(n.as_left().generator_actions());
  for (const auto& a : m.as_right().generator_actions()) src.push_back(&a);
  for (const auto& a : n.as_right().generator_actions()) dst.push_back(&a);
  return intertwiner_basis(m.left_algebra().field(), m.dim(), n.dim(), src, dst);
}

namespace {

Cokernel tensor_with(const AlgModule& m, const AlgModule& n, const std::vector<Matrix>& mr,
                     const std::vector<Matrix>& nl) {
  if (m.side() != Side::right || n.side() != Side::left) {
    throw StructureMismatch("tensor_over_algebra: needs a right module and a left module");
  }
  if (!same_algebra(m.algebra(), n.algebra())) {
    throw StructureMismatch("tensor_over_algebra: modules over different algebras");
  }
  const Field& f = m.algebra().field();
  const Matrix im = Matrix::identity(f, m.dim());
  const Matrix in = Matrix::identity(f, n.dim());
  std::vector<Matrix> blocks;
  for (std::size_t g = 0; g < mr.size(); ++g) blocks.push_back(kron(mr[g], in) - kron(im, nl[g]));
  return cokernel_of_columns(f, m.dim() * n.dim(), blocks);
}

}  // namespace

Cokernel tensor_over_algebra(const AlgModule& m, const AlgModule& n) {
  return tensor_with(m, n, m.generator_actions(), n.generator_actions());
}

Cokernel tensor_over_algebra_exhaustive(const AlgModule& m, const AlgModule& n) {
  return tensor_with(m, n, m.actions(), n.actions());
}

}  // namespace balcat
