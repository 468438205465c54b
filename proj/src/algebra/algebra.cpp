#include "balcat/algebra/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "balcat/common/errors.hpp"

namespace balcat {

SparseVector sparsify(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  }
  return s;
}

Vector densify(const Field& f, std::size_t n, const SparseVector& v) {
  Vector d = zero_vector(f, n);
  for (const auto& [i, x] : v) d[i] = x;
  return d;
}

namespace {

// Sort by index, add up repeated indices, drop zeros.
void normalize(SparseVector& v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i + 1;
    Scalar sum = v[i].second;
    while (j < v.size() && v[j].first == v[i].first) sum += v[j++].second;
    if (!sum.is_zero()) v[out++] = {v[i].first, std::move(sum)};
    i = j;
  }
  v.resize(out);
}

bool same(const SparseVector& a, const SparseVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].first != b[i].first || a[i].second != b[i].second) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- FinAlgebra

FinAlgebra::FinAlgebra(Field field, std::size_t dim, std::vector<SparseVector> products,
                       Vector unit, Options options)
    : field_(field),
      dim_(dim),
      products_(std::move(products)),
      unit_(std::move(unit)),
      name_(std::move(options.name)),
      maschke_risk_(options.maschke_risk) {
  if (products_.size() != dim_ * dim_) throw DimensionMismatch("FinAlgebra: structure size");
  if (unit_.size() != dim_) throw DimensionMismatch("FinAlgebra: unit length");
  for (const auto& u : unit_) {
    if (!field_.contains(u)) throw FieldMismatch("FinAlgebra: unit over another field");
  }
  for (const auto& p : products_) {
    for (const auto& [k, v] : p) {
      if (k >= dim_) throw DimensionMismatch("FinAlgebra: structure index out of range");
      if (!field_.contains(v)) throw FieldMismatch("FinAlgebra: constant over another field");
    }
  }
  compute_generators(options.generator_hint);
}

FinAlgebra FinAlgebra::from_dense(Field field, const std::vector<std::vector<Vector>>& structure,
                                  Vector unit, Options options) {
  const std::size_t n = structure.size();
  std::vector<SparseVector> products;
  products.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (structure[i].size() != n) throw DimensionMismatch("FinAlgebra: structure shape");
    for (std::size_t j = 0; j < n; ++j) {
      if (structure[i][j].size() != n) throw DimensionMismatch("FinAlgebra: structure shape");
      products.push_back(sparsify(structure[i][j]));
    }
  }
  return FinAlgebra(field, n, std::move(products), std::move(unit), std::move(options));
}

Vector FinAlgebra::right_multiply_basis(const SparseVector& x, std::size_t i) const {
  Vector out = zero_vector(field_, dim_);
  for (const auto& [k, xk] : x) {
    for (const auto& [m, c] : product(k, i)) out[m].add_mul(xk, c);
  }
  return out;
}

void FinAlgebra::compute_generators(const std::optional<std::vector<SparseVector>>& hint) {
  // Span of all products of generators, grown by right multiplication from the
  // unit. applied[q] counts how many generators were already applied to
  // queue[q], so adding a generator only processes what is new.
  RowSpace span(field_, dim_);
  std::vector<SparseVector> queue;
  std::vector<std::size_t> applied;
  auto push = [&](const Vector& v) {
    if (span.insert(v)) {
      queue.push_back(sparsify(v));
      applied.push_back(0);
    }
  };
  auto close = [&]() {
    for (std::size_t q = 0; q < queue.size() && !span.full(); ++q) {
      while (applied[q] < generators_.size() && !span.full()) {
        const SparseVector& g = generators_[applied[q]++];
        Vector v = zero_vector(field_, dim_);
        for (const auto& [i, gi] : g) {
          const Vector part = right_multiply_basis(queue[q], i);
          for (std::size_t m = 0; m < dim_; ++m) {
            if (!part[m].is_zero()) v[m].add_mul(gi, part[m]);
          }
        }
        push(v);
      }
    }
  };
  if (dim_ == 0) return;
  push(unit_);
  if (hint) {
    for (const auto& g : *hint) {
      generators_.push_back(g);
      push(densify(field_, dim_, g));
    }
    close();
  }
  for (std::size_t i = 0; i < dim_ && !span.full(); ++i) {
    const Vector e = unit_vector(field_, dim_, i);
    if (span.contains(e)) continue;
    generators_.push_back(SparseVector{{i, field_.one()}});
    push(e);
    close();
  }
}

Vector FinAlgebra::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("multiply: vector length");
  Vector out = zero_vector(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (const auto& [k, c] : product(i, j)) out[k].add_mul(xy, c);
    }
  }
  return out;
}

Matrix FinAlgebra::left_multiplication(std::size_t i) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (const auto& [k, c] : product(i, j)) m(k, j) = c;
  }
  return m;
}

Matrix FinAlgebra::right_multiplication(std::size_t i) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (const auto& [k, c] : product(j, i)) m(k, j) = c;
  }
  return m;
}

Matrix FinAlgebra::left_multiplication(const Vector& x) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& [k, c] : product(i, j)) m(k, j).add_mul(x[i], c);
    }
  }
  return m;
}

FinAlgebra FinAlgebra::with_structure_constant(std::size_t i, std::size_t j, std::size_t k,
                                               const Scalar& value) const {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw DimensionMismatch("structure index");
  auto products = products_;
  SparseVector& p = products[i * dim_ + j];
  p.erase(std::remove_if(p.begin(), p.end(), [&](const auto& e) { return e.first == k; }),
          p.end());
  p.emplace_back(k, value);
  normalize(p);
  return FinAlgebra(field_, dim_, std::move(products), unit_, Options{name_, maschke_risk_, {}});
}

// ---------------------------------------------------------------- validation

CheckReport validate_algebra(const FinAlgebra& a) {
  CheckReport report("algebra " + a.name());
  const std::size_t n = a.dim();
  const Field& f = a.field();

  std::string unit_failure;
  for (std::size_t i = 0; i < n && unit_failure.empty(); ++i) {
    Vector left = zero_vector(f, n);
    Vector right = zero_vector(f, n);
    for (std::size_t k = 0; k < n; ++k) {
      if (a.unit()[k].is_zero()) continue;
      for (const auto& [m, c] : a.product(k, i)) left[m].add_mul(a.unit()[k], c);
      for (const auto& [m, c] : a.product(i, k)) right[m].add_mul(a.unit()[k], c);
    }
    const Vector e = unit_vector(f, n, i);
    if (left != e) unit_failure = "1 * e_" + std::to_string(i) + " != e_" + std::to_string(i);
    else if (right != e) unit_failure = "e_" + std::to_string(i) + " * 1 != e_" + std::to_string(i);
  }
  report.add("unit laws", unit_failure.empty(), unit_failure);

  std::string assoc_failure;
  SparseVector lhs;
  SparseVector rhs;
  for (std::size_t i = 0; i < n && assoc_failure.empty(); ++i) {
    for (std::size_t j = 0; j < n && assoc_failure.empty(); ++j) {
      const SparseVector& ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        lhs.clear();
        rhs.clear();
        for (const auto& [m, c] : ij) {
          for (const auto& [t, d] : a.product(m, k)) lhs.emplace_back(t, c * d);
        }
        for (const auto& [m, c] : a.product(j, k)) {
          for (const auto& [t, d] : a.product(i, m)) rhs.emplace_back(t, c * d);
        }
        normalize(lhs);
        normalize(rhs);
        if (!same(lhs, rhs)) {
          assoc_failure = "(e_" + std::to_string(i) + " e_" + std::to_string(j) + ") e_" +
                          std::to_string(k) + " != e_" + std::to_string(i) + " (e_" +
                          std::to_string(j) + " e_" + std::to_string(k) + ") at triple (" +
                          std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ")";
          break;
        }
      }
    }
  }
  report.add("associativity", assoc_failure.empty(), assoc_failure);
  return report;
}

// ---------------------------------------------------------------- builders

FinAlgebra ground_field_algebra(const Field& f) {
  return FinAlgebra(f, 1, {SparseVector{{0, f.one()}}}, Vector{f.one()}, {"k", false, {}});
}

FinAlgebra group_algebra(const FiniteGroup& g, const Field& f) {
  const std::size_t n = g.order();
  std::vector<SparseVector> products;
  products.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) products.push_back(SparseVector{{g.mul(a, b), f.one()}});
  }
  const bool risk = !f.is_rational() && n % f.characteristic() == 0;
  return FinAlgebra(f, n, std::move(products), unit_vector(f, n, g.identity()),
                    {"k[" + g.name() + "]", risk, {}});
}

FinAlgebra matrix_algebra(std::size_t n, const Field& f) {
  if (n == 0) throw std::invalid_argument("matrix_algebra: size 0");
  const std::size_t d = n * n;
  std::vector<SparseVector> products(d * d);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t t = 0; t < n; ++t) {
        products[(r * n + c) * d + (c * n + t)] = SparseVector{{r * n + t, f.one()}};
      }
    }
  }
  Vector unit = zero_vector(f, d);
  for (std::size_t r = 0; r < n; ++r) unit[r * n + r] = f.one();
  return FinAlgebra(f, d, std::move(products), std::move(unit),
                    {"M" + std::to_string(n), false, {}});
}

FinAlgebra dual_numbers(const Field& f) {
  std::vector<SparseVector> products{
      {{0, f.one()}}, {{1, f.one()}}, {{1, f.one()}}, {}};
  return FinAlgebra(f, 2, std::move(products), unit_vector(f, 2, 0), {"k[x]/(x^2)", false, {}});
}

FinAlgebra opposite_algebra(const FinAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<SparseVector> products;
  products.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) products.push_back(a.product(j, i));
  }
  return FinAlgebra(a.field(), n, std::move(products), a.unit(),
                    {a.name() + "^op", a.maschke_risk(), a.generators()});
}

FinAlgebra transport_algebra(const FinAlgebra& a, const Matrix& p) {
  if (p.rows() != a.dim() || p.cols() != a.dim()) throw DimensionMismatch("transport_algebra");
  const auto pinv = inverse(p);
  if (!pinv) throw std::invalid_argument("transport_algebra: basis change is singular");
  const std::size_t n = a.dim();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(p.column(i));
  std::vector<SparseVector> products;
  products.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      products.push_back(sparsify(pinv->apply(a.multiply(cols[i], cols[j]))));
    }
  }
  return FinAlgebra(a.field(), n, std::move(products), pinv->apply(a.unit()),
                    {a.name(), a.maschke_risk(), std::nullopt});
}

FinAlgebra tensor_product_algebra(const FinAlgebra& a, const FinAlgebra& b) {
  if (a.field() != b.field()) throw FieldMismatch("tensor_product_algebra: fields differ");
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const std::size_t n = na * nb;
  std::vector<SparseVector> products(n * n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t k = 0; k < na; ++k) {
      const SparseVector& pa = a.product(i, k);
      if (pa.empty()) continue;
      for (std::size_t j = 0; j < nb; ++j) {
        for (std::size_t l = 0; l < nb; ++l) {
          const SparseVector& pb = b.product(j, l);
          if (pb.empty()) continue;
          SparseVector& out = products[(i * nb + j) * n + (k * nb + l)];
          for (const auto& [m, c] : pa) {
            for (const auto& [t, d] : pb) out.emplace_back(m * nb + t, c * d);
          }
          normalize(out);
        }
      }
    }
  }
  Vector unit = zero_vector(a.field(), n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) unit[i * nb + j] = a.unit()[i] * b.unit()[j];
  }
  // x ⊗ 1 for generators x of a, and 1 ⊗ y for generators y of b.
  std::vector<SparseVector> gens;
  const SparseVector ua = sparsify(a.unit());
  const SparseVector ub = sparsify(b.unit());
  for (const auto& g : a.generators()) {
    SparseVector s;
    for (const auto& [i, x] : g)
      for (const auto& [j, y] : ub) s.emplace_back(i * nb + j, x * y);
    normalize(s);
    gens.push_back(std::move(s));
  }
  for (const auto& g : b.generators()) {
    SparseVector s;
    for (const auto& [i, x] : ua)
      for (const auto& [j, y] : g) s.emplace_back(i * nb + j, x * y);
    normalize(s);
    gens.push_back(std::move(s));
  }
  return FinAlgebra(a.field(), n, std::move(products), std::move(unit),
                    {a.name() + "⊗" + b.name(), a.maschke_risk() || b.maschke_risk(), gens});
}

// ---------------------------------------------------------------- center

namespace {

std::vector<Vector> center_for(const FinAlgebra& a, const std::vector<SparseVector>& elements) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  // Unknown x = sum_k x_k e_k; equation block for element g: sum_k x_k (e_k g - g e_k) = 0.
  RowSpace eqs(f, n);
  for (const auto& g : elements) {
    Matrix d(f, n, n);
    for (const auto& [i, gi] : g) {
      for (std::size_t k = 0; k < n; ++k) {
        for (const auto& [m, c] : a.product(k, i)) d(m, k).add_mul(gi, c);
        for (const auto& [m, c] : a.product(i, k)) d(m, k).sub_mul(gi, c);
      }
    }
    for (std::size_t r = 0; r < n && !eqs.full(); ++r) {
      Vector row = d.row(r);
      if (!is_zero(row)) eqs.insert(std::move(row));
    }
  }
  return eqs.null_space();
}

}  // namespace

std::vector<Vector> center_basis(const FinAlgebra& a) { return center_for(a, a.generators()); }

std::vector<Vector> center_basis_exhaustive(const FinAlgebra& a) {
  std::vector<SparseVector> all;
  for (std::size_t i = 0; i < a.dim(); ++i) all.push_back(SparseVector{{i, a.field().one()}});
  return center_for(a, all);
}

// ---------------------------------------------------------------- semisimplicity

SemisimplicityCertificate semisimplicity_certificate(const FinAlgebra& a) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  // tau_m = trace of L_{e_m}; T(e_i, e_j) = tau(e_i e_j).
  Vector tau = zero_vector(f, n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : a.product(m, j)) {
        if (k == j) tau[m] += c;
      }
    }
  }
  SemisimplicityCertificate cert;
  cert.gram = Matrix(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [m, c] : a.product(i, j)) cert.gram(i, j).add_mul(c, tau[m]);
    }
  }
  cert.determinant = determinant(cert.gram);
  cert.verdict = cert.determinant.is_zero() ? SemisimplicityCertificate::Verdict::unknown
                                            : SemisimplicityCertificate::Verdict::certified_semisimple;
  return cert;
}

std::size_t split_simple_count(const FinAlgebra& a, bool field_is_splitting) {
  if (!field_is_splitting) {
    throw PreconditionError("split_simple_count: the field was not asserted to split " +
                            a.name() + "; dim Z(a) only counts simples over a splitting field");
  }
  if (!semisimplicity_certificate(a).certified()) {
    throw PreconditionError("split_simple_count: trace form of " + a.name() +
                            " is degenerate, semisimplicity is not certified");
  }
  return center_basis(a).size();
}

// ---------------------------------------------------------------- idempotents

namespace {

// Polynomial coefficients, lowest degree first.
using Poly = std::vector<Scalar>;

Scalar evaluate(const Poly& p, const Scalar& x) {
  Scalar acc = x.field().zero();
  for (std::size_t i = p.size(); i-- > 0;) {
    acc *= x;
    acc += p[i];
  }
  return acc;
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  if (n > mpz_class("1000000000000")) {
    throw PreconditionError("rational root search: constant term too large");
  }
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

std::vector<Scalar> roots(const Poly& p, const Field& f) {
  std::vector<Scalar> out;
  if (!f.is_rational()) {
    const std::uint64_t q = f.characteristic();
    if (q > 1000000) throw PreconditionError("root search over F_p needs p <= 10^6");
    for (std::uint64_t v = 0; v < q; ++v) {
      const Scalar x = Scalar::residue(v, q);
      if (evaluate(p, x).is_zero()) out.push_back(x);
    }
    return out;
  }
  // Rational root theorem on the integer multiple of p.
  mpz_class lcm = 1;
  for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.as_rational().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p) ints.push_back(mpz_class(c.as_rational() * lcm));
  std::size_t shift = 0;
  while (shift < ints.size() && ints[shift] == 0) ++shift;
  if (shift > 0) out.push_back(f.zero());
  if (shift + 1 >= ints.size()) return out;
  for (const auto& num : divisors(ints[shift])) {
    for (const auto& den : divisors(ints.back())) {
      for (int sign : {1, -1}) {
        const Scalar x = f.from_rational(mpq_class(sign * num, den));
        if (!evaluate(p, x).is_zero()) continue;
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Vector> central_primitive_idempotents(const FinAlgebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  std::vector<Vector> idems{a.unit()};
  for (const Vector& z : center_basis(a)) {
    std::vector<Vector> refined;
    for (const Vector& e : idems) {
      const Vector w = a.multiply(z, e);
      // Minimal polynomial of w inside the algebra e a e, whose unit is e.
      std::vector<Vector> powers{e};
      RowSpace span(f, n);
      span.insert(e);
      Vector next = w;
      while (span.insert(next)) {
        powers.push_back(next);
        next = a.multiply(next, w);
      }
      const auto c = coordinates(powers, next);
      const std::size_t deg = powers.size();
      Poly mp(deg + 1, f.zero());
      for (std::size_t i = 0; i < deg; ++i) mp[i] = -(*c)[i];
      mp[deg] = f.one();
      const auto rs = roots(mp, f);
      if (rs.size() != deg) {
        throw PreconditionError("central element has a minimal polynomial that does not split "
                                "into distinct linear factors over " + f.name());
      }
      for (std::size_t r = 0; r < deg; ++r) {
        Vector piece = e;
        for (std::size_t s = 0; s < deg; ++s) {
          if (s == r) continue;
          // (w - mu e) / (lambda - mu)
          Vector factor = w;
          const Scalar inv = (rs[r] - rs[s]).inverse();
          for (std::size_t k = 0; k < n; ++k) {
            factor[k].sub_mul(rs[s], e[k]);
            factor[k] *= inv;
          }
          piece = a.multiply(piece, factor);
        }
        refined.push_back(std::move(piece));
      }
    }
    idems = std::move(refined);
  }
  std::sort(idems.begin(), idems.end(), [](const Vector& x, const Vector& y) {
    // deterministic order: by first nonzero coordinate index, then content
    std::size_t ix = 0;
    std::size_t iy = 0;
    while (ix < x.size() && x[ix].is_zero()) ++ix;
    while (iy < y.size() && y[iy].is_zero()) ++iy;
    if (ix != iy) return ix < iy;
    return x[ix].to_string() < y[iy].to_string();
  });
  return idems;
}

std::vector<std::size_t> simple_dimensions(const FinAlgebra& a) {
  std::vector<std::size_t> dims;
  for (const Vector& e : central_primitive_idempotents(a)) {
    const std::size_t block = rank(a.left_multiplication(e));
    std::size_t r = 0;
    while ((r + 1) * (r + 1) <= block) ++r;
    if (r * r != block) {
      throw PreconditionError("block of dimension " + std::to_string(block) +
                              " is not a full matrix algebra");
    }
    dims.push_back(r);
  }
  return dims;
}

}  // namespace balcat
