#include "balcat/exactla/field.hpp"

#include <ostream>
#include <stdexcept>

#include "balcat/common/errors.hpp"

namespace balcat {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce_signed(long long v, std::uint64_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return static_cast<std::uint64_t>(r);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s;
  mpq_class c = q;
  c.canonicalize();
  s.v_ = std::move(c);
  return s;
}

Scalar Scalar::residue(std::uint64_t value, std::uint64_t modulus) {
  Scalar s;
  s.v_ = Residue{value % modulus, modulus};
  return s;
}

std::uint64_t Scalar::modulus() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->modulus;
  return 0;
}

Field Scalar::field() const {
  return Field(modulus());
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 1;
  const auto& q = std::get<mpq_class>(v_);
  return q.get_den() == 1 && q.get_num() == 1;
}

const mpq_class& Scalar::as_rational() const { return std::get<mpq_class>(v_); }

std::uint64_t Scalar::as_residue() const { return std::get<Residue>(v_).value; }

void Scalar::require_same_field(const Scalar& o) const {
  if (modulus() != o.modulus()) {
    throw FieldMismatch("scalar arithmetic across fields: " + field().name() + " vs " +
                        o.field().name());
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    r->value += std::get<Residue>(o.v_).value;
    if (r->value >= r->modulus) r->value -= r->modulus;
  } else {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    const std::uint64_t b = std::get<Residue>(o.v_).value;
    r->value = r->value >= b ? r->value - b : r->value + r->modulus - b;
  } else {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    r->value = mul_mod(r->value, std::get<Residue>(o.v_).value, r->modulus);
  } else {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
  require_same_field(a);
  require_same_field(b);
  if (auto* r = std::get_if<Residue>(&v_)) {
    const std::uint64_t prod =
        mul_mod(std::get<Residue>(a.v_).value, std::get<Residue>(b.v_).value, r->modulus);
    r->value = r->value >= prod ? r->value - prod : r->value + r->modulus - prod;
  } else {
    auto& q = std::get<mpq_class>(v_);
    const auto& qa = std::get<mpq_class>(a.v_);
    const auto& qb = std::get<mpq_class>(b.v_);
    if (qa.get_den() == 1 && qb.get_den() == 1 && q.get_den() == 1) {
      mpz_submul(q.get_num_mpz_t(), qa.get_num_mpz_t(), qb.get_num_mpz_t());
    } else {
      q -= qa * qb;
    }
  }
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
  require_same_field(a);
  require_same_field(b);
  if (auto* r = std::get_if<Residue>(&v_)) {
    r->value += mul_mod(std::get<Residue>(a.v_).value, std::get<Residue>(b.v_).value,
                        r->modulus);
    if (r->value >= r->modulus) r->value -= r->modulus;
  } else {
    auto& q = std::get<mpq_class>(v_);
    const auto& qa = std::get<mpq_class>(a.v_);
    const auto& qb = std::get<mpq_class>(b.v_);
    if (qa.get_den() == 1 && qb.get_den() == 1 && q.get_den() == 1) {
      mpz_addmul(q.get_num_mpz_t(), qa.get_num_mpz_t(), qb.get_num_mpz_t());
    } else {
      q += qa * qb;
    }
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (auto* r = std::get_if<Residue>(&s.v_)) {
    if (r->value != 0) r->value = r->modulus - r->value;
  } else {
    auto& q = std::get<mpq_class>(s.v_);
    q = -q;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in exact field");
  Scalar s = *this;
  if (auto* r = std::get_if<Residue>(&s.v_)) {
    r->value = pow_mod(r->value, r->modulus - 2, r->modulus);
  } else {
    auto& q = std::get<mpq_class>(s.v_);
    q = 1 / q;
    q.canonicalize();
  }
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus() != b.modulus()) return false;
  if (const auto* r = std::get_if<Scalar::Residue>(&a.v_)) {
    return r->value == std::get<Scalar::Residue>(b.v_).value;
  }
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
  return std::get<mpq_class>(v_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31U) || !is_prime(p)) {
    throw std::invalid_argument("prime field modulus must be a prime below 2^31, got " +
                                std::to_string(p));
  }
  Field f;
  f.p_ = p;
  return f;
}

Scalar Field::zero() const { return from_int(0); }

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (p_ == 0) return Scalar::rational(mpq_class(static_cast<long>(v)));
  return Scalar::residue(reduce_signed(v, p_), p_);
}

Scalar Field::from_fraction(long long num, long long den) const {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (p_ == 0) return Scalar::rational(mpq_class(static_cast<long>(num), static_cast<long>(den)));
  return from_int(num) / from_int(den);
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (p_ == 0) return Scalar::rational(q);
  const mpz_class num = q.get_num();
  const mpz_class den = q.get_den();
  const mpz_class pz(static_cast<unsigned long>(p_));
  const mpz_class n = ((num % pz) + pz) % pz;
  const mpz_class d = den % pz;
  if (d == 0) {
    throw std::invalid_argument("denominator " + den.get_str() + " is not a unit in " + name());
  }
  return Scalar::residue(n.get_ui(), p_) / Scalar::residue(d.get_ui(), p_);
}

Scalar Field::parse(const std::string& text) const {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a field element: '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return from_rational(q);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

}  // namespace balcat
