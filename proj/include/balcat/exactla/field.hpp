#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

namespace balcat {

class Field;

/// An exact field element: either an arbitrary-precision rational in lowest
/// terms, or a least nonnegative residue modulo a prime.
///
/// Arithmetic between elements of different fields throws FieldMismatch.
/// A default-constructed Scalar is the rational zero.
class Scalar {
 public:
  Scalar() = default;

  static Scalar rational(const mpq_class& q);
  static Scalar residue(std::uint64_t value, std::uint64_t modulus);

  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  /// 0 for rationals, p for residues mod p.
  std::uint64_t modulus() const;
  Field field() const;

  bool is_zero() const;
  bool is_one() const;

  /// Only valid for rationals.
  const mpq_class& as_rational() const;
  /// Only valid for residues.
  std::uint64_t as_residue() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  /// this -= a * b, without materializing a temporary Scalar.
  void sub_mul(const Scalar& a, const Scalar& b);
  /// this += a * b.
  void add_mul(const Scalar& a, const Scalar& b);

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  struct Residue {
    std::uint64_t value = 0;
    std::uint64_t modulus = 0;
  };
  void require_same_field(const Scalar& o) const;

  std::variant<mpq_class, Residue> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// The ground field: the rationals or a prime field F_p.
class Field {
 public:
  enum class Kind { rational, prime };

  Field() = default;
  static Field rational() { return Field(); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  Kind kind() const { return p_ == 0 ? Kind::rational : Kind::prime; }
  bool is_rational() const { return p_ == 0; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_fraction(long long num, long long den) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Parses "n", "-n" or "n/d". Throws std::invalid_argument on bad text or
  /// a denominator that is not a unit.
  Scalar parse(const std::string& text) const;

  bool contains(const Scalar& s) const { return s.modulus() == p_; }
  /// "Q" or "F_p".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}

  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace balcat
