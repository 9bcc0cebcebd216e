#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace hopf {

/// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldError : public Error {
 public:
  using Error::Error;
};

class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

/// Ground field: either the rationals or a prime field F_p.
class Field {
 public:
  enum class Kind { Rational, Prime };

  constexpr Field() = default;

  static Field rationals() { return Field(Kind::Rational, 0); }
  /// Throws FieldError unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }

  /// "Q" or "F<p>".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  constexpr Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}

  Kind kind_ = Kind::Rational;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with a positive
/// denominator; prime-field values are residues in 0..p-1.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field f) { return Scalar(f, 0L); }
  static Scalar one(Field f) { return Scalar(f, 1L); }
  /// Parses "a", "-a" or "a/b" (integers only, no decimals).
  static Scalar parse(Field f, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Residue for prime fields; throws for the rationals.
  std::uint64_t residue() const;
  /// Rational value; throws for prime fields.
  const mpq_class& rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  /// Multiplicative inverse; throws FieldError on zero.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text: "n", "-n", "n/d" or a residue.
  std::string str() const;

 private:
  void check_field(const Scalar& o) const;

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_{std::uint64_t{0}};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hopf
