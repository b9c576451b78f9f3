#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace grassmann {

/// Coefficient field: the rationals, or the prime field F_p for an odd prime p.
class Field {
 public:
  /// Largest accepted modulus; residues multiply in 64 bits.
  static constexpr std::uint32_t kMaxModulus = 2147483647u;

  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws FieldError unless p is an odd prime not above kMaxModulus.
  static Field prime(std::uint64_t p);
  /// Accepts "q" or "fp:<p>".
  static Field parse(std::string_view text);

  constexpr bool is_rational() const { return modulus_ == 0; }
  constexpr std::uint32_t modulus() const { return modulus_; }
  std::string to_string() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  explicit constexpr Field(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

/// Exact scalar: an arbitrary-precision rational in lowest terms, or a residue
/// in [0, p).
///
/// Rationals combine with residues by reduction mod p (this is what lets
/// integer literals such as Scalar(0) or Scalar(2) act in any field); two
/// residues with different moduli never combine.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int value) : rep_(mpq_class(value)) {}  // NOLINT: literals convert implicitly
  Scalar(long value) : rep_(mpq_class(value)) {}  // NOLINT
  explicit Scalar(mpq_class value);
  static Scalar rational(const mpz_class& num, const mpz_class& den);
  /// Residue of `value` modulo the field's prime; rational when the field is Q.
  static Scalar from_integer(long value, Field field);

  Field field() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(rep_); }
  bool is_zero() const;
  bool is_one() const;

  /// This value viewed in `field` (reduction mod p for rationals).
  Scalar in(Field field) const;

  const mpq_class& as_rational() const { return std::get<mpq_class>(rep_); }
  std::uint32_t residue() const { return std::get<Residue>(rep_).value; }

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  /// Canonical text: "a" or "a/b" over Q (b > 0), the residue over F_p.
  std::string to_string() const;
  /// True when the canonical text starts with '-'.
  bool is_negative() const;

 private:
  struct Residue {
    std::uint32_t value = 0;
    std::uint32_t modulus = 0;
  };

  static Residue reduce(const mpq_class& q, std::uint32_t p);
  template <typename RationalOp, typename ResidueOp>
  Scalar& combine(const Scalar& rhs, RationalOp on_rationals, ResidueOp on_residues);

  std::variant<mpq_class, Residue> rep_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace grassmann
