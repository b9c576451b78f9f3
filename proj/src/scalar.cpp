#include "grassmann/scalar.hpp"

#include <charconv>
#include <ostream>

#include "grassmann/errors.hpp"

namespace grassmann {

namespace {

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t mod_inverse(std::uint32_t value, std::uint32_t p) {
  std::int64_t a = value, m = p, x0 = 1, x1 = 0;
  while (m != 0) {
    const std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (a != 1) throw FieldError("scalar is not invertible");
  x0 %= static_cast<std::int64_t>(p);
  if (x0 < 0) x0 += p;
  return static_cast<std::uint32_t>(x0);
}

std::uint32_t reduce_integer(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p > kMaxModulus || !is_odd_prime(p)) {
    throw FieldError("modulus must be an odd prime below 2^31, got " + std::to_string(p));
  }
  return Field(static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.size() > 3 && text.substr(0, 3) == "fp:") {
    const auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw ParseError("field must be 'q' or 'fp:<odd prime>', got '" + std::string(text) + "'");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("q") : "fp:" + std::to_string(modulus_);
}

Scalar::Scalar(mpq_class value) : rep_(std::move(value)) {
  std::get<mpq_class>(rep_).canonicalize();
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw FieldError("zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::from_integer(long value, Field field) { return Scalar(value).in(field); }

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return Field::prime(r->modulus);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 0;
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 1;
  return std::get<mpq_class>(rep_) == 1;
}

Scalar::Residue Scalar::reduce(const mpq_class& q, std::uint32_t p) {
  const std::uint32_t den = reduce_integer(q.get_den(), p);
  if (den == 0) throw FieldError("denominator vanishes modulo " + std::to_string(p));
  const std::uint64_t num = reduce_integer(q.get_num(), p);
  return Residue{static_cast<std::uint32_t>(num * mod_inverse(den, p) % p), p};
}

Scalar Scalar::in(Field field) const {
  if (field.is_rational()) {
    if (!is_rational()) throw FieldError("cannot lift a residue to the rationals");
    return *this;
  }
  Scalar out;
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    if (r->modulus != field.modulus()) throw FieldError("mismatched moduli");
    out.rep_ = *r;
  } else {
    out.rep_ = reduce(std::get<mpq_class>(rep_), field.modulus());
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  Scalar out;
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    out.rep_ = Residue{mod_inverse(r->value, r->modulus), r->modulus};
  } else {
    out.rep_ = mpq_class(1) / std::get<mpq_class>(rep_);
  }
  return out;
}

template <typename RationalOp, typename ResidueOp>
Scalar& Scalar::combine(const Scalar& rhs, RationalOp on_rationals, ResidueOp on_residues) {
  auto* lr = std::get_if<Residue>(&rep_);
  const auto* rr = std::get_if<Residue>(&rhs.rep_);
  if (lr == nullptr && rr == nullptr) {
    on_rationals(std::get<mpq_class>(rep_), std::get<mpq_class>(rhs.rep_));
    return *this;
  }
  if (lr == nullptr) {
    rep_ = reduce(std::get<mpq_class>(rep_), rr->modulus);
    lr = &std::get<Residue>(rep_);
  }
  if (rr == nullptr) {
    const Residue converted = reduce(std::get<mpq_class>(rhs.rep_), lr->modulus);
    lr->value = on_residues(lr->value, converted.value, lr->modulus);
    return *this;
  }
  if (lr->modulus != rr->modulus) throw FieldError("mismatched moduli");
  lr->value = on_residues(lr->value, rr->value, lr->modulus);
  return *this;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  return combine(
      rhs, [](mpq_class& a, const mpq_class& b) { a += b; },
      [](std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return static_cast<std::uint32_t>((a + b) % p);
      });
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  return combine(
      rhs, [](mpq_class& a, const mpq_class& b) { a -= b; },
      [](std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return static_cast<std::uint32_t>((a + p - b) % p);
      });
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  return combine(
      rhs, [](mpq_class& a, const mpq_class& b) { a *= b; },
      [](std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return static_cast<std::uint32_t>(a * b % p);
      });
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw FieldError("division by zero");
  return combine(
      rhs, [](mpq_class& a, const mpq_class& b) { a /= b; },
      [](std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return static_cast<std::uint32_t>(a * mod_inverse(static_cast<std::uint32_t>(b),
                                                          static_cast<std::uint32_t>(p)) %
                                          p);
      });
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* r = std::get_if<Residue>(&out.rep_)) {
    r->value = r->value == 0 ? 0 : r->modulus - r->value;
  } else {
    auto& q = std::get<mpq_class>(out.rep_);
    q = -q;
  }
  return out;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  const auto* lr = std::get_if<Scalar::Residue>(&lhs.rep_);
  const auto* rr = std::get_if<Scalar::Residue>(&rhs.rep_);
  if (lr == nullptr && rr == nullptr) {
    return std::get<mpq_class>(lhs.rep_) == std::get<mpq_class>(rhs.rep_);
  }
  if (lr != nullptr && rr != nullptr) {
    return lr->modulus == rr->modulus && lr->value == rr->value;
  }
  const Scalar diff = lhs - rhs;
  return diff.is_zero();
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return std::to_string(r->value);
  return std::get<mpq_class>(rep_).get_str();
}

bool Scalar::is_negative() const {
  return is_rational() && sgn(std::get<mpq_class>(rep_)) < 0;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

RelationError::RelationError(const std::string& what_kind,
                             std::vector<RelationViolation> violations)
    : DomainError([&] {
        std::string msg = what_kind + ": violated relations";
        for (const auto& v : violations) {
          msg += v.second == 0 ? " (" + std::to_string(v.first) + ")"
                               : " (" + std::to_string(v.first) + "," +
                                     std::to_string(v.second) + ")";
        }
        return msg;
      }()),
      violations_(std::move(violations)) {}

}  // namespace grassmann
