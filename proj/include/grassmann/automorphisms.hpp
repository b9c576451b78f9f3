#pragma once

#include <optional>
#include <span>
#include <vector>

#include "grassmann/derivations.hpp"
#include "grassmann/element.hpp"
#include "grassmann/errors.hpp"
#include "grassmann/matrix.hpp"

namespace grassmann {

/// invert() works on the full 2^n x 2^n matrix and refuses larger n.
inline constexpr int kMaxInvertGenerators = 12;

/// K-algebra automorphism of Lambda_n, given by g_i = sigma(x_i). Each g_i
/// lies in m, g_i^2 = 0, g_i g_j = -g_j g_i, and the linear part is
/// invertible.
class Automorphism {
 public:
  /// Throws DomainError for a nonzero constant term or a singular linear
  /// part, RelationError for broken relations.
  explicit Automorphism(std::vector<Element> images);

  static Automorphism identity(int n, Field field);

  int n() const { return images_.front().n(); }
  Field field() const { return images_.front().field(); }
  const std::vector<Element>& images() const { return images_; }
  const Element& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

  /// Row i holds the degree-1 coefficients of g_i.
  Matrix linear_part() const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  std::vector<Element> images_;
};

std::vector<RelationViolation> automorphism_violations(std::span<const Element> images);
Automorphism make_automorphism(std::vector<Element> images);

Element apply_automorphism(const Automorphism& s, const Element& a);

/// (s o t)(x) = s(t(x)).
Automorphism compose(const Automorphism& s, const Automorphism& t);
/// Throws CapacityError for n > kMaxInvertGenerators.
Automorphism invert(const Automorphism& s);

/// omega_{1+a}: x_i -> x_i + [a, x_i], for odd a of degree <= n-1.
Automorphism omega(const Element& a);
/// gamma_b: x_i -> x_i + b_i, each b_i odd with all degrees >= 3.
Automorphism gamma(std::span<const Element> b);
/// sigma_A: x_i -> sum_j A(i, j) x_j. Note sigma_A o sigma_B = sigma_{BA}.
Automorphism sigma_matrix(const Matrix& a, Field field);
/// gamma_b^{-1}, by y_i <- x_i - b_i(y) from y = x.
Automorphism gamma_inverse(std::span<const Element> b);

/// s = omega_{1+a} o gamma_b o sigma_A.
struct Factorization {
  Element a;
  std::vector<Element> b;
  Matrix A;
};

Factorization factor_automorphism(const Automorphism& s);
Automorphism reassemble(const Factorization& f);

/// s o d o s^{-1}.
Derivation conjugate_derivation(const Automorphism& s, const Derivation& d);

/// The scaling factors when s(x_i) = lambda_i x_i for every i.
std::optional<std::vector<Scalar>> is_torus(const Automorphism& s);

}  // namespace grassmann
