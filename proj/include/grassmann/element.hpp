#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grassmann/matrix.hpp"
#include "grassmann/scalar.hpp"

namespace grassmann {

/// Largest supported number of generators (2^16 basis monomials).
inline constexpr int kMaxGenerators = 16;

/// Subset of {1..n}: bit i-1 stands for x_i. The monomial x^mask is the
/// product of its generators in ascending index order.
using Mask = std::uint32_t;

constexpr Mask generator_mask(int i) { return Mask{1} << (i - 1); }
constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
constexpr int degree_of(Mask m) { return std::popcount(m); }

/// Sort key of the canonical (degree, mask) order.
constexpr std::uint64_t canonical_key(Mask m) {
  return (std::uint64_t{static_cast<std::uint32_t>(std::popcount(m))} << 32) | m;
}

/// True iff x^a * x^b = -x^(a|b) for disjoint a, b: the number of pairs
/// (i in a, j in b) with i > j is odd.
constexpr bool product_sign_negative(Mask a, Mask b) {
  unsigned inversions = 0;
  while (b != 0) {
    const int j = std::countr_zero(b);
    inversions += static_cast<unsigned>(std::popcount(a >> (j + 1)));
    b &= b - 1;
  }
  return (inversions & 1u) != 0;
}

struct Term {
  Mask mask = 0;
  Scalar coeff;
};

/// Element of the Grassmann algebra on n generators over a field, stored as
/// its nonzero terms in canonical (degree, mask) order.
class Element {
 public:
  Element(int n, Field field);

  static Element constant(int n, Field field, const Scalar& c);
  static Element monomial(int n, Field field, Mask mask, const Scalar& c = Scalar(1));
  /// x_i, 1-based.
  static Element generator(int n, Field field, int i);
  /// x_1 x_2 ... x_n.
  static Element top(int n, Field field);
  /// Sums duplicate masks and drops zeros; terms may come in any order.
  static Element from_terms(int n, Field field, std::vector<Term> terms);

  int n() const { return n_; }
  Field field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coeff(Mask mask) const;
  Scalar constant_term() const { return coeff(0); }
  /// Degree of the lowest nonzero homogeneous component; -1 for zero.
  int lowest_degree() const;
  int highest_degree() const;
  bool is_even() const;
  bool is_odd() const;

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Element& rhs);
  Element& operator*=(const Scalar& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }
  Element operator-() const;

  friend bool operator==(const Element& a, const Element& b);

  /// Same n and field; throws DimensionError / FieldError otherwise.
  void require_compatible(const Element& other) const;

 private:
  int n_;
  Field field_;
  std::vector<Term> terms_;
};

Element add(const Element& a, const Element& b);
Element scale(const Scalar& c, const Element& a);
Element mul(const Element& a, const Element& b);

/// x^mask * a and a * x^mask without building a monomial element.
Element left_multiply(Mask mask, const Element& a);
Element right_multiply(const Element& a, Mask mask);

/// The involution a -> a-bar: negates odd-degree terms.
Element parity_involution(const Element& a);
/// Homogeneous component of degree `degree` (0..n).
Element grade_component(const Element& a, int degree);

struct ParityParts {
  Element even;
  Element odd;
};
ParityParts parity_split(const Element& a);
Element even_part(const Element& a);
Element odd_part(const Element& a);

/// a with x_i = 0 for every i in `indices` (1-based).
Element substitute_zero(const Element& a, std::span<const int> indices);
Element substitute_zero(const Element& a, std::initializer_list<int> indices);

/// Left skew partial derivative with respect to x_i.
Element skew_partial(const Element& a, int i);
/// h_i = x_i d_i: keeps the terms divisible by x_i.
Element h_op(int i, const Element& a);

/// True iff no term of a involves x_1..x_k.
bool uses_only_generators_above(const Element& a, int k);

/// Substitutes images[j-1] for x_j: sum of c * images[i1] ... images[ik]
/// over the terms of a, in ascending index order. No validity checks.
Element substitute(const Element& a, std::span<const Element> images);

/// Basis monomials of Lambda_n in canonical order, with the inverse lookup.
class MonomialOrder {
 public:
  explicit MonomialOrder(int n);

  int n() const { return n_; }
  std::size_t size() const { return masks_.size(); }
  Mask mask(std::size_t index) const { return masks_[index]; }
  std::size_t index(Mask mask) const { return index_of_[mask]; }
  const std::vector<Mask>& masks() const { return masks_; }

  Vector coordinates(const Element& a) const;
  Element element(const Vector& coords, Field field) const;

 private:
  int n_;
  std::vector<Mask> masks_;
  std::vector<std::uint32_t> index_of_;
};

/// Matrix, in the canonical monomial basis, of a linear map given by its
/// action on monomials.
template <typename MapFn>
Matrix monomial_matrix(int n, Field field, MapFn&& map) {
  const MonomialOrder order(n);
  Matrix m(static_cast<Eigen::Index>(order.size()), static_cast<Eigen::Index>(order.size()));
  m.setZero();
  for (std::size_t col = 0; col < order.size(); ++col) {
    const Element image = map(Element::monomial(n, field, order.mask(col)));
    for (const auto& t : image.terms()) {
      m(static_cast<Eigen::Index>(order.index(t.mask)), static_cast<Eigen::Index>(col)) = t.coeff;
    }
  }
  return m;
}

/// Canonical text form, e.g. "1 - 3/2*x1*x2 + x1*x2*x3"; zero prints as "0".
std::string to_string(const Element& a);
std::ostream& operator<<(std::ostream& os, const Element& a);

/// Parses the element grammar; generator indices must lie in 1..n.
Element parse_element(std::string_view text, int n, Field field);

/// Validates 1 <= n <= kMaxGenerators.
void require_generator_count(int n);

}  // namespace grassmann
