#pragma once

#include <span>
#include <vector>

#include "grassmann/element.hpp"

namespace grassmann {

/// K-linear subspace of Lambda_n held as a reduced row-echelon basis in the
/// canonical monomial coordinates. Each basis vector's first term is its
/// pivot, with coefficient 1, and no other basis vector has a term there.
/// Basis vectors are sorted by pivot, so equal subspaces have equal bases.
class Subspace {
 public:
  Subspace(int n, Field field);

  static Subspace span(int n, Field field, std::span<const Element> vectors);

  int n() const { return n_; }
  Field field() const { return field_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Element>& basis() const { return basis_; }

  /// Remainder of v after eliminating every pivot; zero iff v is contained.
  Element reduce(const Element& v) const;
  bool contains(const Element& v) const { return reduce(v).is_zero(); }
  bool contains(const Subspace& other) const;

  /// Adds v to the span; returns true iff the dimension grew.
  bool insert(const Element& v);

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  std::size_t pivot_position(Mask mask) const;

  int n_;
  Field field_;
  std::vector<Element> basis_;
};

bool contains(const Subspace& sub, const Element& a);

/// Two-sided ideal generated by `gens`.
Subspace ideal_from_generators(int n, Field field, std::span<const Element> gens);
Subspace ideal_from_generators(std::span<const Element> gens);

/// m^i: span of the monomials of degree >= i (m^0 = Lambda_n).
Subspace augmentation_power(int n, Field field, int i);

/// Lambda^ev, plus K*theta for odd n; all of Lambda_1 when n = 1.
Subspace centre_basis(int n, Field field);

}  // namespace grassmann
