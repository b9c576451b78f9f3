#pragma once

#include <span>
#include <vector>

#include "grassmann/element.hpp"
#include "grassmann/errors.hpp"
#include "grassmann/subspace.hpp"

namespace grassmann {

/// Left skew K-derivation of Lambda_n, given by u_i = delta(x_i).
/// Construction checks
///   u_i x_i - x_i u_i = 0  and  (u_i x_j - x_i u_j) + (u_j x_i - x_j u_i) = 0.
class SkewDerivation {
 public:
  /// Throws RelationError naming every violated relation.
  explicit SkewDerivation(std::vector<Element> images);

  static SkewDerivation zero(int n, Field field);

  int n() const { return images_.front().n(); }
  Field field() const { return images_.front().field(); }
  const std::vector<Element>& images() const { return images_; }
  const Element& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

  friend bool operator==(const SkewDerivation&, const SkewDerivation&) = default;

 private:
  std::vector<Element> images_;
};

std::vector<RelationViolation> skew_derivation_violations(std::span<const Element> images);
SkewDerivation make_skew_derivation(std::vector<Element> images);

Element apply_skew(const SkewDerivation& d, const Element& a);

/// sad(a): x_i -> a x_i + x_i a.
SkewDerivation sad(const Element& a);
/// u d_j for even u.
SkewDerivation skew_times_partial(const Element& u, int j);
/// d_j itself.
SkewDerivation partial_skew(int n, Field field, int j);

/// delta = sum_i odd_coeffs[i] d_i + (1/2) sad(sad_element). The
/// coefficients are even; sad_element is even, with zero theta-coefficient.
struct SkewDecomposition {
  std::vector<Element> odd_coeffs;
  Element sad_element;
};

SkewDecomposition decompose_skew(const SkewDerivation& d);
SkewDerivation reassemble(const SkewDecomposition& parts);

/// Smallest ideal containing seed and stable under every skew derivation.
Subspace skew_differential_closure(const Element& seed);

}  // namespace grassmann
