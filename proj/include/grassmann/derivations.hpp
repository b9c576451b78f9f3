#pragma once

#include <map>
#include <span>
#include <vector>

#include "grassmann/element.hpp"
#include "grassmann/errors.hpp"
#include "grassmann/matrix.hpp"
#include "grassmann/subspace.hpp"

namespace grassmann {

/// Operator matrices are 2^n x 2^n; Jordan tests and generator recovery
/// refuse larger n.
inline constexpr int kMaxJordanGenerators = 10;

/// K-derivation of Lambda_n, given by u_i = delta(x_i). Construction checks
///   u_i x_i + x_i u_i = 0  and  u_i x_j + x_i u_j + u_j x_i + x_j u_i = 0.
class Derivation {
 public:
  /// Throws RelationError naming every violated relation.
  explicit Derivation(std::vector<Element> images);

  static Derivation zero(int n, Field field);

  int n() const { return images_.front().n(); }
  Field field() const { return images_.front().field(); }
  const std::vector<Element>& images() const { return images_; }
  /// delta(x_i), 1-based.
  const Element& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  std::vector<Element> images_;
};

std::vector<RelationViolation> derivation_violations(std::span<const Element> images);
Derivation make_derivation(std::vector<Element> images);

Element apply_derivation(const Derivation& d, const Element& a);

/// ad(a) = [a, -].
Derivation ad(const Element& a);
/// u d_j for odd u: b -> u d_j(b).
Derivation times_partial(const Element& u, int j);
/// x_i d_j.
Derivation x_partial(int n, Field field, int i, int j);
/// h_i = x_i d_i.
Derivation h_derivation(int n, Field field, int i);

/// delta = sum_i even_coeffs[i] d_i - (1/2) ad(inner_element). The
/// coefficients are odd; inner_element is odd with zero theta-coefficient.
struct DerDecomposition {
  std::vector<Element> even_coeffs;
  Element inner_element;
};

DerDecomposition decompose_derivation(const Derivation& d);
Derivation reassemble(const DerDecomposition& parts);

Derivation lie_bracket(const Derivation& d1, const Derivation& d2);
Derivation operator+(const Derivation& a, const Derivation& b);
Derivation operator*(const Scalar& c, const Derivation& d);

/// Nonzero homogeneous parts: degree k maps x_j to grade_component(u_j, k+1).
std::map<int, Derivation> graded_parts(const Derivation& d);

/// Matrix in the canonical monomial basis. Throws CapacityError for
/// n > kMaxJordanGenerators.
Matrix operator_matrix(const Derivation& d);
bool is_nilpotent(const Derivation& d);
bool is_semisimple(const Derivation& d);

/// Smallest ideal containing seed and stable under every derivation.
Subspace differential_closure(const Element& seed);

/// Why a tuple of derivations does not determine canonical generators.
class RecoveryError : public DomainError {
 public:
  enum class Condition {
    WrongCount,
    NotIdempotent,
    NotCommuting,
    KernelIntersection,
    GeneratorSpace,
    NotCanonical,
    ModuleEquality,
  };

  RecoveryError(Condition condition, int i, int j, const std::string& detail);

  Condition condition() const { return condition_; }
  int first() const { return first_; }
  int second() const { return second_; }

 private:
  Condition condition_;
  int first_;
  int second_;
};

/// For (s_1..s_n) = (x'_1 d/dx'_1, ...), returns x'_1..x'_n, each scaled so
/// its leading term has coefficient 1. Strict mode also checks
///   Lambda_n = K_1 + x'_1 K_1 and K_{1..i} = K_{1..i+1} + x'_{i+1} K_{1..i+1},
/// where K_{1..i} is the common kernel of s_1..s_i.
std::vector<Element> recover_generators(std::span<const Derivation> s, bool strict = false);

}  // namespace grassmann
