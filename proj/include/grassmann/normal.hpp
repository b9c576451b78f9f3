#pragma once

#include <optional>
#include <string>

#include "grassmann/automorphisms.hpp"
#include "grassmann/element.hpp"

namespace grassmann {

/// a Lambda_n = Lambda_n a.
bool is_normal(const Element& a);

/// Lowest degree of a nonzero normal element; 0 means a is a unit. Throws
/// DomainError for zero or non-normal input.
int stratum(const Element& a);

enum class OrbitTag {
  /// The orbit of x_1.
  X1,
  /// The orbit of x_1 + x_2...x_n (odd n only).
  X1PlusThetaTail,
};

std::string to_string(OrbitTag tag);

/// x_1 or x_1 + x_2...x_n.
Element orbit_representative(OrbitTag tag, int n, Field field);

struct OrbitReport {
  int stratum = 1;
  OrbitTag orbit = OrbitTag::X1;
  /// witness(representative) = input.
  Automorphism witness;
  Element representative;
};

/// The reduction of a normal element with nonzero linear part to its orbit
/// representative, without any normality check: nothing when the reduction
/// gets stuck (a has no linear part, or is not normal).
std::optional<OrbitTag> reduce_n1(const Element& a);

/// Throws DomainError unless a is normal with stratum 1.
OrbitReport classify_n1(const Element& a);

/// Whether x_1 and x_1 + x_2...x_n get different tags; n odd >= 3.
bool orbits_distinct_check(int n, Field field);

/// Membership via the factorization, cross-checked against s(x_1) = x_1.
bool in_stabilizer_x1(const Automorphism& s);
/// Membership via the factorization, cross-checked against s(y) = y for
/// y = x_1 + x_2...x_n; n odd >= 3.
bool in_stabilizer_y(const Automorphism& s);

struct UnitReport {
  Scalar lambda;
  OrbitReport report;
};

/// u = lambda (1 + v) with v normal of stratum 1; throws DomainError
/// otherwise.
UnitReport classify_unit(const Element& u);

}  // namespace grassmann
