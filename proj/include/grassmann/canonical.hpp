#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "grassmann/element.hpp"

namespace grassmann {

/// a = theta*top + sum_{i=1}^{n-1} x_1...x_i * b[i] + b[0], where b[i]
/// (standing for b_{i+1}) involves only x_{i+2}..x_n. b[n-1] is a constant.
struct TriangularForm {
  Scalar top;
  std::vector<Element> b;
};

TriangularForm triangular_presentation(const Element& a);
Element reassemble(const TriangularForm& form, int n, Field field);

/// x_1 x_2 ... x_k (1 for k = 0).
Mask prefix_mask(int k);

struct XaSolution {
  /// The solution with zero theta-coefficient.
  Element particular;
  /// theta; every solution is particular + t*theta.
  Element kernel;
};

struct XaFailure {
  enum class Condition {
    /// u_i is not in the ideal (x_i).
    NotInIdeal,
    /// x_i u_j != -x_j u_i.
    Anticommutation,
  };
  Condition condition;
  int i = 0;
  int j = 0;

  std::string describe() const;
  friend bool operator==(const XaFailure&, const XaFailure&) = default;
};

using XaResult = std::variant<XaSolution, XaFailure>;

/// Solves x_i a = u_i for i = 1..n. Conditions are scanned in order: all
/// ideal conditions by ascending i, then pairs (i, j), i < j, ascending.
XaResult solve_xa_system(std::span<const Element> u);

/// sum_{i=1}^{n-1} x_1...x_i d_i...d_1 d_{i+1}(u_{i+1}) + d_1(u_1), with no
/// solvability checks.
Element xa_particular(std::span<const Element> u);

}  // namespace grassmann
