#pragma once

// Dense exact linear algebra on Eigen containers.
//
// Eigen provides storage and the arithmetic expressions; the eliminations
// below are written for exact scalars (no pivot magnitudes, no tolerances), so
// every routine is templated on the scalar type and works for any exact field
// type that supports ==, the four operations and construction from int.

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "grassmann/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<grassmann::Scalar> : GenericNumTraits<grassmann::Scalar> {
  using Real = grassmann::Scalar;
  using NonInteger = grassmann::Scalar;
  using Literal = grassmann::Scalar;
  using Nested = grassmann::Scalar;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace grassmann {

template <typename S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Scalar>;
using Vector = VectorX<Scalar>;

/// Reduced row-echelon form together with its pivot columns.
template <typename S>
struct RowEchelon {
  MatrixX<S> reduced;
  std::vector<Eigen::Index> pivots;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <typename Derived>
RowEchelon<typename Derived::Scalar> row_reduce(const Eigen::MatrixBase<Derived>& input) {
  using S = typename Derived::Scalar;
  RowEchelon<S> out{input, {}};
  auto& m = out.reduced;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == S(0)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const S inv = S(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) {
      if (!(m(row, c) == S(0))) m(row, c) *= inv;
    }
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == S(0)) continue;
      const S factor = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) {
        if (!(m(row, c) == S(0))) m(r, c) -= factor * m(row, c);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return row_reduce(m).rank();
}

/// Basis of the right kernel {v : m v = 0}, one vector per column.
template <typename Derived>
MatrixX<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const auto echelon = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto p : echelon.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  MatrixX<S> basis(m.cols(), m.cols() - echelon.rank());
  basis.setZero();
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = S(1);
    for (Eigen::Index r = 0; r < echelon.rank(); ++r) {
      basis(echelon.pivots[static_cast<std::size_t>(r)], k) = -echelon.reduced(r, free);
    }
    ++k;
  }
  return basis;
}

/// One solution of m x = rhs, or nothing when the system is inconsistent.
template <typename DerivedA, typename DerivedB>
std::optional<VectorX<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& m,
                                                        const Eigen::MatrixBase<DerivedB>& rhs) {
  using S = typename DerivedA::Scalar;
  MatrixX<S> augmented(m.rows(), m.cols() + 1);
  augmented.leftCols(m.cols()) = m;
  augmented.col(m.cols()) = rhs;
  const auto echelon = row_reduce(augmented);
  if (!echelon.pivots.empty() && echelon.pivots.back() == m.cols()) return std::nullopt;
  VectorX<S> x(m.cols());
  x.setZero();
  for (Eigen::Index r = 0; r < echelon.rank(); ++r) {
    x(echelon.pivots[static_cast<std::size_t>(r)]) = echelon.reduced(r, m.cols());
  }
  return x;
}

/// Exact inverse of a square matrix, or nothing when it is singular.
template <typename Derived>
std::optional<MatrixX<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const Eigen::Index size = m.rows();
  MatrixX<S> augmented(size, 2 * size);
  augmented.leftCols(size) = m;
  augmented.rightCols(size) = MatrixX<S>::Identity(size, size);
  const auto echelon = row_reduce(augmented);
  if (echelon.rank() < size || echelon.pivots[static_cast<std::size_t>(size - 1)] != size - 1) {
    return std::nullopt;
  }
  return MatrixX<S>(echelon.reduced.rightCols(size));
}

template <typename DerivedA, typename DerivedB>
bool exactly_equal(const Eigen::MatrixBase<DerivedA>& lhs, const Eigen::MatrixBase<DerivedB>& rhs) {
  // Product expressions would be re-evaluated on every coefficient access.
  const auto& a = lhs.eval();
  const auto& b = rhs.eval();
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (!(a(r, c) == b(r, c))) return false;
    }
  }
  return true;
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& expr) {
  using S = typename Derived::Scalar;
  const auto& a = expr.eval();
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (!(a(r, c) == S(0))) return false;
    }
  }
  return true;
}

/// Dense univariate polynomial, coefficients from low to high degree, no
/// trailing zeros (the zero polynomial is empty).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);

  static Polynomial monomial(int degree, Scalar coeff = Scalar(1));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& leading() const { return coeffs_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Quotient and remainder of Euclidean division by a nonzero divisor.
  static std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b);

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);

/// Minimal polynomial of a square matrix (monic), by Krylov sequences of the
/// standard basis vectors accumulated with lcm. Vectors already inside the
/// invariant subspace spanned so far are skipped.
Polynomial minimal_polynomial(const Matrix& m);

/// True iff p is a power of t (p = t^k, k >= 0).
bool is_power_of_t(const Polynomial& p);
/// gcd(p, p') = 1.
bool is_squarefree(const Polynomial& p);

}  // namespace grassmann
