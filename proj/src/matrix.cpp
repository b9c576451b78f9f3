#include "grassmann/matrix.hpp"

#include "grassmann/errors.hpp"

namespace grassmann {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(int degree, Scalar coeff) {
  std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1, Scalar(0));
  c.back() = std::move(coeff);
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Scalar inv = leading().inverse();
  std::vector<Scalar> c = coeffs_;
  for (auto& x : c) x *= inv;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> c;
  c.reserve(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    c.push_back(coeffs_[k] * Scalar(static_cast<long>(k)));
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Polynomial(std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
  }
  return true;
}

std::pair<Polynomial, Polynomial> Polynomial::divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Scalar> rem = a.coeffs_;
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Scalar(0));
  const Scalar inv = b.leading().inverse();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + b.degree());
    if (rem[top].is_zero()) continue;
    const Scalar f = rem[top] * inv;
    quot[static_cast<std::size_t>(k)] = f;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      rem[static_cast<std::size_t>(k) + j] -= f * b.coeffs_[j];
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = Polynomial::divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return Polynomial::divide(a * b, gcd(a, b)).first.monic();
}

bool is_power_of_t(const Polynomial& p) {
  if (p.is_zero()) return false;
  for (int k = 0; k < p.degree(); ++k) {
    if (!p.coeffs()[static_cast<std::size_t>(k)].is_zero()) return false;
  }
  return true;
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

namespace {

// Incremental echelon basis of dense vectors; each stored row is 1 at its
// pivot and zero at every earlier pivot.
struct EchelonRows {
  std::vector<Vector> rows;
  std::vector<Eigen::Index> pivots;

  // Reduces v in place; returns the coefficients used (one per stored row).
  std::vector<Scalar> reduce(Vector& v) const {
    std::vector<Scalar> used(rows.size(), Scalar(0));
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Scalar f = v(pivots[k]);
      if (f.is_zero()) continue;
      v -= f * rows[k];
      used[k] = f;
    }
    return used;
  }

  static Eigen::Index first_nonzero(const Vector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (!v(i).is_zero()) return i;
    }
    return -1;
  }
};

}  // namespace

Polynomial minimal_polynomial(const Matrix& m) {
  const Eigen::Index dim = m.rows();
  if (m.cols() != dim) throw DimensionError("minimal polynomial of a non-square matrix");
  Polynomial result = Polynomial::monomial(0);
  EchelonRows invariant;

  for (Eigen::Index j = 0; j < dim; ++j) {
    Vector e = Vector::Zero(dim);
    e(j) = Scalar(1);
    {
      Vector probe = e;
      invariant.reduce(probe);
      if (EchelonRows::first_nonzero(probe) < 0) continue;
    }

    // Krylov sequence of e with each reduced row tracked as a combination of
    // the powers m^t e.
    EchelonRows krylov;
    std::vector<std::vector<Scalar>> combos;
    Vector power = e;
    for (std::size_t k = 0;; ++k) {
      Vector w = power;
      std::vector<Scalar> combo(k + 1, Scalar(0));
      combo[k] = Scalar(1);
      const auto used = krylov.reduce(w);
      for (std::size_t r = 0; r < used.size(); ++r) {
        if (used[r].is_zero()) continue;
        for (std::size_t t = 0; t < combos[r].size(); ++t) combo[t] -= used[r] * combos[r][t];
      }
      const Eigen::Index pivot = EchelonRows::first_nonzero(w);
      if (pivot < 0) {
        result = lcm(result, Polynomial(std::move(combo)));
        break;
      }
      const Scalar inv = w(pivot).inverse();
      w *= inv;
      for (auto& c : combo) c *= inv;
      krylov.rows.push_back(std::move(w));
      krylov.pivots.push_back(pivot);
      combos.push_back(std::move(combo));

      Vector add = power;
      invariant.reduce(add);
      if (const Eigen::Index p = EchelonRows::first_nonzero(add); p >= 0) {
        add *= add(p).inverse();
        invariant.rows.push_back(std::move(add));
        invariant.pivots.push_back(p);
      }
      power = m * power;
    }
  }
  return result;
}

}  // namespace grassmann
