#include "grassmann/derivations.hpp"

#include <utility>

#include "closure.hpp"
#include "grassmann/canonical.hpp"
#include "leibniz.hpp"

namespace grassmann {

namespace {

Element x(int n, Field field, int i) { return Element::generator(n, field, i); }

Scalar half() { return Scalar::rational(1, 2); }

void require_jordan_size(int n) {
  if (n > kMaxJordanGenerators) {
    throw CapacityError("operator matrices are limited to n <= " +
                        std::to_string(kMaxJordanGenerators) + ", got n = " + std::to_string(n));
  }
}

void require_same_algebra(const Derivation& a, const Derivation& b) {
  a.images().front().require_compatible(b.images().front());
}

}  // namespace

std::vector<RelationViolation> derivation_violations(std::span<const Element> images) {
  detail::require_image_tuple(images, "derivation");
  const int n = images.front().n();
  const Field field = images.front().field();
  std::vector<RelationViolation> out;
  for (int i = 1; i <= n; ++i) {
    const Element& u = images[static_cast<std::size_t>(i - 1)];
    const Element xi = x(n, field, i);
    if (!(u * xi + xi * u).is_zero()) out.push_back({i, 0});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Element& ui = images[static_cast<std::size_t>(i - 1)];
      const Element& uj = images[static_cast<std::size_t>(j - 1)];
      const Element xi = x(n, field, i);
      const Element xj = x(n, field, j);
      if (!(ui * xj + xi * uj + uj * xi + xj * ui).is_zero()) out.push_back({i, j});
    }
  }
  return out;
}

Derivation::Derivation(std::vector<Element> images) : images_(std::move(images)) {
  auto violations = derivation_violations(images_);
  if (!violations.empty()) throw RelationError("not a derivation", std::move(violations));
}

Derivation Derivation::zero(int n, Field field) {
  return Derivation(std::vector<Element>(static_cast<std::size_t>(n), Element(n, field)));
}

Derivation make_derivation(std::vector<Element> images) { return Derivation(std::move(images)); }

Element apply_derivation(const Derivation& d, const Element& a) {
  a.require_compatible(d.images().front());
  return detail::apply_leibniz(d.images(), a, false);
}

Derivation ad(const Element& a) {
  std::vector<Element> images;
  for (int i = 1; i <= a.n(); ++i) {
    const Mask xi = generator_mask(i);
    images.push_back(right_multiply(a, xi) - left_multiply(xi, a));
  }
  return Derivation(std::move(images));
}

Derivation times_partial(const Element& u, int j) {
  if (j < 1 || j > u.n()) throw DimensionError("partial index out of range");
  std::vector<Element> images(static_cast<std::size_t>(u.n()), Element(u.n(), u.field()));
  images[static_cast<std::size_t>(j - 1)] = u;
  return Derivation(std::move(images));
}

Derivation x_partial(int n, Field field, int i, int j) { return times_partial(x(n, field, i), j); }

Derivation h_derivation(int n, Field field, int i) { return x_partial(n, field, i, i); }

DerDecomposition decompose_derivation(const Derivation& d) {
  const int n = d.n();
  DerDecomposition out{{}, Element(n, d.field())};
  std::vector<Element> even_images;
  for (const auto& u : d.images()) {
    auto [even, odd] = parity_split(u);
    out.even_coeffs.push_back(std::move(odd));
    even_images.push_back(std::move(even));
  }
  const XaResult solved = solve_xa_system(even_images);
  if (const auto* failure = std::get_if<XaFailure>(&solved)) {
    throw Error("internal: even part of a validated derivation is not inner: " +
                failure->describe());
  }
  out.inner_element = std::get<XaSolution>(solved).particular;
  return out;
}

Derivation reassemble(const DerDecomposition& parts) {
  std::vector<Element> images = parts.even_coeffs;
  const Derivation inner = ad(parts.inner_element);
  for (std::size_t i = 0; i < images.size(); ++i) images[i] -= half() * inner.images()[i];
  return Derivation(std::move(images));
}

Derivation lie_bracket(const Derivation& d1, const Derivation& d2) {
  require_same_algebra(d1, d2);
  std::vector<Element> images;
  for (int i = 1; i <= d1.n(); ++i) {
    images.push_back(apply_derivation(d1, d2.image(i)) - apply_derivation(d2, d1.image(i)));
  }
  return Derivation(std::move(images));
}

Derivation operator+(const Derivation& a, const Derivation& b) {
  require_same_algebra(a, b);
  std::vector<Element> images = a.images();
  for (std::size_t i = 0; i < images.size(); ++i) images[i] += b.images()[i];
  return Derivation(std::move(images));
}

Derivation operator*(const Scalar& c, const Derivation& d) {
  std::vector<Element> images = d.images();
  for (auto& u : images) u *= c;
  return Derivation(std::move(images));
}

std::map<int, Derivation> graded_parts(const Derivation& d) {
  std::map<int, Derivation> out;
  for (int k = -1; k < d.n(); ++k) {
    std::vector<Element> images;
    bool nonzero = false;
    for (const auto& u : d.images()) {
      images.push_back(grade_component(u, k + 1));
      nonzero = nonzero || !images.back().is_zero();
    }
    if (nonzero) out.emplace(k, Derivation(std::move(images)));
  }
  return out;
}

Matrix operator_matrix(const Derivation& d) {
  require_jordan_size(d.n());
  return monomial_matrix(d.n(), d.field(),
                         [&d](const Element& m) { return apply_derivation(d, m); });
}

bool is_nilpotent(const Derivation& d) { return is_power_of_t(minimal_polynomial(operator_matrix(d))); }

bool is_semisimple(const Derivation& d) { return is_squarefree(minimal_polynomial(operator_matrix(d))); }

Subspace differential_closure(const Element& seed) {
  const int n = seed.n();
  const Field field = seed.field();
  std::vector<detail::LinearOp> ops;
  const MonomialOrder order(n);
  for (Mask m : order.masks()) {
    if (degree_of(m) % 2 == 0) continue;
    for (int j = 1; j <= n; ++j) {
      ops.push_back([m, j](const Element& b) { return left_multiply(m, skew_partial(b, j)); });
    }
    if (degree_of(m) <= n - 1) {
      const Derivation inner = ad(Element::monomial(n, field, m));
      ops.push_back([inner](const Element& b) { return apply_derivation(inner, b); });
    }
  }
  return detail::stable_ideal_closure(seed, ops);
}

RecoveryError::RecoveryError(Condition condition, int i, int j, const std::string& detail)
    : DomainError("generator recovery failed: " + detail),
      condition_(condition),
      first_(i),
      second_(j) {}

namespace {

using Condition = RecoveryError::Condition;

Subspace kernel_subspace(const Matrix& m, const MonomialOrder& order, Field field) {
  const Matrix basis = kernel(m);
  Subspace out(order.n(), field);
  for (Eigen::Index c = 0; c < basis.cols(); ++c) out.insert(order.element(basis.col(c), field));
  return out;
}

Matrix stack(const std::vector<Matrix>& blocks) {
  Eigen::Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix out(rows, blocks.front().cols());
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return out;
}

// span{x * k : k in sub}
Subspace left_product(const Element& x, const Subspace& sub) {
  Subspace out(sub.n(), sub.field());
  for (const auto& k : sub.basis()) out.insert(x * k);
  return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  Subspace out = a;
  for (const auto& v : b.basis()) out.insert(v);
  return out;
}

void check_module_equalities(const std::vector<Matrix>& ms, const std::vector<Element>& gens,
                             const MonomialOrder& order, Field field) {
  const int n = order.n();
  // K_{1..i} for i = 0..n; K_{1..0} = Lambda_n.
  std::vector<Subspace> common;
  common.push_back(augmentation_power(n, field, 0));
  for (int i = 1; i <= n; ++i) {
    common.push_back(kernel_subspace(
        stack(std::vector<Matrix>(ms.begin(), ms.begin() + i)), order, field));
  }
  for (int i = 0; i < n; ++i) {
    const Subspace& next = common[static_cast<std::size_t>(i + 1)];
    const Subspace rhs = sum(next, left_product(gens[static_cast<std::size_t>(i)], next));
    if (!(rhs == common[static_cast<std::size_t>(i)])) {
      throw RecoveryError(Condition::ModuleEquality, i, i + 1,
                          "K_{1.." + std::to_string(i) + "} != K_{1.." + std::to_string(i + 1) +
                              "} + x'_" + std::to_string(i + 1) + " K_{1.." +
                              std::to_string(i + 1) + "}");
    }
  }
}

}  // namespace

std::vector<Element> recover_generators(std::span<const Derivation> s, bool strict) {
  if (s.empty()) throw RecoveryError(Condition::WrongCount, 0, 0, "no derivations given");
  const int n = s.front().n();
  const Field field = s.front().field();
  if (static_cast<int>(s.size()) != n) {
    throw RecoveryError(Condition::WrongCount, static_cast<int>(s.size()), n,
                        "expected " + std::to_string(n) + " derivations");
  }
  require_jordan_size(n);
  for (const auto& d : s) require_same_algebra(d, s.front());

  const MonomialOrder order(n);
  const auto dim = static_cast<Eigen::Index>(order.size());
  std::vector<Matrix> ms;
  for (const auto& d : s) ms.push_back(operator_matrix(d));

  for (int i = 0; i < n; ++i) {
    const Matrix& m = ms[static_cast<std::size_t>(i)];
    if (!exactly_equal(m * m, m)) {
      throw RecoveryError(Condition::NotIdempotent, i + 1, 0,
                          "s_" + std::to_string(i + 1) + " is not idempotent");
    }
    for (int j = i + 1; j < n; ++j) {
      const Matrix& mj = ms[static_cast<std::size_t>(j)];
      if (!exactly_equal(m * mj, mj * m)) {
        throw RecoveryError(Condition::NotCommuting, i + 1, j + 1,
                            "s_" + std::to_string(i + 1) + " and s_" + std::to_string(j + 1) +
                                " do not commute");
      }
    }
  }

  if (kernel(stack(ms)).cols() != 1) {
    throw RecoveryError(Condition::KernelIntersection, 0, 0,
                        "the common kernel of s_1..s_n is not K");
  }

  Matrix constant_row = Matrix::Zero(1, dim);
  constant_row(0, static_cast<Eigen::Index>(order.index(0))) = Scalar(1);
  const Matrix identity = Matrix::Identity(dim, dim);

  std::vector<Element> gens;
  for (int i = 0; i < n; ++i) {
    std::vector<Matrix> blocks{ms[static_cast<std::size_t>(i)] - identity, constant_row};
    for (int j = 0; j < n; ++j) {
      if (j != i) blocks.push_back(ms[static_cast<std::size_t>(j)]);
    }
    const Matrix k = kernel(stack(blocks));
    if (k.cols() != 1) {
      throw RecoveryError(Condition::GeneratorSpace, i + 1, 0,
                          "the eigenspace for x'_" + std::to_string(i + 1) + " has dimension " +
                              std::to_string(k.cols()));
    }
    Element g = order.element(k.col(0), field);
    g *= g.terms().front().coeff.inverse();
    gens.push_back(std::move(g));
  }

  Matrix linear(n, n);
  for (int i = 0; i < n; ++i) {
    const Element& g = gens[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) linear(i, j) = g.coeff(generator_mask(j + 1));
    bool canonical = g.constant_term().is_zero() && (g * g).is_zero();
    for (int j = 0; j < i && canonical; ++j) {
      const Element& h = gens[static_cast<std::size_t>(j)];
      canonical = (g * h + h * g).is_zero();
    }
    if (!canonical) {
      throw RecoveryError(Condition::NotCanonical, i + 1, 0,
                          "x'_" + std::to_string(i + 1) + " breaks the canonical relations");
    }
  }
  if (rank(linear) != n) {
    throw RecoveryError(Condition::NotCanonical, 0, 0, "linear parts of x' are dependent");
  }

  if (strict) check_module_equalities(ms, gens, order, field);
  return gens;
}

}  // namespace grassmann
