#include "grassmann/automorphisms.hpp"

#include <utility>

#include "grassmann/canonical.hpp"
#include "leibniz.hpp"

namespace grassmann {

namespace {

std::vector<Element> generators(int n, Field field) {
  std::vector<Element> out;
  for (int i = 1; i <= n; ++i) out.push_back(Element::generator(n, field, i));
  return out;
}

Matrix linear_part_of(std::span<const Element> images) {
  const auto n = static_cast<Eigen::Index>(images.size());
  Matrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = images[static_cast<std::size_t>(i)].coeff(generator_mask(static_cast<int>(j) + 1));
    }
  }
  return a;
}

// sum_j m(i, j) v_j for each i.
std::vector<Element> matrix_action(const Matrix& m, std::span<const Element> v) {
  std::vector<Element> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Element acc(v.front().n(), v.front().field());
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) acc += m(i, j) * v[static_cast<std::size_t>(j)];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace

std::vector<RelationViolation> automorphism_violations(std::span<const Element> images) {
  detail::require_image_tuple(images, "automorphism");
  const int n = images.front().n();
  std::vector<RelationViolation> out;
  for (int i = 1; i <= n; ++i) {
    const Element& g = images[static_cast<std::size_t>(i - 1)];
    if (!(g * g).is_zero()) out.push_back({i, 0});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Element& gi = images[static_cast<std::size_t>(i - 1)];
      const Element& gj = images[static_cast<std::size_t>(j - 1)];
      if (!(gi * gj + gj * gi).is_zero()) out.push_back({i, j});
    }
  }
  return out;
}

Automorphism::Automorphism(std::vector<Element> images) : images_(std::move(images)) {
  detail::require_image_tuple(images_, "automorphism");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!images_[i].constant_term().is_zero()) {
      throw DomainError("automorphism image of x_" + std::to_string(i + 1) +
                        " has a nonzero constant term");
    }
  }
  auto violations = automorphism_violations(images_);
  if (!violations.empty()) throw RelationError("not an automorphism", std::move(violations));
  if (rank(linear_part()) != static_cast<Eigen::Index>(images_.size())) {
    throw DomainError("automorphism has a singular linear part");
  }
}

Automorphism Automorphism::identity(int n, Field field) { return Automorphism(generators(n, field)); }

Matrix Automorphism::linear_part() const { return linear_part_of(images_); }

Automorphism make_automorphism(std::vector<Element> images) {
  return Automorphism(std::move(images));
}

Element apply_automorphism(const Automorphism& s, const Element& a) {
  a.require_compatible(s.images().front());
  return substitute(a, s.images());
}

Automorphism compose(const Automorphism& s, const Automorphism& t) {
  s.images().front().require_compatible(t.images().front());
  std::vector<Element> images;
  for (const auto& g : t.images()) images.push_back(apply_automorphism(s, g));
  return Automorphism(std::move(images));
}

Automorphism invert(const Automorphism& s) {
  const int n = s.n();
  if (n > kMaxInvertGenerators) {
    throw CapacityError("invert is limited to n <= " + std::to_string(kMaxInvertGenerators));
  }
  const MonomialOrder order(n);
  const Matrix m = monomial_matrix(n, s.field(),
                                   [&s](const Element& e) { return apply_automorphism(s, e); });
  const auto inv = inverse(m);
  if (!inv) throw Error("internal: automorphism matrix is singular");
  std::vector<Element> images;
  for (int i = 1; i <= n; ++i) {
    images.push_back(order.element(inv->col(static_cast<Eigen::Index>(order.index(generator_mask(i)))),
                                   s.field()));
  }
  return Automorphism(std::move(images));
}

Automorphism omega(const Element& a) {
  if (!a.is_odd() || a.highest_degree() >= a.n()) {
    throw DomainError("omega needs an odd element with all degrees <= n-1");
  }
  std::vector<Element> images;
  for (int i = 1; i <= a.n(); ++i) {
    const Mask xi = generator_mask(i);
    images.push_back(Element::generator(a.n(), a.field(), i) + right_multiply(a, xi) -
                     left_multiply(xi, a));
  }
  return Automorphism(std::move(images));
}

Automorphism gamma(std::span<const Element> b) {
  detail::require_image_tuple(b, "gamma");
  std::vector<Element> images;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i].is_odd() || (!b[i].is_zero() && b[i].lowest_degree() < 3)) {
      throw DomainError("gamma needs odd b_i with all degrees >= 3");
    }
    images.push_back(Element::generator(b[i].n(), b[i].field(), static_cast<int>(i) + 1) + b[i]);
  }
  return Automorphism(std::move(images));
}

Automorphism sigma_matrix(const Matrix& a, Field field) {
  if (a.rows() != a.cols() || a.rows() < 1) throw DimensionError("sigma_matrix needs a square matrix");
  const int n = static_cast<int>(a.rows());
  Matrix converted(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) converted(i, j) = a(i, j).in(field);
  }
  if (rank(converted) != n) throw DomainError("sigma_matrix needs an invertible matrix");
  return Automorphism(matrix_action(converted, generators(n, field)));
}

Automorphism gamma_inverse(std::span<const Element> b) {
  const Automorphism forward = gamma(b);
  const int n = forward.n();
  const Field field = forward.field();
  std::vector<Element> y = generators(n, field);
  // The error y - gamma^{-1}(x) gains at least two degrees per round.
  for (int round = 0; round <= n / 2 + 1; ++round) {
    std::vector<Element> next;
    for (int i = 0; i < n; ++i) {
      next.push_back(Element::generator(n, field, i + 1) -
                     substitute(b[static_cast<std::size_t>(i)], y));
    }
    if (next == y) break;
    y = std::move(next);
  }
  return Automorphism(std::move(y));
}

Factorization factor_automorphism(const Automorphism& s) {
  const int n = s.n();
  const Field field = s.field();
  Factorization f{Element(n, field), {}, s.linear_part()};
  const auto a_inv = inverse(f.A);
  if (!a_inv) throw Error("internal: singular linear part");

  std::vector<Element> odd_images;
  std::vector<Element> even_images;
  for (const auto& g : s.images()) {
    auto [even, odd] = parity_split(g);
    odd_images.push_back(std::move(odd));
    even_images.push_back(std::move(even));
  }
  f.b = matrix_action(*a_inv, odd_images);
  for (int i = 0; i < n; ++i) f.b[static_cast<std::size_t>(i)] -= Element::generator(n, field, i + 1);

  const Automorphism g_inv = gamma_inverse(f.b);
  std::vector<Element> pulled;
  for (const auto& e : even_images) pulled.push_back(apply_automorphism(g_inv, e));
  const std::vector<Element> a_prime = matrix_action(*a_inv, pulled);

  // The solver fixes the theta-coefficient to 0; the factor is determined
  // only modulo the centre, so the degree-n part is dropped.
  const Element c = xa_particular(a_prime);
  Element a = Scalar::rational(-1, 2) * apply_automorphism(gamma(f.b), c);
  f.a = a - grade_component(a, n);
  return f;
}

Automorphism reassemble(const Factorization& f) {
  const Field field = f.a.field();
  return compose(omega(f.a), compose(gamma(f.b), sigma_matrix(f.A, field)));
}

Derivation conjugate_derivation(const Automorphism& s, const Derivation& d) {
  s.images().front().require_compatible(d.images().front());
  const Automorphism s_inv = invert(s);
  std::vector<Element> images;
  for (const auto& y : s_inv.images()) {
    images.push_back(apply_automorphism(s, apply_derivation(d, y)));
  }
  return Derivation(std::move(images));
}

std::optional<std::vector<Scalar>> is_torus(const Automorphism& s) {
  std::vector<Scalar> lambda;
  for (int i = 1; i <= s.n(); ++i) {
    const Element& g = s.image(i);
    if (g.size() != 1 || g.terms().front().mask != generator_mask(i)) return std::nullopt;
    lambda.push_back(g.terms().front().coeff);
  }
  return lambda;
}

}  // namespace grassmann
