#include "grassmann/random.hpp"

#include <vector>

namespace grassmann {

std::uint64_t draw_below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

Scalar random_scalar(Rng& rng, Field field) {
  const long num = static_cast<long>(draw_below(rng, 7)) - 3;
  if (field.is_rational()) {
    const long den = static_cast<long>(draw_below(rng, 3)) + 1;
    return Scalar::rational(num, den);
  }
  return Scalar::from_integer(num, field);
}

Scalar random_nonzero_scalar(Rng& rng, Field field) {
  for (;;) {
    Scalar c = random_scalar(rng, field);
    if (!c.is_zero()) return c;
  }
}

Element random_element(Rng& rng, int n, Field field, const ElementShape& shape) {
  std::vector<Term> terms;
  const auto threshold = static_cast<std::uint64_t>(shape.density * 1000.0);
  for (Mask m = 0;; ++m) {
    const int d = degree_of(m);
    const bool wanted = d >= shape.min_degree && d <= shape.max_degree &&
                        (shape.parity < 0 || d % 2 == shape.parity);
    if (wanted && draw_below(rng, 1000) < threshold) {
      terms.push_back(Term{m, random_scalar(rng, field)});
    }
    if (m == full_mask(n)) break;
  }
  return Element::from_terms(n, field, std::move(terms));
}

Matrix random_invertible_matrix(Rng& rng, int n, Field field) {
  for (;;) {
    Matrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) a(i, j) = random_scalar(rng, field);
    }
    if (rank(a) == n) return a;
  }
}

Automorphism random_automorphism(Rng& rng, int n, Field field) {
  const Element a = random_element(rng, n, field, {1, n - 1, 1, 0.4});
  std::vector<Element> b;
  for (int i = 0; i < n; ++i) b.push_back(random_element(rng, n, field, {3, n, 1, 0.4}));
  return compose(omega(a), compose(gamma(b), sigma_matrix(random_invertible_matrix(rng, n, field), field)));
}

Derivation random_derivation(Rng& rng, int n, Field field) {
  std::vector<Element> images;
  for (int i = 0; i < n; ++i) images.push_back(random_element(rng, n, field, {0, n, 1, 0.4}));
  const Element a = random_element(rng, n, field, {0, n, 1, 0.4});
  return reassemble(DerDecomposition{std::move(images), a});
}

SkewDerivation random_skew_derivation(Rng& rng, int n, Field field) {
  std::vector<Element> images;
  for (int i = 0; i < n; ++i) images.push_back(random_element(rng, n, field, {0, n, 0, 0.4}));
  const Element a = random_element(rng, n, field, {0, n, 0, 0.4});
  return reassemble(SkewDecomposition{std::move(images), a});
}

}  // namespace grassmann
