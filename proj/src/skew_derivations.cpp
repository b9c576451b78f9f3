#include "grassmann/skew_derivations.hpp"

#include <utility>

#include "closure.hpp"
#include "grassmann/canonical.hpp"
#include "leibniz.hpp"

namespace grassmann {

std::vector<RelationViolation> skew_derivation_violations(std::span<const Element> images) {
  detail::require_image_tuple(images, "skew derivation");
  const int n = images.front().n();
  std::vector<RelationViolation> out;
  auto ux = [&](int i, int j) {
    return right_multiply(images[static_cast<std::size_t>(i - 1)], generator_mask(j));
  };
  auto xu = [&](int i, int j) {
    return left_multiply(generator_mask(i), images[static_cast<std::size_t>(j - 1)]);
  };
  for (int i = 1; i <= n; ++i) {
    if (!(ux(i, i) - xu(i, i)).is_zero()) out.push_back({i, 0});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!(ux(i, j) - xu(i, j) + ux(j, i) - xu(j, i)).is_zero()) out.push_back({i, j});
    }
  }
  return out;
}

SkewDerivation::SkewDerivation(std::vector<Element> images) : images_(std::move(images)) {
  auto violations = skew_derivation_violations(images_);
  if (!violations.empty()) throw RelationError("not a skew derivation", std::move(violations));
}

SkewDerivation SkewDerivation::zero(int n, Field field) {
  return SkewDerivation(std::vector<Element>(static_cast<std::size_t>(n), Element(n, field)));
}

SkewDerivation make_skew_derivation(std::vector<Element> images) {
  return SkewDerivation(std::move(images));
}

Element apply_skew(const SkewDerivation& d, const Element& a) {
  a.require_compatible(d.images().front());
  return detail::apply_leibniz(d.images(), a, true);
}

SkewDerivation sad(const Element& a) {
  std::vector<Element> images;
  for (int i = 1; i <= a.n(); ++i) {
    const Mask xi = generator_mask(i);
    images.push_back(right_multiply(a, xi) + left_multiply(xi, a));
  }
  return SkewDerivation(std::move(images));
}

SkewDerivation skew_times_partial(const Element& u, int j) {
  if (j < 1 || j > u.n()) throw DimensionError("partial index out of range");
  std::vector<Element> images(static_cast<std::size_t>(u.n()), Element(u.n(), u.field()));
  images[static_cast<std::size_t>(j - 1)] = u;
  return SkewDerivation(std::move(images));
}

SkewDerivation partial_skew(int n, Field field, int j) {
  return skew_times_partial(Element::constant(n, field, Scalar(1)), j);
}

SkewDecomposition decompose_skew(const SkewDerivation& d) {
  SkewDecomposition out{{}, Element(d.n(), d.field())};
  std::vector<Element> odd_images;
  for (const auto& u : d.images()) {
    auto [even, odd] = parity_split(u);
    out.odd_coeffs.push_back(std::move(even));
    odd_images.push_back(std::move(odd));
  }
  const XaResult solved = solve_xa_system(odd_images);
  if (const auto* failure = std::get_if<XaFailure>(&solved)) {
    throw Error("internal: odd part of a validated skew derivation is not inner: " +
                failure->describe());
  }
  out.sad_element = std::get<XaSolution>(solved).particular;
  return out;
}

SkewDerivation reassemble(const SkewDecomposition& parts) {
  std::vector<Element> images = parts.odd_coeffs;
  const SkewDerivation inner = sad(parts.sad_element);
  const Scalar half = Scalar::rational(1, 2);
  for (std::size_t i = 0; i < images.size(); ++i) images[i] += half * inner.images()[i];
  return SkewDerivation(std::move(images));
}

Subspace skew_differential_closure(const Element& seed) {
  const int n = seed.n();
  const Field field = seed.field();
  std::vector<detail::LinearOp> ops;
  const MonomialOrder order(n);
  for (Mask m : order.masks()) {
    if (degree_of(m) % 2 == 1) continue;
    for (int j = 1; j <= n; ++j) {
      ops.push_back([m, j](const Element& b) { return left_multiply(m, skew_partial(b, j)); });
    }
    if (n % 2 == 0 && m == full_mask(n)) continue;
    const SkewDerivation inner = sad(Element::monomial(n, field, m));
    ops.push_back([inner](const Element& b) { return apply_skew(inner, b); });
  }
  return detail::stable_ideal_closure(seed, ops);
}

}  // namespace grassmann
