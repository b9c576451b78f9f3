#include "grassmann/subspace.hpp"

#include <algorithm>

#include "grassmann/errors.hpp"

namespace grassmann {

Subspace::Subspace(int n, Field field) : n_(n), field_(field) { require_generator_count(n); }

Subspace Subspace::span(int n, Field field, std::span<const Element> vectors) {
  Subspace out(n, field);
  for (const auto& v : vectors) out.insert(v);
  return out;
}

std::size_t Subspace::pivot_position(Mask mask) const {
  const auto key = canonical_key(mask);
  auto it = std::lower_bound(basis_.begin(), basis_.end(), key, [](const Element& b, auto k) {
    return canonical_key(b.terms().front().mask) < k;
  });
  if (it != basis_.end() && it->terms().front().mask == mask) {
    return static_cast<std::size_t>(it - basis_.begin());
  }
  return basis_.size();
}

Element Subspace::reduce(const Element& v) const {
  Element out = v;
  out.require_compatible(Element(n_, field_));
  if (basis_.empty()) return out;
  // Pivot coordinates of v are untouched by subtracting other basis vectors.
  for (const auto& t : v.terms()) {
    const std::size_t k = pivot_position(t.mask);
    if (k < basis_.size()) out -= t.coeff * basis_[k];
  }
  return out;
}

bool Subspace::insert(const Element& v) {
  Element r = reduce(v);
  if (r.is_zero()) return false;
  r *= r.terms().front().coeff.inverse();
  const Mask pivot = r.terms().front().mask;
  for (auto& b : basis_) {
    const Scalar c = b.coeff(pivot);
    if (!c.is_zero()) b -= c * r;
  }
  const auto key = canonical_key(pivot);
  auto it = std::lower_bound(basis_.begin(), basis_.end(), key, [](const Element& b, auto k) {
    return canonical_key(b.terms().front().mask) < k;
  });
  basis_.insert(it, std::move(r));
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Element& v) { return contains(v); });
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.n_ == b.n_ && a.field_ == b.field_ && a.basis_ == b.basis_;
}

bool contains(const Subspace& sub, const Element& a) { return sub.contains(a); }

Subspace ideal_from_generators(int n, Field field, std::span<const Element> gens) {
  // y x_i = x_i bar(y), so Lambda g Lambda = Lambda g + sum_i Lambda g x_i.
  Subspace out(n, field);
  const Mask monomials = full_mask(n);
  for (const auto& g : gens) {
    g.require_compatible(Element(n, field));
    std::vector<Element> left_gens{g};
    for (int i = 1; i <= n; ++i) left_gens.push_back(right_multiply(g, generator_mask(i)));
    for (const auto& h : left_gens) {
      if (h.is_zero()) continue;
      for (Mask m = 0;; ++m) {
        out.insert(left_multiply(m, h));
        if (m == monomials) break;
      }
    }
  }
  return out;
}

Subspace ideal_from_generators(std::span<const Element> gens) {
  if (gens.empty()) throw DomainError("ideal_from_generators needs n and field for an empty list");
  return ideal_from_generators(gens.front().n(), gens.front().field(), gens);
}

Subspace augmentation_power(int n, Field field, int i) {
  Subspace out(n, field);
  const MonomialOrder order(n);
  for (Mask m : order.masks()) {
    if (degree_of(m) >= i) out.insert(Element::monomial(n, field, m));
  }
  return out;
}

Subspace centre_basis(int n, Field field) {
  Subspace out(n, field);
  const MonomialOrder order(n);
  for (Mask m : order.masks()) {
    if (n == 1 || degree_of(m) % 2 == 0 || m == full_mask(n)) {
      out.insert(Element::monomial(n, field, m));
    }
  }
  return out;
}

}  // namespace grassmann
