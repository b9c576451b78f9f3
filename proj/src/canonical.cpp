#include "grassmann/canonical.hpp"

#include "grassmann/errors.hpp"

namespace grassmann {

namespace {

// d_k ... d_1 (a).
Element partials_down_from(Element a, int k) {
  for (int i = 1; i <= k && !a.is_zero(); ++i) a = skew_partial(a, i);
  return a;
}

void require_tuple(std::span<const Element> u) {
  if (u.empty()) throw DimensionError("empty element tuple");
  const int n = u.front().n();
  if (static_cast<int>(u.size()) != n) {
    throw DimensionError("expected " + std::to_string(n) + " elements, got " +
                         std::to_string(u.size()));
  }
  for (const auto& v : u) v.require_compatible(u.front());
}

}  // namespace

Mask prefix_mask(int k) { return k <= 0 ? 0 : full_mask(k); }

TriangularForm triangular_presentation(const Element& a) {
  const int n = a.n();
  TriangularForm form{partials_down_from(a, n).constant_term(), {}};
  form.b.reserve(static_cast<std::size_t>(n));
  form.b.push_back(a - h_op(1, a));
  for (int i = 1; i < n; ++i) {
    form.b.push_back(partials_down_from(a - h_op(i + 1, a), i));
  }
  return form;
}

Element reassemble(const TriangularForm& form, int n, Field field) {
  if (static_cast<int>(form.b.size()) != n) throw DimensionError("triangular form of wrong length");
  Element out = Element::monomial(n, field, full_mask(n), form.top);
  out += form.b[0];
  for (int i = 1; i < n; ++i) out += left_multiply(prefix_mask(i), form.b[static_cast<std::size_t>(i)]);
  return out;
}

std::string XaFailure::describe() const {
  if (condition == Condition::NotInIdeal) {
    return "u_" + std::to_string(i) + " is not in the ideal (x_" + std::to_string(i) + ")";
  }
  return "x_" + std::to_string(i) + "*u_" + std::to_string(j) + " != -x_" + std::to_string(j) +
         "*u_" + std::to_string(i);
}

Element xa_particular(std::span<const Element> u) {
  require_tuple(u);
  const int n = u.front().n();
  Element a = skew_partial(u[0], 1);
  for (int i = 1; i < n; ++i) {
    const Element inner = partials_down_from(skew_partial(u[static_cast<std::size_t>(i)], i + 1), i);
    a += left_multiply(prefix_mask(i), inner);
  }
  return a;
}

XaResult solve_xa_system(std::span<const Element> u) {
  require_tuple(u);
  const int n = u.front().n();
  for (int i = 1; i <= n; ++i) {
    const auto& ui = u[static_cast<std::size_t>(i - 1)];
    if (!(h_op(i, ui) == ui)) return XaFailure{XaFailure::Condition::NotInIdeal, i, 0};
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Element lhs = left_multiply(generator_mask(i), u[static_cast<std::size_t>(j - 1)]);
      const Element rhs = left_multiply(generator_mask(j), u[static_cast<std::size_t>(i - 1)]);
      if (!(lhs + rhs).is_zero()) return XaFailure{XaFailure::Condition::Anticommutation, i, j};
    }
  }
  return XaSolution{xa_particular(u), Element::top(n, u.front().field())};
}

}  // namespace grassmann
