#pragma once

#include <span>
#include <string>
#include <vector>

#include "grassmann/element.hpp"
#include "grassmann/errors.hpp"

namespace grassmann::detail {

/// Extends x_i -> images[i-1] to a by the Leibniz rule over ascending
/// monomials. With `skew`, the j-th summand carries (-1)^(j-1).
inline Element apply_leibniz(std::span<const Element> images, const Element& a, bool skew) {
  Element out(a.n(), a.field());
  for (const auto& t : a.terms()) {
    std::vector<Term> pieces;
    int position = 0;
    for (Mask rest = t.mask; rest != 0; rest &= rest - 1, ++position) {
      const Mask bit = rest & (~rest + 1);
      const Mask prefix = t.mask & (bit - 1);
      const Mask suffix = t.mask & ~(prefix | bit);
      const Element& u = images[static_cast<std::size_t>(std::countr_zero(bit))];
      for (const auto& ut : u.terms()) {
        if ((ut.mask & (prefix | suffix)) != 0) continue;
        bool negative = skew && position % 2 == 1;
        if (product_sign_negative(prefix, ut.mask)) negative = !negative;
        if (product_sign_negative(prefix | ut.mask, suffix)) negative = !negative;
        Scalar c = t.coeff * ut.coeff;
        pieces.push_back(Term{prefix | ut.mask | suffix, negative ? -c : c});
      }
    }
    out += Element::from_terms(a.n(), a.field(), std::move(pieces));
  }
  return out;
}

inline void require_image_tuple(std::span<const Element> images, const char* what) {
  if (images.empty()) throw DimensionError(std::string(what) + ": no images given");
  const int n = images.front().n();
  if (static_cast<int>(images.size()) != n) {
    throw DimensionError(std::string(what) + ": expected " + std::to_string(n) + " images, got " +
                         std::to_string(images.size()));
  }
  for (const auto& u : images) u.require_compatible(images.front());
}

}  // namespace grassmann::detail
