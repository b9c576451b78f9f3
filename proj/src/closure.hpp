#pragma once

#include <deque>
#include <functional>
#include <vector>

#include "grassmann/subspace.hpp"

namespace grassmann::detail {

using LinearOp = std::function<Element(const Element&)>;

/// Smallest two-sided ideal containing seed and mapped into itself by every
/// operator. Operators are linear, so applying them to a spanning set of
/// the current ideal is enough; the queue holds exactly such a set.
inline Subspace stable_ideal_closure(const Element& seed, const std::vector<LinearOp>& ops) {
  const int n = seed.n();
  const Field field = seed.field();
  Subspace ideal(n, field);
  std::deque<Element> pending;

  auto absorb = [&](const Element& v) {
    if (ideal.contains(v)) return;
    const Element gens[] = {v};
    const Subspace generated = ideal_from_generators(n, field, gens);
    for (const auto& w : generated.basis()) {
      if (ideal.insert(w)) pending.push_back(w);
    }
  };

  absorb(seed);
  while (!pending.empty()) {
    const Element v = std::move(pending.front());
    pending.pop_front();
    for (const auto& op : ops) absorb(op(v));
  }
  return ideal;
}

}  // namespace grassmann::detail
