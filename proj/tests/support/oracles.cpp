#include "oracles.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace oracle {

namespace {

Element gen(int n, Field f, int i) { return Element::generator(n, f, i); }

// Matrix of the linear map on Lambda_n, columns indexed by monomials.
template <typename F>
Matrix map_matrix(int n, Field field, F&& f) {
  return monomial_matrix(n, field, std::forward<F>(f));
}

Matrix vstack(const std::vector<Matrix>& blocks) {
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

}  // namespace

Subspace commutant(int n, Field field) {
  std::vector<Matrix> blocks;
  for (int i = 1; i <= n; ++i) {
    const Element xi = gen(n, field, i);
    blocks.push_back(map_matrix(n, field, [&](const Element& z) { return z * xi - xi * z; }));
  }
  const MonomialOrder order(n);
  const Matrix k = kernel(vstack(blocks));
  Subspace out(n, field);
  for (Eigen::Index c = 0; c < k.cols(); ++c) out.insert(order.element(k.col(c), field));
  return out;
}

StackedSolution solve_stacked(std::span<const Element> u) {
  const int n = u.front().n();
  const Field field = u.front().field();
  const MonomialOrder order(n);
  std::vector<Matrix> blocks;
  Vector rhs(static_cast<Eigen::Index>(n) * static_cast<Eigen::Index>(order.size()));
  for (int i = 1; i <= n; ++i) {
    const Element xi = gen(n, field, i);
    blocks.push_back(map_matrix(n, field, [&](const Element& a) { return xi * a; }));
    rhs.segment(static_cast<Eigen::Index>(i - 1) * static_cast<Eigen::Index>(order.size()),
                static_cast<Eigen::Index>(order.size())) =
        order.coordinates(u[static_cast<std::size_t>(i - 1)]);
  }
  const Matrix system = vstack(blocks);
  StackedSolution out{std::nullopt, Subspace(n, field)};
  if (auto x = solve(system, rhs)) out.solution = order.element(*x, field);
  const Matrix k = kernel(system);
  for (Eigen::Index c = 0; c < k.cols(); ++c) out.kernel.insert(order.element(k.col(c), field));
  return out;
}

const std::vector<std::vector<Element>>& relation_kernel(int n, Field field, bool skew) {
  static std::mutex lock;
  static std::map<std::tuple<int, std::uint32_t, bool>, std::vector<std::vector<Element>>> cache;
  const std::lock_guard guard(lock);
  const auto key = std::make_tuple(n, field.modulus(), skew);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const MonomialOrder order(n);
  const auto dim = static_cast<Eigen::Index>(order.size());
  const int sign = skew ? -1 : 1;
  // One block of rows per relation; one column per (image index, monomial).
  std::vector<std::pair<int, int>> relations;
  for (int i = 1; i <= n; ++i) relations.emplace_back(i, i);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) relations.emplace_back(i, j);
  }
  Matrix system = Matrix::Zero(static_cast<Eigen::Index>(relations.size()) * dim, n * dim);
  for (int k = 1; k <= n; ++k) {
    for (std::size_t col = 0; col < order.size(); ++col) {
      std::vector<Element> images(static_cast<std::size_t>(n), Element(n, field));
      images[static_cast<std::size_t>(k - 1)] = Element::monomial(n, field, order.mask(col));
      for (std::size_t r = 0; r < relations.size(); ++r) {
        const auto [i, j] = relations[r];
        const Element& ui = images[static_cast<std::size_t>(i - 1)];
        const Element& uj = images[static_cast<std::size_t>(j - 1)];
        const Element xi = gen(n, field, i);
        const Element xj = gen(n, field, j);
        // delta(x_i x_j + x_j x_i) with the (skew) Leibniz rule.
        Element residual = ui * xj + Scalar(sign) * (xi * uj) + uj * xi + Scalar(sign) * (xj * ui);
        const Vector v = order.coordinates(residual);
        system.block(static_cast<Eigen::Index>(r) * dim, (k - 1) * dim + static_cast<Eigen::Index>(col),
                     dim, 1) = v;
      }
    }
  }
  const Matrix k = kernel(system);
  std::vector<std::vector<Element>> basis;
  for (Eigen::Index c = 0; c < k.cols(); ++c) {
    std::vector<Element> images;
    for (int i = 0; i < n; ++i) {
      images.push_back(order.element(k.col(c).segment(i * dim, dim), field));
    }
    basis.push_back(std::move(images));
  }
  return cache.emplace(key, std::move(basis)).first->second;
}

std::vector<Element> random_relation_images(Rng& rng, int n, Field field, bool skew) {
  const auto& basis = relation_kernel(n, field, skew);
  std::vector<Element> images(static_cast<std::size_t>(n), Element(n, field));
  for (const auto& v : basis) {
    if (draw_below(rng, 2) == 0) continue;
    const Scalar c = random_scalar(rng, field);
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] += c * v[static_cast<std::size_t>(i)];
  }
  return images;
}

bool normal_by_spans(const Element& a) {
  const int n = a.n();
  Subspace left(n, a.field());
  Subspace right(n, a.field());
  for (Mask m = 0; m <= full_mask(n); ++m) {
    const Element mono = Element::monomial(n, a.field(), m);
    left.insert(mono * a);
    right.insert(a * mono);
  }
  return left == right;
}

Subspace naive_ideal(std::span<const Element> gens) {
  const int n = gens.front().n();
  const Field field = gens.front().field();
  Subspace out(n, field);
  for (const auto& g : gens) {
    for (Mask m = 0; m <= full_mask(n); ++m) {
      for (Mask p = 0; p <= full_mask(n); ++p) {
        out.insert(Element::monomial(n, field, m) * g * Element::monomial(n, field, p));
      }
    }
  }
  return out;
}

bool nilpotent_by_powers(const Matrix& m) {
  Matrix power = m;
  for (Eigen::Index k = 1; k < m.rows(); ++k) power = power * m;
  return is_zero_matrix(power);
}

Triple random_triple(Rng& rng, int n, Field field) {
  Triple t{Element(n, field), {}, Matrix()};
  t.a = random_element(rng, n, field, {1, n - 1, 1, 0.5});
  for (int i = 0; i < n; ++i) t.b.push_back(random_element(rng, n, field, {3, n, 1, 0.5}));
  t.A = random_invertible_matrix(rng, n, field);
  return t;
}

Automorphism assemble(const Triple& t, Field field) {
  return compose(omega(t.a), compose(gamma(t.b), sigma_matrix(t.A, field)));
}

std::vector<Element> on_all_monomials(const Derivation& d) {
  std::vector<Element> out;
  for (Mask m = 0; m <= full_mask(d.n()); ++m) {
    out.push_back(apply_derivation(d, Element::monomial(d.n(), d.field(), m)));
  }
  return out;
}

std::vector<Element> on_all_monomials(const SkewDerivation& d) {
  std::vector<Element> out;
  for (Mask m = 0; m <= full_mask(d.n()); ++m) {
    out.push_back(apply_skew(d, Element::monomial(d.n(), d.field(), m)));
  }
  return out;
}

}  // namespace oracle
