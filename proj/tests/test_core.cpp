#include <catch_amalgamated.hpp>

#include <sstream>

#include "fixtures.hpp"
#include "grassmann/errors.hpp"
#include "grassmann/random.hpp"
#include "grassmann/subspace.hpp"
#include "oracles.hpp"

using namespace grassmann;
using fixtures::el;
using fixtures::kF3;
using fixtures::kF5;
using fixtures::kQ;

namespace {

const Field kFields[] = {kQ, kF5};

Element homogeneous(Rng& rng, int n, Field f, int degree) {
  return random_element(rng, n, f, {degree, degree, -1, 0.6});
}

}  // namespace

TEST_CASE("fields and scalars stay canonical", "[core][scalar]") {
  CHECK(Field::parse("q") == kQ);
  CHECK(Field::parse("fp:5") == kF5);
  CHECK_THROWS_AS(Field::prime(2), FieldError);
  CHECK_THROWS_AS(Field::prime(9), FieldError);
  CHECK_THROWS_AS(Field::parse("fp:x"), ParseError);

  const Scalar half = Scalar::rational(2, 4);
  CHECK(half.to_string() == "1/2");
  CHECK(Scalar::rational(3, -6).to_string() == "-1/2");
  CHECK((half + half).is_one());

  const Scalar minus_one = Scalar::from_integer(-1, kF5);
  CHECK(minus_one.residue() == 4);
  CHECK((minus_one * minus_one).is_one());
  CHECK((Scalar::from_integer(2, kF5).inverse() * Scalar(2)).in(kF5).is_one());
  CHECK(Scalar::rational(1, 2).in(kF5).residue() == 3);
  CHECK_THROWS_AS(Scalar::from_integer(1, kF3) + Scalar::from_integer(1, kF5), FieldError);
}

TEST_CASE("addition and scaling", "[core]") {
  CHECK(el("x1", 2) + el("x1", 2) == el("2*x1", 2));
  const Element a = el("1 - 3/2*x1*x2 + x1", 2);
  CHECK((a + Scalar(-1) * a).is_zero());
  CHECK(Scalar::rational(1, 2) * el("2*x1*x2", 2) == el("x1*x2", 2));
  CHECK(add(el("x1", 2), el("x2", 2)) == el("x1 + x2", 2));
  CHECK(scale(Scalar(3), el("x1", 2)) == el("3*x1", 2));
  CHECK_THROWS_AS(el("x1", 2) + el("x1", 3), DimensionError);
  CHECK_THROWS_AS(el("x1", 2, kQ) + el("x1", 2, kF5), FieldError);
}

TEST_CASE("multiplication follows the anticommutation rule", "[core]") {
  CHECK(el("x2", 2) * el("x1", 2) == el("-x1*x2", 2));
  CHECK((el("x1", 2) * el("x1", 2)).is_zero());
  CHECK(el("1 + x1", 2) * el("1 - x1", 2) == el("1", 2));
  CHECK(mul(el("x3", 3), el("x1*x2", 3)) == el("x1*x2*x3", 3));
  CHECK(el("x2*x3", 3) * el("x1", 3) == el("x1*x2*x3", 3));
  CHECK(el("x3", 3) * el("x2", 3) * el("x1", 3) == el("-x1*x2*x3", 3));

  Rng rng(11);
  for (Field f : kFields) {
    for (int n = 1; n <= 5; ++n) {
      for (int round = 0; round < 20; ++round) {
        const Element a = random_element(rng, n, f);
        const Element b = random_element(rng, n, f);
        const Element c = random_element(rng, n, f);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          const Element xi = Element::generator(n, f, i);
          const Element xj = Element::generator(n, f, j);
          CHECK(xi * xj == -(xj * xi));
        }
      }
    }
  }
}

TEST_CASE("parity involution", "[core]") {
  CHECK(parity_involution(el("x1", 2)) == el("-x1", 2));
  CHECK(parity_involution(el("1 + x1*x2", 2)) == el("1 + x1*x2", 2));

  Rng rng(12);
  for (Field f : kFields) {
    for (int n = 1; n <= 5; ++n) {
      for (int round = 0; round < 20; ++round) {
        const Element a = random_element(rng, n, f);
        const Element b = random_element(rng, n, f);
        CHECK(parity_involution(a * b) == parity_involution(a) * parity_involution(b));
        CHECK(parity_involution(parity_involution(a)) == a);
        for (int i = 1; i <= n; ++i) {
          const Element xi = Element::generator(n, f, i);
          CHECK(xi * a == parity_involution(a) * xi);
        }
      }
    }
  }
}

TEST_CASE("grade components and parity split", "[core]") {
  CHECK(grade_component(el("1 + x1 + x1*x2", 2), 1) == el("x1", 2));
  const auto split = parity_split(el("x1 + x1*x2", 2));
  CHECK(split.even == el("x1*x2", 2));
  CHECK(split.odd == el("x1", 2));
  const auto zero = parity_split(Element(2, kQ));
  CHECK(zero.even.is_zero());
  CHECK(zero.odd.is_zero());
  CHECK_THROWS_AS(grade_component(el("x1", 2), 3), DimensionError);
  CHECK_THROWS_AS(grade_component(el("x1", 2), -1), DimensionError);

  Rng rng(13);
  for (int n = 1; n <= 6; ++n) {
    const Element a = random_element(rng, n, kQ);
    Element sum(n, kQ);
    for (int i = 0; i <= n; ++i) sum += grade_component(a, i);
    CHECK(sum == a);
    CHECK(even_part(a) + odd_part(a) == a);
    CHECK(even_part(a).is_even());
    CHECK(odd_part(a).is_odd());
  }
}

TEST_CASE("substitution of zero", "[core]") {
  CHECK(substitute_zero(el("x1 + x2", 2), {1}) == el("x2", 2));
  CHECK(substitute_zero(el("x1*x2", 3), {3}) == el("x1*x2", 3));

  Rng rng(14);
  for (int n = 1; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      const Element a = random_element(rng, n, kF5);
      const Element gens[] = {Element::generator(n, kF5, i)};
      CHECK(ideal_from_generators(gens).contains(a - substitute_zero(a, {i})));
    }
  }
}

TEST_CASE("skew partial derivatives", "[core]") {
  CHECK(skew_partial(el("x1*x2*x3", 3), 2) == el("-x1*x3", 3));
  CHECK(skew_partial(el("1", 3), 1).is_zero());
  CHECK(skew_partial(el("x2*x3", 3), 1).is_zero());
  CHECK_THROWS_AS(skew_partial(el("x1", 2), 3), DimensionError);

  Rng rng(15);
  for (Field f : kFields) {
    for (int n = 1; n <= 5; ++n) {
      for (int round = 0; round < 10; ++round) {
        const int s = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(n) + 1));
        const Element as = homogeneous(rng, n, f, s);
        const Element b = random_element(rng, n, f);
        const Scalar sign = s % 2 == 0 ? Scalar(1) : Scalar(-1);
        const Element a = random_element(rng, n, f);
        for (int i = 1; i <= n; ++i) {
          CHECK(skew_partial(as * b, i) == skew_partial(as, i) * b + sign * (as * skew_partial(b, i)));
          CHECK(skew_partial(skew_partial(a, i), i).is_zero());
          for (int j = 1; j <= n; ++j) {
            CHECK(skew_partial(skew_partial(a, i), j) == -skew_partial(skew_partial(a, j), i));
          }
        }
      }
    }
  }
}

TEST_CASE("h operators are commuting idempotents with monomial eigenspaces", "[core]") {
  CHECK(h_op(2, el("x1*x2", 3)) == el("x1*x2", 3));
  CHECK(h_op(2, el("x1*x3", 3)).is_zero());
  CHECK(h_op(1, el("x2*x3", 3)).is_zero());

  Rng rng(16);
  for (int n = 1; n <= 5; ++n) {
    const Element a = random_element(rng, n, kQ);
    for (int i = 1; i <= n; ++i) {
      CHECK(h_op(i, h_op(i, a)) == h_op(i, a));
      for (int j = 1; j <= n; ++j) CHECK(h_op(i, h_op(j, a)) == h_op(j, h_op(i, a)));
    }
  }

  // For each eigenvalue tuple alpha, the solutions of h_i(z) = alpha_i z form K x^alpha.
  for (int n = 1; n <= 4; ++n) {
    const MonomialOrder order(n);
    for (Mask alpha = 0; alpha <= full_mask(n); ++alpha) {
      std::vector<Matrix> blocks;
      Eigen::Index rows = 0;
      for (int i = 1; i <= n; ++i) {
        const Scalar eigen = (alpha & generator_mask(i)) != 0 ? Scalar(1) : Scalar(0);
        blocks.push_back(monomial_matrix(n, kQ, [&](const Element& z) { return h_op(i, z) - eigen * z; }));
        rows += blocks.back().rows();
      }
      Matrix stacked(rows, static_cast<Eigen::Index>(order.size()));
      Eigen::Index at = 0;
      for (const auto& b : blocks) {
        stacked.middleRows(at, b.rows()) = b;
        at += b.rows();
      }
      const Matrix k = kernel(stacked);
      REQUIRE(k.cols() == 1);
      CHECK(order.element(k.col(0), kQ) == Element::monomial(n, kQ, alpha));
    }
  }
}

TEST_CASE("centre of the algebra", "[core]") {
  const Subspace c2 = centre_basis(2, kQ);
  CHECK(c2.dimension() == 2);
  CHECK(c2.contains(el("1", 2)));
  CHECK(c2.contains(el("x1*x2", 2)));

  const Subspace c3 = centre_basis(3, kQ);
  CHECK(c3 == Subspace::span(3, kQ, fixtures::els({"1", "x1*x2", "x1*x3", "x2*x3", "x1*x2*x3"}, 3)));

  CHECK(centre_basis(1, kQ).dimension() == 2);
  for (Field f : kFields) {
    for (int n = 2; n <= 6; ++n) CHECK(centre_basis(n, f) == oracle::commutant(n, f));
  }
}

TEST_CASE("ideals and membership", "[core]") {
  for (int n = 1; n <= 6; ++n) {
    const Element gens[] = {Element::generator(n, kQ, 1)};
    CHECK(ideal_from_generators(gens).dimension() == (std::size_t{1} << (n - 1)));
  }
  const Element x1[] = {el("x1", 2)};
  CHECK_FALSE(contains(ideal_from_generators(x1), el("x2", 2)));
  const Element x1x2[] = {el("x1", 2), el("x2", 2)};
  CHECK(contains(ideal_from_generators(x1x2), el("x1*x2", 2)));

  Rng rng(17);
  for (Field f : kFields) {
    for (int n = 1; n <= 4; ++n) {
      for (int round = 0; round < 5; ++round) {
        const Element gens[] = {random_element(rng, n, f, {0, n, -1, 0.3}),
                                random_element(rng, n, f, {1, n, -1, 0.3})};
        CHECK(ideal_from_generators(n, f, gens) == oracle::naive_ideal(gens));
      }
    }
  }

  for (int i = 0; i <= 4; ++i) {
    std::size_t expected = 0;
    for (Mask m = 0; m <= full_mask(4); ++m) expected += degree_of(m) >= i ? 1 : 0;
    CHECK(augmentation_power(4, kQ, i).dimension() == expected);
  }
}

TEST_CASE("subspaces keep a canonical reduced basis", "[core]") {
  Subspace s(3, kQ);
  CHECK(s.insert(el("x1 + x2", 3)));
  CHECK(s.insert(el("x2 + x3", 3)));
  CHECK_FALSE(s.insert(el("x1 - x3", 3)));
  CHECK(s.dimension() == 2);

  Subspace t(3, kQ);
  t.insert(el("x1 - x3", 3));
  t.insert(el("2*x2 + 2*x3", 3));
  CHECK(s == t);
  CHECK(s.contains(t));
  CHECK(s.reduce(el("x1", 3)) == el("x3", 3));
  for (const auto& b : s.basis()) CHECK(b.terms().front().coeff.is_one());
}

TEST_CASE("text form: printing and parsing", "[core][text]") {
  const Element a = el("1 - 3/2*x1*x2 + x1*x2*x3", 3);
  CHECK(to_string(a) == "1 - 3/2*x1*x2 + x1*x2*x3");
  CHECK(to_string(Element(2, kQ)) == "0");
  CHECK(to_string(el("1", 2)) == "1");
  CHECK(to_string(el("x2*x1", 2)) == "-x1*x2");
  CHECK(to_string(el("x2 x1 + 0", 2)) == "-x1*x2");
  CHECK(to_string(el("x1*x1", 2)) == "0");
  CHECK(to_string(el("-x1 - 2", 2)) == "-2 - x1");
  CHECK(to_string(el("1/2*x1", 2, kF5)) == "3*x1");
  CHECK(to_string(el("-x1", 2, kF5)) == "4*x1");

  std::ostringstream os;
  os << el("x1 + x2", 2);
  CHECK(os.str() == "x1 + x2");

  CHECK_THROWS_AS(el("x3", 2), ParseError);
  CHECK_THROWS_AS(el("x1 +", 2), ParseError);
  CHECK_THROWS_AS(el("y1", 2), ParseError);
  CHECK_THROWS_AS(el("1/0", 2), ParseError);
  CHECK_THROWS_AS(el("", 2), ParseError);
  CHECK_THROWS_AS(Element(17, kQ), DimensionError);
  CHECK_THROWS_AS(Element(0, kQ), DimensionError);

  Rng rng(18);
  for (Field f : kFields) {
    for (int n = 1; n <= 6; ++n) {
      for (int round = 0; round < 20; ++round) {
        const Element b = random_element(rng, n, f);
        CHECK(parse_element(to_string(b), n, f) == b);
      }
    }
  }
}

TEST_CASE("exact linear algebra kernels", "[core][matrix]") {
  Matrix m(2, 3);
  m << Scalar(1), Scalar(2), Scalar(3), Scalar(2), Scalar(4), Scalar(6);
  CHECK(rank(m) == 1);
  const Matrix k = kernel(m);
  CHECK(k.cols() == 2);
  CHECK(is_zero_matrix(Matrix(m * k)));

  Matrix a(2, 2);
  a << Scalar(1), Scalar(2), Scalar(3), Scalar(4);
  const auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(exactly_equal(Matrix(a * *inv), Matrix::Identity(2, 2)));

  Matrix singular(2, 2);
  singular << Scalar(1), Scalar(2), Scalar(2), Scalar(4);
  CHECK_FALSE(inverse(singular).has_value());

  Vector rhs(2);
  rhs << Scalar(1), Scalar(3);
  CHECK_FALSE(solve(singular, rhs).has_value());

  // Nilpotent Jordan block: minimal polynomial t^2.
  Matrix j(2, 2);
  j << Scalar(0), Scalar(1), Scalar(0), Scalar(0);
  const Polynomial p = minimal_polynomial(j);
  CHECK(p.degree() == 2);
  CHECK(is_power_of_t(p));
  CHECK_FALSE(is_squarefree(p));

  Matrix diag(2, 2);
  diag << Scalar(1), Scalar(0), Scalar(0), Scalar(0);
  CHECK(is_squarefree(minimal_polynomial(diag)));
  CHECK_FALSE(is_power_of_t(minimal_polynomial(diag)));
}
