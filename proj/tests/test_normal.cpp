#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "grassmann/errors.hpp"
#include "grassmann/normal.hpp"
#include "grassmann/random.hpp"
#include "oracles.hpp"

using namespace grassmann;
using fixtures::el;
using fixtures::els;
using fixtures::kF3;
using fixtures::kF5;
using fixtures::kQ;

namespace {

Matrix diagonal(std::initializer_list<int> entries) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  Matrix m = Matrix::Zero(n, n);
  Eigen::Index i = 0;
  for (int e : entries) {
    m(i, i) = Scalar(e);
    ++i;
  }
  return m;
}

// Every element of F_3-Lambda_n with a given coefficient vector index.
Element enumerate(std::uint64_t index, int n, Field f) {
  std::vector<Term> terms;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    const auto digit = static_cast<long>(index % f.modulus());
    index /= f.modulus();
    if (digit != 0) terms.push_back(Term{m, Scalar::from_integer(digit, f)});
  }
  return Element::from_terms(n, f, std::move(terms));
}

}  // namespace

TEST_CASE("normal elements", "[normal]") {
  Rng rng(61);
  for (int n = 1; n <= 5; ++n) {
    CHECK(is_normal(random_element(rng, n, kF5, {0, n, 0, 0.5})));
    CHECK(is_normal(random_element(rng, n, kF5, {0, n, 1, 0.5})));
  }
  CHECK(is_normal(el("x1 + x2*x3", 3)));
  CHECK_FALSE(is_normal(el("x1 + x2*x3", 4)));
  CHECK(is_normal(Element(3, kQ)));
}

TEST_CASE("normality agrees with the span oracle", "[normal]") {
  for (std::uint64_t k = 0; k < 81; ++k) {
    const Element a = enumerate(k, 2, kF3);
    CHECK(is_normal(a) == oracle::normal_by_spans(a));
  }
  Rng rng(62);
  for (int n = 3; n <= 4; ++n) {
    for (int round = 0; round < 200; ++round) {
      const Element a = random_element(rng, n, kF3, {0, n, -1, 0.4});
      CHECK(is_normal(a) == oracle::normal_by_spans(a));
    }
  }
}

TEST_CASE("strata", "[normal]") {
  CHECK(stratum(el("1 + x1", 2)) == 0);
  CHECK(stratum(el("x1 + x1*x2", 2)) == 1);
  for (int n = 1; n <= 5; ++n) CHECK(stratum(Element::top(n, kQ)) == n);
  CHECK_THROWS_AS(stratum(Element(2, kQ)), DomainError);
  CHECK_THROWS_AS(stratum(el("x1 + x2*x3", 4)), DomainError);

  Rng rng(63);
  for (int n = 2; n <= 5; ++n) {
    for (int round = 0; round < 10; ++round) {
      const int parity = round % 2;
      Element a = random_element(rng, n, kF5, {1, n, parity, 0.4});
      if (a.is_zero()) continue;
      const Automorphism s = random_automorphism(rng, n, kF5);
      CHECK(stratum(apply_automorphism(s, a)) == stratum(a));
    }
  }
}

TEST_CASE("orbit classification: worked examples", "[normal]") {
  const OrbitReport r = classify_n1(el("x1 + x1*x2", 2));
  CHECK(r.stratum == 1);
  CHECK(r.orbit == OrbitTag::X1);
  CHECK(r.representative == el("x1", 2));
  CHECK(r.witness.images() == els({"x1 + x1*x2", "x2"}, 2));
  CHECK(r.witness == omega(el("-1/2*x2", 2)));

  for (Field f : {kQ, kF5}) {
    const OrbitReport t = classify_n1(el("x1 + x2*x3", 3, f));
    CHECK(t.orbit == OrbitTag::X1PlusThetaTail);
    CHECK(t.witness == Automorphism::identity(3, f));
  }
  CHECK(to_string(OrbitTag::X1) == "X1");
  CHECK(to_string(OrbitTag::X1PlusThetaTail) == "X1_PLUS_THETA_TAIL");

  CHECK_THROWS_AS(classify_n1(el("x1 + x2*x3", 4)), DomainError);
  CHECK_THROWS_AS(classify_n1(el("x1*x2", 3)), DomainError);
  CHECK_THROWS_AS(classify_n1(el("1 + x1", 3)), DomainError);
  CHECK_THROWS_AS(orbit_representative(OrbitTag::X1PlusThetaTail, 4, kQ), DomainError);
}

TEST_CASE("orbit classification of random orbit points", "[normal]") {
  Rng rng(64);
  for (Field f : {kQ, kF3, kF5}) {
    for (int n = 1; n <= 5; ++n) {
      std::vector<OrbitTag> tags{OrbitTag::X1};
      if (n % 2 == 1 && n >= 3) tags.push_back(OrbitTag::X1PlusThetaTail);
      for (OrbitTag tag : tags) {
        const Element rep = orbit_representative(tag, n, f);
        for (int round = 0; round < 10; ++round) {
          const Element a = apply_automorphism(random_automorphism(rng, n, f), rep);
          const OrbitReport r = classify_n1(a);
          CHECK(r.orbit == tag);
          CHECK(apply_automorphism(r.witness, r.representative) == a);
          CHECK(reduce_n1(a) == tag);
        }
      }
    }
  }
}

TEST_CASE("the two orbits are distinct for odd n", "[normal]") {
  CHECK(orbits_distinct_check(3, kF3));
  CHECK(orbits_distinct_check(5, kF5));
  CHECK(orbits_distinct_check(3, kQ));
  CHECK_THROWS_AS(orbits_distinct_check(4, kF5), DomainError);

  // For even n every stratum-1 normal element lies in the orbit of x_1.
  Rng rng(65);
  for (int n = 2; n <= 4; n += 2) {
    for (int round = 0; round < 100; ++round) {
      const Element a = random_element(rng, n, kF3, {1, n, -1, 0.5});
      if (a.is_zero() || a.lowest_degree() != 1 || !is_normal(a)) continue;
      CHECK(classify_n1(a).orbit == OrbitTag::X1);
    }
  }
}

TEST_CASE("stabilizer membership", "[normal]") {
  CHECK(in_stabilizer_x1(Automorphism::identity(3, kQ)));
  CHECK(in_stabilizer_y(Automorphism::identity(3, kQ)));
  CHECK(in_stabilizer_x1(omega(el("x1", 3))));

  Matrix swap = Matrix::Zero(3, 3);
  swap(0, 1) = Scalar(1);
  swap(1, 0) = Scalar(1);
  swap(2, 2) = Scalar(1);
  CHECK_FALSE(in_stabilizer_x1(sigma_matrix(swap, kQ)));
  CHECK_FALSE(in_stabilizer_y(sigma_matrix(swap, kQ)));

  // x1*x2*x3 commutes with x_1 and with x_2...x_5; 2*3 = 1 in F_5.
  CHECK(in_stabilizer_y(omega(el("x1*x2*x3", 5, kF5))));
  CHECK(in_stabilizer_y(sigma_matrix(diagonal({1, 2, 3, 1, 1}), kF5)));
  CHECK_FALSE(in_stabilizer_y(sigma_matrix(diagonal({1, 2, 1, 1, 1}), kF5)));
  CHECK(in_stabilizer_x1(sigma_matrix(diagonal({1, 2, 1, 1, 1}), kF5)));
  CHECK_THROWS_AS(in_stabilizer_y(Automorphism::identity(4, kQ)), DomainError);

  // Random automorphisms, and products built to fix x_1: each call
  // cross-checks the factor criterion against the direct fixed-point test.
  Rng rng(66);
  int x1_hits = 0;
  int y_hits = 0;
  for (Field f : {kF3, kF5}) {
    for (int n = 3; n <= 5; n += 2) {
      for (int round = 0; round < 30; ++round) {
        Automorphism s = random_automorphism(rng, n, f);
        if (round % 2 == 0) {
          Matrix a = random_invertible_matrix(rng, n, f);
          a.row(0).setZero();
          a(0, 0) = Scalar(1);
          if (rank(a) != n) continue;
          std::vector<Element> b;
          b.push_back(Element(n, f));
          for (int i = 1; i < n; ++i) b.push_back(random_element(rng, n, f, {3, n, 1, 0.3}));
          const Element alpha = h_op(1, random_element(rng, n, f, {1, n - 1, 1, 0.5}));
          s = compose(omega(alpha), compose(gamma(b), sigma_matrix(a, f)));
        }
        if (round % 5 == 1) s = omega(h_op(1, random_element(rng, n, f, {3, n - 1, 1, 0.5})));
        x1_hits += in_stabilizer_x1(s) ? 1 : 0;
        y_hits += in_stabilizer_y(s) ? 1 : 0;
      }
    }
  }
  CHECK(x1_hits > 0);
  CHECK(y_hits > 0);
}

TEST_CASE("unit classification", "[normal]") {
  const UnitReport u = classify_unit(el("2 + 2*x1", 3));
  CHECK(u.lambda == Scalar(2));
  CHECK(u.report.orbit == OrbitTag::X1);

  const UnitReport v = classify_unit(el("1 + x1 + x2*x3", 3, kF5));
  CHECK(v.lambda.is_one());
  CHECK(v.report.orbit == OrbitTag::X1PlusThetaTail);

  CHECK_THROWS_AS(classify_unit(el("3", 3)), DomainError);
  CHECK_THROWS_AS(classify_unit(el("x1", 3)), DomainError);
}
