#include "grassmann/normal.hpp"

#include "grassmann/errors.hpp"
#include "grassmann/subspace.hpp"

namespace grassmann {

bool is_normal(const Element& a) {
  const int n = a.n();
  Subspace left_multiples(n, a.field());
  Subspace right_multiples(n, a.field());
  for (Mask m = 0;; ++m) {
    left_multiples.insert(left_multiply(m, a));
    right_multiples.insert(right_multiply(a, m));
    if (m == full_mask(n)) break;
  }
  for (int i = 1; i <= n; ++i) {
    const Mask xi = generator_mask(i);
    if (!left_multiples.contains(right_multiply(a, xi))) return false;
    if (!right_multiples.contains(left_multiply(xi, a))) return false;
  }
  return true;
}

int stratum(const Element& a) {
  if (a.is_zero()) throw DomainError("stratum of the zero element is undefined");
  if (!is_normal(a)) throw DomainError("stratum needs a normal element");
  return a.lowest_degree();
}

std::string to_string(OrbitTag tag) {
  return tag == OrbitTag::X1 ? "X1" : "X1_PLUS_THETA_TAIL";
}

namespace {

// x_2 ... x_n.
Mask theta_tail(int n) { return full_mask(n) & ~generator_mask(1); }

Element theta_tail_element(int n, Field field) { return Element::monomial(n, field, theta_tail(n)); }

// Steps of the reduction a -> representative. The witness is
// sigma_A o gamma o omega_{1+alpha} o sigma_S^{-1}, with sigma_S^{-1}
// scaling x_2 by lambda.
struct Reduction {
  Matrix basis;
  std::vector<Element> gamma_b;
  Element alpha;
  Scalar lambda;
  std::optional<OrbitTag> tag;
};

Matrix completed_basis(const Element& linear, int n) {
  Matrix rows(1, n);
  for (int j = 0; j < n; ++j) rows(0, j) = linear.coeff(generator_mask(j + 1));
  for (int j = 0; j < n && rows.rows() < n; ++j) {
    Matrix candidate(rows.rows() + 1, n);
    candidate.topRows(rows.rows()) = rows;
    candidate.row(rows.rows()).setZero();
    candidate(rows.rows(), j) = Scalar(1);
    if (rank(candidate) == candidate.rows()) rows = std::move(candidate);
  }
  return rows;
}

std::optional<Reduction> reduce(const Element& input) {
  const int n = input.n();
  const Field field = input.field();
  const Element linear = grade_component(input, 1);
  if (linear.is_zero() || !input.constant_term().is_zero()) return std::nullopt;

  Reduction r{completed_basis(linear, n), {}, Element(n, field), Scalar(1).in(field), std::nullopt};
  const auto inv = inverse(r.basis);
  Element a = apply_automorphism(sigma_matrix(*inv, field), input);

  r.gamma_b.assign(static_cast<std::size_t>(n), Element(n, field));
  r.gamma_b[0] = odd_part(a) - grade_component(a, 1);
  a = apply_automorphism(gamma_inverse(r.gamma_b), a);

  const Element e = even_part(a);
  r.alpha = Scalar::rational(-1, 2) * skew_partial(e, 1);
  a = apply_automorphism(omega(-r.alpha), a);

  const Element beta = a - Element::generator(n, field, 1);
  if (beta.is_zero()) {
    r.tag = OrbitTag::X1;
  } else if (n % 2 == 1 && beta.size() == 1 && beta.terms().front().mask == theta_tail(n)) {
    r.lambda = beta.terms().front().coeff;
    r.tag = OrbitTag::X1PlusThetaTail;
  }
  return r;
}

Automorphism witness_of(const Reduction& r, int n, Field field) {
  Matrix scaling = Matrix::Identity(n, n);
  if (n >= 2) scaling(1, 1) = r.lambda;
  return compose(sigma_matrix(r.basis, field),
                 compose(gamma(r.gamma_b), compose(omega(r.alpha), sigma_matrix(scaling, field))));
}

}  // namespace

Element orbit_representative(OrbitTag tag, int n, Field field) {
  Element out = Element::generator(n, field, 1);
  if (tag == OrbitTag::X1PlusThetaTail) {
    if (n % 2 == 0 || n < 3) throw DomainError("x_1 + x_2...x_n is a separate orbit only for odd n >= 3");
    out += theta_tail_element(n, field);
  }
  return out;
}

std::optional<OrbitTag> reduce_n1(const Element& a) {
  const auto r = reduce(a);
  if (!r) return std::nullopt;
  return r->tag;
}

OrbitReport classify_n1(const Element& a) {
  const int n = a.n();
  const Field field = a.field();
  if (a.is_zero() || !a.constant_term().is_zero() || a.lowest_degree() != 1) {
    throw DomainError("classify_n1 needs an element with zero constant term and nonzero linear part");
  }
  if (!is_normal(a)) throw DomainError("classify_n1 needs a normal element");
  const auto r = reduce(a);
  if (!r || !r->tag) throw Error("internal: a normal element did not reduce to a representative");

  OrbitReport report{1, *r->tag, witness_of(*r, n, field), orbit_representative(*r->tag, n, field)};
  if (!(apply_automorphism(report.witness, report.representative) == a)) {
    throw Error("internal: orbit witness does not reproduce the input");
  }
  return report;
}

bool orbits_distinct_check(int n, Field field) {
  if (n < 3 || n % 2 == 0) throw DomainError("orbits_distinct_check needs odd n >= 3");
  const auto first = classify_n1(orbit_representative(OrbitTag::X1, n, field)).orbit;
  const auto second = classify_n1(orbit_representative(OrbitTag::X1PlusThetaTail, n, field)).orbit;
  return first != second;
}

namespace {

bool fixes_first_generator(const Factorization& f) {
  for (Eigen::Index j = 0; j < f.A.cols(); ++j) {
    if (!(f.A(0, j) == Scalar(j == 0 ? 1 : 0))) return false;
  }
  return f.b.front().is_zero();
}

// Odd, and every term contains x_1.
bool in_x1_times_even_tail(const Element& e) { return e.is_odd() && h_op(1, e) == e; }

}  // namespace

bool in_stabilizer_x1(const Automorphism& s) {
  const Factorization f = factor_automorphism(s);
  const bool via_factors = fixes_first_generator(f) && h_op(1, f.a) == f.a;
  const Element x1 = Element::generator(s.n(), s.field(), 1);
  if (via_factors != (apply_automorphism(s, x1) == x1)) {
    throw Error("internal: stabilizer criterion disagrees with s(x_1) = x_1");
  }
  return via_factors;
}

bool in_stabilizer_y(const Automorphism& s) {
  const int n = s.n();
  const Field field = s.field();
  if (n < 3 || n % 2 == 0) throw DomainError("the stabilizer of x_1 + x_2...x_n needs odd n >= 3");
  const Factorization f = factor_automorphism(s);
  bool via_factors = fixes_first_generator(f);
  if (via_factors) {
    const Element tail = theta_tail_element(n, field);
    const Element moved =
        apply_automorphism(compose(gamma(f.b), sigma_matrix(f.A, field)), tail);
    via_factors = moved - h_op(1, moved) == tail &&
                  in_x1_times_even_tail(f.a - Scalar::rational(1, 2) * skew_partial(moved, 1));
  }
  const Element y = orbit_representative(OrbitTag::X1PlusThetaTail, n, field);
  if (via_factors != (apply_automorphism(s, y) == y)) {
    throw Error("internal: stabilizer criterion disagrees with s(y) = y");
  }
  return via_factors;
}

UnitReport classify_unit(const Element& u) {
  const Scalar lambda = u.constant_term();
  if (lambda.is_zero()) throw DomainError("not a unit: zero constant term");
  const Element v = lambda.inverse() * u - Element::constant(u.n(), u.field(), Scalar(1));
  if (v.is_zero() || v.lowest_degree() != 1 || !is_normal(v)) {
    throw DomainError("not of the form lambda(1 + v) with v normal of stratum 1");
  }
  return UnitReport{lambda, classify_n1(v)};
}

}  // namespace grassmann
