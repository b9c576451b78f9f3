#pragma once

#include <cstdint>
#include <random>

#include "grassmann/automorphisms.hpp"
#include "grassmann/derivations.hpp"
#include "grassmann/element.hpp"
#include "grassmann/skew_derivations.hpp"

namespace grassmann {

/// Draws use only raw engine output and integer arithmetic, so a seed gives
/// the same values with every standard library.
using Rng = std::mt19937_64;

/// Uniform in [0, bound).
std::uint64_t draw_below(Rng& rng, std::uint64_t bound);

/// Small coefficients: integers in [-3, 3] over F_p; over Q also halves
/// and thirds.
Scalar random_scalar(Rng& rng, Field field);
Scalar random_nonzero_scalar(Rng& rng, Field field);

/// Each monomial of degree in [min_degree, max_degree] and of the requested
/// parity (0 even, 1 odd, -1 any) is present with probability `density`.
struct ElementShape {
  int min_degree = 0;
  int max_degree = 16;
  int parity = -1;
  double density = 0.5;
};

Element random_element(Rng& rng, int n, Field field, const ElementShape& shape = {});

Matrix random_invertible_matrix(Rng& rng, int n, Field field);

/// omega_{1+a} o gamma_b o sigma_A with random admissible factors.
Automorphism random_automorphism(Rng& rng, int n, Field field);

/// sum_i u_i d_i - (1/2) ad(a) with random odd u_i and odd a.
Derivation random_derivation(Rng& rng, int n, Field field);
/// sum_i u_i d_i + (1/2) sad(a) with random even u_i and even a.
SkewDerivation random_skew_derivation(Rng& rng, int n, Field field);

}  // namespace grassmann
