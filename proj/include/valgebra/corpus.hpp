#pragma once

#include "valgebra/algebra.hpp"

namespace valgebra {

/// m x m matrix units E_ij with E_ij E_kl = [j=k] E_il; dimension m^2.
/// Basis order: E_11, E_12, ..., E_mm row-major.
MultTable matrix_units_algebra(std::size_t m);

/// Truncated polynomials on basis 1, x, ..., x^{n-1}: e_i e_j = e_{i+j}
/// when i+j < n, else 0. Commutative, associative, unital.
MultTable truncated_polynomial_algebra(std::size_t n);

/// The two-parameter commutative product on a 2-dimensional space:
/// e1e1 = 2b e1, e1e2 = e2e1 = a e1 + b e2, e2e2 = 2a e2.
MultTable family2d_mu0(const Rational& a, const Rational& b);

/// The bracket psi(e1,e2) = e2 on the same space.
MultTable family2d_psi1();

/// family2d_mu0 + family2d_psi1.
MultTable family2d_depolarized(const Rational& a, const Rational& b);

/// Dimension 2, single product e1e1 = e2. Every nested product vanishes.
MultTable leibniz2d();

/// Cross-product bracket on dimension 3: e1e2 = e3, e2e3 = e1, e3e1 = e2,
/// extended skew.
MultTable cross_product_algebra();

/// phi(f,g) = f·g' on polynomials of degree < d (monomial basis x^0..x^{d-1}),
/// products truncated above the cutoff. Identities are only meaningful on
/// triples whose total degree stays below d.
MultTable derivation_product(std::size_t d);

/// A noncommutative dimension-2 table (Lie-admissible, as every
/// 2-dimensional table is): e1e1 = e1, e1e2 = e2, e2e1 = e1 - e2.
MultTable lie_admissible_sample2d();

}  // namespace valgebra
