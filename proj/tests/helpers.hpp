#pragma once

#include "valgebra/algebra.hpp"

#include <random>

namespace valgebra::testing {

inline std::mt19937& rng() {
	static std::mt19937 gen(20240811u);
	return gen;
}

inline Rational rand_rational(int num_bound = 3, int den_bound = 3) {
	std::uniform_int_distribution<int> num(-num_bound, num_bound);
	std::uniform_int_distribution<int> den(1, den_bound);
	return Rational(num(rng()), den(rng()));
}

inline QVector rand_vector(std::size_t n) {
	QVector v(n);
	for (Rational& x : v)
		x = rand_rational();
	return v;
}

inline GroupVector rand_group_vector() {
	GroupVector v;
	for (Rational& x : v.c)
		x = rand_rational();
	return v;
}

inline MultTable rand_table(std::size_t dim) {
	MultTable t(dim);
	for (Rational& x : t.c)
		x = rand_rational();
	return t;
}

inline MultTable rand_commutative_table(std::size_t dim) {
	MultTable t(dim);
	for (std::size_t i = 0; i < dim; ++i)
		for (std::size_t j = i; j < dim; ++j)
			for (std::size_t k = 0; k < dim; ++k) {
				Rational x = rand_rational();
				t.at(i, j, k) = x;
				t.at(j, i, k) = x;
			}
	return t;
}

inline QMatrix rand_matrix(std::size_t rows, std::size_t cols) {
	QMatrix m(rows, cols);
	for (Rational& x : m.a)
		x = rand_rational();
	return m;
}

// Independent evaluation oracle for a trilinear identity: the tensor is
// trusted only if it agrees with direct nested evaluation on vectors.
inline QVector oracle_associator_eval(const MultTable& mu, const QVector& x,
                                      const QVector& y, const QVector& z) {
	QVector left = mu.apply(x, mu.apply(y, z));
	QVector right = mu.apply(mu.apply(x, y), z);
	for (std::size_t i = 0; i < left.size(); ++i)
		left[i] -= right[i];
	return left;
}

}  // namespace valgebra::testing
