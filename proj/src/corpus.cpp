#include "valgebra/corpus.hpp"

namespace valgebra {

MultTable matrix_units_algebra(std::size_t m) {
	MultTable t(m * m);
	auto unit = [m](std::size_t i, std::size_t j) { return i * m + j; };
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j)
			for (std::size_t k = 0; k < m; ++k)
				for (std::size_t l = 0; l < m; ++l)
					if (j == k)
						t.at(unit(i, j), unit(k, l), unit(i, l)) = 1;
	return t;
}

MultTable truncated_polynomial_algebra(std::size_t n) {
	MultTable t(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			if (i + j < n)
				t.at(i, j, i + j) = 1;
	return t;
}

MultTable family2d_mu0(const Rational& a, const Rational& b) {
	MultTable t(2);
	t.at(0, 0, 0) = Rational(2) * b;
	t.at(0, 1, 0) = a;
	t.at(0, 1, 1) = b;
	t.at(1, 0, 0) = a;
	t.at(1, 0, 1) = b;
	t.at(1, 1, 1) = Rational(2) * a;
	return t;
}

MultTable family2d_psi1() {
	MultTable t(2);
	t.at(0, 1, 1) = 1;
	t.at(1, 0, 1) = -1;
	return t;
}

MultTable family2d_depolarized(const Rational& a, const Rational& b) {
	return family2d_mu0(a, b) + family2d_psi1();
}

MultTable leibniz2d() {
	MultTable t(2);
	t.at(0, 0, 1) = 1;
	return t;
}

MultTable cross_product_algebra() {
	MultTable t(3);
	t.at(0, 1, 2) = 1;
	t.at(1, 0, 2) = -1;
	t.at(1, 2, 0) = 1;
	t.at(2, 1, 0) = -1;
	t.at(2, 0, 1) = 1;
	t.at(0, 2, 1) = -1;
	return t;
}

MultTable derivation_product(std::size_t d) {
	MultTable t(d);
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = 1; j < d; ++j)
			if (i + j - 1 < d)
				t.at(i, j, i + j - 1) = Rational(static_cast<long>(j));
	return t;
}

MultTable lie_admissible_sample2d() {
	MultTable t(2);
	t.at(0, 0, 0) = 1;
	t.at(0, 1, 1) = 1;
	t.at(1, 0, 0) = 1;
	t.at(1, 0, 1) = -1;
	return t;
}

}  // namespace valgebra
