#pragma once

#include "valgebra/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace valgebra {

using QVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
struct QMatrix {
	std::size_t rows = 0;
	std::size_t cols = 0;
	std::vector<Rational> a;

	QMatrix() = default;
	QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

	Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
	const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

	static QMatrix identity(std::size_t n);

	friend bool operator==(const QMatrix&, const QMatrix&) = default;
};

struct RrefResult {
	QMatrix m;
	std::vector<std::size_t> pivots;  // pivot column of each pivot row, in order
};

/// Reduced row echelon form, exact Gauss-Jordan. Pivot choice is the first
/// nonzero entry in column order, so the result is the unique RREF.
RrefResult rref(QMatrix m);

std::size_t rank(const QMatrix& m);

/// Basis of the right null space, one vector per free column in column
/// order, with the free variable set to 1.
std::vector<QVector> kernel_basis(const QMatrix& m);

/// Some x with m·x = b, or nullopt when b is outside the column span.
/// Free variables are set to 0, so the result is deterministic.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

/// True iff u lies in the linear span of the generators.
bool span_contains(const std::vector<QVector>& generators, const QVector& u);

QVector mat_vec(const QMatrix& m, const QVector& x);
QMatrix matrix_from_columns(const std::vector<QVector>& columns);
QMatrix matrix_from_rows(const std::vector<QVector>& rows);
bool is_zero_vector(const QVector& v);
QVector scaled(const QVector& v, const Rational& s);

}  // namespace valgebra
