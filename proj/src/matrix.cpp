#include "valgebra/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace valgebra {

QMatrix QMatrix::identity(std::size_t n) {
	QMatrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m.at(i, i) = 1;
	return m;
}

RrefResult rref(QMatrix m) {
	std::vector<std::size_t> pivots;
	std::size_t r = 0;
	for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
		std::size_t p = r;
		while (p < m.rows && m.at(p, c).is_zero())
			++p;
		if (p == m.rows)
			continue;
		if (p != r)
			for (std::size_t j = 0; j < m.cols; ++j)
				std::swap(m.at(p, j), m.at(r, j));
		Rational inv = m.at(r, c).inverse();
		for (std::size_t j = c; j < m.cols; ++j)
			m.at(r, j) *= inv;
		for (std::size_t i = 0; i < m.rows; ++i) {
			if (i == r || m.at(i, c).is_zero())
				continue;
			Rational f = m.at(i, c);
			for (std::size_t j = c; j < m.cols; ++j)
				m.at(i, j) -= f * m.at(r, j);
		}
		pivots.push_back(c);
		++r;
	}
	return {std::move(m), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) {
	return rref(m).pivots.size();
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
	RrefResult r = rref(m);
	std::vector<bool> is_pivot(m.cols, false);
	for (std::size_t c : r.pivots)
		is_pivot[c] = true;
	std::vector<QVector> basis;
	for (std::size_t f = 0; f < m.cols; ++f) {
		if (is_pivot[f])
			continue;
		QVector v(m.cols);
		v[f] = 1;
		for (std::size_t t = 0; t < r.pivots.size(); ++t)
			v[r.pivots[t]] = -r.m.at(t, f);
		basis.push_back(std::move(v));
	}
	return basis;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
	if (b.size() != m.rows)
		throw std::invalid_argument("solve: right-hand side length mismatch");
	QMatrix aug(m.rows, m.cols + 1);
	for (std::size_t i = 0; i < m.rows; ++i) {
		for (std::size_t j = 0; j < m.cols; ++j)
			aug.at(i, j) = m.at(i, j);
		aug.at(i, m.cols) = b[i];
	}
	RrefResult r = rref(std::move(aug));
	for (std::size_t c : r.pivots)
		if (c == m.cols)
			return std::nullopt;
	QVector x(m.cols);
	for (std::size_t t = 0; t < r.pivots.size(); ++t)
		x[r.pivots[t]] = r.m.at(t, m.cols);
	return x;
}

bool span_contains(const std::vector<QVector>& generators, const QVector& u) {
	for (const QVector& g : generators)
		if (g.size() != u.size())
			throw std::invalid_argument("span_contains: vector length mismatch");
	QMatrix gens = matrix_from_rows(generators);
	if (generators.empty()) {
		gens.rows = 0;
		gens.cols = u.size();
	}
	std::vector<QVector> extended = generators;
	extended.push_back(u);
	return rank(gens) == rank(matrix_from_rows(extended));
}

QVector mat_vec(const QMatrix& m, const QVector& x) {
	if (x.size() != m.cols)
		throw std::invalid_argument("mat_vec: vector length mismatch");
	QVector y(m.rows);
	for (std::size_t i = 0; i < m.rows; ++i)
		for (std::size_t j = 0; j < m.cols; ++j)
			y[i] += m.at(i, j) * x[j];
	return y;
}

QMatrix matrix_from_columns(const std::vector<QVector>& columns) {
	if (columns.empty())
		return QMatrix();
	QMatrix m(columns.front().size(), columns.size());
	for (std::size_t j = 0; j < columns.size(); ++j) {
		if (columns[j].size() != m.rows)
			throw std::invalid_argument("matrix_from_columns: ragged input");
		for (std::size_t i = 0; i < m.rows; ++i)
			m.at(i, j) = columns[j][i];
	}
	return m;
}

QMatrix matrix_from_rows(const std::vector<QVector>& rows) {
	if (rows.empty())
		return QMatrix();
	QMatrix m(rows.size(), rows.front().size());
	for (std::size_t i = 0; i < rows.size(); ++i) {
		if (rows[i].size() != m.cols)
			throw std::invalid_argument("matrix_from_rows: ragged input");
		for (std::size_t j = 0; j < m.cols; ++j)
			m.at(i, j) = rows[i][j];
	}
	return m;
}

bool is_zero_vector(const QVector& v) {
	for (const Rational& x : v)
		if (!x.is_zero())
			return false;
	return true;
}

QVector scaled(const QVector& v, const Rational& s) {
	QVector out(v.size());
	for (std::size_t i = 0; i < v.size(); ++i)
		out[i] = v[i] * s;
	return out;
}

}  // namespace valgebra
