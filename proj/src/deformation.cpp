#include "valgebra/deformation.hpp"

#include <stdexcept>

namespace valgebra {

Jet make_jet(std::vector<MultTable> terms) {
	if (terms.empty())
		throw std::invalid_argument("make_jet: a jet needs at least the base term");
	for (const MultTable& t : terms)
		if (t.dim != terms.front().dim)
			throw std::invalid_argument("make_jet: all terms must share one dimension");
	return Jet{std::move(terms)};
}

namespace {

/// phi1(x, phi2(y,z)) as a tensor.
TriTensor nest_left(const MultTable& phi1, const MultTable& phi2) {
	std::size_t n = phi1.dim;
	TriTensor t(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				for (std::size_t m = 0; m < n; ++m) {
					if (phi2.at(j, k, m).is_zero())
						continue;
					for (std::size_t l = 0; l < n; ++l)
						t.at(i, j, k, l) += phi2.at(j, k, m) * phi1.at(i, m, l);
				}
	return t;
}

/// phi1(phi2(x,y), z) as a tensor.
TriTensor nest_right(const MultTable& phi1, const MultTable& phi2) {
	std::size_t n = phi1.dim;
	TriTensor t(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				for (std::size_t m = 0; m < n; ++m) {
					if (phi2.at(i, j, m).is_zero())
						continue;
					for (std::size_t l = 0; l < n; ++l)
						t.at(i, j, k, l) += phi2.at(i, j, m) * phi1.at(m, k, l);
				}
	return t;
}

void check_dims(const MultTable& a, const MultTable& b, const char* what) {
	if (a.dim != b.dim)
		throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

TriTensor bullet(const MultTable& phi1, const MultTable& phi2, const GroupVector& v) {
	check_dims(phi1, phi2, "bullet");
	return act(nest_left(phi1, phi2) - nest_right(phi1, phi2), v);
}

TriTensor bullet_left(const MultTable& phi1, const MultTable& phi2, const GroupVector& v) {
	check_dims(phi1, phi2, "bullet_left");
	return act(nest_left(phi1, phi2), v);
}

TriTensor bullet_right(const MultTable& phi1, const MultTable& phi2, const GroupVector& w) {
	check_dims(phi1, phi2, "bullet_right");
	return act(nest_right(phi1, phi2), w);
}

TriTensor delta2(const GroupVector& v, const MultTable& m0, const MultTable& phi) {
	return bullet(m0, phi, v) + bullet(phi, m0, v);
}

TriTensor hochschild_delta2(const MultTable& m0, const MultTable& phi) {
	check_dims(m0, phi, "hochschild_delta2");
	std::size_t n = m0.dim;
	TriTensor t(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				for (std::size_t m = 0; m < n; ++m)
					for (std::size_t l = 0; l < n; ++l) {
						// x phi(y,z) - phi(xy,z) + phi(x,yz) - phi(x,y) z
						t.at(i, j, k, l) += phi.at(j, k, m) * m0.at(i, m, l);
						t.at(i, j, k, l) -= m0.at(i, j, m) * phi.at(m, k, l);
						t.at(i, j, k, l) += m0.at(j, k, m) * phi.at(i, m, l);
						t.at(i, j, k, l) -= phi.at(i, j, m) * m0.at(m, k, l);
					}
	return t;
}

std::vector<IdentityReport> verify_jet(const Jet& jet, const GroupVector& v) {
	std::vector<IdentityReport> out;
	for (std::size_t k = 0; k <= jet.order(); ++k) {
		TriTensor sum(jet.dim());
		for (std::size_t i = 0; i <= k; ++i)
			sum += bullet(jet.terms[i], jet.terms[k - i], v);
		out.push_back(report_is_zero("order " + std::to_string(k), sum));
	}
	return out;
}

std::vector<IdentityReport> verify_jet_vw(const Jet& jet, const GroupVector& v,
                                          const GroupVector& w) {
	std::vector<IdentityReport> out;
	for (std::size_t k = 0; k <= jet.order(); ++k) {
		TriTensor sum(jet.dim());
		for (std::size_t i = 0; i <= k; ++i) {
			sum += bullet_left(jet.terms[i], jet.terms[k - i], v);
			sum -= bullet_right(jet.terms[i], jet.terms[k - i], w);
		}
		out.push_back(report_is_zero("order " + std::to_string(k), sum));
	}
	return out;
}

MultTable table_from_coefficients(std::size_t dim, const QVector& coeffs) {
	if (coeffs.size() != dim * dim * dim)
		throw std::invalid_argument("table_from_coefficients: length mismatch");
	MultTable t(dim);
	t.c = coeffs;
	return t;
}

QVector table_coefficients(const MultTable& t) {
	return t.c;
}

std::vector<MultTable> delta2_kernel(const GroupVector& v, const MultTable& m0) {
	std::size_t n = m0.dim;
	std::size_t unknowns = n * n * n;
	std::size_t equations = n * n * n * n;
	QMatrix system(equations, unknowns);
	for (std::size_t col = 0; col < unknowns; ++col) {
		QVector e(unknowns);
		e[col] = 1;
		TriTensor image = delta2(v, m0, table_from_coefficients(n, e));
		for (std::size_t row = 0; row < equations; ++row)
			system.at(row, col) = image.d[row];
	}
	std::vector<MultTable> basis;
	for (QVector& k : kernel_basis(system))
		basis.push_back(table_from_coefficients(n, k));
	return basis;
}

std::vector<GroupVector> lemma1_solve(const MultTable& m0) {
	if (m0.is_zero())
		throw std::invalid_argument("lemma1_solve: base multiplication is zero");
	if (!m0.is_commutative())
		throw std::invalid_argument("lemma1_solve: base multiplication is not commutative");
	std::size_t n = m0.dim;
	std::vector<QVector> rows;
	QVector e(n * n * n);
	for (std::size_t p = 0; p < n * n * n; ++p) {
		e.assign(n * n * n, Rational(0));
		e[p] = 1;
		TriTensor h = hochschild_delta2(m0, table_from_coefficients(n, e));
		std::array<TriTensor, 6> twisted;
		for (int s = 0; s < 6; ++s)
			twisted[static_cast<std::size_t>(s)] = act(h, s);
		for (std::size_t entry = 0; entry < h.d.size(); ++entry) {
			QVector row(6);
			bool nontrivial = false;
			for (std::size_t s = 0; s < 6; ++s) {
				row[s] = twisted[s].d[entry];
				nontrivial = nontrivial || !row[s].is_zero();
			}
			if (nontrivial)
				rows.push_back(std::move(row));
		}
	}
	QMatrix system = matrix_from_rows(rows);
	if (rows.empty()) {
		system.rows = 0;
		system.cols = 6;
	}
	std::vector<GroupVector> basis;
	for (const QVector& k : kernel_basis(system))
		basis.push_back(group_vector_from(k));
	return basis;
}

}  // namespace valgebra
