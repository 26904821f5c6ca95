#include "valgebra/polarization.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace valgebra {

std::size_t polar_index(PolarKind kind, int slot) {
	return static_cast<std::size_t>(kind) * 3 + static_cast<std::size_t>(slot - 1);
}

PolarTerm polar_term(std::size_t index) {
	if (index >= 12)
		throw std::invalid_argument("polar_term: index out of range");
	return PolarTerm{static_cast<PolarKind>(index / 3), static_cast<int>(index % 3) + 1};
}

std::string format_polar_term(const PolarTerm& term) {
	static const char* outer_name[4] = {"psi", "psi", "rho", "rho"};
	static const char* inner_name[4] = {"psi", "rho", "psi", "rho"};
	int b = term.slot == 1 ? 2 : 1;
	int c = term.slot == 3 ? 2 : 3;
	std::size_t k = static_cast<std::size_t>(term.kind);
	return std::string(outer_name[k]) + "(x" + std::to_string(term.slot) + ", " +
	       inner_name[k] + "(x" + std::to_string(b) + ",x" + std::to_string(c) + "))";
}

std::string format_polar_vector(const PolarVector& v) {
	std::string out;
	for (std::size_t i = 0; i < 12; ++i) {
		const Rational& x = v.c[i];
		if (x.is_zero())
			continue;
		Rational mag = x.sign() < 0 ? -x : x;
		if (out.empty())
			out += x.sign() < 0 ? "-" : "";
		else
			out += x.sign() < 0 ? " - " : " + ";
		if (!(mag == Rational(1)))
			out += mag.str() + " ";
		out += format_polar_term(polar_term(i));
	}
	if (out.empty())
		return "0 = 0";
	return out + " = 0";
}

namespace {

/// Accumulate coeff * outer(x_a, inner(x_b, x_c)) after canonicalizing:
/// sort the inner pair, flipping the sign when the inner operation is
/// skew.
void add_word(PolarVector& out, Rational coeff, bool outer_is_psi, bool inner_is_psi,
              int a, int b, int c) {
	if (b > c) {
		std::swap(b, c);
		if (inner_is_psi)
			coeff = -coeff;
	}
	PolarKind kind = outer_is_psi ? (inner_is_psi ? PolarKind::psi_psi : PolarKind::psi_rho)
	                              : (inner_is_psi ? PolarKind::rho_psi : PolarKind::rho_rho);
	out.c[polar_index(kind, a)] += coeff;
}

}  // namespace

PolarVector polar_expand(const GroupVector& v, const GroupVector& w) {
	PolarVector out;
	for (int s = 0; s < 6; ++s) {
		const Perm p = perm(s);
		int a1 = p(1), a2 = p(2), a3 = p(3);
		const Rational& vc = v.c[static_cast<std::size_t>(s)];
		if (!vc.is_zero()) {
			// A^L terms: outer(x_{sigma(1)}, inner(x_{sigma(2)}, x_{sigma(3)}))
			for (bool outer_psi : {true, false})
				for (bool inner_psi : {true, false})
					add_word(out, vc, outer_psi, inner_psi, a1, a2, a3);
		}
		const Rational& wc = w.c[static_cast<std::size_t>(s)];
		if (!wc.is_zero()) {
			// A^R terms: outer(inner(x_{sigma(1)}, x_{sigma(2)}), x_{sigma(3)});
			// moving the composite argument to the second slot costs a sign
			// for a skew outer operation.
			for (bool outer_psi : {true, false})
				for (bool inner_psi : {true, false}) {
					Rational coeff = -wc;
					if (outer_psi)
						coeff = -coeff;
					add_word(out, coeff, outer_psi, inner_psi, a3, a1, a2);
				}
		}
	}
	return out;
}

QMatrix polar_matrix_assoc() {
	QMatrix m(12, 6);
	for (int s = 0; s < 6; ++s) {
		GroupVector e = basis_group_vector(s);
		PolarVector col = polar_expand(e, e);
		for (std::size_t i = 0; i < 12; ++i)
			m.at(i, static_cast<std::size_t>(s)) = col.c[i];
	}
	return m;
}

QMatrix polar_matrix_vw_pair() {
	QMatrix m(12, 12);
	GroupVector zero;
	for (int s = 0; s < 6; ++s) {
		GroupVector e = basis_group_vector(s);
		PolarVector lcol = polar_expand(e, zero);
		PolarVector rcol = polar_expand(zero, e);
		for (std::size_t i = 0; i < 12; ++i) {
			m.at(i, static_cast<std::size_t>(s)) = lcol.c[i];
			m.at(i, static_cast<std::size_t>(s + 6)) = rcol.c[i];
		}
	}
	return m;
}

QMatrix polar_family_matrix(const GroupVector& v, const GroupVector& w) {
	QMatrix m(12, 6);
	for (int s = 0; s < 6; ++s) {
		PolarVector col = polar_expand(left_translate(s, v), left_translate(s, w));
		for (std::size_t i = 0; i < 12; ++i)
			m.at(i, static_cast<std::size_t>(s)) = col.c[i];
	}
	return m;
}

namespace {

QVector normalize_leading(const QVector& v) {
	for (const Rational& x : v)
		if (!x.is_zero())
			return scaled(v, x.inverse());
	return v;
}

std::vector<std::size_t> support_of(const QVector& v) {
	std::vector<std::size_t> s;
	for (std::size_t i = 0; i < v.size(); ++i)
		if (!v[i].is_zero())
			s.push_back(i);
	return s;
}

void subsets_of_size(std::size_t universe, std::size_t size,
                     std::vector<std::size_t>& current,
                     std::size_t start,
                     const std::function<void(const std::vector<std::size_t>&)>& emit) {
	if (current.size() == size) {
		emit(current);
		return;
	}
	for (std::size_t i = start; i < universe; ++i) {
		current.push_back(i);
		subsets_of_size(universe, size, current, i + 1, emit);
		current.pop_back();
	}
}

}  // namespace

std::vector<SparseRelation> sparse_relations(const QMatrix& m, std::size_t max_support) {
	if (max_support > m.rows)
		throw std::invalid_argument("sparse_relations: max_support exceeds row count");
	std::vector<SparseRelation> out;
	std::set<std::vector<std::string>> seen;
	auto key_of = [](const QVector& v) {
		std::vector<std::string> k;
		k.reserve(v.size());
		for (const Rational& x : v)
			k.push_back(x.str());
		return k;
	};

	for (std::size_t size = 1; size <= max_support; ++size) {
		std::vector<std::size_t> current;
		subsets_of_size(m.rows, size, current, 0, [&](const std::vector<std::size_t>& S) {
			std::vector<bool> in_S(m.rows, false);
			for (std::size_t r : S)
				in_S[r] = true;
			// Kill every coordinate outside S; the kernel of the remaining
			// rows maps onto the images supported inside S.
			std::vector<QVector> constraint;
			for (std::size_t r = 0; r < m.rows; ++r) {
				if (in_S[r])
					continue;
				QVector row(m.cols);
				for (std::size_t c = 0; c < m.cols; ++c)
					row[c] = m.at(r, c);
				constraint.push_back(std::move(row));
			}
			QMatrix cm = matrix_from_rows(constraint);
			if (constraint.empty()) {
				cm.rows = 0;
				cm.cols = m.cols;
			}
			std::vector<QVector> pre = kernel_basis(cm);
			if (pre.empty())
				return;
			std::vector<QVector> images;
			for (const QVector& x : pre) {
				QVector img = mat_vec(m, x);
				if (!is_zero_vector(img))
					images.push_back(std::move(img));
			}
			if (images.empty())
				return;
			// Canonical generators of the image subspace.
			RrefResult rr = rref(matrix_from_rows(images));
			for (std::size_t t = 0; t < rr.pivots.size(); ++t) {
				QVector img(m.rows);
				for (std::size_t c = 0; c < m.rows; ++c)
					img[c] = rr.m.at(t, c);
				if (support_of(img).size() > max_support)
					continue;
				QVector norm = normalize_leading(img);
				auto key = key_of(norm);
				if (seen.count(key))
					continue;
				seen.insert(key);
				std::optional<QVector> x = solve(m, norm);
				if (!x)
					continue;  // cannot happen: norm lies in the image
				out.push_back(SparseRelation{std::move(norm), std::move(*x)});
			}
		});
	}
	return out;
}

TriTensor instantiate_polar(const PolarVector& coeffs, const MultTable& rho,
                            const MultTable& psi) {
	if (rho.dim != psi.dim)
		throw std::invalid_argument("instantiate_polar: dimension mismatch");
	std::size_t n = rho.dim;
	TriTensor total(n);
	for (std::size_t idx = 0; idx < 12; ++idx) {
		if (coeffs.c[idx].is_zero())
			continue;
		PolarTerm term = polar_term(idx);
		bool outer_psi = term.kind == PolarKind::psi_psi || term.kind == PolarKind::psi_rho;
		bool inner_psi = term.kind == PolarKind::psi_psi || term.kind == PolarKind::rho_psi;
		const MultTable& outer = outer_psi ? psi : rho;
		const MultTable& inner = inner_psi ? psi : rho;
		int a = term.slot;
		int b = a == 1 ? 2 : 1;
		int c = a == 3 ? 2 : 3;
		TriTensor t(n);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				for (std::size_t k = 0; k < n; ++k) {
					std::size_t args[3] = {i, j, k};
					std::size_t xa = args[a - 1];
					std::size_t xb = args[b - 1];
					std::size_t xc = args[c - 1];
					for (std::size_t mm = 0; mm < n; ++mm) {
						if (inner.at(xb, xc, mm).is_zero())
							continue;
						for (std::size_t l = 0; l < n; ++l)
							t.at(i, j, k, l) += inner.at(xb, xc, mm) * outer.at(xa, mm, l);
					}
				}
		total += coeffs.c[idx] * t;
	}
	return total;
}

IdentityReport polarized_equivalence_check(const MultTable& mu, const GroupVector& v,
                                           const GroupVector& w) {
	Polarized p = polarize(mu);
	TriTensor symbolic = instantiate_polar(polar_expand(v, w), p.rho, p.psi);
	TriTensor direct = act(assoc_left(mu), v) - act(assoc_right(mu), w);
	return report_is_zero("polarized_equivalence", symbolic - direct);
}

CFamilyReport c_family_analysis(const Rational& alpha) {
	CFamilyReport rep;
	rep.alpha = alpha;
	rep.gamma_published = Rational(2, 3) * (Rational(2) * alpha - Rational(1));
	rep.v_alpha = named_vector("c_family", {{"alpha", alpha}});
	GroupVector v1 = named_vector("v1_invertible");
	rep.twisted = group_product(v1, rep.v_alpha);
	rep.expansion = polar_expand(rep.twisted, rep.twisted);
	for (int slot = 1; slot <= 3; ++slot)
		rep.psi_psi_part[static_cast<std::size_t>(slot - 1)] =
		    rep.expansion.c[polar_index(PolarKind::psi_psi, slot)];

	// Leibniz block: s·(psi_rho1 - rho_psi2 - rho_psi3).
	Rational s = rep.expansion.c[polar_index(PolarKind::psi_rho, 1)];
	rep.leibniz_scale = s;
	bool ok = rep.expansion.c[polar_index(PolarKind::psi_rho, 2)].is_zero() &&
	          rep.expansion.c[polar_index(PolarKind::psi_rho, 3)].is_zero() &&
	          rep.expansion.c[polar_index(PolarKind::rho_psi, 1)].is_zero() &&
	          rep.expansion.c[polar_index(PolarKind::rho_psi, 2)] == -s &&
	          rep.expansion.c[polar_index(PolarKind::rho_psi, 3)] == -s;

	// psi-psi block: t·(1,-1,1) + gamma·(-1,0,-2).
	const Rational& p1 = rep.psi_psi_part[0];
	const Rational& p2 = rep.psi_psi_part[1];
	const Rational& p3 = rep.psi_psi_part[2];
	Rational t = -p2;
	Rational gamma = t - p1;               // p1 = t - gamma
	ok = ok && (p3 == t - Rational(2) * gamma);
	rep.jacobi_scale = t;

	// rho-rho block: gamma·(-2,1,1) with the same gamma.
	const Rational& r1 = rep.expansion.c[polar_index(PolarKind::rho_rho, 1)];
	const Rational& r2 = rep.expansion.c[polar_index(PolarKind::rho_rho, 2)];
	const Rational& r3 = rep.expansion.c[polar_index(PolarKind::rho_rho, 3)];
	ok = ok && (r2 == gamma) && (r3 == gamma) && (r1 == Rational(-2) * gamma);

	rep.gamma_derived = gamma;
	rep.pattern_ok = ok;
	rep.residual_is_leibniz = ok && gamma.is_zero();
	rep.v1_rank = rank_v(v1);

	std::vector<QVector> wa_orbit;
	for (const GroupVector& o : orbit(named_vector("weakly_assoc")))
		wa_orbit.push_back(to_qvector(o));
	rep.alpha_in_weakly_assoc_span = span_contains(wa_orbit, to_qvector(rep.v_alpha));
	return rep;
}

}  // namespace valgebra
