#include "valgebra/algebra.hpp"

#include <stdexcept>

namespace valgebra {

QVector MultTable::apply(const QVector& x, const QVector& y) const {
	if (x.size() != dim || y.size() != dim)
		throw std::invalid_argument("MultTable::apply: argument length mismatch");
	QVector out(dim);
	for (std::size_t i = 0; i < dim; ++i) {
		if (x[i].is_zero())
			continue;
		for (std::size_t j = 0; j < dim; ++j) {
			if (y[j].is_zero())
				continue;
			Rational f = x[i] * y[j];
			for (std::size_t k = 0; k < dim; ++k)
				out[k] += f * at(i, j, k);
		}
	}
	return out;
}

MultTable MultTable::opposite() const {
	MultTable o(dim);
	for (std::size_t i = 0; i < dim; ++i)
		for (std::size_t j = 0; j < dim; ++j)
			for (std::size_t k = 0; k < dim; ++k)
				o.at(i, j, k) = at(j, i, k);
	return o;
}

bool MultTable::is_commutative() const {
	for (std::size_t i = 0; i < dim; ++i)
		for (std::size_t j = i + 1; j < dim; ++j)
			for (std::size_t k = 0; k < dim; ++k)
				if (at(i, j, k) != at(j, i, k))
					return false;
	return true;
}

bool MultTable::is_skew() const {
	for (std::size_t i = 0; i < dim; ++i)
		for (std::size_t j = i; j < dim; ++j)
			for (std::size_t k = 0; k < dim; ++k)
				if (at(i, j, k) != -at(j, i, k))
					return false;
	return true;
}

bool MultTable::is_zero() const {
	for (const Rational& x : c)
		if (!x.is_zero())
			return false;
	return true;
}

MultTable& MultTable::operator+=(const MultTable& o) {
	if (dim != o.dim)
		throw std::invalid_argument("MultTable: dimension mismatch");
	for (std::size_t i = 0; i < c.size(); ++i)
		c[i] += o.c[i];
	return *this;
}

MultTable& MultTable::operator-=(const MultTable& o) {
	if (dim != o.dim)
		throw std::invalid_argument("MultTable: dimension mismatch");
	for (std::size_t i = 0; i < c.size(); ++i)
		c[i] -= o.c[i];
	return *this;
}

MultTable operator*(const Rational& s, MultTable a) {
	for (Rational& x : a.c)
		x *= s;
	return a;
}

QVector TriTensor::eval(const QVector& x, const QVector& y, const QVector& z) const {
	if (x.size() != dim || y.size() != dim || z.size() != dim)
		throw std::invalid_argument("TriTensor::eval: argument length mismatch");
	QVector out(dim);
	for (std::size_t i = 0; i < dim; ++i) {
		if (x[i].is_zero())
			continue;
		for (std::size_t j = 0; j < dim; ++j) {
			if (y[j].is_zero())
				continue;
			Rational f = x[i] * y[j];
			for (std::size_t k = 0; k < dim; ++k) {
				if (z[k].is_zero())
					continue;
				Rational g = f * z[k];
				for (std::size_t l = 0; l < dim; ++l)
					out[l] += g * at(i, j, k, l);
			}
		}
	}
	return out;
}

bool TriTensor::is_zero() const {
	for (const Rational& x : d)
		if (!x.is_zero())
			return false;
	return true;
}

TriTensor& TriTensor::operator+=(const TriTensor& o) {
	if (dim != o.dim)
		throw std::invalid_argument("TriTensor: dimension mismatch");
	for (std::size_t i = 0; i < d.size(); ++i)
		d[i] += o.d[i];
	return *this;
}

TriTensor& TriTensor::operator-=(const TriTensor& o) {
	if (dim != o.dim)
		throw std::invalid_argument("TriTensor: dimension mismatch");
	for (std::size_t i = 0; i < d.size(); ++i)
		d[i] -= o.d[i];
	return *this;
}

TriTensor operator*(const Rational& s, TriTensor a) {
	for (Rational& x : a.d)
		x *= s;
	return a;
}

std::optional<Witness> first_nonzero(const TriTensor& t) {
	std::size_t n = t.dim;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				for (std::size_t l = 0; l < n; ++l)
					if (!t.at(i, j, k, l).is_zero())
						return Witness{i, j, k, l, t.at(i, j, k, l)};
	return std::nullopt;
}

IdentityReport report_is_zero(std::string name, const TriTensor& t) {
	IdentityReport r;
	r.name = std::move(name);
	r.witness = first_nonzero(t);
	r.holds = !r.witness.has_value();
	return r;
}

TriTensor assoc_left(const MultTable& mu) {
	std::size_t n = mu.dim;
	TriTensor t(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				for (std::size_t m = 0; m < n; ++m) {
					if (mu.at(j, k, m).is_zero())
						continue;
					for (std::size_t l = 0; l < n; ++l)
						t.at(i, j, k, l) += mu.at(j, k, m) * mu.at(i, m, l);
				}
	return t;
}

TriTensor assoc_right(const MultTable& mu) {
	std::size_t n = mu.dim;
	TriTensor t(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				for (std::size_t m = 0; m < n; ++m) {
					if (mu.at(i, j, m).is_zero())
						continue;
					for (std::size_t l = 0; l < n; ++l)
						t.at(i, j, k, l) += mu.at(i, j, m) * mu.at(m, k, l);
				}
	return t;
}

TriTensor associator(const MultTable& mu) {
	return assoc_left(mu) - assoc_right(mu);
}

TriTensor act(const TriTensor& t, int sigma_index) {
	std::size_t n = t.dim;
	const Perm s = perm(sigma_index);
	TriTensor out(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				std::size_t args[3] = {i, j, k};
				std::size_t a = args[s(1) - 1];
				std::size_t b = args[s(2) - 1];
				std::size_t c = args[s(3) - 1];
				for (std::size_t l = 0; l < n; ++l)
					out.at(i, j, k, l) = t.at(a, b, c, l);
			}
	return out;
}

TriTensor act(const TriTensor& t, const GroupVector& v) {
	TriTensor out(t.dim);
	for (int s = 0; s < 6; ++s) {
		const Rational& coeff = v.c[static_cast<std::size_t>(s)];
		if (coeff.is_zero())
			continue;
		out += coeff * act(t, s);
	}
	return out;
}

IdentityReport is_v_associative(const MultTable& mu, const GroupVector& v) {
	return report_is_zero("v_associative", act(associator(mu), v));
}

IdentityReport is_vw_algebra(const MultTable& mu, const GroupVector& v,
                             const GroupVector& w, VwMode mode) {
	TriTensor left = act(assoc_left(mu), v);
	TriTensor right = act(assoc_right(mu), w);
	if (mode == VwMode::diff)
		return report_is_zero("vw_diff", left - right);
	IdentityReport lr = report_is_zero("vw_pair", left);
	if (!lr.holds)
		return lr;
	return report_is_zero("vw_pair", right);
}

Polarized polarize(const MultTable& mu) {
	std::size_t n = mu.dim;
	Polarized p{MultTable(n), MultTable(n)};
	const Rational half(1, 2);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				p.rho.at(i, j, k) = half * (mu.at(i, j, k) + mu.at(j, i, k));
				p.psi.at(i, j, k) = half * (mu.at(i, j, k) - mu.at(j, i, k));
			}
	return p;
}

MultTable depolarize(const MultTable& rho, const MultTable& psi) {
	if (rho.dim != psi.dim)
		throw std::invalid_argument("depolarize: dimension mismatch");
	if (!rho.is_commutative())
		throw std::invalid_argument("depolarize: rho is not symmetric");
	if (!psi.is_skew())
		throw std::invalid_argument("depolarize: psi is not skew");
	return rho + psi;
}

TriTensor leibniz_map(const MultTable& m0, const MultTable& phi) {
	if (m0.dim != phi.dim)
		throw std::invalid_argument("leibniz_map: dimension mismatch");
	std::size_t n = m0.dim;
	TriTensor t(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				for (std::size_t m = 0; m < n; ++m)
					for (std::size_t l = 0; l < n; ++l) {
						// phi(m0(x,y), z) - m0(x, phi(y,z)) - m0(phi(x,z), y)
						t.at(i, j, k, l) += m0.at(i, j, m) * phi.at(m, k, l);
						t.at(i, j, k, l) -= phi.at(j, k, m) * m0.at(i, m, l);
						t.at(i, j, k, l) -= phi.at(i, k, m) * m0.at(m, j, l);
					}
	return t;
}

TriTensor jacobiator(const MultTable& psi) {
	if (!psi.is_skew())
		throw std::invalid_argument("jacobiator: input is not skew");
	std::size_t n = psi.dim;
	TriTensor t(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				for (std::size_t m = 0; m < n; ++m)
					for (std::size_t l = 0; l < n; ++l) {
						// psi(x,psi(y,z)) + psi(y,psi(z,x)) + psi(z,psi(x,y))
						t.at(i, j, k, l) += psi.at(j, k, m) * psi.at(i, m, l);
						t.at(i, j, k, l) += psi.at(k, i, m) * psi.at(j, m, l);
						t.at(i, j, k, l) += psi.at(i, j, m) * psi.at(k, m, l);
					}
	return t;
}

namespace {

IdentityReport commutative_report(const MultTable& mu) {
	std::size_t n = mu.dim;
	IdentityReport r{"commutative", true, std::nullopt};
	for (std::size_t i = 0; i < n && r.holds; ++i)
		for (std::size_t j = 0; j < n && r.holds; ++j)
			for (std::size_t k = 0; k < n && r.holds; ++k) {
				Rational diff = mu.at(i, j, k) - mu.at(j, i, k);
				if (!diff.is_zero()) {
					r.holds = false;
					r.witness = Witness{i, j, k, 0, diff};
				}
			}
	return r;
}

IdentityReport skew_report(const MultTable& mu) {
	std::size_t n = mu.dim;
	IdentityReport r{"skew", true, std::nullopt};
	for (std::size_t i = 0; i < n && r.holds; ++i)
		for (std::size_t j = 0; j < n && r.holds; ++j)
			for (std::size_t k = 0; k < n && r.holds; ++k) {
				Rational sum = mu.at(i, j, k) + mu.at(j, i, k);
				if (!sum.is_zero()) {
					r.holds = false;
					r.witness = Witness{i, j, k, 0, sum};
				}
			}
	return r;
}

}  // namespace

std::vector<IdentityReport> classify(const MultTable& mu) {
	std::vector<IdentityReport> out;
	out.push_back(commutative_report(mu));
	out.push_back(skew_report(mu));

	TriTensor assoc = associator(mu);
	TriTensor left = assoc_left(mu);
	TriTensor right = assoc_right(mu);
	auto v_entry = [&](const char* name, const GroupVector& v) {
		IdentityReport r = report_is_zero(name, act(assoc, v));
		out.push_back(std::move(r));
	};

	v_entry("associative", basis_group_vector(0));
	v_entry("lie_admissible", named_vector("V_Lad"));
	v_entry("three_power_associative", named_vector("V_3Pa"));
	v_entry("power_assoc_supplement",
	        basis_group_vector(0) + basis_group_vector(3));
	v_entry("pre_lie", named_vector("pre_lie"));
	v_entry("g3", named_vector("g3"));
	v_entry("g4", named_vector("g4"));
	v_entry("cyclic", named_vector("cyclic"));
	v_entry("weakly_associative", named_vector("weakly_assoc"));
	v_entry("rank5", named_vector("rank5"));

	GroupVector id = basis_group_vector(0);
	out.push_back(report_is_zero("leibniz_left",
	                             act(left, named_vector("pre_lie")) - act(right, id)));
	out.push_back(report_is_zero("leibniz_right",
	                             act(left, named_vector("g4")) - act(right, id)));
	{
		TriTensor first = act(right, named_vector("pre_lie")) - act(left, id);
		TriTensor second = act(left, named_vector("g4")) - act(right, id);
		IdentityReport r = report_is_zero("symmetric_leibniz", first);
		if (r.holds)
			r = report_is_zero("symmetric_leibniz", second);
		out.push_back(std::move(r));
	}
	return out;
}

const char* poisson_kind_name(PoissonKind kind) {
	switch (kind) {
		case PoissonKind::poisson: return "poisson";
		case PoissonKind::nonassoc_poisson: return "nonassoc_poisson";
		case PoissonKind::weakly_poisson: return "weakly_poisson";
		case PoissonKind::pseudo_poisson_rank5: return "pseudo_poisson_rank5";
		case PoissonKind::pseudo_poisson_leibniz: return "pseudo_poisson_leibniz";
	}
	return "?";
}

namespace {

/// psi(rho(x,y), z) + psi(rho(y,z), x) + psi(rho(z,x), y)
TriTensor cyclic_law(const MultTable& rho, const MultTable& psi) {
	std::size_t n = rho.dim;
	TriTensor t(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				for (std::size_t m = 0; m < n; ++m)
					for (std::size_t l = 0; l < n; ++l) {
						t.at(i, j, k, l) += rho.at(i, j, m) * psi.at(m, k, l);
						t.at(i, j, k, l) += rho.at(j, k, m) * psi.at(m, i, l);
						t.at(i, j, k, l) += rho.at(k, i, m) * psi.at(m, j, l);
					}
	return t;
}

/// rho(x, psi(y,z)) - psi(y, rho(x,z)) - psi(rho(x,y), z)
TriTensor pseudo_leibniz_law(const MultTable& rho, const MultTable& psi) {
	std::size_t n = rho.dim;
	TriTensor t(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				for (std::size_t m = 0; m < n; ++m)
					for (std::size_t l = 0; l < n; ++l) {
						t.at(i, j, k, l) += psi.at(j, k, m) * rho.at(i, m, l);
						t.at(i, j, k, l) -= rho.at(i, k, m) * psi.at(j, m, l);
						t.at(i, j, k, l) -= rho.at(i, j, m) * psi.at(m, k, l);
					}
	return t;
}

/// L(x,y,z) - L(z,y,x) for L = leibniz_map(rho, psi).
TriTensor rank5_law(const MultTable& rho, const MultTable& psi) {
	TriTensor L = leibniz_map(rho, psi);
	return L - act(L, 2);  // index 2 is t13, the (x,z) swap
}

}  // namespace

IdentityReport poisson_family_check(const MultTable& rho, const MultTable& psi,
                                    PoissonKind kind) {
	if (rho.dim != psi.dim)
		throw std::invalid_argument("poisson_family_check: dimension mismatch");
	if (!rho.is_commutative())
		throw std::invalid_argument("poisson_family_check: rho is not symmetric");
	if (!psi.is_skew())
		throw std::invalid_argument("poisson_family_check: psi is not skew");

	const char* name = poisson_kind_name(kind);
	std::vector<TriTensor> clauses;
	switch (kind) {
		case PoissonKind::poisson:
		case PoissonKind::nonassoc_poisson:
			clauses.push_back(jacobiator(psi));
			clauses.push_back(leibniz_map(rho, psi));
			break;
		case PoissonKind::weakly_poisson:
			clauses.push_back(jacobiator(psi));
			clauses.push_back(cyclic_law(rho, psi));
			break;
		case PoissonKind::pseudo_poisson_rank5:
			clauses.push_back(jacobiator(psi));
			clauses.push_back(rank5_law(rho, psi));
			break;
		case PoissonKind::pseudo_poisson_leibniz:
			clauses.push_back(pseudo_leibniz_law(rho, psi));
			break;
	}
	for (const TriTensor& t : clauses) {
		IdentityReport r = report_is_zero(name, t);
		if (!r.holds)
			return r;
	}
	return IdentityReport{name, true, std::nullopt};
}

}  // namespace valgebra
