#pragma once

#include "valgebra/sigma3.hpp"

#include <optional>
#include <string>
#include <vector>

namespace valgebra {

/// Bilinear multiplication on an n-dimensional space via structure
/// constants: mu(e_i, e_j) = sum_k c[i][j][k] e_k. The same type carries
/// base products, deformation terms and polarized halves alike; nothing
/// beyond index bounds is assumed.
struct MultTable {
	std::size_t dim = 0;
	std::vector<Rational> c;

	MultTable() = default;
	explicit MultTable(std::size_t n) : dim(n), c(n * n * n) {}

	Rational& at(std::size_t i, std::size_t j, std::size_t k) {
		return c[(i * dim + j) * dim + k];
	}
	const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
		return c[(i * dim + j) * dim + k];
	}

	QVector apply(const QVector& x, const QVector& y) const;
	MultTable opposite() const;
	bool is_commutative() const;
	bool is_skew() const;
	bool is_zero() const;

	MultTable& operator+=(const MultTable& o);
	MultTable& operator-=(const MultTable& o);
	friend MultTable operator+(MultTable a, const MultTable& b) { return a += b; }
	friend MultTable operator-(MultTable a, const MultTable& b) { return a -= b; }
	friend MultTable operator*(const Rational& s, MultTable a);
	friend bool operator==(const MultTable&, const MultTable&) = default;
};

/// Trilinear map via coefficients: T(e_i, e_j, e_k) = sum_l d[i][j][k][l] e_l.
struct TriTensor {
	std::size_t dim = 0;
	std::vector<Rational> d;

	TriTensor() = default;
	explicit TriTensor(std::size_t n) : dim(n), d(n * n * n * n) {}

	Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
		return d[((i * dim + j) * dim + k) * dim + l];
	}
	const Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
		return d[((i * dim + j) * dim + k) * dim + l];
	}

	QVector eval(const QVector& x, const QVector& y, const QVector& z) const;
	bool is_zero() const;

	TriTensor& operator+=(const TriTensor& o);
	TriTensor& operator-=(const TriTensor& o);
	friend TriTensor operator+(TriTensor a, const TriTensor& b) { return a += b; }
	friend TriTensor operator-(TriTensor a, const TriTensor& b) { return a -= b; }
	friend TriTensor operator*(const Rational& s, TriTensor a);
	friend bool operator==(const TriTensor&, const TriTensor&) = default;
};

/// Lexicographically first nonzero coefficient of a failed identity.
struct Witness {
	std::size_t i = 0, j = 0, k = 0, l = 0;
	Rational value;
	friend bool operator==(const Witness&, const Witness&) = default;
};

struct IdentityReport {
	std::string name;
	bool holds = true;
	std::optional<Witness> witness;
};

std::optional<Witness> first_nonzero(const TriTensor& t);
IdentityReport report_is_zero(std::string name, const TriTensor& t);

/// A_mu(x,y,z) = mu(x, mu(y,z)) - mu(mu(x,y), z).
TriTensor associator(const MultTable& mu);
/// Left-nested half mu(x, mu(y,z)).
TriTensor assoc_left(const MultTable& mu);
/// Right-nested half mu(mu(x,y), z).
TriTensor assoc_right(const MultTable& mu);

/// (T ∘ Phi_v)(x1,x2,x3) = sum_sigma a_sigma T(x_sigma(1), x_sigma(2), x_sigma(3)).
/// Contravariant: act(act(t, v), v1) = act(t, v1·v).
TriTensor act(const TriTensor& t, const GroupVector& v);
TriTensor act(const TriTensor& t, int sigma_index);

IdentityReport is_v_associative(const MultTable& mu, const GroupVector& v);

enum class VwMode { pair, diff };

/// pair: A^L∘Phi_v = 0 and A^R∘Phi_w = 0. diff: A^L∘Phi_v - A^R∘Phi_w = 0.
IdentityReport is_vw_algebra(const MultTable& mu, const GroupVector& v,
                             const GroupVector& w, VwMode mode);

struct Polarized {
	MultTable rho;  // symmetric half (xy+yx)/2
	MultTable psi;  // skew half (xy-yx)/2
};

Polarized polarize(const MultTable& mu);
/// Throws unless rho is symmetric and psi is skew.
MultTable depolarize(const MultTable& rho, const MultTable& psi);

/// L(m0, phi)(x,y,z) = phi(m0(x,y), z) - m0(x, phi(y,z)) - m0(phi(x,z), y).
TriTensor leibniz_map(const MultTable& m0, const MultTable& phi);

/// J(x,y,z) = psi(x,psi(y,z)) + psi(y,psi(z,x)) + psi(z,psi(x,y)).
/// Throws on non-skew input.
TriTensor jacobiator(const MultTable& psi);

/// Full identity catalog, evaluated eagerly entry by entry, in a fixed
/// order. The two Leibniz conventions are kept as distinct entries.
std::vector<IdentityReport> classify(const MultTable& mu);

enum class PoissonKind {
	poisson,
	nonassoc_poisson,
	weakly_poisson,
	pseudo_poisson_rank5,
	pseudo_poisson_leibniz,
};

const char* poisson_kind_name(PoissonKind kind);

/// Checks the selected compatibility between a symmetric rho and a skew
/// psi; throws if the symmetry preconditions fail. The first failing
/// clause provides the witness.
IdentityReport poisson_family_check(const MultTable& rho, const MultTable& psi,
                                    PoissonKind kind);

}  // namespace valgebra
