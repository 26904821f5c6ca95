#pragma once

#include "valgebra/algebra.hpp"
#include "valgebra/matrix.hpp"

#include <array>

namespace valgebra {

/// Canonical degree-3 words in a symmetric rho and a skew psi. Kind is
/// outer-inner; the slot picks the lone outer argument x_a, the inner
/// pair is the increasing complement. Index layout: psi_psi 0..2,
/// psi_rho 3..5, rho_psi 6..8, rho_rho 9..11, slot-major inside a kind.
enum class PolarKind { psi_psi = 0, psi_rho = 1, rho_psi = 2, rho_rho = 3 };

struct PolarTerm {
	PolarKind kind;
	int slot;  // 1..3
};

std::size_t polar_index(PolarKind kind, int slot);
PolarTerm polar_term(std::size_t index);
std::string format_polar_term(const PolarTerm& term);

struct PolarVector {
	std::array<Rational, 12> c{};

	bool is_zero() const {
		for (const Rational& x : c)
			if (!x.is_zero())
				return false;
		return true;
	}
	std::size_t support_size() const {
		std::size_t n = 0;
		for (const Rational& x : c)
			if (!x.is_zero())
				++n;
		return n;
	}

	PolarVector& operator+=(const PolarVector& o) {
		for (std::size_t i = 0; i < 12; ++i)
			c[i] += o.c[i];
		return *this;
	}
	PolarVector& operator-=(const PolarVector& o) {
		for (std::size_t i = 0; i < 12; ++i)
			c[i] -= o.c[i];
		return *this;
	}
	friend PolarVector operator+(PolarVector a, const PolarVector& b) { return a += b; }
	friend PolarVector operator-(PolarVector a, const PolarVector& b) { return a -= b; }
	friend PolarVector operator*(const Rational& s, const PolarVector& v) {
		PolarVector r;
		for (std::size_t i = 0; i < 12; ++i)
			r.c[i] = s * v.c[i];
		return r;
	}
	friend bool operator==(const PolarVector&, const PolarVector&) = default;
};

/// Stable text rendering, e.g.
/// "psi(x1, rho(x2,x3)) - rho(x2, psi(x1,x3)) - rho(x3, psi(x1,x2)) = 0".
std::string format_polar_vector(const PolarVector& v);

/// Symbolic expansion of A^L_{rho+psi} ∘ Phi_v - A^R_{rho+psi} ∘ Phi_w on
/// the 12-term basis. Words with a composite first argument are rewritten
/// by moving it to the second slot (sign flip for a skew outer), then the
/// inner pair is sorted (sign flip for a skew inner).
PolarVector polar_expand(const GroupVector& v, const GroupVector& w);

/// 12x6 matrix; column j is polar_expand(sigma_j, sigma_j).
QMatrix polar_matrix_assoc();

/// 12x12 matrix over the (v,w) basis pairs: columns 0..5 are
/// polar_expand(sigma_j, 0), columns 6..11 are polar_expand(0, sigma_j).
QMatrix polar_matrix_vw_pair();

/// 12x6 matrix of the identity family generated by (v,w): column j is
/// polar_expand(sigma_j·v, sigma_j·w), i.e. the Phi_{sigma_j}-twist of the
/// (v,w) identity. polar_family_matrix(id, id) = polar_matrix_assoc().
QMatrix polar_family_matrix(const GroupVector& v, const GroupVector& w);

struct SparseRelation {
	QVector image;     // normalized: first nonzero coefficient is 1
	QVector preimage;  // one solution of m·preimage = image
};

/// All image vectors of m with support of size <= max_support, up to
/// scaling, found by enumerating support subsets in order of size and
/// solving for preimages; deduplicated after normalizing the first
/// nonzero coefficient to 1. Deterministic order.
std::vector<SparseRelation> sparse_relations(const QMatrix& m, std::size_t max_support);

/// Sum of the 12 canonical words instantiated on a concrete pair.
TriTensor instantiate_polar(const PolarVector& coeffs, const MultTable& rho,
                            const MultTable& psi);

/// Soundness bridge: the symbolic expansion instantiated on polarize(mu)
/// must equal act(assoc_left(mu), v) - act(assoc_right(mu), w) exactly.
IdentityReport polarized_equivalence_check(const MultTable& mu, const GroupVector& v,
                                           const GroupVector& w);

/// Exact decomposition of the expansion of the alpha-family identity
/// twisted by v1 = 1/3 id - t12 + 7/12 t13 + 1/4 c2. The expansion is
/// resolved against the pattern
///   s·(psi_rho1 - rho_psi2 - rho_psi3)  +  t·J  +
///   gamma·(-(psi_psi1 + 2 psi_psi3) + (-2 rho_rho1 + rho_rho2 + rho_rho3))
/// with J the Jacobi combination psi_psi1 - psi_psi2 + psi_psi3; the
/// residual beyond the Leibniz part vanishes (given a Lie psi) exactly
/// when gamma_derived = 0.
struct CFamilyReport {
	Rational alpha;
	Rational gamma_published;    // (2/3)(2 alpha - 1), the published coefficient
	Rational gamma_derived;  // coefficient computed from the expansion
	GroupVector v_alpha;     // 2 id + (1+alpha) t12 + t13 + c + (1-alpha) c2
	GroupVector twisted;     // v1 · v_alpha
	PolarVector expansion;   // polar_expand(twisted, twisted)
	std::array<Rational, 3> psi_psi_part;
	Rational leibniz_scale;       // s above
	Rational jacobi_scale;        // t above
	bool pattern_ok = false;      // expansion matches the decomposition exactly
	bool residual_is_leibniz = false;  // pattern_ok and gamma_derived == 0
	std::size_t v1_rank = 0;           // rank of M_{v1}
	bool alpha_in_weakly_assoc_span = false;  // v_alpha in span(orbit(id - t12 + c))
};

CFamilyReport c_family_analysis(const Rational& alpha);

}  // namespace valgebra
