#pragma once

#include "valgebra/algebra.hpp"

namespace valgebra {

/// Truncated formal deformation mu_t = phi_0 + t phi_1 + ... + t^N phi_N.
/// terms[0] is the base multiplication; all terms share one dimension.
/// Only orders up to N are ever claimed.
struct Jet {
	std::vector<MultTable> terms;

	std::size_t order() const { return terms.size() - 1; }
	std::size_t dim() const { return terms.front().dim; }
};

/// Validates non-emptiness and equal dimensions.
Jet make_jet(std::vector<MultTable> terms);

/// phi1 •_v phi2 = (phi1 ∘ (Id⊗phi2) - phi1 ∘ (phi2⊗Id)) ∘ Phi_v.
TriTensor bullet(const MultTable& phi1, const MultTable& phi2, const GroupVector& v);
/// Left-nested half phi1 ∘ (Id⊗phi2) ∘ Phi_v.
TriTensor bullet_left(const MultTable& phi1, const MultTable& phi2, const GroupVector& v);
/// Right-nested half phi1 ∘ (phi2⊗Id) ∘ Phi_w.
TriTensor bullet_right(const MultTable& phi1, const MultTable& phi2, const GroupVector& w);

/// delta2(v, m0, phi) = m0 •_v phi + phi •_v m0. Factors through the
/// Hochschild coboundary: equals act(hochschild_delta2(m0, phi), v).
TriTensor delta2(const GroupVector& v, const MultTable& m0, const MultTable& phi);

/// x·phi(y,z) - phi(xy,z) + phi(x,yz) - phi(x,y)·z with products by m0.
TriTensor hochschild_delta2(const MultTable& m0, const MultTable& phi);

/// Order-k reports for sum_{i+j=k} phi_i •_v phi_j = 0, k = 0..N.
std::vector<IdentityReport> verify_jet(const Jet& jet, const GroupVector& v);

/// Order-k reports for sum_{i+j=k} [phi_i •_v^L phi_j - phi_i •_w^R phi_j] = 0.
std::vector<IdentityReport> verify_jet_vw(const Jet& jet, const GroupVector& v,
                                          const GroupVector& w);

/// Basis of the bilinear maps phi with delta2(v, m0, phi) = 0, obtained
/// by solving the homogeneous system over the n^3 coefficients of phi.
std::vector<MultTable> delta2_kernel(const GroupVector& v, const MultTable& m0);

/// Basis of the w in K[Sigma_3] with act(hochschild_delta2(m0, phi), w) = 0
/// for every bilinear phi. Quantifies over all phi by linearity (the n^3
/// basis maps suffice). Requires m0 commutative and nonzero.
std::vector<GroupVector> lemma1_solve(const MultTable& m0);

MultTable table_from_coefficients(std::size_t dim, const QVector& coeffs);
QVector table_coefficients(const MultTable& t);

}  // namespace valgebra
