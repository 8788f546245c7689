#pragma once

#include "kvcohom/complex.hpp"

#include <optional>
#include <vector>

namespace kv {

// Bilinear maps A×A → A are degree-2 cochains over the regular bimodule; their
// table layout coincides with a product tensor Γ(i, j, k).

Cochain as_cochain(const Tensor3 &product);
Tensor3 as_tensor(const Cochain &mu);
Vec bilinear(const Cochain &mu, const Vec &a, const Vec &b);

/// K(μ,ν)(a,b,c) = μ(ν(a,b),c) − μ(a,ν(b,c)) − μ(ν(b,a),c) + μ(b,ν(a,c)).
Cochain kv_pairing(const Cochain &mu, const Cochain &nu);
/// The eight-term bracket d_μ ν.
Cochain kv_bracket(const Cochain &mu, const Cochain &nu);

/// μ(t) = μ_0 + Σ_{k≥1} t^k μ_k with μ_0 the product of `base`.
struct MultiplicationJet {
	KVAlgebra base;
	std::vector<Cochain> coefficients; // μ_1, μ_2, …

	std::size_t order() const { return coefficients.size(); }
	/// μ_k, with μ_0 the base product
	Cochain mu(std::size_t k) const;
};

/// φ_t = 1 + Σ_{k≥1} t^k θ_k, each θ_k an n×n matrix.
struct BasisFlowJet {
	std::vector<Mat> theta;
};

struct JetResiduals {
	std::vector<Cochain> E; // E_1 … E_K
	/// First order with E_k ≠ 0, and its first nonzero basis triple.
	std::optional<std::size_t> failing_order;
	std::optional<Witness> witness;
	bool ok() const { return !failing_order; }
};

/// E_k = Σ_{i+j=k} K(μ_i, μ_j). Also checks E_k = δμ_k + ½ Σ_{i,j>0} d_{μ_i}μ_j.
JetResiduals jet_residuals(const MultiplicationJet &jet);

struct NextOrder {
	std::size_t k = 0;
	Cochain R;      // −½ Σ_{i+j=k, i,j>0} d_{μ_i} μ_j
	Cochain delta_R;
	std::optional<Cochain> mu_k; // δμ_k = R
	/// y with y·M = 0 for the degree-2 coboundary matrix M and y·R ≠ 0.
	std::optional<Vec> certificate;
	bool R_is_cocycle() const { return delta_R.is_zero(); }
};

/// Extends a jet whose residuals vanish through its current order by one.
NextOrder solve_next_order(const MultiplicationJet &jet);

/// Formal inverse coefficients P_0 = 1, P_k = −Σ_{j=1}^k θ_j P_{k−j}.
std::vector<Mat> formal_inverse(const BasisFlowJet &flow, std::size_t K);
/// μ_t(a,b) = φ_t(φ_t⁻¹a · φ_t⁻¹b) truncated at order K.
MultiplicationJet pushforward_jet(const KVAlgebra &A, const BasisFlowJet &flow, std::size_t K);
/// θ as a 1-cochain in C_1(A, |A|).
Cochain endomorphism_cochain(const Mat &theta);

struct RigidityReport {
	std::size_t dim_Z2 = 0, dim_B2 = 0, dim_H2 = 0;
	std::vector<Vec> cocycle_basis;
	std::vector<Vec> class_representatives;
	bool rigid = false;
};
RigidityReport rigidity_report(const KVAlgebra &A);

struct CurvatureCheck {
	Cochain R_direct, R_comm, residual, delta_S;
	/// R_direct = R_comm, i.e. [S(X,−), S(Y,−)] is the curvature.
	bool formula_holds() const { return residual.is_zero(); }
};
/// ∇ given by μ' = μ_0 + S. Throws if the identity residual = −δS fails.
CurvatureCheck curvature_check(const KVAlgebra &A, const Cochain &S);

} // namespace kv
