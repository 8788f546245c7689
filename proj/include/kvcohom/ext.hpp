#pragma once

#include "kvcohom/complex.hpp"

#include <optional>
#include <vector>

namespace kv {

// Cochains over G = A ⊕ W (A at indices [0, n), W at [n, n+m)) with values
// in a module V lifted to G.

/// Number of arguments of a basis tuple that lie in the W summand.
std::size_t w_count(const std::vector<std::size_t> &args, std::size_t a_dim);

struct BigradedComponent {
	std::size_t p = 0; // arguments in W
	std::size_t q = 0; // arguments in A
	Cochain f;
};

/// Splits f into homogeneous pieces; the pieces sum to f. Zero pieces are dropped.
std::vector<BigradedComponent> bigrade(const Cochain &f, std::size_t a_dim);
bool is_homogeneous(const Cochain &f, std::size_t a_dim, std::size_t p);
/// F^p: every component has at least p arguments in W.
bool in_upper_filtration(const Cochain &f, std::size_t a_dim, std::size_t p);
/// F_p: every component has at most p arguments in W.
bool in_lower_filtration(const Cochain &f, std::size_t a_dim, std::size_t p);

/// V as a module over semidirect(A, W): (a, w)v = av, v(a, w) = va.
KVModule lift_module(const KVAlgebra &A, const KVModule &W, const KVModule &V);

/// θ: W → V as a |V|×|W| matrix. Returns the (1,1) cochain
/// δθ(a,w) = −aθ(w) + θ(aw), δθ(w,a) = θ(wa) − θ(w)a over G.
Cochain e11_coboundary0(const KVAlgebra &A, const KVModule &W, const KVModule &V, const Mat &theta);

/// Basis tuples of C_{1,q}: degree q+1 tuples with exactly one W argument.
std::vector<std::size_t> e11_tuples(std::size_t a_dim, std::size_t w_dim, std::size_t q);
/// Cohomology of ⊕_q C_{1,q} for q = 0..q_max; representatives in the
/// coordinates of the selected tuples (see e11_tuples) times |V|.
CohomologyReport e11_cohomology(const KVAlgebra &A, const KVModule &W, const KVModule &V, std::size_t q_max);
/// Embeds coordinates over e11_tuples(q) into a full degree q+1 cochain over G.
Cochain e11_embed(std::size_t a_dim, std::size_t w_dim, std::size_t v_dim, std::size_t q, const Vec &coords);

/// T = V ⊕ W (V first) with a(v,w) = (av + f(a,w), aw), (v,w)a = (va + f(w,a), wa).
struct ModuleExtension {
	KVModule V, W, T;
};

/// Rejects with a witness when T fails the module identities.
ModuleExtension module_extension_from_cocycle(const KVAlgebra &A, const KVModule &W, const KVModule &V, const Cochain &f);
/// σ: W → T as a |T|×|W| matrix whose W block is the identity.
Cochain cocycle_from_section(const KVAlgebra &A, const ModuleExtension &ext, const Mat &sigma);
Mat canonical_module_section(const ModuleExtension &ext);
/// θ with f − f' = e11_coboundary0(θ), or nullopt.
std::optional<Mat> extensions_equivalent(const KVAlgebra &A, const KVModule &W, const KVModule &V, const Cochain &f, const Cochain &fp);

/// The two component equations of δf = 0 for f ∈ C_{1,1}, with
/// θ(a,w) = f(a,w) and ψ(a,w) = f(w,a), on basis triples (a, b, w):
///   theta_part = −aθ(b,w) + θ(ab,w) + θ(b,aw) + bθ(a,w) − θ(ba,w) − θ(a,bw)
///   mixed_part = −aψ(b,w) + ψ(b,aw) + ψ(ab,w) − ψ(a,w)b − ψ(b,wa) − θ(a,wb) + θ(a,w)b
/// Flattened as ((a·n + b)·|W| + w)·|V| + β.
struct ModuleCocycleSystem {
	Vec theta_part, mixed_part;
	bool holds() const { return is_zero(theta_part) && is_zero(mixed_part); }
};
ModuleCocycleSystem module_cocycle_system(const KVAlgebra &A, const KVModule &W, const KVModule &V, const Cochain &f);

/// Total algebra on W ⊕ A (W at [0, m), A at [m, m+n)) with
/// (w,a)(w',a') = (aw' + wa' + ω(a,a'), aa').
struct AlgebraExtension {
	std::size_t n = 0, m = 0;
	KVAlgebra T;
};

AlgebraExtension algebra_extension_from_cocycle(const KVAlgebra &A, const KVModule &W, const Cochain &omega);
/// Pure-A block of the KV defect of T, read in W: entry (i,j,k) is the W part of
/// (e_i,e_j,e_k) − (e_j,e_i,e_k) for A basis elements.
Cochain extension_defect(const AlgebraExtension &ext);
/// σ: A → T as an (m+n)×n matrix whose A block is the identity.
Cochain algebra_cocycle_from_section(const KVAlgebra &A, const AlgebraExtension &ext, const Mat &sigma);
Mat canonical_algebra_section(const AlgebraExtension &ext);
/// ψ with ω − ω' = δψ, or nullopt.
std::optional<Cochain> algebra_extensions_equivalent(const KVAlgebra &A, const KVModule &W, const Cochain &omega, const Cochain &omegap);

} // namespace kv
