#pragma once

#include "kvcohom/complex.hpp"

#include <optional>
#include <string>

namespace kv {

/// G = G⁰ ⊕ G¹ with G⁰ = A and G¹ = W a left A-module, product
/// (a,w)(a',w') = (aa', aw'). In the total algebra A sits at [0, n) and W at
/// [n, n+m).
struct GradedKVAlgebra {
	KVAlgebra even;
	KVModule odd;

	std::size_t n() const { return even.dim; }
	std::size_t m() const { return odd.dim; }
	KVAlgebra total() const;
};

/// InputError if W has a nonzero right action or mismatched shape; Rejected
/// if W is not a module or the total product is not KV.
GradedKVAlgebra make_graded(const KVAlgebra &A, const KVModule &W);

/// θ: W×W → W as θ(w_α, w_β) = Σ_γ theta(α, β, γ) w_γ and
/// ψ: A×W → A as ψ(e_i, w_α) = Σ_k psi(i, α, k) e_k, read symmetrically.
struct ConnectionlikePair {
	Tensor3 theta; // m × m × m
	Tensor3 psi;   // n × m × n
};

ConnectionlikePair zero_pair(const GradedKVAlgebra &G);
/// The pair as a 2-cochain of C(G, G): c(w,w') = θ(w,w'), c(a,w) = c(w,a) = ψ(a,w).
Cochain pair_cochain(const GradedKVAlgebra &G, const ConnectionlikePair &pair);

/// Piece of f ∈ C_q(G, G) with r arguments in A, s in W and values of parity p.
/// Same shape as f; entries outside the piece are zeroed.
Cochain graded_component(const GradedKVAlgebra &G, const Cochain &f, std::size_t r, std::size_t s, std::size_t p);

/// (w,w',w'')_θ = (w',w,w'')_θ on all basis triples.
Verdict is_kv_chain(const Tensor3 &theta);
/// aθ(w,w') = θ(aw,w') + θ(w,aw') on basis triples. Also computes δθ over G
/// and throws Error if the two routes ever disagree.
Verdict is_theta_cocycle(const GradedKVAlgebra &G, const Tensor3 &theta);

struct ConnectionlikeReport {
	bool c1 = true;                // ψ symmetric; holds by storage
	bool c2 = false;               // θ a KV-cocycle: derivation rule and KV-chain
	bool c3_definition = false;    // ψ(θ(w,w'),a) = ψ(w,ψ(w',a))
	bool c3_proof = false;         // ψ(a,θ(w',w'')) = ψ(ψ(a,w'),w'')
	bool system1 = false;          // aθ(w',w'') − θ(aw',w'') − θ(w',aw'') = 0
	bool system2 = false;          // aψ(a',w'') − ψ(aa',w'') − ψ(a',aw'') = 0
	bool system3 = false;          // same identity as c3_proof
	bool cocycle = false;          // δc = 0 for c = pair_cochain
	bool degenerate = false;       // θ = 0 and ψ = 0
	std::optional<Witness> witness; // first failing condition

	/// Both orientations of the ψ/θ compatibility are required.
	bool connectionlike() const { return c1 && c2 && system2 && c3_definition && c3_proof; }
};
ConnectionlikeReport is_connectionlike(const GradedKVAlgebra &G, const ConnectionlikePair &pair);

/// (a,w)(a',w') = (aa', aw' + θ(w,w')).
KVAlgebra deform_graded(const GradedKVAlgebra &G, const Tensor3 &theta);

struct ExtractedPair {
	std::optional<ConnectionlikePair> pair;
	std::string reason; // empty on success
};
/// Succeeds iff c has only the θ and ψ components, ψ is symmetric, δc = 0 and
/// θ is a KV-chain.
ExtractedPair connectionlike_from_cocycle(const GradedKVAlgebra &G, const Cochain &c);

/// Dimension of B_2(G, G) ∩ {cochains with only θ and symmetric ψ parts}.
std::size_t exact_connectionlike_dim(const GradedKVAlgebra &G);

/// A = AFF acting on W = span{1, x, x²} by e₁ = x d/dx, e₂ = x² d/dx truncated;
/// θ the truncated product and ψ(a, f) = f·a truncated.
GradedKVAlgebra flat_model();
ConnectionlikePair flat_model_pair();

/// Random A with a random left module; always passes make_graded.
GradedKVAlgebra random_graded(std::uint64_t seed, std::size_t n_max, std::size_t m_max);

} // namespace kv
