#pragma once

#include "kvcohom/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kv {

/// Dense 3-index table of rationals, row-major in (i, j, k).
struct Tensor3 {
	std::size_t d0 = 0, d1 = 0, d2 = 0;
	std::vector<Rat> v;

	Tensor3() = default;
	Tensor3(std::size_t a, std::size_t b, std::size_t c) : d0(a), d1(b), d2(c), v(a * b * c, Rat(0)) {}

	Rat &operator()(std::size_t i, std::size_t j, std::size_t k) { return v[(i * d1 + j) * d2 + k]; }
	const Rat &operator()(std::size_t i, std::size_t j, std::size_t k) const { return v[(i * d1 + j) * d2 + k]; }

	bool is_zero() const { return kv::is_zero(v); }
	friend bool operator==(const Tensor3 &, const Tensor3 &) = default;
};

/// Finite-dimensional algebra given by structure constants:
/// e_i e_j = Σ_k product(i, j, k) e_k. The KV identity is checked by is_kv,
/// never assumed, so candidate products can be held and rejected.
struct KVAlgebra {
	std::size_t dim = 0;
	Tensor3 product;
	std::string name;

	KVAlgebra() = default;
	explicit KVAlgebra(std::size_t n, std::string label = {}) : dim(n), product(n, n, n), name(std::move(label)) {}

	Vec mul(const Vec &a, const Vec &b) const;
	Vec mul_basis(std::size_t i, std::size_t j) const;
};

/// Bimodule actions over an algebra of dimension algebra_dim:
///   a_i w_α = Σ_β left(i, α, β) w_β,   w_α a_i = Σ_β right(α, i, β) w_β.
struct KVModule {
	std::size_t algebra_dim = 0;
	std::size_t dim = 0;
	Tensor3 left;  // n × m × m
	Tensor3 right; // m × n × m

	KVModule() = default;
	KVModule(std::size_t n, std::size_t m) : algebra_dim(n), dim(m), left(n, m, m), right(m, n, m) {}

	Vec act_left(const Vec &a, const Vec &w) const;
	Vec act_right(const Vec &w, const Vec &a) const;
	/// a_i · w
	Vec left_basis(std::size_t i, const Vec &w) const;
	/// w · a_i
	Vec right_basis(const Vec &w, std::size_t i) const;

	bool is_left() const { return right.is_zero(); }
	bool is_right() const { return left.is_zero(); }
};

/// First failing basis instance of an identity.
struct Witness {
	std::string identity;
	std::vector<std::size_t> indices;
	Vec lhs, rhs;

	std::string describe() const;
};

struct Verdict {
	bool ok = true;
	std::optional<Witness> witness;

	explicit operator bool() const { return ok; }
};

/// (ab)c − a(bc)
Vec associator(const KVAlgebra &A, const Vec &a, const Vec &b, const Vec &c);

struct MixedAssociators {
	Vec abw; // (ab)w − a(bw)
	Vec awb; // (aw)b − a(wb)
	Vec wab; // (wa)b − w(ab)
};
MixedAssociators mixed_associators(const KVAlgebra &A, const KVModule &W, const Vec &a, const Vec &b, const Vec &w);

/// (e_i, e_j, e_k) = (e_j, e_i, e_k) on all basis triples; the witness is the
/// lexicographically first violation.
Verdict is_kv(const KVAlgebra &A);
Verdict is_module(const KVAlgebra &A, const KVModule &W);

Subspace jacobi_algebra(const KVAlgebra &A);
Subspace jacobi_module(const KVAlgebra &A, const KVModule &W);
Subspace center(const KVAlgebra &A);

/// B(i, j, k) = Γ(i, j, k) − Γ(j, i, k)
Tensor3 lie_bracket(const KVAlgebra &A);

KVModule regular_bimodule(const KVAlgebra &A);
/// |A| with the product as left action and zero right action.
KVModule regular_left_module(const KVAlgebra &A);
KVModule zero_module(std::size_t algebra_dim, std::size_t dim);
/// L(W, V) with (a.f)(w) = a(f(w)) − f(aw), (f.a)(w) = f(w)a. The basis of
/// L(W, V) is f_{γ,β}: w_γ ↦ v_β, flattened as γ·dim(V) + β.
KVModule hom_module(const KVAlgebra &A, const KVModule &W, const KVModule &V);
/// q-linear maps W^q → V with the derivation-style left action. Basis index
/// (γ_1 … γ_q; β) flattened big-endian.
KVModule multilinear_module(const KVAlgebra &A, const KVModule &W, const KVModule &V, std::size_t q);
KVModule multilinear_module(const KVAlgebra &A, const KVModule &W, std::size_t q);

/// A ⊕ W with (a, w)(a', w') = (aa', aw' + wa'); A occupies indices [0, n).
KVAlgebra semidirect(const KVAlgebra &A, const KVModule &W);
KVAlgebra direct_sum(const KVAlgebra &A, const KVAlgebra &B);
KVModule direct_sum(const KVModule &W, const KVModule &V);

/// μ'(a, b) = φ(μ(φ⁻¹a, φ⁻¹b)) with φ acting on column vectors.
KVAlgebra change_basis(const KVAlgebra &A, const Mat &phi);
/// Actions conjugated by ψ on the module side.
KVModule change_basis(const KVModule &W, const Mat &psi);

/// Deterministic draw from fixtures, direct sums, semidirect products and
/// small-integer basis changes; the output always passes is_kv.
KVAlgebra random_kv(std::uint64_t seed, std::size_t n_max);
/// Deterministic KV-module of A built from regular, zero, direct-sum, hom and
/// basis-change constructions; always passes is_module.
KVModule random_module(const KVAlgebra &A, std::uint64_t seed, std::size_t m_max);
/// As random_module but with zero right action.
KVModule random_left_module(const KVAlgebra &A, std::uint64_t seed, std::size_t m_max);

} // namespace kv
