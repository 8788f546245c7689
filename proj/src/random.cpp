#include "kvcohom/random.hpp"
#include "kvcohom/algebra.hpp"
#include "kvcohom/errors.hpp"
#include "kvcohom/fixtures.hpp"

namespace kv {

Mat Rng::invertible(std::size_t n)
{
	Mat L = Mat::identity(n), U = Mat::identity(n), D = Mat::identity(n);
	static const Rat diag[] = {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(1, 2), Rat(-1, 2)};
	for (std::size_t i = 0; i < n; ++i) {
		D(i, i) = diag[below(6)];
		for (std::size_t j = 0; j < i; ++j) {
			L(i, j) = range(-1, 1);
			U(j, i) = range(-1, 1);
		}
	}
	return D * L * U;
}

namespace {

KVAlgebra random_fixture(Rng &rng, std::size_t n_max)
{
	std::vector<KVAlgebra> pool = {fixture_assoc1(), fixture_zero(1)};
	if (n_max >= 2) {
		pool.push_back(fixture_aff());
		pool.push_back(fixture_lsa2());
		pool.push_back(fixture_zero(2));
	}
	if (n_max >= 3)
		pool.push_back(fixture_ut2());
	return pool[rng.below(pool.size())];
}

/// 1-dim left module: a·w = λ(a)w with λ vanishing on [A, A].
KVModule random_character(const KVAlgebra &A, Rng &rng)
{
	const std::size_t n = A.dim;
	Tensor3 B = lie_bracket(A);
	Mat M(n * n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				M(i * n + j, k) = B(i, j, k);
	// λ ∈ ker Mᵀ-style: λ·[e_i, e_j] = 0 for all i, j
	Subspace ann = kernel(M);
	KVModule W(n, 1);
	for (const auto &b : ann.basis()) {
		Rat c = rng.range(-2, 2);
		for (std::size_t i = 0; i < n; ++i)
			W.left(i, 0, 0) += c * b[i];
	}
	return W;
}

KVAlgebra draw_kv(Rng &rng, std::size_t n_max, int depth);

KVModule draw_module(const KVAlgebra &A, Rng &rng, std::size_t m_max, bool left_only, int depth)
{
	const std::size_t n = A.dim;
	KVModule W;
	for (;;) {
		switch (rng.below(depth > 0 ? 6 : 4)) {
		case 0:
			W = zero_module(n, 1 + rng.below(m_max));
			break;
		case 1:
			if (n > m_max)
				continue;
			W = left_only || rng.coin() ? regular_left_module(A) : regular_bimodule(A);
			break;
		case 2:
			W = random_character(A, rng);
			break;
		case 3:
			W = left_only || rng.coin() ? regular_left_module(A) : regular_bimodule(A);
			if (n > m_max)
				W = random_character(A, rng);
			break;
		case 4: {
			if (m_max < 2)
				continue;
			std::size_t a = 1 + rng.below(m_max - 1);
			W = direct_sum(draw_module(A, rng, a, left_only, depth - 1), draw_module(A, rng, m_max - a, left_only, depth - 1));
			break;
		}
		default: {
			// L(U, V) has dim |U|·|V|; a left V keeps it a left module
			std::size_t vmax = std::max<std::size_t>(1, m_max / 2);
			KVModule V = draw_module(A, rng, vmax, true, depth - 1);
			std::size_t umax = m_max / V.dim;
			if (umax == 0)
				continue;
			KVModule U = draw_module(A, rng, umax, rng.coin(), depth - 1);
			W = hom_module(A, U, V);
			break;
		}
		}
		break;
	}
	if (W.dim > 1 && rng.coin())
		W = change_basis(W, rng.invertible(W.dim));
	return W;
}

KVAlgebra draw_kv(Rng &rng, std::size_t n_max, int depth)
{
	KVAlgebra A;
	std::size_t kind = depth > 0 && n_max >= 2 ? rng.below(4) : 0;
	if (kind == 1) {
		std::size_t a = 1 + rng.below(n_max - 1);
		A = direct_sum(draw_kv(rng, a, depth - 1), draw_kv(rng, n_max - a, depth - 1));
	} else if (kind == 2) {
		KVAlgebra B = draw_kv(rng, n_max - 1, depth - 1);
		KVModule W = draw_module(B, rng, n_max - B.dim, rng.coin(), depth - 1);
		A = semidirect(B, W);
	} else {
		A = random_fixture(rng, n_max);
	}
	if (A.dim > 1 && rng.coin(2, 3))
		A = change_basis(A, rng.invertible(A.dim));
	return A;
}

} // namespace

KVAlgebra random_kv(std::uint64_t seed, std::size_t n_max)
{
	if (n_max == 0)
		throw InputError("random_kv needs n_max >= 1");
	if (seed == 0)
		return n_max >= 2 ? fixture_aff() : fixture_assoc1();
	Rng rng(seed);
	KVAlgebra A = draw_kv(rng, n_max, 2);
	A.name = "random" + std::to_string(seed);
	auto v = is_kv(A);
	if (!v)
		throw Error("random_kv produced a non-KV algebra: " + v.witness->describe());
	return A;
}

KVModule random_module(const KVAlgebra &A, std::uint64_t seed, std::size_t m_max)
{
	if (m_max == 0)
		throw InputError("random_module needs m_max >= 1");
	Rng rng(seed ^ 0x6d6f64756c65ULL);
	KVModule W = draw_module(A, rng, m_max, false, 2);
	auto v = is_module(A, W);
	if (!v)
		throw Error("random_module produced a non-module: " + v.witness->describe());
	return W;
}

KVModule random_left_module(const KVAlgebra &A, std::uint64_t seed, std::size_t m_max)
{
	if (m_max == 0)
		throw InputError("random_left_module needs m_max >= 1");
	Rng rng(seed ^ 0x6c656674ULL);
	KVModule W = draw_module(A, rng, m_max, true, 2);
	auto v = is_module(A, W);
	if (!v || !W.is_left())
		throw Error("random_left_module produced an invalid module");
	return W;
}

} // namespace kv
