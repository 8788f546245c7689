#include "kvcohom/graded.hpp"
#include "kvcohom/errors.hpp"
#include "kvcohom/ext.hpp"
#include "kvcohom/fixtures.hpp"
#include "kvcohom/random.hpp"

namespace kv {

namespace {

Vec theta_of(const Tensor3 &theta, const Vec &w, const Vec &wp)
{
	const std::size_t m = theta.d0;
	Vec out = zeros(m);
	for (std::size_t a = 0; a < m; ++a) {
		if (sgn(w[a]) == 0)
			continue;
		for (std::size_t b = 0; b < m; ++b) {
			if (sgn(wp[b]) == 0)
				continue;
			const Rat c = w[a] * wp[b];
			for (std::size_t g = 0; g < m; ++g)
				out[g] += c * theta(a, b, g);
		}
	}
	return out;
}

Vec psi_of(const Tensor3 &psi, const Vec &a, const Vec &w)
{
	const std::size_t n = psi.d0, m = psi.d1;
	Vec out = zeros(n);
	for (std::size_t i = 0; i < n; ++i) {
		if (sgn(a[i]) == 0)
			continue;
		for (std::size_t al = 0; al < m; ++al) {
			if (sgn(w[al]) == 0)
				continue;
			const Rat c = a[i] * w[al];
			for (std::size_t k = 0; k < n; ++k)
				out[k] += c * psi(i, al, k);
		}
	}
	return out;
}

void check_shapes(const GradedKVAlgebra &G, const ConnectionlikePair &p)
{
	const std::size_t n = G.n(), m = G.m();
	if (p.theta.d0 != m || p.theta.d1 != m || p.theta.d2 != m)
		throw InputError("theta must be m×m×m");
	if (p.psi.d0 != n || p.psi.d1 != m || p.psi.d2 != n)
		throw InputError("psi must be n×m×n");
}

} // namespace

KVAlgebra GradedKVAlgebra::total() const { return semidirect(even, odd); }

GradedKVAlgebra make_graded(const KVAlgebra &A, const KVModule &W)
{
	if (W.algebra_dim != A.dim)
		throw InputError("module is over an algebra of a different dimension");
	if (!W.is_left())
		throw InputError("the odd part must have zero right action");
	if (auto v = is_module(A, W); !v)
		throw Rejected("odd part is not a module: " + v.witness->describe());
	GradedKVAlgebra G{A, W};
	if (auto v = is_kv(G.total()); !v)
		throw Rejected("graded product is not KV: " + v.witness->describe());
	return G;
}

ConnectionlikePair zero_pair(const GradedKVAlgebra &G)
{
	return {Tensor3(G.m(), G.m(), G.m()), Tensor3(G.n(), G.m(), G.n())};
}

Cochain pair_cochain(const GradedKVAlgebra &G, const ConnectionlikePair &pair)
{
	check_shapes(G, pair);
	const std::size_t n = G.n(), m = G.m(), d = n + m;
	Cochain c(d, d, 2);
	for (std::size_t a = 0; a < m; ++a)
		for (std::size_t b = 0; b < m; ++b)
			for (std::size_t g = 0; g < m; ++g)
				c.values[((n + a) * d + n + b) * d + n + g] = pair.theta(a, b, g);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t a = 0; a < m; ++a)
			for (std::size_t k = 0; k < n; ++k) {
				c.values[(i * d + n + a) * d + k] = pair.psi(i, a, k);
				c.values[((n + a) * d + i) * d + k] = pair.psi(i, a, k);
			}
	return c;
}

Cochain graded_component(const GradedKVAlgebra &G, const Cochain &f, std::size_t r, std::size_t s, std::size_t p)
{
	const std::size_t n = G.n(), d = n + G.m();
	if (f.n != d || f.m != d)
		throw InputError("cochain is not over the graded algebra");
	Cochain out = f;
	const std::size_t N = Cochain::space_dim(d, 1, f.degree);
	for (std::size_t t = 0; t < N; ++t) {
		const std::size_t odd = w_count(tuple_digits(t, d, f.degree), n);
		const bool keep_tuple = odd == s && f.degree - odd == r;
		for (std::size_t b = 0; b < d; ++b)
			if (!keep_tuple || (b >= n) != (p == 1))
				out.values[t * d + b] = 0;
	}
	return out;
}

Verdict is_kv_chain(const Tensor3 &theta)
{
	if (theta.d0 != theta.d1 || theta.d1 != theta.d2)
		throw InputError("theta must be m×m×m");
	KVAlgebra W(theta.d0);
	W.product = theta;
	// the θ-associator is the negated algebra associator; symmetry is unaffected
	auto v = is_kv(W);
	if (v.witness)
		v.witness->identity = "(w,w',w'')_θ = (w',w,w'')_θ";
	return v;
}

Verdict is_theta_cocycle(const GradedKVAlgebra &G, const Tensor3 &theta)
{
	const std::size_t n = G.n(), m = G.m();
	ConnectionlikePair p = zero_pair(G);
	p.theta = theta;
	check_shapes(G, p);

	Verdict direct;
	for (std::size_t i = 0; i < n && direct.ok; ++i)
		for (std::size_t a = 0; a < m && direct.ok; ++a)
			for (std::size_t b = 0; b < m && direct.ok; ++b) {
				auto ea = unit_vector(m, a), eb = unit_vector(m, b);
				Vec lhs = G.odd.left_basis(i, theta_of(theta, ea, eb));
				Vec rhs = theta_of(theta, G.odd.left_basis(i, ea), eb) + theta_of(theta, ea, G.odd.left_basis(i, eb));
				if (lhs != rhs)
					direct = {false, Witness{"aθ(w,w') = θ(aw,w') + θ(w,aw')", {i, a, b}, lhs, rhs}};
			}

	const KVAlgebra T = G.total();
	const bool via_coboundary = coboundary(T, regular_bimodule(T), pair_cochain(G, p)).is_zero();
	if (via_coboundary != direct.ok)
		throw Error("derivation rule and δθ = 0 disagree");
	return direct;
}

ConnectionlikeReport is_connectionlike(const GradedKVAlgebra &G, const ConnectionlikePair &pair)
{
	check_shapes(G, pair);
	const std::size_t n = G.n(), m = G.m();
	ConnectionlikeReport r;
	r.degenerate = pair.theta.is_zero() && pair.psi.is_zero();

	auto note = [&](bool ok, Witness w) {
		if (!ok && !r.witness)
			r.witness = std::move(w);
	};

	auto cyc = is_theta_cocycle(G, pair.theta);
	auto chain = is_kv_chain(pair.theta);
	r.system1 = cyc.ok;
	r.c2 = cyc.ok && chain.ok;
	if (!cyc.ok)
		note(false, *cyc.witness);
	else if (!chain.ok)
		note(false, *chain.witness);

	r.system2 = true;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t a = 0; a < m; ++a) {
				auto ei = unit_vector(n, i), ej = unit_vector(n, j), wa = unit_vector(m, a);
				Vec lhs = G.even.mul(ei, psi_of(pair.psi, ej, wa));
				Vec rhs = psi_of(pair.psi, G.even.mul(ei, ej), wa) + psi_of(pair.psi, ej, G.odd.left_basis(i, wa));
				if (lhs != rhs) {
					note(r.system2, Witness{"aψ(a',w) = ψ(aa',w) + ψ(a',aw)", {i, j, a}, lhs, rhs});
					r.system2 = false;
				}
			}

	r.c3_definition = r.c3_proof = true;
	for (std::size_t a = 0; a < m; ++a)
		for (std::size_t b = 0; b < m; ++b)
			for (std::size_t i = 0; i < n; ++i) {
				auto wa = unit_vector(m, a), wb = unit_vector(m, b), ei = unit_vector(n, i);
				// ψ(θ(w,w'),a) = ψ(w,ψ(w',a))
				Vec l1 = psi_of(pair.psi, ei, theta_of(pair.theta, wa, wb));
				Vec r1 = psi_of(pair.psi, psi_of(pair.psi, ei, wb), wa);
				if (l1 != r1) {
					note(r.c3_definition, Witness{"ψ(θ(w,w'),a) = ψ(w,ψ(w',a))", {a, b, i}, l1, r1});
					r.c3_definition = false;
				}
				// ψ(a,θ(w',w'')) = ψ(ψ(a,w'),w'')
				Vec l2 = l1;
				Vec r2 = psi_of(pair.psi, psi_of(pair.psi, ei, wa), wb);
				if (l2 != r2) {
					note(r.c3_proof, Witness{"ψ(a,θ(w',w'')) = ψ(ψ(a,w'),w'')", {i, a, b}, l2, r2});
					r.c3_proof = false;
				}
			}
	r.system3 = r.c3_proof;

	const KVAlgebra T = G.total();
	r.cocycle = coboundary(T, regular_bimodule(T), pair_cochain(G, pair)).is_zero();
	return r;
}

KVAlgebra deform_graded(const GradedKVAlgebra &G, const Tensor3 &theta)
{
	const std::size_t n = G.n(), m = G.m();
	if (theta.d0 != m || theta.d1 != m || theta.d2 != m)
		throw InputError("theta must be m×m×m");
	KVAlgebra T = G.total();
	for (std::size_t a = 0; a < m; ++a)
		for (std::size_t b = 0; b < m; ++b)
			for (std::size_t g = 0; g < m; ++g)
				T.product(n + a, n + b, n + g) += theta(a, b, g);
	return T;
}

ExtractedPair connectionlike_from_cocycle(const GradedKVAlgebra &G, const Cochain &c)
{
	const std::size_t n = G.n(), m = G.m(), d = n + m;
	if (c.n != d || c.m != d || c.degree != 2)
		throw InputError("expected a 2-cochain of C(G, G)");
	ConnectionlikePair p = zero_pair(G);
	for (std::size_t x = 0; x < d; ++x)
		for (std::size_t y = 0; y < d; ++y)
			for (std::size_t k = 0; k < d; ++k) {
				const Rat &v = c.values[(x * d + y) * d + k];
				const bool xo = x >= n, yo = y >= n, ko = k >= n;
				if (xo && yo && ko)
					p.theta(x - n, y - n, k - n) = v;
				else if (!xo && yo && !ko)
					p.psi(x, y - n, k) = v;
				else if (xo && !yo && !ko) {
					if (v != c.values[(y * d + x) * d + k])
						return {std::nullopt, "ψ is not symmetric"};
				} else if (sgn(v) != 0)
					return {std::nullopt, "component outside θ and ψ at (" + std::to_string(x) + "," + std::to_string(y) +
					                          ";" + std::to_string(k) + ")"};
			}
	const KVAlgebra T = G.total();
	if (!coboundary(T, regular_bimodule(T), c).is_zero())
		return {std::nullopt, "not a cocycle"};
	if (auto v = is_kv_chain(p.theta); !v)
		return {std::nullopt, "θ is not a KV-chain: " + v.witness->describe()};
	return {p, {}};
}

std::size_t exact_connectionlike_dim(const GradedKVAlgebra &G)
{
	const std::size_t n = G.n(), m = G.m();
	const KVAlgebra T = G.total();
	Subspace B = image(coboundary_matrix(T, regular_bimodule(T), 1));
	std::vector<Vec> shaped;
	for (std::size_t a = 0; a < m; ++a)
		for (std::size_t b = 0; b < m; ++b)
			for (std::size_t g = 0; g < m; ++g) {
				ConnectionlikePair p = zero_pair(G);
				p.theta(a, b, g) = 1;
				shaped.push_back(pair_cochain(G, p).values);
			}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t a = 0; a < m; ++a)
			for (std::size_t k = 0; k < n; ++k) {
				ConnectionlikePair p = zero_pair(G);
				p.psi(i, a, k) = 1;
				shaped.push_back(pair_cochain(G, p).values);
			}
	Subspace S = Subspace::span(B.ambient_dim(), shaped);
	return intersect(B, S).dim();
}

GradedKVAlgebra flat_model()
{
	KVAlgebra A = fixture_aff();
	KVModule W(2, 3); // basis 1, x, x²
	W.left(0, 1, 1) = 1;
	W.left(0, 2, 2) = 2;
	W.left(1, 1, 2) = 1;
	return make_graded(A, W);
}

ConnectionlikePair flat_model_pair()
{
	GradedKVAlgebra G = flat_model();
	ConnectionlikePair p = zero_pair(G);
	for (std::size_t a = 0; a < 3; ++a)
		for (std::size_t b = 0; a + b < 3; ++b)
			p.theta(a, b, a + b) = 1;
	p.psi(0, 0, 0) = 1; // 1·e₁ = e₁
	p.psi(1, 0, 1) = 1; // 1·e₂ = e₂
	p.psi(0, 1, 1) = 1; // x·e₁ = e₂
	return p;
}

GradedKVAlgebra random_graded(std::uint64_t seed, std::size_t n_max, std::size_t m_max)
{
	KVAlgebra A = random_kv(seed, n_max);
	return make_graded(A, random_left_module(A, seed ^ 0x6a09e667f3bcc908ULL, m_max));
}

} // namespace kv
