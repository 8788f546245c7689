#include "kvcohom/ext.hpp"
#include "kvcohom/errors.hpp"

namespace kv {

std::size_t w_count(const std::vector<std::size_t> &args, std::size_t a_dim)
{
	std::size_t c = 0;
	for (auto i : args)
		c += i >= a_dim;
	return c;
}

std::vector<BigradedComponent> bigrade(const Cochain &f, std::size_t a_dim)
{
	std::vector<BigradedComponent> parts(f.degree + 1);
	for (std::size_t p = 0; p <= f.degree; ++p)
		parts[p] = {p, f.degree - p, Cochain(f.n, f.m, f.degree)};
	const std::size_t N = Cochain::space_dim(f.n, 1, f.degree);
	for (std::size_t t = 0; t < N; ++t) {
		const std::size_t p = w_count(tuple_digits(t, f.n, f.degree), a_dim);
		for (std::size_t b = 0; b < f.m; ++b)
			parts[p].f.values[t * f.m + b] = f.values[t * f.m + b];
	}
	std::vector<BigradedComponent> out;
	for (auto &c : parts)
		if (!c.f.is_zero())
			out.push_back(std::move(c));
	return out;
}

bool is_homogeneous(const Cochain &f, std::size_t a_dim, std::size_t p)
{
	for (const auto &c : bigrade(f, a_dim))
		if (c.p != p)
			return false;
	return true;
}

bool in_upper_filtration(const Cochain &f, std::size_t a_dim, std::size_t p)
{
	for (const auto &c : bigrade(f, a_dim))
		if (c.p < p)
			return false;
	return true;
}

bool in_lower_filtration(const Cochain &f, std::size_t a_dim, std::size_t p)
{
	for (const auto &c : bigrade(f, a_dim))
		if (c.p > p)
			return false;
	return true;
}

KVModule lift_module(const KVAlgebra &A, const KVModule &W, const KVModule &V)
{
	if (W.algebra_dim != A.dim || V.algebra_dim != A.dim)
		throw InputError("modules are not over the given algebra");
	const std::size_t n = A.dim, mv = V.dim;
	KVModule L(n + W.dim, mv);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t x = 0; x < mv; ++x)
			for (std::size_t y = 0; y < mv; ++y) {
				L.left(i, x, y) = V.left(i, x, y);
				L.right(x, i, y) = V.right(x, i, y);
			}
	return L;
}

Cochain e11_coboundary0(const KVAlgebra &A, const KVModule &W, const KVModule &V, const Mat &theta)
{
	const std::size_t n = A.dim, mw = W.dim, mv = V.dim, N = n + mw;
	if (theta.rows() != mv || theta.cols() != mw)
		throw InputError("θ must be a |V|×|W| matrix");
	Cochain out(N, mv, 2);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t al = 0; al < mw; ++al) {
			Vec w = unit_vector(mw, al);
			Vec t = theta.col(al);
			Vec aw = V.left_basis(i, t), wa = V.right_basis(t, i);
			Vec x = theta.apply(W.left_basis(i, w)) - aw;
			Vec y = theta.apply(W.right_basis(w, i)) - wa;
			for (std::size_t b = 0; b < mv; ++b) {
				out.values[(i * N + n + al) * mv + b] = x[b];
				out.values[((n + al) * N + i) * mv + b] = y[b];
			}
		}
	return out;
}

std::vector<std::size_t> e11_tuples(std::size_t a_dim, std::size_t w_dim, std::size_t q)
{
	const std::size_t N = a_dim + w_dim, total = Cochain::space_dim(N, 1, q + 1);
	std::vector<std::size_t> out;
	for (std::size_t t = 0; t < total; ++t)
		if (w_count(tuple_digits(t, N, q + 1), a_dim) == 1)
			out.push_back(t);
	return out;
}

namespace {

std::vector<std::size_t> expand(const std::vector<std::size_t> &tuples, std::size_t m)
{
	std::vector<std::size_t> ix;
	ix.reserve(tuples.size() * m);
	for (auto t : tuples)
		for (std::size_t b = 0; b < m; ++b)
			ix.push_back(t * m + b);
	return ix;
}

} // namespace

Cochain e11_embed(std::size_t a_dim, std::size_t w_dim, std::size_t v_dim, std::size_t q, const Vec &coords)
{
	auto ix = expand(e11_tuples(a_dim, w_dim, q), v_dim);
	if (coords.size() != ix.size())
		throw InputError("coordinate vector does not match C_{1,q}");
	Cochain f(a_dim + w_dim, v_dim, q + 1);
	for (std::size_t i = 0; i < ix.size(); ++i)
		f.values[ix[i]] = coords[i];
	return f;
}

CohomologyReport e11_cohomology(const KVAlgebra &A, const KVModule &W, const KVModule &V, std::size_t q_max)
{
	if (!is_module(A, W) || !is_module(A, V))
		throw Rejected("e11_cohomology needs KV modules");
	KVAlgebra G = semidirect(A, W);
	KVModule L = lift_module(A, W, V);
	check_budget(G.dim, V.dim, q_max + 2, "e11_cohomology");
	std::vector<std::size_t> dims;
	std::vector<Mat> d;
	for (std::size_t q = 0; q <= q_max; ++q) {
		auto cols = expand(e11_tuples(A.dim, W.dim, q), V.dim);
		auto rows = expand(e11_tuples(A.dim, W.dim, q + 1), V.dim);
		dims.push_back(cols.size());
		d.push_back(coboundary_matrix(G, L, q + 1, rows, cols));
	}
	return complex_cohomology(dims, d, 0);
}

ModuleExtension module_extension_from_cocycle(const KVAlgebra &A, const KVModule &W, const KVModule &V, const Cochain &f)
{
	const std::size_t n = A.dim, mw = W.dim, mv = V.dim, N = n + mw;
	if (f.n != N || f.m != mv || f.degree != 2)
		throw InputError("module extension data must be a degree-2 cochain over A⊕W with values in V");
	if (!is_homogeneous(f, n, 1))
		throw InputError("module extension data must have bidegree (1,1)");
	ModuleExtension ext{V, W, KVModule(n, mv + mw)};
	KVModule &T = ext.T;
	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t x = 0; x < mv; ++x)
			for (std::size_t y = 0; y < mv; ++y) {
				T.left(i, x, y) = V.left(i, x, y);
				T.right(x, i, y) = V.right(x, i, y);
			}
		for (std::size_t al = 0; al < mw; ++al) {
			for (std::size_t g = 0; g < mw; ++g) {
				T.left(i, mv + al, mv + g) = W.left(i, al, g);
				T.right(mv + al, i, mv + g) = W.right(al, i, g);
			}
			for (std::size_t b = 0; b < mv; ++b) {
				T.left(i, mv + al, b) = f.values[(i * N + n + al) * mv + b];
				T.right(mv + al, i, b) = f.values[((n + al) * N + i) * mv + b];
			}
		}
	}
	if (auto v = is_module(A, T); !v)
		throw Rejected("extension data is not a cocycle: " + v.witness->describe());
	return ext;
}

Mat canonical_module_section(const ModuleExtension &ext)
{
	Mat s(ext.T.dim, ext.W.dim);
	for (std::size_t al = 0; al < ext.W.dim; ++al)
		s(ext.V.dim + al, al) = 1;
	return s;
}

Cochain cocycle_from_section(const KVAlgebra &A, const ModuleExtension &ext, const Mat &sigma)
{
	const std::size_t n = A.dim, mw = ext.W.dim, mv = ext.V.dim, N = n + mw;
	if (sigma.rows() != mv + mw || sigma.cols() != mw)
		throw InputError("section must be a |T|×|W| matrix");
	for (std::size_t r = 0; r < mw; ++r)
		for (std::size_t c = 0; c < mw; ++c)
			if (sigma(mv + r, c) != (r == c ? 1 : 0))
				throw InputError("σ is not a section of the projection T → W");
	Cochain out(N, mv, 2);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t al = 0; al < mw; ++al) {
			Vec w = unit_vector(mw, al);
			Vec s = sigma.col(al);
			Vec x = ext.T.left_basis(i, s) - sigma.apply(ext.W.left_basis(i, w));
			Vec y = ext.T.right_basis(s, i) - sigma.apply(ext.W.right_basis(w, i));
			for (std::size_t b = 0; b < mw; ++b)
				if (sgn(x[mv + b]) != 0 || sgn(y[mv + b]) != 0)
					throw Error("section cocycle has a component outside V");
			for (std::size_t b = 0; b < mv; ++b) {
				out.values[(i * N + n + al) * mv + b] = x[b];
				out.values[((n + al) * N + i) * mv + b] = y[b];
			}
		}
	return out;
}

std::optional<Mat> extensions_equivalent(const KVAlgebra &A, const KVModule &W, const KVModule &V, const Cochain &f, const Cochain &fp)
{
	const std::size_t mw = W.dim, mv = V.dim;
	if (f.values.size() != fp.values.size())
		throw InputError("cocycles have different shapes");
	Mat M(f.values.size(), mw * mv);
	for (std::size_t al = 0; al < mw; ++al)
		for (std::size_t b = 0; b < mv; ++b) {
			Mat th(mv, mw);
			th(b, al) = 1;
			auto c = e11_coboundary0(A, W, V, th);
			for (std::size_t r = 0; r < c.values.size(); ++r)
				M(r, al * mv + b) = c.values[r];
		}
	auto x = solve(M, f.values - fp.values);
	if (!x)
		return std::nullopt;
	Mat th(mv, mw);
	for (std::size_t al = 0; al < mw; ++al)
		for (std::size_t b = 0; b < mv; ++b)
			th(b, al) = (*x)[al * mv + b];
	return th;
}

ModuleCocycleSystem module_cocycle_system(const KVAlgebra &A, const KVModule &W, const KVModule &V, const Cochain &f)
{
	const std::size_t n = A.dim, mw = W.dim, mv = V.dim, N = n + mw;
	if (f.n != N || f.m != mv || f.degree != 2)
		throw InputError("expected a degree-2 cochain over A⊕W with values in V");
	// θ(a, w) and ψ(a, w) on arbitrary a ∈ A, w ∈ W
	auto theta = [&](const Vec &a, const Vec &w) {
		Vec r = zeros(mv);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t al = 0; al < mw; ++al)
				if (sgn(a[i]) != 0 && sgn(w[al]) != 0)
					r += (a[i] * w[al]) * f.at({i, n + al});
		return r;
	};
	auto psi = [&](const Vec &a, const Vec &w) {
		Vec r = zeros(mv);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t al = 0; al < mw; ++al)
				if (sgn(a[i]) != 0 && sgn(w[al]) != 0)
					r += (a[i] * w[al]) * f.at({n + al, i});
		return r;
	};
	ModuleCocycleSystem sys{zeros(n * n * mw * mv), zeros(n * n * mw * mv)};
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t al = 0; al < mw; ++al) {
				Vec a = unit_vector(n, i), b = unit_vector(n, j), w = unit_vector(mw, al);
				Vec t = V.act_left(b, theta(a, w)) - V.act_left(a, theta(b, w)) + theta(A.mul(a, b), w) + theta(b, W.act_left(a, w)) -
				        theta(A.mul(b, a), w) - theta(a, W.act_left(b, w));
				Vec x = psi(b, W.act_left(a, w)) - V.act_left(a, psi(b, w)) + psi(A.mul(a, b), w) - V.act_right(psi(a, w), b) -
				        psi(b, W.act_right(w, a)) - theta(a, W.act_right(w, b)) + V.act_right(theta(a, w), b);
				const std::size_t base = ((i * n + j) * mw + al) * mv;
				for (std::size_t be = 0; be < mv; ++be) {
					sys.theta_part[base + be] = t[be];
					sys.mixed_part[base + be] = x[be];
				}
			}
	return sys;
}

AlgebraExtension algebra_extension_from_cocycle(const KVAlgebra &A, const KVModule &W, const Cochain &omega)
{
	const std::size_t n = A.dim, m = W.dim;
	if (W.algebra_dim != n)
		throw InputError("module is not over the given algebra");
	if (omega.n != n || omega.m != m || omega.degree != 2)
		throw InputError("ω must be a 2-cochain in C_2(A, W)");
	AlgebraExtension ext{n, m, KVAlgebra(m + n, A.name.empty() ? std::string() : A.name + "-ext")};
	Tensor3 &P = ext.T.product;
	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t j = 0; j < n; ++j) {
			for (std::size_t k = 0; k < n; ++k)
				P(m + i, m + j, m + k) = A.product(i, j, k);
			for (std::size_t b = 0; b < m; ++b)
				P(m + i, m + j, b) = omega.values[(i * n + j) * m + b];
		}
		for (std::size_t al = 0; al < m; ++al)
			for (std::size_t b = 0; b < m; ++b) {
				P(m + i, al, b) = W.left(i, al, b);
				P(al, m + i, b) = W.right(al, i, b);
			}
	}
	return ext;
}

Cochain extension_defect(const AlgebraExtension &ext)
{
	const std::size_t n = ext.n, m = ext.m, N = n + m;
	Cochain d(n, m, 3);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				Vec a = unit_vector(N, m + i), b = unit_vector(N, m + j), c = unit_vector(N, m + k);
				Vec r = associator(ext.T, a, b, c) - associator(ext.T, b, a, c);
				for (std::size_t x = 0; x < m; ++x)
					d.values[((i * n + j) * n + k) * m + x] = r[x];
			}
	return d;
}

Mat canonical_algebra_section(const AlgebraExtension &ext)
{
	Mat s(ext.m + ext.n, ext.n);
	for (std::size_t i = 0; i < ext.n; ++i)
		s(ext.m + i, i) = 1;
	return s;
}

Cochain algebra_cocycle_from_section(const KVAlgebra &A, const AlgebraExtension &ext, const Mat &sigma)
{
	const std::size_t n = ext.n, m = ext.m;
	if (A.dim != n || sigma.rows() != m + n || sigma.cols() != n)
		throw InputError("section must be an (m+n)×n matrix");
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t c = 0; c < n; ++c)
			if (sigma(m + r, c) != (r == c ? 1 : 0))
				throw InputError("σ is not a section of the projection T → A");
	Cochain out(n, m, 2);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			Vec x = ext.T.mul(sigma.col(i), sigma.col(j)) - sigma.apply(A.mul_basis(i, j));
			for (std::size_t k = 0; k < n; ++k)
				if (sgn(x[m + k]) != 0)
					throw Error("section cocycle has a component outside W");
			for (std::size_t b = 0; b < m; ++b)
				out.values[(i * n + j) * m + b] = x[b];
		}
	return out;
}

std::optional<Cochain> algebra_extensions_equivalent(const KVAlgebra &A, const KVModule &W, const Cochain &omega, const Cochain &omegap)
{
	if (omega.degree != 2 || omegap.degree != 2 || omega.values.size() != omegap.values.size())
		throw InputError("ω and ω' must be 2-cochains of the same shape");
	auto x = solve(coboundary_matrix(A, W, 1), omega.values - omegap.values);
	if (!x)
		return std::nullopt;
	return Cochain(A.dim, W.dim, 1, *x);
}

} // namespace kv
