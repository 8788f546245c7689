#include "kvcohom/deform.hpp"
#include "kvcohom/errors.hpp"

namespace kv {

Cochain as_cochain(const Tensor3 &product)
{
	if (product.d0 != product.d1 || product.d1 != product.d2)
		throw InputError("product tensor is not cubic");
	return Cochain(product.d0, product.d0, 2, product.v);
}

Tensor3 as_tensor(const Cochain &mu)
{
	if (mu.degree != 2 || mu.n != mu.m)
		throw InputError("expected a bilinear map A×A → A");
	Tensor3 t(mu.n, mu.n, mu.n);
	t.v = mu.values;
	return t;
}

Vec bilinear(const Cochain &mu, const Vec &a, const Vec &b)
{
	const std::size_t n = mu.n;
	Vec r = zeros(n);
	for (std::size_t i = 0; i < n; ++i) {
		if (sgn(a[i]) == 0)
			continue;
		for (std::size_t j = 0; j < n; ++j) {
			if (sgn(b[j]) == 0)
				continue;
			const Rat c = a[i] * b[j];
			for (std::size_t k = 0; k < n; ++k)
				if (sgn(mu.values[(i * n + j) * n + k]) != 0)
					r[k] += c * mu.values[(i * n + j) * n + k];
		}
	}
	return r;
}

namespace {

void require_bilinear(const Cochain &mu, std::size_t n)
{
	if (mu.degree != 2 || mu.n != n || mu.m != n)
		throw InputError("bilinear map has the wrong shape");
}

template <class F>
Cochain trilinear(std::size_t n, F value)
{
	Cochain out(n, n, 3);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				Vec v = value(unit_vector(n, i), unit_vector(n, j), unit_vector(n, k));
				for (std::size_t x = 0; x < n; ++x)
					out.values[((i * n + j) * n + k) * n + x] = v[x];
			}
	return out;
}

} // namespace

Cochain kv_pairing(const Cochain &mu, const Cochain &nu)
{
	const std::size_t n = mu.n;
	require_bilinear(mu, n);
	require_bilinear(nu, n);
	return trilinear(n, [&](const Vec &a, const Vec &b, const Vec &c) {
		return bilinear(mu, bilinear(nu, a, b), c) - bilinear(mu, a, bilinear(nu, b, c)) - bilinear(mu, bilinear(nu, b, a), c) +
		       bilinear(mu, b, bilinear(nu, a, c));
	});
}

Cochain kv_bracket(const Cochain &mu, const Cochain &nu)
{
	const std::size_t n = mu.n;
	require_bilinear(mu, n);
	require_bilinear(nu, n);
	return trilinear(n, [&](const Vec &a, const Vec &b, const Vec &c) {
		Vec r = bilinear(nu, bilinear(mu, a, b), c) - bilinear(mu, a, bilinear(nu, b, c));
		r += bilinear(nu, b, bilinear(mu, a, c));
		r -= bilinear(mu, bilinear(nu, b, a), c);
		r += bilinear(mu, b, bilinear(nu, a, c));
		r -= bilinear(nu, bilinear(mu, b, a), c);
		r -= bilinear(nu, a, bilinear(mu, b, c));
		r += bilinear(mu, bilinear(nu, a, b), c);
		return r;
	});
}

Cochain MultiplicationJet::mu(std::size_t k) const
{
	if (k == 0)
		return as_cochain(base.product);
	if (k > coefficients.size())
		return Cochain(base.dim, base.dim, 2);
	return coefficients[k - 1];
}

JetResiduals jet_residuals(const MultiplicationJet &jet)
{
	const std::size_t n = jet.base.dim, K = jet.order();
	for (const auto &c : jet.coefficients)
		require_bilinear(c, n);
	const KVModule R = regular_bimodule(jet.base);
	JetResiduals out;
	for (std::size_t k = 1; k <= K; ++k) {
		Cochain E(n, n, 3), half(n, n, 3);
		for (std::size_t i = 0; i <= k; ++i)
			E.values += kv_pairing(jet.mu(i), jet.mu(k - i)).values;
		for (std::size_t i = 1; i < k; ++i)
			half.values += kv_bracket(jet.mu(i), jet.mu(k - i)).values;
		Cochain bridge = coboundary(jet.base, R, jet.mu(k));
		bridge.values += Rat(1, 2) * half.values;
		if (bridge != E)
			throw Error("order " + std::to_string(k) + ": residual disagrees with δμ_k + ½Σ d_{μ_i}μ_j");
		if (!out.failing_order && !E.is_zero()) {
			out.failing_order = k;
			for (std::size_t t = 0; t < n * n * n; ++t) {
				Vec v(E.values.begin() + static_cast<long>(t * n), E.values.begin() + static_cast<long>((t + 1) * n));
				if (!is_zero(v)) {
					out.witness = Witness{"order-" + std::to_string(k) + " residual", tuple_digits(t, n, 3), v, zeros(n)};
					break;
				}
			}
		}
		out.E.push_back(std::move(E));
	}
	return out;
}

NextOrder solve_next_order(const MultiplicationJet &jet)
{
	auto res = jet_residuals(jet);
	if (!res.ok())
		throw Rejected("lower-order residuals do not vanish: " + res.witness->describe());
	if (auto v = is_kv(jet.base); !v)
		throw Rejected("jet base is not KV: " + v.witness->describe());
	const std::size_t n = jet.base.dim, k = jet.order() + 1;
	NextOrder out;
	out.k = k;
	out.R = Cochain(n, n, 3);
	for (std::size_t i = 1; i < k; ++i)
		out.R.values += Rat(-1, 2) * kv_bracket(jet.mu(i), jet.mu(k - i)).values;
	const KVModule W = regular_bimodule(jet.base);
	out.delta_R = coboundary(jet.base, W, out.R);
	Mat M = coboundary_matrix(jet.base, W, 2);
	if (auto x = solve(M, out.R.values)) {
		out.mu_k = Cochain(n, n, 2, *x);
	} else {
		Subspace left = kernel(M.transpose());
		for (const auto &y : left.basis())
			if (sgn(dot(y, out.R.values)) != 0) {
				out.certificate = y;
				break;
			}
		if (!out.certificate)
			throw Error("unsolvable order without a separating functional");
	}
	return out;
}

std::vector<Mat> formal_inverse(const BasisFlowJet &flow, std::size_t K)
{
	const std::size_t n = flow.theta.empty() ? 0 : flow.theta[0].rows();
	std::vector<Mat> P{Mat::identity(n)};
	for (std::size_t k = 1; k <= K; ++k) {
		Mat acc(n, n);
		for (std::size_t j = 1; j <= k && j <= flow.theta.size(); ++j)
			acc = acc - flow.theta[j - 1] * P[k - j];
		P.push_back(acc);
	}
	return P;
}

Cochain endomorphism_cochain(const Mat &theta)
{
	const std::size_t n = theta.rows();
	Cochain f(n, n, 1);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t k = 0; k < n; ++k)
			f.values[i * n + k] = theta(k, i);
	return f;
}

MultiplicationJet pushforward_jet(const KVAlgebra &A, const BasisFlowJet &flow, std::size_t K)
{
	const std::size_t n = A.dim;
	for (const auto &t : flow.theta)
		if (t.rows() != n || t.cols() != n)
			throw InputError("flow coefficients must be n×n");
	if (flow.theta.empty())
		return MultiplicationJet{A, std::vector<Cochain>(K, Cochain(n, n, 2))};
	auto P = formal_inverse(flow, K);
	auto Phi = [&](std::size_t r) { return r == 0 ? Mat::identity(n) : (r <= flow.theta.size() ? flow.theta[r - 1] : Mat(n, n)); };
	MultiplicationJet jet{A, {}};
	for (std::size_t k = 1; k <= K; ++k) {
		Cochain mu(n, n, 2);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j) {
				Vec v = zeros(n);
				for (std::size_t r = 0; r <= k; ++r)
					for (std::size_t s = 0; r + s <= k; ++s) {
						const std::size_t u = k - r - s;
						v += Phi(r).apply(A.mul(P[s].col(i), P[u].col(j)));
					}
				for (std::size_t x = 0; x < n; ++x)
					mu.values[(i * n + j) * n + x] = v[x];
			}
		jet.coefficients.push_back(std::move(mu));
	}
	return jet;
}

RigidityReport rigidity_report(const KVAlgebra &A)
{
	auto rep = cohomology(A, regular_bimodule(A), 2);
	const auto &d = rep.at(2);
	RigidityReport out;
	out.dim_Z2 = d.dim_Z;
	out.dim_B2 = d.dim_B;
	out.dim_H2 = d.dim_H;
	out.cocycle_basis = kernel(coboundary_matrix(A, regular_bimodule(A), 2)).basis();
	out.class_representatives = d.representatives;
	out.rigid = d.dim_H == 0;
	return out;
}

CurvatureCheck curvature_check(const KVAlgebra &A, const Cochain &S)
{
	const std::size_t n = A.dim;
	require_bilinear(S, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < i; ++j)
			if (S.at({i, j}) != S.at({j, i}))
				throw InputError("S is not symmetric");
	if (auto v = is_kv(A); !v)
		throw Rejected("curvature_check needs a KV algebra: " + v.witness->describe());
	Cochain mu = as_cochain(A.product);
	Cochain mup = mu;
	mup.values += S.values;
	KVAlgebra L(n);
	L.product = lie_bracket(A);
	CurvatureCheck out;
	out.R_direct = trilinear(n, [&](const Vec &x, const Vec &y, const Vec &z) {
		return bilinear(mup, x, bilinear(mup, y, z)) - bilinear(mup, y, bilinear(mup, x, z)) - bilinear(mup, L.mul(x, y), z);
	});
	out.R_comm = trilinear(n, [&](const Vec &x, const Vec &y, const Vec &z) {
		return bilinear(S, x, bilinear(S, y, z)) - bilinear(S, y, bilinear(S, x, z));
	});
	out.residual = Cochain(n, n, 3, out.R_direct.values - out.R_comm.values);
	out.delta_S = coboundary(A, regular_bimodule(A), S);
	if (out.residual.values != Rat(-1) * out.delta_S.values)
		throw Error("curvature residual differs from −δS");
	return out;
}

} // namespace kv
