#include "kvcohom/proptest.hpp"
#include "kvcohom/deform.hpp"
#include "kvcohom/errors.hpp"
#include "kvcohom/ext.hpp"
#include "kvcohom/graded.hpp"
#include "kvcohom/random.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace kv {

namespace {

using Check = std::function<std::optional<std::string>(std::uint64_t, Variant)>;

Cochain random_cochain(Rng &rng, std::size_t n, std::size_t m, std::size_t q)
{
	Cochain f(n, m, q);
	for (auto &x : f.values)
		if (rng.coin(2, 3))
			x = rng.small_rat();
	return f;
}

Vec combo(Rng &rng, const std::vector<Vec> &vs, std::size_t dim)
{
	Vec v = zeros(dim);
	for (const auto &b : vs)
		v += Rat(rng.range(-2, 2)) * b;
	return v;
}

std::string tuple_str(const std::vector<std::size_t> &t)
{
	std::ostringstream os;
	os << '(';
	for (std::size_t i = 0; i < t.size(); ++i)
		os << (i ? "," : "") << t[i];
	os << ')';
	return os.str();
}

/// First nonzero entry of f, as "f(i,j,…)_β = v".
std::string first_entry(const char *label, const Cochain &f)
{
	for (std::size_t k = 0; k < f.values.size(); ++k)
		if (sgn(f.values[k]) != 0)
			return std::string(label) + tuple_str(tuple_digits(k / f.m, f.n, f.degree)) + "_" + std::to_string(k % f.m) +
			       " = " + to_string(f.values[k]);
	return std::string(label) + " = 0";
}

std::string shape(const KVAlgebra &A, const KVModule &W)
{
	return "n=" + std::to_string(A.dim) + " m=" + std::to_string(W.dim);
}

std::optional<std::string> delta_squared(std::uint64_t s, Variant v)
{
	Rng rng(s ^ 0x243f6a8885a308d3ULL);
	auto A = random_kv(s, 3);
	auto W = random_module(A, s + 101, 3);
	const std::size_t q = 1 + rng.below(2);
	auto f = random_cochain(rng, A.dim, W.dim, q);
	if (coboundary(A, W, coboundary(A, W, f, v), v).is_zero())
		return std::nullopt;
	// shrink to the first basis cochain that still fails
	for (std::size_t k = 0; k < f.values.size(); ++k) {
		Cochain e(A.dim, W.dim, q);
		e.values[k] = 1;
		auto dd = coboundary(A, W, coboundary(A, W, e, v), v);
		if (!dd.is_zero())
			return shape(A, W) + " q=" + std::to_string(q) + ": f = e" + tuple_str(tuple_digits(k / W.dim, A.dim, q)) + "⊗w" +
			       std::to_string(k % W.dim) + ", " + first_entry("δδf", dd);
	}
	return shape(A, W) + ": δδf ≠ 0 for a random f but no basis cochain fails";
}

std::optional<std::string> degree0_bridge(std::uint64_t s, Variant v)
{
	Rng rng(s ^ 0x13198a2e03707344ULL);
	auto A = random_kv(s, 3);
	auto W = random_module(A, s + 202, 3);
	const std::size_t n = A.dim;
	Vec w = rng.small_vec(W.dim);
	auto ddw = coboundary(A, W, degree0_map(A, W, w), v);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			auto x = mixed_associators(A, W, unit_vector(n, i), unit_vector(n, j), w);
			if (ddw.at({i, j}) != Rat(-1) * x.abw)
				return shape(A, W) + ": δδw(e" + std::to_string(i) + ",e" + std::to_string(j) + ") ≠ −(a,b,w)";
		}
	Subspace J = jacobi_module(A, W);
	Vec j = combo(rng, J.basis(), W.dim);
	auto dd = coboundary(A, W, coboundary0(A, W, j), v);
	if (!dd.is_zero())
		return shape(A, W) + ": w ∈ J(W) but " + first_entry("δδw", dd);
	return std::nullopt;
}

std::optional<std::string> bidegree_law(std::uint64_t s, Variant v)
{
	Rng rng(s ^ 0xa4093822299f31d0ULL);
	auto A = random_kv(s, 2);
	auto W = random_module(A, s + 11, 2);
	auto V = random_module(A, s + 29, 2);
	auto G = semidirect(A, W);
	auto L = lift_module(A, W, V);
	const std::size_t n = A.dim;
	for (std::size_t k = 1; k <= 2; ++k) {
		auto f = random_cochain(rng, G.dim, V.dim, k);
		for (const auto &c : bigrade(f, n)) {
			auto d = coboundary(G, L, c.f, v);
			if (!is_homogeneous(d, n, c.p))
				return shape(A, W) + " |V|=" + std::to_string(V.dim) + ": δ of a bidegree (" + std::to_string(c.p) + "," +
				       std::to_string(c.q) + ") cochain leaves W-degree " + std::to_string(c.p);
		}
	}
	return std::nullopt;
}

Cochain compose(const Mat &P, const Cochain &f)
{
	Cochain g(f.n, P.rows(), f.degree);
	const std::size_t N = Cochain::space_dim(f.n, 1, f.degree);
	for (std::size_t t = 0; t < N; ++t) {
		Vec x = P.apply(f.at(tuple_digits(t, f.n, f.degree)));
		for (std::size_t b = 0; b < P.rows(); ++b)
			g.values[t * P.rows() + b] = x[b];
	}
	return g;
}

std::optional<std::string> functoriality(std::uint64_t s, Variant v)
{
	Rng rng(s ^ 0x082efa98ec4e6c89ULL);
	auto A = random_kv(s, 3);
	auto W = random_module(A, s + 3, 2);
	auto U = random_module(A, s + 53, 2);
	auto T = direct_sum(W, U);
	Mat psi = rng.invertible(T.dim);
	auto V = change_basis(T, psi);
	Mat iota(T.dim, W.dim);
	for (std::size_t i = 0; i < W.dim; ++i)
		iota(i, i) = 1;
	Mat phi = psi * iota;
	for (std::size_t q = 1; q <= 2; ++q) {
		auto f = random_cochain(rng, A.dim, W.dim, q);
		auto lhs = coboundary(A, V, compose(phi, f), v);
		auto rhs = compose(phi, coboundary(A, W, f, v));
		if (lhs != rhs) {
			Cochain diff = lhs;
			diff.values -= rhs.values;
			return shape(A, W) + " q=" + std::to_string(q) + ": " + first_entry("δ(φf) − φ(δf)", diff);
		}
	}
	return std::nullopt;
}

std::optional<std::string> bracket_bridge(std::uint64_t s, Variant v)
{
	Rng rng(s ^ 0x452821e638d01377ULL);
	auto A = random_kv(s, 3);
	auto nu = random_cochain(rng, A.dim, A.dim, 2);
	auto lhs = kv_bracket(as_cochain(A.product), nu);
	auto rhs = coboundary(A, regular_bimodule(A), nu, v);
	if (lhs != rhs) {
		Cochain diff = lhs;
		diff.values -= rhs.values;
		return "n=" + std::to_string(A.dim) + ": " + first_entry("d_μ0ν − δν", diff);
	}
	return std::nullopt;
}

std::optional<std::string> bracket_self(std::uint64_t s, Variant)
{
	Rng rng(s ^ 0xbe5466cf34e90c6cULL);
	const std::size_t n = 1 + rng.below(3);
	auto mu = random_cochain(rng, n, n, 2);
	auto d = kv_bracket(mu, mu);
	KVAlgebra M(n);
	M.product = as_tensor(mu);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				auto a = unit_vector(n, i), b = unit_vector(n, j), c = unit_vector(n, k);
				Vec want = Rat(2) * (associator(M, a, b, c) - associator(M, b, a, c));
				if (d.at({i, j, k}) != want)
					return "n=" + std::to_string(n) + ": d_μμ" + tuple_str({i, j, k}) + " ≠ 2[(a,b,c) − (b,a,c)]";
			}
	return std::nullopt;
}

std::optional<std::string> center_jacobi(std::uint64_t s, Variant)
{
	auto A = random_kv(s, 4);
	const std::size_t n = A.dim;
	if (!is_kv(A).ok)
		return "random_kv produced a non-KV algebra";
	Subspace J = jacobi_algebra(A);
	if (!J.contains(center(A)))
		return "n=" + std::to_string(n) + ": center ⊄ J(A)";
	KVAlgebra L(n);
	L.product = lie_bracket(A);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				auto a = unit_vector(n, i), b = unit_vector(n, j), c = unit_vector(n, k);
				Vec x = L.mul(a, L.mul(b, c)) + L.mul(b, L.mul(c, a)) + L.mul(c, L.mul(a, b));
				if (!is_zero(x))
					return "n=" + std::to_string(n) + ": commutator Jacobi identity fails at " + tuple_str({i, j, k});
			}
	return std::nullopt;
}

std::optional<std::string> algebra_extension_classes(std::uint64_t s, Variant)
{
	Rng rng(s ^ 0xc0ac29b7c97c50ddULL);
	auto A = random_kv(s, 3);
	auto W = random_module(A, s + 5, 2);
	if (A.dim + W.dim > 5)
		W = random_module(A, s + 5, 5 - A.dim);
	auto rep = cohomology(A, W, 2);
	Vec hv = combo(rng, rep.at(2).representatives, rep.at(2).dim_C);
	Cochain omega(A.dim, W.dim, 2, hv);
	omega.values += coboundary(A, W, random_cochain(rng, A.dim, W.dim, 1)).values;
	auto ext = algebra_extension_from_cocycle(A, W, omega);
	if (!is_kv(ext.T).ok)
		return shape(A, W) + ": extension of a cocycle is not KV";
	Mat sig = canonical_algebra_section(ext);
	for (std::size_t i = 0; i < A.dim; ++i)
		for (std::size_t b = 0; b < W.dim; ++b)
			sig(b, i) += rng.small_rat();
	auto back = algebra_cocycle_from_section(A, ext, sig);
	if (!algebra_extensions_equivalent(A, W, omega, back))
		return shape(A, W) + ": section cocycle left the class";
	Cochain zero(A.dim, W.dim, 2);
	if (algebra_extensions_equivalent(A, W, omega, zero).has_value() != is_zero(hv))
		return shape(A, W) + ": split test disagrees with the class";
	if (!is_zero(hv) && algebra_extensions_equivalent(A, W, omega, Cochain(A.dim, W.dim, 2, hv + hv)))
		return shape(A, W) + ": distinct classes judged equivalent";
	return std::nullopt;
}

std::optional<std::string> module_extension_classes(std::uint64_t s, Variant)
{
	Rng rng(s ^ 0x3f84d5b5b5470917ULL);
	auto A = random_kv(s, 2);
	auto W = random_module(A, s + 11, 2);
	auto V = random_module(A, s + 29, 2);
	const std::size_t n = A.dim;
	auto rep = e11_cohomology(A, W, V, 1);
	Mat th(V.dim, W.dim);
	for (std::size_t r = 0; r < V.dim; ++r)
		for (std::size_t c = 0; c < W.dim; ++c)
			th(r, c) = rng.small_rat();
	Vec hv = combo(rng, rep.at(1).representatives, rep.at(1).dim_C);
	Cochain f = e11_embed(n, W.dim, V.dim, 1, hv);
	f.values += e11_coboundary0(A, W, V, th).values;
	auto ext = module_extension_from_cocycle(A, W, V, f);
	Mat sig = canonical_module_section(ext);
	for (std::size_t r = 0; r < V.dim; ++r)
		for (std::size_t c = 0; c < W.dim; ++c)
			sig(r, c) += rng.small_rat();
	auto back = cocycle_from_section(A, ext, sig);
	if (!extensions_equivalent(A, W, V, f, back))
		return shape(A, W) + ": section cocycle left the class";
	Cochain zero(n + W.dim, V.dim, 2);
	if (extensions_equivalent(A, W, V, f, zero).has_value() != is_zero(hv))
		return shape(A, W) + ": split test disagrees with the class";
	if (!is_zero(hv) && extensions_equivalent(A, W, V, f, e11_embed(n, W.dim, V.dim, 1, hv + hv)))
		return shape(A, W) + ": distinct classes judged equivalent";
	return std::nullopt;
}

std::optional<std::string> curvature_identity(std::uint64_t s, Variant)
{
	Rng rng(s ^ 0x9216d5d98979fb1bULL);
	auto A = random_kv(s, 3);
	const std::size_t n = A.dim;
	Cochain S(n, n, 2);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				Rat x = rng.coin() ? rng.small_rat() : Rat(0);
				S.values[(i * n + j) * n + k] = x;
				S.values[(j * n + i) * n + k] = x;
			}
	// curvature_check throws if residual ≠ −δS
	auto c = curvature_check(A, S);
	if (c.delta_S.is_zero() && !c.formula_holds())
		return "n=" + std::to_string(n) + ": δS = 0 but " + first_entry("R_direct − R_comm", c.residual);
	return std::nullopt;
}

std::optional<std::string> graded_equivalence(std::uint64_t s, Variant v)
{
	Rng rng(s ^ 0xd1310ba698dfb5acULL);
	auto G = random_graded(s, 3, 2);
	const std::size_t n = G.n(), m = G.m(), d = n + m;
	const auto T = G.total();

	// θ from the solution space of the derivation rule half the time
	Tensor3 th(m, m, m);
	for (auto &x : th.v)
		if (rng.coin(1, 3))
			x = rng.range(-2, 2);
	if (rng.coin()) {
		Mat M(n * m * m * m, m * m * m);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t a = 0; a < m; ++a)
				for (std::size_t b = 0; b < m; ++b)
					for (std::size_t g = 0; g < m; ++g) {
						const std::size_t row = ((i * m + a) * m + b) * m;
						for (std::size_t h = 0; h < m; ++h)
							M(row + h, (a * m + b) * m + g) += G.odd.left(i, g, h);
						for (std::size_t c = 0; c < m; ++c) {
							M(row + g, (c * m + b) * m + g) -= G.odd.left(i, a, c);
							M(row + g, (a * m + c) * m + g) -= G.odd.left(i, b, c);
						}
					}
		Subspace Z = kernel(M);
		th.v = combo(rng, Z.basis(), m * m * m);
	}
	const bool lhs = is_kv(deform_graded(G, th)).ok;
	const bool rhs = is_theta_cocycle(G, th).ok && is_kv_chain(th).ok;
	if (lhs != rhs)
		return "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": is_kv(G_θ) = " + (lhs ? "true" : "false") +
		       " but cocycle ∧ KV-chain = " + (rhs ? "true" : "false");

	const auto reg = regular_bimodule(T);
	for (std::size_t q = 1; q <= 2; ++q)
		for (std::size_t r = 0; r <= q; ++r) {
			auto f = graded_component(G, random_cochain(rng, d, d, q), r, q - r, 1);
			auto df = coboundary(T, reg, f, v);
			if (graded_component(G, df, r + 1, q - r, 1) != df)
				return "graded bidegree law fails from (" + std::to_string(r) + "," + std::to_string(q - r) + ")";
		}

	Subspace JG = jacobi_algebra(T);
	Subspace JA = jacobi_algebra(G.even), JW = jacobi_module(G.even, G.odd);
	std::vector<Vec> odd, both;
	for (const auto &w : JW.basis()) {
		Vec x = zeros(n);
		x.insert(x.end(), w.begin(), w.end());
		odd.push_back(x);
		both.push_back(x);
	}
	for (const auto &a : JA.basis()) {
		Vec x = a;
		x.resize(d, Rat(0));
		both.push_back(x);
	}
	if (!JG.contains(Subspace::span(d, odd)))
		return "J(W) ⊄ J(G)";
	if (!Subspace::span(d, both).contains(JG))
		return "J(G) ⊄ J(A) ⊕ J(W)";
	return std::nullopt;
}

std::optional<std::string> pushforward_trivial(std::uint64_t s, Variant)
{
	Rng rng(s ^ 0x98dfb5ac2ffd72dbULL);
	auto A = random_kv(s, 3);
	const std::size_t n = A.dim;
	BasisFlowJet flow;
	for (int k = 0; k < 2; ++k) {
		Mat t(n, n);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				t(i, j) = rng.range(-2, 2);
		flow.theta.push_back(t);
	}
	auto jet = pushforward_jet(A, flow, 3);
	auto r = jet_residuals(jet);
	if (!r.ok())
		return "n=" + std::to_string(n) + ": residual E_" + std::to_string(*r.failing_order) + " ≠ 0";
	return std::nullopt;
}

const std::vector<std::pair<std::string, Check>> &battery()
{
	static const std::vector<std::pair<std::string, Check>> b = {
	    {"delta_squared", delta_squared},
	    {"degree0_bridge", degree0_bridge},
	    {"bidegree_law", bidegree_law},
	    {"functoriality", functoriality},
	    {"bracket_bridge", bracket_bridge},
	    {"bracket_self", bracket_self},
	    {"center_jacobi", center_jacobi},
	    {"algebra_extension_classes", algebra_extension_classes},
	    {"module_extension_classes", module_extension_classes},
	    {"curvature_identity", curvature_identity},
	    {"graded_equivalence", graded_equivalence},
	    {"pushforward_trivial", pushforward_trivial},
	};
	return b;
}

} // namespace

bool ProptestReport::ok() const
{
	for (const auto &p : properties)
		if (!p.ok())
			return false;
	return true;
}

std::vector<std::string> property_names()
{
	std::vector<std::string> out;
	for (const auto &[name, _] : battery())
		out.push_back(name);
	return out;
}

PropertyResult run_property(const std::string &name, std::uint64_t seed, std::size_t count, Variant v)
{
	for (const auto &[n, check] : battery()) {
		if (n != name)
			continue;
		PropertyResult r{name, count, {}};
		for (std::size_t i = 0; i < count; ++i) {
			const std::uint64_t s = seed + i;
			std::optional<std::string> fail;
			try {
				fail = check(s, v);
			} catch (const BudgetError &) {
				throw;
			} catch (const Error &e) {
				fail = std::string("exception: ") + e.what();
			}
			if (fail)
				r.failures.push_back({s, *fail});
		}
		return r;
	}
	throw InputError("unknown property '" + name + "'");
}

ProptestReport proptest(std::uint64_t seed, std::size_t count, Variant v)
{
	ProptestReport rep{seed, count, v, {}};
	for (const auto &name : property_names())
		rep.properties.push_back(run_property(name, seed, count, v));
	return rep;
}

} // namespace kv
