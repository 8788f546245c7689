#include "doctest.h"

#include "kvcohom/errors.hpp"
#include "kvcohom/ext.hpp"
#include "kvcohom/fixtures.hpp"
#include "util.hpp"

using namespace kv;
using namespace kvtest;

namespace {

struct Setup {
	KVAlgebra A;
	KVModule W, V;
	KVAlgebra G;
	KVModule L;
};

Setup setup(std::uint64_t s, std::size_t n_max, std::size_t m_max)
{
	Setup x;
	x.A = random_kv(s, n_max);
	x.W = random_module(x.A, s + 11, m_max);
	x.V = random_module(x.A, s + 29, m_max);
	x.G = semidirect(x.A, x.W);
	x.L = lift_module(x.A, x.W, x.V);
	return x;
}

Mat random_map(Rng &rng, std::size_t r, std::size_t c)
{
	Mat m(r, c);
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t j = 0; j < c; ++j)
			m(i, j) = rng.small_rat();
	return m;
}

// θ: W → V as the degree-1 cochain on A⊕W vanishing on A
Cochain as_g_cochain(const Mat &theta, std::size_t n)
{
	Cochain f(n + theta.cols(), theta.rows(), 1);
	for (std::size_t al = 0; al < theta.cols(); ++al)
		for (std::size_t b = 0; b < theta.rows(); ++b)
			f.values[(n + al) * theta.rows() + b] = theta(b, al);
	return f;
}

} // namespace

TEST_CASE("bigrading, bidegree law and filtrations")
{
	Rng rng(31);
	for (std::uint64_t s = 1; s <= 20; ++s) {
		auto x = setup(s, 2, 2);
		CHECK(is_kv(x.G).ok);
		CHECK(is_module(x.G, x.L).ok);
		CHECK(jacobi_module(x.G, x.L) == jacobi_module(x.A, x.V));
		const std::size_t n = x.A.dim;
		for (std::size_t k = 1; k <= 2; ++k) {
			auto f = random_cochain(rng, x.G.dim, x.V.dim, k);
			auto parts = bigrade(f, n);
			Cochain sum(f.n, f.m, k);
			for (const auto &c : parts) {
				CHECK(c.p + c.q == k);
				CHECK(is_homogeneous(c.f, n, c.p));
				sum.values += c.f.values;
				auto d = coboundary(x.G, x.L, c.f);
				CHECK(is_homogeneous(d, n, c.p));
			}
			CHECK(sum == f);
			for (std::size_t p = 0; p <= k; ++p) {
				auto up = mask(f, [&](const auto &a) { return w_count(a, n) >= p; });
				auto low = mask(f, [&](const auto &a) { return w_count(a, n) <= p; });
				CHECK(in_upper_filtration(up, n, p));
				CHECK(in_lower_filtration(low, n, p));
				CHECK(in_upper_filtration(coboundary(x.G, x.L, up), n, p));
				CHECK(in_lower_filtration(coboundary(x.G, x.L, low), n, p));
			}
		}
	}
	auto A = fixture_aff();
	Cochain pure(4, 2, 2);
	pure.values[(0 * 4 + 1) * 2 + 1] = 1;
	auto parts = bigrade(pure, 2);
	REQUIRE(parts.size() == 1);
	CHECK(parts[0].p == 0);
	CHECK(parts[0].q == 2);
}

TEST_CASE("e11 coboundary in degree 0")
{
	Rng rng(2);
	for (std::uint64_t s = 1; s <= 20; ++s) {
		auto x = setup(s, 3, 2);
		Mat th = random_map(rng, x.V.dim, x.W.dim);
		auto d = e11_coboundary0(x.A, x.W, x.V, th);
		CHECK(d == coboundary(x.G, x.L, as_g_cochain(th, x.A.dim)));
		CHECK(is_homogeneous(d, x.A.dim, 1));
		CHECK(coboundary(x.G, x.L, d).is_zero());
	}
	auto A = fixture_aff();
	auto R = regular_bimodule(A);
	CHECK(e11_coboundary0(A, R, R, Mat::identity(2)).is_zero());
	CHECK(e11_coboundary0(A, R, R, Mat(2, 2)).is_zero());
	Mat th = random_map(rng, 2, 2);
	auto d = e11_coboundary0(A, R, R, th);
	CHECK_FALSE(d.is_zero());
	CHECK(coboundary(semidirect(A, R), lift_module(A, R, R), d).is_zero());
}

TEST_CASE("E1^{1,q} complex")
{
	auto A = fixture_aff();
	auto R = regular_bimodule(A);
	for (const auto &d : e11_cohomology(A, R, zero_module(2, 0), 2).degrees)
		CHECK(d.dim_H == 0);
	for (const auto &d : e11_cohomology(A, zero_module(2, 0), R, 2).degrees)
		CHECK(d.dim_H == 0);
	auto rep = e11_cohomology(A, R, R, 2);
	REQUIRE(rep.degrees.size() == 3);
	CHECK(rep.at(0).dim_C == 4);
	CHECK(rep.at(1).dim_C == 2 * 2 * 2 * 2);
	for (const auto &d : rep.degrees)
		CHECK(d.dim_H == d.dim_Z - d.dim_B);
	// bottom differential is the e11 coboundary
	auto G = semidirect(A, R);
	auto L = lift_module(A, R, R);
	Rng rng(3);
	Mat th = random_map(rng, 2, 2);
	CHECK(e11_coboundary0(A, R, R, th) == coboundary(G, L, as_g_cochain(th, 2)));
}

TEST_CASE("module extensions: cocycles, sections, classes")
{
	Rng rng(77);
	std::size_t nontrivial_seen = 0;
	for (std::uint64_t s = 1; s <= 25; ++s) {
		auto x = setup(s, 2, 2);
		const std::size_t n = x.A.dim;
		auto rep = e11_cohomology(x.A, x.W, x.V, 1);

		// random cocycle: a coboundary plus a combination of class representatives
		Mat th = random_map(rng, x.V.dim, x.W.dim);
		Vec hv = combo(rng, rep.at(1).representatives, rep.at(1).dim_C);
		Cochain h = e11_embed(n, x.W.dim, x.V.dim, 1, hv);
		Cochain f = h;
		f.values += e11_coboundary0(x.A, x.W, x.V, th).values;
		REQUIRE(coboundary(x.G, x.L, f).is_zero());
		CHECK(module_cocycle_system(x.A, x.W, x.V, f).holds());

		auto ext = module_extension_from_cocycle(x.A, x.W, x.V, f);
		CHECK(is_module(x.A, ext.T).ok);
		Mat sig = canonical_module_section(ext);
		auto back = cocycle_from_section(x.A, ext, sig);
		CHECK(back == f);
		CHECK(coboundary(x.G, x.L, back).is_zero());

		// shifting the section by θ moves the cocycle by e11(−θ)
		Mat shift = random_map(rng, x.V.dim, x.W.dim);
		Mat sig2 = sig;
		for (std::size_t r = 0; r < x.V.dim; ++r)
			for (std::size_t c = 0; c < x.W.dim; ++c)
				sig2(r, c) += shift(r, c);
		auto f2 = cocycle_from_section(x.A, ext, sig2);
		Mat neg = Mat(x.V.dim, x.W.dim) - shift;
		CHECK(f2.values - f.values == e11_coboundary0(x.A, x.W, x.V, neg).values);
		CHECK(extensions_equivalent(x.A, x.W, x.V, f, f2));

		CHECK(extensions_equivalent(x.A, x.W, x.V, f, f));
		CHECK(extensions_equivalent(x.A, x.W, x.V, f, h));
		// equivalent to the direct sum iff the class vanishes
		Cochain zero(n + x.W.dim, x.V.dim, 2);
		CHECK(extensions_equivalent(x.A, x.W, x.V, f, zero).has_value() == is_zero(hv));
		if (!is_zero(hv)) {
			++nontrivial_seen;
			Cochain h2 = e11_embed(n, x.W.dim, x.V.dim, 1, hv + hv);
			CHECK_FALSE(extensions_equivalent(x.A, x.W, x.V, f, h2));
		}

		// a non-cocycle of bidegree (1,1) is rejected, and the derived system agrees
		auto g = mask(random_cochain(rng, n + x.W.dim, x.V.dim, 2), [&](const auto &a) { return w_count(a, n) == 1; });
		bool cocycle = coboundary(x.G, x.L, g).is_zero();
		CHECK(module_cocycle_system(x.A, x.W, x.V, g).holds() == cocycle);
		if (cocycle)
			CHECK_NOTHROW(module_extension_from_cocycle(x.A, x.W, x.V, g));
		else
			CHECK_THROWS_AS(module_extension_from_cocycle(x.A, x.W, x.V, g), Rejected);
	}
	CHECK(nontrivial_seen > 0);

	auto A = fixture_aff();
	auto R = regular_bimodule(A);
	auto ext = module_extension_from_cocycle(A, R, R, Cochain(4, 2, 2));
	CHECK(ext.T.left == direct_sum(R, R).left);
	CHECK(ext.T.right == direct_sum(R, R).right);
	CHECK(cocycle_from_section(A, ext, canonical_module_section(ext)).is_zero());
	CHECK_THROWS_AS(cocycle_from_section(A, ext, Mat(4, 2)), InputError);
}

TEST_CASE("algebra extensions")
{
	Rng rng(5);
	std::size_t nontrivial_seen = 0;
	for (std::uint64_t s = 1; s <= 25; ++s) {
		auto A = random_kv(s, 3);
		auto W = random_module(A, s + 5, 2);
		// arbitrary ω: the KV defect of the total on A-triples is exactly δω
		auto w = random_cochain(rng, A.dim, W.dim, 2);
		auto ext = algebra_extension_from_cocycle(A, W, w);
		auto dw = coboundary(A, W, w);
		CHECK(extension_defect(ext) == dw);
		CHECK(is_kv(ext.T).ok == dw.is_zero());

		auto rep = cohomology(A, W, 2);
		Vec hv = combo(rng, rep.at(2).representatives, rep.at(2).dim_C);
		Cochain omega(A.dim, W.dim, 2, hv);
		auto psi = random_cochain(rng, A.dim, W.dim, 1);
		omega.values += coboundary(A, W, psi).values;
		auto e2 = algebra_extension_from_cocycle(A, W, omega);
		CHECK(is_kv(e2.T).ok);
		Mat sig = canonical_algebra_section(e2);
		CHECK(algebra_cocycle_from_section(A, e2, sig) == omega);

		auto shift = random_cochain(rng, A.dim, W.dim, 1);
		Mat sig2 = sig;
		for (std::size_t i = 0; i < A.dim; ++i)
			for (std::size_t b = 0; b < W.dim; ++b)
				sig2(b, i) += shift.values[i * W.dim + b];
		auto om2 = algebra_cocycle_from_section(A, e2, sig2);
		CHECK(om2.values == omega.values - coboundary(A, W, shift).values);
		CHECK(algebra_extensions_equivalent(A, W, omega, om2));

		Cochain zero(A.dim, W.dim, 2);
		CHECK(algebra_extensions_equivalent(A, W, omega, zero).has_value() == is_zero(hv));
		if (!is_zero(hv)) {
			++nontrivial_seen;
			CHECK_FALSE(algebra_extensions_equivalent(A, W, omega, Cochain(A.dim, W.dim, 2, hv + hv)));
		}
	}
	CHECK(nontrivial_seen > 0);

	auto A = fixture_aff();
	auto R = regular_bimodule(A);
	auto ext = algebra_extension_from_cocycle(A, R, Cochain(2, 2, 2));
	CHECK(is_kv(ext.T).ok);
	CHECK(algebra_cocycle_from_section(A, ext, canonical_algebra_section(ext)).is_zero());
}
