#include "doctest.h"

#include "kvcohom/deform.hpp"
#include "kvcohom/errors.hpp"
#include "kvcohom/fixtures.hpp"
#include "kvcohom/geom.hpp"
#include "util.hpp"

#include <cmath>

using namespace kv;
using namespace kvtest;

TEST_CASE("AFF and S_{α,β}")
{
	auto A = aff_algebra();
	CHECK(is_kv(A).ok);
	CHECK(jacobi_algebra(A) == Subspace::span(2, {Vec{1, 0}}));
	CHECK(s_alpha_beta(0, 0).is_zero());
	auto S = s_alpha_beta(1, 0);
	CHECK(S.at({0, 0}) == Vec{1, 0});
	CHECK(S.at({0, 1}) == Vec{0, 1});
	CHECK(S.at({1, 0}) == Vec{0, 1});
	CHECK(S.at({1, 1}) == Vec{0, 0});
	Rng rng(1);
	for (int t = 0; t < 10; ++t) {
		auto T = s_alpha_beta(rng.small_rat(), rng.small_rat());
		for (std::size_t i = 0; i < 2; ++i)
			for (std::size_t j = 0; j < 2; ++j)
				CHECK(T.at({i, j}) == T.at({j, i}));
	}
}

TEST_CASE("S_{α,β} is a self-commuting, non-exact cocycle")
{
	for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 0}, {2, 3}, {-1, 5}, {3, -2}, {7, 7}}) {
		auto r = s_cocycle_suite(a, b);
		CHECK(r.cocycle);
		CHECK(r.self_bracket);
		CHECK(r.non_exact);
		CHECK(r.passed());
	}
	auto r = s_cocycle_suite(Rat(1, 2), Rat(-5, 3));
	CHECK(r.passed());
	auto z = s_cocycle_suite(0, 1);
	CHECK(z.cocycle);
	CHECK(z.self_bracket);
	CHECK_FALSE(z.alpha_nonzero);
}

TEST_CASE("deformed family stays KV")
{
	auto A = aff_algebra();
	for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 0}, {2, 3}, {-1, 5}})
		for (Rat t : {Rat(1), Rat(-1), Rat(1, 2), Rat(7)}) {
			KVAlgebra B(2);
			auto mu = as_cochain(A.product);
			mu.values += t * s_alpha_beta(a, b).values;
			B.product = as_tensor(mu);
			CHECK(is_kv(B).ok);
		}
}

TEST_CASE("geodesics: straight lines and closed form")
{
	GeodesicProblem p;
	p.alpha = 0;
	p.beta = 0;
	p.x0 = 1;
	p.y0 = -2;
	p.vx0 = 0.5;
	p.vy0 = 3;
	p.t1 = 5;
	auto tr = integrate_geodesic(p);
	CHECK(tr.termination == Termination::ReachedEnd);
	for (const auto &g : tr.samples) {
		CHECK(std::abs(g.vx - 0.5) <= 1e-10);
		CHECK(std::abs(g.x - (1 + 0.5 * g.t)) <= 1e-10);
		// the mixed term survives at α = 0: ẏ decays like exp(−ẋ₀t/2)
		CHECK(std::abs(g.vy - 3 * std::exp(-0.25 * g.t)) <= 1e-10);
		CHECK(std::abs(g.y - (-2 + 12 * (1 - std::exp(-0.25 * g.t)))) <= 1e-10);
	}
	CHECK(tr.samples.back().t == 5);

	CHECK(closed_form_x(2, 1, 0, 1) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
	CHECK_THROWS_AS(closed_form_x(2, 1, 0, -1), Rejected);
	for (double alpha : {2.0, 1.0, -0.5, 3.0})
		for (double t : {0.0, 0.3, 1.7, 4.0}) {
			const double u = 1, s = alpha * t / 2 + u;
			if (s <= 0)
				continue;
			const double h = 1e-5;
			const double xd = (closed_form_x(alpha, u, 0, t + h) - closed_form_x(alpha, u, 0, t - h)) / (2 * h);
			CHECK(std::abs(xd - 1 / s) < 1e-8);
			const double xdd = -alpha / (2 * s * s);
			CHECK(std::abs(2 * xdd + alpha * (1 / s) * (1 / s)) <= 1e-12);
		}
}

TEST_CASE("geodesics: α = 2 accuracy and blow-up")
{
	GeodesicProblem p;
	p.alpha = 2;
	p.vx0 = 1;
	p.t1 = 5;
	auto tr = integrate_geodesic(p);
	REQUIRE(tr.termination == Termination::ReachedEnd);
	double worst = 0;
	for (const auto &g : tr.samples)
		worst = std::max(worst, std::abs(g.x - std::log(g.t + 1)));
	CHECK(worst <= 1e-8);

	p.t1 = -5;
	auto back = integrate_geodesic(p);
	REQUIRE(back.termination == Termination::BlowUp);
	REQUIRE(back.t_star);
	CHECK(std::abs(*back.t_star + 1) <= 1e-6);
}

TEST_CASE("geodesics: oracle and power law")
{
	for (double alpha : {1.0, 2.0}) {
		GeodesicProblem p;
		p.alpha = alpha;
		p.beta = 1;
		p.vx0 = 1;
		p.vy0 = 1;
		p.t1 = 5;
		auto o = GeodesicOracle::from(p);
		// the oracle satisfies the second equation
		for (double t : {0.0, 0.5, 2.0, 4.5}) {
			const double h = 1e-4;
			auto g = o.at(t);
			const double ydd = (o.at(t + h).vy - o.at(t - h).vy) / (2 * h);
			CHECK(std::abs(2 * ydd + p.beta * g.vx * g.vx + (1 + 2 * alpha) * g.vx * g.vy) < 1e-6);
			CHECK(std::abs((o.at(t + h).y - o.at(t - h).y) / (2 * h) - g.vy) < 1e-6);
		}
		auto tr = integrate_geodesic(p);
		REQUIRE(tr.termination == Termination::ReachedEnd);
		double worst = 0;
		for (const auto &g : tr.samples)
			worst = std::max(worst, std::abs(g.y - o.at(g.t).y));
		CHECK(worst <= 1e-8);
		const double expect = -(1 + alpha) / alpha;
		auto fit = y_power_law_fit(tr, p);
		CHECK(std::abs(fit.exponent - expect) <= 1e-3);

		Trajectory synth;
		for (int k = 0; k <= 500; ++k)
			synth.samples.push_back(o.at(5.0 * k / 500));
		auto sf = y_power_law_fit(synth, p);
		CHECK(std::abs(sf.exponent - expect) <= 1e-3);
		CHECK(std::abs(sf.coefficient - std::abs(o.C)) <= 1e-6);
	}
}

TEST_CASE("radiant elements")
{
	auto e = find_radiant(fixture_assoc1());
	REQUIRE_FALSE(e.empty());
	CHECK(*e.particular == Vec{1});
	CHECK(e.directions.dim() == 0);
	CHECK(find_radiant(aff_algebra()).empty());
	auto d = find_radiant(direct_sum(fixture_assoc1(), fixture_assoc1()));
	REQUIRE_FALSE(d.empty());
	CHECK(*d.particular == Vec{1, 1});
}

TEST_CASE("radiant primitive")
{
	auto E = fixture_assoc1();
	auto L = regular_left_module(E);
	CHECK(radiant_primitive(E, L, Vec{1}, Cochain(1, 1, 2)).is_zero());
	auto par = parallel_cochains(E, L);
	for (const auto &g : par.basis()) {
		Cochain gc(1, 1, 2, g);
		auto th = radiant_primitive(E, L, Vec{1}, gc);
		CHECK(coboundary(E, L, th).values == Rat(-1) * gc.values);
	}
	CHECK_THROWS_AS(radiant_primitive(aff_algebra(), regular_left_module(aff_algebra()), Vec{1, 0}, Cochain(2, 2, 2)), Rejected);
	CHECK_THROWS_AS(radiant_primitive(E, regular_bimodule(E), Vec{1}, Cochain(1, 1, 2)), Rejected);

	// search dim-2 algebras with entries in {−1, 0, 1}
	std::size_t hits = 0;
	for (std::size_t code = 0; code < 6561; ++code) {
		KVAlgebra A(2);
		std::size_t c = code;
		for (auto &x : A.product.v) {
			x = static_cast<long>(c % 3) - 1;
			c /= 3;
		}
		if (!is_kv(A).ok)
			continue;
		auto H = find_radiant(A);
		if (H.empty())
			continue;
		for (const auto &W : {zero_module(2, 1), regular_left_module(A)}) {
			auto P = parallel_cochains(A, W);
			for (const auto &g : P.basis()) {
				Cochain gc(2, W.dim, 2, g);
				auto th = radiant_primitive(A, W, *H.particular, gc);
				CHECK(coboundary(A, W, th).values == Rat(-1) * gc.values);
				++hits;
			}
		}
	}
	CHECK(hits > 0);
}
