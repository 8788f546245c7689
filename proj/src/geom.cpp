#include "kvcohom/geom.hpp"
#include "kvcohom/deform.hpp"
#include "kvcohom/errors.hpp"
#include "kvcohom/fixtures.hpp"

#include <array>
#include <cmath>

namespace kv {

KVAlgebra aff_algebra() { return fixture_aff(); }

Cochain s_alpha_beta(const Rat &alpha, const Rat &beta)
{
	Cochain S(2, 2, 2);
	S.values[(0 * 2 + 0) * 2 + 0] = alpha;
	S.values[(0 * 2 + 0) * 2 + 1] = beta;
	S.values[(0 * 2 + 1) * 2 + 1] = alpha;
	S.values[(1 * 2 + 0) * 2 + 1] = alpha;
	return S;
}

SCocycleReport s_cocycle_suite(const Rat &alpha, const Rat &beta)
{
	auto A = aff_algebra();
	auto S = s_alpha_beta(alpha, beta);
	SCocycleReport r;
	r.alpha_nonzero = sgn(alpha) != 0;
	r.cocycle = coboundary(A, regular_bimodule(A), S).is_zero();
	r.self_bracket = kv_bracket(S, S).is_zero();
	r.non_exact = !is_coboundary(A, regular_bimodule(A), S);
	return r;
}

std::string to_string(Termination t)
{
	switch (t) {
	case Termination::ReachedEnd:
		return "reached-end";
	case Termination::BlowUp:
		return "blow-up";
	default:
		return "step-underflow";
	}
}

namespace {

using State = std::array<double, 4>; // x, y, vx, vy

State rhs(const GeodesicProblem &p, const State &s)
{
	const double vx = s[2], vy = s[3];
	return {vx, vy, -p.alpha * vx * vx / 2, -(p.beta * vx * vx + (1 + 2 * p.alpha) * vx * vy) / 2};
}

State axpy(const State &y, double h, const State &k)
{
	return {y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2], y[3] + h * k[3]};
}

State rk4(const GeodesicProblem &p, const State &y, double h)
{
	State k1 = rhs(p, y), k2 = rhs(p, axpy(y, h / 2, k1)), k3 = rhs(p, axpy(y, h / 2, k2)), k4 = rhs(p, axpy(y, h, k3));
	State out;
	for (int i = 0; i < 4; ++i)
		out[i] = y[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
	return out;
}

double norm(const State &s)
{
	double m = 0;
	for (double v : s)
		m = std::isfinite(v) ? std::max(m, std::abs(v)) : INFINITY;
	return m;
}

} // namespace

Trajectory integrate_geodesic(const GeodesicProblem &p)
{
	if (!(p.step > 0) || !(p.threshold > 0) || !(p.tolerance > 0))
		throw InputError("step, threshold and tolerance must be positive");
	if (p.t1 == p.t0)
		throw InputError("empty time span");
	const double dir = p.t1 > p.t0 ? 1 : -1;
	Trajectory tr;
	State y{p.x0, p.y0, p.vx0, p.vy0};
	double t = p.t0, h = p.step;
	tr.samples.push_back({t, y[0], y[1], y[2], y[3]});
	const double h_min = 1e-15 * std::max(1.0, std::abs(p.t1 - p.t0));
	while (dir * (p.t1 - t) > 0) {
		const double take = std::min(h, dir * (p.t1 - t));
		State full = rk4(p, y, dir * take);
		State half = rk4(p, rk4(p, y, dir * take / 2), dir * take / 2);
		const double scale = std::max(1.0, norm(half));
		double err = 0;
		for (int i = 0; i < 4; ++i)
			err = std::max(err, std::abs(full[i] - half[i]));
		const bool finite = std::isfinite(norm(full)) && std::isfinite(norm(half));
		if (finite && norm(half) > p.threshold) {
			// the crossing lies inside this step; halve until the step is tiny
			if (take <= 1e-12 * std::max(1.0, std::abs(t)) || take < h_min) {
				tr.termination = Termination::BlowUp;
				tr.t_star = t;
				tr.t_star_bracket = take;
				return tr;
			}
			h = take / 2;
			continue;
		}
		if (!finite || err > p.tolerance * scale) {
			if (take / 2 < h_min) {
				if (norm(y) > std::sqrt(p.threshold)) {
					tr.termination = Termination::BlowUp;
					tr.t_star = t;
					tr.t_star_bracket = take;
				} else {
					tr.termination = Termination::StepUnderflow;
				}
				return tr;
			}
			h = take / 2;
			continue;
		}
		y = half;
		t += dir * take;
		if (dir * (p.t1 - t) < h_min)
			t = p.t1;
		tr.samples.push_back({t, y[0], y[1], y[2], y[3]});
		if (err < p.tolerance * scale / 64)
			h = std::min(p.step, 2 * take);
	}
	return tr;
}

double closed_form_x(double alpha, double u, double v, double t)
{
	if (alpha == 0)
		throw InputError("closed form needs α ≠ 0");
	const double s = alpha * t / 2 + u;
	if (s == 0)
		throw Rejected("pole of the closed form at t = " + std::to_string(t));
	return 2 / alpha * std::log(std::abs(s)) + v;
}

GeodesicOracle GeodesicOracle::from(const GeodesicProblem &p)
{
	if (p.alpha == 0 || p.alpha == -1)
		throw InputError("oracle needs α ∉ {0, −1}");
	if (p.vx0 == 0)
		throw InputError("oracle needs ẋ(t0) ≠ 0");
	GeodesicOracle o{};
	o.alpha = p.alpha;
	o.beta = p.beta;
	o.u = 1 / p.vx0 - p.alpha * p.t0 / 2;
	const double s0 = o.s(p.t0);
	o.v = p.x0 - 2 / p.alpha * std::log(std::abs(s0));
	o.K = -p.beta / (1 + p.alpha);
	const double e = -(1 + 2 * p.alpha) / p.alpha;
	o.C = (p.vy0 - o.K / s0) / std::pow(s0, e);
	o.d = 0;
	o.d = p.y0 - o.at(p.t0).y;
	return o;
}

GeodesicSample GeodesicOracle::at(double t) const
{
	const double s = this->s(t);
	if (s <= 0)
		throw Rejected("oracle evaluated outside the branch s > 0");
	const double e = -(1 + 2 * alpha) / alpha;
	GeodesicSample g{};
	g.t = t;
	g.x = 2 / alpha * std::log(s) + v;
	g.vx = 1 / s;
	g.vy = K / s + C * std::pow(s, e);
	g.y = 2 * K / alpha * std::log(s) - 2 * C / (1 + alpha) * std::pow(s, -(1 + alpha) / alpha) + d;
	return g;
}

PowerLawFit y_power_law_fit(const Trajectory &tr, const GeodesicProblem &p)
{
	if (p.alpha == 0 || p.alpha == -1)
		throw InputError("power-law fit needs α ∉ {0, −1}");
	if (tr.termination == Termination::BlowUp)
		throw Rejected("fit window contains a blow-up");
	const double u = 1 / p.vx0 - p.alpha * p.t0 / 2, K = -p.beta / (1 + p.alpha);
	double sx = 0, sy = 0, sxx = 0, sxy = 0, lo = INFINITY, hi = -INFINITY;
	std::size_t k = 0;
	for (const auto &g : tr.samples) {
		const double s = p.alpha * g.t / 2 + u;
		const double r = g.vy - K / s;
		if (!(s > 0) || std::abs(r) < 1e-9)
			continue;
		const double X = std::log(s), Y = std::log(std::abs(r));
		sx += X;
		sy += Y;
		sxx += X * X;
		sxy += X * Y;
		lo = std::min(lo, X);
		hi = std::max(hi, X);
		++k;
	}
	if (k < 3 || hi - lo < 1e-3)
		throw Rejected("degenerate fit window");
	const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
	const double icept = (sy - slope * sx) / k;
	PowerLawFit f;
	f.exponent = slope + 1;
	f.coefficient = std::exp(icept);
	f.samples_used = k;
	return f;
}

AffineSet find_radiant(const KVAlgebra &A)
{
	const std::size_t n = A.dim;
	// rows (i, k): Σ_j Γ(i, j, k) H_j = δ_ik
	Mat M(n * n, n);
	Vec b = zeros(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t k = 0; k < n; ++k) {
			for (std::size_t j = 0; j < n; ++j)
				M(i * n + k, j) = A.product(i, j, k);
			b[i * n + k] = i == k ? 1 : 0;
		}
	AffineSet s{solve(M, b), kernel(M)};
	return s;
}

Subspace parallel_cochains(const KVAlgebra &A, const KVModule &W)
{
	const std::size_t n = A.dim, m = W.dim;
	// (a·g)(b,c) = a g(b,c) − g(ab,c) − g(b,ac), as a linear map on C_2
	const std::size_t C = n * n * m;
	Mat M(n * C, C);
	for (std::size_t col = 0; col < C; ++col) {
		const std::size_t be = col % m, bc = col / m, b = bc / n, c = bc % n;
		for (std::size_t a = 0; a < n; ++a) {
			// a g(b,c): g = e_{(b,c),β}
			for (std::size_t ga = 0; ga < m; ++ga)
				M(a * C + (b * n + c) * m + ga, col) += W.left(a, be, ga);
			// − g(a x, y) where a x has component along b: rows (x, c)
			for (std::size_t x = 0; x < n; ++x)
				if (sgn(A.product(a, x, b)) != 0)
					M(a * C + (x * n + c) * m + be, col) -= A.product(a, x, b);
			for (std::size_t y = 0; y < n; ++y)
				if (sgn(A.product(a, y, c)) != 0)
					M(a * C + (b * n + y) * m + be, col) -= A.product(a, y, c);
		}
	}
	return kernel(M);
}

Cochain radiant_primitive(const KVAlgebra &A, const KVModule &W, const Vec &H, const Cochain &g)
{
	const std::size_t n = A.dim, m = W.dim;
	if (H.size() != n || g.n != n || g.m != m || g.degree != 2)
		throw InputError("radiant_primitive: shape mismatch");
	if (!W.is_left())
		throw Rejected("radiant_primitive needs a left module (zero right action)");
	for (std::size_t i = 0; i < n; ++i) {
		Vec e = unit_vector(n, i);
		Vec aH = A.mul(e, H);
		if (aH != e)
			throw Rejected(Witness{"aH = a", {i}, aH, e}.describe());
	}
	if (!parallel_cochains(A, W).contains(g.values))
		throw Rejected("g is not parallel");
	Cochain theta(n, m, 1);
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t j = 0; j < n; ++j)
			if (sgn(H[j]) != 0)
				for (std::size_t be = 0; be < m; ++be)
					theta.values[a * m + be] += H[j] * g.values[(j * n + a) * m + be];
	auto d = coboundary(A, W, theta);
	if (d.values != Rat(-1) * g.values)
		throw Error("radiant primitive does not satisfy δθ = −g");
	return theta;
}

} // namespace kv
