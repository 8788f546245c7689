#pragma once

#include "kvcohom/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kv {

/// Flat connection on Aff(R)_0 in the basis e1 = ∂x, e2 = ∂y: e1·e2 = e2.
KVAlgebra aff_algebra();

/// S(e1,e1) = αe1 + βe2, S(e1,e2) = S(e2,e1) = αe2, S(e2,e2) = 0.
Cochain s_alpha_beta(const Rat &alpha, const Rat &beta);

struct SCocycleReport {
	bool cocycle = false;     // δS = 0
	bool self_bracket = false; // d_S S = 0
	bool non_exact = false;   // S ∉ im δ
	bool alpha_nonzero = false;
	/// All claims that apply: non-exactness only when α ≠ 0.
	bool passed() const { return cocycle && self_bracket && (!alpha_nonzero || non_exact); }
};
SCocycleReport s_cocycle_suite(const Rat &alpha, const Rat &beta);

// Geodesics of D + S_{α,β} on Aff(R)_0:
//   2ẍ + αẋ² = 0,   2ÿ + βẋ² + (1+2α)ẋẏ = 0.

struct GeodesicProblem {
	double alpha = 0, beta = 0;
	double x0 = 0, y0 = 0, vx0 = 1, vy0 = 0;
	double t0 = 0, t1 = 1;
	double step = 1e-3;        // nominal step, shrunk near singularities
	double threshold = 1e8;    // blow-up when |state| exceeds this
	double tolerance = 1e-12;  // step-doubling error bound, relative
};

struct GeodesicSample {
	double t, x, y, vx, vy;
};

enum class Termination { ReachedEnd, BlowUp, StepUnderflow };
std::string to_string(Termination t);

struct Trajectory {
	std::vector<GeodesicSample> samples; // monotone in the direction t0 → t1
	Termination termination = Termination::ReachedEnd;
	std::optional<double> t_star; // last time reached before |state| crossed the threshold
	/// Width of the final step that crossed the threshold.
	double t_star_bracket = 0;
};

/// Classical RK4 with step doubling as the error guard.
Trajectory integrate_geodesic(const GeodesicProblem &p);

/// (2/α) ln|αt/2 + u| + v; throws Rejected at the pole t = −2u/α.
double closed_form_x(double alpha, double u, double v, double t);

/// The exact solution through the problem's initial state, with s = αt/2 + u:
/// ẋ = 1/s, ẏ = K/s + C s^{−(1+2α)/α}, K = −β/(1+α),
/// y = (2K/α) ln|s| − (2C/(1+α)) s^{−(1+α)/α} + d.
struct GeodesicOracle {
	double alpha, beta, u, v, K, C, d;
	static GeodesicOracle from(const GeodesicProblem &p);
	double s(double t) const { return alpha * t / 2 + u; }
	GeodesicSample at(double t) const;
};

struct PowerLawFit {
	double exponent = 0;    // of the non-logarithmic part of y
	double coefficient = 0; // C in ẏ − K/s = C s^{exponent − 1}
	std::size_t samples_used = 0;
};
/// Fits ẏ − K/s against s on a log-log scale; the exponent of y's power
/// part is the slope plus one. Needs α ∉ {0, −1} and samples with s > 0.
PowerLawFit y_power_law_fit(const Trajectory &tr, const GeodesicProblem &p);

/// Solutions of e_i·H = e_i for all i: empty, or particular + directions.
struct AffineSet {
	std::optional<Vec> particular;
	Subspace directions;
	bool empty() const { return !particular; }
};
AffineSet find_radiant(const KVAlgebra &A);

/// g with a(g(b,c)) − g(ab,c) − g(b,ac) = 0 for all a, b, c.
Subspace parallel_cochains(const KVAlgebra &A, const KVModule &W);

/// θ(a) = g(H, a), with δθ = −g. W must be a left module, H radiant, g parallel.
Cochain radiant_primitive(const KVAlgebra &A, const KVModule &W, const Vec &H, const Cochain &g);

} // namespace kv
