#include "kvcohom/cli.hpp"
#include "kvcohom/errors.hpp"
#include "kvcohom/ext.hpp"
#include "kvcohom/fixtures.hpp"
#include "kvcohom/geom.hpp"
#include "kvcohom/proptest.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace kv {

namespace {

constexpr int format_version = 1;

struct Context {
	const JobSpec &job;
	std::vector<InputFile> files;
	json result = json::object();
	bool verdict = true;
	std::string csv;
};

InputFile load_input(const std::string &src)
{
	const std::string prefix = "fixture:";
	if (src.rfind(prefix, 0) == 0) {
		InputFile f;
		f.path = src;
		f.doc = fixture_document(src.substr(prefix.size()));
		f.digest = fnv1a64(f.doc.dump());
		return f;
	}
	return read_json_file(src);
}

enum class Kind { Algebra, Module, Graded, Jet, Cochain, Pair, Unknown };

Kind kind_of(const json &j)
{
	if (!j.is_object())
		return Kind::Unknown;
	if (j.contains("even"))
		return Kind::Graded;
	if (j.contains("base"))
		return Kind::Jet;
	if (j.contains("left"))
		return Kind::Module;
	if (j.contains("product"))
		return Kind::Algebra;
	if (j.contains("theta"))
		return Kind::Pair;
	if (j.contains("degree"))
		return Kind::Cochain;
	return Kind::Unknown;
}

void need_inputs(const Context &c, std::size_t lo, std::size_t hi, const char *usage)
{
	const std::size_t k = c.files.size();
	if (k < lo || k > hi)
		throw InputError(c.job.verb + " expects " + usage);
}

const json &doc(const Context &c, std::size_t i, Kind k, const char *what)
{
	if (kind_of(c.files[i].doc) != k)
		throw InputError("input " + std::to_string(i + 1) + " (" + c.files[i].path + ") is not " + what);
	return c.files[i].doc;
}

KVAlgebra algebra_at(const Context &c, std::size_t i) { return algebra_from_json(doc(c, i, Kind::Algebra, "an algebra")); }

LoadedModule module_at(const Context &c, std::size_t i)
{
	auto m = module_from_json(doc(c, i, Kind::Module, "a module"), c.files[i].dir);
	if (auto v = is_module(m.algebra, m.module); !v)
		throw Rejected("input " + std::to_string(i + 1) + " is not a module: " + v.witness->describe());
	return m;
}

/// An algebra file, or a module file whose algebra is used with W.
LoadedModule algebra_or_module(const Context &c, std::size_t i)
{
	if (kind_of(c.files[i].doc) == Kind::Algebra) {
		KVAlgebra A = algebra_at(c, i);
		return {A, regular_bimodule(A)};
	}
	return module_at(c, i);
}

void require_kv(const KVAlgebra &A)
{
	if (auto v = is_kv(A); !v)
		throw Rejected("algebra is not KV: " + v.witness->describe());
}

Cochain cochain_at(const Context &c, std::size_t i, std::size_t n, std::size_t m)
{
	return cochain_from_json(doc(c, i, Kind::Cochain, "a cochain"), n, m);
}

std::optional<std::string> param(const Context &c, const std::string &name)
{
	auto it = c.job.params.find(name);
	if (it == c.job.params.end())
		return std::nullopt;
	return it->second;
}

std::size_t size_param(const Context &c, const std::string &name, std::size_t dflt)
{
	auto s = param(c, name);
	if (!s)
		return dflt;
	char *end = nullptr;
	unsigned long long v = std::strtoull(s->c_str(), &end, 10);
	if (s->empty() || *end != '\0' || (*s)[0] == '-')
		throw InputError("--" + name + " must be a non-negative integer");
	return static_cast<std::size_t>(v);
}

double real_param(const Context &c, const std::string &name, double dflt)
{
	auto s = param(c, name);
	if (!s)
		return dflt;
	if (s->find('/') != std::string::npos)
		return parse_rat(*s).get_d();
	char *end = nullptr;
	double v = std::strtod(s->c_str(), &end);
	if (s->empty() || *end != '\0' || !std::isfinite(v))
		throw InputError("--" + name + " must be a finite number");
	return v;
}

Rat rat_param(const Context &c, const std::string &name, const Rat &dflt)
{
	auto s = param(c, name);
	return s ? parse_rat(*s) : dflt;
}

json subspace_json(const Subspace &S) { return {{"dim", S.dim()}, {"basis", to_json(Mat::from_rows(S.ambient_dim(), S.basis()))}}; }

json cohomology_json(const CohomologyReport &r)
{
	json a = json::array();
	for (const auto &d : r.degrees) {
		json reps = json::array();
		for (const auto &v : d.representatives)
			reps.push_back(to_json(v));
		a.push_back({{"degree", d.degree}, {"dim_C", d.dim_C}, {"dim_Z", d.dim_Z}, {"dim_B", d.dim_B}, {"dim_H", d.dim_H},
		    {"representatives", reps}});
	}
	return a;
}

void verdict_from(Context &c, const Verdict &v, const char *key)
{
	c.result[key] = v.ok;
	if (v.witness)
		c.result["witness"] = to_json(*v.witness);
	c.verdict = v.ok;
}

void verb_verify(Context &c)
{
	need_inputs(c, 1, 1, "one algebra, module or graded file");
	switch (kind_of(c.files[0].doc)) {
	case Kind::Algebra: {
		c.result["kind"] = "algebra";
		verdict_from(c, is_kv(algebra_at(c, 0)), "kv");
		break;
	}
	case Kind::Module: {
		auto m = module_from_json(c.files[0].doc, c.files[0].dir);
		c.result["kind"] = "module";
		verdict_from(c, is_module(m.algebra, m.module), "module");
		c.result["left"] = m.module.is_left();
		break;
	}
	case Kind::Graded: {
		graded_from_json(c.files[0].doc, c.files[0].dir); // throws Rejected on failure
		c.result["kind"] = "graded";
		c.result["graded"] = true;
		break;
	}
	default:
		throw InputError("verify needs an algebra, module or graded file");
	}
}

void verb_jacobi(Context &c)
{
	need_inputs(c, 1, 1, "one algebra or module file");
	if (kind_of(c.files[0].doc) == Kind::Algebra) {
		KVAlgebra A = algebra_at(c, 0);
		c.result["jacobi"] = subspace_json(jacobi_algebra(A));
		c.result["center"] = subspace_json(center(A));
	} else {
		auto m = module_at(c, 0);
		require_kv(m.algebra);
		c.result["jacobi"] = subspace_json(jacobi_module(m.algebra, m.module));
	}
}

void verb_cohomology(Context &c, bool nijenhuis)
{
	need_inputs(c, 1, 1, "one algebra or module file");
	auto m = algebra_or_module(c, 0);
	require_kv(m.algebra);
	const std::size_t q_max = size_param(c, "q-max", 2);
	auto r = nijenhuis ? nijenhuis_cohomology(m.algebra, m.module, q_max) : cohomology(m.algebra, m.module, q_max);
	c.result["degrees"] = cohomology_json(r);
}

Mat block_injection(std::size_t total, std::size_t offset, std::size_t k)
{
	Mat M(total, k);
	for (std::size_t i = 0; i < k; ++i)
		M(offset + i, i) = 1;
	return M;
}

void verb_extend_algebra(Context &c)
{
	need_inputs(c, 2, 2, "a module file W and a 2-cochain ω");
	auto m = module_at(c, 0);
	require_kv(m.algebra);
	const std::size_t n = m.algebra.dim, k = m.module.dim;
	Cochain omega = cochain_at(c, 1, n, k);
	if (omega.degree != 2)
		throw InputError("ω must have degree 2");
	auto ext = algebra_extension_from_cocycle(m.algebra, m.module, omega);
	c.result["total"] = to_json(ext.T);
	c.result["injection"] = to_json(block_injection(n + k, 0, k));
	c.result["projection"] = to_json(block_injection(n + k, k, n).transpose());
	c.result["section"] = to_json(canonical_algebra_section(ext));
	c.result["defect"] = to_json(extension_defect(ext));
	verdict_from(c, is_kv(ext.T), "kv");
}

void verb_extend_module(Context &c)
{
	need_inputs(c, 3, 3, "module files W and V and a cochain f of bidegree (1,1)");
	auto w = module_at(c, 0), v = module_at(c, 1);
	if (w.algebra.product != v.algebra.product)
		throw InputError("W and V are modules over different algebras");
	require_kv(w.algebra);
	const std::size_t n = w.algebra.dim;
	Cochain f = cochain_at(c, 2, n + w.module.dim, v.module.dim);
	auto ext = module_extension_from_cocycle(w.algebra, w.module, v.module, f);
	const std::size_t t = ext.T.dim;
	c.result["total"] = to_json(ext.T, w.algebra);
	c.result["injection"] = to_json(block_injection(t, 0, v.module.dim));
	c.result["projection"] = to_json(block_injection(t, v.module.dim, w.module.dim).transpose());
	c.result["section"] = to_json(canonical_module_section(ext));
	c.result["module"] = true;
}

void verb_classify(Context &c)
{
	need_inputs(c, 3, 4, "W ω ω' (algebra extensions) or W V f f' (module extensions)");
	if (c.files.size() == 3) {
		auto m = module_at(c, 0);
		require_kv(m.algebra);
		const std::size_t n = m.algebra.dim, k = m.module.dim;
		Cochain a = cochain_at(c, 1, n, k), b = cochain_at(c, 2, n, k);
		for (const auto *x : {&a, &b})
			if (!is_cocycle(m.algebra, m.module, *x))
				throw Rejected("input is not a 2-cocycle");
		auto psi = algebra_extensions_equivalent(m.algebra, m.module, a, b);
		c.result["kind"] = "algebra";
		c.result["equivalent"] = psi.has_value();
		if (psi)
			c.result["psi"] = to_json(*psi);
	} else {
		auto w = module_at(c, 0), v = module_at(c, 1);
		if (w.algebra.product != v.algebra.product)
			throw InputError("W and V are modules over different algebras");
		require_kv(w.algebra);
		const std::size_t n = w.algebra.dim;
		Cochain a = cochain_at(c, 2, n + w.module.dim, v.module.dim), b = cochain_at(c, 3, n + w.module.dim, v.module.dim);
		module_extension_from_cocycle(w.algebra, w.module, v.module, a);
		module_extension_from_cocycle(w.algebra, w.module, v.module, b);
		auto th = extensions_equivalent(w.algebra, w.module, v.module, a, b);
		c.result["kind"] = "module";
		c.result["equivalent"] = th.has_value();
		if (th)
			c.result["theta"] = to_json(*th);
	}
}

MultiplicationJet jet_at(const Context &c, std::size_t i)
{
	return jet_from_json(doc(c, i, Kind::Jet, "a jet"), c.files[i].dir);
}

json residuals_json(const JetResiduals &r)
{
	json e = json::array();
	for (const auto &x : r.E)
		e.push_back(to_json(x));
	json j = {{"residuals", e}, {"ok", r.ok()}};
	if (r.failing_order)
		j["failing_order"] = *r.failing_order;
	if (r.witness)
		j["witness"] = to_json(*r.witness);
	return j;
}

void verb_deform_check(Context &c)
{
	need_inputs(c, 1, 1, "one jet file");
	auto jet = jet_at(c, 0);
	require_kv(jet.base);
	auto r = jet_residuals(jet);
	c.result = residuals_json(r);
	c.verdict = r.ok();
}

void verb_deform_solve(Context &c)
{
	need_inputs(c, 1, 1, "one jet file");
	auto jet = jet_at(c, 0);
	const std::size_t orders = size_param(c, "orders", 1);
	json steps = json::array();
	for (std::size_t t = 0; t < orders; ++t) {
		auto next = solve_next_order(jet);
		json s = {{"order", next.k}, {"R", to_json(next.R)}, {"delta_R", to_json(next.delta_R)}, {"R_is_cocycle", next.R_is_cocycle()}};
		if (next.mu_k) {
			s["mu"] = to_json(*next.mu_k);
			jet.coefficients.push_back(*next.mu_k);
		} else {
			s["certificate"] = to_json(*next.certificate);
			c.verdict = false;
		}
		steps.push_back(s);
		if (!c.verdict)
			break;
	}
	c.result["steps"] = steps;
	c.result["jet"] = to_json(jet);
	c.result["solved"] = c.verdict;
}

void verb_rigidity(Context &c)
{
	need_inputs(c, 1, 1, "one algebra file");
	auto A = algebra_at(c, 0);
	require_kv(A);
	auto r = rigidity_report(A);
	json reps = json::array();
	for (const auto &v : r.class_representatives)
		reps.push_back(to_json(v));
	c.result = {{"dim_Z2", r.dim_Z2}, {"dim_B2", r.dim_B2}, {"dim_H2", r.dim_H2}, {"rigid", r.rigid}, {"class_representatives", reps}};
}

void verb_curvature(Context &c)
{
	need_inputs(c, 2, 2, "an algebra file and a symmetric 2-cochain S");
	auto A = algebra_at(c, 0);
	Cochain S = cochain_at(c, 1, A.dim, A.dim);
	if (S.degree != 2)
		throw InputError("S must have degree 2");
	auto r = curvature_check(A, S);
	c.result = {{"R_direct", to_json(r.R_direct)}, {"R_comm", to_json(r.R_comm)}, {"residual", to_json(r.residual)},
	    {"delta_S", to_json(r.delta_S)}, {"formula_holds", r.formula_holds()}, {"S_is_cocycle", r.delta_S.is_zero()}};
	c.verdict = r.formula_holds();
}

GradedKVAlgebra graded_at(const Context &c, std::size_t i)
{
	return graded_from_json(doc(c, i, Kind::Graded, "a graded algebra"), c.files[i].dir);
}

void verb_graded_check(Context &c)
{
	need_inputs(c, 1, 1, "one graded file");
	auto G = graded_at(c, 0);
	const std::size_t n = G.n(), m = G.m();
	Subspace JG = jacobi_algebra(G.total());
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
		x.resize(n + m, Rat(0));
		both.push_back(x);
	}
	const bool lower = JG.contains(Subspace::span(n + m, odd)), upper = Subspace::span(n + m, both).contains(JG);
	c.result = {{"kv", true}, {"even_dim", n}, {"odd_dim", m}, {"jacobi_G", subspace_json(JG)}, {"jacobi_A", subspace_json(JA)},
	    {"jacobi_W", subspace_json(JW)}, {"JW_in_JG", lower}, {"JG_in_JA_plus_JW", upper},
	    {"exact_connectionlike_dim", exact_connectionlike_dim(G)}};
	c.verdict = lower && upper;
}

Tensor3 theta_input(const Context &c, std::size_t i, const GradedKVAlgebra &G)
{
	const std::size_t m = G.m();
	switch (kind_of(c.files[i].doc)) {
	case Kind::Pair:
		return pair_from_json(c.files[i].doc, G.n(), m).theta;
	case Kind::Cochain: {
		Cochain t = cochain_from_json(c.files[i].doc, m, m);
		if (t.degree != 2)
			throw InputError("θ must have degree 2");
		return as_tensor(t);
	}
	default:
		throw InputError("θ must be a pair file or a 2-cochain on W");
	}
}

void verb_graded_deform(Context &c)
{
	need_inputs(c, 2, 2, "a graded file and θ");
	auto G = graded_at(c, 0);
	Tensor3 th = theta_input(c, 1, G);
	auto T = deform_graded(G, th);
	auto cyc = is_theta_cocycle(G, th);
	auto chain = is_kv_chain(th);
	c.result["algebra"] = to_json(T);
	c.result["theta_cocycle"] = cyc.ok;
	c.result["kv_chain"] = chain.ok;
	verdict_from(c, is_kv(T), "kv");
	if (c.result["kv"].get<bool>() != (cyc.ok && chain.ok))
		throw Error("is_kv(G_θ) disagrees with cocycle ∧ KV-chain");
}

json connectionlike_json(const ConnectionlikeReport &r)
{
	json j = {{"c1", r.c1}, {"c2", r.c2}, {"c3_definition", r.c3_definition}, {"c3_proof", r.c3_proof}, {"system1", r.system1},
	    {"system2", r.system2}, {"system3", r.system3}, {"cocycle", r.cocycle}, {"degenerate", r.degenerate},
	    {"connectionlike", r.connectionlike()}};
	if (r.witness)
		j["witness"] = to_json(*r.witness);
	return j;
}

void verb_connectionlike(Context &c)
{
	need_inputs(c, 2, 2, "a graded file and a pair file or a 2-cochain on G");
	auto G = graded_at(c, 0);
	ConnectionlikePair p;
	if (kind_of(c.files[1].doc) == Kind::Pair) {
		p = pair_from_json(c.files[1].doc, G.n(), G.m());
	} else {
		const std::size_t d = G.n() + G.m();
		Cochain cc = cochain_at(c, 1, d, d);
		if (cc.degree != 2)
			throw InputError("c must have degree 2");
		auto e = connectionlike_from_cocycle(G, cc);
		c.result["extracted"] = e.pair.has_value();
		if (!e.pair) {
			c.result["reason"] = e.reason;
			c.verdict = false;
			return;
		}
		p = *e.pair;
		c.result["pair"] = to_json(p);
	}
	auto r = is_connectionlike(G, p);
	c.result["report"] = connectionlike_json(r);
	c.result["deformation"] = to_json(deform_graded(G, p.theta));
	c.verdict = r.connectionlike();
}

void verb_aff_suite(Context &c)
{
	need_inputs(c, 0, 0, "no inputs");
	auto A = aff_algebra();
	std::vector<std::pair<Rat, Rat>> grid;
	if (param(c, "alpha") || param(c, "beta"))
		grid.emplace_back(rat_param(c, "alpha", 1), rat_param(c, "beta", 0));
	else
		grid = {{1, 0}, {2, 3}, {-1, 5}};
	auto h = cohomology(A, regular_bimodule(A), 0);
	auto B = lie_bracket(A);
	c.result["kv"] = is_kv(A).ok;
	c.result["jacobi"] = subspace_json(jacobi_algebra(A));
	c.result["H0"] = h.at(0).dim_H;
	c.result["bracket_e1_e2"] = to_json(Vec{B(0, 1, 0), B(0, 1, 1)});
	bool all = c.result["kv"].get<bool>() && h.at(0).dim_H == 0;
	json cases = json::array();
	for (const auto &[a, b] : grid) {
		auto r = s_cocycle_suite(a, b);
		json family = json::object();
		bool fam_ok = true;
		for (Rat t : {Rat(1), Rat(-1), Rat(1, 2), Rat(7)}) {
			KVAlgebra D(2);
			auto mu = as_cochain(A.product);
			mu.values += t * s_alpha_beta(a, b).values;
			D.product = as_tensor(mu);
			const bool ok = is_kv(D).ok;
			family[to_string(t)] = ok;
			fam_ok = fam_ok && ok;
		}
		cases.push_back({{"alpha", to_json(a)}, {"beta", to_json(b)}, {"cocycle", r.cocycle}, {"self_bracket", r.self_bracket},
		    {"non_exact", r.non_exact}, {"non_exact_claimed", r.alpha_nonzero}, {"passed", r.passed()}, {"family_kv", family}});
		all = all && r.passed() && fam_ok;
	}
	c.result["cases"] = cases;
	c.verdict = all;
}

std::string csv_of(const Trajectory &tr)
{
	std::ostringstream os;
	os.precision(17);
	os << "t,x,y,vx,vy\n";
	for (const auto &s : tr.samples)
		os << s.t << ',' << s.x << ',' << s.y << ',' << s.vx << ',' << s.vy << '\n';
	return os.str();
}

void verb_geodesic(Context &c)
{
	need_inputs(c, 0, 0, "no inputs");
	GeodesicProblem p;
	p.alpha = real_param(c, "alpha", 2);
	p.beta = real_param(c, "beta", 0);
	p.x0 = real_param(c, "x0", 0);
	p.y0 = real_param(c, "y0", 0);
	p.vx0 = real_param(c, "vx0", 1);
	p.vy0 = real_param(c, "vy0", 0);
	p.t0 = real_param(c, "t0", 0);
	p.t1 = real_param(c, "t1", 1);
	p.step = real_param(c, "step", 1e-3);
	auto tr = integrate_geodesic(p);
	c.csv = csv_of(tr);
	const auto &last = tr.samples.back();
	c.result = {{"termination", to_string(tr.termination)}, {"samples", tr.samples.size()},
	    {"final", {{"t", last.t}, {"x", last.x}, {"y", last.y}, {"vx", last.vx}, {"vy", last.vy}}},
	    {"tolerance", p.tolerance}, {"threshold", p.threshold}};
	if (tr.t_star) {
		c.result["t_star"] = *tr.t_star;
		c.result["t_star_bracket"] = tr.t_star_bracket;
	}
	if (p.alpha != 0 && p.vx0 != 0) {
		const double u = 1 / p.vx0 - p.alpha * p.t0 / 2;
		c.result["pole"] = -2 * u / p.alpha;
		double worst = 0;
		for (const auto &s : tr.samples)
			if (p.alpha * s.t / 2 + u != 0)
				worst = std::max(worst, std::abs(s.x - closed_form_x(p.alpha, u, p.x0 - closed_form_x(p.alpha, u, 0, p.t0), s.t)));
		c.result["x_closed_form_max_error"] = worst;
		if (p.alpha != -1 && tr.termination == Termination::ReachedEnd) {
			try {
				auto fit = y_power_law_fit(tr, p);
				c.result["y_fit"] = {{"exponent", fit.exponent}, {"expected", -(1 + p.alpha) / p.alpha},
				    {"coefficient", fit.coefficient}, {"samples_used", fit.samples_used}};
			} catch (const Rejected &e) {
				c.result["y_fit"] = {{"skipped", e.what()}};
			}
		}
	}
	c.verdict = tr.termination != Termination::StepUnderflow;
}

void verb_radiant(Context &c)
{
	need_inputs(c, 1, 2, "an algebra file, or a left module file and a parallel 2-cochain g");
	if (c.files.size() == 1) {
		auto m = algebra_or_module(c, 0);
		auto H = find_radiant(m.algebra);
		c.result["exists"] = !H.empty();
		if (!H.empty()) {
			c.result["particular"] = to_json(*H.particular);
			c.result["directions"] = subspace_json(H.directions);
		}
		if (kind_of(c.files[0].doc) == Kind::Module)
			c.result["parallel"] = subspace_json(parallel_cochains(m.algebra, m.module));
		c.verdict = !H.empty();
		return;
	}
	auto m = module_at(c, 0);
	Cochain g = cochain_at(c, 1, m.algebra.dim, m.module.dim);
	auto H = find_radiant(m.algebra);
	if (H.empty())
		throw Rejected("the algebra has no radiant element");
	auto th = radiant_primitive(m.algebra, m.module, *H.particular, g);
	c.result["H"] = to_json(*H.particular);
	c.result["theta"] = to_json(th);
	Cochain sum = coboundary(m.algebra, m.module, th);
	sum.values += g.values;
	c.result["delta_theta_plus_g_zero"] = sum.is_zero();
	c.verdict = sum.is_zero();
}

void verb_proptest(Context &c)
{
	need_inputs(c, 0, 0, "no inputs");
	const std::size_t count = size_param(c, "count", 100);
	auto rep = proptest(c.job.seed, count, c.job.mutant ? Variant::Mutant : Variant::Normative);
	json props = json::array();
	for (const auto &p : rep.properties) {
		json f = json::array();
		for (const auto &x : p.failures)
			f.push_back({{"seed", x.seed}, {"witness", x.witness}});
		props.push_back({{"name", p.name}, {"instances", p.instances}, {"ok", p.ok()}, {"failures", f}});
	}
	c.result = {{"count", count}, {"mutant", c.job.mutant}, {"properties", props}, {"ok", rep.ok()}};
	c.verdict = rep.ok();
}

using Handler = std::function<void(Context &)>;

const std::map<std::string, Handler> &handlers()
{
	static const std::map<std::string, Handler> h = {
	    {"verify", verb_verify},
	    {"jacobi", verb_jacobi},
	    {"cohomology", [](Context &c) { verb_cohomology(c, false); }},
	    {"nijenhuis", [](Context &c) { verb_cohomology(c, true); }},
	    {"extend-algebra", verb_extend_algebra},
	    {"extend-module", verb_extend_module},
	    {"classify-ext", verb_classify},
	    {"deform-check", verb_deform_check},
	    {"deform-solve", verb_deform_solve},
	    {"rigidity", verb_rigidity},
	    {"curvature-check", verb_curvature},
	    {"graded-check", verb_graded_check},
	    {"graded-deform", verb_graded_deform},
	    {"connectionlike", verb_connectionlike},
	    {"aff-suite", verb_aff_suite},
	    {"geodesic", verb_geodesic},
	    {"radiant", verb_radiant},
	    {"proptest", verb_proptest},
	};
	return h;
}

json error_doc(const char *kind, const std::string &msg) { return {{"kind", kind}, {"message", msg}}; }

} // namespace

std::string Report::text() const { return doc.dump(2) + "\n"; }

const std::vector<std::string> &verbs()
{
	static const std::vector<std::string> v = [] {
		std::vector<std::string> out;
		for (const auto &[k, _] : handlers())
			out.push_back(k);
		return out;
	}();
	return v;
}

std::vector<std::string> fixture_catalog()
{
	auto names = fixture_names();
	names.push_back("flat-model");
	return names;
}

json fixture_document(const std::string &name)
{
	if (name == "flat-model")
		return to_json(flat_model());
	KVAlgebra A = fixture_by_name(name);
	if (A.name.empty())
		A.name = name;
	return to_json(A);
}

Report run(const JobSpec &job)
{
	Report rep;
	rep.doc = {{"format_version", format_version}, {"verb", job.verb}, {"seed", job.seed}};
	auto h = handlers().find(job.verb);
	if (h == handlers().end()) {
		rep.doc["verdict"] = "error";
		rep.doc["error"] = error_doc("input", "unknown verb '" + job.verb + "'");
		rep.exit_code = BadInput;
		return rep;
	}
	override_entry_budget(job.budget);
	Context c{job, {}, json::object(), true, {}};
	try {
		json inputs = json::array();
		for (const auto &src : job.inputs) {
			c.files.push_back(load_input(src));
			inputs.push_back({{"source", src}, {"digest", c.files.back().digest}});
		}
		rep.doc["inputs"] = inputs;
		h->second(c);
		rep.doc["result"] = c.result;
		rep.doc["verdict"] = c.verdict ? "pass" : "fail";
		rep.exit_code = c.verdict ? Ok : MathFailure;
		rep.csv = c.csv;
	} catch (const BudgetError &e) {
		rep.doc["verdict"] = "error";
		rep.doc["error"] = error_doc("budget", e.what());
		rep.exit_code = OverBudget;
	} catch (const InputError &e) {
		rep.doc["verdict"] = "error";
		rep.doc["error"] = error_doc("input", e.what());
		rep.exit_code = BadInput;
	} catch (const Rejected &e) {
		rep.doc["verdict"] = "fail";
		rep.doc["error"] = error_doc("rejected", e.what());
		rep.exit_code = MathFailure;
	} catch (const json::exception &e) {
		rep.doc["verdict"] = "error";
		rep.doc["error"] = error_doc("input", e.what());
		rep.exit_code = BadInput;
	}
	override_entry_budget(std::nullopt);
	return rep;
}

} // namespace kv
