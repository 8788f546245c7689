#include "kvcohom/complex.hpp"
#include "kvcohom/errors.hpp"

#include <cstdlib>
#include <string>

namespace kv {

std::size_t Cochain::space_dim(std::size_t n, std::size_t m, std::size_t q)
{
	std::size_t d = m;
	for (std::size_t t = 0; t < q; ++t)
		d *= n;
	return d;
}

Cochain::Cochain(std::size_t n_, std::size_t m_, std::size_t q, Vec v) : n(n_), m(m_), degree(q), values(std::move(v))
{
	if (values.size() != space_dim(n, m, q))
		throw InputError("cochain table has " + std::to_string(values.size()) + " entries, expected " +
		    std::to_string(space_dim(n, m, q)));
}

Vec Cochain::at(const std::vector<std::size_t> &args) const
{
	if (args.size() != degree)
		throw InputError("cochain evaluated on the wrong number of arguments");
	std::size_t base = tuple_index(args, n) * m;
	return Vec(values.begin() + static_cast<long>(base), values.begin() + static_cast<long>(base + m));
}

std::size_t tuple_index(const std::vector<std::size_t> &args, std::size_t n)
{
	std::size_t x = 0;
	for (auto i : args)
		x = x * n + i;
	return x;
}

std::vector<std::size_t> tuple_digits(std::size_t index, std::size_t n, std::size_t q)
{
	std::vector<std::size_t> d(q);
	for (std::size_t t = q; t-- > 0;) {
		d[t] = index % n;
		index /= n;
	}
	return d;
}

namespace {
std::optional<std::size_t> budget_override;
}

void override_entry_budget(std::optional<std::size_t> budget) { budget_override = budget; }

std::size_t entry_budget()
{
	if (budget_override)
		return *budget_override;
	if (const char *s = std::getenv("KVCOHOM_ENTRY_BUDGET")) {
		char *end = nullptr;
		unsigned long long v = std::strtoull(s, &end, 10);
		if (end != s && *end == '\0' && v > 0)
			return static_cast<std::size_t>(v);
		throw InputError(std::string("KVCOHOM_ENTRY_BUDGET is not a positive integer: ") + s);
	}
	return 10'000'000;
}

void check_budget(std::size_t n, std::size_t m, std::size_t q, const char *what)
{
	const std::size_t budget = entry_budget();
	std::size_t d = m;
	for (std::size_t t = 0; t < q; ++t) {
		if (n != 0 && d > budget / n)
			throw BudgetError(std::string(what) + ": degree " + std::to_string(q) + " cochain space exceeds the entry budget of " +
			    std::to_string(budget));
		d *= n;
	}
	if (d > budget)
		throw BudgetError(std::string(what) + ": degree " + std::to_string(q) + " cochain space has " + std::to_string(d) +
		    " entries, budget " + std::to_string(budget));
}

void for_each_coboundary_term(const KVAlgebra &A, const KVModule &W, std::size_t q,
    const std::function<void(std::size_t, std::size_t, const Rat &)> &emit, Variant variant)
{
	if (q == 0)
		throw InputError("degree-0 cochains go through coboundary0");
	if (W.algebra_dim != A.dim)
		throw InputError("module and algebra dimensions disagree");
	const std::size_t n = A.dim, m = W.dim;
	const std::size_t outs = Cochain::space_dim(n, 1, q + 1);
	std::vector<std::size_t> rest(q), moved(q), last(q);
	for (std::size_t out = 0; out < outs; ++out) {
		auto a = tuple_digits(out, n, q + 1);
		for (std::size_t j = 0; j < q; ++j) {
			const Rat sign = (j % 2 == 0) ? -1 : 1; // (−1)^{j+1} for 0-based j
			for (std::size_t t = 0, u = 0; t <= q; ++t)
				if (t != j)
					rest[u++] = a[t];
			const std::size_t rest_ix = tuple_index(rest, n);

			// a_j · f(…â_j…)
			for (std::size_t be = 0; be < m; ++be)
				for (std::size_t ga = 0; ga < m; ++ga) {
					const Rat &c = W.left(a[j], be, ga);
					if (sgn(c) != 0)
						emit(out * m + ga, rest_ix * m + be, sign * c);
				}

			// − f(…â_j…, a_j a_s in slot s, …)
			for (std::size_t s = 0; s <= q; ++s) {
				if (s == j)
					continue;
				const std::size_t pos = s < j ? s : s - 1;
				for (std::size_t k = 0; k < n; ++k) {
					const Rat &c = A.product(a[j], a[s], k);
					if (sgn(c) == 0)
						continue;
					moved = rest;
					moved[pos] = k;
					const std::size_t ix = tuple_index(moved, n);
					for (std::size_t ga = 0; ga < m; ++ga)
						emit(out * m + ga, ix * m + ga, -sign * c);
				}
			}

			// f(a_1 … â_j … a_q, a_j) · a_{q+1}
			for (std::size_t t = 0, u = 0; t < q; ++t)
				if (t != j)
					last[u++] = a[t];
			last[q - 1] = a[j];
			const std::size_t last_ix = tuple_index(last, n);
			const Rat s3 = variant == Variant::Mutant ? Rat(-sign) : sign;
			for (std::size_t be = 0; be < m; ++be)
				for (std::size_t ga = 0; ga < m; ++ga) {
					const Rat &c = W.right(be, a[q], ga);
					if (sgn(c) != 0)
						emit(out * m + ga, last_ix * m + be, s3 * c);
				}
		}
	}
}

Cochain coboundary(const KVAlgebra &A, const KVModule &W, const Cochain &f, Variant v)
{
	if (f.n != A.dim || f.m != W.dim)
		throw InputError("cochain does not match the algebra/module dimensions");
	if (f.degree == 0)
		return coboundary0(A, W, f.values);
	check_budget(A.dim, W.dim, f.degree + 1, "coboundary");
	Cochain out(f.n, f.m, f.degree + 1);
	for_each_coboundary_term(
	    A, W, f.degree,
	    [&](std::size_t r, std::size_t c, const Rat &x) {
		    if (sgn(f.values[c]) != 0)
			    out.values[r] += x * f.values[c];
	    },
	    v);
	return out;
}

Cochain degree0_map(const KVAlgebra &A, const KVModule &W, const Vec &w)
{
	if (w.size() != W.dim)
		throw InputError("degree-0 cochain has the wrong length");
	Cochain out(A.dim, W.dim, 1);
	for (std::size_t i = 0; i < A.dim; ++i) {
		Vec v = W.right_basis(w, i) - W.left_basis(i, w);
		for (std::size_t be = 0; be < W.dim; ++be)
			out.values[i * W.dim + be] = v[be];
	}
	return out;
}

Cochain coboundary0(const KVAlgebra &A, const KVModule &W, const Vec &w)
{
	if (!jacobi_module(A, W).contains(w))
		throw Rejected("degree-0 cochain is not a Jacobi element of the module");
	return degree0_map(A, W, w);
}

Mat degree0_matrix(const KVAlgebra &A, const KVModule &W)
{
	Mat M(A.dim * W.dim, W.dim);
	for (std::size_t al = 0; al < W.dim; ++al) {
		auto c = degree0_map(A, W, unit_vector(W.dim, al));
		for (std::size_t r = 0; r < c.values.size(); ++r)
			M(r, al) = c.values[r];
	}
	return M;
}

Mat coboundary_matrix(const KVAlgebra &A, const KVModule &W, std::size_t q, Variant v)
{
	if (q == 0) {
		Mat full = degree0_matrix(A, W);
		const Subspace Jw = jacobi_module(A, W);
		const auto &J = Jw.basis();
		Mat M(full.rows(), J.size());
		for (std::size_t c = 0; c < J.size(); ++c) {
			Vec col = full.apply(J[c]);
			for (std::size_t r = 0; r < col.size(); ++r)
				M(r, c) = col[r];
		}
		return M;
	}
	check_budget(A.dim, W.dim, q + 1, "coboundary_matrix");
	Mat M(Cochain::space_dim(A.dim, W.dim, q + 1), Cochain::space_dim(A.dim, W.dim, q));
	for_each_coboundary_term(A, W, q, [&](std::size_t r, std::size_t c, const Rat &x) { M(r, c) += x; }, v);
	return M;
}

Mat coboundary_matrix(const KVAlgebra &A, const KVModule &W, std::size_t q, const std::vector<std::size_t> &rows,
    const std::vector<std::size_t> &cols)
{
	if (q == 0)
		throw InputError("restricted coboundary matrices start in degree 1");
	check_budget(A.dim, W.dim, q + 1, "coboundary_matrix");
	const std::size_t R = Cochain::space_dim(A.dim, W.dim, q + 1), C = Cochain::space_dim(A.dim, W.dim, q);
	constexpr std::size_t none = static_cast<std::size_t>(-1);
	std::vector<std::size_t> rpos(R, none), cpos(C, none);
	for (std::size_t i = 0; i < rows.size(); ++i)
		rpos.at(rows[i]) = i;
	for (std::size_t i = 0; i < cols.size(); ++i)
		cpos.at(cols[i]) = i;
	Mat M(rows.size(), cols.size());
	for_each_coboundary_term(A, W, q, [&](std::size_t r, std::size_t c, const Rat &x) {
		if (rpos[r] != none && cpos[c] != none)
			M(rpos[r], cpos[c]) += x;
	});
	return M;
}

const DegreeReport &CohomologyReport::at(std::size_t q) const
{
	for (const auto &d : degrees)
		if (d.degree == q)
			return d;
	throw InputError("degree " + std::to_string(q) + " not in the report");
}

CohomologyReport complex_cohomology(const std::vector<std::size_t> &dims, const std::vector<Mat> &d, std::size_t first_degree)
{
	CohomologyReport rep;
	Subspace below(0);
	for (std::size_t k = 0; k < dims.size(); ++k) {
		DegreeReport dr;
		dr.degree = first_degree + k;
		dr.dim_C = dims[k];
		Subspace Z = k < d.size() ? kernel(d[k]) : Subspace::full(dims[k]);
		Subspace B = k > 0 ? image(d[k - 1]) : Subspace(dims[k]);
		if (!Z.contains(B))
			throw Error("differential does not square to zero at degree " + std::to_string(dr.degree));
		dr.dim_Z = Z.dim();
		dr.dim_B = B.dim();
		dr.dim_H = dr.dim_Z - dr.dim_B;
		dr.representatives = complement_basis(Z.basis(), B);
		rep.degrees.push_back(std::move(dr));
	}
	return rep;
}

CohomologyReport cohomology(const KVAlgebra &A, const KVModule &W, std::size_t q_max)
{
	if (auto v = is_kv(A); !v)
		throw Rejected("cohomology needs a KV algebra: " + v.witness->describe());
	if (auto v = is_module(A, W); !v)
		throw Rejected("cohomology needs a KV module: " + v.witness->describe());
	check_budget(A.dim, W.dim, q_max + 1, "cohomology");
	Subspace J = jacobi_module(A, W);
	std::vector<std::size_t> dims{J.dim()};
	std::vector<Mat> d{coboundary_matrix(A, W, 0)};
	for (std::size_t q = 1; q <= q_max; ++q) {
		dims.push_back(Cochain::space_dim(A.dim, W.dim, q));
		d.push_back(coboundary_matrix(A, W, q));
	}
	auto rep = complex_cohomology(dims, d, 0);
	// degree-0 representatives come out in J(W) coordinates
	for (auto &r : rep.degrees[0].representatives) {
		Vec w = zeros(W.dim);
		for (std::size_t i = 0; i < r.size(); ++i)
			if (sgn(r[i]) != 0)
				w += r[i] * J.basis()[i];
		r = std::move(w);
	}
	return rep;
}

bool is_cocycle(const KVAlgebra &A, const KVModule &W, const Cochain &f)
{
	if (f.degree == 0)
		return jacobi_module(A, W).contains(f.values) && degree0_map(A, W, f.values).is_zero();
	return coboundary(A, W, f).is_zero();
}

std::optional<Cochain> is_coboundary(const KVAlgebra &A, const KVModule &W, const Cochain &f)
{
	if (f.n != A.dim || f.m != W.dim)
		throw InputError("cochain does not match the algebra/module dimensions");
	if (f.degree == 0) {
		if (f.is_zero())
			return Cochain(A.dim, W.dim, 0);
		return std::nullopt;
	}
	if (f.degree == 1) {
		Subspace J = jacobi_module(A, W);
		auto x = solve(coboundary_matrix(A, W, 0), f.values);
		if (!x)
			return std::nullopt;
		Vec w = zeros(W.dim);
		for (std::size_t i = 0; i < x->size(); ++i)
			if (sgn((*x)[i]) != 0)
				w += (*x)[i] * J.basis()[i];
		return Cochain(A.dim, W.dim, 0, w);
	}
	auto x = solve(coboundary_matrix(A, W, f.degree - 1), f.values);
	if (!x)
		return std::nullopt;
	return Cochain(A.dim, W.dim, f.degree - 1, *x);
}

namespace {

// Strictly increasing p-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t p)
{
	std::vector<std::vector<std::size_t>> out;
	std::vector<std::size_t> cur;
	std::function<void(std::size_t)> rec = [&](std::size_t start) {
		if (cur.size() == p) {
			out.push_back(cur);
			return;
		}
		for (std::size_t i = start; i < n; ++i) {
			cur.push_back(i);
			rec(i + 1);
			cur.pop_back();
		}
	};
	rec(0);
	return out;
}

std::size_t binomial(std::size_t n, std::size_t k)
{
	if (k > n)
		return 0;
	std::size_t r = 1;
	for (std::size_t i = 1; i <= k; ++i)
		r = r * (n - k + i) / i;
	return r;
}

} // namespace

std::size_t ce_space_dim(std::size_t n, std::size_t m, std::size_t p) { return binomial(n, p) * n * m; }

Mat ce_differential(const KVAlgebra &A, const KVModule &W, std::size_t p)
{
	const std::size_t n = A.dim, m = W.dim, dm = n * m;
	Tensor3 B = lie_bracket(A);
	// action of e_i on L(A, W): f_{γ,β} ↦ Σ_δ L(i,β,δ) f_{γ,δ} − Σ_c B(i,c,γ) f_{c,β}
	Tensor3 act(n, dm, dm);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t ga = 0; ga < n; ++ga)
			for (std::size_t be = 0; be < m; ++be) {
				const std::size_t f = ga * m + be;
				for (std::size_t de = 0; de < m; ++de)
					act(i, f, ga * m + de) += W.left(i, be, de);
				for (std::size_t c = 0; c < n; ++c)
					act(i, f, c * m + be) -= B(i, c, ga);
			}

	auto src = increasing_tuples(n, p), dst = increasing_tuples(n, p + 1);
	auto index_of = [&](const std::vector<std::size_t> &t) {
		// position of t in the lexicographic list of p-subsets
		std::size_t ix = 0, prev = 0;
		for (std::size_t k = 0; k < t.size(); ++k) {
			for (std::size_t v = prev; v < t[k]; ++v)
				ix += binomial(n - v - 1, t.size() - k - 1);
			prev = t[k] + 1;
		}
		return ix;
	};
	Mat M(dst.size() * dm, src.size() * dm);
	std::vector<std::size_t> rest;
	for (std::size_t r = 0; r < dst.size(); ++r) {
		const auto &x = dst[r];
		for (std::size_t i = 0; i <= p; ++i) {
			rest.clear();
			for (std::size_t t = 0; t <= p; ++t)
				if (t != i)
					rest.push_back(x[t]);
			const std::size_t col = index_of(rest);
			const Rat sign = i % 2 == 0 ? 1 : -1;
			for (std::size_t mu = 0; mu < dm; ++mu)
				for (std::size_t nu = 0; nu < dm; ++nu)
					if (sgn(act(x[i], mu, nu)) != 0)
						M(r * dm + nu, col * dm + mu) += sign * act(x[i], mu, nu);
		}
		for (std::size_t i = 0; i <= p; ++i)
			for (std::size_t j = i + 1; j <= p; ++j) {
				rest.clear();
				for (std::size_t t = 0; t <= p; ++t)
					if (t != i && t != j)
						rest.push_back(x[t]);
				const Rat sign = (i + j) % 2 == 0 ? 1 : -1;
				for (std::size_t k = 0; k < n; ++k) {
					const Rat &c = B(x[i], x[j], k);
					if (sgn(c) == 0)
						continue;
					// ω(e_k, rest) = (−1)^{#rest < k} ω(sorted)
					std::size_t below = 0;
					bool clash = false;
					for (auto v : rest) {
						clash |= v == k;
						below += v < k;
					}
					if (clash)
						continue;
					std::vector<std::size_t> sorted = rest;
					sorted.insert(sorted.begin() + static_cast<long>(below), k);
					const std::size_t col = index_of(sorted);
					Rat s = sign * c;
					if (below % 2 == 1)
						s = -s;
					for (std::size_t nu = 0; nu < dm; ++nu)
						M(r * dm + nu, col * dm + nu) += s;
				}
			}
	}
	return M;
}

CohomologyReport nijenhuis_cohomology(const KVAlgebra &A, const KVModule &W, std::size_t q_max)
{
	if (auto v = is_kv(A); !v)
		throw Rejected("nijenhuis_cohomology needs a KV algebra: " + v.witness->describe());
	if (auto v = is_module(A, W); !v)
		throw Rejected("nijenhuis_cohomology needs a KV module: " + v.witness->describe());
	std::vector<std::size_t> dims;
	std::vector<Mat> d;
	for (std::size_t p = 0; p + 1 <= q_max; ++p) {
		dims.push_back(ce_space_dim(A.dim, W.dim, p));
		d.push_back(ce_differential(A, W, p));
	}
	return complex_cohomology(dims, d, 1);
}

} // namespace kv
