#include "kvcohom/algebra.hpp"
#include "kvcohom/errors.hpp"

#include <sstream>

namespace kv {

Vec KVAlgebra::mul(const Vec &a, const Vec &b) const
{
	if (a.size() != dim || b.size() != dim)
		throw InputError("element dimension mismatch in product");
	Vec r = zeros(dim);
	for (std::size_t i = 0; i < dim; ++i) {
		if (sgn(a[i]) == 0)
			continue;
		for (std::size_t j = 0; j < dim; ++j) {
			if (sgn(b[j]) == 0)
				continue;
			Rat s = a[i] * b[j];
			for (std::size_t k = 0; k < dim; ++k)
				if (sgn(product(i, j, k)) != 0)
					r[k] += s * product(i, j, k);
		}
	}
	return r;
}

Vec KVAlgebra::mul_basis(std::size_t i, std::size_t j) const
{
	Vec r(dim);
	for (std::size_t k = 0; k < dim; ++k)
		r[k] = product(i, j, k);
	return r;
}

Vec KVModule::act_left(const Vec &a, const Vec &w) const
{
	if (a.size() != algebra_dim || w.size() != dim)
		throw InputError("dimension mismatch in left action");
	Vec r = zeros(dim);
	for (std::size_t i = 0; i < algebra_dim; ++i)
		if (sgn(a[i]) != 0)
			r += a[i] * left_basis(i, w);
	return r;
}

Vec KVModule::act_right(const Vec &w, const Vec &a) const
{
	if (a.size() != algebra_dim || w.size() != dim)
		throw InputError("dimension mismatch in right action");
	Vec r = zeros(dim);
	for (std::size_t i = 0; i < algebra_dim; ++i)
		if (sgn(a[i]) != 0)
			r += a[i] * right_basis(w, i);
	return r;
}

Vec KVModule::left_basis(std::size_t i, const Vec &w) const
{
	Vec r = zeros(dim);
	for (std::size_t al = 0; al < dim; ++al) {
		if (sgn(w[al]) == 0)
			continue;
		for (std::size_t be = 0; be < dim; ++be)
			if (sgn(left(i, al, be)) != 0)
				r[be] += w[al] * left(i, al, be);
	}
	return r;
}

Vec KVModule::right_basis(const Vec &w, std::size_t i) const
{
	Vec r = zeros(dim);
	for (std::size_t al = 0; al < dim; ++al) {
		if (sgn(w[al]) == 0)
			continue;
		for (std::size_t be = 0; be < dim; ++be)
			if (sgn(right(al, i, be)) != 0)
				r[be] += w[al] * right(al, i, be);
	}
	return r;
}

namespace {

std::string vec_str(const Vec &v)
{
	std::string s = "(";
	for (std::size_t i = 0; i < v.size(); ++i)
		s += (i ? ", " : "") + to_string(v[i]);
	return s + ")";
}

void require_module_over(const KVAlgebra &A, const KVModule &W)
{
	if (W.algebra_dim != A.dim || W.left.d0 != A.dim || W.right.d1 != A.dim)
		throw InputError("module is not over an algebra of dimension " + std::to_string(A.dim));
}

} // namespace

std::string Witness::describe() const
{
	std::ostringstream os;
	os << identity << " fails at (";
	for (std::size_t i = 0; i < indices.size(); ++i)
		os << (i ? "," : "") << indices[i];
	os << "): " << vec_str(lhs) << " != " << vec_str(rhs);
	return os.str();
}

Vec associator(const KVAlgebra &A, const Vec &a, const Vec &b, const Vec &c)
{
	return A.mul(A.mul(a, b), c) - A.mul(a, A.mul(b, c));
}

MixedAssociators mixed_associators(const KVAlgebra &A, const KVModule &W, const Vec &a, const Vec &b, const Vec &w)
{
	require_module_over(A, W);
	MixedAssociators m;
	m.abw = W.act_left(A.mul(a, b), w) - W.act_left(a, W.act_left(b, w));
	m.awb = W.act_right(W.act_left(a, w), b) - W.act_left(a, W.act_right(w, b));
	m.wab = W.act_right(W.act_right(w, a), b) - W.act_right(w, A.mul(a, b));
	return m;
}

Verdict is_kv(const KVAlgebra &A)
{
	const std::size_t n = A.dim;
	if (A.product.d0 != n || A.product.d1 != n || A.product.d2 != n)
		throw InputError("product tensor shape does not match dim");
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				auto ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
				Vec l = associator(A, ei, ej, ek);
				Vec r = associator(A, ej, ei, ek);
				if (l != r)
					return {false, Witness{"(a,b,c) = (b,a,c)", {i, j, k}, l, r}};
			}
	return {};
}

Verdict is_module(const KVAlgebra &A, const KVModule &W)
{
	require_module_over(A, W);
	const std::size_t n = A.dim, m = W.dim;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t al = 0; al < m; ++al) {
				auto ei = unit_vector(n, i), ej = unit_vector(n, j), w = unit_vector(m, al);
				auto x = mixed_associators(A, W, ei, ej, w);
				auto y = mixed_associators(A, W, ej, ei, w);
				if (x.abw != y.abw)
					return {false, Witness{"(a,b,w) = (b,a,w)", {i, j, al}, x.abw, y.abw}};
				if (x.awb != x.wab)
					return {false, Witness{"(a,w,b) = (w,a,b)", {i, j, al}, x.awb, x.wab}};
			}
	return {};
}

Subspace jacobi_algebra(const KVAlgebra &A)
{
	auto v = is_kv(A);
	if (!v)
		throw Rejected("jacobi_algebra needs a KV algebra: " + v.witness->describe());
	return jacobi_module(A, regular_bimodule(A));
}

Subspace jacobi_module(const KVAlgebra &A, const KVModule &W)
{
	require_module_over(A, W);
	const std::size_t n = A.dim, m = W.dim;
	// rows indexed by (i, j, β), columns by the coordinates of w
	Mat M(n * n * m, m);
	for (std::size_t al = 0; al < m; ++al) {
		auto w = unit_vector(m, al);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j) {
				auto x = mixed_associators(A, W, unit_vector(n, i), unit_vector(n, j), w);
				for (std::size_t be = 0; be < m; ++be)
					M((i * n + j) * m + be, al) = x.abw[be];
			}
	}
	return kernel(M);
}

Subspace center(const KVAlgebra &A)
{
	const std::size_t n = A.dim;
	Mat M(n * n, n);
	for (std::size_t c = 0; c < n; ++c)
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t k = 0; k < n; ++k)
				M(i * n + k, c) = A.product(c, i, k) - A.product(i, c, k);
	return kernel(M);
}

Tensor3 lie_bracket(const KVAlgebra &A)
{
	const std::size_t n = A.dim;
	Tensor3 B(n, n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				B(i, j, k) = A.product(i, j, k) - A.product(j, i, k);
	return B;
}

KVModule regular_bimodule(const KVAlgebra &A)
{
	const std::size_t n = A.dim;
	KVModule W(n, n);
	W.left = A.product;
	for (std::size_t al = 0; al < n; ++al)
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t be = 0; be < n; ++be)
				W.right(al, i, be) = A.product(al, i, be);
	return W;
}

KVModule regular_left_module(const KVAlgebra &A)
{
	KVModule W(A.dim, A.dim);
	W.left = A.product;
	return W;
}

KVModule zero_module(std::size_t algebra_dim, std::size_t dim) { return KVModule(algebra_dim, dim); }

KVModule hom_module(const KVAlgebra &A, const KVModule &W, const KVModule &V)
{
	return multilinear_module(A, W, V, 1);
}

KVModule multilinear_module(const KVAlgebra &A, const KVModule &W, const KVModule &V, std::size_t q)
{
	require_module_over(A, W);
	require_module_over(A, V);
	const std::size_t n = A.dim, mw = W.dim, mv = V.dim;
	std::size_t tuples = 1;
	for (std::size_t t = 0; t < q; ++t)
		tuples *= mw;
	const std::size_t dim = tuples * mv;
	KVModule H(n, dim);
	std::vector<std::size_t> digits(q);
	for (std::size_t tup = 0; tup < tuples; ++tup) {
		// decode big-endian digits of the argument tuple
		std::size_t x = tup;
		for (std::size_t t = q; t-- > 0;) {
			digits[t] = x % mw;
			x /= mw;
		}
		for (std::size_t be = 0; be < mv; ++be) {
			const std::size_t f = tup * mv + be; // basis map: (tuple ↦ v_β)
			for (std::size_t i = 0; i < n; ++i) {
				// (a_i . f)(args) = a_i (f(args)) − Σ_s f(…, a_i w_s, …)
				for (std::size_t g = 0; g < mv; ++g)
					H.left(i, f, tup * mv + g) += V.left(i, be, g);
				// f(args') for args' with slot s replaced by a_i·w: coefficient on
				// the basis map at args' is the component of a_i w_{args'_s} along w_{digit}
				for (std::size_t s = 0; s < q; ++s) {
					// f evaluated at args' = args with slot s = γ' is nonzero only when
					// (args' with slot s) == tup's tuple; so the output basis entries are
					// tuples differing from `tup` in slot s.
					for (std::size_t gp = 0; gp < mw; ++gp) {
						const Rat &c = W.left(i, gp, digits[s]);
						if (sgn(c) == 0)
							continue;
						std::size_t other = 0;
						for (std::size_t t = 0; t < q; ++t)
							other = other * mw + (t == s ? gp : digits[t]);
						H.left(i, f, other * mv + be) -= c;
					}
				}
				// (f . a_i)(args) = f(args) a_i
				for (std::size_t g = 0; g < mv; ++g)
					H.right(f, i, tup * mv + g) += V.right(be, i, g);
			}
		}
	}
	return H;
}

KVModule multilinear_module(const KVAlgebra &A, const KVModule &W, std::size_t q) { return multilinear_module(A, W, W, q); }

KVAlgebra semidirect(const KVAlgebra &A, const KVModule &W)
{
	require_module_over(A, W);
	const std::size_t n = A.dim, m = W.dim;
	if (m == 0)
		return A;
	KVAlgebra G(n + m, A.name.empty() ? std::string() : A.name + "+W");
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				G.product(i, j, k) = A.product(i, j, k);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t al = 0; al < m; ++al)
			for (std::size_t be = 0; be < m; ++be) {
				G.product(i, n + al, n + be) = W.left(i, al, be);
				G.product(n + al, i, n + be) = W.right(al, i, be);
			}
	return G;
}

KVAlgebra direct_sum(const KVAlgebra &A, const KVAlgebra &B)
{
	const std::size_t n = A.dim, p = B.dim;
	KVAlgebra S(n + p, A.name + "(+)" + B.name);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				S.product(i, j, k) = A.product(i, j, k);
	for (std::size_t i = 0; i < p; ++i)
		for (std::size_t j = 0; j < p; ++j)
			for (std::size_t k = 0; k < p; ++k)
				S.product(n + i, n + j, n + k) = B.product(i, j, k);
	return S;
}

KVModule direct_sum(const KVModule &W, const KVModule &V)
{
	if (W.algebra_dim != V.algebra_dim)
		throw InputError("direct sum of modules over different algebras");
	const std::size_t n = W.algebra_dim, a = W.dim, b = V.dim;
	KVModule S(n, a + b);
	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t x = 0; x < a; ++x)
			for (std::size_t y = 0; y < a; ++y) {
				S.left(i, x, y) = W.left(i, x, y);
				S.right(x, i, y) = W.right(x, i, y);
			}
		for (std::size_t x = 0; x < b; ++x)
			for (std::size_t y = 0; y < b; ++y) {
				S.left(i, a + x, a + y) = V.left(i, x, y);
				S.right(a + x, i, a + y) = V.right(x, i, y);
			}
	}
	return S;
}

KVAlgebra change_basis(const KVAlgebra &A, const Mat &phi)
{
	const std::size_t n = A.dim;
	if (phi.rows() != n || phi.cols() != n)
		throw InputError("basis change has wrong shape");
	Mat inv = inverse(phi);
	KVAlgebra B(n, A.name);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			Vec r = phi.apply(A.mul(inv.col(i), inv.col(j)));
			for (std::size_t k = 0; k < n; ++k)
				B.product(i, j, k) = r[k];
		}
	return B;
}

KVModule change_basis(const KVModule &W, const Mat &psi)
{
	const std::size_t n = W.algebra_dim, m = W.dim;
	if (psi.rows() != m || psi.cols() != m)
		throw InputError("module basis change has wrong shape");
	Mat inv = inverse(psi);
	KVModule V(n, m);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t al = 0; al < m; ++al) {
			Vec l = psi.apply(W.left_basis(i, inv.col(al)));
			Vec r = psi.apply(W.right_basis(inv.col(al), i));
			for (std::size_t be = 0; be < m; ++be) {
				V.left(i, al, be) = l[be];
				V.right(al, i, be) = r[be];
			}
		}
	return V;
}

} // namespace kv
