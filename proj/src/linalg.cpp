#include "kvcohom/linalg.hpp"
#include "kvcohom/errors.hpp"

#include <numeric>
#include <utility>

namespace kv {

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

Mat Mat::identity(std::size_t n)
{
	Mat m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

Mat Mat::from_rows(std::size_t cols, const std::vector<Vec> &rows)
{
	Mat m(rows.size(), cols);
	for (std::size_t r = 0; r < rows.size(); ++r) {
		if (rows[r].size() != cols)
			throw InputError("row length mismatch");
		for (std::size_t c = 0; c < cols; ++c)
			m(r, c) = rows[r][c];
	}
	return m;
}

Mat Mat::from_cols(std::size_t rows, const std::vector<Vec> &cols)
{
	Mat m(rows, cols.size());
	for (std::size_t c = 0; c < cols.size(); ++c) {
		if (cols[c].size() != rows)
			throw InputError("column length mismatch");
		for (std::size_t r = 0; r < rows; ++r)
			m(r, c) = cols[c][r];
	}
	return m;
}

Vec Mat::row(std::size_t r) const { return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_); }

Vec Mat::col(std::size_t c) const
{
	Vec v(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		v[r] = (*this)(r, c);
	return v;
}

Mat Mat::transpose() const
{
	Mat t(cols_, rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			t(c, r) = (*this)(r, c);
	return t;
}

bool Mat::is_zero() const { return kv::is_zero(a_); }

Vec Mat::apply(const Vec &x) const
{
	if (x.size() != cols_)
		throw InputError("matrix-vector dimension mismatch");
	Vec y = zeros(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			if (sgn((*this)(r, c)) != 0)
				y[r] += (*this)(r, c) * x[c];
	return y;
}

Mat operator*(const Mat &a, const Mat &b)
{
	if (a.cols_ != b.rows_)
		throw InputError("matrix product dimension mismatch");
	Mat m(a.rows_, b.cols_);
	for (std::size_t i = 0; i < a.rows_; ++i)
		for (std::size_t k = 0; k < a.cols_; ++k) {
			const Rat &x = a(i, k);
			if (sgn(x) == 0)
				continue;
			for (std::size_t j = 0; j < b.cols_; ++j)
				m(i, j) += x * b(k, j);
		}
	return m;
}

Mat operator+(const Mat &a, const Mat &b)
{
	if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
		throw InputError("matrix sum dimension mismatch");
	Mat m = a;
	for (std::size_t i = 0; i < m.a_.size(); ++i)
		m.a_[i] += b.a_[i];
	return m;
}

Mat operator-(const Mat &a, const Mat &b)
{
	if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
		throw InputError("matrix difference dimension mismatch");
	Mat m = a;
	for (std::size_t i = 0; i < m.a_.size(); ++i)
		m.a_[i] -= b.a_[i];
	return m;
}

bool operator==(const Mat &a, const Mat &b) { return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_; }

namespace {

using IntRow = std::vector<mpz_class>;

// Clears denominators row by row; row scaling does not change the row space.
std::vector<IntRow> integer_rows(const Mat &m)
{
	std::vector<IntRow> out;
	out.reserve(m.rows());
	for (std::size_t r = 0; r < m.rows(); ++r) {
		mpz_class l = 1;
		for (std::size_t c = 0; c < m.cols(); ++c)
			if (sgn(m(r, c)) != 0)
				mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
		IntRow row(m.cols());
		for (std::size_t c = 0; c < m.cols(); ++c)
			if (sgn(m(r, c)) != 0)
				row[c] = m(r, c).get_num() * (l / m(r, c).get_den());
		out.push_back(std::move(row));
	}
	return out;
}

// Bareiss elimination with column skipping. Leaves the rows in echelon form;
// every division is exact. Returns the pivot columns.
std::vector<std::size_t> bareiss(std::vector<IntRow> &a, std::size_t cols)
{
	std::vector<std::size_t> pivots;
	mpz_class prev = 1;
	std::size_t r = 0;
	for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
		std::size_t p = r;
		while (p < a.size() && a[p][c] == 0)
			++p;
		if (p == a.size())
			continue;
		std::swap(a[r], a[p]);
		for (std::size_t i = r + 1; i < a.size(); ++i) {
			for (std::size_t j = c + 1; j < cols; ++j) {
				mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
				mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
			}
			a[i][c] = 0;
		}
		prev = a[r][c];
		pivots.push_back(c);
		++r;
	}
	a.resize(r);
	return pivots;
}

} // namespace

RowEchelon row_echelon(const Mat &m)
{
	auto ints = integer_rows(m);
	auto pivots = bareiss(ints, m.cols());
	RowEchelon e;
	e.pivots = pivots;
	e.rows.resize(ints.size());
	for (std::size_t r = 0; r < ints.size(); ++r) {
		Vec row(m.cols());
		const mpz_class &p = ints[r][pivots[r]];
		for (std::size_t c = 0; c < m.cols(); ++c)
			if (ints[r][c] != 0)
				row[c] = Rat(ints[r][c], p);
		for (auto &x : row)
			x.canonicalize();
		e.rows[r] = std::move(row);
	}
	// back-substitution
	for (std::size_t r = e.rows.size(); r-- > 0;) {
		const std::size_t pc = pivots[r];
		for (std::size_t u = 0; u < r; ++u) {
			Rat f = e.rows[u][pc];
			if (sgn(f) == 0)
				continue;
			for (std::size_t c = pc; c < m.cols(); ++c)
				if (sgn(e.rows[r][c]) != 0)
					e.rows[u][c] -= f * e.rows[r][c];
		}
	}
	return e;
}

std::size_t rank(const Mat &m)
{
	auto ints = integer_rows(m);
	return bareiss(ints, m.cols()).size();
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec> &vectors)
{
	Subspace s(ambient);
	if (vectors.empty())
		return s;
	auto e = row_echelon(Mat::from_rows(ambient, vectors));
	s.basis_ = std::move(e.rows);
	s.pivots_ = std::move(e.pivots);
	return s;
}

Subspace Subspace::full(std::size_t ambient)
{
	Subspace s(ambient);
	for (std::size_t i = 0; i < ambient; ++i) {
		s.basis_.push_back(unit_vector(ambient, i));
		s.pivots_.push_back(i);
	}
	return s;
}

Vec Subspace::reduce(const Vec &v) const
{
	if (v.size() != ambient_)
		throw InputError("subspace ambient dimension mismatch");
	Vec r = v;
	for (std::size_t i = 0; i < basis_.size(); ++i) {
		Rat f = r[pivots_[i]];
		if (sgn(f) == 0)
			continue;
		for (std::size_t c = pivots_[i]; c < ambient_; ++c)
			if (sgn(basis_[i][c]) != 0)
				r[c] -= f * basis_[i][c];
	}
	return r;
}

bool Subspace::contains(const Vec &v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace &other) const
{
	for (const auto &b : other.basis())
		if (!contains(b))
			return false;
	return true;
}

bool operator==(const Subspace &a, const Subspace &b) { return a.ambient_ == b.ambient_ && a.basis_ == b.basis_; }

Subspace kernel(const Mat &m)
{
	auto e = row_echelon(m);
	std::vector<bool> is_pivot(m.cols(), false);
	for (auto p : e.pivots)
		is_pivot[p] = true;
	std::vector<Vec> vs;
	for (std::size_t f = 0; f < m.cols(); ++f) {
		if (is_pivot[f])
			continue;
		Vec v = zeros(m.cols());
		v[f] = 1;
		for (std::size_t r = 0; r < e.rows.size(); ++r)
			v[e.pivots[r]] = -e.rows[r][f];
		vs.push_back(std::move(v));
	}
	return Subspace::span(m.cols(), vs);
}

Subspace image(const Mat &m)
{
	std::vector<Vec> cols;
	for (std::size_t c = 0; c < m.cols(); ++c)
		cols.push_back(m.col(c));
	return Subspace::span(m.rows(), cols);
}

std::optional<Vec> solve(const Mat &m, const Vec &b)
{
	if (b.size() != m.rows())
		throw InputError("solve: right-hand side length mismatch");
	Mat aug(m.rows(), m.cols() + 1);
	for (std::size_t r = 0; r < m.rows(); ++r) {
		for (std::size_t c = 0; c < m.cols(); ++c)
			aug(r, c) = m(r, c);
		aug(r, m.cols()) = b[r];
	}
	auto e = row_echelon(aug);
	Vec x = zeros(m.cols());
	for (std::size_t r = 0; r < e.rows.size(); ++r) {
		if (e.pivots[r] == m.cols())
			return std::nullopt;
		x[e.pivots[r]] = e.rows[r][m.cols()];
	}
	return x;
}

bool membership(const Subspace &s, const Vec &v) { return s.contains(v); }

Mat inverse(const Mat &m)
{
	if (m.rows() != m.cols())
		throw InputError("inverse of a non-square matrix");
	const std::size_t n = m.rows();
	Mat aug(n, 2 * n);
	for (std::size_t r = 0; r < n; ++r) {
		for (std::size_t c = 0; c < n; ++c)
			aug(r, c) = m(r, c);
		aug(r, n + r) = 1;
	}
	auto e = row_echelon(aug);
	if (e.rows.size() < n || e.pivots[n - 1] != n - 1)
		throw Rejected("matrix is singular");
	Mat inv(n, n);
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t c = 0; c < n; ++c)
			inv(r, c) = e.rows[r][n + c];
	return inv;
}

Subspace intersect(const Subspace &a, const Subspace &b)
{
	if (a.ambient_dim() != b.ambient_dim())
		throw InputError("intersect: ambient dimension mismatch");
	const std::size_t n = a.ambient_dim();
	if (a.dim() == 0 || b.dim() == 0)
		return Subspace(n);
	// Solve Σ x_i a_i − Σ y_j b_j = 0; the a-part of each solution spans the intersection.
	Mat m(n, a.dim() + b.dim());
	for (std::size_t i = 0; i < a.dim(); ++i)
		for (std::size_t r = 0; r < n; ++r)
			m(r, i) = a.basis()[i][r];
	for (std::size_t j = 0; j < b.dim(); ++j)
		for (std::size_t r = 0; r < n; ++r)
			m(r, a.dim() + j) = -b.basis()[j][r];
	std::vector<Vec> vs;
	Subspace ker = kernel(m);
	for (const auto &k : ker.basis()) {
		Vec v = zeros(n);
		for (std::size_t i = 0; i < a.dim(); ++i)
			if (sgn(k[i]) != 0)
				v += k[i] * a.basis()[i];
		vs.push_back(std::move(v));
	}
	return Subspace::span(n, vs);
}

std::vector<Vec> complement_basis(const std::vector<Vec> &from, const Subspace &modulo)
{
	// Incremental echelon: each stored vector is zero at every earlier pivot,
	// so one sequential pass reduces a candidate completely.
	std::vector<Vec> acc = modulo.basis();
	std::vector<std::size_t> piv = modulo.pivots();
	std::vector<Vec> picked;
	for (const auto &v : from) {
		if (v.size() != modulo.ambient_dim())
			throw InputError("complement_basis: ambient dimension mismatch");
		Vec r = v;
		for (std::size_t i = 0; i < acc.size(); ++i) {
			if (sgn(r[piv[i]]) == 0)
				continue;
			Rat f = r[piv[i]] / acc[i][piv[i]];
			for (std::size_t c = 0; c < r.size(); ++c)
				if (sgn(acc[i][c]) != 0)
					r[c] -= f * acc[i][c];
		}
		std::size_t p = 0;
		while (p < r.size() && sgn(r[p]) == 0)
			++p;
		if (p == r.size())
			continue;
		picked.push_back(v);
		acc.push_back(std::move(r));
		piv.push_back(p);
	}
	return picked;
}

} // namespace kv
