#pragma once

#include "kvcohom/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace kv {

/// Dense row-major rational matrix.
class Mat {
public:
	Mat() = default;
	Mat(std::size_t rows, std::size_t cols);

	static Mat identity(std::size_t n);
	static Mat from_rows(std::size_t cols, const std::vector<Vec> &rows);
	static Mat from_cols(std::size_t rows, const std::vector<Vec> &cols);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	Rat &operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
	const Rat &operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

	Vec row(std::size_t r) const;
	Vec col(std::size_t c) const;
	Mat transpose() const;
	bool is_zero() const;

	/// m·x
	Vec apply(const Vec &x) const;

	friend Mat operator*(const Mat &a, const Mat &b);
	friend Mat operator+(const Mat &a, const Mat &b);
	friend Mat operator-(const Mat &a, const Mat &b);
	friend bool operator==(const Mat &a, const Mat &b);

private:
	std::size_t rows_ = 0, cols_ = 0;
	std::vector<Rat> a_;
};

/// Reduced row-echelon form together with its pivot columns.
struct RowEchelon {
	std::vector<Vec> rows; // nonzero rows only
	std::vector<std::size_t> pivots;
};

/// Fraction-free (Bareiss) forward elimination, rational back-substitution.
RowEchelon row_echelon(const Mat &m);

/// Subspace of F^ambient held by its unique reduced row-echelon basis, so
/// that equality is a direct comparison.
class Subspace {
public:
	explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

	static Subspace span(std::size_t ambient, const std::vector<Vec> &vectors);
	static Subspace full(std::size_t ambient);

	std::size_t ambient_dim() const { return ambient_; }
	std::size_t dim() const { return basis_.size(); }
	const std::vector<Vec> &basis() const { return basis_; }
	const std::vector<std::size_t> &pivots() const { return pivots_; }

	/// Remainder of v after elimination against the basis pivots.
	Vec reduce(const Vec &v) const;
	bool contains(const Vec &v) const;
	bool contains(const Subspace &other) const;

	friend bool operator==(const Subspace &a, const Subspace &b);

private:
	std::size_t ambient_ = 0;
	std::vector<Vec> basis_;
	std::vector<std::size_t> pivots_;
};

std::size_t rank(const Mat &m);
Subspace kernel(const Mat &m);
Subspace image(const Mat &m);

/// Some x with m·x = b, or nullopt when b is outside the column space.
std::optional<Vec> solve(const Mat &m, const Vec &b);

bool membership(const Subspace &s, const Vec &v);

/// Exact inverse; throws Rejected for singular input.
Mat inverse(const Mat &m);
Subspace intersect(const Subspace &a, const Subspace &b);

/// Picks vectors of `from` whose span meets `modulo` trivially and, together
/// with `modulo`, spans modulo + span(from). Order of `from` decides ties.
std::vector<Vec> complement_basis(const std::vector<Vec> &from, const Subspace &modulo);

} // namespace kv
