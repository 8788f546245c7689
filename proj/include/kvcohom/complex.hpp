#pragma once

#include "kvcohom/algebra.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace kv {

/// q-linear map A^q → W as a dense table: entry (i_1 … i_q; β) sits at
/// (Σ_t i_t n^{q−t})·m + β. A degree-0 cochain is an element of W.
struct Cochain {
	std::size_t n = 0, m = 0, degree = 0;
	Vec values;

	Cochain() = default;
	Cochain(std::size_t n_, std::size_t m_, std::size_t q) : n(n_), m(m_), degree(q), values(space_dim(n_, m_, q)) {}
	Cochain(std::size_t n_, std::size_t m_, std::size_t q, Vec v);

	static std::size_t space_dim(std::size_t n, std::size_t m, std::size_t q);

	/// f(e_{i_1}, …, e_{i_q}) as an element of W.
	Vec at(const std::vector<std::size_t> &args) const;
	bool is_zero() const { return kv::is_zero(values); }
	friend bool operator==(const Cochain &, const Cochain &) = default;
};

/// Flat index of an argument tuple, big-endian base n.
std::size_t tuple_index(const std::vector<std::size_t> &args, std::size_t n);
std::vector<std::size_t> tuple_digits(std::size_t index, std::size_t n, std::size_t q);

/// Cells allowed per cochain space; 10^7 unless KVCOHOM_ENTRY_BUDGET is set.
std::size_t entry_budget();
/// Process-wide override taking precedence over the environment; nullopt clears it.
void override_entry_budget(std::optional<std::size_t> budget);
/// Throws BudgetError naming `what` when n^q·m exceeds the budget.
void check_budget(std::size_t n, std::size_t m, std::size_t q, const char *what);

/// Mutant flips the sign of the insertion term; used only to show that the
/// property battery notices a broken coboundary.
enum class Variant { Normative, Mutant };

/// Calls emit(row, col, c) for every elementary contribution of δ on
/// C_q → C_{q+1}: (δf)[row] += c·f[col]. q ≥ 1.
void for_each_coboundary_term(const KVAlgebra &A, const KVModule &W, std::size_t q,
    const std::function<void(std::size_t, std::size_t, const Rat &)> &emit, Variant v = Variant::Normative);

Cochain coboundary(const KVAlgebra &A, const KVModule &W, const Cochain &f, Variant v = Variant::Normative);

/// a ↦ −aw + wa for any w ∈ W. The complex only admits w ∈ J(W); use
/// coboundary0 for the checked entry point.
Cochain degree0_map(const KVAlgebra &A, const KVModule &W, const Vec &w);
/// Rejects w ∉ J(W).
Cochain coboundary0(const KVAlgebra &A, const KVModule &W, const Vec &w);

/// Matrix of δ: C_q → C_{q+1}. For q = 0 the columns are the echelon basis
/// of J(W). Optional row/column selections restrict to subcomplexes.
Mat coboundary_matrix(const KVAlgebra &A, const KVModule &W, std::size_t q, Variant v = Variant::Normative);
Mat coboundary_matrix(const KVAlgebra &A, const KVModule &W, std::size_t q, const std::vector<std::size_t> &rows,
    const std::vector<std::size_t> &cols);
/// a ↦ −aw + wa on all of W, columns indexed by the basis of W.
Mat degree0_matrix(const KVAlgebra &A, const KVModule &W);

struct DegreeReport {
	std::size_t degree = 0;
	std::size_t dim_C = 0, dim_Z = 0, dim_B = 0, dim_H = 0;
	std::vector<Vec> representatives;
};

struct CohomologyReport {
	std::vector<DegreeReport> degrees;
	const DegreeReport &at(std::size_t q) const;
};

/// Cohomology of a complex given by its differentials: d[q] maps C_q → C_{q+1},
/// with dims[q] = dim C_q. Degrees reported are first_degree + index.
CohomologyReport complex_cohomology(const std::vector<std::size_t> &dims, const std::vector<Mat> &d, std::size_t first_degree = 0);

CohomologyReport cohomology(const KVAlgebra &A, const KVModule &W, std::size_t q_max);

bool is_cocycle(const KVAlgebra &A, const KVModule &W, const Cochain &f);
/// A preimage g with δg = f, or nullopt. For degree 1 the preimage is an
/// element of J(W) in W coordinates.
std::optional<Cochain> is_coboundary(const KVAlgebra &A, const KVModule &W, const Cochain &f);

/// Chevalley–Eilenberg differential of the Lie algebra A_L = (A, [,]) with
/// coefficients in L(A, W), (a.f)(b) = a f(b) − f([a, b]), on alternating
/// p-cochains; basis: strictly increasing index tuples × basis of L(A, W).
Mat ce_differential(const KVAlgebra &A, const KVModule &W, std::size_t p);
std::size_t ce_space_dim(std::size_t n, std::size_t m, std::size_t p);
/// Degrees 1..q_max, H_N^q = H_CE^{q−1}.
CohomologyReport nijenhuis_cohomology(const KVAlgebra &A, const KVModule &W, std::size_t q_max);

} // namespace kv
