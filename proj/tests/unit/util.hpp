#pragma once

#include "kvcohom/complex.hpp"
#include "kvcohom/random.hpp"

namespace kvtest {

using namespace kv;

inline Cochain random_cochain(Rng &rng, std::size_t n, std::size_t m, std::size_t q)
{
	Cochain f(n, m, q);
	for (auto &x : f.values)
		if (rng.coin(2, 3))
			x = rng.small_rat();
	return f;
}

/// Keeps only entries whose tuple passes keep(args).
template <class Pred>
Cochain mask(Cochain f, Pred keep)
{
	const std::size_t N = Cochain::space_dim(f.n, 1, f.degree);
	for (std::size_t t = 0; t < N; ++t)
		if (!keep(tuple_digits(t, f.n, f.degree)))
			for (std::size_t b = 0; b < f.m; ++b)
				f.values[t * f.m + b] = 0;
	return f;
}

/// Random combination of the given vectors.
inline Vec combo(Rng &rng, const std::vector<Vec> &vs, std::size_t dim)
{
	Vec v = zeros(dim);
	for (const auto &b : vs)
		v += Rat(rng.range(-2, 2)) * b;
	return v;
}

} // namespace kvtest
