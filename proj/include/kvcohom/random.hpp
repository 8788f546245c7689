#pragma once

#include "kvcohom/linalg.hpp"

#include <cstdint>

namespace kv {

/// SplitMix64. Hand-rolled so the stream is identical on every platform and
/// standard library, which keeps reports byte-reproducible.
class Rng {
public:
	explicit Rng(std::uint64_t seed) : s_(seed) {}

	std::uint64_t next()
	{
		std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
		z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
		z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
		return z ^ (z >> 31);
	}

	/// Uniform in [0, k); k > 0.
	std::size_t below(std::size_t k) { return static_cast<std::size_t>(next() % k); }
	bool coin(unsigned num = 1, unsigned den = 2) { return below(den) < num; }
	/// Integer in [lo, hi].
	long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1))); }

	/// Small rational: numerator in [−3, 3], denominator in {1, 2, 3}.
	Rat small_rat()
	{
		Rat r(range(-3, 3), range(1, 3));
		r.canonicalize();
		return r;
	}
	Vec small_vec(std::size_t n)
	{
		Vec v(n);
		for (auto &x : v)
			x = small_rat();
		return v;
	}

	/// Invertible matrix D·L·U with unit triangular L, U in {−1, 0, 1} and
	/// diagonal D in {±1, ±2, ±1/2}.
	Mat invertible(std::size_t n);

private:
	std::uint64_t s_;
};

} // namespace kv
