#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace kv {

/// Exact rational scalar. GMP keeps it canonical: gcd(num, den) = 1, den > 0.
using Rat = mpq_class;
using Vec = std::vector<Rat>;

/// Parses "p/q", "p" or "-p/q". Rejects zero denominators and junk.
Rat parse_rat(std::string_view text);

/// Canonical "p/q" form, with "/q" omitted when q = 1.
std::string to_string(const Rat &r);

Vec zeros(std::size_t n);
Vec unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vec &v);

Vec operator+(const Vec &a, const Vec &b);
Vec operator-(const Vec &a, const Vec &b);
Vec operator*(const Rat &s, const Vec &v);
Vec &operator+=(Vec &a, const Vec &b);
Vec &operator-=(Vec &a, const Vec &b);
Rat dot(const Vec &a, const Vec &b);

} // namespace kv
