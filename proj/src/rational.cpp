#include "kvcohom/rational.hpp"
#include "kvcohom/errors.hpp"

#include <cctype>

namespace kv {

namespace {

bool is_integer_literal(std::string_view s)
{
	if (!s.empty() && (s.front() == '-' || s.front() == '+'))
		s.remove_prefix(1);
	if (s.empty())
		return false;
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c)))
			return false;
	return true;
}

} // namespace

Rat parse_rat(std::string_view text)
{
	auto slash = text.find('/');
	std::string_view num = text.substr(0, slash);
	std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
	if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
		throw InputError("malformed rational '" + std::string(text) + "'");
	if (num.front() == '+')
		num.remove_prefix(1);
	mpz_class p(std::string(num), 10);
	mpz_class q(std::string(den), 10);
	if (q == 0)
		throw InputError("zero denominator in '" + std::string(text) + "'");
	Rat r(p, q);
	r.canonicalize();
	return r;
}

std::string to_string(const Rat &r)
{
	if (r.get_den() == 1)
		return r.get_num().get_str();
	return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Vec zeros(std::size_t n) { return Vec(n, Rat(0)); }

Vec unit_vector(std::size_t n, std::size_t i)
{
	Vec v = zeros(n);
	v.at(i) = 1;
	return v;
}

bool is_zero(const Vec &v)
{
	for (const auto &x : v)
		if (sgn(x) != 0)
			return false;
	return true;
}

Vec operator+(const Vec &a, const Vec &b)
{
	Vec r = a;
	r += b;
	return r;
}

Vec operator-(const Vec &a, const Vec &b)
{
	Vec r = a;
	r -= b;
	return r;
}

Vec operator*(const Rat &s, const Vec &v)
{
	Vec r(v.size());
	for (std::size_t i = 0; i < v.size(); ++i)
		r[i] = s * v[i];
	return r;
}

Vec &operator+=(Vec &a, const Vec &b)
{
	if (a.size() != b.size())
		throw InputError("vector length mismatch");
	for (std::size_t i = 0; i < a.size(); ++i)
		a[i] += b[i];
	return a;
}

Vec &operator-=(Vec &a, const Vec &b)
{
	if (a.size() != b.size())
		throw InputError("vector length mismatch");
	for (std::size_t i = 0; i < a.size(); ++i)
		a[i] -= b[i];
	return a;
}

Rat dot(const Vec &a, const Vec &b)
{
	if (a.size() != b.size())
		throw InputError("vector length mismatch");
	Rat s = 0;
	for (std::size_t i = 0; i < a.size(); ++i)
		s += a[i] * b[i];
	return s;
}

} // namespace kv
