#include "kvcohom/io.hpp"
#include "kvcohom/errors.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace kv {

namespace {

const json &field(const json &j, const char *key)
{
	if (!j.is_object() || !j.contains(key))
		throw InputError(std::string("missing field '") + key + "'");
	return j.at(key);
}

std::size_t dim_field(const json &j, const char *key)
{
	const json &d = field(j, key);
	if (!d.is_number_unsigned())
		throw InputError(std::string("field '") + key + "' must be a non-negative integer");
	return d.get<std::size_t>();
}

void expect_array(const json &j, std::size_t n, const char *what)
{
	if (!j.is_array() || j.size() != n)
		throw InputError(std::string(what) + ": expected an array of length " + std::to_string(n));
}

json read_file_text(const std::string &path, std::string &bytes)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw InputError("cannot open '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	bytes = ss.str();
	try {
		return json::parse(bytes);
	} catch (const json::parse_error &e) {
		throw InputError("'" + path + "' is not valid JSON: " + e.what());
	}
}

KVAlgebra algebra_ref(const json &j, const std::string &base_dir)
{
	if (j.is_string()) {
		std::filesystem::path p(j.get<std::string>());
		if (p.is_relative())
			p = std::filesystem::path(base_dir) / p;
		return algebra_from_json(read_json_file(p.string()).doc);
	}
	return algebra_from_json(j);
}

} // namespace

json to_json(const Rat &r) { return to_string(r); }

Rat rat_from_json(const json &j)
{
	if (j.is_string())
		return parse_rat(j.get<std::string>());
	if (j.is_number_integer())
		return Rat(j.get<long>());
	throw InputError("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

json to_json(const Vec &v)
{
	json a = json::array();
	for (const auto &x : v)
		a.push_back(to_json(x));
	return a;
}

Vec vec_from_json(const json &j, std::size_t expect)
{
	expect_array(j, expect, "vector");
	Vec v;
	v.reserve(expect);
	for (const auto &x : j)
		v.push_back(rat_from_json(x));
	return v;
}

json to_json(const Mat &m)
{
	json a = json::array();
	for (std::size_t r = 0; r < m.rows(); ++r)
		a.push_back(to_json(m.row(r)));
	return a;
}

Mat mat_from_json(const json &j, std::size_t rows, std::size_t cols)
{
	expect_array(j, rows, "matrix");
	std::vector<Vec> rs;
	for (const auto &r : j)
		rs.push_back(vec_from_json(r, cols));
	return Mat::from_rows(cols, rs);
}

json to_json(const Tensor3 &t)
{
	json a = json::array();
	for (std::size_t i = 0; i < t.d0; ++i) {
		json b = json::array();
		for (std::size_t j = 0; j < t.d1; ++j) {
			json c = json::array();
			for (std::size_t k = 0; k < t.d2; ++k)
				c.push_back(to_json(t(i, j, k)));
			b.push_back(c);
		}
		a.push_back(b);
	}
	return a;
}

Tensor3 tensor_from_json(const json &j, std::size_t d0, std::size_t d1, std::size_t d2)
{
	Tensor3 t(d0, d1, d2);
	expect_array(j, d0, "tensor");
	for (std::size_t i = 0; i < d0; ++i) {
		expect_array(j[i], d1, "tensor");
		for (std::size_t k = 0; k < d1; ++k) {
			Vec v = vec_from_json(j[i][k], d2);
			for (std::size_t l = 0; l < d2; ++l)
				t(i, k, l) = v[l];
		}
	}
	return t;
}

json to_json(const Witness &w)
{
	return {{"identity", w.identity}, {"indices", w.indices}, {"lhs", to_json(w.lhs)}, {"rhs", to_json(w.rhs)}};
}

json to_json(const KVAlgebra &A)
{
	json j = {{"dim", A.dim}, {"product", to_json(A.product)}};
	if (!A.name.empty())
		j["name"] = A.name;
	return j;
}

KVAlgebra algebra_from_json(const json &j)
{
	const std::size_t n = dim_field(j, "dim");
	KVAlgebra A(n);
	A.product = tensor_from_json(field(j, "product"), n, n, n);
	if (j.contains("name"))
		A.name = j.at("name").get<std::string>();
	return A;
}

json to_json(const KVModule &W, const KVAlgebra &A)
{
	return {{"dim", W.dim}, {"algebra", to_json(A)}, {"left", to_json(W.left)}, {"right", to_json(W.right)}};
}

LoadedModule module_from_json(const json &j, const std::string &base_dir)
{
	KVAlgebra A = algebra_ref(field(j, "algebra"), base_dir);
	const std::size_t m = dim_field(j, "dim");
	KVModule W(A.dim, m);
	W.left = tensor_from_json(field(j, "left"), A.dim, m, m);
	if (j.contains("right"))
		W.right = tensor_from_json(j.at("right"), m, A.dim, m);
	return {A, W};
}

json to_json(const Cochain &f) { return {{"degree", f.degree}, {"values", to_json(f.values)}}; }

Cochain cochain_from_json(const json &j, std::size_t n, std::size_t m)
{
	const std::size_t q = dim_field(j, "degree");
	check_budget(n, m, q, "cochain file");
	return Cochain(n, m, q, vec_from_json(field(j, "values"), Cochain::space_dim(n, m, q)));
}

json to_json(const GradedKVAlgebra &G) { return {{"even", to_json(G.even)}, {"odd", to_json(G.odd, G.even)}}; }

GradedKVAlgebra graded_from_json(const json &j, const std::string &base_dir)
{
	KVAlgebra A = algebra_ref(field(j, "even"), base_dir);
	json odd = field(j, "odd");
	if (odd.is_object() && !odd.contains("algebra"))
		odd["algebra"] = to_json(A);
	auto W = module_from_json(odd, base_dir);
	if (W.algebra.product != A.product)
		throw InputError("odd part is declared over a different algebra");
	return make_graded(A, W.module);
}

json to_json(const MultiplicationJet &jet)
{
	json c = json::array();
	for (const auto &mu : jet.coefficients)
		c.push_back(to_json(as_tensor(mu)));
	return {{"base", to_json(jet.base)}, {"coefficients", c}};
}

MultiplicationJet jet_from_json(const json &j, const std::string &base_dir)
{
	MultiplicationJet jet;
	jet.base = algebra_ref(field(j, "base"), base_dir);
	const std::size_t n = jet.base.dim;
	const json &c = field(j, "coefficients");
	if (!c.is_array())
		throw InputError("coefficients must be an array");
	for (const auto &t : c)
		jet.coefficients.push_back(as_cochain(tensor_from_json(t, n, n, n)));
	return jet;
}

json to_json(const ConnectionlikePair &p) { return {{"theta", to_json(p.theta)}, {"psi", to_json(p.psi)}}; }

ConnectionlikePair pair_from_json(const json &j, std::size_t n, std::size_t m)
{
	return {tensor_from_json(field(j, "theta"), m, m, m), tensor_from_json(field(j, "psi"), n, m, n)};
}

std::string fnv1a64(const std::string &bytes)
{
	std::uint64_t h = 0xcbf29ce484222325ULL;
	for (unsigned char c : bytes) {
		h ^= c;
		h *= 0x100000001b3ULL;
	}
	char buf[17];
	std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
	return buf;
}

InputFile read_json_file(const std::string &path)
{
	InputFile f;
	std::string bytes;
	f.doc = read_file_text(path, bytes);
	f.path = path;
	f.dir = std::filesystem::path(path).parent_path().string();
	f.digest = fnv1a64(bytes);
	return f;
}

} // namespace kv
