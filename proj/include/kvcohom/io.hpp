#pragma once

#include "kvcohom/deform.hpp"
#include "kvcohom/graded.hpp"

#include <json.hpp>

#include <string>

namespace kv {

using json = nlohmann::json;

/// Rationals travel as "p/q" strings; plain integers are accepted on input.
json to_json(const Rat &r);
Rat rat_from_json(const json &j);
json to_json(const Vec &v);
Vec vec_from_json(const json &j, std::size_t expect);
/// Row-major nested arrays.
json to_json(const Mat &m);
Mat mat_from_json(const json &j, std::size_t rows, std::size_t cols);
json to_json(const Tensor3 &t);
Tensor3 tensor_from_json(const json &j, std::size_t d0, std::size_t d1, std::size_t d2);
json to_json(const Witness &w);

json to_json(const KVAlgebra &A);
KVAlgebra algebra_from_json(const json &j);
/// Module files carry their algebra inline ("algebra": {...}) or as a path
/// relative to base_dir.
json to_json(const KVModule &W, const KVAlgebra &A);
struct LoadedModule {
	KVAlgebra algebra;
	KVModule module;
};
LoadedModule module_from_json(const json &j, const std::string &base_dir);
/// { "degree": q, "values": [...] }; n and m come from context.
json to_json(const Cochain &f);
Cochain cochain_from_json(const json &j, std::size_t n, std::size_t m);
json to_json(const GradedKVAlgebra &G);
GradedKVAlgebra graded_from_json(const json &j, const std::string &base_dir);
/// { "base": algebra, "coefficients": [tensor, …] }
json to_json(const MultiplicationJet &jet);
MultiplicationJet jet_from_json(const json &j, const std::string &base_dir);
/// { "theta": m×m×m, "psi": n×m×n }
json to_json(const ConnectionlikePair &p);
ConnectionlikePair pair_from_json(const json &j, std::size_t n, std::size_t m);

/// Parsed file plus its FNV-1a 64 digest and directory.
struct InputFile {
	std::string path, dir, digest;
	json doc;
};
InputFile read_json_file(const std::string &path);
std::string fnv1a64(const std::string &bytes);

} // namespace kv
