#pragma once

#include "kvcohom/io.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kv {

/// Inputs are file paths or "fixture:<name>".
struct JobSpec {
	std::string verb;
	std::vector<std::string> inputs;
	std::map<std::string, std::string> params; // numeric flags, by long name
	std::uint64_t seed = 0;
	std::optional<std::size_t> budget;
	bool mutant = false;
};

enum ExitCode { Ok = 0, MathFailure = 1, BadInput = 2, OverBudget = 3 };

struct Report {
	json doc;
	int exit_code = Ok;
	std::string csv; // geodesic trajectory, if any

	/// Sorted keys, two-space indent, trailing newline.
	std::string text() const;
};

const std::vector<std::string> &verbs();
Report run(const JobSpec &job);

/// Canonical file for a fixture: algebras by name, plus "flat-model" (graded).
json fixture_document(const std::string &name);
std::vector<std::string> fixture_catalog();

} // namespace kv
