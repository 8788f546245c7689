#pragma once

#include "kvcohom/complex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kv {

struct PropertyFailure {
	std::uint64_t seed = 0;
	std::string witness;
};

struct PropertyResult {
	std::string name;
	std::size_t instances = 0;
	std::vector<PropertyFailure> failures;
	bool ok() const { return failures.empty(); }
};

struct ProptestReport {
	std::uint64_t seed = 0;
	std::size_t count = 0;
	Variant variant = Variant::Normative;
	std::vector<PropertyResult> properties;
	bool ok() const;
};

/// Instance seeds are seed, seed+1, …, seed+count−1. The variant is threaded
/// into every coboundary evaluation so a broken δ shows up in the battery.
std::vector<std::string> property_names();
PropertyResult run_property(const std::string &name, std::uint64_t seed, std::size_t count, Variant v = Variant::Normative);
ProptestReport proptest(std::uint64_t seed, std::size_t count, Variant v = Variant::Normative);

} // namespace kv
