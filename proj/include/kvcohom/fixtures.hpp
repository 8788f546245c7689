#pragma once

#include "kvcohom/algebra.hpp"

#include <string>
#include <vector>

namespace kv {

/// 1-dim idempotent algebra e·e = e.
KVAlgebra fixture_assoc1();
/// Left-invariant flat connection on Aff(R): e1·e2 = e2, all other products 0.
KVAlgebra fixture_aff();
KVAlgebra fixture_zero(std::size_t n);
/// Non-associative 2-dim KV algebra: e1e1 = −e1, e1e2 = e2, e2e1 = −e2.
KVAlgebra fixture_lsa2();
/// Upper triangular 2×2 matrices in the basis E11, E12, E22.
KVAlgebra fixture_ut2();

/// aff, assoc1, lsa2, ut2, zeroN (N ≥ 1).
KVAlgebra fixture_by_name(const std::string &name);
std::vector<std::string> fixture_names();

} // namespace kv
