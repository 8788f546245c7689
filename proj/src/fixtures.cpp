#include "kvcohom/fixtures.hpp"
#include "kvcohom/errors.hpp"

namespace kv {

KVAlgebra fixture_assoc1()
{
	KVAlgebra A(1, "assoc1");
	A.product(0, 0, 0) = 1;
	return A;
}

KVAlgebra fixture_aff()
{
	KVAlgebra A(2, "aff");
	A.product(0, 1, 1) = 1;
	return A;
}

KVAlgebra fixture_zero(std::size_t n) { return KVAlgebra(n, "zero" + std::to_string(n)); }

KVAlgebra fixture_lsa2()
{
	KVAlgebra A(2, "lsa2");
	A.product(0, 0, 0) = -1;
	A.product(0, 1, 1) = 1;
	A.product(1, 0, 1) = -1;
	return A;
}

KVAlgebra fixture_ut2()
{
	// E11 = e0, E12 = e1, E22 = e2
	KVAlgebra A(3, "ut2");
	A.product(0, 0, 0) = 1;
	A.product(0, 1, 1) = 1;
	A.product(1, 2, 1) = 1;
	A.product(2, 2, 2) = 1;
	return A;
}

KVAlgebra fixture_by_name(const std::string &name)
{
	if (name == "aff")
		return fixture_aff();
	if (name == "assoc1")
		return fixture_assoc1();
	if (name == "lsa2")
		return fixture_lsa2();
	if (name == "ut2")
		return fixture_ut2();
	if (name.rfind("zero", 0) == 0 && name.size() > 4) {
		std::size_t n = 0;
		for (std::size_t i = 4; i < name.size(); ++i) {
			if (name[i] < '0' || name[i] > '9')
				throw InputError("unknown fixture '" + name + "'");
			n = n * 10 + static_cast<std::size_t>(name[i] - '0');
		}
		if (n >= 1 && n <= 16)
			return fixture_zero(n);
	}
	throw InputError("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() { return {"aff", "assoc1", "lsa2", "ut2", "zero1", "zero2", "zero3"}; }

} // namespace kv
