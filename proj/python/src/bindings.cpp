#include "kvcohom/algebra.hpp"
#include "kvcohom/cli.hpp"
#include "kvcohom/complex.hpp"
#include "kvcohom/errors.hpp"
#include "kvcohom/fixtures.hpp"
#include "kvcohom/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

kv::KVAlgebra algebra_from_text(const std::string &text)
{
	return kv::algebra_from_json(kv::json::parse(text));
}

py::tuple run(const std::string &verb, const std::vector<std::string> &inputs, const std::map<std::string, std::string> &params,
              std::uint64_t seed, std::optional<std::size_t> budget, bool mutant)
{
	kv::JobSpec job{verb, inputs, params, seed, budget, mutant};
	kv::Report r;
	{
		py::gil_scoped_release release;
		r = kv::run(job);
	}
	return py::make_tuple(r.text(), r.exit_code, r.csv);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
	m.doc() = "Exact cohomology of Koszul-Vinberg algebras";

	// translators run newest first, so the base class goes first
	auto base = py::register_exception<kv::Error>(m, "Error", PyExc_RuntimeError);
	py::register_exception<kv::InputError>(m, "InputError", base.ptr());
	py::register_exception<kv::BudgetError>(m, "BudgetError", base.ptr());
	py::register_exception<kv::Rejected>(m, "Rejected", base.ptr());

	m.def("run", &run, py::arg("verb"), py::arg("inputs") = std::vector<std::string>{},
	      py::arg("params") = std::map<std::string, std::string>{}, py::arg("seed") = 0, py::arg("budget") = py::none(),
	      py::arg("mutant") = false, "Run a CLI verb; returns (report JSON text, exit code, trajectory CSV).");
	m.def("verbs", &kv::verbs);
	m.def("fixtures", &kv::fixture_catalog);
	m.def(
	    "fixture", [](const std::string &name) { return kv::fixture_document(name).dump(2); }, py::arg("name"),
	    "Fixture document as JSON text.");
	m.def(
	    "is_kv", [](const std::string &algebra) { return kv::is_kv(algebra_from_text(algebra)).ok; }, py::arg("algebra"));
	m.def(
	    "cohomology_dims",
	    [](const std::string &algebra, std::size_t q_max) {
		    auto A = algebra_from_text(algebra);
		    auto rep = kv::cohomology(A, kv::regular_bimodule(A), q_max);
		    std::vector<std::size_t> dims;
		    for (const auto &d : rep.degrees)
			    dims.push_back(d.dim_H);
		    return dims;
	    },
	    py::arg("algebra"), py::arg("q_max") = 2, "dim H^q(A, A) for q = 0..q_max, regular coefficients.");
}
