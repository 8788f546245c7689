#include "kvcohom/cli.hpp"
#include "kvcohom/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <utility>

namespace {

int write_text(const std::string &path, const std::string &text)
{
	if (path.empty() || path == "-") {
		std::cout << text;
		return 0;
	}
	std::ofstream out(path, std::ios::binary);
	if (!out) {
		std::cerr << "kvcohom: cannot write '" << path << "'\n";
		return kv::BadInput;
	}
	out << text;
	return 0;
}

std::string verb_list()
{
	std::string s;
	for (const auto &v : kv::verbs())
		s += (s.empty() ? "" : ", ") + v;
	return s + ", fixtures";
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact KV-algebra cohomology, extensions and deformations.\nVerbs: " + verb_list()};
	app.set_version_flag("--version", "kvcohom 1.0");

	kv::JobSpec job;
	std::vector<std::string> inputs;
	std::string output, csv;
	std::size_t budget = 0;

	app.add_option("verb", job.verb, "what to compute")->required();
	app.add_option("inputs", inputs, "JSON files or fixture:<name>");
	app.add_option("-o,--output", output, "write the report here instead of stdout");
	app.add_option("--csv", csv, "geodesic: write the trajectory CSV here");
	app.add_option("--seed", job.seed, "proptest seed");
	app.add_option("--budget", budget, "entry budget override (cells per cochain space)");
	app.add_flag("--mutant", job.mutant, "proptest: run against the sign-flipped coboundary");
	const std::pair<const char *, const char *> numeric[] = {
	    {"q-max", "highest cochain degree (default 2)"},
	    {"orders", "deform-solve: orders to solve (default 1)"},
	    {"count", "proptest: instances per property (default 100)"},
	    {"alpha", "S_{α,β} parameter, rational"},
	    {"beta", "S_{α,β} parameter, rational"},
	    {"x0", "geodesic initial x"},
	    {"y0", "geodesic initial y"},
	    {"vx0", "geodesic initial ẋ"},
	    {"vy0", "geodesic initial ẏ"},
	    {"t0", "geodesic start time"},
	    {"t1", "geodesic end time, may precede t0"},
	    {"step", "geodesic nominal step"},
	};
	for (auto [name, help] : numeric)
		app.add_option_function<std::string>(
		    std::string("--") + name, [&job, name = std::string(name)](const std::string &v) { job.params[name] = v; }, help);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		const int rc = app.exit(e);
		return rc == 0 ? 0 : kv::BadInput;
	}

	if (job.verb == "fixtures") {
		try {
			if (inputs.empty()) {
				std::string s;
				for (const auto &n : kv::fixture_catalog())
					s += n + "\n";
				return write_text(output, s);
			}
			return write_text(output, kv::fixture_document(inputs.front()).dump(2) + "\n");
		} catch (const kv::InputError &e) {
			std::cerr << "kvcohom: " << e.what() << "\n";
			return kv::BadInput;
		}
	}

	job.inputs = inputs;
	if (budget > 0)
		job.budget = budget;

	kv::Report rep;
	try {
		rep = kv::run(job);
	} catch (const std::exception &e) {
		std::cerr << "kvcohom: internal error: " << e.what() << "\n";
		return kv::MathFailure;
	}
	if (!rep.csv.empty() && !csv.empty())
		if (int rc = write_text(csv, rep.csv))
			return rc;
	if (int rc = write_text(output, rep.text()))
		return rc;
	if (rep.doc.contains("error"))
		std::cerr << "kvcohom: " << rep.doc["error"]["message"].get<std::string>() << "\n";
	return rep.exit_code;
}
