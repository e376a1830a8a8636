#include "linmon_cli/cli.hpp"

#include "linmon/checker_aadt.hpp"
#include "linmon/checker_queue.hpp"
#include "linmon/checker_stack.hpp"
#include "linmon/frontier.hpp"
#include "linmon/generator.hpp"
#include "linmon/history_io.hpp"
#include "linmon/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace linmon::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct Report {
	json body;
	int code = kInputError;
};

Report check_file(const std::string &path, const std::string &engine_flag, bool force_oracle, bool want_witness)
{
	Report report;
	report.body["file"] = path;
	try {
		const auto h = load_history(path);
		const std::string engine = force_oracle ? "oracle"
		                                        : (engine_flag.empty() ? std::string(default_engine(h.kind)) : engine_flag);
		const auto graph = FrontierGraph::build(h, {.materialize_edges = false});

		const auto start = std::chrono::steady_clock::now();
		const auto verdict = run_engine(engine, h, want_witness);
		const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;

		report.body["adt"] = std::string(to_string(h.kind));
		report.body["engine"] = engine;
		report.body["verdict"] = verdict.linearizable ? "linearizable" : "not-linearizable";
		report.body["n"] = h.ops.size();
		report.body["k"] = concurrency_width(h);
		report.body["partition_states"] = graph.state_count();
		report.body["states_visited"] = verdict.states_visited;
		report.body["elapsed_ms"] = elapsed.count();
		if (want_witness && verdict.witness) {
			json w = json::array();
			for (const auto &entry : *verdict.witness)
				w.push_back({{"id", h.ops[entry.op].id}, {"at", entry.at.to_string()}});
			report.body["witness"] = std::move(w);
		} else {
			report.body["witness"] = nullptr;
		}
		report.code = verdict.linearizable ? kLinearizable : kNotLinearizable;
	} catch (const HistoryError &e) {
		report.body["error"] = e.what();
		if (!e.op_id().empty())
			report.body["operation"] = e.op_id();
	} catch (const std::exception &e) {
		report.body["error"] = e.what();
	}
	return report;
}

int cmd_check(const std::vector<std::string> &files, const std::string &engine, bool oracle, bool witness,
              std::ostream &out, std::ostream &err)
{
	std::vector<std::future<Report>> jobs;
	jobs.reserve(files.size());
	for (const auto &file : files)
		jobs.push_back(std::async(std::launch::async, check_file, file, engine, oracle, witness));

	int code = kLinearizable;
	json all = json::array();
	for (auto &job : jobs) {
		auto report = job.get();
		if (report.body.contains("error"))
			err << "linmon: " << report.body["file"].get<std::string>() << ": "
			    << report.body["error"].get<std::string>() << '\n';
		code = std::max(code, report.code);
		all.push_back(std::move(report.body));
	}
	out << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
	return code;
}

int cmd_graph(const std::string &file, std::ostream &out, std::ostream &err)
{
	try {
		const auto h = load_history(file);
		out << to_dot(FrontierGraph::build(h), h);
		return 0;
	} catch (const std::exception &e) {
		err << "linmon: " << file << ": " << e.what() << '\n';
		return kInputError;
	}
}

std::string label_for(const History &h)
{
	try {
		return oracle_check(h).linearizable ? "linearizable" : "not-linearizable";
	} catch (const OracleCapExceeded &) {
		return "unlabeled";
	}
}

int cmd_gen(const std::string &kind_name, std::size_t n, std::size_t k, std::uint64_t seed, std::size_t count,
            double mutate, const std::string &dir, std::ostream &out, std::ostream &err)
{
	const auto kind = parse_adt_kind(kind_name);
	if (!kind) {
		err << "linmon: unknown adt kind '" << kind_name << "'\n";
		return kInputError;
	}
	if (mutate < 0.0 || mutate > 1.0) {
		err << "linmon: --mutate must lie in [0, 1]\n";
		return kInputError;
	}
	try {
		fs::create_directories(dir);
		std::mt19937_64 coin(seed ^ 0x6d75746174696f6eULL);
		std::uniform_real_distribution<double> unit(0.0, 1.0);
		json manifest;
		manifest["kind"] = kind_name;
		manifest["n"] = n;
		manifest["k"] = k;
		manifest["seed"] = seed;
		manifest["count"] = count;
		manifest["mutate"] = mutate;
		json entries = json::array();
		const auto digits = std::to_string(count == 0 ? 0 : count - 1).size();
		for (std::size_t i = 0; i < count; ++i) {
			const auto item_seed = seed + i;
			auto h = gen_history(*kind, n, k, item_seed);
			std::string mutation;
			if (unit(coin) < mutate && !h.ops.empty()) {
				auto m = mutate_history(h, item_seed);
				h = std::move(m.history);
				mutation = std::move(m.description);
			}
			std::ostringstream name;
			name << "h" << std::setw(static_cast<int>(digits)) << std::setfill('0') << i << ".json";
			save_history(h, fs::path(dir) / name.str());
			json entry;
			entry["file"] = name.str();
			entry["seed"] = item_seed;
			entry["kind"] = kind_name;
			entry["n"] = h.ops.size();
			entry["k"] = concurrency_width(h);
			entry["mutation"] = mutation.empty() ? json(nullptr) : json(mutation);
			entry["label"] = label_for(h);
			entries.push_back(std::move(entry));
		}
		manifest["histories"] = std::move(entries);
		std::ofstream file(fs::path(dir) / "manifest.json", std::ios::binary);
		file << manifest.dump(2) << '\n';
		if (!file)
			throw std::runtime_error("cannot write manifest in '" + dir + "'");
		out << "wrote " << count << " histories to " << dir << '\n';
		return 0;
	} catch (const std::exception &e) {
		err << "linmon: " << e.what() << '\n';
		return kInputError;
	}
}

int cmd_bench(const std::string &dir, std::ostream &out, std::ostream &err)
{
	std::vector<fs::path> files;
	try {
		for (const auto &entry : fs::directory_iterator(dir))
			if (entry.is_regular_file() && entry.path().extension() == ".json" && entry.path().filename() != "manifest.json")
				files.push_back(entry.path());
	} catch (const std::exception &e) {
		err << "linmon: " << e.what() << '\n';
		return kInputError;
	}
	std::sort(files.begin(), files.end());
	out << "file,kind,n,k,states,engine,ms\n";
	for (const auto &path : files) {
		try {
			const auto h = load_history(path);
			const auto engine = default_engine(h.kind);
			const auto states = FrontierGraph::build(h, {.materialize_edges = false}).state_count();
			const auto start = std::chrono::steady_clock::now();
			(void)run_engine(engine, h, false);
			const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
			out << path.filename().string() << ',' << to_string(h.kind) << ',' << h.ops.size() << ','
			    << concurrency_width(h) << ',' << states << ',' << engine << ',' << elapsed.count() << '\n';
		} catch (const std::exception &e) {
			err << "linmon: " << path.string() << ": " << e.what() << '\n';
			return kInputError;
		}
	}
	return 0;
}

} // namespace

std::string_view default_engine(AdtKind kind)
{
	switch (kind) {
	case AdtKind::Stack:
		return "stack";
	case AdtKind::Queue:
		return "queue";
	default:
		return "aadt";
	}
}

Verdict run_engine(std::string_view engine, const History &h, bool want_witness)
{
	if (engine == "oracle") {
		auto verdict = oracle_check(h);
		if (!want_witness)
			verdict.witness.reset();
		return verdict;
	}
	if (engine != default_engine(h.kind)) {
		if (engine == "aadt" || engine == "stack" || engine == "queue")
			throw std::invalid_argument("engine '" + std::string(engine) + "' cannot check " +
			                            std::string(to_string(h.kind)) + " histories");
		throw std::invalid_argument("unknown engine '" + std::string(engine) + "'");
	}
	if (engine == "stack")
		return stack_check(h, {.want_witness = want_witness});
	if (engine == "queue")
		return queue_check(h, {.want_witness = want_witness});
	return check_aadt(h, {.memoize = true, .want_witness = want_witness});
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Linearizability checking for concurrent histories", "linmon"};
	app.require_subcommand(1);

	std::vector<std::string> check_files;
	std::string engine;
	bool oracle = false;
	bool witness = false;
	auto *check = app.add_subcommand("check", "Check one or more history files");
	check->add_flag("--oracle", oracle, "Use the brute-force oracle");
	check->add_option("--engine", engine, "aadt, stack, queue or oracle");
	check->add_flag("--witness", witness, "Include a linearization in the report");
	check->add_option("files", check_files, "History JSON files")->required();

	std::string graph_file;
	auto *graph = app.add_subcommand("graph", "Print the frontier graph as DOT");
	graph->add_option("file", graph_file, "History JSON file")->required();

	std::string kind;
	std::size_t n = 0;
	std::size_t k = 1;
	std::uint64_t seed = 0;
	std::size_t count = 1;
	double mutate = 0.0;
	std::string out_dir;
	auto *gen = app.add_subcommand("gen", "Generate a corpus of histories");
	gen->add_option("--kind", kind, "Abstract data type")->required();
	gen->add_option("--n", n, "Operations per history")->required();
	gen->add_option("--k", k, "Target concurrency width")->required();
	gen->add_option("--seed", seed, "Base seed")->required();
	gen->add_option("--count", count, "Number of histories");
	gen->add_option("--mutate", mutate, "Fraction of histories to mutate");
	gen->add_option("dir", out_dir, "Output directory")->required();

	std::string bench_dir;
	auto *bench = app.add_subcommand("bench", "Time the default engine on every history in a directory");
	bench->add_option("dir", bench_dir, "Corpus directory")->required();

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &) {
		out << app.help();
		return 0;
	} catch (const CLI::ParseError &e) {
		err << "linmon: " << e.what() << '\n';
		return kInputError;
	}

	if (check->parsed())
		return cmd_check(check_files, engine, oracle, witness, out, err);
	if (graph->parsed())
		return cmd_graph(graph_file, out, err);
	if (gen->parsed())
		return cmd_gen(kind, n, k, seed, count, mutate, out_dir, out, err);
	return cmd_bench(bench_dir, out, err);
}

} // namespace linmon::cli
