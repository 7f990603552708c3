/*
 * opportunet.cpp
 *
 * Copyright (C) 2026 the OpportuNet authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "opportunet/scenario.hpp"
#include "opportunet/sweep.hpp"

namespace fs = std::filesystem;
using namespace opportunet;

namespace {

std::string slurp(const std::string& path)
{
	std::ifstream in(path);
	if (!in) throw ConfigError("cannot open '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

ConfigDocument load_config(const std::string& path)
{
	// No config file means the built-in default scenario.
	if (path.empty()) return ConfigDocument();
	return ConfigDocument::parse(slurp(path));
}

void write_run_outputs(const RunResult& run, const std::string& out_dir, bool contacts)
{
	const fs::path dir = out_dir;
	fs::create_directories(dir);
	{
		std::ofstream ev(dir / "events.csv");
		run.log.write_csv(ev, run.msg_ids);
	}
	{
		std::ofstream rp(dir / "report.csv");
		write_report_csv(rp, run.report);
	}
	if (contacts) {
		std::ofstream ct(dir / "contacts.csv");
		write_contact_trace(ct, run.contacts);
	}
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what)
{
	std::vector<T> out;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ',')) {
		if (item.empty()) continue;
		std::size_t pos = 0;
		unsigned long long v = 0;
		try {
			v = std::stoull(item, &pos);
		} catch (const std::exception&) {
			pos = 0;
		}
		if (pos != item.size()) throw ConfigError(std::string("bad ") + what + " '" + item + "'");
		out.push_back(static_cast<T>(v));
	}
	if (out.empty()) throw ConfigError(std::string("empty ") + what + " list");
	return out;
}

int cmd_run(const std::string& cfg_path, const std::string& out_dir, bool export_contacts)
{
	ConfigDocument doc = load_config(cfg_path);
	ScenarioConfig cfg = doc.resolve();
	RunResult run = run_scenario(cfg, export_contacts);
	if (out_dir.empty()) {
		write_report_csv(std::cout, run.report);
	} else {
		write_run_outputs(run, out_dir, export_contacts);
	}
	return 0;
}

int cmd_sweep(const std::string& cfg_path, const std::string& out_dir,
    const std::string& routers, const std::string& sizes, const std::string& seeds,
    unsigned threads)
{
	SweepSpec spec;
	spec.base = load_config(cfg_path);
	spec.routers = [&] {
		std::vector<std::string> out;
		std::stringstream ss(routers);
		std::string item;
		while (std::getline(ss, item, ','))
			if (!item.empty()) out.push_back(item);
		if (out.empty()) throw ConfigError("empty router list");
		return out;
	}();
	spec.sizes = parse_list<std::uint64_t>(sizes, "size");
	spec.seeds = parse_list<std::uint32_t>(seeds, "seed");
	spec.threads = threads;
	spec.out_dir = out_dir;
	SweepOutcome out = run_sweep(spec);
	std::cout << out.results.size() << " runs ok, " << out.failures.size() << " failed\n";
	for (const auto& f : out.failures)
		std::cerr << run_dir_name(f.key) << ": " << f.error << "\n";
	return out.ok() ? 0 : 1;
}

int cmd_validate(const std::string& cfg_path)
{
	ConfigDocument doc = load_config(cfg_path);
	doc.resolve();                    // type/range errors surface here
	load_scenario_map(doc.resolve()); // and map problems here
	std::cout << doc.serialize();
	return 0;
}

int cmd_replay(const std::string& cfg_path, const std::string& trace_path,
    const std::string& messages_path, const std::string& out_dir)
{
	ConfigDocument doc = load_config(cfg_path);
	ScenarioConfig cfg = doc.resolve();
	std::ifstream tr(trace_path);
	if (!tr) throw ConfigError("cannot open '" + trace_path + "'");
	std::vector<ContactEvent> trace = parse_contact_trace(tr);
	std::vector<ScriptedMessage> msgs;
	const std::vector<ScriptedMessage>* msgs_ptr = nullptr;
	if (!messages_path.empty()) {
		std::ifstream ms(messages_path);
		if (!ms) throw ConfigError("cannot open '" + messages_path + "'");
		msgs = parse_messages_csv(ms);
		msgs_ptr = &msgs;
	}
	RunResult run = run_replay(cfg, trace, msgs_ptr);
	if (out_dir.empty()) {
		write_report_csv(std::cout, run.report);
	} else {
		write_run_outputs(run, out_dir, false);
	}
	return 0;
}

}  // namespace

int main(int argc, char** argv)
{
	CLI::App app{"OpportuNet: a deterministic opportunistic-network simulator"};
	app.require_subcommand(1);

	std::string cfg_path, out_dir, trace_path, messages_path;
	std::string routers = "epidemic,prophet,maxprop";
	// 0.25 MB steps spanning the smallest physically meaningful size up to 3 MB.
	std::string sizes =
	    "250000,500000,750000,1000000,1250000,1500000,1750000,2000000,"
	    "2250000,2500000,2750000,3000000";
	std::string seeds = "1";
	unsigned threads = 0;
	bool export_contacts = false;

	auto* run = app.add_subcommand("run", "Run one scenario");
	run->add_option("-c,--config", cfg_path, "Scenario file (omit for defaults)");
	run->add_option("-o,--out", out_dir, "Output directory (default: report to stdout)");
	run->add_flag("--export-contacts", export_contacts, "Also write contacts.csv");

	auto* sweep = app.add_subcommand("sweep", "Run a router/size/seed grid");
	sweep->add_option("-c,--config", cfg_path, "Base scenario file");
	sweep->add_option("-o,--out", out_dir, "Output directory")->required();
	sweep->add_option("--routers", routers, "Comma list (default all three)");
	sweep->add_option("--sizes", sizes, "Comma list of message sizes in bytes");
	sweep->add_option("--seeds", seeds, "Comma list of seeds");
	sweep->add_option("--threads", threads, "Worker threads (0 = auto)");

	auto* validate = app.add_subcommand("validate", "Check a scenario file and print it back");
	validate->add_option("-c,--config", cfg_path, "Scenario file");

	auto* replay = app.add_subcommand("replay", "Re-run routing over a recorded contact trace");
	replay->add_option("-c,--config", cfg_path, "Scenario file (omit for defaults)");
	replay->add_option("-t,--trace", trace_path, "contacts.csv from a previous run")->required();
	replay->add_option("--messages", messages_path, "Scripted messages CSV (overrides random traffic)");
	replay->add_option("-o,--out", out_dir, "Output directory (default: report to stdout)");

	CLI11_PARSE(app, argc, argv);

	try {
		if (run->parsed()) return cmd_run(cfg_path, out_dir, export_contacts);
		if (sweep->parsed()) return cmd_sweep(cfg_path, out_dir, routers, sizes, seeds, threads);
		if (validate->parsed()) return cmd_validate(cfg_path);
		if (replay->parsed()) return cmd_replay(cfg_path, trace_path, messages_path, out_dir);
	} catch (const ConfigError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const MapError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const TraceError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 2;
}
