/*
 * sweep.cpp
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

#include "opportunet/sweep.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "opportunet/scenario.hpp"

namespace opportunet {

namespace fs = std::filesystem;

std::string run_dir_name(const RunKey& key)
{
	return "run_" + key.router + "_" + std::to_string(key.size_bytes) + "_" +
	    std::to_string(key.seed);
}

unsigned sweep_thread_count(unsigned requested, std::size_t jobs)
{
	unsigned n = requested;
	if (n == 0) {
		n = std::thread::hardware_concurrency();
		if (n == 0) n = 1;
	}
	if (const char* cap = std::getenv("OPPORTUNET_THREADS")) {
		const long v = std::strtol(cap, nullptr, 10);
		if (v >= 1 && static_cast<unsigned long>(v) < n) n = static_cast<unsigned>(v);
	}
	if (jobs > 0 && n > jobs) n = static_cast<unsigned>(jobs);
	return n < 1 ? 1 : n;
}

namespace {

struct Job {
	RunKey key;
	ScenarioConfig cfg;
};

struct Slot {
	bool failed = false;
	std::string error;
	SweepResult result;
};

void run_job(const Job& job, const std::string& fingerprint, const fs::path* out_root,
    Slot& slot)
{
	try {
		RunResult run = run_scenario(job.cfg);
		slot.result.key = job.key;
		slot.result.report = run.report;
		slot.result.fingerprint = fingerprint;
		if (out_root != nullptr) {
			const fs::path dir = *out_root / run_dir_name(job.key);
			fs::create_directories(dir);
			std::ofstream ev(dir / "events.csv");
			run.log.write_csv(ev, run.msg_ids);
			if (!ev) throw std::runtime_error("write failed: " + (dir / "events.csv").string());
			std::ofstream rp(dir / "report.csv");
			write_report_csv(rp, run.report);
			if (!rp) throw std::runtime_error("write failed: " + (dir / "report.csv").string());
		}
	} catch (const std::exception& e) {
		slot.failed = true;
		slot.error = e.what();
	}
}

}  // namespace

SweepOutcome run_sweep(const SweepSpec& spec)
{
	if (spec.routers.empty() || spec.sizes.empty() || spec.seeds.empty())
		throw ConfigError("sweep needs at least one router, size and seed");

	// One fingerprint for the whole sweep: the overridden keys are
	// exactly the ones the fingerprint excludes.
	const std::string fingerprint = spec.base.scenario_fingerprint();

	std::vector<Job> jobs;
	for (const auto& router : spec.routers) {
		for (std::uint64_t size : spec.sizes) {
			for (std::uint32_t seed : spec.seeds) {
				Job j;
				j.key = RunKey{router, size, seed};
				ConfigDocument doc = spec.base;
				doc.set("router", router);
				doc.set("traffic.sizeBytes", std::to_string(size));
				doc.set("sim.seed", std::to_string(seed));
				j.cfg = doc.resolve();
				jobs.push_back(std::move(j));
			}
		}
	}

	const fs::path out_root = spec.out_dir;
	const fs::path* root = spec.out_dir.empty() ? nullptr : &out_root;
	if (root != nullptr) fs::create_directories(out_root);

	std::vector<Slot> slots(jobs.size());
	const unsigned workers = sweep_thread_count(spec.threads, jobs.size());
	if (workers <= 1) {
		for (std::size_t i = 0; i < jobs.size(); ++i)
			run_job(jobs[i], fingerprint, root, slots[i]);
	} else {
		std::atomic<std::size_t> next{0};
		std::vector<std::thread> pool;
		pool.reserve(workers);
		for (unsigned w = 0; w < workers; ++w) {
			pool.emplace_back([&] {
				for (;;) {
					const std::size_t i = next.fetch_add(1);
					if (i >= jobs.size()) return;
					run_job(jobs[i], fingerprint, root, slots[i]);
				}
			});
		}
		for (auto& t : pool) t.join();
	}

	SweepOutcome out;
	for (std::size_t i = 0; i < jobs.size(); ++i) {
		if (slots[i].failed) {
			out.failures.push_back({jobs[i].key, slots[i].error});
		} else {
			out.results.push_back(std::move(slots[i].result));
		}
	}

	if (root != nullptr) {
		if (!out.results.empty()) emit_tables(out.results, out_root);
		if (!out.failures.empty()) {
			std::ofstream marker(out_root / "SWEEP_FAILED");
			for (const auto& f : out.failures)
				marker << run_dir_name(f.key) << ": " << f.error << "\n";
		}
	}
	return out;
}

}  // namespace opportunet
