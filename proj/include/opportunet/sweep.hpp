/*
 * sweep.hpp
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

#ifndef OPPORTUNET_SWEEP_HPP
#define OPPORTUNET_SWEEP_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "opportunet/config.hpp"
#include "opportunet/report.hpp"

namespace opportunet {

/**
 * Cross product of routers x sizes x seeds over one base scenario.
 * Runs are independent simulations, so workers just pull the next job
 * index; outputs depend only on each job's own config, never on the
 * schedule.  With an out_dir each run writes
 *   run_<router>_<sizeBytes>_<seed>/events.csv + report.csv
 * as soon as it finishes, and the sweep ends with the aggregate tables.
 */
struct SweepSpec {
	ConfigDocument base;      // router/size/seed keys get overridden per job
	std::vector<std::string> routers;
	std::vector<std::uint64_t> sizes;
	std::vector<std::uint32_t> seeds;
	unsigned threads = 1;     // capped by OPPORTUNET_THREADS and job count
	std::string out_dir;      // empty: keep reports in memory only
};

struct SweepFailure {
	RunKey key;
	std::string error;
};

struct SweepOutcome {
	std::vector<SweepResult> results;   // ordered by (router, size, seed)
	std::vector<SweepFailure> failures;
	bool ok() const { return failures.empty(); }
};

std::string run_dir_name(const RunKey& key);

/// Effective worker count for `jobs` jobs (respects OPPORTUNET_THREADS).
unsigned sweep_thread_count(unsigned requested, std::size_t jobs);

/// A failing run is recorded (and listed in <out_dir>/SWEEP_FAILED)
/// instead of aborting the rest of the sweep; tables cover survivors.
SweepOutcome run_sweep(const SweepSpec& spec);

}  // namespace opportunet

#endif  // OPPORTUNET_SWEEP_HPP
