/*
 * report.hpp
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

#ifndef OPPORTUNET_REPORT_HPP
#define OPPORTUNET_REPORT_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace opportunet {

/**
 * Counters and derived metrics for one run.  delivered counts unique
 * message ids (first arrival at the destination); relayed counts
 * completed transfers including final delivery hops.  Undefined metrics
 * (no created / no delivered messages) are NaN, serialized as "null",
 * and never coerced to zero.
 */
struct RunReport {
	std::uint64_t created = 0;
	std::uint64_t delivered = 0;
	std::uint64_t relayed = 0;
	std::uint64_t dropped = 0;   // drop events (evictions, rejections, ack purges)
	std::uint64_t aborted = 0;
	std::uint64_t expired = 0;   // expiry events
	std::uint64_t still_buffered = 0;  // ids resident somewhere at sim end
	std::uint64_t dropped_final = 0;   // ids whose last copy was dropped
	std::uint64_t expired_final = 0;   // ids whose last copy expired
	std::uint64_t ticks = 0;
	std::vector<double> latencies;     // seconds, in delivery order

	double delivery_probability() const;
	double avg_latency() const;  // seconds
	double overhead_ratio() const;
};

bool is_null_metric(double v);
std::string format_metric(double v);  // 6 significant digits, NaN -> "null"

/// report.csv: key,value,unit rows (latency explicitly tagged with its
/// unit to rule out seconds/milliseconds confusion).
void write_report_csv(std::ostream& out, const RunReport& r);

/// Second, independent computation of the metrics: parses an events.csv
/// stream and rebuilds counters and latencies from scratch.
RunReport recompute_from_events_csv(std::istream& in);

struct RunKey {
	std::string router;
	std::uint64_t size_bytes = 0;
	std::uint64_t seed = 0;
};

struct SweepResult {
	RunKey key;
	RunReport report;
	std::string fingerprint;  // scenario identity; mixing is an error
};

/**
 * Writes the plot-ready tables into outdir:
 *   metric_<name>.csv      router,size_bytes,seed,value[,unit]
 *   aggregate_<name>.csv   router,size_bytes,mean,stddev,n[,unit]
 *   scatter_<router>.csv   size_bytes,seed,delivery_probability,overhead_ratio
 * Rows are ordered by (router, size, seed); the stddev is the sample
 * standard deviation over the non-null values (n of them).
 */
void emit_tables(const std::vector<SweepResult>& runs, const std::filesystem::path& outdir);

}  // namespace opportunet

#endif  // OPPORTUNET_REPORT_HPP
