/*
 * report.cpp
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

#include "opportunet/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace opportunet {

namespace {
constexpr double kNull = std::numeric_limits<double>::quiet_NaN();
}

double RunReport::delivery_probability() const
{
	if (created == 0) return kNull;
	return static_cast<double>(delivered) / static_cast<double>(created);
}

double RunReport::avg_latency() const
{
	if (latencies.empty()) return kNull;
	double sum = 0;
	for (double v : latencies) sum += v;
	return sum / static_cast<double>(latencies.size());
}

double RunReport::overhead_ratio() const
{
	if (delivered == 0) return kNull;
	return static_cast<double>(relayed - delivered) / static_cast<double>(delivered);
}

bool is_null_metric(double v) { return std::isnan(v); }

std::string format_metric(double v)
{
	if (std::isnan(v)) return "null";
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.6g", v);
	return buf;
}

void write_report_csv(std::ostream& out, const RunReport& r)
{
	out << "key,value,unit\n";
	out << "created," << r.created << ",count\n";
	out << "delivered," << r.delivered << ",count\n";
	out << "relayed," << r.relayed << ",count\n";
	out << "dropped," << r.dropped << ",count\n";
	out << "aborted," << r.aborted << ",count\n";
	out << "expired," << r.expired << ",count\n";
	out << "still_buffered," << r.still_buffered << ",count\n";
	out << "dropped_final," << r.dropped_final << ",count\n";
	out << "expired_final," << r.expired_final << ",count\n";
	out << "delivery_probability," << format_metric(r.delivery_probability()) << ",ratio\n";
	out << "avg_latency," << format_metric(r.avg_latency()) << ",s\n";
	out << "overhead_ratio," << format_metric(r.overhead_ratio()) << ",ratio\n";
}

RunReport recompute_from_events_csv(std::istream& in)
{
	RunReport r;
	std::map<std::string, double> created_at;
	std::string line;
	bool header = true;
	while (std::getline(in, line)) {
		if (header) {
			header = false;
			continue;
		}
		if (line.empty()) continue;
		std::istringstream row(line);
		std::string time_s, event, msg_id, rest;
		if (!std::getline(row, time_s, ',') || !std::getline(row, event, ',') ||
		    !std::getline(row, msg_id, ',')) {
			throw std::runtime_error("events csv: malformed row '" + line + "'");
		}
		double t = std::strtod(time_s.c_str(), nullptr);
		if (event == "created") {
			++r.created;
			created_at[msg_id] = t;
		} else if (event == "relayed") {
			++r.relayed;
		} else if (event == "delivered") {
			++r.delivered;
			auto it = created_at.find(msg_id);
			if (it == created_at.end()) {
				throw std::runtime_error("events csv: delivery without creation: " + msg_id);
			}
			r.latencies.push_back(t - it->second);
		} else if (event == "dropped") {
			++r.dropped;
		} else if (event == "aborted") {
			++r.aborted;
		} else if (event == "expired") {
			++r.expired;
		} else {
			throw std::runtime_error("events csv: unknown event '" + event + "'");
		}
	}
	return r;
}

namespace {

struct Cell {
	double mean = kNull;
	double stddev = kNull;
	std::size_t n = 0;
};

Cell aggregate(const std::vector<double>& values)
{
	Cell c;
	std::vector<double> vs;
	for (double v : values) {
		if (!std::isnan(v)) vs.push_back(v);
	}
	c.n = vs.size();
	if (vs.empty()) return c;
	double sum = 0;
	for (double v : vs) sum += v;
	c.mean = sum / static_cast<double>(vs.size());
	if (vs.size() < 2) {
		c.stddev = 0;
		return c;
	}
	double ss = 0;
	for (double v : vs) ss += (v - c.mean) * (v - c.mean);
	c.stddev = std::sqrt(ss / static_cast<double>(vs.size() - 1));
	return c;
}

using MetricFn = double (*)(const RunReport&);

void write_metric_tables(const std::vector<const SweepResult*>& runs,
    const std::filesystem::path& outdir, const std::string& name, MetricFn fn,
    const char* unit)
{
	std::string unit_col = unit ? std::string(",") + unit : "";
	{
		std::ofstream out(outdir / ("metric_" + name + ".csv"));
		out << "router,size_bytes,seed,value" << (unit ? ",unit" : "") << "\n";
		for (const SweepResult* run : runs) {
			out << run->key.router << ',' << run->key.size_bytes << ',' << run->key.seed
			    << ',' << format_metric(fn(run->report)) << unit_col << '\n';
		}
	}
	std::map<std::pair<std::string, std::uint64_t>, std::vector<double>> cells;
	for (const SweepResult* run : runs) {
		cells[{run->key.router, run->key.size_bytes}].push_back(fn(run->report));
	}
	std::ofstream out(outdir / ("aggregate_" + name + ".csv"));
	out << "router,size_bytes,mean,stddev,n" << (unit ? ",unit" : "") << "\n";
	for (const auto& [key, values] : cells) {
		Cell c = aggregate(values);
		out << key.first << ',' << key.second << ',' << format_metric(c.mean) << ','
		    << format_metric(c.stddev) << ',' << c.n << unit_col << '\n';
	}
}

}  // namespace

void emit_tables(const std::vector<SweepResult>& runs, const std::filesystem::path& outdir)
{
	if (runs.empty()) throw std::runtime_error("emit_tables: no completed runs");
	for (const SweepResult& run : runs) {
		if (run.fingerprint != runs.front().fingerprint) {
			throw std::runtime_error(
			    "emit_tables: runs come from different scenarios and cannot be aggregated");
		}
	}
	std::vector<const SweepResult*> sorted;
	for (const SweepResult& run : runs) sorted.push_back(&run);
	std::sort(sorted.begin(), sorted.end(), [](const SweepResult* l, const SweepResult* r) {
		return std::tie(l->key.router, l->key.size_bytes, l->key.seed) <
		    std::tie(r->key.router, r->key.size_bytes, r->key.seed);
	});

	std::filesystem::create_directories(outdir);
	write_metric_tables(sorted, outdir, "delivery_probability",
	    [](const RunReport& r) { return r.delivery_probability(); }, nullptr);
	write_metric_tables(sorted, outdir, "avg_latency",
	    [](const RunReport& r) { return r.avg_latency(); }, "s");
	write_metric_tables(sorted, outdir, "overhead_ratio",
	    [](const RunReport& r) { return r.overhead_ratio(); }, nullptr);

	// Delivery-vs-overhead scatter, one file per router.
	std::map<std::string, std::ofstream> scatter;
	for (const SweepResult* run : sorted) {
		auto it = scatter.find(run->key.router);
		if (it == scatter.end()) {
			it = scatter.emplace(run->key.router,
			             std::ofstream(outdir / ("scatter_" + run->key.router + ".csv")))
			         .first;
			it->second << "size_bytes,seed,delivery_probability,overhead_ratio\n";
		}
		it->second << run->key.size_bytes << ',' << run->key.seed << ','
		           << format_metric(run->report.delivery_probability()) << ','
		           << format_metric(run->report.overhead_ratio()) << '\n';
	}
}

}  // namespace opportunet
