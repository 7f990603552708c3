/*
 * config.cpp
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

#include "opportunet/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

namespace opportunet {

namespace {

const std::set<std::string> kScalarKeys = {
	"sim.duration", "sim.tick", "sim.seed",
	"map.file", "router",
	"link.range", "link.speedBps", "link.speedAfterBps", "link.speedSwitchTime",
	"link.latency", "link.bufferBytes", "link.singleTransferPerNode",
	"prophet.pInit", "prophet.beta", "prophet.gamma", "prophet.secondsInTimeUnit",
	"prophet.v2EncounterScaling", "prophet.typicalInterval",
	"traffic.sizeBytes", "traffic.intervalMin", "traffic.intervalMax",
	"traffic.ttl", "traffic.cooldown",
	"metrics.countAborted",
};

const std::set<std::string> kGroupSubkeys = {"name", "count", "speed", "pauseTime", "edges"};

std::string trim(const std::string& s)
{
	std::size_t b = s.find_first_not_of(" \t\r");
	if (b == std::string::npos) return "";
	std::size_t e = s.find_last_not_of(" \t\r");
	return s.substr(b, e - b + 1);
}

// Splits "group<N>.<sub>" -> (N, sub); returns false for other keys.
bool split_group_key(const std::string& key, unsigned& n, std::string& sub)
{
	if (key.rfind("group", 0) != 0) return false;
	std::size_t i = 5;
	if (i >= key.size() || !std::isdigit(static_cast<unsigned char>(key[i]))) return false;
	unsigned v = 0;
	while (i < key.size() && std::isdigit(static_cast<unsigned char>(key[i]))) {
		v = v * 10 + (key[i] - '0');
		++i;
	}
	if (i >= key.size() || key[i] != '.') return false;
	n = v;
	sub = key.substr(i + 1);
	return true;
}

bool known_key(const std::string& key)
{
	if (kScalarKeys.count(key)) return true;
	unsigned n;
	std::string sub;
	return split_group_key(key, n, sub) && n >= 1 && kGroupSubkeys.count(sub);
}

std::string fmt_double(double v)
{
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.15g", v);
	return buf;
}

std::string fmt_u64(std::uint64_t v) { return std::to_string(v); }
std::string fmt_bool(bool v) { return v ? "true" : "false"; }

class Reader {
public:
	Reader(const std::map<std::string, std::string>& raw,
	    const std::map<std::string, std::size_t>& lines)
	    : raw_(raw), lines_(lines)
	{
	}

	[[noreturn]] void fail(const std::string& key, const std::string& what) const
	{
		std::string where;
		auto it = lines_.find(key);
		if (it != lines_.end()) where = " (line " + std::to_string(it->second) + ")";
		throw ConfigError("config key '" + key + "'" + where + ": " + what);
	}

	bool has(const std::string& key) const { return raw_.count(key) != 0; }

	std::string str(const std::string& key, const std::string& dflt) const
	{
		auto it = raw_.find(key);
		return it == raw_.end() ? dflt : it->second;
	}

	double real(const std::string& key, double dflt) const
	{
		auto it = raw_.find(key);
		if (it == raw_.end()) return dflt;
		const char* s = it->second.c_str();
		char* end = nullptr;
		double v = std::strtod(s, &end);
		if (end == s || *end != '\0') fail(key, "expected a number, got '" + it->second + "'");
		return v;
	}

	std::uint64_t unsigned_int(const std::string& key, std::uint64_t dflt) const
	{
		auto it = raw_.find(key);
		if (it == raw_.end()) return dflt;
		const char* s = it->second.c_str();
		char* end = nullptr;
		unsigned long long v = std::strtoull(s, &end, 10);
		if (end == s || *end != '\0' || it->second[0] == '-') {
			fail(key, "expected a non-negative integer, got '" + it->second + "'");
		}
		return v;
	}

	bool boolean(const std::string& key, bool dflt) const
	{
		auto it = raw_.find(key);
		if (it == raw_.end()) return dflt;
		if (it->second == "true") return true;
		if (it->second == "false") return false;
		fail(key, "expected true or false, got '" + it->second + "'");
	}

private:
	const std::map<std::string, std::string>& raw_;
	const std::map<std::string, std::size_t>& lines_;
};

std::vector<GroupSpec> default_groups()
{
	return {
		{"bicycles", 50, 1.0, 0.0, EdgeTag::land},
		{"motorboats", 70, 15.0, 0.0, EdgeTag::water},
	};
}

}  // namespace

ConfigDocument ConfigDocument::parse(const std::string& text)
{
	ConfigDocument doc;
	std::istringstream in(text);
	std::string line;
	std::size_t lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
		line = trim(line);
		if (line.empty()) continue;
		auto eq = line.find('=');
		if (eq == std::string::npos) {
			throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
		}
		std::string key = trim(line.substr(0, eq));
		std::string value = trim(line.substr(eq + 1));
		if (key.empty()) {
			throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
		}
		if (!known_key(key)) {
			throw ConfigError(
			    "config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
		}
		if (doc.raw_.count(key)) {
			throw ConfigError(
			    "config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
		}
		doc.raw_[key] = value;
		doc.lines_[key] = lineno;
	}
	return doc;
}

void ConfigDocument::set(const std::string& key, const std::string& value)
{
	if (!known_key(key)) throw ConfigError("unknown key '" + key + "'");
	raw_[key] = value;
}

ScenarioConfig ConfigDocument::resolve() const
{
	Reader r(raw_, lines_);
	ScenarioConfig c;

	c.duration = r.real("sim.duration", 43200);
	c.tick = r.real("sim.tick", 0.1);
	c.seed = r.unsigned_int("sim.seed", 1);
	c.map_file = r.str("map.file", "");
	c.router = r.str("router", "epidemic");

	c.link.range = r.real("link.range", 3.0);
	c.link.speed_bps = r.real("link.speedBps", 500000);
	c.link.speed_after_bps = r.real("link.speedAfterBps", 1000000);
	c.link.speed_switch_time = r.real("link.speedSwitchTime", 10000);
	c.link.latency = r.real("link.latency", 0.2);
	c.link.buffer_bytes = r.unsigned_int("link.bufferBytes", 8000000);
	c.link.single_transfer_per_node = r.boolean("link.singleTransferPerNode", false);

	c.prophet.p_init = r.real("prophet.pInit", 0.75);
	c.prophet.transitivity_scale = r.real("prophet.beta", 0.25);
	c.prophet.aging_base = r.real("prophet.gamma", 0.98);
	c.prophet.seconds_in_time_unit = r.real("prophet.secondsInTimeUnit", 30);
	c.prophet.v2_encounter_scaling = r.boolean("prophet.v2EncounterScaling", false);
	c.prophet.typical_interval = r.real("prophet.typicalInterval", 1800);

	c.traffic.size_bytes = r.unsigned_int("traffic.sizeBytes", 1000000);
	c.traffic.interval_min = r.real("traffic.intervalMin", 25);
	c.traffic.interval_max = r.real("traffic.intervalMax", 35);
	c.traffic.ttl = r.real("traffic.ttl", 0);
	c.traffic.cooldown = r.real("traffic.cooldown", 1800);

	c.count_aborted = r.boolean("metrics.countAborted", false);

	// Groups: either none configured (defaults) or declared group<N>.*
	// blocks, instantiated in ascending N.
	std::set<unsigned> group_nums;
	for (const auto& [key, value] : raw_) {
		unsigned n;
		std::string sub;
		if (split_group_key(key, n, sub)) group_nums.insert(n);
	}
	if (group_nums.empty()) {
		c.groups = default_groups();
	} else {
		for (unsigned n : group_nums) {
			std::string p = "group" + std::to_string(n) + ".";
			GroupSpec g;
			g.name = r.str(p + "name", "group" + std::to_string(n));
			if (!r.has(p + "count")) r.fail(p + "count", "required when the group is declared");
			if (!r.has(p + "speed")) r.fail(p + "speed", "required when the group is declared");
			g.count = static_cast<std::uint32_t>(r.unsigned_int(p + "count", 0));
			g.speed = r.real(p + "speed", 0);
			g.pause = r.real(p + "pauseTime", 0);
			std::string tag = r.str(p + "edges", "both");
			try {
				g.edges = parse_edge_tag(tag);
			} catch (const MapError&) {
				r.fail(p + "edges", "expected land, water or both, got '" + tag + "'");
			}
			c.groups.push_back(std::move(g));
		}
	}

	// Range checks.
	auto require = [&](bool ok, const std::string& key, const std::string& what) {
		if (!ok) r.fail(key, what);
	};
	require(c.duration > 0, "sim.duration", "must be positive");
	require(c.tick > 0, "sim.tick", "must be positive");
	require(c.tick <= c.duration, "sim.tick", "must not exceed sim.duration");
	require(c.router == "epidemic" || c.router == "maxprop" || c.router == "prophet",
	    "router", "must be epidemic, maxprop or prophet");
	require(c.link.range > 0, "link.range", "must be positive");
	require(c.link.speed_bps > 0, "link.speedBps", "must be positive");
	require(c.link.speed_after_bps > 0, "link.speedAfterBps", "must be positive");
	require(c.link.speed_switch_time >= 0, "link.speedSwitchTime", "must be non-negative");
	require(c.link.latency >= 0, "link.latency", "must be non-negative");
	require(c.link.buffer_bytes > 0, "link.bufferBytes", "must be positive");
	require(c.prophet.p_init > 0 && c.prophet.p_init <= 1, "prophet.pInit",
	    "probabilities lie in (0, 1]");
	require(c.prophet.transitivity_scale >= 0 && c.prophet.transitivity_scale <= 1,
	    "prophet.beta", "must lie in [0, 1]");
	require(c.prophet.aging_base > 0 && c.prophet.aging_base <= 1, "prophet.gamma",
	    "must lie in (0, 1]");
	require(c.prophet.seconds_in_time_unit > 0, "prophet.secondsInTimeUnit", "must be positive");
	require(c.prophet.typical_interval > 0, "prophet.typicalInterval", "must be positive");
	require(c.traffic.size_bytes >= 1, "traffic.sizeBytes", "messages need at least one byte");
	require(c.traffic.interval_min > 0, "traffic.intervalMin", "must be positive");
	require(c.traffic.interval_max >= c.traffic.interval_min, "traffic.intervalMax",
	    "must be >= traffic.intervalMin");
	require(c.traffic.ttl >= 0, "traffic.ttl", "must be non-negative (0 = unlimited)");
	require(c.traffic.cooldown >= 0, "traffic.cooldown", "must be non-negative");
	for (std::size_t i = 0; i < c.groups.size(); ++i) {
		std::string p = "group" + std::to_string(i + 1) + ".";
		require(c.groups[i].count > 0, p + "count", "must be positive");
		require(c.groups[i].speed > 0, p + "speed", "must be positive");
		require(c.groups[i].pause >= 0, p + "pauseTime", "must be non-negative");
	}
	return c;
}

std::map<std::string, std::string> ConfigDocument::canonical() const
{
	ScenarioConfig c = resolve();
	std::map<std::string, std::string> out;
	out["sim.duration"] = fmt_double(c.duration);
	out["sim.tick"] = fmt_double(c.tick);
	out["sim.seed"] = fmt_u64(c.seed);
	out["map.file"] = c.map_file;
	out["router"] = c.router;
	out["link.range"] = fmt_double(c.link.range);
	out["link.speedBps"] = fmt_double(c.link.speed_bps);
	out["link.speedAfterBps"] = fmt_double(c.link.speed_after_bps);
	out["link.speedSwitchTime"] = fmt_double(c.link.speed_switch_time);
	out["link.latency"] = fmt_double(c.link.latency);
	out["link.bufferBytes"] = fmt_u64(c.link.buffer_bytes);
	out["link.singleTransferPerNode"] = fmt_bool(c.link.single_transfer_per_node);
	out["prophet.pInit"] = fmt_double(c.prophet.p_init);
	out["prophet.beta"] = fmt_double(c.prophet.transitivity_scale);
	out["prophet.gamma"] = fmt_double(c.prophet.aging_base);
	out["prophet.secondsInTimeUnit"] = fmt_double(c.prophet.seconds_in_time_unit);
	out["prophet.v2EncounterScaling"] = fmt_bool(c.prophet.v2_encounter_scaling);
	out["prophet.typicalInterval"] = fmt_double(c.prophet.typical_interval);
	out["traffic.sizeBytes"] = fmt_u64(c.traffic.size_bytes);
	out["traffic.intervalMin"] = fmt_double(c.traffic.interval_min);
	out["traffic.intervalMax"] = fmt_double(c.traffic.interval_max);
	out["traffic.ttl"] = fmt_double(c.traffic.ttl);
	out["traffic.cooldown"] = fmt_double(c.traffic.cooldown);
	out["metrics.countAborted"] = fmt_bool(c.count_aborted);
	for (std::size_t i = 0; i < c.groups.size(); ++i) {
		std::string p = "group" + std::to_string(i + 1) + ".";
		out[p + "name"] = c.groups[i].name;
		out[p + "count"] = fmt_u64(c.groups[i].count);
		out[p + "speed"] = fmt_double(c.groups[i].speed);
		out[p + "pauseTime"] = fmt_double(c.groups[i].pause);
		out[p + "edges"] = edge_tag_name(c.groups[i].edges);
	}
	return out;
}

std::string ConfigDocument::serialize() const
{
	std::string out;
	for (const auto& [key, value] : canonical()) {
		out += key;
		out += " = ";
		out += value;
		out += "\n";
	}
	return out;
}

std::string ConfigDocument::scenario_fingerprint() const
{
	std::string out;
	for (const auto& [key, value] : canonical()) {
		if (key == "router" || key == "sim.seed" || key == "traffic.sizeBytes") continue;
		out += key;
		out += "=";
		out += value;
		out += ";";
	}
	return out;
}

}  // namespace opportunet
