/*
 * config.hpp
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

#ifndef OPPORTUNET_CONFIG_HPP
#define OPPORTUNET_CONFIG_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "opportunet/link_model.hpp"
#include "opportunet/mobility.hpp"

namespace opportunet {

class ConfigError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

struct ProphetParams {
	double p_init = 0.75;             // encounter increment base
	double transitivity_scale = 0.25; // weight of relayed predictability
	double aging_base = 0.98;         // decay multiplier per time unit
	double seconds_in_time_unit = 30;
	bool v2_encounter_scaling = false;
	double typical_interval = 1800;   // seconds; used only by the v2 mode
};

struct TrafficConfig {
	std::uint64_t size_bytes = 1000000;
	double interval_min = 25;
	double interval_max = 35;
	double ttl = 0;         // <= 0: unlimited
	double cooldown = 1800; // no creations in the final cooldown window
};

struct ScenarioConfig {
	double duration = 43200;
	double tick = 0.1;
	std::uint64_t seed = 1;
	std::string map_file;   // empty: use the compiled-in map
	std::string router = "epidemic";
	std::vector<GroupSpec> groups;
	LinkParams link;
	ProphetParams prophet;
	TrafficConfig traffic;
	bool count_aborted = false;  // include aborted transfers in the relay count
};

/**
 * Flat key=value scenario file.  '#' starts a comment, unknown and
 * duplicate keys are errors, and every value is a raw SI quantity
 * (bytes, seconds, meters, bytes/s) with no unit suffixes.
 *
 * An empty document resolves to the built-in default scenario
 * (50 + 70 nodes on the bundled map, 3 m range, 8 MB buffers).
 */
class ConfigDocument {
public:
	ConfigDocument() = default;

	static ConfigDocument parse(const std::string& text);

	/// Present keys only (raw spelling preserved).
	const std::map<std::string, std::string>& raw() const { return raw_; }

	void set(const std::string& key, const std::string& value);

	/// Typed, range-checked scenario.  Throws ConfigError.
	ScenarioConfig resolve() const;

	/// Every key materialized (defaults included), values reformatted
	/// canonically.  Two documents describe the same scenario iff their
	/// canonical maps are equal.
	std::map<std::string, std::string> canonical() const;

	std::string serialize() const;  // canonical key=value lines

	/// Canonical form minus router/seed/message-size: identifies runs
	/// that may be aggregated together.
	std::string scenario_fingerprint() const;

	bool operator==(const ConfigDocument& other) const { return canonical() == other.canonical(); }

private:
	std::map<std::string, std::string> raw_;
	std::map<std::string, std::size_t> lines_;
};

}  // namespace opportunet

#endif  // OPPORTUNET_CONFIG_HPP
