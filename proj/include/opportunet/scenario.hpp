/*
 * scenario.hpp
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

#ifndef OPPORTUNET_SCENARIO_HPP
#define OPPORTUNET_SCENARIO_HPP

#include <string>
#include <vector>

#include "opportunet/config.hpp"
#include "opportunet/event_log.hpp"
#include "opportunet/path_graph.hpp"
#include "opportunet/report.hpp"
#include "opportunet/trace.hpp"

namespace opportunet {

/// Loads cfg.map_file, or the compiled-in map when the path is empty.
PathGraph load_scenario_map(const ScenarioConfig& cfg);

struct RunResult {
	EventLog log;
	RunReport report;
	std::vector<std::string> msg_ids;
	std::vector<ContactEvent> contacts;  // filled when export_contacts is set
};

/// One full mobility-driven simulation.
RunResult run_scenario(const ScenarioConfig& cfg, bool export_contacts = false);

/// Re-runs routing over a recorded contact trace.  With `scripted`
/// null, traffic comes from the config's random process as usual.
RunResult run_replay(const ScenarioConfig& cfg, const std::vector<ContactEvent>& trace,
    const std::vector<ScriptedMessage>* scripted);

}  // namespace opportunet

#endif  // OPPORTUNET_SCENARIO_HPP
