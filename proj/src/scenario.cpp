/*
 * scenario.cpp
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

#include "opportunet/scenario.hpp"

#include <fstream>
#include <sstream>

#include "opportunet/builtin_map.hpp"
#include "opportunet/engine.hpp"

namespace opportunet {

PathGraph load_scenario_map(const ScenarioConfig& cfg)
{
	if (cfg.map_file.empty()) return PathGraph::load(builtin_map_text());
	std::ifstream in(cfg.map_file);
	if (!in) throw ConfigError("cannot open map file '" + cfg.map_file + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return PathGraph::load(ss.str());
}

RunResult run_scenario(const ScenarioConfig& cfg, bool export_contacts)
{
	PathGraph graph = load_scenario_map(cfg);
	Engine::Inputs in;
	in.cfg = &cfg;
	in.graph = &graph;
	in.export_contacts = export_contacts;
	Engine engine(in);
	engine.run();
	RunResult out;
	out.log = engine.log();
	out.report = engine.report();
	out.msg_ids = engine.msg_ids();
	out.contacts = engine.exported_contacts();
	return out;
}

RunResult run_replay(const ScenarioConfig& cfg, const std::vector<ContactEvent>& trace,
    const std::vector<ScriptedMessage>* scripted)
{
	Engine::Inputs in;
	in.cfg = &cfg;
	in.trace = &trace;
	in.scripted = scripted;
	Engine engine(in);
	engine.run();
	RunResult out;
	out.log = engine.log();
	out.report = engine.report();
	out.msg_ids = engine.msg_ids();
	return out;
}

}  // namespace opportunet
