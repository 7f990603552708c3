/*
 * test_config.cpp
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

#include <doctest.h>

#include <string>

#include "opportunet/config.hpp"

using namespace opportunet;

namespace {

bool mentions(const std::exception& e, const std::string& needle)
{
	return std::string(e.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("an empty document resolves to the built-in scenario")
{
	ScenarioConfig c = ConfigDocument().resolve();
	CHECK(c.duration == 43200);
	CHECK(c.tick == 0.1);
	CHECK(c.seed == 1);
	CHECK(c.map_file.empty());
	CHECK(c.router == "epidemic");
	CHECK(c.link.range == 3.0);
	CHECK(c.link.speed_bps == 500000);
	CHECK(c.link.speed_after_bps == 1000000);
	CHECK(c.link.speed_switch_time == 10000);
	CHECK(c.link.latency == 0.2);
	CHECK(c.link.buffer_bytes == 8000000);
	CHECK_FALSE(c.link.single_transfer_per_node);
	CHECK(c.prophet.p_init == 0.75);
	CHECK(c.prophet.transitivity_scale == 0.25);
	CHECK(c.prophet.aging_base == 0.98);
	CHECK(c.traffic.size_bytes == 1000000);
	CHECK(c.traffic.interval_min == 25);
	CHECK(c.traffic.interval_max == 35);
	CHECK(c.traffic.cooldown == 1800);
	REQUIRE(c.groups.size() == 2);
	CHECK(c.groups[0].name == "bicycles");
	CHECK(c.groups[0].count == 50);
	CHECK(c.groups[0].speed == 1.0);
	CHECK(c.groups[0].edges == EdgeTag::land);
	CHECK(c.groups[1].name == "motorboats");
	CHECK(c.groups[1].count == 70);
	CHECK(c.groups[1].speed == 15.0);
	CHECK(c.groups[1].edges == EdgeTag::water);
}

TEST_CASE("explicitly spelling every default changes nothing")
{
	ConfigDocument empty;
	ConfigDocument spelled = ConfigDocument::parse(empty.serialize());
	CHECK(spelled == empty);
	CHECK(spelled.scenario_fingerprint() == empty.scenario_fingerprint());
}

TEST_CASE("parsing accepts comments, blanks and surrounding whitespace")
{
	auto doc = ConfigDocument::parse(
	    "# a scenario\n"
	    "\n"
	    "  sim.seed =  7   # trailing comment\n"
	    "router=prophet\n");
	CHECK(doc.raw().at("sim.seed") == "7");
	ScenarioConfig c = doc.resolve();
	CHECK(c.seed == 7);
	CHECK(c.router == "prophet");
}

TEST_CASE("unknown, duplicate and malformed keys fail with their line number")
{
	try {
		ConfigDocument::parse("sim.seed = 1\nbogus.key = 2\n");
		FAIL("should have thrown");
	} catch (const ConfigError& e) {
		CHECK(mentions(e, "line 2"));
		CHECK(mentions(e, "bogus.key"));
	}
	try {
		ConfigDocument::parse("sim.seed = 1\n\nsim.seed = 2\n");
		FAIL("should have thrown");
	} catch (const ConfigError& e) {
		CHECK(mentions(e, "line 3"));
		CHECK(mentions(e, "duplicate"));
	}
	try {
		ConfigDocument::parse("just words\n");
		FAIL("should have thrown");
	} catch (const ConfigError& e) {
		CHECK(mentions(e, "line 1"));
	}
}

TEST_CASE("values are range-checked at resolve time with the source line")
{
	auto doc = ConfigDocument::parse("prophet.pInit = 0.75\n");
	CHECK(doc.resolve().prophet.p_init == 0.75);

	try {
		ConfigDocument::parse("prophet.pInit = 1.5\n").resolve();
		FAIL("should have thrown");
	} catch (const ConfigError& e) {
		CHECK(mentions(e, "prophet.pInit"));
		CHECK(mentions(e, "line 1"));
	}
	CHECK_THROWS_AS(ConfigDocument::parse("sim.tick = 0\n").resolve(), ConfigError);
	CHECK_THROWS_AS(ConfigDocument::parse("sim.duration = -5\n").resolve(), ConfigError);
	CHECK_THROWS_AS(
	    ConfigDocument::parse("sim.duration = 1\nsim.tick = 2\n").resolve(), ConfigError);
	CHECK_THROWS_AS(ConfigDocument::parse("router = flooding\n").resolve(), ConfigError);
	CHECK_THROWS_AS(ConfigDocument::parse("traffic.sizeBytes = 0\n").resolve(), ConfigError);
	CHECK_THROWS_AS(ConfigDocument::parse("traffic.sizeBytes = -3\n").resolve(), ConfigError);
	CHECK_THROWS_AS(ConfigDocument::parse("sim.seed = 1.5\n").resolve(), ConfigError);
	CHECK_THROWS_AS(
	    ConfigDocument::parse("traffic.intervalMin = 30\ntraffic.intervalMax = 20\n").resolve(),
	    ConfigError);
	CHECK_THROWS_AS(
	    ConfigDocument::parse("link.singleTransferPerNode = yes\n").resolve(), ConfigError);
}

TEST_CASE("declared groups replace the defaults and demand count and speed")
{
	auto doc = ConfigDocument::parse(
	    "group1.name = walkers\n"
	    "group1.count = 3\n"
	    "group1.speed = 1.5\n"
	    "group2.count = 2\n"
	    "group2.speed = 4\n"
	    "group2.edges = water\n");
	ScenarioConfig c = doc.resolve();
	REQUIRE(c.groups.size() == 2);
	CHECK(c.groups[0].name == "walkers");
	CHECK(c.groups[0].count == 3);
	CHECK(c.groups[0].edges == EdgeTag::both);
	CHECK(c.groups[1].name == "group2");
	CHECK(c.groups[1].edges == EdgeTag::water);

	CHECK_THROWS_AS(ConfigDocument::parse("group1.count = 3\n").resolve(), ConfigError);
	CHECK_THROWS_AS(
	    ConfigDocument::parse("group1.count = 3\ngroup1.speed = 1\ngroup1.edges = dirt\n")
	        .resolve(),
	    ConfigError);
}

TEST_CASE("serialize round-trips to an equal document")
{
	auto doc = ConfigDocument::parse(
	    "sim.seed = 42\n"
	    "router = maxprop\n"
	    "traffic.sizeBytes = 2000000\n"
	    "link.range = 10\n");
	auto again = ConfigDocument::parse(doc.serialize());
	CHECK(again == doc);
	CHECK(again.serialize() == doc.serialize());
}

TEST_CASE("the fingerprint ignores router, seed and message size but nothing else")
{
	ConfigDocument base;
	ConfigDocument swept;
	swept.set("router", "maxprop");
	swept.set("sim.seed", "99");
	swept.set("traffic.sizeBytes", "3000000");
	CHECK(swept.scenario_fingerprint() == base.scenario_fingerprint());

	ConfigDocument other;
	other.set("link.range", "10");
	CHECK(other.scenario_fingerprint() != base.scenario_fingerprint());
}

TEST_CASE("set rejects unknown keys just like parse")
{
	ConfigDocument doc;
	CHECK_THROWS_AS(doc.set("nonsense", "1"), ConfigError);
	doc.set("sim.seed", "5");
	CHECK(doc.resolve().seed == 5);
}

}
