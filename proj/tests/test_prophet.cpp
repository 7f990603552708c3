/*
 * test_prophet.cpp
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

#include <algorithm>
#include <cmath>

#include "opportunet/prophet.hpp"
#include "opportunet/rng.hpp"

using namespace opportunet;

TEST_SUITE("prophet") {

TEST_CASE("encounter update from the base equation")
{
	CHECK(prophet_encounter_update(0.0, 0.75) == doctest::Approx(0.75));
	CHECK(prophet_encounter_update(0.5, 0.75) == doctest::Approx(0.875));
	CHECK(prophet_encounter_update(1.0, 0.75) == doctest::Approx(1.0));
}

TEST_CASE("aging decays by the base per time unit")
{
	CHECK(prophet_age(0.8, 0.0, 0.98, 30) == doctest::Approx(0.8));
	CHECK(prophet_age(0.8, 30.0, 0.98, 30) == doctest::Approx(0.784));
	CHECK(prophet_age(0.5, 60.0, 0.98, 30) == doctest::Approx(0.48020));
}

TEST_CASE("transitive update from the repaired equation")
{
	CHECK(prophet_transitive_update(0.0, 1.0, 1.0, 0.25) == doctest::Approx(0.25));
	CHECK(prophet_transitive_update(0.3, 0.0, 0.9, 0.25) == doctest::Approx(0.3));
	CHECK(prophet_transitive_update(0.2, 0.8, 0.5, 0.25) == doctest::Approx(0.28));
}

TEST_CASE("all three rules are closed over the unit interval")
{
	RngStream rng(101, 0);
	for (int i = 0; i < 10000; ++i) {
		double p = rng.next_real(0.0, 1.0);
		double q = rng.next_real(0.0, 1.0);
		double r = rng.next_real(0.0, 1.0);
		double p_init = rng.next_real(0.0, 1.0);
		double scale = rng.next_real(0.0, 1.0);
		double gamma = rng.next_real(0.01, 1.0);
		double dt = rng.next_real(0.0, 100000.0);

		double e = prophet_encounter_update(p, p_init);
		CHECK(e >= 0.0);
		CHECK(e <= 1.0);
		CHECK(e >= p);  // encounters never lower predictability

		double a = prophet_age(p, dt, gamma, 30);
		CHECK(a >= 0.0);
		CHECK(a <= p);  // aging never raises it

		double t = prophet_transitive_update(p, q, r, scale);
		CHECK(t >= p);
		CHECK(t <= 1.0);
	}
}

TEST_CASE("aging composes: two steps equal one combined step")
{
	RngStream rng(102, 0);
	for (int i = 0; i < 10000; ++i) {
		double p = rng.next_real(0.0, 1.0);
		double t1 = rng.next_real(0.0, 5000.0);
		double t2 = rng.next_real(0.0, 5000.0);
		double two = prophet_age(prophet_age(p, t1, 0.98, 30), t2, 0.98, 30);
		double one = prophet_age(p, t1 + t2, 0.98, 30);
		CHECK(two == doctest::Approx(one).epsilon(1e-12));
	}
}

TEST_CASE("table ages lazily and reads missing entries as zero")
{
	ProphetParams params;
	DeliveryPredictabilityTable t(params);
	CHECK(t.get(5) == 0.0);
	t.encounter(5, 100.0);
	CHECK(t.get(5) == doctest::Approx(0.75));
	t.age_to(160.0);  // two time units
	CHECK(t.get(5) == doctest::Approx(0.75 * 0.98 * 0.98));
}

TEST_CASE("transitive pass skips self and the peer itself")
{
	ProphetParams params;
	DeliveryPredictabilityTable t(params);
	t.encounter(1, 10.0);  // P(1) = 0.75
	std::map<std::uint32_t, double> peer_table{{0, 0.9}, {1, 0.9}, {2, 0.8}};
	t.transitive(1, peer_table, 0);
	CHECK(t.get(0) == 0.0);  // self entry never created
	CHECK(t.get(1) == doctest::Approx(0.75));  // direct entry untouched by its own table
	// P(2) = 0 + 1 * P(1)=0.75 * 0.8 * 0.25
	CHECK(t.get(2) == doctest::Approx(0.75 * 0.8 * 0.25));
}

TEST_CASE("forward filter: strict inequality, destination dominates")
{
	ProphetParams params;
	DeliveryPredictabilityTable own(params);
	own.encounter(7, 0.0);  // own P(7) = 0.75

	std::vector<ForwardCandidate> msgs{
	    {1, 7, 100.0},   // peer table equal -> not forwarded
	    {2, 8, 100.0},   // peer higher -> forwarded
	    {3, 9, 100.0},   // peer is destination -> forwarded
	};
	std::map<std::uint32_t, double> peer_table{{7, 0.75}, {8, 0.5}};
	auto out = prophet_forward_filter(own, peer_table, /*peer=*/9, msgs);
	// msg 3: peer is destination (counts as P=1) comes first; msg 2 next.
	REQUIRE(out.size() == 2);
	CHECK(out[0] == 3);
	CHECK(out[1] == 2);
}

TEST_CASE("forward filter orders by descending peer predictability then age")
{
	ProphetParams params;
	DeliveryPredictabilityTable own(params);
	std::vector<ForwardCandidate> msgs{
	    {1, 4, 50.0},
	    {2, 5, 10.0},
	    {3, 5, 5.0},
	};
	std::map<std::uint32_t, double> peer_table{{4, 0.9}, {5, 0.6}};
	auto out = prophet_forward_filter(own, peer_table, 99, msgs);
	REQUIRE(out.size() == 3);
	CHECK(out[0] == 1);  // highest peer P
	CHECK(out[1] == 3);  // tie on P, older creation first
	CHECK(out[2] == 2);
}

TEST_CASE("raising peer predictability never removes a message from the set")
{
	RngStream rng(103, 0);
	ProphetParams params;
	for (int trial = 0; trial < 300; ++trial) {
		DeliveryPredictabilityTable own(params);
		own.age_to(0);
		std::vector<ForwardCandidate> msgs;
		std::map<std::uint32_t, double> peer_table;
		for (std::uint32_t d = 1; d <= 6; ++d) {
			msgs.push_back({d, d, rng.next_real(0.0, 100.0)});
			peer_table[d] = rng.next_real(0.0, 1.0);
		}
		auto before = prophet_forward_filter(own, peer_table, 99, msgs);
		// Raise one destination's peer value.
		std::uint32_t bump = 1 + static_cast<std::uint32_t>(rng.next_below(6));
		peer_table[bump] = std::min(1.0, peer_table[bump] + rng.next_real(0.0, 0.5));
		auto after = prophet_forward_filter(own, peer_table, 99, msgs);
		for (std::uint64_t uid : before) {
			CHECK(std::find(after.begin(), after.end(), uid) != after.end());
		}
	}
}

TEST_CASE("v2 encounter scaling shrinks the bump for quick re-meetings")
{
	ProphetParams v2;
	v2.v2_encounter_scaling = true;
	v2.typical_interval = 1800;
	DeliveryPredictabilityTable t(v2);
	t.encounter(3, 0.0);
	double first = t.get(3);
	CHECK(first == doctest::Approx(0.75));  // first meeting: full bump
	t.encounter(3, 180.0);  // re-met after 1/10 of the typical interval
	// Aged value plus a bump scaled by 0.1.
	double aged = prophet_age(first, 180.0, v2.aging_base, v2.seconds_in_time_unit);
	CHECK(t.get(3) == doctest::Approx(aged + (1 - aged) * 0.75 * 0.1));
}

}
