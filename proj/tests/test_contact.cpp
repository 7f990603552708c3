/*
 * test_contact.cpp
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

#include <cmath>
#include <set>
#include <vector>

#include "opportunet/contact.hpp"
#include "opportunet/rng.hpp"

using namespace opportunet;

namespace {

std::vector<ContactEvent> step(ContactTracker& t, std::vector<double> x,
    std::vector<double> y, double range, double now)
{
	std::vector<ContactEvent> out;
	t.step(x, y, range, now, out);
	return out;
}

}  // namespace

TEST_SUITE("contact") {

TEST_CASE("approach produces one up event")
{
	ContactTracker t(2);
	auto ev = step(t, {0, 10}, {0, 0}, 3.0, 0.1);
	CHECK(ev.empty());
	ev = step(t, {0, 2.9}, {0, 0}, 3.0, 0.2);
	REQUIRE(ev.size() == 1);
	CHECK(ev[0].a == 0);
	CHECK(ev[0].b == 1);
	CHECK(ev[0].kind == ContactKind::up);
	CHECK(t.up(0, 1));
}

TEST_CASE("distance exactly equal to the range is in range")
{
	ContactTracker t(2);
	auto ev = step(t, {0, 3.0}, {0, 0}, 3.0, 0.1);
	REQUIRE(ev.size() == 1);
	CHECK(ev[0].kind == ContactKind::up);
	// One epsilon past the boundary is out.
	ev = step(t, {0, 3.0000001}, {0, 0}, 3.0, 0.2);
	REQUIRE(ev.size() == 1);
	CHECK(ev[0].kind == ContactKind::down);
}

TEST_CASE("up and down strictly alternate per pair")
{
	ContactTracker t(2);
	RngStream rng(11, 0);
	int state = 0;  // 0 = apart, 1 = together
	double now = 0;
	for (int i = 0; i < 500; ++i) {
		now += 0.1;
		double d = rng.next_real(0.0, 6.0);
		auto ev = step(t, {0, d}, {0, 0}, 3.0, now);
		for (const auto& e : ev) {
			if (e.kind == ContactKind::up) {
				CHECK(state == 0);
				state = 1;
			} else {
				CHECK(state == 1);
				state = 0;
			}
		}
	}
}

TEST_CASE("grid pruning equals the all-pairs scan")
{
	const std::uint32_t n = 60;
	ContactTracker tracker(n);
	std::set<std::pair<std::uint32_t, std::uint32_t>> naive_live;
	RngStream rng(77, 0);
	std::vector<double> x(n), y(n);
	for (std::uint32_t i = 0; i < n; ++i) {
		x[i] = rng.next_real(-40.0, 40.0);
		y[i] = rng.next_real(-40.0, 40.0);
	}
	double now = 0;
	for (int iter = 0; iter < 200; ++iter) {
		now += 0.1;
		for (std::uint32_t i = 0; i < n; ++i) {
			x[i] += rng.next_real(-2.0, 2.0);
			y[i] += rng.next_real(-2.0, 2.0);
		}
		std::vector<ContactEvent> ev;
		tracker.step(x, y, 3.0, now, ev);

		// Naive oracle, including transition bookkeeping.
		std::vector<ContactEvent> expect;
		for (std::uint32_t a = 0; a < n; ++a) {
			for (std::uint32_t b = a + 1; b < n; ++b) {
				double dx = x[a] - x[b], dy = y[a] - y[b];
				bool in = dx * dx + dy * dy <= 9.0;
				bool was = naive_live.count({a, b}) > 0;
				if (in && !was) {
					naive_live.insert({a, b});
					expect.push_back({a, b, ContactKind::up, now});
				} else if (!in && was) {
					naive_live.erase({a, b});
					expect.push_back({a, b, ContactKind::down, now});
				}
			}
		}
		// Tracker emits downs first, then ups, each sorted by pair.
		std::vector<ContactEvent> expect_sorted;
		for (const auto& e : expect)
			if (e.kind == ContactKind::down) expect_sorted.push_back(e);
		for (const auto& e : expect)
			if (e.kind == ContactKind::up) expect_sorted.push_back(e);

		REQUIRE(ev.size() == expect_sorted.size());
		for (std::size_t i = 0; i < ev.size(); ++i) {
			CHECK(ev[i].a == expect_sorted[i].a);
			CHECK(ev[i].b == expect_sorted[i].b);
			CHECK((ev[i].kind == expect_sorted[i].kind));
		}
		CHECK(tracker.live() == naive_live);
	}
}

TEST_CASE("negative coordinates and cell boundaries do not lose pairs")
{
	// Pairs straddling grid cell boundaries at exactly range distance.
	ContactTracker t(4);
	auto ev = step(t, {-3.0, 0.0, 100.0, 103.0}, {0, 0, -50, -50}, 3.0, 0.1);
	CHECK(ev.size() == 2);
}

}
