/*
 * test_link.cpp
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

#include "opportunet/link_model.hpp"
#include "opportunet/message.hpp"

using namespace opportunet;

TEST_SUITE("link") {

TEST_CASE("link speed steps after the switch time, strict inequality")
{
	LinkParams p;
	CHECK(link_speed(p, 0.0) == 500000.0);
	CHECK(link_speed(p, 10000.0) == 500000.0);
	CHECK(link_speed(p, 10001.0) == 1000000.0);
}

TEST_CASE("transfer durations from the default parameters")
{
	LinkParams p;
	CHECK(transfer_duration(p, 1000000, 0.0) == doctest::Approx(2.2));
	CHECK(transfer_duration(p, 0, 0.0) == doctest::Approx(0.2));
	CHECK(transfer_duration(p, 3000000, 20000.0) == doctest::Approx(3.2));
}

TEST_CASE("speed is sampled at transfer start, not re-sampled")
{
	LinkParams p;
	// A transfer started just before the switch keeps the slow rate
	// even though it finishes after the switch.
	double d = transfer_duration(p, 1000000, 9999.5);
	CHECK(d == doctest::Approx(2.2));
}

TEST_CASE("message store enforces capacity and uniqueness")
{
	MessageStore store(8000000);
	store.insert(1, Copy{3000000, 0.0, 0});
	CHECK(store.occupancy() == 3000000);
	CHECK(store.free_bytes() == 5000000);
	CHECK(store.contains(1));
	CHECK_THROWS_AS(store.insert(1, Copy{1, 0.0, 0}), std::logic_error);
	store.insert(2, Copy{5000000, 1.0, 2});
	CHECK(store.free_bytes() == 0);
	// The buffer-safety assertion fires on any overflow attempt.
	CHECK_THROWS_AS(store.insert(3, Copy{1, 2.0, 0}), std::logic_error);
	store.erase(1);
	CHECK(store.occupancy() == 5000000);
	CHECK_THROWS_AS(store.erase(1), std::logic_error);
	const Copy* c = store.find(2);
	REQUIRE(c != nullptr);
	CHECK(c->hops == 2);
	CHECK(store.find(9) == nullptr);
}

TEST_CASE("ttl expiry is inclusive at the deadline and off when unlimited")
{
	Message m{"M1", 0, 1, 100, 10.0, 50.0};
	CHECK(!message_expired(m, 59.9));
	CHECK(message_expired(m, 60.0));
	CHECK(message_expired(m, 61.0));
	Message forever{"M2", 0, 1, 100, 10.0, 0.0};
	CHECK(!message_expired(forever, 1e12));
}

}
