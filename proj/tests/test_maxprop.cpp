/*
 * test_maxprop.cpp
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
#include <functional>
#include <limits>

#include "opportunet/maxprop.hpp"
#include "opportunet/rng.hpp"
#include "support.hpp"

using namespace opportunet;
using testing::FakeCore;
using testing::make_snapshot;

namespace {

MeetingVectorRef make_vector(std::map<std::uint32_t, double> f, double updated_at)
{
	return std::make_shared<MeetingVector>(MeetingVector{std::move(f), updated_at});
}

double brute_force_cost(std::uint32_t self, std::uint32_t target,
    const std::map<std::uint32_t, MeetingVector>& vectors, std::uint32_t n)
{
	std::vector<bool> visited(n, false);
	double best = kUnreachableCost;
	std::function<void(std::uint32_t, double)> dfs = [&](std::uint32_t u, double cost) {
		if (cost >= best) return;
		if (u == target) {
			best = cost;
			return;
		}
		auto it = vectors.find(u);
		if (it == vectors.end()) return;
		visited[u] = true;
		for (const auto& [v, f] : it->second.f) {
			if (v >= n || visited[v]) continue;
			dfs(v, cost + (1.0 - std::clamp(f, 0.0, 1.0)));
		}
		visited[u] = false;
	};
	dfs(self, 0.0);
	return best;
}

}  // namespace

TEST_SUITE("maxprop") {

TEST_CASE("meeting update bumps then renormalizes")
{
	std::map<std::uint32_t, double> f{{1, 0.5}, {2, 0.5}};
	maxprop_meeting_update(f, 1);
	CHECK(f[1] == doctest::Approx(0.75));
	CHECK(f[2] == doctest::Approx(0.25));

	std::map<std::uint32_t, double> empty;
	maxprop_meeting_update(empty, 1);
	REQUIRE(empty.size() == 1);
	CHECK(empty[1] == doctest::Approx(1.0));
}

TEST_CASE("meeting vector stays a probability distribution")
{
	RngStream rng(201, 0);
	std::map<std::uint32_t, double> f;
	for (int i = 0; i < 10000; ++i) {
		maxprop_meeting_update(f, static_cast<std::uint32_t>(rng.next_below(8)));
		double sum = 0;
		for (const auto& [peer, v] : f) {
			CHECK(v >= 0.0);
			CHECK(v <= 1.0);
			sum += v;
		}
		CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
	}
}

TEST_CASE("path cost: direct edges weigh one minus meeting frequency")
{
	std::map<std::uint32_t, MeetingVector> vectors;
	vectors[0] = {{{1, 0.75}, {2, 0.25}}, 0.0};
	auto dist = maxprop_costs(0, vectors, 4);
	CHECK(dist[0] == 0.0);
	CHECK(dist[1] == doctest::Approx(0.25));
	CHECK(dist[2] == doctest::Approx(0.75));
	CHECK(dist[3] == kUnreachableCost);
}

TEST_CASE("path cost: a cheap two-hop path beats a costly direct edge")
{
	std::map<std::uint32_t, MeetingVector> vectors;
	vectors[0] = {{{1, 0.9}, {2, 0.7}}, 0.0};  // direct 0->2 costs 0.3
	vectors[1] = {{{0, 0.5}, {2, 0.9}}, 0.0};  // 0->1->2 costs 0.1 + 0.1
	auto dist = maxprop_costs(0, vectors, 3);
	CHECK(dist[2] == doctest::Approx(0.2));
}

TEST_CASE("path cost matches exhaustive search on random graphs")
{
	RngStream rng(202, 0);
	for (int trial = 0; trial < 100; ++trial) {
		const std::uint32_t n = 5;
		std::map<std::uint32_t, MeetingVector> vectors;
		std::map<std::uint32_t, MeetingVectorRef> refs;
		for (std::uint32_t u = 0; u < n; ++u) {
			if (rng.next_below(10) >= 7) continue;
			MeetingVector vec;
			std::uint64_t meetings = 1 + rng.next_below(6);
			for (std::uint64_t k = 0; k < meetings; ++k) {
				std::uint32_t met = static_cast<std::uint32_t>(rng.next_below(n));
				if (met == u) continue;
				maxprop_meeting_update(vec.f, met);
			}
			if (vec.f.empty()) continue;
			vectors[u] = vec;
			refs[u] = make_vector(vec.f, vec.updated_at);
		}
		auto dist = maxprop_costs(0, vectors, n);
		auto dist_ref = maxprop_costs(0, refs, n);
		for (std::uint32_t t = 0; t < n; ++t) {
			CHECK(dist[t] == dist_ref[t]);
			double want = brute_force_cost(0, t, vectors, n);
			if (want == kUnreachableCost) {
				CHECK(dist[t] == kUnreachableCost);
			} else {
				CHECK(dist[t] == doctest::Approx(want).epsilon(1e-12));
			}
		}
	}
}

TEST_CASE("rank: below-threshold messages precede the cost-ordered rest")
{
	std::vector<RankItem> items{
	    {1, 3, 0.1, 0.0},
	    {2, 0, 0.9, 0.0},
	};
	maxprop_rank(items, 2);
	CHECK(items[0].uid == 2);  // few hops wins the head bucket
	CHECK(items[1].uid == 1);

	maxprop_rank(items, 0);  // empty head: cost alone decides
	CHECK(items[0].uid == 1);
	CHECK(items[1].uid == 2);
}

TEST_CASE("rank: head bucket sorts by hops then cost")
{
	std::vector<RankItem> items{
	    {1, 2, 0.1, 0.0},
	    {2, 1, 0.5, 0.0},
	    {3, 1, 0.2, 0.0},
	};
	maxprop_rank(items, 10);
	CHECK(items[0].uid == 3);
	CHECK(items[1].uid == 2);
	CHECK(items[2].uid == 1);
}

TEST_CASE("rank: full ties fall back to creation time then uid")
{
	std::vector<RankItem> items{
	    {9, 0, 0.5, 20.0},
	    {4, 0, 0.5, 10.0},
	    {7, 0, 0.5, 10.0},
	};
	maxprop_rank(items, 0);
	CHECK(items[0].uid == 4);
	CHECK(items[1].uid == 7);
	CHECK(items[2].uid == 9);
}

TEST_CASE("head threshold arithmetic")
{
	MessageStore store(10000000);
	CHECK(maxprop_threshold(5000000, 10000000, store) == 0);  // nothing buffered

	store.insert(1, {1000000, 0.0, 0});
	store.insert(2, {3000000, 0.0, 0});
	// mean size 2 MB; budget = min(avg, capacity)
	CHECK(maxprop_threshold(10000000, 5000000, store) == 2);   // floor(5/2)
	CHECK(maxprop_threshold(7000000, 10000000, store) == 3);   // floor(3.5)
	CHECK(maxprop_threshold(0, 10000000, store) == 0);
}

TEST_CASE("delivery plants an ack that expires with the message ttl")
{
	FakeCore core;
	core.msgs[5] = {"M5", 2, 0, 100, 40.0, 60.0};
	core.msgs[6] = {"M6", 2, 0, 100, 40.0, 0.0};
	MessageStore store(1000);
	std::set<std::uint64_t> delivered;
	MaxpropRouter r(core, 0, store, delivered);

	r.on_delivered_here(5, 50.0);
	r.on_delivered_here(6, 50.0);
	CHECK(r.acks().at(5) == doctest::Approx(100.0));  // created + ttl
	CHECK(r.acks().at(6) == std::numeric_limits<double>::infinity());

	CHECK(r.refuses(5, 99.0));
	CHECK_FALSE(r.refuses(5, 100.0));  // ack lapsed with the ttl
	CHECK(r.refuses(6, 1e9));
}

TEST_CASE("absorbed acks purge surviving copies and spread onward")
{
	FakeCore core;
	core.msgs[7] = {"M7", 2, 3, 100, 0.0, 0.0};
	MessageStore store(1000);
	std::set<std::uint64_t> delivered;
	MaxpropRouter r(core, 0, store, delivered);
	core.stores[0] = &store;

	store.insert(7, {100, 5.0, 1});
	PeerSnapshot snap = make_snapshot(1);
	snap.acks[7] = std::numeric_limits<double>::infinity();
	snap.acks[99] = std::numeric_limits<double>::infinity();  // never heard of: no-op
	snap.acks[42] = 3.0;                                      // already expired: ignored
	r.absorb(snap, 10.0);

	REQUIRE(core.purged.size() == 1);
	CHECK(core.purged[0] == std::pair<std::uint32_t, std::uint64_t>{0, 7});
	CHECK_FALSE(store.contains(7));
	CHECK(r.acks().count(7) == 1);
	CHECK(r.acks().count(42) == 0);
	// The merged ack now travels in this node's own snapshots.
	CHECK(r.snapshot(10.0).acks.count(7) == 1);
}

TEST_CASE("absorb keeps the newest relayed vector per origin")
{
	FakeCore core;
	MessageStore store(1000);
	std::set<std::uint64_t> delivered;
	MaxpropRouter r(core, 0, store, delivered);

	PeerSnapshot first = make_snapshot(1);
	first.meeting_vectors[2] = make_vector({{0, 1.0}}, 5.0);
	r.absorb(first, 6.0);

	PeerSnapshot stale = make_snapshot(3);
	stale.meeting_vectors[2] = make_vector({{1, 1.0}}, 3.0);
	r.absorb(stale, 7.0);
	auto snap = r.snapshot(7.0);
	REQUIRE(snap.meeting_vectors.count(2) == 1);
	CHECK(snap.meeting_vectors.at(2)->updated_at == 5.0);
	CHECK(snap.meeting_vectors.at(2)->f.count(0) == 1);

	PeerSnapshot fresh = make_snapshot(3);
	fresh.meeting_vectors[2] = make_vector({{3, 1.0}}, 8.0);
	r.absorb(fresh, 9.0);
	snap = r.snapshot(9.0);
	CHECK(snap.meeting_vectors.at(2)->updated_at == 8.0);
	CHECK(snap.meeting_vectors.at(2)->f.count(3) == 1);

	// A relayed copy of our own vector never displaces the live one.
	PeerSnapshot echo = make_snapshot(1);
	echo.meeting_vectors[0] = make_vector({{9, 1.0}}, 100.0);
	r.absorb(echo, 10.0);
	snap = r.snapshot(10.0);
	CHECK(snap.meeting_vectors.at(0)->f.count(9) == 0);
}

TEST_CASE("messages destined to the peer jump the send queue")
{
	FakeCore core;
	core.msgs[10] = {"M10", 0, 3, 100, 1.0, 0.0};
	core.msgs[11] = {"M11", 0, 1, 100, 2.0, 0.0};
	MessageStore store(1000);
	std::set<std::uint64_t> delivered;
	MaxpropRouter r(core, 0, store, delivered);

	store.insert(10, {100, 1.0, 0});
	store.insert(11, {100, 2.0, 0});
	r.on_contact_begin(1, 5.0);
	PeerSnapshot snap = make_snapshot(1);
	r.absorb(snap, 5.0);
	r.open_session(snap, 5.0);

	auto sent1 = r.next_to_send(1);
	auto sent2 = r.next_to_send(1);
	REQUIRE(sent1.has_value());
	REQUIRE(sent2.has_value());
	CHECK(*sent1 == 11);  // peer 1 is its destination
	CHECK(*sent2 == 10);
	CHECK_FALSE(r.next_to_send(1).has_value());
}

TEST_CASE("admission evicts the worst-ranked copies first")
{
	FakeCore core;
	core.msgs[1] = {"M1", 2, 1, 4, 0.0, 0.0};  // known destination, cost 0
	core.msgs[2] = {"M2", 2, 2, 4, 0.0, 0.0};  // unreachable destination
	core.msgs[3] = {"M3", 2, 1, 6, 0.0, 0.0};
	MessageStore store(10);
	std::set<std::uint64_t> delivered;
	MaxpropRouter r(core, 0, store, delivered);
	r.on_contact_begin(1, 0.0);  // meeting vector {1: 1.0}

	store.insert(1, {4, 1.0, 0});
	store.insert(2, {4, 2.0, 0});
	std::vector<std::uint64_t> evict;
	REQUIRE(r.admit(3, 6, 3.0, evict));
	REQUIRE(evict.size() == 1);
	CHECK(evict[0] == 2);  // the unreachable-destination copy ranks last
}

TEST_CASE("admission refuses acked messages outright")
{
	FakeCore core;
	core.msgs[5] = {"M5", 2, 3, 10, 0.0, 0.0};
	MessageStore store(1000);
	std::set<std::uint64_t> delivered;
	MaxpropRouter r(core, 0, store, delivered);
	r.on_delivered_here(5, 1.0);
	std::vector<std::uint64_t> evict;
	CHECK_FALSE(r.admit(5, 10, 2.0, evict));
	CHECK(evict.empty());
}

TEST_CASE("average bytes per contact is a running mean over closed sessions")
{
	FakeCore core;
	MessageStore store(1000);
	std::set<std::uint64_t> delivered;
	MaxpropRouter r(core, 0, store, delivered);
	CHECK(r.avg_bytes_per_contact() == 0.0);
	r.close_session(1, 100, 1.0);
	CHECK(r.avg_bytes_per_contact() == doctest::Approx(100.0));
	r.close_session(2, 300, 2.0);
	CHECK(r.avg_bytes_per_contact() == doctest::Approx(200.0));
	r.close_session(1, 200, 3.0);
	CHECK(r.avg_bytes_per_contact() == doctest::Approx(200.0));
}

}
