/*
 * router.cpp
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

#include "opportunet/router.hpp"

#include <algorithm>
#include <stdexcept>

#include "opportunet/epidemic.hpp"
#include "opportunet/maxprop.hpp"
#include "opportunet/prophet.hpp"

namespace opportunet {

bool PeerSnapshot::has(std::uint64_t uid) const
{
	return std::binary_search(ids.begin(), ids.end(), uid);
}

void Router::on_contact_begin(std::uint32_t, double) {}

PeerSnapshot Router::snapshot(double now)
{
	PeerSnapshot snap;
	snap.node = self_;
	for (const auto& [uid, copy] : store_.copies()) snap.ids.push_back(uid);
	for (std::uint64_t uid : delivered_) snap.ids.push_back(uid);
	std::sort(snap.ids.begin(), snap.ids.end());
	fill_snapshot(snap, now);
	return snap;
}

void Router::absorb(const PeerSnapshot&, double) {}

void Router::close_session(std::uint32_t peer, std::uint64_t, double)
{
	open_.erase(peer);
	queues_.erase(peer);
}

std::optional<std::uint64_t> Router::next_to_send(std::uint32_t peer)
{
	auto it = queues_.find(peer);
	if (it == queues_.end() || it->second.empty()) return std::nullopt;
	std::uint64_t uid = it->second.front().second;
	it->second.erase(it->second.begin());
	return uid;
}

bool Router::refuses(std::uint64_t, double) const { return false; }

void Router::on_delivered_here(std::uint64_t, double) {}

void Router::fill_snapshot(PeerSnapshot&, double) {}

void Router::queue_insert(std::uint32_t peer, std::uint64_t uid, const std::vector<double>& key)
{
	auto& q = queues_[peer];
	auto entry = std::make_pair(key, uid);
	q.insert(std::lower_bound(q.begin(), q.end(), entry), std::move(entry));
}

bool evict_oldest_received(const MessageStore& store, EngineCore& core, std::uint32_t self,
    std::uint64_t need, std::vector<std::uint64_t>& evict)
{
	std::vector<std::tuple<double, std::uint64_t, std::uint64_t>> victims;  // (received, uid, size)
	for (const auto& [uid, copy] : store.copies()) {
		if (core.outbound_active(self, uid)) continue;
		victims.emplace_back(copy.received_at, uid, copy.size);
	}
	std::sort(victims.begin(), victims.end());
	std::uint64_t freed = 0;
	for (const auto& [received, uid, size] : victims) {
		if (freed >= need) break;
		evict.push_back(uid);
		freed += size;
	}
	return freed >= need;
}

std::unique_ptr<Router> make_router(const ScenarioConfig& cfg, EngineCore& core,
    std::uint32_t self, MessageStore& store, const std::set<std::uint64_t>& delivered)
{
	if (cfg.router == "epidemic") {
		return std::make_unique<EpidemicRouter>(core, self, store, delivered);
	}
	if (cfg.router == "prophet") {
		return std::make_unique<ProphetRouter>(core, self, store, delivered, cfg.prophet);
	}
	if (cfg.router == "maxprop") {
		return std::make_unique<MaxpropRouter>(core, self, store, delivered);
	}
	throw ConfigError("unknown router '" + cfg.router + "'");
}

}  // namespace opportunet
