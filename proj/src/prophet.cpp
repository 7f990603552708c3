/*
 * prophet.cpp
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

#include "opportunet/prophet.hpp"

#include <algorithm>
#include <cmath>

namespace opportunet {

double prophet_encounter_update(double p, double p_init)
{
	return p + (1.0 - p) * p_init;
}

double prophet_age(double p, double dt, double aging_base, double seconds_in_time_unit)
{
	if (dt <= 0) return p;
	return p * std::pow(aging_base, dt / seconds_in_time_unit);
}

double prophet_transitive_update(double p_ac, double p_ab, double p_bc, double scale)
{
	return p_ac + (1.0 - p_ac) * p_ab * p_bc * scale;
}

double DeliveryPredictabilityTable::get(std::uint32_t dst) const
{
	auto it = p_.find(dst);
	return it == p_.end() ? 0.0 : it->second;
}

void DeliveryPredictabilityTable::age_to(double now)
{
	double dt = now - last_aged_;
	if (dt <= 0) return;
	double factor =
	    std::pow(params_.aging_base, dt / params_.seconds_in_time_unit);
	for (auto& [dst, p] : p_) p *= factor;
	last_aged_ = now;
}

void DeliveryPredictabilityTable::encounter(std::uint32_t peer, double now)
{
	age_to(now);
	double bump = params_.p_init;
	if (params_.v2_encounter_scaling) {
		auto it = last_met_.find(peer);
		if (it != last_met_.end()) {
			bump *= std::min(1.0, (now - it->second) / params_.typical_interval);
		}
	}
	p_[peer] = p_[peer] + (1.0 - p_[peer]) * bump;
	last_met_[peer] = now;
}

void DeliveryPredictabilityTable::transitive(std::uint32_t peer,
    const std::map<std::uint32_t, double>& peer_table, std::uint32_t self)
{
	double p_ab = get(peer);
	for (const auto& [dst, p_bc] : peer_table) {
		if (dst == self || dst == peer) continue;
		double& p = p_[dst];
		p = prophet_transitive_update(p, p_ab, p_bc, params_.transitivity_scale);
	}
}

std::vector<std::uint64_t> prophet_forward_filter(const DeliveryPredictabilityTable& own,
    const std::map<std::uint32_t, double>& peer_table, std::uint32_t peer,
    const std::vector<ForwardCandidate>& msgs)
{
	auto peer_p = [&](std::uint32_t dst) {
		if (dst == peer) return 1.0;
		auto it = peer_table.find(dst);
		return it == peer_table.end() ? 0.0 : it->second;
	};
	std::vector<std::tuple<double, double, std::uint64_t>> picked;  // (-P, created, uid)
	for (const ForwardCandidate& m : msgs) {
		if (m.destination != peer && peer_p(m.destination) <= own.get(m.destination)) continue;
		picked.emplace_back(-peer_p(m.destination), m.created_at, m.uid);
	}
	std::sort(picked.begin(), picked.end());
	std::vector<std::uint64_t> out;
	for (const auto& [np, created, uid] : picked) out.push_back(uid);
	return out;
}

void ProphetRouter::on_contact_begin(std::uint32_t peer, double now)
{
	table_.encounter(peer, now);
}

void ProphetRouter::fill_snapshot(PeerSnapshot& snap, double now)
{
	table_.age_to(now);
	snap.predictability = table_.entries();
}

void ProphetRouter::absorb(const PeerSnapshot& peer, double now)
{
	table_.age_to(now);
	table_.transitive(peer.node, peer.predictability, self_);
}

std::vector<double> ProphetRouter::send_key(std::uint64_t uid, const PeerSnapshot& peer) const
{
	const Message& m = core_.msg(uid);
	double p;
	if (m.destination == peer.node) {
		p = 1.0;
	} else {
		auto it = peer.predictability.find(m.destination);
		p = it == peer.predictability.end() ? 0.0 : it->second;
	}
	return {-p, m.created_at};
}

void ProphetRouter::open_session(const PeerSnapshot& peer, double now)
{
	open_[peer.node] = peer;
	auto& q = queues_[peer.node];
	q.clear();
	table_.age_to(now);
	std::vector<ForwardCandidate> candidates;
	for (const auto& [uid, copy] : store_.copies()) {
		if (peer.has(uid)) continue;
		const Message& m = core_.msg(uid);
		candidates.push_back({uid, m.destination, m.created_at});
	}
	for (std::uint64_t uid : prophet_forward_filter(table_, peer.predictability,
	         peer.node, candidates)) {
		queue_insert(peer.node, uid, send_key(uid, peer));
	}
}

bool ProphetRouter::admit(std::uint64_t, std::uint64_t size, double,
    std::vector<std::uint64_t>& evict)
{
	if (store_.free_bytes() >= size) return true;
	return evict_oldest_received(store_, core_, self_, size - store_.free_bytes(), evict);
}

void ProphetRouter::on_arrival(std::uint64_t uid, std::uint32_t from, double now)
{
	const Message& m = core_.msg(uid);
	table_.age_to(now);
	for (const auto& [peer, snap] : open_) {
		if (peer == from || snap.has(uid)) continue;
		bool toward_peer = m.destination == peer;
		if (!toward_peer) {
			auto it = snap.predictability.find(m.destination);
			double peer_p = it == snap.predictability.end() ? 0.0 : it->second;
			if (peer_p <= table_.get(m.destination)) continue;
		}
		queue_insert(peer, uid, send_key(uid, snap));
	}
}

}  // namespace opportunet
