/*
 * maxprop.cpp
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

#include "opportunet/maxprop.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace opportunet {

void maxprop_meeting_update(std::map<std::uint32_t, double>& f, std::uint32_t met)
{
	double sum = 0;
	for (const auto& [peer, v] : f) sum += v;
	f[met] += 1.0;
	double total = sum + 1.0;
	for (auto& [peer, v] : f) v /= total;
}

namespace {

template <typename Map, typename Get>
std::vector<double> costs_impl(std::uint32_t self, const Map& vectors,
    std::uint32_t node_count, Get get)
{
	std::vector<double> dist(node_count, kUnreachableCost);
	if (self >= node_count) return dist;
	using Item = std::pair<double, std::uint32_t>;
	std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
	dist[self] = 0;
	pq.emplace(0.0, self);
	while (!pq.empty()) {
		auto [d, u] = pq.top();
		pq.pop();
		if (d > dist[u]) continue;
		auto it = vectors.find(u);
		if (it == vectors.end()) continue;
		const MeetingVector* vec = get(it->second);
		if (vec == nullptr) continue;
		for (const auto& [v, f] : vec->f) {
			if (v >= node_count) continue;
			double w = 1.0 - std::clamp(f, 0.0, 1.0);
			if (d + w < dist[v]) {
				dist[v] = d + w;
				pq.emplace(dist[v], v);
			}
		}
	}
	return dist;
}

}  // namespace

std::vector<double> maxprop_costs(std::uint32_t self,
    const std::map<std::uint32_t, MeetingVector>& vectors, std::uint32_t node_count)
{
	return costs_impl(self, vectors, node_count,
	    [](const MeetingVector& v) { return &v; });
}

std::vector<double> maxprop_costs(std::uint32_t self,
    const std::map<std::uint32_t, MeetingVectorRef>& vectors, std::uint32_t node_count)
{
	return costs_impl(self, vectors, node_count,
	    [](const MeetingVectorRef& v) { return v.get(); });
}

void maxprop_rank(std::vector<RankItem>& items, std::uint32_t p)
{
	std::sort(items.begin(), items.end(), [p](const RankItem& l, const RankItem& r) {
		bool lh = l.hops < p, rh = r.hops < p;
		if (lh != rh) return lh;
		if (lh) {
			return std::tie(l.hops, l.cost, l.created_at, l.uid) <
			    std::tie(r.hops, r.cost, r.created_at, r.uid);
		}
		return std::tie(l.cost, l.created_at, l.uid) < std::tie(r.cost, r.created_at, r.uid);
	});
}

std::uint32_t maxprop_threshold(double avg_bytes_per_contact, std::uint64_t capacity,
    const MessageStore& store)
{
	if (store.copies().empty()) return 0;
	double mean_size =
	    static_cast<double>(store.occupancy()) / static_cast<double>(store.copies().size());
	if (mean_size <= 0) return 0;
	double budget = std::min(avg_bytes_per_contact, static_cast<double>(capacity));
	return static_cast<std::uint32_t>(std::floor(budget / mean_size));
}

const std::vector<double>& MaxpropRouter::costs() const
{
	if (!costs_dirty_) return costs_;
	std::uint32_t n = core_.node_count();
	// Indexing shared flat vectors by node id keeps the per-contact
	// Dijkstra off the tree maps.
	adjacency_.assign(n, nullptr);
	for (const auto& [origin, vec] : cached_) {
		if (origin < n) adjacency_[origin] = &vec->edges();
	}
	own_edges_.assign(own_f_.begin(), own_f_.end());
	if (self_ < n) adjacency_[self_] = &own_edges_;

	costs_.assign(n, kUnreachableCost);
	if (self_ < n) {
		using Item = std::pair<double, std::uint32_t>;
		std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
		costs_[self_] = 0;
		pq.emplace(0.0, self_);
		while (!pq.empty()) {
			auto [d, u] = pq.top();
			pq.pop();
			if (d > costs_[u] || adjacency_[u] == nullptr) continue;
			for (const auto& [v, f] : *adjacency_[u]) {
				if (v >= n) continue;
				double w = 1.0 - std::clamp(f, 0.0, 1.0);
				if (d + w < costs_[v]) {
					costs_[v] = d + w;
					pq.emplace(costs_[v], v);
				}
			}
		}
	}
	costs_dirty_ = false;
	return costs_;
}

void MaxpropRouter::prune_acks(double now)
{
	for (auto it = acks_.begin(); it != acks_.end();) {
		if (it->second <= now) {
			it = acks_.erase(it);
		} else {
			++it;
		}
	}
}

void MaxpropRouter::on_contact_begin(std::uint32_t peer, double now)
{
	maxprop_meeting_update(own_f_, peer);
	own_updated_at_ = now;
	costs_dirty_ = true;
}

void MaxpropRouter::fill_snapshot(PeerSnapshot& snap, double now)
{
	prune_acks(now);
	snap.meeting_vectors = cached_;
	snap.meeting_vectors[self_] =
	    std::make_shared<MeetingVector>(MeetingVector{own_f_, own_updated_at_});
	snap.acks = acks_;
}

void MaxpropRouter::absorb(const PeerSnapshot& peer, double now)
{
	for (const auto& [origin, vec] : peer.meeting_vectors) {
		if (origin == self_) continue;
		auto it = cached_.find(origin);
		if (it == cached_.end() || vec->updated_at > it->second->updated_at) {
			cached_[origin] = vec;
		}
	}
	for (const auto& [uid, expiry] : peer.acks) {
		if (expiry <= now) continue;
		auto [it, fresh] = acks_.emplace(uid, expiry);
		if (!fresh && expiry > it->second) it->second = expiry;
	}
	costs_dirty_ = true;
	// Acked messages are already delivered; clear surviving copies.
	std::vector<std::uint64_t> purge;
	for (const auto& [uid, copy] : store_.copies()) {
		if (acks_.count(uid)) purge.push_back(uid);
	}
	for (std::uint64_t uid : purge) core_.purge_copy(self_, uid);
}

std::vector<double> MaxpropRouter::send_key(std::uint64_t uid, std::uint32_t p) const
{
	const Message& m = core_.msg(uid);
	const Copy* copy = store_.find(uid);
	double hops = copy ? copy->hops : 0;
	double cost = costs()[m.destination];
	if (hops < p) return {0.0, hops, cost, m.created_at};
	return {1.0, 0.0, cost, m.created_at};
}

void MaxpropRouter::open_session(const PeerSnapshot& peer, double now)
{
	open_[peer.node] = peer;
	queues_[peer.node].clear();
	std::uint32_t p = maxprop_threshold(avg_bytes_, store_.capacity(), store_);
	session_p_[peer.node] = p;
	for (const auto& [uid, copy] : store_.copies()) {
		if (peer.has(uid) || acks_.count(uid)) continue;
		queue_insert(peer.node, uid, send_key(uid, p));
	}
	(void)now;
}

void MaxpropRouter::close_session(std::uint32_t peer, std::uint64_t bytes, double now)
{
	Router::close_session(peer, bytes, now);
	session_p_.erase(peer);
	contacts_seen_ += 1;
	avg_bytes_ += (static_cast<double>(bytes) - avg_bytes_) / static_cast<double>(contacts_seen_);
}

bool MaxpropRouter::refuses(std::uint64_t uid, double now) const
{
	auto it = acks_.find(uid);
	return it != acks_.end() && it->second > now;
}

bool MaxpropRouter::admit(std::uint64_t uid, std::uint64_t size, double now,
    std::vector<std::uint64_t>& evict)
{
	if (refuses(uid, now)) return false;
	if (store_.free_bytes() >= size) return true;

	std::vector<RankItem> items;
	for (const auto& [buid, copy] : store_.copies()) {
		items.push_back({buid, copy.hops, costs()[core_.msg(buid).destination],
		    core_.msg(buid).created_at});
	}
	maxprop_rank(items, maxprop_threshold(avg_bytes_, store_.capacity(), store_));
	std::uint64_t need = size - store_.free_bytes();
	std::uint64_t freed = 0;
	for (auto it = items.rbegin(); it != items.rend() && freed < need; ++it) {
		if (core_.outbound_active(self_, it->uid)) continue;
		evict.push_back(it->uid);
		freed += store_.find(it->uid)->size;
	}
	return freed >= need;
}

void MaxpropRouter::on_arrival(std::uint64_t uid, std::uint32_t from, double)
{
	if (acks_.count(uid)) return;
	for (const auto& [peer, snap] : open_) {
		if (peer == from || snap.has(uid)) continue;
		queue_insert(peer, uid, send_key(uid, session_p_[peer]));
	}
}

void MaxpropRouter::on_delivered_here(std::uint64_t uid, double now)
{
	const Message& m = core_.msg(uid);
	double expiry = m.ttl > 0 ? m.created_at + m.ttl : std::numeric_limits<double>::infinity();
	acks_[uid] = expiry;
	(void)now;
}

}  // namespace opportunet
