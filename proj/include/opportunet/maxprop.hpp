/*
 * maxprop.hpp
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

#ifndef OPPORTUNET_MAXPROP_HPP
#define OPPORTUNET_MAXPROP_HPP

#include <limits>

#include "opportunet/router.hpp"

namespace opportunet {

constexpr double kUnreachableCost = std::numeric_limits<double>::infinity();

/// f(met) += 1, then renormalize so the entries sum to 1.
void maxprop_meeting_update(std::map<std::uint32_t, double>& f, std::uint32_t met);

/// Cheapest known path cost to every node: Dijkstra over the graph
/// formed by all known meeting vectors, edge weight 1 - f.  Nodes with
/// no known path get the unreachable sentinel.
std::vector<double> maxprop_costs(std::uint32_t self,
    const std::map<std::uint32_t, MeetingVector>& vectors, std::uint32_t node_count);
std::vector<double> maxprop_costs(std::uint32_t self,
    const std::map<std::uint32_t, MeetingVectorRef>& vectors, std::uint32_t node_count);

struct RankItem {
	std::uint64_t uid = 0;
	std::uint32_t hops = 0;
	double cost = 0;
	double created_at = 0;
};

/// Transmission order, best first: messages with hops < p sorted by
/// (hops, cost), the rest by cost alone.  Eviction takes the tail.
void maxprop_rank(std::vector<RankItem>& items, std::uint32_t p);

/// p = floor(min(avg bytes per contact, capacity) / mean buffered size);
/// 0 while no contact statistics or no buffered messages exist.
std::uint32_t maxprop_threshold(double avg_bytes_per_contact, std::uint64_t capacity,
    const MessageStore& store);

/**
 * Ranked flooding with acknowledged-delivery purging: floods like
 * Epidemic but orders transmissions by path cost over relayed meeting
 * vectors, drops worst-ranked first, and spreads delivery acks that
 * clear every remaining copy of a delivered message.
 */
class MaxpropRouter : public Router {
public:
	using Router::Router;

	const std::map<std::uint32_t, double>& meeting_vector() const { return own_f_; }
	const std::map<std::uint64_t, double>& acks() const { return acks_; }
	double avg_bytes_per_contact() const { return avg_bytes_; }

	void on_contact_begin(std::uint32_t peer, double now) override;
	void absorb(const PeerSnapshot& peer, double now) override;
	void open_session(const PeerSnapshot& peer, double now) override;
	void close_session(std::uint32_t peer, std::uint64_t bytes, double now) override;
	bool refuses(std::uint64_t uid, double now) const override;
	bool admit(std::uint64_t uid, std::uint64_t size, double now,
	    std::vector<std::uint64_t>& evict) override;
	void on_arrival(std::uint64_t uid, std::uint32_t from, double now) override;
	void on_delivered_here(std::uint64_t uid, double now) override;

protected:
	void fill_snapshot(PeerSnapshot& snap, double now) override;

private:
	const std::vector<double>& costs() const;
	void prune_acks(double now);
	std::vector<double> send_key(std::uint64_t uid, std::uint32_t p) const;

	std::map<std::uint32_t, double> own_f_;
	double own_updated_at_ = -1;
	std::map<std::uint32_t, MeetingVectorRef> cached_;  // other nodes' vectors
	std::map<std::uint64_t, double> acks_;           // uid -> expiry
	double avg_bytes_ = 0;
	std::uint64_t contacts_seen_ = 0;
	std::map<std::uint32_t, std::uint32_t> session_p_;  // head threshold per open session
	mutable std::vector<double> costs_;
	mutable bool costs_dirty_ = true;
	// Scratch for costs(): per-node views into the shared flat vectors.
	mutable std::vector<const std::vector<std::pair<std::uint32_t, double>>*> adjacency_;
	mutable std::vector<std::pair<std::uint32_t, double>> own_edges_;
};

}  // namespace opportunet

#endif  // OPPORTUNET_MAXPROP_HPP
