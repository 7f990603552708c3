/*
 * router.hpp
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

#ifndef OPPORTUNET_ROUTER_HPP
#define OPPORTUNET_ROUTER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "opportunet/config.hpp"
#include "opportunet/message.hpp"

namespace opportunet {

/// Engine services a protocol may call back into.
class EngineCore {
public:
	virtual ~EngineCore() = default;
	virtual const Message& msg(std::uint64_t uid) const = 0;
	virtual std::uint32_t node_count() const = 0;
	/// True while a copy is the payload of a running outbound transfer;
	/// such copies are not evictable or purgeable.
	virtual bool outbound_active(std::uint32_t node, std::uint64_t uid) const = 0;
	/// Drops a buffered copy (logged); no-op for pinned copies.
	virtual void purge_copy(std::uint32_t node, std::uint64_t uid) = 0;
};

/// Per-origin meeting-frequency vector relayed between nodes; receivers
/// keep the newest version per origin.  Published versions are
/// immutable, so snapshots and caches share them by pointer.
struct MeetingVector {
	std::map<std::uint32_t, double> f;
	double updated_at = -1;

	MeetingVector() = default;
	MeetingVector(std::map<std::uint32_t, double> f_, double updated_at_)
	    : f(std::move(f_)), updated_at(updated_at_)
	{
	}

	/// f as a flat array, built on first use and then shared by every
	/// holder; a run is single-threaded, so the lazy build is safe.
	const std::vector<std::pair<std::uint32_t, double>>& edges() const
	{
		if (!flat_ready_) {
			flat_.assign(f.begin(), f.end());
			flat_ready_ = true;
		}
		return flat_;
	}

private:
	mutable std::vector<std::pair<std::uint32_t, double>> flat_;
	mutable bool flat_ready_ = false;
};

using MeetingVectorRef = std::shared_ptr<const MeetingVector>;

/**
 * What one side hands the other when a contact comes up: the ids it can
 * already account for plus protocol metadata.  Exchanged as a 0-byte
 * control message, charged one link latency before payload transfers.
 */
struct PeerSnapshot {
	std::uint32_t node = 0;
	std::vector<std::uint64_t> ids;  // buffered or already-delivered uids, sorted
	std::map<std::uint32_t, double> predictability;          // PRoPHET
	std::map<std::uint32_t, MeetingVectorRef> meeting_vectors;  // MaxProp, own + cached
	std::map<std::uint64_t, double> acks;                    // MaxProp: uid -> expiry

	bool has(std::uint64_t uid) const;
};

/**
 * Per-node protocol instance.  The engine drives the shared store-carry-
 * forward skeleton (sessions, transfers, delivery) and defers to the
 * Router for metadata exchange, send ordering and buffer policy.
 *
 * Contact-up call order, both directions:
 *   on_contact_begin -> snapshot -> absorb(peer snapshot) -> open_session
 */
class Router {
public:
	Router(EngineCore& core, std::uint32_t self, MessageStore& store,
	    const std::set<std::uint64_t>& delivered)
	    : core_(core), self_(self), store_(store), delivered_(delivered)
	{
	}
	virtual ~Router() = default;

	virtual void on_contact_begin(std::uint32_t peer, double now);
	PeerSnapshot snapshot(double now);
	virtual void absorb(const PeerSnapshot& peer, double now);
	virtual void open_session(const PeerSnapshot& peer, double now) = 0;
	virtual void close_session(std::uint32_t peer, std::uint64_t bytes, double now);

	/// Pops the best send candidate for the open session with peer.
	/// The engine validates candidates against live receiver state.
	std::optional<std::uint64_t> next_to_send(std::uint32_t peer);

	/// Receiver-side veto independent of buffer content (MaxProp acks).
	virtual bool refuses(std::uint64_t uid, double now) const;

	/// Buffer admission for an arriving relay copy.  Preconditions: uid
	/// not resident, size <= capacity, this node is not the destination.
	/// Fills `evict` with victim uids; false = reject.
	virtual bool admit(std::uint64_t uid, std::uint64_t size, double now,
	    std::vector<std::uint64_t>& evict) = 0;

	/// A copy was stored here (relay arrival or local creation): offer
	/// it to the queues of every open session except `from`.
	virtual void on_arrival(std::uint64_t uid, std::uint32_t from, double now) = 0;

	virtual void on_delivered_here(std::uint64_t uid, double now);

protected:
	virtual void fill_snapshot(PeerSnapshot& snap, double now);

	void queue_insert(std::uint32_t peer, std::uint64_t uid,
	    const std::vector<double>& key);

	EngineCore& core_;
	std::uint32_t self_;
	MessageStore& store_;
	const std::set<std::uint64_t>& delivered_;
	// Open sessions: peer snapshot and the ranked send queue toward it.
	std::map<std::uint32_t, PeerSnapshot> open_;
	std::map<std::uint32_t, std::vector<std::pair<std::vector<double>, std::uint64_t>>> queues_;
};

/// Shared drop policy: evict oldest-received (ties by uid) until `need`
/// bytes are free, skipping pinned copies.  False = cannot make room.
bool evict_oldest_received(const MessageStore& store, EngineCore& core, std::uint32_t self,
    std::uint64_t need, std::vector<std::uint64_t>& evict);

std::unique_ptr<Router> make_router(const ScenarioConfig& cfg, EngineCore& core,
    std::uint32_t self, MessageStore& store, const std::set<std::uint64_t>& delivered);

}  // namespace opportunet

#endif  // OPPORTUNET_ROUTER_HPP
