/*
 * prophet.hpp
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

#ifndef OPPORTUNET_PROPHET_HPP
#define OPPORTUNET_PROPHET_HPP

#include "opportunet/router.hpp"

namespace opportunet {

// Probability update rules.  All three map [0,1] into [0,1].
double prophet_encounter_update(double p, double p_init);
double prophet_age(double p, double dt, double aging_base, double seconds_in_time_unit);
double prophet_transitive_update(double p_ac, double p_ab, double p_bc, double scale);

/**
 * Per-node delivery predictabilities: raised on encounters, decayed by
 * age, propagated transitively.  Aging is lazy: entries carry the value
 * as of last_aged and are decayed in bulk before any read or update.
 * Missing entries read as 0.
 */
class DeliveryPredictabilityTable {
public:
	explicit DeliveryPredictabilityTable(const ProphetParams& params) : params_(params) {}

	double get(std::uint32_t dst) const;
	const std::map<std::uint32_t, double>& entries() const { return p_; }
	double last_aged() const { return last_aged_; }

	void age_to(double now);
	/// age + encounter bump for `peer` (v2 mode scales the bump by the
	/// inter-meeting interval).
	void encounter(std::uint32_t peer, double now);
	/// Transitive pass from a freshly exchanged peer table.
	void transitive(std::uint32_t peer, const std::map<std::uint32_t, double>& peer_table,
	    std::uint32_t self);

private:
	ProphetParams params_;
	std::map<std::uint32_t, double> p_;
	std::map<std::uint32_t, double> last_met_;
	double last_aged_ = 0;
};

/// The replication choice, exposed for property tests: message uids
/// worth copying to `peer`, best first.  A message qualifies iff the
/// peer is its destination or the peer's predictability for the
/// destination strictly exceeds ours.  Order: descending peer
/// predictability (destination itself counts as 1), then older
/// creation, then uid.
struct ForwardCandidate {
	std::uint64_t uid = 0;
	std::uint32_t destination = 0;
	double created_at = 0;
};
std::vector<std::uint64_t> prophet_forward_filter(const DeliveryPredictabilityTable& own,
    const std::map<std::uint32_t, double>& peer_table, std::uint32_t peer,
    const std::vector<ForwardCandidate>& msgs);

class ProphetRouter : public Router {
public:
	ProphetRouter(EngineCore& core, std::uint32_t self, MessageStore& store,
	    const std::set<std::uint64_t>& delivered, const ProphetParams& params)
	    : Router(core, self, store, delivered), table_(params)
	{
	}

	const DeliveryPredictabilityTable& table() const { return table_; }

	void on_contact_begin(std::uint32_t peer, double now) override;
	void absorb(const PeerSnapshot& peer, double now) override;
	void open_session(const PeerSnapshot& peer, double now) override;
	bool admit(std::uint64_t uid, std::uint64_t size, double now,
	    std::vector<std::uint64_t>& evict) override;
	void on_arrival(std::uint64_t uid, std::uint32_t from, double now) override;

protected:
	void fill_snapshot(PeerSnapshot& snap, double now) override;

private:
	std::vector<double> send_key(std::uint64_t uid, const PeerSnapshot& peer) const;

	DeliveryPredictabilityTable table_;
};

}  // namespace opportunet

#endif  // OPPORTUNET_PROPHET_HPP
