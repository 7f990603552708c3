/*
 * engine.hpp
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

#ifndef OPPORTUNET_ENGINE_HPP
#define OPPORTUNET_ENGINE_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "opportunet/config.hpp"
#include "opportunet/contact.hpp"
#include "opportunet/event_log.hpp"
#include "opportunet/mobility.hpp"
#include "opportunet/report.hpp"
#include "opportunet/router.hpp"
#include "opportunet/trace.hpp"

namespace opportunet {

/**
 * Fixed-step simulation loop.  Per tick, in order: expire TTLs, move
 * nodes, detect (or replay) contacts, tear down / establish sessions,
 * complete and start transfers until quiescent, then inject traffic.
 * Everything is deterministic for a fixed config + seed; transfers
 * land on the first tick at or past their analytic finish time.
 *
 * Contacts come either from mobility on a path graph or from a replay
 * trace (in which case movement is bypassed entirely).
 */
class Engine : public EngineCore {
public:
	struct Inputs {
		const ScenarioConfig* cfg = nullptr;
		const PathGraph* graph = nullptr;                   // mobility mode
		const std::vector<ContactEvent>* trace = nullptr;   // replay mode
		const std::vector<ScriptedMessage>* scripted = nullptr;  // disables random traffic
		bool export_contacts = false;
	};

	explicit Engine(const Inputs& in);
	~Engine() override;

	void run();

	const EventLog& log() const { return log_; }
	const RunReport& report() const { return report_; }
	const std::vector<std::string>& msg_ids() const { return msg_ids_; }
	const std::vector<ContactEvent>& exported_contacts() const { return exported_; }

	// EngineCore
	const Message& msg(std::uint64_t uid) const override { return msgs_[uid]; }
	std::uint32_t node_count() const override { return static_cast<std::uint32_t>(nodes_.size()); }
	bool outbound_active(std::uint32_t node, std::uint64_t uid) const override;
	void purge_copy(std::uint32_t node, std::uint64_t uid) override;

private:
	struct NodeState {
		explicit NodeState(std::uint64_t capacity) : store(capacity) {}
		MessageStore store;
		std::set<std::uint64_t> delivered;  // ids this node accepted as destination
		std::unique_ptr<Router> router;
	};

	struct Session {
		double free_at = 0;   // metadata exchange holds the link this long
		bool busy = false;
		TransferJob job;
		std::uint32_t turn = 0;  // who sends next
		std::uint64_t bytes = 0; // completed payload bytes this contact
	};

	using Pair = std::pair<std::uint32_t, std::uint32_t>;

	void tick_expire(double now);
	void dispatch_contact(const ContactEvent& ev, double now);
	void transfer_phase(double now);
	bool try_start(const Pair& pair, Session& s, double now);
	void complete_transfer(Session& s, double now);
	void inject_traffic(double now);
	void spawn_message(const std::string& id, std::uint32_t src, std::uint32_t dst,
	    std::uint64_t size, double ttl, double now);
	void store_arrival(std::uint32_t to, std::uint64_t uid, std::uint64_t size,
	    std::uint32_t hops, std::uint32_t from, double now);
	void erase_copy(std::uint32_t node, std::uint64_t uid, EventKind kind, double now);
	bool node_in_transfer(std::uint32_t node) const;
	void finalize();

	ScenarioConfig cfg_;
	std::optional<Mobility> mobility_;
	std::vector<ContactEvent> trace_;
	std::vector<ScriptedMessage> scripted_;
	bool scripted_mode_ = false;
	bool export_contacts_ = false;

	std::vector<NodeState> nodes_;
	ContactTracker tracker_;
	std::map<Pair, Session> sessions_;
	std::vector<Message> msgs_;
	std::vector<std::string> msg_ids_;
	std::vector<bool> delivered_flag_;
	enum class Removal : std::uint8_t { none, dropped, expired };
	std::vector<Removal> last_removal_;
	EventLog log_;
	RunReport report_;
	std::vector<ContactEvent> exported_;

	RngStream traffic_rng_;
	double now_ = 0;
	double next_traffic_ = 0;
	bool traffic_done_ = false;
	std::size_t trace_idx_ = 0;
	std::size_t scripted_idx_ = 0;
	std::size_t expiry_idx_ = 0;
	std::uint64_t job_seq_ = 0;
	std::vector<double> pos_x_, pos_y_;
	std::vector<ContactEvent> tick_events_;
};

}  // namespace opportunet

#endif  // OPPORTUNET_ENGINE_HPP
