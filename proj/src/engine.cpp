/*
 * engine.cpp
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

#include "opportunet/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "opportunet/link_model.hpp"

namespace opportunet {

namespace {
constexpr double kEps = 1e-9;
constexpr std::uint32_t kNoPeer = 0xffffffffu;
}  // namespace

Engine::Engine(const Inputs& in)
    : cfg_(*in.cfg),
      export_contacts_(in.export_contacts),
      tracker_(0),
      traffic_rng_(in.cfg->seed, 1) {
	std::uint32_t n = 0;
	if (in.trace != nullptr) {
		trace_ = *in.trace;
		for (const auto& ev : trace_) n = std::max(n, ev.b + 1);
	} else {
		if (in.graph == nullptr) throw std::logic_error("engine needs a graph or a trace");
		mobility_.emplace(*in.graph, cfg_.groups, cfg_.seed);
		n = mobility_->node_count();
	}
	if (in.scripted != nullptr) {
		scripted_ = *in.scripted;
		scripted_mode_ = true;
		for (const auto& m : scripted_) {
			if (m.src >= n || m.dst >= n) {
				if (in.trace == nullptr)
					throw TraceError("scripted message '" + m.id + "' references unknown node");
				n = std::max(n, std::max(m.src, m.dst) + 1);
			}
		}
	}
	if (n == 0) throw std::logic_error("scenario has no nodes");

	nodes_.reserve(n);
	for (std::uint32_t i = 0; i < n; ++i) {
		nodes_.emplace_back(cfg_.link.buffer_bytes);
		nodes_[i].router = make_router(cfg_, *this, i, nodes_[i].store, nodes_[i].delivered);
	}
	tracker_ = ContactTracker(n);
	pos_x_.resize(n);
	pos_y_.resize(n);
	if (mobility_) mobility_->positions(pos_x_, pos_y_);

	next_traffic_ = traffic_rng_.next_real(cfg_.traffic.interval_min, cfg_.traffic.interval_max);
}

Engine::~Engine() = default;

bool Engine::outbound_active(std::uint32_t node, std::uint64_t uid) const {
	for (const auto& [pair, s] : sessions_) {
		if (s.busy && s.job.from == node && s.job.msg == uid) return true;
	}
	return false;
}

void Engine::purge_copy(std::uint32_t node, std::uint64_t uid) {
	// Routers may not yank a copy that is mid-flight on some link.
	if (outbound_active(node, uid)) return;
	if (!nodes_[node].store.contains(uid)) return;
	erase_copy(node, uid, EventKind::dropped, now_);
}

void Engine::run() {
	const std::uint64_t ticks =
	    static_cast<std::uint64_t>(std::floor(cfg_.duration / cfg_.tick + kEps));
	for (std::uint64_t i = 1; i <= ticks; ++i) {
		const double now = static_cast<double>(i) * cfg_.tick;
		now_ = now;
		tick_expire(now);

		tick_events_.clear();
		if (mobility_) {
			mobility_->step(cfg_.tick);
			mobility_->positions(pos_x_, pos_y_);
			tracker_.step(pos_x_, pos_y_, cfg_.link.range, now, tick_events_);
		} else {
			while (trace_idx_ < trace_.size() && trace_[trace_idx_].time <= now + kEps)
				tick_events_.push_back(trace_[trace_idx_++]);
		}
		for (const auto& ev : tick_events_) dispatch_contact(ev, now);
		if (export_contacts_)
			exported_.insert(exported_.end(), tick_events_.begin(), tick_events_.end());

		transfer_phase(now);
		inject_traffic(now);
	}
	report_.ticks = ticks;
	finalize();
}

// All messages share one TTL, so they expire in creation order and a
// single cursor visits each expiry.  With unlimited TTL the loop never
// advances.  A copy mid-flight stays put; the cursor parks on it and
// retries next tick, once the link is done with it.
void Engine::tick_expire(double now) {
	while (expiry_idx_ < msgs_.size() && message_expired(msgs_[expiry_idx_], now)) {
		const std::uint64_t uid = expiry_idx_;
		bool pinned = false;
		for (std::uint32_t node = 0; node < node_count(); ++node) {
			if (!nodes_[node].store.contains(uid)) continue;
			if (outbound_active(node, uid)) {
				pinned = true;
				continue;
			}
			erase_copy(node, uid, EventKind::expired, now);
		}
		if (pinned) break;
		expiry_idx_ += 1;
	}
}

void Engine::dispatch_contact(const ContactEvent& ev, double now) {
	const Pair pair{ev.a, ev.b};
	if (ev.kind == ContactKind::down) {
		auto it = sessions_.find(pair);
		if (it == sessions_.end()) throw std::logic_error("contact down without session");
		Session& s = it->second;
		if (s.busy) {
			const Message& m = msgs_[s.job.msg];
			log_.append(now, EventKind::aborted, s.job.msg, s.job.from, s.job.to,
			    m.size, s.job.hops);
			report_.aborted += 1;
			if (cfg_.count_aborted) report_.relayed += 1;
		}
		nodes_[ev.a].router->close_session(ev.b, s.bytes, now);
		nodes_[ev.b].router->close_session(ev.a, s.bytes, now);
		sessions_.erase(it);
		return;
	}

	NodeState& A = nodes_[ev.a];
	NodeState& B = nodes_[ev.b];
	A.router->on_contact_begin(ev.b, now);
	B.router->on_contact_begin(ev.a, now);
	PeerSnapshot sa = A.router->snapshot(now);
	PeerSnapshot sb = B.router->snapshot(now);
	A.router->absorb(sb, now);
	B.router->absorb(sa, now);
	A.router->open_session(sb, now);
	B.router->open_session(sa, now);

	Session s;
	s.free_at = now + cfg_.link.latency;  // summary exchange occupies the link first
	s.turn = ev.a;
	sessions_[pair] = s;
}

void Engine::transfer_phase(double now) {
	bool progressed = true;
	while (progressed) {
		progressed = false;

		std::vector<std::tuple<double, std::uint64_t, Pair>> due;
		for (const auto& [pair, s] : sessions_) {
			if (s.busy && s.job.finish <= now + kEps)
				due.emplace_back(s.job.finish, s.job.seq, pair);
		}
		std::sort(due.begin(), due.end());
		for (const auto& [finish, seq, pair] : due) {
			complete_transfer(sessions_.at(pair), now);
			progressed = true;
		}

		for (auto& [pair, s] : sessions_) {
			if (s.busy || now + kEps < s.free_at) continue;
			if (try_start(pair, s, now)) progressed = true;
		}
	}
}

bool Engine::try_start(const Pair& pair, Session& s, double now) {
	const std::uint32_t order[2] = {s.turn, s.turn == pair.first ? pair.second : pair.first};
	for (std::uint32_t sender : order) {
		const std::uint32_t receiver = sender == pair.first ? pair.second : pair.first;
		if (cfg_.link.single_transfer_per_node &&
		    (node_in_transfer(sender) || node_in_transfer(receiver)))
			continue;
		NodeState& src = nodes_[sender];
		NodeState& dst = nodes_[receiver];
		while (auto uid = src.router->next_to_send(receiver)) {
			// Queued entries can go stale between queuing and sending.
			if (!src.store.contains(*uid)) continue;
			if (dst.store.contains(*uid)) continue;
			if (dst.delivered.count(*uid)) continue;
			if (message_expired(msgs_[*uid], now)) continue;
			if (dst.router->refuses(*uid, now)) continue;

			const Copy* c = src.store.find(*uid);
			s.job.msg = *uid;
			s.job.from = sender;
			s.job.to = receiver;
			s.job.start = now;
			s.job.finish = now + transfer_duration(cfg_.link, msgs_[*uid].size, now);
			s.job.hops = c->hops;
			s.job.seq = job_seq_++;
			s.busy = true;
			s.turn = receiver;
			return true;
		}
	}
	return false;
}

void Engine::complete_transfer(Session& s, double now) {
	const TransferJob job = s.job;
	s.busy = false;
	const Message& m = msgs_[job.msg];
	s.bytes += m.size;
	const std::uint32_t hops = job.hops + 1;

	log_.append(now, EventKind::relayed, job.msg, job.from, job.to, m.size, hops);
	report_.relayed += 1;

	if (job.to == m.destination) {
		if (nodes_[job.to].delivered.insert(job.msg).second) {
			const double t = log_.append(
			    now, EventKind::delivered, job.msg, job.from, job.to, m.size, hops);
			report_.delivered += 1;
			report_.latencies.push_back(t - m.created_at);
			delivered_flag_[job.msg] = true;
			nodes_[job.to].router->on_delivered_here(job.msg, now);
		}
		return;
	}
	if (message_expired(m, now)) {
		log_.append(now, EventKind::expired, job.msg, job.to, job.to, m.size, hops);
		report_.expired += 1;
		last_removal_[job.msg] = Removal::expired;
		return;
	}
	if (nodes_[job.to].store.contains(job.msg)) return;  // raced a second copy in
	store_arrival(job.to, job.msg, m.size, hops, job.from, now);
}

void Engine::store_arrival(std::uint32_t to, std::uint64_t uid, std::uint64_t size,
    std::uint32_t hops, std::uint32_t from, double now) {
	NodeState& node = nodes_[to];
	std::vector<std::uint64_t> evict;
	if (size > node.store.capacity() || !node.router->admit(uid, size, now, evict)) {
		log_.append(now, EventKind::dropped, uid, to, to, size, hops);
		report_.dropped += 1;
		last_removal_[uid] = Removal::dropped;
		return;
	}
	for (std::uint64_t victim : evict) erase_copy(to, victim, EventKind::dropped, now);
	node.store.insert(uid, Copy{size, quantize_time(now), hops});
	node.router->on_arrival(uid, from, now);
}

void Engine::erase_copy(std::uint32_t node, std::uint64_t uid, EventKind kind, double now) {
	const Copy* c = nodes_[node].store.find(uid);
	log_.append(now, kind, uid, node, node, c->size, c->hops);
	if (kind == EventKind::dropped) {
		report_.dropped += 1;
		last_removal_[uid] = Removal::dropped;
	} else {
		report_.expired += 1;
		last_removal_[uid] = Removal::expired;
	}
	nodes_[node].store.erase(uid);
}

bool Engine::node_in_transfer(std::uint32_t node) const {
	for (const auto& [pair, s] : sessions_) {
		if (s.busy && (s.job.from == node || s.job.to == node)) return true;
	}
	return false;
}

void Engine::inject_traffic(double now) {
	if (scripted_mode_) {
		while (scripted_idx_ < scripted_.size() &&
		       scripted_[scripted_idx_].time <= now + kEps) {
			const ScriptedMessage& m = scripted_[scripted_idx_++];
			spawn_message(m.id, m.src, m.dst, m.size, cfg_.traffic.ttl, now);
		}
		return;
	}
	while (!traffic_done_ && next_traffic_ <= now + kEps) {
		// No new load inside the cool-down window at the end of the run.
		if (next_traffic_ >= cfg_.duration - cfg_.traffic.cooldown) {
			traffic_done_ = true;
			break;
		}
		const std::uint32_t n = node_count();
		const std::uint32_t src = static_cast<std::uint32_t>(traffic_rng_.next_below(n));
		std::uint32_t dst = static_cast<std::uint32_t>(traffic_rng_.next_below(n - 1));
		if (dst >= src) dst += 1;
		spawn_message("M" + std::to_string(msgs_.size() + 1), src, dst,
		    cfg_.traffic.size_bytes, cfg_.traffic.ttl, now);
		next_traffic_ += traffic_rng_.next_real(cfg_.traffic.interval_min, cfg_.traffic.interval_max);
	}
}

void Engine::spawn_message(const std::string& id, std::uint32_t src, std::uint32_t dst,
    std::uint64_t size, double ttl, double now) {
	const std::uint64_t uid = msgs_.size();
	const double t = quantize_time(now);
	msgs_.push_back(Message{id, src, dst, size, t, ttl});
	msg_ids_.push_back(id);
	delivered_flag_.push_back(false);
	last_removal_.push_back(Removal::none);
	log_.append(now, EventKind::created, uid, src, dst, size, 0);
	report_.created += 1;
	store_arrival(src, uid, size, 0, kNoPeer, now);
}

void Engine::finalize() {
	for (std::uint64_t uid = 0; uid < msgs_.size(); ++uid) {
		if (delivered_flag_[uid]) continue;
		bool buffered = false;
		for (const auto& node : nodes_) {
			if (node.store.contains(uid)) {
				buffered = true;
				break;
			}
		}
		if (buffered) {
			report_.still_buffered += 1;
		} else if (last_removal_[uid] == Removal::dropped) {
			report_.dropped_final += 1;
		} else if (last_removal_[uid] == Removal::expired) {
			report_.expired_final += 1;
		} else {
			throw std::logic_error("message '" + msg_ids_[uid] + "' vanished without an event");
		}
	}
	const std::uint64_t accounted = report_.delivered + report_.still_buffered +
	    report_.dropped_final + report_.expired_final;
	if (accounted != report_.created)
		throw std::logic_error("message conservation violated");
}

}  // namespace opportunet
