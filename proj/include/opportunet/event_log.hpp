/*
 * event_log.hpp
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

#ifndef OPPORTUNET_EVENT_LOG_HPP
#define OPPORTUNET_EVENT_LOG_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace opportunet {

enum class EventKind { created, relayed, delivered, dropped, aborted, expired };

const char* event_kind_name(EventKind k);

struct Event {
	double time = 0;  // already quantized
	EventKind kind = EventKind::created;
	std::uint64_t uid = 0;
	std::uint32_t from = 0;
	std::uint32_t to = 0;
	std::uint64_t size = 0;
	std::uint32_t hops = 0;
};

/// Rounds to whole microseconds so that the %.6f CSV form parses back
/// to the identical double.
double quantize_time(double t);

/**
 * Append-only record of everything that happened to messages in a run.
 * Times are non-decreasing; equal times keep append order.
 */
class EventLog {
public:
	/// Returns the quantized timestamp actually recorded.
	double append(double t, EventKind kind, std::uint64_t uid,
	    std::uint32_t from, std::uint32_t to, std::uint64_t size, std::uint32_t hops);

	const std::vector<Event>& events() const { return events_; }

	/// CSV: time,event,msg_id,from,to,size,hops (msg ids looked up by uid).
	void write_csv(std::ostream& out, const std::vector<std::string>& msg_ids) const;

private:
	std::vector<Event> events_;
	double last_time_ = -1e300;
};

}  // namespace opportunet

#endif  // OPPORTUNET_EVENT_LOG_HPP
