/*
 * event_log.cpp
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

#include "opportunet/event_log.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace opportunet {

const char* event_kind_name(EventKind k)
{
	switch (k) {
	case EventKind::created: return "created";
	case EventKind::relayed: return "relayed";
	case EventKind::delivered: return "delivered";
	case EventKind::dropped: return "dropped";
	case EventKind::aborted: return "aborted";
	case EventKind::expired: return "expired";
	}
	return "?";
}

double quantize_time(double t)
{
	return std::round(t * 1e6) / 1e6;
}

double EventLog::append(double t, EventKind kind, std::uint64_t uid,
    std::uint32_t from, std::uint32_t to, std::uint64_t size, std::uint32_t hops)
{
	double q = quantize_time(t);
	if (q < last_time_) throw std::logic_error("event log: time went backwards");
	last_time_ = q;
	events_.push_back({q, kind, uid, from, to, size, hops});
	return q;
}

void EventLog::write_csv(std::ostream& out, const std::vector<std::string>& msg_ids) const
{
	out << "time,event,msg_id,from,to,size,hops\n";
	char buf[64];
	for (const Event& e : events_) {
		std::snprintf(buf, sizeof buf, "%.6f", e.time);
		out << buf << ',' << event_kind_name(e.kind) << ',' << msg_ids[e.uid] << ','
		    << e.from << ',' << e.to << ',' << e.size << ',' << e.hops << '\n';
	}
}

}  // namespace opportunet
