/*
 * link_model.hpp
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

#ifndef OPPORTUNET_LINK_MODEL_HPP
#define OPPORTUNET_LINK_MODEL_HPP

#include <cstdint>

namespace opportunet {

struct LinkParams {
	double range = 3.0;                  // meters, closed threshold
	double speed_bps = 500000;           // bytes/second up to the switch time
	double speed_after_bps = 1000000;    // bytes/second strictly after it
	double speed_switch_time = 10000;    // seconds
	double latency = 0.2;                // seconds, charged once per transfer
	std::uint64_t buffer_bytes = 8000000;
	bool single_transfer_per_node = false;
};

/// Step function: speed_bps while t <= switch time, speed_after_bps after.
inline double link_speed(const LinkParams& p, double t)
{
	return t > p.speed_switch_time ? p.speed_after_bps : p.speed_bps;
}

/// Occupancy of the pair link for one transfer; the rate is sampled at
/// the start and never re-sampled mid-flight.
inline double transfer_duration(const LinkParams& p, std::uint64_t bytes, double start)
{
	return p.latency + static_cast<double>(bytes) / link_speed(p, start);
}

struct TransferJob {
	std::uint64_t msg = 0;   // message uid
	std::uint32_t from = 0;
	std::uint32_t to = 0;
	double start = 0;
	double finish = 0;       // start + latency + size/speed(start)
	std::uint32_t hops = 0;  // sender copy's hop count at start
	std::uint64_t seq = 0;   // global start order, breaks finish-time ties
	bool aborted = false;
};

}  // namespace opportunet

#endif  // OPPORTUNET_LINK_MODEL_HPP
