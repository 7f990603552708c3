/*
 * contact.hpp
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

#ifndef OPPORTUNET_CONTACT_HPP
#define OPPORTUNET_CONTACT_HPP

#include <cstdint>
#include <set>
#include <vector>

namespace opportunet {

enum class ContactKind { up, down };

struct ContactEvent {
	std::uint32_t a = 0;
	std::uint32_t b = 0;  // a < b
	ContactKind kind = ContactKind::up;
	double time = 0;
};

/**
 * Tracks which node pairs are within radio range.  A pair is in range
 * when distance <= range (closed threshold, compared as squares so the
 * boundary case is exact).  step() reports transitions only: downs
 * first, then ups, each sorted by (a, b).
 *
 * Candidate pairs come from a sorted uniform grid of cell size `range`,
 * which prunes distant pairs without changing any distance comparison,
 * so results are identical to the all-pairs scan.
 */
class ContactTracker {
public:
	explicit ContactTracker(std::uint32_t nodes);

	void step(const std::vector<double>& x, const std::vector<double>& y,
	    double range, double now, std::vector<ContactEvent>& out);

	bool up(std::uint32_t a, std::uint32_t b) const;
	const std::set<std::pair<std::uint32_t, std::uint32_t>>& live() const { return live_; }

private:
	std::uint32_t n_;
	std::set<std::pair<std::uint32_t, std::uint32_t>> live_;
	std::vector<std::pair<std::uint64_t, std::uint32_t>> cells_;  // scratch
};

}  // namespace opportunet

#endif  // OPPORTUNET_CONTACT_HPP
