/*
 * contact.cpp
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

#include "opportunet/contact.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace opportunet {

namespace {

std::uint64_t cell_key(double v, double range, double w)
{
	// Bias keeps the packed key positive for any realistic coordinate.
	std::int64_t cx = static_cast<std::int64_t>(std::floor(v / range)) + (1LL << 31);
	std::int64_t cy = static_cast<std::int64_t>(std::floor(w / range)) + (1LL << 31);
	return (static_cast<std::uint64_t>(cx) << 32) | static_cast<std::uint64_t>(cy);
}

}  // namespace

ContactTracker::ContactTracker(std::uint32_t nodes) : n_(nodes) {}

bool ContactTracker::up(std::uint32_t a, std::uint32_t b) const
{
	if (a > b) std::swap(a, b);
	return live_.count({a, b}) != 0;
}

void ContactTracker::step(const std::vector<double>& x, const std::vector<double>& y,
    double range, double now, std::vector<ContactEvent>& out)
{
	const double r2 = range * range;
	auto in_range = [&](std::uint32_t i, std::uint32_t j) {
		double dx = x[i] - x[j], dy = y[i] - y[j];
		return dx * dx + dy * dy <= r2;
	};

	// Existing contacts: anything now out of range goes down.
	std::vector<ContactEvent> downs, ups;
	for (auto it = live_.begin(); it != live_.end();) {
		if (!in_range(it->first, it->second)) {
			downs.push_back({it->first, it->second, ContactKind::down, now});
			it = live_.erase(it);
		} else {
			++it;
		}
	}

	cells_.clear();
	for (std::uint32_t i = 0; i < n_; ++i) cells_.emplace_back(cell_key(x[i], range, y[i]), i);
	std::sort(cells_.begin(), cells_.end());

	for (std::uint32_t i = 0; i < n_; ++i) {
		std::int64_t cx = static_cast<std::int64_t>(std::floor(x[i] / range));
		std::int64_t cy = static_cast<std::int64_t>(std::floor(y[i] / range));
		for (int dx = -1; dx <= 1; ++dx) {
			for (int dy = -1; dy <= 1; ++dy) {
				std::uint64_t key =
				    (static_cast<std::uint64_t>(cx + dx + (1LL << 31)) << 32) |
				    static_cast<std::uint64_t>(cy + dy + (1LL << 31));
				auto lo = std::lower_bound(cells_.begin(), cells_.end(),
				    std::make_pair(key, std::uint32_t{0}));
				for (; lo != cells_.end() && lo->first == key; ++lo) {
					std::uint32_t j = lo->second;
					if (j <= i) continue;
					if (!in_range(i, j)) continue;
					auto pair = std::make_pair(i, j);
					if (live_.insert(pair).second) {
						ups.push_back({i, j, ContactKind::up, now});
					}
				}
			}
		}
	}

	auto by_pair = [](const ContactEvent& l, const ContactEvent& r) {
		return std::tie(l.a, l.b) < std::tie(r.a, r.b);
	};
	std::sort(downs.begin(), downs.end(), by_pair);
	std::sort(ups.begin(), ups.end(), by_pair);
	out.insert(out.end(), downs.begin(), downs.end());
	out.insert(out.end(), ups.begin(), ups.end());
}

}  // namespace opportunet
