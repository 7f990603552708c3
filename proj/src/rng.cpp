/*
 * rng.cpp
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

#include "opportunet/rng.hpp"

#include <stdexcept>

namespace opportunet {

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
{
	std::seed_seq seq{
		static_cast<std::uint32_t>(master_seed),
		static_cast<std::uint32_t>(master_seed >> 32),
		static_cast<std::uint32_t>(stream_id),
		static_cast<std::uint32_t>(stream_id >> 32),
	};
	engine_.seed(seq);
}

std::uint64_t RngStream::next_u64()
{
	return engine_();
}

std::uint64_t RngStream::next_below(std::uint64_t n)
{
	if (n == 0) throw std::invalid_argument("next_below: n must be positive");
	// Rejection sampling keeps the result exactly uniform.
	const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
	std::uint64_t v;
	do {
		v = next_u64();
	} while (v >= limit);
	return v % n;
}

double RngStream::next_real(double lo, double hi)
{
	// 53 high bits give a uniform double in [0, 1).
	const double unit = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
	return lo + (hi - lo) * unit;
}

}  // namespace opportunet
