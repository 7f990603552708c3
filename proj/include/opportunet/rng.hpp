/*
 * rng.hpp
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

#ifndef OPPORTUNET_RNG_HPP
#define OPPORTUNET_RNG_HPP

#include <cstdint>
#include <random>

namespace opportunet {

/**
 * A deterministic random stream.
 *
 * Each simulation concern (mobility, traffic, ...) draws from its own
 * stream so that adding draws to one concern never shifts the sequence
 * seen by another.  All derivation from raw engine output is done here
 * by hand; std::uniform_*_distribution is avoided because its output
 * is not pinned down by the standard.
 */
class RngStream {
public:
	RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

	std::uint64_t next_u64();

	/// Uniform integer in [0, n).  n must be > 0.
	std::uint64_t next_below(std::uint64_t n);

	/// Uniform double in [lo, hi).
	double next_real(double lo, double hi);

private:
	std::mt19937_64 engine_;
};

}  // namespace opportunet

#endif  // OPPORTUNET_RNG_HPP
