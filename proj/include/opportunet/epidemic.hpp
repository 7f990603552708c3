/*
 * epidemic.hpp
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

#ifndef OPPORTUNET_EPIDEMIC_HPP
#define OPPORTUNET_EPIDEMIC_HPP

#include "opportunet/router.hpp"

namespace opportunet {

/**
 * Flooding: on contact, replicate every buffered message the peer does
 * not account for, oldest creation first.  Evicts oldest-received when
 * the buffer is full.
 */
class EpidemicRouter : public Router {
public:
	using Router::Router;

	void open_session(const PeerSnapshot& peer, double now) override;
	bool admit(std::uint64_t uid, std::uint64_t size, double now,
	    std::vector<std::uint64_t>& evict) override;
	void on_arrival(std::uint64_t uid, std::uint32_t from, double now) override;
};

}  // namespace opportunet

#endif  // OPPORTUNET_EPIDEMIC_HPP
