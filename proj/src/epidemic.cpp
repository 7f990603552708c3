/*
 * epidemic.cpp
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

#include "opportunet/epidemic.hpp"

namespace opportunet {

void EpidemicRouter::open_session(const PeerSnapshot& peer, double now)
{
	open_[peer.node] = peer;
	queues_[peer.node].clear();
	for (const auto& [uid, copy] : store_.copies()) {
		if (peer.has(uid)) continue;
		queue_insert(peer.node, uid, {core_.msg(uid).created_at});
	}
	(void)now;
}

bool EpidemicRouter::admit(std::uint64_t, std::uint64_t size, double,
    std::vector<std::uint64_t>& evict)
{
	if (store_.free_bytes() >= size) return true;
	return evict_oldest_received(store_, core_, self_, size - store_.free_bytes(), evict);
}

void EpidemicRouter::on_arrival(std::uint64_t uid, std::uint32_t from, double)
{
	for (const auto& [peer, snap] : open_) {
		if (peer == from || snap.has(uid)) continue;
		queue_insert(peer, uid, {core_.msg(uid).created_at});
	}
}

}  // namespace opportunet
