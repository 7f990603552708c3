/*
 * support.hpp
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

#ifndef OPPORTUNET_TESTS_SUPPORT_HPP
#define OPPORTUNET_TESTS_SUPPORT_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opportunet/router.hpp"

namespace opportunet::testing {

/// Fresh private directory under the system temp root.  Test binaries
/// may run concurrently, so names must not collide.
inline std::filesystem::path make_temp_dir(const std::string& tag)
{
	std::string tmpl =
	    (std::filesystem::temp_directory_path() / ("opportunet_" + tag + "_XXXXXX")).string();
	if (mkdtemp(tmpl.data()) == nullptr) {
		throw std::runtime_error("mkdtemp failed for " + tmpl);
	}
	return tmpl;
}

inline std::string slurp(const std::filesystem::path& p)
{
	std::ifstream in(p);
	if (!in) throw std::runtime_error("cannot open " + p.string());
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

/// Minimal engine stand-in for exercising routers in isolation: a
/// message catalog, stores the purge callback can reach, and an
/// explicit pin set standing in for running outbound transfers.
class FakeCore : public EngineCore {
public:
	std::map<std::uint64_t, Message> msgs;
	std::map<std::uint32_t, MessageStore*> stores;
	std::set<std::pair<std::uint32_t, std::uint64_t>> pinned;
	std::vector<std::pair<std::uint32_t, std::uint64_t>> purged;
	std::uint32_t n = 4;

	const Message& msg(std::uint64_t uid) const override { return msgs.at(uid); }
	std::uint32_t node_count() const override { return n; }
	bool outbound_active(std::uint32_t node, std::uint64_t uid) const override
	{
		return pinned.count({node, uid}) != 0;
	}
	void purge_copy(std::uint32_t node, std::uint64_t uid) override
	{
		purged.emplace_back(node, uid);
		stores.at(node)->erase(uid);
	}
};

inline PeerSnapshot make_snapshot(std::uint32_t node, std::vector<std::uint64_t> ids = {})
{
	PeerSnapshot snap;
	snap.node = node;
	snap.ids = std::move(ids);
	return snap;
}

}  // namespace opportunet::testing

#endif  // OPPORTUNET_TESTS_SUPPORT_HPP
