/*
 * message.hpp
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

#ifndef OPPORTUNET_MESSAGE_HPP
#define OPPORTUNET_MESSAGE_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace opportunet {

struct Message {
	std::string id;                // external label, e.g. "M17"
	std::uint32_t source = 0;
	std::uint32_t destination = 0;
	std::uint64_t size = 0;        // bytes, >= 1
	double created_at = 0;
	double ttl = 0;                // seconds; <= 0 means unlimited lifetime
};

inline bool message_expired(const Message& m, double now)
{
	return m.ttl > 0 && now >= m.created_at + m.ttl - 1e-9;
}

/// One node's view of a message it carries.
struct Copy {
	std::uint64_t size = 0;
	double received_at = 0;
	std::uint32_t hops = 0;  // relay transfers between source and this node
};

/**
 * A node's buffer.  Occupancy accounting is enforced on every mutation;
 * violating capacity is a bug, not a recoverable condition, so it
 * throws instead of clamping.
 */
class MessageStore {
public:
	explicit MessageStore(std::uint64_t capacity) : capacity_(capacity) {}

	std::uint64_t capacity() const { return capacity_; }
	std::uint64_t occupancy() const { return occupancy_; }
	std::uint64_t free_bytes() const { return capacity_ - occupancy_; }
	bool contains(std::uint64_t uid) const { return copies_.count(uid) != 0; }
	const Copy* find(std::uint64_t uid) const
	{
		auto it = copies_.find(uid);
		return it == copies_.end() ? nullptr : &it->second;
	}
	const std::map<std::uint64_t, Copy>& copies() const { return copies_; }

	void insert(std::uint64_t uid, const Copy& c)
	{
		if (copies_.count(uid)) throw std::logic_error("buffer: duplicate message id");
		if (occupancy_ + c.size > capacity_) throw std::logic_error("buffer: capacity exceeded");
		copies_.emplace(uid, c);
		occupancy_ += c.size;
	}

	void erase(std::uint64_t uid)
	{
		auto it = copies_.find(uid);
		if (it == copies_.end()) throw std::logic_error("buffer: erasing absent message");
		occupancy_ -= it->second.size;
		copies_.erase(it);
	}

private:
	std::uint64_t capacity_;
	std::uint64_t occupancy_ = 0;
	std::map<std::uint64_t, Copy> copies_;
};

}  // namespace opportunet

#endif  // OPPORTUNET_MESSAGE_HPP
