/*
 * trace.hpp
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

#ifndef OPPORTUNET_TRACE_HPP
#define OPPORTUNET_TRACE_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "opportunet/contact.hpp"

namespace opportunet {

class TraceError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// A creation to inject at a fixed time (replay runs).
struct ScriptedMessage {
	double time = 0;
	std::string id;
	std::uint32_t src = 0;
	std::uint32_t dst = 0;
	std::uint64_t size = 0;
};

/// CSV `time,a,b,kind` with kind in {up, down}.  Events are sorted by
/// time (stable) and must strictly alternate up/down per pair.
std::vector<ContactEvent> parse_contact_trace(std::istream& in);
void write_contact_trace(std::ostream& out, const std::vector<ContactEvent>& events);

/// CSV `time,id,src,dst,size`; ids must be unique, src != dst, size >= 1.
std::vector<ScriptedMessage> parse_messages_csv(std::istream& in);

}  // namespace opportunet

#endif  // OPPORTUNET_TRACE_HPP
