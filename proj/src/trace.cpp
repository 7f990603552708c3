/*
 * trace.cpp
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

#include "opportunet/trace.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace opportunet {

namespace {

std::vector<std::string> split_csv(const std::string& line)
{
	std::vector<std::string> out;
	std::string field;
	std::istringstream in(line);
	while (std::getline(in, field, ',')) out.push_back(field);
	return out;
}

double parse_time(const std::string& s, std::size_t lineno)
{
	char* end = nullptr;
	double v = std::strtod(s.c_str(), &end);
	if (end == s.c_str() || *end != '\0' || v < 0) {
		throw TraceError("trace line " + std::to_string(lineno) + ": bad time '" + s + "'");
	}
	return v;
}

std::uint32_t parse_node(const std::string& s, std::size_t lineno)
{
	char* end = nullptr;
	unsigned long v = std::strtoul(s.c_str(), &end, 10);
	if (end == s.c_str() || *end != '\0' || s[0] == '-') {
		throw TraceError("trace line " + std::to_string(lineno) + ": bad node id '" + s + "'");
	}
	return static_cast<std::uint32_t>(v);
}

bool looks_like_header(const std::string& first_field)
{
	return !first_field.empty() &&
	    first_field.find_first_not_of("0123456789.+-eE") != std::string::npos;
}

}  // namespace

std::vector<ContactEvent> parse_contact_trace(std::istream& in)
{
	std::vector<ContactEvent> events;
	std::string line;
	std::size_t lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		if (line.empty() || line[0] == '#') continue;
		auto fields = split_csv(line);
		if (lineno == 1 && !fields.empty() && looks_like_header(fields[0])) continue;
		if (fields.size() != 4) {
			throw TraceError("trace line " + std::to_string(lineno) + ": expected time,a,b,kind");
		}
		ContactEvent e;
		e.time = parse_time(fields[0], lineno);
		e.a = parse_node(fields[1], lineno);
		e.b = parse_node(fields[2], lineno);
		if (e.a == e.b) {
			throw TraceError("trace line " + std::to_string(lineno) + ": self contact");
		}
		if (e.a > e.b) std::swap(e.a, e.b);
		if (fields[3] == "up") {
			e.kind = ContactKind::up;
		} else if (fields[3] == "down") {
			e.kind = ContactKind::down;
		} else {
			throw TraceError(
			    "trace line " + std::to_string(lineno) + ": kind must be up or down");
		}
		events.push_back(e);
	}
	std::stable_sort(events.begin(), events.end(),
	    [](const ContactEvent& l, const ContactEvent& r) { return l.time < r.time; });

	// Per-pair up/down must strictly alternate, starting with up.
	std::set<std::pair<std::uint32_t, std::uint32_t>> live;
	for (const ContactEvent& e : events) {
		auto pair = std::make_pair(e.a, e.b);
		if (e.kind == ContactKind::up) {
			if (!live.insert(pair).second) {
				throw TraceError("trace: pair " + std::to_string(e.a) + "-" +
				    std::to_string(e.b) + " up while already up at t=" +
				    std::to_string(e.time));
			}
		} else {
			if (live.erase(pair) == 0) {
				throw TraceError("trace: pair " + std::to_string(e.a) + "-" +
				    std::to_string(e.b) + " down while already down at t=" +
				    std::to_string(e.time));
			}
		}
	}
	return events;
}

void write_contact_trace(std::ostream& out, const std::vector<ContactEvent>& events)
{
	out << "time,a,b,kind\n";
	char buf[64];
	for (const ContactEvent& e : events) {
		std::snprintf(buf, sizeof buf, "%.6f", e.time);
		out << buf << ',' << e.a << ',' << e.b << ','
		    << (e.kind == ContactKind::up ? "up" : "down") << '\n';
	}
}

std::vector<ScriptedMessage> parse_messages_csv(std::istream& in)
{
	std::vector<ScriptedMessage> msgs;
	std::set<std::string> ids;
	std::string line;
	std::size_t lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		if (line.empty() || line[0] == '#') continue;
		auto fields = split_csv(line);
		if (lineno == 1 && !fields.empty() && looks_like_header(fields[0])) continue;
		if (fields.size() != 5) {
			throw TraceError(
			    "messages line " + std::to_string(lineno) + ": expected time,id,src,dst,size");
		}
		ScriptedMessage m;
		m.time = parse_time(fields[0], lineno);
		m.id = fields[1];
		m.src = parse_node(fields[2], lineno);
		m.dst = parse_node(fields[3], lineno);
		char* end = nullptr;
		m.size = std::strtoull(fields[4].c_str(), &end, 10);
		if (end == fields[4].c_str() || *end != '\0' || m.size < 1) {
			throw TraceError("messages line " + std::to_string(lineno) + ": bad size");
		}
		if (m.id.empty() || !ids.insert(m.id).second) {
			throw TraceError(
			    "messages line " + std::to_string(lineno) + ": missing or duplicate id");
		}
		if (m.src == m.dst) {
			throw TraceError(
			    "messages line " + std::to_string(lineno) + ": source equals destination");
		}
		msgs.push_back(std::move(m));
	}
	std::stable_sort(msgs.begin(), msgs.end(),
	    [](const ScriptedMessage& l, const ScriptedMessage& r) { return l.time < r.time; });
	return msgs;
}

}  // namespace opportunet
