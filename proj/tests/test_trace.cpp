/*
 * test_trace.cpp
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

#include <doctest.h>

#include <sstream>

#include "opportunet/trace.hpp"

using namespace opportunet;

TEST_SUITE("trace") {

TEST_CASE("contact traces parse, normalize pair order and sort by time")
{
	std::istringstream in(
	    "time,a,b,kind\n"
	    "# handcrafted\n"
	    "10.0,2,1,up\n"
	    "5.0,0,1,up\n"
	    "12.5,1,2,down\n"
	    "11.0,0,1,down\n");
	auto events = parse_contact_trace(in);
	REQUIRE(events.size() == 4);
	CHECK(events[0].time == 5.0);
	CHECK(events[0].a == 0);
	CHECK(events[0].b == 1);
	CHECK(events[0].kind == ContactKind::up);
	CHECK(events[1].time == 10.0);
	CHECK(events[1].a == 1);  // endpoints stored small-first
	CHECK(events[1].b == 2);
	CHECK(events[2].kind == ContactKind::down);
	CHECK(events[3].time == 12.5);
}

TEST_CASE("a headerless trace parses the first line as data")
{
	std::istringstream in("1.0,0,1,up\n2.0,0,1,down\n");
	auto events = parse_contact_trace(in);
	REQUIRE(events.size() == 2);
	CHECK(events[0].time == 1.0);
}

TEST_CASE("traces must strictly alternate up and down per pair")
{
	std::istringstream double_up(
	    "1.0,0,1,up\n"
	    "2.0,1,0,up\n");
	CHECK_THROWS_AS(parse_contact_trace(double_up), TraceError);

	std::istringstream orphan_down("3.0,0,1,down\n");
	CHECK_THROWS_AS(parse_contact_trace(orphan_down), TraceError);

	// The same pair may come up again once it went down.
	std::istringstream again(
	    "1.0,0,1,up\n"
	    "2.0,0,1,down\n"
	    "3.0,0,1,up\n");
	CHECK(parse_contact_trace(again).size() == 3);
}

TEST_CASE("malformed contact rows carry their line number")
{
	auto expect_line = [](const std::string& text, const std::string& needle) {
		std::istringstream in(text);
		try {
			parse_contact_trace(in);
			FAIL("should have thrown for: " << text);
		} catch (const TraceError& e) {
			CHECK(std::string(e.what()).find(needle) != std::string::npos);
		}
	};
	expect_line("time,a,b,kind\n1.0,0,1\n", "line 2");
	expect_line("abc,0,1,up\n", "bad time");
	expect_line("-1.0,0,1,up\n", "bad time");
	expect_line("1.0,x,1,up\n", "bad node id");
	expect_line("1.0,3,3,up\n", "self contact");
	expect_line("1.0,0,1,sideways\n", "up or down");
}

TEST_CASE("writing and reparsing a trace is the identity")
{
	std::vector<ContactEvent> events{
	    {1.5, 0, 2, ContactKind::up},
	    {3.25, 0, 2, ContactKind::down},
	    {3.25, 1, 2, ContactKind::up},
	};
	std::ostringstream out;
	write_contact_trace(out, events);
	std::istringstream in(out.str());
	auto back = parse_contact_trace(in);
	REQUIRE(back.size() == events.size());
	for (std::size_t i = 0; i < events.size(); ++i) {
		CHECK(back[i].time == events[i].time);
		CHECK(back[i].a == events[i].a);
		CHECK(back[i].b == events[i].b);
		CHECK(back[i].kind == events[i].kind);
	}
}

TEST_CASE("scripted messages parse and sort by creation time")
{
	std::istringstream in(
	    "time,id,src,dst,size\n"
	    "30.0,M2,1,0,500\n"
	    "0.0,M1,0,2,1000000\n");
	auto msgs = parse_messages_csv(in);
	REQUIRE(msgs.size() == 2);
	CHECK(msgs[0].id == "M1");
	CHECK(msgs[0].src == 0);
	CHECK(msgs[0].dst == 2);
	CHECK(msgs[0].size == 1000000);
	CHECK(msgs[1].id == "M2");
	CHECK(msgs[1].time == 30.0);
}

TEST_CASE("scripted messages reject duplicates, self-sends and zero sizes")
{
	std::istringstream dup(
	    "1.0,M1,0,1,10\n"
	    "2.0,M1,1,2,10\n");
	CHECK_THROWS_AS(parse_messages_csv(dup), TraceError);

	std::istringstream self("1.0,M1,3,3,10\n");
	CHECK_THROWS_AS(parse_messages_csv(self), TraceError);

	std::istringstream zero("1.0,M1,0,1,0\n");
	CHECK_THROWS_AS(parse_messages_csv(zero), TraceError);

	std::istringstream short_row("1.0,M1,0,1\n");
	CHECK_THROWS_AS(parse_messages_csv(short_row), TraceError);
}

}
