/*
 * mobility.cpp
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

#include "opportunet/mobility.hpp"

#include <stdexcept>

namespace opportunet {

namespace {

// RNG stream ids: 1 is traffic (see engine), mobility streams start here.
constexpr std::uint64_t kMobilityStreamBase = 0x100;

// Sets up pose to walk from pose.at along route (which excludes the
// start vertex).  Empty route leaves the node parked.
void begin_route(NodePose& pose, std::vector<std::uint32_t> route, const GraphView& view)
{
	pose.route = std::move(route);
	if (pose.route.empty()) {
		pose.edge = GraphView::kNoEdge;
		return;
	}
	std::uint32_t ei = view.edge_between(pose.at, pose.route.front());
	if (ei == GraphView::kNoEdge) throw std::logic_error("route step without edge");
	const MapEdge& e = view.graph().edges()[ei];
	pose.edge = ei;
	pose.heading = (e.a == pose.at) ? +1 : -1;
	pose.offset = (pose.heading > 0) ? 0.0 : e.length;
}

}  // namespace

std::uint32_t pick_destination(const GraphView& view, RngStream& rng, std::uint32_t exclude)
{
	const auto& verts = view.vertices();
	if (verts.size() == 1) return verts[0];
	if (!view.contains_vertex(exclude)) {
		return verts[rng.next_below(verts.size())];
	}
	// Draw over n-1 slots and skip past the excluded vertex: single
	// draw, exactly uniform over the remaining vertices.
	std::uint64_t k = rng.next_below(verts.size() - 1);
	std::uint32_t v = verts[k];
	if (v >= exclude) v = verts[k + 1];
	return v;
}

void advance(NodePose& pose, double dt, double speed, double pause,
    const GraphView& view, RngStream& rng)
{
	if (dt <= 0) throw std::invalid_argument("advance: dt must be positive");
	if (pose.pause_left > 0) {
		double wait = std::min(pose.pause_left, dt);
		pose.pause_left -= wait;
		dt -= wait;
		if (dt <= 0) return;
	}
	// Distance budget, not time: per-tick travel is exactly speed*dt.
	double budget = speed * dt;
	while (budget > 1e-12) {
		if (pose.edge == GraphView::kNoEdge) {
			if (view.vertices().size() < 2) return;  // nowhere to go
			std::uint32_t dest = pick_destination(view, rng, pose.at);
			if (dest == pose.at) return;
			auto path = view.shortest_path(pose.at, dest);
			begin_route(pose, {path.begin() + 1, path.end()}, view);
			continue;
		}
		const MapEdge& e = view.graph().edges()[pose.edge];
		double left = (pose.heading > 0) ? e.length - pose.offset : pose.offset;
		if (budget < left) {
			pose.offset += pose.heading * budget;
			return;
		}
		budget -= left;
		pose.at = (pose.heading > 0) ? e.b : e.a;
		pose.route.erase(pose.route.begin());
		if (pose.route.empty()) {
			pose.edge = GraphView::kNoEdge;
			if (pause > 0) {
				// Remaining budget is distance; convert back to time.
				pose.pause_left = pause - budget / speed;
				if (pose.pause_left < 0) {
					budget = -pose.pause_left * speed;
					pose.pause_left = 0;
					continue;
				}
				return;
			}
			continue;
		}
		std::uint32_t next = pose.route.front();
		std::uint32_t ei = view.edge_between(pose.at, next);
		if (ei == GraphView::kNoEdge) throw std::logic_error("route step without edge");
		const MapEdge& ne = view.graph().edges()[ei];
		pose.edge = ei;
		pose.heading = (ne.a == pose.at) ? +1 : -1;
		pose.offset = (pose.heading > 0) ? 0.0 : ne.length;
	}
}

void pose_position(const NodePose& pose, const PathGraph& graph, double& x, double& y)
{
	if (pose.edge == GraphView::kNoEdge) {
		x = graph.vertex(pose.at).x;
		y = graph.vertex(pose.at).y;
		return;
	}
	const MapEdge& e = graph.edges()[pose.edge];
	const MapVertex& a = graph.vertex(e.a);
	const MapVertex& b = graph.vertex(e.b);
	double t = (e.length > 0) ? pose.offset / e.length : 0.0;
	x = a.x + t * (b.x - a.x);
	y = a.y + t * (b.y - a.y);
}

Mobility::Mobility(const PathGraph& graph, const std::vector<GroupSpec>& groups,
    std::uint64_t master_seed)
    : graph_(&graph)
{
	for (const GroupSpec& g : groups) {
		views_.emplace_back(graph, g.edges);
		auto comps = views_.back().component_sizes();
		if (comps.size() > 1) {
			throw MapError("group '" + g.name + "' road set (" +
			    edge_tag_name(g.edges) + ") is disconnected: component sizes " +
			    [&] {
				    std::string s;
				    for (auto c : comps) {
					    if (!s.empty()) s += ", ";
					    s += std::to_string(c);
				    }
				    return s;
			    }());
		}
	}
	std::uint32_t node = 0;
	for (std::uint32_t gi = 0; gi < groups.size(); ++gi) {
		const GroupSpec& g = groups[gi];
		for (std::uint32_t k = 0; k < g.count; ++k, ++node) {
			view_of_.push_back(gi);
			speeds_.push_back(g.speed);
			pauses_.push_back(g.pause);
			rngs_.emplace_back(master_seed, kMobilityStreamBase + node);
			const auto& verts = views_[gi].vertices();
			NodePose pose;
			pose.at = verts[rngs_.back().next_below(verts.size())];
			poses_.push_back(std::move(pose));
		}
	}
}

void Mobility::step(double dt)
{
	for (std::uint32_t i = 0; i < poses_.size(); ++i) {
		advance(poses_[i], dt, speeds_[i], pauses_[i], views_[view_of_[i]], rngs_[i]);
	}
}

void Mobility::positions(std::vector<double>& x, std::vector<double>& y) const
{
	x.resize(poses_.size());
	y.resize(poses_.size());
	for (std::size_t i = 0; i < poses_.size(); ++i) {
		pose_position(poses_[i], *graph_, x[i], y[i]);
	}
}

}  // namespace opportunet
