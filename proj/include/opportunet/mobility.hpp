/*
 * mobility.hpp
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

#ifndef OPPORTUNET_MOBILITY_HPP
#define OPPORTUNET_MOBILITY_HPP

#include <cstdint>
#include <vector>

#include "opportunet/path_graph.hpp"
#include "opportunet/rng.hpp"

namespace opportunet {

struct GroupSpec {
	std::string name;
	std::uint32_t count = 0;
	double speed = 0;       // m/s, constant for every node of the group
	double pause = 0;       // seconds to wait at each reached destination
	EdgeTag edges = EdgeTag::both;
};

/**
 * Where a node is on the graph.  While traveling, the node sits on
 * `edge` at `offset` meters from endpoint a, moving toward b when
 * heading is +1 and toward a when -1.  Between routes (edge == kNoEdge)
 * it rests on vertex `at`.
 */
struct NodePose {
	std::uint32_t at = 0;
	std::uint32_t edge = GraphView::kNoEdge;
	int heading = 1;
	double offset = 0;
	std::vector<std::uint32_t> route;  // vertices still to visit; front() is next
	double pause_left = 0;
};

/// Uniform over the view's vertices excluding `exclude`; the exclusion
/// is waived when the view has a single vertex.  One RNG draw.
std::uint32_t pick_destination(const GraphView& view, RngStream& rng, std::uint32_t exclude);

/// Moves one node for dt seconds at the given speed, crossing edges and
/// re-routing (via pick_destination + shortest_path) as routes finish.
void advance(NodePose& pose, double dt, double speed, double pause,
    const GraphView& view, RngStream& rng);

/// Planar position of a pose.
void pose_position(const NodePose& pose, const PathGraph& graph, double& x, double& y);

/**
 * All nodes' movement state.  Node ids are assigned per group in
 * declaration order, each group walking only its own road subset.
 * Every node owns a private RNG stream so trajectories do not depend
 * on the tick size or on other nodes' rerouting.
 */
class Mobility {
public:
	Mobility(const PathGraph& graph, const std::vector<GroupSpec>& groups,
	    std::uint64_t master_seed);

	std::uint32_t node_count() const { return static_cast<std::uint32_t>(poses_.size()); }
	void step(double dt);
	void positions(std::vector<double>& x, std::vector<double>& y) const;
	const NodePose& pose(std::uint32_t node) const { return poses_[node]; }
	double speed_of(std::uint32_t node) const { return speeds_[node]; }

private:
	const PathGraph* graph_;
	std::vector<GraphView> views_;        // one per group
	std::vector<std::uint32_t> view_of_;  // node -> group index
	std::vector<double> speeds_;
	std::vector<double> pauses_;
	std::vector<NodePose> poses_;
	std::vector<RngStream> rngs_;
};

}  // namespace opportunet

#endif  // OPPORTUNET_MOBILITY_HPP
