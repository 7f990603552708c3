/*
 * path_graph.hpp
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

#ifndef OPPORTUNET_PATH_GRAPH_HPP
#define OPPORTUNET_PATH_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace opportunet {

class MapError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Road class of an edge: some node groups ride roads, others sail
/// waterways, and a few segments (dock canals) carry both.
enum class EdgeTag { land, water, both };

EdgeTag parse_edge_tag(const std::string& s);
const char* edge_tag_name(EdgeTag t);

struct MapVertex {
	double x = 0;  // meters
	double y = 0;  // meters
};

struct MapEdge {
	std::uint32_t a = 0;
	std::uint32_t b = 0;  // a < b always
	double length = 0;    // meters; equals the endpoint distance
	EdgeTag tag = EdgeTag::both;
};

/**
 * The movement substrate: an undirected planar graph of polyline roads.
 *
 * File format, one polyline per line:
 *   LINE[:tag] x1,y1 x2,y2 ... xn,yn
 * Coordinates are meters; tag is land, water or both (default both).
 * Lines starting with '#' are comments.  Vertices are deduplicated by
 * exact coordinate match, so polylines sharing an endpoint connect.
 */
class PathGraph {
public:
	static PathGraph load(const std::string& text);

	std::size_t vertex_count() const { return vertices_.size(); }
	const MapVertex& vertex(std::uint32_t i) const { return vertices_[i]; }
	const std::vector<MapVertex>& vertices() const { return vertices_; }
	const std::vector<MapEdge>& edges() const { return edges_; }

private:
	std::vector<MapVertex> vertices_;
	std::vector<MapEdge> edges_;
};

/**
 * A tag-filtered subset of the graph; one group's road network.
 * land keeps {land, both}; water keeps {water, both}; both keeps all.
 */
class GraphView {
public:
	static constexpr std::uint32_t kNoEdge = UINT32_MAX;

	GraphView(const PathGraph& graph, EdgeTag filter);

	const PathGraph& graph() const { return *graph_; }
	/// Vertex ids reachable in this view, ascending.
	const std::vector<std::uint32_t>& vertices() const { return verts_; }
	bool contains_vertex(std::uint32_t v) const;
	/// Sizes of connected components, descending.  One element = connected.
	std::vector<std::size_t> component_sizes() const;

	/// Minimum-length path from..to inclusive.  Ties broken toward the
	/// smaller predecessor index so reruns pick identical routes.
	std::vector<std::uint32_t> shortest_path(std::uint32_t from, std::uint32_t to) const;

	std::uint32_t edge_between(std::uint32_t u, std::uint32_t v) const;

private:
	const PathGraph* graph_;
	std::vector<std::uint32_t> verts_;
	std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj_;  // vertex -> (neighbor, edge)
};

}  // namespace opportunet

#endif  // OPPORTUNET_PATH_GRAPH_HPP
