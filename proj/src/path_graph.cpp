/*
 * path_graph.cpp
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

#include "opportunet/path_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <sstream>

namespace opportunet {

EdgeTag parse_edge_tag(const std::string& s)
{
	if (s == "land") return EdgeTag::land;
	if (s == "water") return EdgeTag::water;
	if (s == "both") return EdgeTag::both;
	throw MapError("unknown edge tag '" + s + "'");
}

const char* edge_tag_name(EdgeTag t)
{
	switch (t) {
	case EdgeTag::land: return "land";
	case EdgeTag::water: return "water";
	default: return "both";
	}
}

namespace {

[[noreturn]] void fail_line(std::size_t lineno, const std::string& what)
{
	throw MapError("map line " + std::to_string(lineno) + ": " + what);
}

// Merging rule for duplicate edges: identical tags keep the tag,
// differing tags widen to both.
EdgeTag merge_tags(EdgeTag a, EdgeTag b)
{
	return a == b ? a : EdgeTag::both;
}

std::vector<std::size_t> components_of(std::size_t n,
    const std::vector<std::vector<std::uint32_t>>& adj,
    const std::vector<bool>& present)
{
	std::vector<std::size_t> sizes;
	std::vector<bool> seen(n, false);
	for (std::uint32_t s = 0; s < n; ++s) {
		if (!present[s] || seen[s]) continue;
		std::size_t size = 0;
		std::vector<std::uint32_t> stack{s};
		seen[s] = true;
		while (!stack.empty()) {
			std::uint32_t v = stack.back();
			stack.pop_back();
			++size;
			for (std::uint32_t w : adj[v]) {
				if (!seen[w]) {
					seen[w] = true;
					stack.push_back(w);
				}
			}
		}
		sizes.push_back(size);
	}
	std::sort(sizes.rbegin(), sizes.rend());
	return sizes;
}

std::string join_sizes(const std::vector<std::size_t>& sizes)
{
	std::string out;
	for (std::size_t s : sizes) {
		if (!out.empty()) out += ", ";
		out += std::to_string(s);
	}
	return out;
}

}  // namespace

PathGraph PathGraph::load(const std::string& text)
{
	PathGraph g;
	std::map<std::pair<double, double>, std::uint32_t> index;  // exact-coordinate dedup
	std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> edge_index;

	std::istringstream in(text);
	std::string line;
	std::size_t lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		std::istringstream toks(line);
		std::string head;
		if (!(toks >> head) || head[0] == '#') continue;

		EdgeTag tag = EdgeTag::both;
		if (auto colon = head.find(':'); colon != std::string::npos) {
			try {
				tag = parse_edge_tag(head.substr(colon + 1));
			} catch (const MapError& e) {
				fail_line(lineno, e.what());
			}
			head.resize(colon);
		}
		if (head != "LINE") fail_line(lineno, "expected LINE, got '" + head + "'");

		std::vector<std::uint32_t> pts;
		std::string tok;
		while (toks >> tok) {
			double x, y;
			char comma = 0, extra = 0;
			std::istringstream pt(tok);
			if (!(pt >> x >> comma >> y) || comma != ',' || (pt >> extra)) {
				fail_line(lineno, "bad coordinate '" + tok + "'");
			}
			auto key = std::make_pair(x, y);
			auto it = index.find(key);
			std::uint32_t v;
			if (it == index.end()) {
				v = static_cast<std::uint32_t>(g.vertices_.size());
				g.vertices_.push_back({x, y});
				index.emplace(key, v);
			} else {
				v = it->second;
			}
			pts.push_back(v);
		}
		if (pts.size() < 2) fail_line(lineno, "polyline needs at least two points");

		for (std::size_t i = 1; i < pts.size(); ++i) {
			std::uint32_t a = pts[i - 1], b = pts[i];
			if (a == b) fail_line(lineno, "zero-length segment");
			if (a > b) std::swap(a, b);
			auto it = edge_index.find({a, b});
			if (it != edge_index.end()) {
				MapEdge& e = g.edges_[it->second];
				e.tag = merge_tags(e.tag, tag);
				continue;
			}
			const MapVertex& va = g.vertices_[a];
			const MapVertex& vb = g.vertices_[b];
			double len = std::hypot(vb.x - va.x, vb.y - va.y);
			edge_index.emplace(std::make_pair(a, b), g.edges_.size());
			g.edges_.push_back({a, b, len, tag});
		}
	}
	if (g.vertices_.empty()) throw MapError("map has no polylines");

	std::vector<std::vector<std::uint32_t>> adj(g.vertices_.size());
	for (const MapEdge& e : g.edges_) {
		adj[e.a].push_back(e.b);
		adj[e.b].push_back(e.a);
	}
	std::vector<bool> present(g.vertices_.size(), true);
	auto sizes = components_of(g.vertices_.size(), adj, present);
	if (sizes.size() > 1) {
		throw MapError("map is disconnected: component sizes " + join_sizes(sizes));
	}
	return g;
}

GraphView::GraphView(const PathGraph& graph, EdgeTag filter) : graph_(&graph)
{
	adj_.resize(graph.vertex_count());
	std::vector<bool> in_view(graph.vertex_count(), false);
	for (std::uint32_t ei = 0; ei < graph.edges().size(); ++ei) {
		const MapEdge& e = graph.edges()[ei];
		bool keep = filter == EdgeTag::both || e.tag == filter || e.tag == EdgeTag::both;
		if (!keep) continue;
		adj_[e.a].emplace_back(e.b, ei);
		adj_[e.b].emplace_back(e.a, ei);
		in_view[e.a] = in_view[e.b] = true;
	}
	for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
	for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
		if (in_view[v]) verts_.push_back(v);
	}
	if (verts_.empty() && graph.vertex_count() > 0) {
		// A view with no edges still allows parked nodes on any vertex.
		for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) verts_.push_back(v);
	}
}

bool GraphView::contains_vertex(std::uint32_t v) const
{
	return std::binary_search(verts_.begin(), verts_.end(), v);
}

std::vector<std::size_t> GraphView::component_sizes() const
{
	std::vector<std::vector<std::uint32_t>> adj(graph_->vertex_count());
	std::vector<bool> present(graph_->vertex_count(), false);
	for (std::uint32_t v : verts_) present[v] = true;
	for (std::uint32_t v = 0; v < adj_.size(); ++v) {
		for (auto [w, ei] : adj_[v]) adj[v].push_back(w);
	}
	return components_of(graph_->vertex_count(), adj, present);
}

std::vector<std::uint32_t> GraphView::shortest_path(std::uint32_t from, std::uint32_t to) const
{
	const std::size_t n = graph_->vertex_count();
	if (from >= n || to >= n) throw std::logic_error("shortest_path: vertex out of range");
	if (from == to) return {from};

	constexpr double kInf = std::numeric_limits<double>::infinity();
	std::vector<double> dist(n, kInf);
	std::vector<std::uint32_t> prev(n, UINT32_MAX);
	// (distance, vertex) min-heap; the vertex component makes pop order,
	// and therefore equal-cost routes, deterministic.
	using Item = std::pair<double, std::uint32_t>;
	std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
	dist[from] = 0;
	pq.emplace(0.0, from);
	while (!pq.empty()) {
		auto [d, u] = pq.top();
		pq.pop();
		if (d > dist[u]) continue;
		if (u == to) break;
		for (auto [v, ei] : adj_[u]) {
			double nd = d + graph_->edges()[ei].length;
			if (nd < dist[v] || (nd == dist[v] && u < prev[v])) {
				dist[v] = nd;
				prev[v] = u;
				pq.emplace(nd, v);
			}
		}
	}
	if (dist[to] == kInf) {
		throw std::logic_error("shortest_path: unreachable vertex pair");
	}
	std::vector<std::uint32_t> path;
	for (std::uint32_t v = to; v != UINT32_MAX; v = prev[v]) path.push_back(v);
	std::reverse(path.begin(), path.end());
	return path;
}

std::uint32_t GraphView::edge_between(std::uint32_t u, std::uint32_t v) const
{
	for (auto [w, ei] : adj_[u]) {
		if (w == v) return ei;
	}
	return kNoEdge;
}

}  // namespace opportunet
