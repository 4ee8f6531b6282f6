#pragma once

#include <map>
#include <utility>

#include "vrpath/poset.hpp"
#include "vrpath/semimetric.hpp"

namespace vrpath {

typedef std::pair<index_t, index_t> vertex_pair_t; // normalized u < v

inline vertex_pair_t make_pair_key(index_t u, index_t v) {
	if (u == v) throw validation_error("edge with identical endpoints " + std::to_string(u));
	return u < v ? vertex_pair_t{u, v} : vertex_pair_t{v, u};
}

// Per-point antichains of minimal entry grades over the time poset T.
struct point_annotations {
	size_t dimension = 0; // dimension of T
	std::vector<antichain_t> points;

	size_t size() const { return points.size(); }
};

// Sparse map edge -> antichain of minimal entry grades over P.
// Absent pairs are never edges.
struct edge_annotations {
	size_t dimension = 0; // dimension of P
	std::map<vertex_pair_t, antichain_t> edges;
};

// The edge annotation list restricted to a path: each edge mapped to the
// 1-based step index at which it first enters along the path.
struct pathwise_edge_list {
	size_t path_length = 0;
	std::map<vertex_pair_t, index_t> entries;
};

// Smallest path step whose time components dominate some element of the
// point's entry annotation; nullopt if the point never enters along nu.
// Path steps are (t_1..t_n, r); the trailing coordinate is the scale.
std::optional<index_t> point_entry(const antichain_t& k_x, const path_t& nu);

// The data-preparation stage: pair (i, j) with point entries a, b enters at
// the smallest step k >= max(a, b) whose scale r_k dominates H_ij. Pairs
// whose points never enter, or whose distance is never reached, are omitted.
pathwise_edge_list build_pathwise_edges(const semimetric_matrix& h, const point_annotations& k,
                                        const path_t& nu);

// File-driven construction for explicitly given complexes.
edge_annotations edge_annotations_from_complex(
    size_t dimension, const std::vector<std::pair<vertex_pair_t, std::vector<grade_t>>>& edges);

} // namespace vrpath
