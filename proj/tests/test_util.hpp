#pragma once

#include <algorithm>
#include <random>
#include <set>

#include "vrpath/multifilt.hpp"
#include "vrpath/oracle.hpp"
#include "vrpath/pathwise.hpp"

namespace testutil {

using namespace vrpath;

struct rng_t {
	std::mt19937_64 gen;

	explicit rng_t(uint64_t seed) : gen(seed) {}
	uint64_t below(uint64_t k) { return gen() % k; }
	// uniform in [lo, hi]
	int64_t range(int64_t lo, int64_t hi) { return lo + static_cast<int64_t>(below(hi - lo + 1)); }
};

inline grade_t random_grade(rng_t& rng, size_t dim, int max_coord) {
	grade_t g(dim);
	for (auto& c : g) c = static_cast<value_t>(rng.range(1, max_coord));
	return g;
}

// Random edge set over n vertices with random minimal entry antichains
// over the grid {1..max_coord}^dim.
inline edge_annotations random_edge_annotations(rng_t& rng, size_t n, size_t dim, int max_coord,
                                                int edge_percent = 60) {
	std::vector<std::pair<vertex_pair_t, std::vector<grade_t>>> edges;
	for (index_t i = 0; i < static_cast<index_t>(n); ++i)
		for (index_t j = i + 1; j < static_cast<index_t>(n); ++j) {
			if (rng.below(100) >= static_cast<uint64_t>(edge_percent)) continue;
			std::vector<grade_t> grades;
			size_t count = 1 + rng.below(3);
			for (size_t g = 0; g < count; ++g) grades.push_back(random_grade(rng, dim, max_coord));
			edges.emplace_back(vertex_pair_t{i, j}, grades);
		}
	return edge_annotations_from_complex(dim, edges);
}

inline path_t random_monotone_path(rng_t& rng, size_t dim, size_t max_len, int max_coord) {
	size_t len = 1 + rng.below(max_len);
	std::vector<grade_t> steps;
	grade_t cur = random_grade(rng, dim, max_coord);
	steps.push_back(cur);
	for (size_t k = 1; k < len; ++k) {
		for (auto& c : cur) c = std::min<value_t>(max_coord, c + static_cast<value_t>(rng.below(3)));
		steps.push_back(cur);
	}
	return validate_path(steps);
}

// Explicit flag complex at a single grade, all n vertices present.
inline explicit_complex complex_at(const edge_annotations& l, size_t n, const grade_t& v,
                                   int max_simplex_dim) {
	std::set<std::pair<index_t, index_t>> edges;
	for (const auto& [key, chain] : l.edges)
		for (const grade_t& g : chain.elements)
			if (leq(g, v)) {
				edges.insert(key);
				break;
			}
	return oracle_clique_complex(n, edges, max_simplex_dim);
}

// Engine bars of one dimension as (birth step, death step or -1), multiset.
inline std::vector<oracle_bar> engine_bars_as_steps(const barcode_t& bc, int dim) {
	std::vector<oracle_bar> out;
	for (const bar_t& b : bc.bars)
		if (b.dim == dim)
			out.push_back({static_cast<index_t>(b.birth),
			               b.death == INF ? index_t{-1} : static_cast<index_t>(b.death)});
	std::sort(out.begin(), out.end());
	return out;
}

inline std::vector<oracle_bar> oracle_pathwise_bars(const edge_annotations& l, size_t n,
                                                    const path_t& nu, int ell) {
	std::vector<explicit_complex> chain;
	for (const grade_t& step : nu.steps) chain.push_back(complex_at(l, n, step, ell + 1));
	return barcode_from_filtration(chain, ell);
}

// Independent VR barcode on the value scale: filtration over {0} + the sorted
// distinct finite distances, oracle bars mapped back to values.
inline std::vector<std::pair<value_t, value_t>> oracle_vr_intervals(const semimetric_matrix& d,
                                                                    int ell) {
	std::vector<value_t> grid{0};
	for (size_t i = 1; i < d.size(); ++i)
		for (size_t j = 0; j < i; ++j)
			if (d(i, j) != INF) grid.push_back(d(i, j));
	std::sort(grid.begin(), grid.end());
	grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

	std::vector<explicit_complex> chain;
	std::set<std::pair<index_t, index_t>> edges;
	for (value_t r : grid) {
		for (size_t i = 1; i < d.size(); ++i)
			for (size_t j = 0; j < i; ++j)
				if (d(i, j) <= r) edges.insert({static_cast<index_t>(j), static_cast<index_t>(i)});
		chain.push_back(oracle_clique_complex(d.size(), edges, ell + 1));
	}
	std::vector<std::pair<value_t, value_t>> out;
	for (const oracle_bar& b : barcode_from_filtration(chain, ell))
		out.emplace_back(grid[b.birth - 1], b.death == -1 ? INF : grid[b.death - 1]);
	std::sort(out.begin(), out.end());
	return out;
}

} // namespace testutil
