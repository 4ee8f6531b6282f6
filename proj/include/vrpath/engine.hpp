#pragma once

#include <cstdint>
#include <vector>

#include "vrpath/barcode.hpp"
#include "vrpath/semimetric.hpp"

namespace vrpath {

// Clique of the distance graph with its diameter as filtration value.
struct filtration_simplex {
	value_t value = 0; // max pairwise distance among vertices, 0 for vertices
	std::vector<index_t> vertices; // sorted
};

struct engine_options {
	int max_dim = 1;
	value_t threshold = INF;
	bool with_reps = false;
	size_t simplex_cap = 100000000; // clique explosion guard
};

// Vietoris-Rips persistence barcode of a finite semimetric space over F2.
// Dimension 0 by union-find; dimensions >= 1 by column reduction of the
// boundary matrix with clearing. Zero-length bars are dropped. Deterministic:
// filtration ties broken by (value, dimension, lexicographic vertices).
barcode_t vr_barcode(const semimetric_matrix& d, const engine_options& opts);

// All cliques of size <= max_dim + 1 with finite diameter <= threshold,
// in filtration order.
std::vector<filtration_simplex> enumerate_cliques(const semimetric_matrix& d, int max_dim,
                                                  value_t threshold, size_t simplex_cap);

// Exhaustive reduction: repeatedly replaces the latest edge (in filtration
// order) of the cycle by the two other edges of an earlier triangle, while
// possible. The result is homologous via triangles present at the cycle's
// birth scale; its maximum edge value never increases; idempotent.
std::vector<edge_t> tighten_representative(std::vector<edge_t> cycle, const semimetric_matrix& d);

// Dimension-1 bars born at value 1, computed at threshold 2, each with a
// representative consisting of unit edges only.
barcode_t snv_bars(const semimetric_matrix& d, size_t simplex_cap = 100000000);

} // namespace vrpath
