#pragma once

#include <map>

#include "vrpath/engine.hpp"
#include "vrpath/multifilt.hpp"
#include "vrpath/transform.hpp"

namespace vrpath {

// Barcode along a path, births/deaths as 1-based path step indices.
// Dimension 0 is emitted but not authoritative: the transformation keeps
// every vertex alive from scale 0 even when it is absent from the subcomplex.
struct pathwise_result {
	path_t path;
	barcode_t barcode;
};

pathwise_result pathwise_barcode(const edge_annotations& l, size_t n_points, const path_t& nu,
                                 int max_dim, bool with_reps = false,
                                 size_t simplex_cap = 100000000);

nlohmann::json pathwise_to_json(const pathwise_result& r);

// Number of bars along the two-step path (v <= w) in dimension ell that
// contain both steps; equals the rank of H_ell(X_v) -> H_ell(X_w).
uint64_t rank_invariant(const edge_annotations& l, size_t n_points, const grade_t& v,
                        const grade_t& w, int ell, size_t simplex_cap = 100000000);

// rank_invariant over every comparable pair of the sample.
std::map<std::pair<grade_t, grade_t>, uint64_t>
rank_invariant_table(const edge_annotations& l, size_t n_points,
                     const std::vector<grade_t>& sample, int ell,
                     size_t simplex_cap = 100000000);

} // namespace vrpath
