#include "vrpath/pathwise.hpp"

#include <algorithm>
#include <cmath>

namespace vrpath {

pathwise_result pathwise_barcode(const edge_annotations& l, size_t n_points, const path_t& nu,
                                 int max_dim, bool with_reps, size_t simplex_cap) {
	if (max_dim < 1) throw validation_error("pathwise_barcode: max_dim must be >= 1");
	semimetric_matrix d = vr_transform(l, nu, n_points);
	engine_options opts;
	opts.max_dim = max_dim;
	opts.threshold = static_cast<value_t>(nu.length());
	opts.with_reps = with_reps;
	opts.simplex_cap = simplex_cap;
	return {nu, vr_barcode(d, opts)};
}

nlohmann::json pathwise_to_json(const pathwise_result& r) {
	nlohmann::json out = barcode_to_json(r.barcode, /*dim0_authoritative=*/false);
	nlohmann::json steps = nlohmann::json::array();
	for (const grade_t& g : r.path.steps) {
		nlohmann::json step = nlohmann::json::array();
		for (value_t v : g) {
			if (v == std::floor(v) && std::abs(v) < 9.0e15)
				step.push_back(static_cast<int64_t>(v));
			else
				step.push_back(v);
		}
		steps.push_back(step);
	}
	out["steps"] = steps;
	return out;
}

uint64_t rank_invariant(const edge_annotations& l, size_t n_points, const grade_t& v,
                        const grade_t& w, int ell, size_t simplex_cap) {
	if (ell < 1) throw validation_error("rank_invariant: degree 0 is unsupported");
	if (!leq(v, w)) throw validation_error("IncomparablePair: v is not <= w");
	path_t nu = validate_path({v, w});
	pathwise_result r = pathwise_barcode(l, n_points, nu, ell, false, simplex_cap);
	uint64_t rank = 0;
	for (const bar_t& bar : r.barcode.bars)
		if (bar.dim == ell && bar.birth == 1 && (bar.death == INF || bar.death > 2)) ++rank;
	return rank;
}

std::map<std::pair<grade_t, grade_t>, uint64_t>
rank_invariant_table(const edge_annotations& l, size_t n_points,
                     const std::vector<grade_t>& sample, int ell, size_t simplex_cap) {
	std::vector<grade_t> grades = sample;
	std::sort(grades.begin(), grades.end());
	grades.erase(std::unique(grades.begin(), grades.end()), grades.end());
	std::map<std::pair<grade_t, grade_t>, uint64_t> out;
	for (const grade_t& v : grades)
		for (const grade_t& w : grades)
			if (leq(v, w)) out[{v, w}] = rank_invariant(l, n_points, v, w, ell, simplex_cap);
	return out;
}

} // namespace vrpath
