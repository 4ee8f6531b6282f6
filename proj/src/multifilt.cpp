#include "vrpath/multifilt.hpp"

#include <mutex>

#include "vrpath/parallel.hpp"

namespace vrpath {

std::optional<index_t> point_entry(const antichain_t& k_x, const path_t& nu) {
	if (nu.dimension() < 2)
		throw validation_error("point_entry: path steps must carry time and scale components");
	const size_t time_dim = nu.dimension() - 1;
	if (!k_x.empty() && k_x.dimension() != time_dim)
		throw validation_error("point_entry: annotation dimension " +
		                       std::to_string(k_x.dimension()) + " does not match time dimension " +
		                       std::to_string(time_dim));
	for (size_t k = 0; k < nu.steps.size(); ++k) {
		const grade_t& step = nu.steps[k];
		for (const grade_t& u : k_x.elements) {
			bool dominated = true;
			for (size_t c = 0; c < time_dim; ++c)
				if (u[c] > step[c]) {
					dominated = false;
					break;
				}
			if (dominated) return static_cast<index_t>(k + 1);
		}
	}
	return std::nullopt;
}

pathwise_edge_list build_pathwise_edges(const semimetric_matrix& h, const point_annotations& k,
                                        const path_t& nu) {
	const size_t n = h.size();
	if (k.size() != n)
		throw validation_error("build_pathwise_edges: matrix has " + std::to_string(n) +
		                       " points but annotations cover " + std::to_string(k.size()));
	const size_t m = nu.length();

	std::vector<std::optional<index_t>> entry(n);
	for (size_t i = 0; i < n; ++i) entry[i] = point_entry(k.points[i], nu);

	// Pairs are independent; each writes only its own slot.
	std::vector<index_t> step_of(n * (n - 1) / 2, 0);
	parallel_for(n, [&](size_t i) {
		if (i == 0 || !entry[i]) return;
		for (size_t j = 0; j < i; ++j) {
			if (!entry[j]) continue;
			value_t dist = h(i, j);
			index_t start = std::max(*entry[i], *entry[j]);
			for (index_t step = start; step <= static_cast<index_t>(m); ++step) {
				if (dist <= nu.steps[step - 1].back()) {
					step_of[i * (i - 1) / 2 + j] = step;
					break;
				}
			}
		}
	});

	pathwise_edge_list out;
	out.path_length = m;
	for (size_t i = 1; i < n; ++i)
		for (size_t j = 0; j < i; ++j) {
			index_t step = step_of[i * (i - 1) / 2 + j];
			if (step > 0)
				out.entries.emplace(make_pair_key(static_cast<index_t>(j), static_cast<index_t>(i)),
				                    step);
		}
	return out;
}

edge_annotations edge_annotations_from_complex(
    size_t dimension, const std::vector<std::pair<vertex_pair_t, std::vector<grade_t>>>& edges) {
	edge_annotations out;
	out.dimension = dimension;
	for (const auto& [pair, grades] : edges) {
		vertex_pair_t key = make_pair_key(pair.first, pair.second);
		if (grades.empty())
			throw validation_error("edge {" + std::to_string(key.first) + "," +
			                       std::to_string(key.second) + "}: empty grade list");
		for (const grade_t& g : grades)
			if (g.size() != dimension)
				throw validation_error("edge {" + std::to_string(key.first) + "," +
				                       std::to_string(key.second) + "}: grade of wrong dimension");
		auto it = out.edges.find(key);
		if (it == out.edges.end()) {
			out.edges.emplace(key, minimal_elements(grades));
		} else {
			std::vector<grade_t> merged = it->second.elements;
			merged.insert(merged.end(), grades.begin(), grades.end());
			it->second = minimal_elements(merged);
		}
	}
	return out;
}

} // namespace vrpath
