#include "vrpath/transform.hpp"

#include "vrpath/parallel.hpp"

namespace vrpath {

static void check_indices(const vertex_pair_t& key, size_t n_points) {
	if (key.first < 0 || key.second >= static_cast<index_t>(n_points))
		throw validation_error("edge {" + std::to_string(key.first) + "," +
		                       std::to_string(key.second) + "}: vertex index out of range for " +
		                       std::to_string(n_points) + " points");
}

semimetric_matrix vr_transform(const edge_annotations& l, const path_t& nu, size_t n_points) {
	semimetric_matrix d(n_points, INF);
	std::vector<std::pair<vertex_pair_t, const antichain_t*>> items;
	items.reserve(l.edges.size());
	for (const auto& [key, chain] : l.edges) {
		check_indices(key, n_points);
		items.emplace_back(key, &chain);
	}
	std::vector<index_t> steps(items.size(), 0);
	parallel_for(items.size(), [&](size_t idx) {
		if (auto k = first_reachable_step(*items[idx].second, nu)) steps[idx] = *k;
	});
	for (size_t idx = 0; idx < items.size(); ++idx)
		if (steps[idx] > 0)
			d.set(items[idx].first.second, items[idx].first.first,
			      static_cast<value_t>(steps[idx]));
	return d;
}

semimetric_matrix vr_transform(const pathwise_edge_list& l, size_t n_points) {
	semimetric_matrix d(n_points, INF);
	for (const auto& [key, step] : l.entries) {
		check_indices(key, n_points);
		if (step < 1 || step > static_cast<index_t>(l.path_length))
			throw validation_error("pathwise edge list: step index out of range");
		d.set(key.second, key.first, static_cast<value_t>(step));
	}
	return d;
}

} // namespace vrpath
