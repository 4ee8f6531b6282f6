#pragma once

#include <vector>

#include "vrpath/semimetric.hpp"

#include "json.hpp"

namespace vrpath {

typedef std::pair<index_t, index_t> edge_t; // vertex indices, normalized u < v

struct bar_t {
	int dim = 0;
	value_t birth = 0;
	value_t death = INF; // INF for essential classes
	std::vector<edge_t> rep; // representative 1-cycle, when requested

	bool finite() const { return death != INF; }
};

bool operator<(const bar_t& a, const bar_t& b);
bool operator==(const bar_t& a, const bar_t& b);

struct barcode_t {
	std::vector<bar_t> bars;

	void sort();
	std::vector<std::pair<value_t, value_t>> intervals(int dim) const;
};

// Integral births/deaths serialize as JSON integers; death null for inf.
// dim0_authoritative = false adds "authoritative": false to every dim-0 bar
// (the transformation is not trusted in degree 0).
nlohmann::json barcode_to_json(const barcode_t& bc, bool dim0_authoritative = true);

} // namespace vrpath
