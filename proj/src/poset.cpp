#include "vrpath/poset.hpp"

#include <algorithm>
#include <cmath>

namespace vrpath {

static void check_same_dimension(const grade_t& a, const grade_t& b) {
	if (a.size() != b.size())
		throw validation_error("grade dimension mismatch: " + std::to_string(a.size()) + " vs " +
		                       std::to_string(b.size()));
}

bool leq(const grade_t& a, const grade_t& b) {
	check_same_dimension(a, b);
	for (size_t i = 0; i < a.size(); ++i)
		if (a[i] > b[i]) return false;
	return true;
}

bool strictly_less(const grade_t& a, const grade_t& b) { return leq(a, b) && a != b; }

grade_t join(const grade_t& a, const grade_t& b) {
	check_same_dimension(a, b);
	grade_t out(a.size());
	for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
	return out;
}

antichain_t minimal_elements(const std::vector<grade_t>& grades) {
	if (grades.empty()) throw validation_error("minimal_elements: empty input");
	std::vector<grade_t> sorted = grades;
	std::sort(sorted.begin(), sorted.end());
	sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
	antichain_t out;
	for (const grade_t& g : sorted) {
		bool dominated = false;
		for (const grade_t& h : sorted)
			if (h != g && leq(h, g)) {
				dominated = true;
				break;
			}
		if (!dominated) out.elements.push_back(g);
	}
	return out;
}

path_t validate_path(const std::vector<grade_t>& raw) {
	if (raw.empty()) throw validation_error("path: empty sequence");
	for (const grade_t& g : raw) {
		if (g.size() != raw.front().size())
			throw validation_error("path: steps of mixed dimension");
		for (value_t v : g)
			if (!std::isfinite(v)) throw validation_error("path: non-finite coordinate");
	}
	for (size_t k = 0; k + 1 < raw.size(); ++k)
		if (!leq(raw[k], raw[k + 1]))
			throw validation_error("non-monotone path at steps " + std::to_string(k + 1) + "," +
			                       std::to_string(k + 2));
	return path_t{raw};
}

std::optional<index_t> first_reachable_step(const antichain_t& q, const path_t& nu) {
	// Monotonicity of the path makes the first qualifying step minimal overall.
	for (size_t k = 0; k < nu.steps.size(); ++k)
		for (const grade_t& g : q.elements)
			if (leq(g, nu.steps[k])) return static_cast<index_t>(k + 1);
	return std::nullopt;
}

} // namespace vrpath
