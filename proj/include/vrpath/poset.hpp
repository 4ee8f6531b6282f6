#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vrpath/errors.hpp"

namespace vrpath {

typedef double value_t;
typedef int64_t index_t;

// A point of a finite subposet of R^n, compared componentwise.
typedef std::vector<value_t> grade_t;

bool leq(const grade_t& a, const grade_t& b);
bool strictly_less(const grade_t& a, const grade_t& b);

// Componentwise maximum.
grade_t join(const grade_t& a, const grade_t& b);

// Pairwise incomparable grades, kept sorted lexicographically.
struct antichain_t {
	std::vector<grade_t> elements;

	bool empty() const { return elements.empty(); }
	size_t dimension() const { return elements.empty() ? 0 : elements.front().size(); }
	bool operator==(const antichain_t& other) const { return elements == other.elements; }
};

// The elements of the input not strictly dominated by any other element.
antichain_t minimal_elements(const std::vector<grade_t>& grades);

// A monotone stabilizing sequence nu_1 <= ... <= nu_m, stored explicitly.
struct path_t {
	std::vector<grade_t> steps;

	size_t length() const { return steps.size(); }
	size_t dimension() const { return steps.empty() ? 0 : steps.front().size(); }
};

// Throws validation_error naming the first violating index pair.
path_t validate_path(const std::vector<grade_t>& raw);

// Smallest 1-based step index k such that some q in the antichain satisfies
// q <= nu_k, i.e. the minimal intersection of the upper set of q with the path.
std::optional<index_t> first_reachable_step(const antichain_t& q, const path_t& nu);

} // namespace vrpath
