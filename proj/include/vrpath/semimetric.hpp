#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "vrpath/poset.hpp"

namespace vrpath {

constexpr value_t INF = std::numeric_limits<value_t>::infinity();

// Lower-triangular pairwise distances in [0, inf], implicit zero diagonal.
// Symmetric by construction; the triangle inequality is not assumed.
class semimetric_matrix {
	size_t n;
	std::vector<value_t> d; // entry (i, j) with i > j at i*(i-1)/2 + j

public:
	explicit semimetric_matrix(size_t n_points, value_t fill = INF)
	    : n(n_points), d(n_points * (n_points - 1) / 2, fill) {
		if (n_points == 0) throw validation_error("semimetric matrix: zero points");
	}

	size_t size() const { return n; }

	value_t operator()(size_t i, size_t j) const {
		if (i == j) return 0;
		if (i < j) std::swap(i, j);
		return d[i * (i - 1) / 2 + j];
	}

	void set(size_t i, size_t j, value_t v);

	bool operator==(const semimetric_matrix& other) const {
		return n == other.n && d == other.d;
	}
};

struct semimetric_violation {
	size_t i, j;
};

// Diagnostic: reports every off-diagonal zero.
std::vector<semimetric_violation> check_semimetric(const semimetric_matrix& m);

// "inf" for infinity, integral values without decimal point, shortest
// round-trip otherwise.
std::string format_value(value_t v);

// N-1 lines, line i (vertex i = 1..N-1) holds i comma-separated tokens.
void write_lower_distance_matrix(std::ostream& out, const semimetric_matrix& m);
semimetric_matrix read_lower_distance_matrix(std::istream& in);

} // namespace vrpath
