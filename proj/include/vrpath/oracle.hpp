#pragma once

#include <set>
#include <vector>

#include "vrpath/poset.hpp"

namespace vrpath {

// Brute-force ground truth for small instances: dense F2 linear algebra,
// no shared code paths with the persistence engine.

// Simplices as sorted vertex tuples, closed under subsets.
struct explicit_complex {
	std::vector<std::vector<index_t>> simplices;

	size_t count_dim(int dim) const;
	bool contains(const std::vector<index_t>& s) const;
	bool subcomplex_of(const explicit_complex& other) const;
};

explicit_complex make_complex(std::vector<std::vector<index_t>> simplices);
void validate_closure(const explicit_complex& x);

// Clique complex of an explicit edge set on vertices 0..n-1, truncated at
// max_simplex_dim. Enumeration by subset scan, independent of the engine.
explicit_complex oracle_clique_complex(size_t n_vertices, const std::set<std::pair<index_t, index_t>>& edges,
                                       int max_simplex_dim);

// dim over F2 of ker d_l / im d_{l+1}.
size_t oracle_betti(const explicit_complex& x, int ell);

// Rank over F2 of H_l(sub) -> H_l(sup) induced by inclusion.
size_t inclusion_rank(const explicit_complex& sub, const explicit_complex& sup, int ell);

struct oracle_bar {
	index_t birth; // 1-based step
	index_t death; // 1-based step, or -1 for infinity

	auto operator<=>(const oracle_bar&) const = default;
};

// Bar multiplicities by inclusion-exclusion on the rank function of the
// filtration chain X_1 subset ... subset X_m.
std::vector<oracle_bar> barcode_from_filtration(const std::vector<explicit_complex>& chain,
                                                int ell);

} // namespace vrpath
