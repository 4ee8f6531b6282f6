#include "doctest.h"

#include "test_util.hpp"
#include "vrpath/oracle.hpp"

using namespace vrpath;
using testutil::rng_t;

namespace {

explicit_complex hollow_triangle() {
	return make_complex({{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}});
}

explicit_complex full_triangle() {
	return make_complex({{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
}

explicit_complex hollow_square() {
	return make_complex({{0}, {1}, {2}, {3}, {0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

} // namespace

TEST_CASE("make_complex sorts, deduplicates and validates closure") {
	explicit_complex x = make_complex({{1, 0}, {0}, {1}, {0, 1}});
	CHECK(x.simplices.size() == 3);
	CHECK(x.contains({0, 1}));
	CHECK(!x.contains({1, 2}));
	CHECK_THROWS_AS(make_complex({{0, 1}}), validation_error); // vertices missing
}

TEST_CASE("betti on the canonical small complexes") {
	CHECK(oracle_betti(hollow_triangle(), 1) == 1);
	CHECK(oracle_betti(hollow_triangle(), 0) == 1);
	CHECK(oracle_betti(full_triangle(), 1) == 0);
	CHECK(oracle_betti(make_complex({{0}, {1}}), 0) == 2);
	CHECK(oracle_betti(hollow_square(), 1) == 1);
}

TEST_CASE("inclusion_rank of the induced map") {
	CHECK(inclusion_rank(hollow_triangle(), hollow_triangle(), 1) == 1);
	CHECK(inclusion_rank(hollow_triangle(), full_triangle(), 1) == 0);

	explicit_complex square = hollow_square();
	explicit_complex with_pendant =
	    make_complex({{0}, {1}, {2}, {3}, {4}, {0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}});
	CHECK(inclusion_rank(square, with_pendant, 1) == 1);

	CHECK_THROWS_AS(inclusion_rank(full_triangle(), hollow_triangle(), 1), validation_error);
}

TEST_CASE("barcode_from_filtration recovers one-parameter bars") {
	std::vector<explicit_complex> constant{hollow_square(), hollow_square(), hollow_square()};
	CHECK(barcode_from_filtration(constant, 1) == std::vector<oracle_bar>{{1, -1}});

	explicit_complex filled = make_complex({{0}, {1}, {2}, {3}, {0, 1}, {1, 2}, {2, 3}, {0, 3},
	                                        {0, 2}, {0, 1, 2}, {0, 2, 3}});
	CHECK(barcode_from_filtration({hollow_square(), filled}, 1) ==
	      std::vector<oracle_bar>{{1, 2}});

	explicit_complex lone = make_complex({{0}});
	CHECK(barcode_from_filtration({lone, lone}, 1).empty());

	CHECK_THROWS_AS(barcode_from_filtration({full_triangle(), hollow_triangle()}, 1),
	                validation_error);
}

TEST_CASE("bars reproduce the rank function") {
	rng_t rng(41);
	for (int trial = 0; trial < 25; ++trial) {
		size_t n = 3 + rng.below(5);
		std::set<std::pair<index_t, index_t>> edges;
		std::vector<explicit_complex> chain;
		for (int step = 0; step < 3; ++step) {
			for (size_t i = 0; i < n; ++i)
				for (size_t j = i + 1; j < n; ++j)
					if (rng.below(4) == 0)
						edges.insert({static_cast<index_t>(i), static_cast<index_t>(j)});
			chain.push_back(oracle_clique_complex(n, edges, 2));
		}
		auto bars = barcode_from_filtration(chain, 1);
		for (size_t i = 1; i <= chain.size(); ++i)
			for (size_t j = i; j <= chain.size(); ++j) {
				size_t alive = 0;
				for (const oracle_bar& b : bars)
					if (b.birth <= static_cast<index_t>(i) &&
					    (b.death == -1 || b.death > static_cast<index_t>(j)))
						++alive;
				CHECK(alive == inclusion_rank(chain[i - 1], chain[j - 1], 1));
			}
	}
}

TEST_CASE("betti agrees with the Euler characteristic") {
	rng_t rng(42);
	for (int trial = 0; trial < 15; ++trial) {
		size_t n = 3 + rng.below(4);
		std::set<std::pair<index_t, index_t>> edges;
		for (size_t i = 0; i < n; ++i)
			for (size_t j = i + 1; j < n; ++j)
				if (rng.below(2) == 0) edges.insert({static_cast<index_t>(i), static_cast<index_t>(j)});
		explicit_complex x = oracle_clique_complex(n, edges, static_cast<int>(n) - 1);
		long chi_simplices = 0, chi_betti = 0;
		for (int ell = 0; ell < static_cast<int>(n); ++ell) {
			long sign = ell % 2 == 0 ? 1 : -1;
			chi_simplices += sign * static_cast<long>(x.count_dim(ell));
			chi_betti += sign * static_cast<long>(oracle_betti(x, ell));
		}
		CHECK(chi_simplices == chi_betti);
	}
}

TEST_CASE("oracle_clique_complex fills every clique") {
	std::set<std::pair<index_t, index_t>> triangle{{0, 1}, {0, 2}, {1, 2}};
	explicit_complex x = oracle_clique_complex(3, triangle, 2);
	CHECK(x.contains({0, 1, 2}));
	CHECK(x.count_dim(0) == 3);
	CHECK(x.count_dim(1) == 3);
	CHECK(x.count_dim(2) == 1);
	CHECK(oracle_clique_complex(3, triangle, 1).count_dim(2) == 0);
}
