#include "doctest.h"

#include "test_util.hpp"
#include "vrpath/multifilt.hpp"

using namespace vrpath;
using testutil::rng_t;

namespace {

point_annotations uniform_points(size_t n, const std::vector<grade_t>& entry) {
	point_annotations k;
	k.dimension = entry.front().size();
	k.points.assign(n, minimal_elements(entry));
	return k;
}

} // namespace

TEST_CASE("point_entry follows the time components of the path") {
	path_t nu = validate_path({{1, 9}, {2, 9}, {3, 9}});
	CHECK(point_entry(minimal_elements({{3}}), nu) == 3);
	CHECK(point_entry(minimal_elements({{1}}), nu) == 1);
	CHECK(!point_entry(minimal_elements({{5}}), nu));
}

TEST_CASE("build_pathwise_edges applies Hamming gating at the scale coordinate") {
	path_t nu = validate_path({{1, 1}, {2, 2}});
	point_annotations k = uniform_points(2, {{1}});
	semimetric_matrix h(2);

	h.set(1, 0, 1);
	auto l = build_pathwise_edges(h, k, nu);
	REQUIRE(l.entries.size() == 1);
	CHECK(l.entries.at({0, 1}) == 1);

	h.set(1, 0, 2);
	l = build_pathwise_edges(h, k, nu);
	CHECK(l.entries.at({0, 1}) == 2);

	h.set(1, 0, INF);
	l = build_pathwise_edges(h, k, nu);
	CHECK(l.entries.empty());
}

TEST_CASE("build_pathwise_edges omits points that never enter") {
	path_t nu = validate_path({{1, 5}, {2, 5}});
	point_annotations k = uniform_points(3, {{1}});
	k.points[2] = minimal_elements({{9}});
	semimetric_matrix h(3, 1);
	auto l = build_pathwise_edges(h, k, nu);
	REQUIRE(l.entries.size() == 1);
	CHECK(l.entries.count({0, 1}) == 1);
}

TEST_CASE("build_pathwise_edges waits for the later endpoint") {
	path_t nu = validate_path({{1, 5}, {2, 5}, {3, 5}});
	point_annotations k = uniform_points(2, {{1}});
	k.points[1] = minimal_elements({{3}});
	semimetric_matrix h(2, 1);
	CHECK(build_pathwise_edges(h, k, nu).entries.at({0, 1}) == 3);
}

TEST_CASE("edge_annotations_from_complex keeps minimal grades and merges duplicates") {
	auto l = edge_annotations_from_complex(2, {{{0, 1}, {{1, 2}, {2, 1}, {2, 2}}}});
	CHECK(l.edges.at({0, 1}).elements == std::vector<grade_t>{{1, 2}, {2, 1}});

	l = edge_annotations_from_complex(2, {{{1, 0}, {{1, 1}}}});
	CHECK(l.edges.at({0, 1}).elements == std::vector<grade_t>{{1, 1}});

	l = edge_annotations_from_complex(2, {{{0, 1}, {{2, 2}}}, {{1, 0}, {{1, 1}}}});
	CHECK(l.edges.at({0, 1}).elements == std::vector<grade_t>{{1, 1}});

	CHECK_THROWS_AS(edge_annotations_from_complex(2, {{{0, 0}, {{1, 1}}}}), validation_error);
	CHECK_THROWS_AS(edge_annotations_from_complex(2, {{{0, 1}, {}}}), validation_error);
	CHECK_THROWS_AS(edge_annotations_from_complex(2, {{{0, 1}, {{1}}}}), validation_error);
}

TEST_CASE("entry condition is monotone along the path") {
	rng_t rng(21);
	for (int trial = 0; trial < 40; ++trial) {
		size_t n = 2 + rng.below(6);
		path_t nu = testutil::random_monotone_path(rng, 2, 4, 4);
		point_annotations k;
		k.dimension = 1;
		for (size_t i = 0; i < n; ++i)
			k.points.push_back(minimal_elements({testutil::random_grade(rng, 1, 4)}));
		semimetric_matrix h(n);
		for (size_t i = 1; i < n; ++i)
			for (size_t j = 0; j < i; ++j)
				h.set(i, j, rng.below(5) == 0 ? INF : static_cast<value_t>(rng.range(1, 4)));

		auto l = build_pathwise_edges(h, k, nu);
		for (const auto& [key, step] : l.entries) {
			auto a = point_entry(k.points[key.first], nu);
			auto b = point_entry(k.points[key.second], nu);
			REQUIRE(a);
			REQUIRE(b);
			CHECK(step >= std::max(*a, *b));
			for (index_t later = step; later <= static_cast<index_t>(nu.length()); ++later)
				CHECK(h(key.first, key.second) <= nu.steps[later - 1].back());
		}
	}
}

TEST_CASE("pathwise edges agree with the product-poset annotation") {
	rng_t rng(22);
	for (int trial = 0; trial < 60; ++trial) {
		size_t n = 2 + rng.below(7);
		path_t nu = testutil::random_monotone_path(rng, 2, 4, 4);
		point_annotations k;
		k.dimension = 1;
		for (size_t i = 0; i < n; ++i) {
			std::vector<grade_t> grades;
			size_t count = 1 + rng.below(3);
			for (size_t g = 0; g < count; ++g) grades.push_back(testutil::random_grade(rng, 1, 4));
			k.points.push_back(minimal_elements(grades));
		}
		semimetric_matrix h(n);
		for (size_t i = 1; i < n; ++i)
			for (size_t j = 0; j < i; ++j)
				h.set(i, j, rng.below(6) == 0 ? INF : static_cast<value_t>(rng.range(1, 4)));

		auto l = build_pathwise_edges(h, k, nu);
		for (size_t i = 1; i < n; ++i)
			for (size_t j = 0; j < i; ++j) {
				// product-poset annotation of the pair: (join of time grades, distance)
				std::vector<grade_t> product;
				if (h(i, j) != INF)
					for (const grade_t& u : k.points[i].elements)
						for (const grade_t& w : k.points[j].elements) {
							grade_t g = join(u, w);
							g.push_back(h(i, j));
							product.push_back(g);
						}
				std::optional<index_t> expected;
				if (!product.empty())
					expected = first_reachable_step(minimal_elements(product), nu);
				auto it = l.entries.find({static_cast<index_t>(j), static_cast<index_t>(i)});
				if (expected) {
					REQUIRE(it != l.entries.end());
					CHECK(it->second == *expected);
				} else {
					CHECK(it == l.entries.end());
				}
			}
	}
}

TEST_CASE("build_pathwise_edges validates sizes") {
	path_t nu = validate_path({{1, 1}});
	semimetric_matrix h(3, 1);
	CHECK_THROWS_AS(build_pathwise_edges(h, uniform_points(2, {{1}}), nu), validation_error);
}
