#include "vrpath/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace vrpath {

namespace {

grade_t parse_grade(const nlohmann::json& j, size_t expected_dim) {
	if (!j.is_array() || j.empty())
		throw parse_error("grade must be a non-empty array of numbers");
	grade_t g;
	for (const auto& c : j) {
		if (!c.is_number()) throw parse_error("grade coordinate must be a number");
		g.push_back(c.get<value_t>());
	}
	if (expected_dim && g.size() != expected_dim)
		throw parse_error("grade of dimension " + std::to_string(g.size()) + ", expected " +
		                  std::to_string(expected_dim));
	return g;
}

std::vector<grade_t> parse_grade_list(const nlohmann::json& j, size_t expected_dim) {
	if (!j.is_array()) throw parse_error("expected an array of grades");
	std::vector<grade_t> out;
	for (const auto& g : j) out.push_back(parse_grade(g, expected_dim));
	return out;
}

} // namespace

path_t load_path_json(const nlohmann::json& j) {
	if (!j.is_array() || j.empty()) throw parse_error("path file: expected a non-empty array");
	std::vector<grade_t> steps = parse_grade_list(j, 0);
	for (const grade_t& g : steps)
		if (g.size() != steps.front().size())
			throw parse_error("path file: rows of unequal length");
	return validate_path(steps);
}

path_t load_path_file(const std::string& filename) {
	return load_path_json(load_json_file(filename));
}

point_annotations load_point_annotations(const nlohmann::json& j) {
	if (!j.is_object() || !j.contains("dimension") || !j.contains("points"))
		throw parse_error("point annotations: expected {\"dimension\", \"points\"}");
	point_annotations out;
	out.dimension = j["dimension"].get<size_t>();
	const auto& points = j["points"];
	if (!points.is_array() || points.empty())
		throw parse_error("point annotations: empty point list");
	out.points.resize(points.size());
	std::vector<char> present(points.size(), 0);
	for (const auto& p : points) {
		if (!p.contains("id") || !p.contains("grades"))
			throw parse_error("point annotations: point needs id and grades");
		int64_t id = p["id"].get<int64_t>();
		if (id < 0 || id >= static_cast<int64_t>(points.size()) || present[id])
			throw parse_error("point annotations: ids must be 0..N-1 exactly once");
		present[id] = 1;
		auto grades = parse_grade_list(p["grades"], out.dimension);
		if (grades.empty()) throw parse_error("point annotations: empty grade list for point " +
		                                      std::to_string(id));
		out.points[id] = minimal_elements(grades);
	}
	return out;
}

point_annotations load_point_annotations_file(const std::string& filename) {
	return load_point_annotations(load_json_file(filename));
}

edge_annotations load_edge_annotations(const nlohmann::json& j) {
	if (!j.is_object() || !j.contains("dimension") || !j.contains("edges"))
		throw parse_error("edge annotations: expected {\"dimension\", \"edges\"}");
	size_t dimension = j["dimension"].get<size_t>();
	std::vector<std::pair<vertex_pair_t, std::vector<grade_t>>> edges;
	for (const auto& e : j["edges"]) {
		if (!e.contains("u") || !e.contains("v") || !e.contains("grades"))
			throw parse_error("edge annotations: edge needs u, v and grades");
		index_t u = e["u"].get<index_t>(), v = e["v"].get<index_t>();
		if (u < 0 || v < 0) throw parse_error("edge annotations: negative vertex index");
		edges.emplace_back(vertex_pair_t{u, v}, parse_grade_list(e["grades"], dimension));
	}
	return edge_annotations_from_complex(dimension, edges);
}

edge_annotations load_edge_annotations_file(const std::string& filename) {
	return load_edge_annotations(load_json_file(filename));
}

explicit_complex load_explicit_complex(const nlohmann::json& j) {
	if (!j.is_object() || !j.contains("simplices"))
		throw parse_error("explicit complex: expected {\"simplices\"}");
	std::vector<std::vector<index_t>> simplices;
	for (const auto& s : j["simplices"]) {
		if (!s.is_array() || s.empty())
			throw parse_error("explicit complex: simplices must be non-empty arrays");
		std::vector<index_t> verts;
		for (const auto& v : s) verts.push_back(v.get<index_t>());
		simplices.push_back(std::move(verts));
	}
	return make_complex(std::move(simplices));
}

explicit_complex load_explicit_complex_file(const std::string& filename) {
	return load_explicit_complex(load_json_file(filename));
}

nlohmann::json load_json_file(const std::string& filename) {
	std::ifstream in(filename);
	if (!in) throw parse_error("cannot open file " + filename);
	try {
		return nlohmann::json::parse(in);
	} catch (const nlohmann::json::parse_error& e) {
		throw parse_error(filename + ": " + e.what());
	}
}

std::string read_text_file(const std::string& filename) {
	std::ifstream in(filename, std::ios::binary);
	if (!in) throw parse_error("cannot open file " + filename);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void write_text_output(const std::string& filename, const std::string& content) {
	if (filename == "-") {
		std::cout << content;
		std::cout.flush();
		return;
	}
	std::ofstream out(filename, std::ios::binary);
	if (!out) throw parse_error("cannot open output file " + filename);
	out << content;
}

} // namespace vrpath
