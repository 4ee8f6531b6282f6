#include "vrpath/semimetric.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace vrpath {

void semimetric_matrix::set(size_t i, size_t j, value_t v) {
	if (i >= n || j >= n) throw validation_error("semimetric matrix: index out of range");
	if (i == j) throw validation_error("semimetric matrix: diagonal is implicitly zero");
	if (std::isnan(v) || v < 0) throw validation_error("semimetric matrix: negative distance");
	if (i < j) std::swap(i, j);
	d[i * (i - 1) / 2 + j] = v;
}

std::vector<semimetric_violation> check_semimetric(const semimetric_matrix& m) {
	std::vector<semimetric_violation> out;
	for (size_t i = 1; i < m.size(); ++i)
		for (size_t j = 0; j < i; ++j)
			if (m(i, j) == 0) out.push_back({i, j});
	return out;
}

std::string format_value(value_t v) {
	if (std::isinf(v)) return "inf";
	if (v == std::floor(v) && std::abs(v) < 9.0e15) {
		return std::to_string(static_cast<long long>(v));
	}
	char buf[32];
	auto res = std::to_chars(buf, buf + sizeof(buf), v);
	return std::string(buf, res.ptr);
}

void write_lower_distance_matrix(std::ostream& out, const semimetric_matrix& m) {
	for (size_t i = 1; i < m.size(); ++i) {
		for (size_t j = 0; j < i; ++j) {
			if (j) out << ',';
			out << format_value(m(i, j));
		}
		out << '\n';
	}
}

static value_t parse_token(const std::string& tok, size_t line_no) {
	std::string t;
	for (char c : tok)
		if (!std::isspace(static_cast<unsigned char>(c))) t += c;
	if (t == "inf" || t == "Inf" || t == "INF") return INF;
	try {
		size_t pos = 0;
		value_t v = std::stod(t, &pos);
		if (pos != t.size()) throw std::invalid_argument(t);
		return v;
	} catch (const std::exception&) {
		throw parse_error("lower distance matrix: bad token '" + tok + "' on line " +
		                  std::to_string(line_no));
	}
}

semimetric_matrix read_lower_distance_matrix(std::istream& in) {
	std::vector<std::vector<value_t>> rows;
	std::string line;
	size_t line_no = 0;
	while (std::getline(in, line)) {
		++line_no;
		if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
		std::vector<value_t> row;
		std::stringstream ss(line);
		std::string tok;
		while (std::getline(ss, tok, ',')) row.push_back(parse_token(tok, line_no));
		if (row.size() != rows.size() + 1)
			throw parse_error("lower distance matrix: line " + std::to_string(line_no) +
			                  " has " + std::to_string(row.size()) + " entries, expected " +
			                  std::to_string(rows.size() + 1));
		rows.push_back(std::move(row));
	}
	semimetric_matrix m(rows.size() + 1);
	for (size_t i = 0; i < rows.size(); ++i)
		for (size_t j = 0; j < rows[i].size(); ++j) m.set(i + 1, j, rows[i][j]);
	return m;
}

} // namespace vrpath
