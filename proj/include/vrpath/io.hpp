#pragma once

#include <string>

#include "vrpath/multifilt.hpp"
#include "vrpath/oracle.hpp"

#include "json.hpp"

namespace vrpath {

// JSON path file: top-level array of grade arrays, all rows of equal length.
path_t load_path_json(const nlohmann::json& j);
path_t load_path_file(const std::string& filename);

// {"dimension": n, "points": [{"id": 0, "grades": [[...], ...]}, ...]},
// ids 0..N-1 exactly once, every grade list non-empty.
point_annotations load_point_annotations(const nlohmann::json& j);
point_annotations load_point_annotations_file(const std::string& filename);

// {"dimension": n, "edges": [{"u": 0, "v": 1, "grades": [[...]]}, ...]}
edge_annotations load_edge_annotations(const nlohmann::json& j);
edge_annotations load_edge_annotations_file(const std::string& filename);

// {"simplices": [[0], [1], [0, 1]]}
explicit_complex load_explicit_complex(const nlohmann::json& j);
explicit_complex load_explicit_complex_file(const std::string& filename);

nlohmann::json load_json_file(const std::string& filename);
std::string read_text_file(const std::string& filename);
// filename "-" writes to standard output
void write_text_output(const std::string& filename, const std::string& content);

} // namespace vrpath
