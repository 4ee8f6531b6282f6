#pragma once

#include <stdexcept>
#include <string>

namespace vrpath {

// Exit-code mapping: parse_error -> 2, validation_error -> 3, resource_cap_error -> 4.
struct parse_error : std::runtime_error {
	explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct validation_error : std::runtime_error {
	explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct resource_cap_error : std::runtime_error {
	explicit resource_cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace vrpath
