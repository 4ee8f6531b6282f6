#include "vrpath/barcode.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace vrpath {

bool operator<(const bar_t& a, const bar_t& b) {
	return std::tie(a.dim, a.birth, a.death, a.rep) < std::tie(b.dim, b.birth, b.death, b.rep);
}

bool operator==(const bar_t& a, const bar_t& b) {
	return a.dim == b.dim && a.birth == b.birth && a.death == b.death && a.rep == b.rep;
}

void barcode_t::sort() { std::sort(bars.begin(), bars.end()); }

std::vector<std::pair<value_t, value_t>> barcode_t::intervals(int dim) const {
	std::vector<std::pair<value_t, value_t>> out;
	for (const bar_t& b : bars)
		if (b.dim == dim) out.emplace_back(b.birth, b.death);
	std::sort(out.begin(), out.end());
	return out;
}

static nlohmann::json value_to_json(value_t v) {
	if (v == std::floor(v) && std::abs(v) < 9.0e15)
		return static_cast<int64_t>(v);
	return v;
}

nlohmann::json barcode_to_json(const barcode_t& bc, bool dim0_authoritative) {
	nlohmann::json out;
	out["field"] = "F2";
	out["bars"] = nlohmann::json::array();
	for (const bar_t& b : bc.bars) {
		nlohmann::json jb;
		jb["dim"] = b.dim;
		jb["birth"] = value_to_json(b.birth);
		jb["death"] = b.finite() ? value_to_json(b.death) : nlohmann::json(nullptr);
		if (!b.rep.empty()) {
			nlohmann::json rep = nlohmann::json::array();
			for (const edge_t& e : b.rep) rep.push_back({e.first, e.second});
			jb["rep"] = rep;
		}
		if (b.dim == 0 && !dim0_authoritative) jb["authoritative"] = false;
		out["bars"].push_back(jb);
	}
	return out;
}

} // namespace vrpath
