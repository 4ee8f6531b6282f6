#include "vrpath/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

namespace vrpath {

namespace {

struct simp_t {
	value_t value;
	std::vector<uint32_t> v; // sorted ascending
};

edge_t make_sorted(index_t a, index_t b) { return a < b ? edge_t{a, b} : edge_t{b, a}; }

bool filtration_less(const simp_t& a, const simp_t& b) {
	if (a.value != b.value) return a.value < b.value;
	return a.v < b.v;
}

struct vec_hash {
	size_t operator()(const std::vector<uint32_t>& v) const {
		size_t h = 1469598103934665603ull;
		for (uint32_t x : v) {
			h ^= x;
			h *= 1099511628211ull;
		}
		return h;
	}
};

typedef std::unordered_map<std::vector<uint32_t>, index_t, vec_hash> simplex_index_t;

std::vector<index_t> sym_diff(const std::vector<index_t>& a, const std::vector<index_t>& b) {
	std::vector<index_t> out;
	out.reserve(a.size() + b.size());
	std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
	                              std::back_inserter(out));
	return out;
}

struct union_find {
	std::vector<index_t> parent;

	explicit union_find(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

	index_t find(index_t x) {
		index_t root = x;
		while (parent[root] != root) root = parent[root];
		while (parent[x] != root) {
			index_t next = parent[x];
			parent[x] = root;
			x = next;
		}
		return root;
	}

	// Smaller root survives; returns false if already connected.
	bool merge(index_t a, index_t b) {
		a = find(a), b = find(b);
		if (a == b) return false;
		if (b < a) std::swap(a, b);
		parent[b] = a;
		return true;
	}
};

struct clique_builder {
	const semimetric_matrix& d;
	value_t threshold;
	size_t cap;
	size_t total = 0;
	int top_dim;
	std::vector<std::vector<uint32_t>> nb;
	std::vector<std::vector<simp_t>> out;

	clique_builder(const semimetric_matrix& dist, int top, value_t th, size_t simplex_cap)
	    : d(dist), threshold(th), cap(simplex_cap), top_dim(top), nb(dist.size()),
	      out(static_cast<size_t>(std::max(top, 0)) + 1) {}

	void bump() {
		if (++total > cap)
			throw resource_cap_error("simplex cap of " + std::to_string(cap) + " exceeded");
	}

	struct cand_t {
		uint32_t v;
		value_t diam; // max distance from v to the current clique
	};

	void extend(std::vector<uint32_t>& cur, value_t val, const std::vector<cand_t>& cands) {
		for (size_t i = 0; i < cands.size(); ++i) {
			value_t newval = std::max(val, cands[i].diam);
			cur.push_back(cands[i].v);
			bump();
			out[cur.size() - 1].push_back({newval, cur});
			if (static_cast<int>(cur.size()) - 1 < top_dim) {
				std::vector<cand_t> next;
				for (size_t k = i + 1; k < cands.size(); ++k) {
					value_t dist = d(cands[i].v, cands[k].v);
					if (std::isinf(dist) || dist > threshold) continue;
					next.push_back({cands[k].v, std::max(cands[k].diam, dist)});
				}
				extend(cur, newval, next);
			}
			cur.pop_back();
		}
	}

	void run() {
		const size_t n = d.size();
		for (size_t i = 0; i < n; ++i) {
			bump();
			out[0].push_back({0, {static_cast<uint32_t>(i)}});
		}
		if (top_dim < 1) return;
		for (size_t i = 0; i < n; ++i)
			for (size_t j = 0; j < n; ++j) {
				if (i == j) continue;
				value_t dist = d(i, j);
				if (!std::isinf(dist) && dist <= threshold)
					nb[i].push_back(static_cast<uint32_t>(j));
			}
		std::vector<uint32_t> cur;
		for (size_t i = 0; i + 1 < n; ++i)
			for (uint32_t j : nb[i]) {
				if (j <= i) continue;
				value_t val = d(i, j);
				bump();
				cur = {static_cast<uint32_t>(i), j};
				out[1].push_back({val, cur});
				if (top_dim >= 2) {
					std::vector<cand_t> cands;
					for (uint32_t w : nb[i]) {
						if (w <= j) continue;
						value_t dw = d(j, w);
						if (std::isinf(dw) || dw > threshold) continue;
						cands.push_back({w, std::max(d(i, w), dw)});
					}
					extend(cur, val, cands);
				}
			}
		for (auto& level : out) std::sort(level.begin(), level.end(), filtration_less);
	}
};

struct reduction_result {
	std::vector<std::pair<index_t, index_t>> pairs; // (row, column)
	std::vector<index_t> zero_columns; // excludes cleared columns
	std::vector<std::vector<index_t>> columns; // reduced column per column index
	std::vector<std::vector<index_t>> v_columns; // only when track_v
	std::vector<char> pivot_rows; // rows paired here; cleared one dimension down
};

std::vector<index_t> boundary_rows(const simp_t& s, const simplex_index_t& row_index) {
	std::vector<index_t> rows;
	rows.reserve(s.v.size());
	std::vector<uint32_t> face(s.v.size() - 1);
	for (size_t p = 0; p < s.v.size(); ++p) {
		size_t q = 0;
		for (size_t r = 0; r < s.v.size(); ++r)
			if (r != p) face[q++] = s.v[r];
		rows.push_back(row_index.at(face));
	}
	std::sort(rows.begin(), rows.end());
	return rows;
}

reduction_result reduce_boundary(const std::vector<simp_t>& rows, const std::vector<simp_t>& cols,
                                 const std::vector<char>& cleared, bool track_v) {
	simplex_index_t row_index;
	row_index.reserve(rows.size() * 2);
	for (size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r].v, r);

	reduction_result res;
	res.columns.resize(cols.size());
	if (track_v) res.v_columns.resize(cols.size());
	res.pivot_rows.assign(rows.size(), 0);
	std::vector<index_t> owner(rows.size(), -1);

	for (size_t c = 0; c < cols.size(); ++c) {
		if (!cleared.empty() && cleared[c]) continue;
		std::vector<index_t> cur = boundary_rows(cols[c], row_index);
		std::vector<index_t> vcur;
		if (track_v) vcur = {static_cast<index_t>(c)};
		while (!cur.empty() && owner[cur.back()] != -1) {
			index_t o = owner[cur.back()];
			cur = sym_diff(cur, res.columns[o]);
			if (track_v) vcur = sym_diff(vcur, res.v_columns[o]);
		}
		if (cur.empty()) {
			res.zero_columns.push_back(c);
		} else {
			owner[cur.back()] = c;
			res.pivot_rows[cur.back()] = 1;
			res.pairs.emplace_back(cur.back(), c);
			res.columns[c] = std::move(cur);
		}
		if (track_v) res.v_columns[c] = std::move(vcur);
	}
	return res;
}

std::vector<edge_t> rows_to_edges(const std::vector<index_t>& rows,
                                  const std::vector<simp_t>& edges) {
	std::vector<edge_t> out;
	out.reserve(rows.size());
	for (index_t r : rows)
		out.emplace_back(edges[r].v[0], edges[r].v[1]);
	std::sort(out.begin(), out.end());
	return out;
}

} // namespace

std::vector<filtration_simplex> enumerate_cliques(const semimetric_matrix& d, int max_dim,
                                                  value_t threshold, size_t simplex_cap) {
	if (max_dim < 0) throw validation_error("enumerate_cliques: max_dim must be >= 0");
	int top = std::min<int>(max_dim, static_cast<int>(d.size()) - 1);
	clique_builder builder(d, top, threshold, simplex_cap);
	builder.run();
	std::vector<filtration_simplex> out;
	for (auto& level : builder.out)
		for (auto& s : level) {
			filtration_simplex fs;
			fs.value = s.value;
			fs.vertices.assign(s.v.begin(), s.v.end());
			out.push_back(std::move(fs));
		}
	std::sort(out.begin(), out.end(), [](const filtration_simplex& a, const filtration_simplex& b) {
		const size_t asize = a.vertices.size(), bsize = b.vertices.size();
		return std::tie(a.value, asize, a.vertices) < std::tie(b.value, bsize, b.vertices);
	});
	return out;
}

barcode_t vr_barcode(const semimetric_matrix& d, const engine_options& opts) {
	if (opts.max_dim < 0) throw validation_error("vr_barcode: max_dim must be >= 0");
	if (opts.max_dim > 6) throw validation_error("vr_barcode: max_dim > 6 not supported");
	auto violations = check_semimetric(d);
	if (!violations.empty())
		throw validation_error("semimetric violation: zero distance between distinct points " +
		                       std::to_string(violations.front().i) + " and " +
		                       std::to_string(violations.front().j));

	const size_t n = d.size();
	const int top = std::min<int>(opts.max_dim + 1, static_cast<int>(n) - 1);

	clique_builder builder(d, top, opts.threshold, opts.simplex_cap);
	builder.run();
	auto& cliques = builder.out;

	barcode_t bc;

	// Dimension 0 by union-find over edges in filtration order.
	{
		union_find uf(n);
		if (top >= 1)
			for (const simp_t& e : cliques[1])
				if (uf.merge(e.v[0], e.v[1])) bc.bars.push_back({0, 0, e.value, {}});
		for (size_t i = 0; i < n; ++i)
			if (uf.find(i) == static_cast<index_t>(i)) bc.bars.push_back({0, 0, INF, {}});
	}

	if (opts.max_dim >= 1 && top >= 1) {
		std::vector<char> cleared; // pivot rows of the reduction one dimension up
		for (int k = top; k >= 1; --k) {
			bool track_v = (k == 1) && opts.with_reps;
			reduction_result res =
			    reduce_boundary(cliques[k - 1], cliques[k], cleared, track_v);

			if (k - 1 >= 1) {
				for (auto [r, c] : res.pairs) {
					value_t birth = cliques[k - 1][r].value, death = cliques[k][c].value;
					if (birth == death) continue;
					bar_t bar{k - 1, birth, death, {}};
					if (k - 1 == 1 && opts.with_reps)
						bar.rep = rows_to_edges(res.columns[c], cliques[1]);
					bc.bars.push_back(std::move(bar));
				}
			}
			if (k <= opts.max_dim) {
				for (index_t c : res.zero_columns) {
					bar_t bar{k, cliques[k][c].value, INF, {}};
					if (k == 1 && opts.with_reps)
						bar.rep = rows_to_edges(res.v_columns[c], cliques[1]);
					bc.bars.push_back(std::move(bar));
				}
			}
			cleared = std::move(res.pivot_rows);
		}
	}

	if (opts.with_reps)
		for (bar_t& bar : bc.bars)
			if (bar.dim == 1 && !bar.rep.empty()) bar.rep = tighten_representative(bar.rep, d);

	bc.sort();
	return bc;
}

std::vector<edge_t> tighten_representative(std::vector<edge_t> cycle, const semimetric_matrix& d) {
	if (cycle.empty()) return {};
	std::set<edge_t> cur;
	value_t birth = 0;
	for (const edge_t& e : cycle) {
		edge_t key = e.first < e.second ? e : edge_t{e.second, e.first};
		if (cur.count(key))
			cur.erase(key);
		else
			cur.insert(key);
		birth = std::max(birth, d(key.first, key.second));
	}
	const size_t n = d.size();
	auto order_key = [&](const edge_t& e) {
		return std::make_tuple(d(e.first, e.second), e.first, e.second);
	};

	for (int pass = 0; pass < 100; ++pass) {
		bool changed = false;
		std::vector<edge_t> edges(cur.begin(), cur.end());
		std::sort(edges.begin(), edges.end(),
		          [&](const edge_t& a, const edge_t& b) { return order_key(a) > order_key(b); });
		for (const edge_t& e : edges) {
			auto [u, v] = e;
			auto eo = order_key(e);
			// earliest triangle through e whose two other edges precede e
			std::optional<std::tuple<value_t, index_t>> best;
			for (size_t w = 0; w < n; ++w) {
				if (static_cast<index_t>(w) == u || static_cast<index_t>(w) == v) continue;
				value_t duw = d(u, w), dvw = d(v, w);
				if (std::isinf(duw) || std::isinf(dvw)) continue;
				edge_t uw = make_sorted(u, static_cast<index_t>(w));
				edge_t vw = make_sorted(v, static_cast<index_t>(w));
				if (!(order_key(uw) < eo) || !(order_key(vw) < eo)) continue;
				std::tuple<value_t, index_t> score{std::max(duw, dvw),
				                                   static_cast<index_t>(w)};
				if (!best || score < *best) best = score;
			}
			if (best) {
				index_t w = std::get<1>(*best);
				for (const edge_t& t : {e, make_sorted(u, w), make_sorted(v, w)}) {
					if (cur.count(t))
						cur.erase(t);
					else
						cur.insert(t);
				}
				changed = true;
				break;
			}
		}
		if (!changed) break;
	}
	return std::vector<edge_t>(cur.begin(), cur.end());
}

barcode_t snv_bars(const semimetric_matrix& d, size_t simplex_cap) {
	engine_options opts;
	opts.max_dim = 1;
	opts.threshold = 2;
	opts.with_reps = true;
	opts.simplex_cap = simplex_cap;
	barcode_t all = vr_barcode(d, opts);
	barcode_t out;
	for (bar_t& bar : all.bars)
		if (bar.dim == 1 && bar.birth == 1) out.bars.push_back(std::move(bar));
	out.sort();
	return out;
}

} // namespace vrpath
