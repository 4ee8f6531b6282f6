#include "vrpath/genomic.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "vrpath/engine.hpp"
#include "vrpath/parallel.hpp"

namespace vrpath {

namespace {

const std::string ALPHABET = "ACTG-";
const char BASES[4] = {'A', 'C', 'T', 'G'};

// Howard Hinnant's civil date algorithms.
int64_t days_from_civil(int y, unsigned m, unsigned d) {
	y -= m <= 2;
	const int era = (y >= 0 ? y : y - 399) / 400;
	const unsigned yoe = static_cast<unsigned>(y - era * 400);
	const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
	const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
	return static_cast<int64_t>(era) * 146097 + static_cast<int64_t>(doe) - 719468;
}

void civil_from_days(int64_t z, int& y, unsigned& m, unsigned& d) {
	z += 719468;
	const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
	const unsigned doe = static_cast<unsigned>(z - era * 146097);
	const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
	y = static_cast<int>(yoe) + static_cast<int>(era) * 400;
	const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
	const unsigned mp = (5 * doy + 2) / 153;
	d = doy - (153 * mp + 2) / 5 + 1;
	m = mp + (mp < 10 ? 3 : -9);
	y += m <= 2;
}

struct civil_date {
	int y;
	unsigned m, d;
};

civil_date parse_date(const std::string& s) {
	civil_date date{};
	char extra;
	if (std::sscanf(s.c_str(), "%d-%u-%u%c", &date.y, &date.m, &date.d, &extra) != 3 ||
	    date.m < 1 || date.m > 12 || date.d < 1 || date.d > 31)
		throw parse_error("bad ISO-8601 date '" + s + "'");
	return date;
}

std::string format_date(int64_t days) {
	int y;
	unsigned m, d;
	civil_from_days(days, y, m, d);
	char buf[16];
	std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", y, m, d);
	return buf;
}

std::string trim(const std::string& s) {
	size_t a = s.find_first_not_of(" \t\r\n");
	if (a == std::string::npos) return "";
	size_t b = s.find_last_not_of(" \t\r\n");
	return s.substr(a, b - a + 1);
}

size_t hamming(const std::string& a, const std::string& b) {
	size_t n = 0;
	for (size_t p = 0; p < a.size(); ++p)
		if (a[p] != b[p]) ++n;
	return n;
}

} // namespace

binning_t parse_binning(const std::string& s) {
	if (s == "day") return binning_t::day;
	if (s == "week") return binning_t::week;
	if (s == "month") return binning_t::month;
	throw parse_error("binning must be day, week or month, got '" + s + "'");
}

aligned_dataset truncate_dataset(const aligned_dataset& data, int t) {
	if (t < 1 || t > data.num_bins)
		throw validation_error("truncate_dataset: bin out of range");
	aligned_dataset out;
	out.reference = data.reference;
	out.num_bins = t;
	out.bin_labels.assign(data.bin_labels.begin(), data.bin_labels.begin() + t);
	for (size_t i = 0; i < data.size(); ++i)
		if (data.time_bin[i] <= t) {
			out.sequences.push_back(data.sequences[i]);
			out.ids.push_back(data.ids[i]);
			out.time_bin.push_back(data.time_bin[i]);
			out.multiplicity.push_back(data.multiplicity[i]);
		}
	return out;
}

semimetric_matrix hamming_matrix(const aligned_dataset& data) {
	const size_t n = data.size();
	if (n < 1) throw validation_error("hamming_matrix: empty dataset");
	for (const auto& s : data.sequences)
		if (s.size() != data.sequences.front().size())
			throw validation_error("hamming_matrix: sequences of unequal length");
	semimetric_matrix d(n);
	parallel_for(n, [&](size_t i) {
		for (size_t j = 0; j < i; ++j)
			d.set(i, j, static_cast<value_t>(hamming(data.sequences[i], data.sequences[j])));
	});
	return d;
}

mutation_t edge_to_mutation(index_t i, index_t j, const aligned_dataset& data) {
	const std::string& x = data.sequences[i];
	const std::string& y = data.sequences[j];
	int position = -1;
	for (size_t p = 0; p < x.size(); ++p)
		if (x[p] != y[p]) {
			if (position >= 0)
				throw validation_error("edge_to_mutation: sequences differ at more than one position");
			position = static_cast<int>(p);
		}
	if (position < 0) throw validation_error("edge_to_mutation: sequences are identical");

	mutation_t mut;
	mut.position = position + 1;
	char xc = x[position], yc = y[position];
	char ref_base = data.reference ? (*data.reference)[position] : '\0';
	if (ref_base == xc) {
		mut.from = xc, mut.to = yc;
	} else if (ref_base == yc) {
		mut.from = yc, mut.to = xc;
	} else {
		// neither matches the reference; orient by index
		if (i > j) std::swap(xc, yc);
		mut.from = xc, mut.to = yc;
		mut.ambiguous = true;
	}
	return mut;
}

semimetric_matrix tri_transformed_matrix(const aligned_dataset& data) {
	const size_t n = data.size();
	const int m = data.num_bins;
	if (n < 2) throw validation_error("tri analysis: need at least 2 distinct sequences");
	if (m < 1) throw validation_error("tri analysis: need at least 1 time bin");
	semimetric_matrix h = hamming_matrix(data);
	semimetric_matrix d(n, INF);
	for (size_t i = 1; i < n; ++i)
		for (size_t j = 0; j < i; ++j) {
			value_t dist = h(i, j);
			int entry = std::max(data.time_bin[i], data.time_bin[j]);
			if (dist == 1)
				d.set(i, j, static_cast<value_t>(entry));
			else if (dist == 2)
				d.set(i, j, static_cast<value_t>(m + entry));
		}
	return d;
}

uint64_t tri_result::total(const mutation_key_t& key) const {
	auto it = cumulative_births.find(key);
	return it == cumulative_births.end() || it->second.empty() ? 0 : it->second.back();
}

tri_result tri_analysis(const aligned_dataset& data, size_t simplex_cap) {
	const int m = data.num_bins;
	semimetric_matrix d = tri_transformed_matrix(data);

	engine_options opts;
	opts.max_dim = 1;
	opts.threshold = INF;
	opts.with_reps = true;
	opts.simplex_cap = simplex_cap;
	barcode_t bars = vr_barcode(d, opts);

	tri_result res;
	res.num_bins = m;
	res.bin_labels = data.bin_labels;
	for (bar_t& bar : bars.bars)
		if (bar.dim == 1) res.barcode.bars.push_back(std::move(bar));
	res.barcode.sort();

	for (const bar_t& bar : res.barcode.bars) {
		if (bar.birth > m) continue; // formed by distance-2 edges, not an SNV cycle
		int birth = static_cast<int>(bar.birth);
		// scale-2 deaths do not curtail time coverage; scale-1 deaths do
		int last = (bar.death != INF && bar.death <= m) ? static_cast<int>(bar.death) - 1 : m;
		std::set<mutation_key_t> keys;
		bool any_ambiguous = false;
		for (const edge_t& e : bar.rep) {
			mutation_t mut = edge_to_mutation(e.second, e.first, data);
			keys.insert(mut.key());
			any_ambiguous |= mut.ambiguous;
		}
		for (const mutation_key_t& key : keys) {
			auto& row = res.tri[key];
			auto& cum = res.cumulative_births[key];
			row.resize(m, 0);
			cum.resize(m, 0);
			for (int t = birth; t <= last; ++t) ++row[t - 1];
			for (int t = birth; t <= m; ++t) ++cum[t - 1];
			res.ambiguous[key] = res.ambiguous[key] || any_ambiguous;
		}
	}
	return res;
}

std::string tri_table_csv(const tri_result& r) {
	std::ostringstream out;
	out << "position,from,to,time_bin,tri\n";
	for (const auto& [key, row] : r.tri) {
		auto [pos, from, to] = key;
		for (int t = 1; t <= r.num_bins; ++t)
			out << pos << ',' << from << ',' << to << ',' << t << ',' << row[t - 1] << '\n';
	}
	return out.str();
}

nlohmann::json tri_summary_json(const tri_result& r) {
	nlohmann::json out;
	out["bins"] = r.bin_labels;
	out["mutations"] = nlohmann::json::array();
	for (const auto& [key, row] : r.tri) {
		auto [pos, from, to] = key;
		nlohmann::json jm;
		jm["position"] = pos;
		jm["from"] = std::string(1, from);
		jm["to"] = std::string(1, to);
		jm["total"] = r.total(key);
		jm["tri_by_bin"] = row;
		jm["cumulative_births"] = r.cumulative_births.at(key);
		jm["ambiguous"] = r.ambiguous.at(key);
		out["mutations"].push_back(jm);
	}
	return out;
}

aligned_dataset ingest_fasta(const std::string& fasta_path, const std::string& metadata_path,
                             binning_t binning, const std::optional<std::string>& reference_id) {
	std::ifstream fasta(fasta_path);
	if (!fasta) throw parse_error("cannot open alignment file " + fasta_path);
	std::ifstream meta(metadata_path);
	if (!meta) throw parse_error("cannot open metadata file " + metadata_path);

	// metadata: id,date
	std::map<std::string, int64_t> date_of;
	std::string line;
	size_t line_no = 0;
	while (std::getline(meta, line)) {
		++line_no;
		line = trim(line);
		if (line.empty()) continue;
		if (line_no == 1 && line == "id,date") continue;
		size_t comma = line.find(',');
		if (comma == std::string::npos)
			throw parse_error("metadata line " + std::to_string(line_no) + ": expected id,date");
		std::string id = trim(line.substr(0, comma));
		civil_date cd = parse_date(trim(line.substr(comma + 1)));
		int64_t days = days_from_civil(cd.y, cd.m, cd.d);
		auto it = date_of.find(id);
		if (it == date_of.end() || days < it->second) date_of[id] = days;
	}

	// FASTA records
	std::vector<std::pair<std::string, std::string>> records; // (id, sequence)
	std::string id, seq;
	auto flush = [&] {
		if (!id.empty()) records.emplace_back(id, seq);
		id.clear(), seq.clear();
	};
	while (std::getline(fasta, line)) {
		line = trim(line);
		if (line.empty()) continue;
		if (line[0] == '>') {
			flush();
			std::istringstream header(line.substr(1));
			header >> id;
			if (id.empty()) throw parse_error("FASTA header with empty id");
		} else {
			if (id.empty()) throw parse_error("FASTA sequence data before first header");
			seq += line;
		}
	}
	flush();
	if (records.empty()) throw parse_error("empty alignment file " + fasta_path);

	aligned_dataset out;
	uint64_t dropped_invalid = 0, dropped_meta = 0;
	struct kept_t {
		std::string id, seq;
		int64_t days;
	};
	std::vector<kept_t> kept;
	std::optional<std::string> reference_seq;
	size_t length = 0;
	for (auto& [rid, rseq] : records) {
		for (char& c : rseq) c = std::toupper(static_cast<unsigned char>(c));
		if (reference_id && rid == *reference_id) reference_seq = rseq;
		if (rseq.find_first_not_of(ALPHABET) != std::string::npos) {
			++dropped_invalid;
			continue;
		}
		auto it = date_of.find(rid);
		if (it == date_of.end()) {
			++dropped_meta;
			continue;
		}
		if (length == 0) length = rseq.size();
		if (rseq.size() != length)
			throw validation_error("alignment: sequence " + rid + " has length " +
			                       std::to_string(rseq.size()) + ", expected " +
			                       std::to_string(length));
		kept.push_back({rid, std::move(rseq), it->second});
	}
	if (kept.empty()) throw validation_error("no valid sequences after filtering");
	if (reference_id && !reference_seq)
		throw validation_error("reference id " + *reference_id + " not present in alignment");

	// collapse duplicates to the earliest date
	std::map<std::string, size_t> index_of;
	struct distinct_t {
		std::string id, seq;
		int64_t days;
		uint64_t count;
	};
	std::vector<distinct_t> distinct;
	for (auto& k : kept) {
		auto it = index_of.find(k.seq);
		if (it == index_of.end()) {
			index_of[k.seq] = distinct.size();
			distinct.push_back({k.id, k.seq, k.days, 1});
		} else {
			distinct_t& d = distinct[it->second];
			++d.count;
			if (k.days < d.days || (k.days == d.days && k.id < d.id)) d.days = k.days, d.id = k.id;
		}
	}

	int64_t min_days = distinct.front().days;
	for (const auto& d : distinct) min_days = std::min(min_days, d.days);
	civil_date min_cd;
	civil_from_days(min_days, min_cd.y, min_cd.m, min_cd.d);

	auto bin_of = [&](int64_t days) -> int {
		switch (binning) {
		case binning_t::day: return static_cast<int>(days - min_days) + 1;
		case binning_t::week: return static_cast<int>((days - min_days) / 7) + 1;
		case binning_t::month: {
			int y;
			unsigned m, d;
			civil_from_days(days, y, m, d);
			return (y * 12 + static_cast<int>(m)) - (min_cd.y * 12 + static_cast<int>(min_cd.m)) + 1;
		}
		}
		return 1;
	};

	int num_bins = 1;
	for (const auto& d : distinct) num_bins = std::max(num_bins, bin_of(d.days));

	// deterministic order: by time bin, then sequence
	std::sort(distinct.begin(), distinct.end(), [&](const distinct_t& a, const distinct_t& b) {
		return std::make_tuple(bin_of(a.days), a.seq) < std::make_tuple(bin_of(b.days), b.seq);
	});

	out.num_bins = num_bins;
	out.reference = reference_seq;
	out.dropped_invalid = dropped_invalid;
	out.dropped_missing_metadata = dropped_meta;
	for (auto& d : distinct) {
		out.sequences.push_back(std::move(d.seq));
		out.ids.push_back(std::move(d.id));
		out.time_bin.push_back(bin_of(d.days));
		out.multiplicity.push_back(d.count);
	}
	for (int b = 1; b <= num_bins; ++b) {
		switch (binning) {
		case binning_t::day: out.bin_labels.push_back(format_date(min_days + b - 1)); break;
		case binning_t::week: out.bin_labels.push_back(format_date(min_days + 7 * (b - 1))); break;
		case binning_t::month: {
			int total = min_cd.y * 12 + static_cast<int>(min_cd.m) - 1 + (b - 1);
			char buf[16];
			std::snprintf(buf, sizeof(buf), "%04d-%02d", total / 12, total % 12 + 1);
			out.bin_labels.push_back(buf);
			break;
		}
		}
	}
	return out;
}

namespace {

struct synth_rng {
	std::mt19937_64 gen;

	explicit synth_rng(uint64_t seed) : gen(seed) {}
	// modulo keeps the stream portable across standard libraries
	uint64_t below(uint64_t k) { return gen() % k; }
};

} // namespace

synth_result synth_dataset(const synth_spec& spec) {
	if (spec.seq_length < 4 || spec.tree_size < 1 || spec.time_bins < 1)
		throw validation_error("synth spec: need seq_length >= 4, tree_size >= 1, time_bins >= 1");
	if (spec.homoplasy_count > 0 && spec.time_bins < 1)
		throw validation_error("synth spec: homoplasies need at least one time bin");

	synth_rng rng(spec.seed);
	const size_t len = spec.seq_length;

	std::string ref(len, 'A');
	for (size_t p = 0; p < len; ++p) ref[p] = BASES[rng.below(4)];

	// fresh positions keep the phylogeny perfect while they last
	std::vector<size_t> pool(len);
	for (size_t p = 0; p < len; ++p) pool[p] = p;
	for (size_t p = len; p > 1; --p) std::swap(pool[p - 1], pool[rng.below(p)]);
	auto fresh_pos = [&]() -> std::optional<size_t> {
		if (pool.empty()) return std::nullopt;
		size_t p = pool.back();
		pool.pop_back();
		return p;
	};
	auto any_pos = [&]() -> size_t {
		auto p = fresh_pos();
		return p ? *p : rng.below(len);
	};
	auto other_base = [&](char c) {
		char b;
		do
			b = BASES[rng.below(4)];
		while (b == c);
		return b;
	};

	std::vector<std::string> seqs;
	std::vector<int> bins;
	std::set<std::string> seen;
	auto add = [&](const std::string& s, int bin) -> bool {
		if (seen.count(s)) return false;
		seen.insert(s);
		seqs.push_back(s);
		bins.push_back(bin);
		return true;
	};

	add(ref, 1);
	for (size_t i = 1; i < spec.tree_size; ++i) {
		for (int attempt = 0; attempt < 64; ++attempt) {
			size_t parent = rng.below(seqs.size());
			std::string child = seqs[parent];
			size_t pos = attempt == 0 ? any_pos() : rng.below(len);
			child[pos] = other_base(child[pos]);
			int bin = bins[parent] +
			          static_cast<int>(rng.below(spec.time_bins - bins[parent] + 1));
			if (add(child, bin)) break;
		}
	}

	nlohmann::json truth;
	truth["seed"] = spec.seed;
	truth["planted"] = spec.homoplasy_count;
	truth["cycles"] = nlohmann::json::array();

	if (spec.homoplasy_count > 0) {
		size_t p_m = any_pos();
		char from = ref[p_m], to = other_base(from);
		truth["mutation"] = {{"position", p_m + 1}, {"from", std::string(1, from)}, {"to", std::string(1, to)}};
		for (size_t c = 0; c < spec.homoplasy_count; ++c) {
			int birth_bin = static_cast<int>(c % spec.time_bins) + 1;
			for (int attempt = 0; attempt < 64; ++attempt) {
				std::string backbone = ref;
				size_t padding = pool.size() >= 12 ? 10 : 3;
				for (size_t q = 0; q < padding; ++q) {
					size_t pos = any_pos();
					if (pos == p_m) continue;
					backbone[pos] = other_base(backbone[pos]);
				}
				size_t p2;
				do
					p2 = any_pos();
				while (p2 == p_m);
				std::string a = backbone, b = backbone, ab = backbone;
				a[p_m] = to;
				b[p2] = other_base(backbone[p2]);
				ab[p_m] = to, ab[p2] = b[p2];
				if (seen.count(backbone) || seen.count(a) || seen.count(b) || seen.count(ab))
					continue;
				add(backbone, 1), add(a, 1), add(b, 1), add(ab, birth_bin);
				truth["cycles"].push_back({{"birth_bin", birth_bin}});
				break;
			}
		}
	}

	synth_result res;
	res.truth = truth;
	res.data.reference = ref;
	res.data.num_bins = spec.time_bins;
	const int64_t day0 = days_from_civil(2021, 1, 1);
	for (int b = 1; b <= spec.time_bins; ++b)
		res.data.bin_labels.push_back(format_date(day0 + b - 1));

	// stable order by (bin, sequence) matches ingest_fasta
	std::vector<size_t> order(seqs.size());
	for (size_t i = 0; i < order.size(); ++i) order[i] = i;
	std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
		return std::make_tuple(bins[a], seqs[a]) < std::make_tuple(bins[b], seqs[b]);
	});
	std::ostringstream fasta, meta;
	meta << "id,date\n";
	for (size_t rank = 0; rank < order.size(); ++rank) {
		size_t i = order[rank];
		char idbuf[32];
		std::snprintf(idbuf, sizeof(idbuf), "s%05zu", rank);
		res.data.sequences.push_back(seqs[i]);
		res.data.ids.push_back(idbuf);
		res.data.time_bin.push_back(bins[i]);
		res.data.multiplicity.push_back(1);
		fasta << '>' << idbuf << '\n' << seqs[i] << '\n';
		meta << idbuf << ',' << format_date(day0 + bins[i] - 1) << '\n';
	}
	res.fasta = fasta.str();
	res.metadata_csv = meta.str();
	return res;
}

} // namespace vrpath
