#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "vrpath/barcode.hpp"
#include "vrpath/semimetric.hpp"

namespace vrpath {

enum class binning_t { day, week, month };

binning_t parse_binning(const std::string& s);

// Distinct aligned sequences over {A,C,T,G,-} with 1-based cumulative
// time bins; each sequence carries the earliest sampling bin among its
// duplicate samples, so the time slices form a filtration.
struct aligned_dataset {
	std::vector<std::string> sequences;
	std::vector<std::string> ids; // representative id per distinct sequence
	std::vector<int> time_bin; // 1-based
	std::vector<uint64_t> multiplicity;
	std::optional<std::string> reference;
	int num_bins = 0;
	std::vector<std::string> bin_labels; // calendar label per bin, bin_labels[b-1]
	uint64_t dropped_invalid = 0; // sequences with symbols outside the alphabet
	uint64_t dropped_missing_metadata = 0;

	size_t size() const { return sequences.size(); }
};

// Sequences with bin <= t, renumbered to t bins.
aligned_dataset truncate_dataset(const aligned_dataset& data, int t);

// Pairwise Hamming distances; parallel over rows.
semimetric_matrix hamming_matrix(const aligned_dataset& data);

struct mutation_t {
	int position; // 1-based alignment coordinate
	char from, to;
	bool ambiguous = false; // neither endpoint matched the reference

	auto key() const { return std::make_tuple(position, from, to); }
};

typedef std::tuple<int, char, char> mutation_key_t;

// The unique differing position of a unit edge, oriented by the reference.
mutation_t edge_to_mutation(index_t i, index_t j, const aligned_dataset& data);

struct tri_result {
	barcode_t barcode; // dimension-1 bars on the transformed scale, with reps
	int num_bins = 0;
	std::vector<std::string> bin_labels;
	// topological recurrence index: bars whose interval contains the bin
	std::map<mutation_key_t, std::vector<uint64_t>> tri;
	// cumulative count of bar births up to the bin
	std::map<mutation_key_t, std::vector<uint64_t>> cumulative_births;
	std::map<mutation_key_t, bool> ambiguous;

	uint64_t total(const mutation_key_t& key) const;
};

// The full single-run pipeline: time-filtered Hamming dataset, pathwise
// computation along the scale-capped time path, SNV bars with unit-edge
// representatives, per-mutation recurrence counts. Unit edges enter at the
// pair's time step k, distance-2 edges at num_bins + k, so every scale-1
// edge precedes every scale-2 fill-in while deaths by triangles are seen.
tri_result tri_analysis(const aligned_dataset& data, size_t simplex_cap = 100000000);

// Transformed matrix used by tri_analysis, exposed for cross-checks.
semimetric_matrix tri_transformed_matrix(const aligned_dataset& data);

std::string tri_table_csv(const tri_result& r);
nlohmann::json tri_summary_json(const tri_result& r);

aligned_dataset ingest_fasta(const std::string& fasta_path, const std::string& metadata_path,
                             binning_t binning,
                             const std::optional<std::string>& reference_id = std::nullopt);

struct synth_spec {
	size_t seq_length = 200;
	size_t tree_size = 30; // tree nodes, including the root
	size_t homoplasy_count = 0; // planted 4-cycles, 4 extra sequences each
	int time_bins = 3;
	uint64_t seed = 0;
};

struct synth_result {
	aligned_dataset data;
	std::string fasta; // serialized alignment
	std::string metadata_csv;
	nlohmann::json truth; // planted homoplasy ground truth
};

// Deterministic generator: random tree phylogeny plus planted homoplasy
// 4-cycles of a single recurrent mutation, pairwise far apart when the
// sequence length permits.
synth_result synth_dataset(const synth_spec& spec);

} // namespace vrpath
