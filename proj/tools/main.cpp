#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "vrpath/engine.hpp"
#include "vrpath/genomic.hpp"
#include "vrpath/io.hpp"
#include "vrpath/parallel.hpp"
#include "vrpath/pathwise.hpp"

namespace {

constexpr const char* VERSION = "vrpath 1.0.0 (F2, C++20)";

vrpath::grade_t parse_grade_arg(const std::string& s) {
	vrpath::grade_t g;
	std::stringstream ss(s);
	std::string tok;
	while (std::getline(ss, tok, ','))
		try {
			g.push_back(std::stod(tok));
		} catch (const std::exception&) {
			throw vrpath::parse_error("bad grade coordinate '" + tok + "'");
		}
	if (g.empty()) throw vrpath::parse_error("empty grade argument");
	return g;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

vrpath::semimetric_matrix read_matrix(const std::string& filename) {
	std::istringstream in(vrpath::read_text_file(filename));
	return vrpath::read_lower_distance_matrix(in);
}

size_t points_for(const vrpath::edge_annotations& l, size_t points_flag) {
	if (points_flag) return points_flag;
	vrpath::index_t max_index = -1;
	for (const auto& [key, chain] : l.edges) max_index = std::max(max_index, key.second);
	if (max_index < 0) throw vrpath::validation_error("no edges and --points not given");
	return static_cast<size_t>(max_index) + 1;
}

int run(int argc, char** argv) {
	CLI::App app{"Pathwise persistence barcodes of multi-filtered flag complexes via "
	             "Vietoris-Rips transformations of semimetric spaces"};
	app.require_subcommand(1);
	app.set_version_flag("--version", VERSION);

	int threads = 0;
	size_t simplex_cap = 100000000;
	app.add_option("--threads", threads, "worker threads for pairwise kernels (0 = all cores)");
	app.add_option("--simplex-cap", simplex_cap, "abort when the filtration exceeds this many simplices");

	// transform
	auto* transform = app.add_subcommand(
	    "transform", "build the transformed lower distance matrix along a path");
	std::string t_edges, t_matrix, t_points_file, t_path, t_output = "-";
	size_t t_points = 0;
	transform->add_option("--edge-annotations", t_edges, "edge entry annotation JSON");
	transform->add_option("--matrix", t_matrix, "semimetric lower distance matrix file");
	transform->add_option("--point-annotations", t_points_file, "point entry annotation JSON");
	transform->add_option("--path", t_path, "path JSON file")->required();
	transform->add_option("--points", t_points, "number of vertices (default: max index + 1)");
	transform->add_option("-o,--output", t_output, "output file, - for stdout");

	// barcode
	auto* barcode = app.add_subcommand("barcode", "Vietoris-Rips persistence barcode of a "
	                                              "semimetric lower distance matrix");
	std::string b_matrix, b_output = "-";
	int b_max_dim = 1;
	double b_threshold = std::numeric_limits<double>::infinity();
	bool b_reps = false;
	barcode->add_option("matrix", b_matrix, "lower distance matrix file")->required();
	barcode->add_option("--max-dim", b_max_dim, "maximum homology dimension");
	barcode->add_option("--threshold", b_threshold, "maximum filtration scale");
	barcode->add_flag("--reps", b_reps, "emit representative 1-cycles");
	barcode->add_option("-o,--output", b_output, "output file, - for stdout");

	// pathwise
	auto* pathwise = app.add_subcommand("pathwise", "pathwise persistence barcode from edge "
	                                                "annotations and a path");
	std::string p_edges, p_path, p_output = "-";
	size_t p_points = 0;
	int p_max_dim = 1;
	bool p_reps = false;
	pathwise->add_option("--edge-annotations", p_edges)->required();
	pathwise->add_option("--path", p_path)->required();
	pathwise->add_option("--points", p_points, "number of vertices (default: max index + 1)");
	pathwise->add_option("--max-dim", p_max_dim);
	pathwise->add_flag("--reps", p_reps);
	pathwise->add_option("-o,--output", p_output);

	// rank
	auto* rank = app.add_subcommand("rank", "rank invariant via two-step paths");
	std::string r_edges, r_v, r_w, r_sample, r_output = "-";
	size_t r_points = 0;
	int r_dim = 1;
	rank->add_option("--edge-annotations", r_edges)->required();
	rank->add_option("--points", r_points);
	rank->add_option("--v", r_v, "lower grade, comma-separated");
	rank->add_option("--w", r_w, "upper grade, comma-separated");
	rank->add_option("--sample", r_sample, "JSON array of grades; all comparable pairs");
	rank->add_option("--dim", r_dim, "homology degree (>= 1)");
	rank->add_option("-o,--output", r_output);

	// tri
	auto* tri = app.add_subcommand("tri", "topological recurrence analysis of an aligned "
	                                      "genome dataset");
	std::string g_alignment, g_metadata, g_binning = "day", g_reference, g_output = "-",
	            g_summary;
	tri->add_option("--alignment", g_alignment, "aligned FASTA")->required();
	tri->add_option("--metadata", g_metadata, "CSV with columns id,date")->required();
	tri->add_option("--binning", g_binning, "day | week | month");
	tri->add_option("--reference", g_reference, "id of the reference sequence");
	tri->add_option("-o,--output", g_output, "tRI table CSV, - for stdout");
	tri->add_option("--summary", g_summary, "per-mutation summary JSON");

	// oracle
	auto* oracle = app.add_subcommand("oracle", "brute-force Betti number of an explicit complex");
	std::string o_complex, o_output = "-";
	int o_dim = 1;
	oracle->add_option("complex", o_complex, "explicit complex JSON")->required();
	oracle->add_option("--dim", o_dim);
	oracle->add_option("-o,--output", o_output);

	// synth
	auto* synth = app.add_subcommand("synth", "deterministic synthetic phylogeny with planted "
	                                          "homoplasies");
	std::string s_prefix = "synth";
	vrpath::synth_spec spec;
	synth->add_option("--length", spec.seq_length, "alignment length");
	synth->add_option("--tree-size", spec.tree_size, "tree nodes");
	synth->add_option("--homoplasies", spec.homoplasy_count, "planted recurrent 4-cycles");
	synth->add_option("--bins", spec.time_bins, "time bins");
	synth->add_option("--seed", spec.seed);
	synth->add_option("--out-prefix", s_prefix, "writes PREFIX.fasta, PREFIX.csv, PREFIX.truth.json");

	CLI11_PARSE(app, argc, argv);
	vrpath::set_thread_count(threads);

	if (*transform) {
		vrpath::path_t nu = vrpath::load_path_file(t_path);
		vrpath::semimetric_matrix d = [&] {
			if (!t_edges.empty()) {
				auto l = vrpath::load_edge_annotations_file(t_edges);
				return vrpath::vr_transform(l, nu, points_for(l, t_points));
			}
			if (t_matrix.empty() || t_points_file.empty())
				throw vrpath::parse_error(
				    "transform needs --edge-annotations, or --matrix with --point-annotations");
			auto h = read_matrix(t_matrix);
			auto k = vrpath::load_point_annotations(vrpath::load_json_file(t_points_file));
			return vrpath::vr_transform(vrpath::build_pathwise_edges(h, k, nu), h.size());
		}();
		std::ostringstream out;
		vrpath::write_lower_distance_matrix(out, d);
		vrpath::write_text_output(t_output, out.str());
	} else if (*barcode) {
		vrpath::semimetric_matrix d = read_matrix(b_matrix);
		vrpath::engine_options opts{b_max_dim, b_threshold, b_reps, simplex_cap};
		vrpath::write_text_output(b_output, json_text(vrpath::barcode_to_json(vr_barcode(d, opts))));
	} else if (*pathwise) {
		auto l = vrpath::load_edge_annotations_file(p_edges);
		auto nu = vrpath::load_path_file(p_path);
		auto result = vrpath::pathwise_barcode(l, points_for(l, p_points), nu, p_max_dim, p_reps,
		                                       simplex_cap);
		vrpath::write_text_output(p_output, json_text(vrpath::pathwise_to_json(result)));
	} else if (*rank) {
		auto l = vrpath::load_edge_annotations_file(r_edges);
		size_t n = points_for(l, r_points);
		nlohmann::json out;
		if (!r_sample.empty()) {
			std::vector<vrpath::grade_t> sample;
			for (const auto& g : vrpath::load_json_file(r_sample))
				sample.push_back(g.get<vrpath::grade_t>());
			out["pairs"] = nlohmann::json::array();
			for (const auto& [pair, value] :
			     vrpath::rank_invariant_table(l, n, sample, r_dim, simplex_cap))
				out["pairs"].push_back(
				    {{"v", pair.first}, {"w", pair.second}, {"rank", value}});
		} else {
			if (r_v.empty() || r_w.empty())
				throw vrpath::parse_error("rank needs --v and --w, or --sample");
			vrpath::grade_t v = parse_grade_arg(r_v), w = parse_grade_arg(r_w);
			out["v"] = v;
			out["w"] = w;
			out["rank"] = vrpath::rank_invariant(l, n, v, w, r_dim, simplex_cap);
		}
		out["dim"] = r_dim;
		vrpath::write_text_output(r_output, json_text(out));
	} else if (*tri) {
		auto data = vrpath::ingest_fasta(
		    g_alignment, g_metadata, vrpath::parse_binning(g_binning),
		    g_reference.empty() ? std::nullopt : std::optional<std::string>(g_reference));
		auto result = vrpath::tri_analysis(data, simplex_cap);
		vrpath::write_text_output(g_output, vrpath::tri_table_csv(result));
		if (!g_summary.empty())
			vrpath::write_text_output(g_summary, json_text(vrpath::tri_summary_json(result)));
	} else if (*oracle) {
		auto x = vrpath::load_explicit_complex_file(o_complex);
		nlohmann::json out;
		out["dim"] = o_dim;
		out["betti"] = vrpath::oracle_betti(x, o_dim);
		vrpath::write_text_output(o_output, json_text(out));
	} else if (*synth) {
		auto result = vrpath::synth_dataset(spec);
		vrpath::write_text_output(s_prefix + ".fasta", result.fasta);
		vrpath::write_text_output(s_prefix + ".csv", result.metadata_csv);
		vrpath::write_text_output(s_prefix + ".truth.json", json_text(result.truth));
	}
	return 0;
}

} // namespace

int main(int argc, char** argv) {
	try {
		return run(argc, argv);
	} catch (const vrpath::parse_error& e) {
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	} catch (const vrpath::validation_error& e) {
		std::cerr << "error: " << e.what() << '\n';
		return 3;
	} catch (const vrpath::resource_cap_error& e) {
		std::cerr << "error: " << e.what() << '\n';
		return 4;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << '\n';
		return 1;
	}
}
