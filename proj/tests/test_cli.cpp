#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct cli_result {
	int exit_code;
	std::string out;
};

cli_result run_cli(const std::string& args) {
	std::string cmd = std::string(VRPATH_CLI_PATH) + " " + args + " 2>/dev/null";
	FILE* pipe = popen(cmd.c_str(), "r");
	REQUIRE(pipe != nullptr);
	std::string out;
	char buf[4096];
	size_t got;
	while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
	int status = pclose(pipe);
	return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void write_file(const std::string& name, const std::string& content) {
	std::ofstream f(name, std::ios::binary);
	f << content;
}

std::string read_file(const std::string& name) {
	std::ifstream f(name, std::ios::binary);
	std::ostringstream ss;
	ss << f.rdbuf();
	return ss.str();
}

const char* square_annotations = R"({"dimension": 2, "edges": [
  {"u": 0, "v": 1, "grades": [[1, 1]]},
  {"u": 1, "v": 2, "grades": [[1, 1]]},
  {"u": 2, "v": 3, "grades": [[1, 1]]},
  {"u": 0, "v": 3, "grades": [[1, 1]]},
  {"u": 0, "v": 2, "grades": [[2, 2]]},
  {"u": 1, "v": 3, "grades": [[2, 2]]}]})";

} // namespace

TEST_CASE("cli: version and help") {
	auto r = run_cli("--version");
	CHECK(r.exit_code == 0);
	CHECK(r.out.find("vrpath") != std::string::npos);
}

TEST_CASE("cli: exit code 2 for unreadable input") {
	CHECK(run_cli("transform --edge-annotations no_such.json --path no_such.json").exit_code == 2);
	CHECK(run_cli("barcode no_such_matrix.txt").exit_code == 2);
}

TEST_CASE("cli: exit code 3 for validation failures") {
	write_file("cli_e.json", square_annotations);
	write_file("cli_bad_path.json", "[[1,2],[2,1]]");
	CHECK(run_cli("transform --edge-annotations cli_e.json --path cli_bad_path.json").exit_code == 3);

	write_file("cli_zero.txt", "0\n");
	CHECK(run_cli("barcode cli_zero.txt").exit_code == 3);

	write_file("cli_path.json", "[[1,1],[2,2]]");
	CHECK(run_cli("rank --edge-annotations cli_e.json --v 1,2 --w 2,1").exit_code == 3);
}

TEST_CASE("cli: transform then barcode matches pathwise") {
	write_file("cli_e.json", square_annotations);
	write_file("cli_path.json", "[[1,1],[2,2]]");
	REQUIRE(run_cli("transform --edge-annotations cli_e.json --path cli_path.json -o cli_t.txt")
	            .exit_code == 0);
	CHECK(read_file("cli_t.txt") == "1\n2,1\n1,2,1\n");

	auto direct = run_cli("barcode cli_t.txt --max-dim 1 --threshold 2");
	auto pathwise = run_cli("pathwise --edge-annotations cli_e.json --path cli_path.json --max-dim 1");
	REQUIRE(direct.exit_code == 0);
	REQUIRE(pathwise.exit_code == 0);

	nlohmann::json a = nlohmann::json::parse(direct.out);
	nlohmann::json b = nlohmann::json::parse(pathwise.out);
	b.erase("steps");
	for (auto& bar : b["bars"]) bar.erase("authoritative");
	CHECK(a.dump(2) == b.dump(2));
}

TEST_CASE("cli: barcode flags") {
	write_file("cli_t2.txt", "1\n2,1\n1,2,1\n");
	auto r = run_cli("barcode cli_t2.txt --max-dim 1 --threshold 0");
	REQUIRE(r.exit_code == 0);
	nlohmann::json trunc = nlohmann::json::parse(r.out);
	REQUIRE(trunc["bars"].size() == 4);
	for (const auto& bar : trunc["bars"]) {
		CHECK(bar["dim"] == 0);
		CHECK(bar["death"].is_null());
	}

	auto reps = run_cli("barcode cli_t2.txt --max-dim 1 --reps");
	nlohmann::json with_reps = nlohmann::json::parse(reps.out);
	bool saw_rep = false;
	for (const auto& bar : with_reps["bars"])
		if (bar["dim"] == 1) {
			saw_rep = true;
			CHECK(bar["rep"].size() == 4);
		}
	CHECK(saw_rep);
}

TEST_CASE("cli: rank subcommand") {
	write_file("cli_e.json", square_annotations);
	auto r = run_cli("rank --edge-annotations cli_e.json --v 1,1 --w 1,1 --dim 1");
	REQUIRE(r.exit_code == 0);
	CHECK(nlohmann::json::parse(r.out)["rank"] == 1);

	write_file("cli_sample.json", "[[1,1],[2,2]]");
	auto table = run_cli("rank --edge-annotations cli_e.json --sample cli_sample.json --dim 1");
	REQUIRE(table.exit_code == 0);
	CHECK(nlohmann::json::parse(table.out)["pairs"].size() == 3);
}

TEST_CASE("cli: oracle subcommand") {
	write_file("cli_hollow.json", R"({"simplices": [[0],[1],[2],[0,1],[0,2],[1,2]]})");
	auto r = run_cli("oracle cli_hollow.json --dim 1");
	REQUIRE(r.exit_code == 0);
	CHECK(nlohmann::json::parse(r.out)["betti"] == 1);
}

TEST_CASE("cli: synth determinism and empty tri table") {
	REQUIRE(run_cli("synth --seed 7 --length 80 --tree-size 10 --bins 2 --out-prefix cli_s1")
	            .exit_code == 0);
	REQUIRE(run_cli("synth --seed 7 --length 80 --tree-size 10 --bins 2 --out-prefix cli_s2")
	            .exit_code == 0);
	CHECK(read_file("cli_s1.fasta") == read_file("cli_s2.fasta"));
	CHECK(read_file("cli_s1.csv") == read_file("cli_s2.csv"));
	CHECK(read_file("cli_s1.truth.json") == read_file("cli_s2.truth.json"));

	auto tri = run_cli("tri --alignment cli_s1.fasta --metadata cli_s1.csv");
	REQUIRE(tri.exit_code == 0);
	CHECK(tri.out == "position,from,to,time_bin,tri\n");
}
