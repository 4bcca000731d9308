#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

// End-to-end coverage of the command line tool. Every test drives the real
// binary through a shell with captured streams; nothing links the library.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args, const std::string& stdin_data = "") {
  static std::atomic<int> serial{0};
  const auto dir = std::filesystem::temp_directory_path();
  const std::string tag = std::to_string(::getpid()) + "_" + std::to_string(serial++);
  const auto in_path = dir / ("cli_in_" + tag);
  const auto out_path = dir / ("cli_out_" + tag);
  const auto err_path = dir / ("cli_err_" + tag);
  {
    std::ofstream in(in_path, std::ios::binary);
    in << stdin_data;
  }
  const std::string cmd = std::string("'") + CLI_BIN_PATH + "' " + args + " < '" +
                          in_path.string() + "' > '" + out_path.string() + "' 2> '" +
                          err_path.string() + "'";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::filesystem::remove(in_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return r;
}

const std::string kMagogCase1 = "magog 8 0\n1 1 2 4 4 6 7\n1 2 2 4 4 6 7 7\n";
const std::string kGogCase1 = "gog 8 0\n1 1 2 2 2 2 4 5\n2 3 4 4 6 7 7\n";

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("count prints the exact family size") {
  const RunResult r = run_cli("count --kind gog --n 3 --ell 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "7\n");
  // ell defaults to 0 and the families agree
  CHECK(run_cli("count --kind magog --n 3").out == "7\n");
  CHECK(run_cli("count --kind magog --n 8 --ell 2").out == "5918561\n");
}

TEST_CASE("validate splits the exit codes valid/invalid/unreadable") {
  const RunResult ok = run_cli("validate", "magog 3 0\n1 1\n1 1 1\n");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "valid\n");

  const RunResult bad = run_cli("validate", "magog 3 0\n2 2\n1 1 3\n");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("M2 at (1,1)") != std::string::npos);
  CHECK(bad.out.find("M2 at (1,2)") != std::string::npos);
  CHECK(lines_of(bad.out).size() == 2);

  const RunResult garbled = run_cli("validate", "magog 3\n1 1\n");
  CHECK(garbled.exit_code == 2);
  CHECK(garbled.err.find("parse error") != std::string::npos);
}

TEST_CASE("map emits the image on stdout and the case tag on stderr") {
  const RunResult fwd = run_cli("map", kMagogCase1);
  CHECK(fwd.exit_code == 0);
  CHECK(fwd.out == kGogCase1);
  CHECK(fwd.err == "Case1(k=3)\n");

  const RunResult back = run_cli("map --direction gog-to-magog", fwd.out);
  CHECK(back.exit_code == 0);
  CHECK(back.out == kMagogCase1);
  CHECK(back.err == "Case1(k=3)\n");

  const RunResult wrong = run_cli("map --direction gog-to-magog", kMagogCase1);
  CHECK(wrong.exit_code == 2);

  const RunResult js = run_cli("map --format json", kMagogCase1);
  CHECK(js.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j.at("kind") == "gog");
  CHECK(j.at("row2") == nlohmann::json({2, 3, 4, 4, 6, 7, 7}));
}

TEST_CASE("enumerate streams canonical order, honoring limit and format") {
  const RunResult first = run_cli("enumerate --kind magog --n 3 --limit 1");
  CHECK(first.exit_code == 0);
  CHECK(first.out == "magog 3 0\n1 1\n1 1 1\n");

  const RunResult all = run_cli("enumerate --kind gog --n 3 --format json");
  CHECK(all.exit_code == 0);
  const std::vector<std::string> rows = lines_of(all.out);
  REQUIRE(rows.size() == 7);
  for (const std::string& row : rows) {
    const nlohmann::json j = nlohmann::json::parse(row);
    CHECK(j.at("kind") == "gog");
    CHECK(j.at("n") == 3);
  }
  CHECK(nlohmann::json::parse(rows.front()).at("row1") == nlohmann::json({1, 1, 1}));
}

TEST_CASE("partitioned enumeration shards without loss or overlap") {
  const std::string base = "enumerate --kind magog --n 4 --ell 1 --format json";
  std::vector<std::string> merged;
  for (const char* shard : {"0/2", "1/2"}) {
    const RunResult r = run_cli(base + " --partition " + shard);
    CHECK(r.exit_code == 0);
    const std::vector<std::string> part = lines_of(r.out);
    merged.insert(merged.end(), part.begin(), part.end());
  }
  std::vector<std::string> full = lines_of(run_cli(base).out);
  REQUIRE(full.size() == 219);
  CHECK(merged.size() == full.size());
  std::sort(merged.begin(), merged.end());
  std::sort(full.begin(), full.end());
  CHECK(merged == full);

  CHECK(run_cli(base + " --partition 2/2").exit_code == 2);
}

TEST_CASE("rank and unrank are inverse through the tool") {
  const RunResult last = run_cli("unrank --kind gog --n 3 --ell 0 --rank 6");
  CHECK(last.exit_code == 0);
  CHECK(last.out == "gog 3 0\n1 2 3\n2 3\n");

  const RunResult pos = run_cli("rank", last.out);
  CHECK(pos.exit_code == 0);
  CHECK(pos.out == "6\n");

  CHECK(run_cli("unrank --kind gog --n 3 --ell 0 --rank 7").exit_code == 2);
  CHECK(run_cli("unrank --kind gog --n 3 --ell 0 --rank=-1").exit_code == 2);

  const RunResult invalid = run_cli("rank", "magog 3 0\n2 2\n1 1 3\n");
  CHECK(invalid.exit_code == 1);
  CHECK(invalid.err.find("invalid:") != std::string::npos);
}

TEST_CASE("stats evaluates an instance") {
  const std::string magog = "magog 8 0\n1 1 2 4 4 5 7\n1 2 2 4 4 6 7 7\n";
  const RunResult r = run_cli("stats --selector mrr", magog);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "ones_row1=2 ones_row2=1 maxed_row1=3 maxed_row2=5\n");

  const std::string gog = "gog 8 0\n1 1 2 4 4 5 7 7\n2 2 4 5 6 7 8\n";
  CHECK(run_cli("stats --selector bc", gog).out == "right_row1=7 right_row2=8\n");

  const RunResult js = run_cli("stats --selector ones_row1 --format json", gog);
  const nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j.at("names") == nlohmann::json({"ones_row1"}));
  CHECK(j.at("values") == nlohmann::json({2}));

  CHECK(run_cli("stats --selector median", gog).exit_code == 2);
}

TEST_CASE("stats hunts down pairings that the map breaks") {
  const RunResult mrr = run_cli("stats --counterexample mrr --n 3");
  CHECK(mrr.exit_code == 0);
  CHECK(mrr.out ==
        "magog 3 0\n1 1\n1 1 1\n"
        "gog 3 0\n1 1 2\n2 2\n"
        "magog_stat: ones_row1=2 ones_row2=3 maxed_row1=1 maxed_row2=1\n"
        "gog_stat: ones_row1=2 ones_row2=0 maxed_row1=1 maxed_row2=1\n");

  const RunResult zero = run_cli("stats --counterexample zero --n 3");
  CHECK(zero.exit_code == 0);
  CHECK(zero.out == "preserved\n");

  const RunResult js = run_cli("stats --counterexample bc --n 3 --format json");
  const nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j.at("magog").at("kind") == "magog");
  CHECK(j.at("magog_stat").at("values") == nlohmann::json({1, 1}));
  CHECK(j.at("gog_stat").at("values") == nlohmann::json({2, 2}));
}

TEST_CASE("stats tabulates a distribution over a family") {
  const RunResult csv =
      run_cli("stats --distribution --kind magog --n 3 --selector ones_row2");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == "ones_row2,count\n1,4\n2,2\n3,1\n");

  const RunResult js = run_cli(
      "stats --distribution --kind gog --n 4 --ell 1 --selector right --format json");
  CHECK(js.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j.at("names") == nlohmann::json({"right_row1", "right_row2"}));
  long long total = 0;
  for (const auto& row : j.at("rows")) {
    total += std::stoll(row.at("count").get<std::string>());
  }
  CHECK(total == 219);

  CHECK(run_cli("stats --distribution --n 3").exit_code == 2);
}

TEST_CASE("verify reports json per check and a human summary on stderr") {
  const RunResult r = run_cli("verify --n 3 --ell 0");
  CHECK(r.exit_code == 0);
  const std::vector<std::string> rows = lines_of(r.out);
  REQUIRE(rows.size() == 3);
  for (const std::string& row : rows) {
    const nlohmann::json j = nlohmann::json::parse(row);
    CHECK(j.at("passed") == true);
    CHECK(j.at("counts").at("magog") == "7");
  }
  CHECK(r.err.find("roundtrip n=3 ell=0: pass") != std::string::npos);

  const RunResult capped = run_cli("verify --n 6 --ell 2 --check roundtrip --cap 10");
  CHECK(capped.exit_code == 0);
  CHECK(nlohmann::json::parse(capped.out).at("skipped") == true);
  CHECK(capped.err.find("(enumeration skipped)") != std::string::npos);
}

TEST_CASE("render draws the staggered layout with optional annotations") {
  const std::string magog = "magog 8 0\n1 1 2 4 4 5 7\n1 2 2 4 4 6 7 7\n";
  const RunResult plain = run_cli("render", magog);
  CHECK(plain.exit_code == 0);
  CHECK(plain.out == "1 1 2 4 4 5 7\n 1 2 2 4 4 6 7 7\n");

  const RunResult marked = run_cli("render --mark-bug", magog);
  CHECK(marked.out.find("\\ bug j=3") != std::string::npos);

  const RunResult bounds = run_cli("render --bounds", "magog 3 0\n1 1\n1 1 1\n");
  CHECK(bounds.out == "1 1\n 1 1 1\nmax:\n1 2\n 1 2 3\n");

  const RunResult pivot = run_cli("render --mark-pivot", kGogCase1);
  CHECK(pivot.out.find("\\ k=3") != std::string::npos);
}

TEST_CASE("usage errors are their own exit code") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("count --kind magog --n 3 --frobnicate").exit_code == 2);
  CHECK(run_cli("count --kind quux --n 3").exit_code == 2);
  CHECK(run_cli("enumerate --kind magog --n 2").exit_code == 2);
}
