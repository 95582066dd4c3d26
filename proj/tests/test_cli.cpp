#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>
#include <sys/wait.h>
#include <vector>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string cli_path() {
  const char* bin = std::getenv("SEPSYM_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "SEPSYM_BIN must point at the sepsym binary");
  return bin;
}

std::string fixtures_path() {
  const char* fx = std::getenv("SEPSYM_FIXTURES");
  REQUIRE_MESSAGE(fx != nullptr, "SEPSYM_FIXTURES must point at the fixture file");
  return fx;
}

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<json> json_lines(const std::string& out) {
  std::vector<json> lines;
  std::size_t start = 0;
  while (start < out.size()) {
    std::size_t end = out.find('\n', start);
    if (end == std::string::npos) end = out.size();
    if (end > start) lines.push_back(json::parse(out.substr(start, end - start)));
    start = end + 1;
  }
  return lines;
}

}  // namespace

TEST_CASE("verify-main") {
  auto r = run("verify-main --q 3 --n 12");
  CHECK(r.exit_code == 0);
  auto rec = json_lines(r.out).at(0);
  CHECK(rec["separating"] == true);
  CHECK(rec["set"] == json::array({1, 2, 3, 6, 9}));
  CHECK(rec["orbitCount"] == "91");

  CHECK(run("verify-main --q 7 --n 8").exit_code == 0);
  CHECK(run("verify-main --q 4 --n 1").exit_code == 0);
}

TEST_CASE("verify-main exit codes") {
  CHECK(run("verify-main --q 11 --n 10 --cap 1000").exit_code == 65);  // TooMany
  CHECK(run("verify-main --q 6 --n 3").exit_code == 64);               // not a prime power
  CHECK(run("verify-main --n 3").exit_code == 64);                     // missing --q
  CHECK(run("verify-main --q 3 --n 3 --bogus").exit_code == 64);
}

TEST_CASE("reconstruct") {
  {
    std::ofstream f("values_ok.json");
    f << R"({"1": 0, "2": 2})";
  }
  auto r = run("reconstruct --q 3 --n 2 --values values_ok.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1:1,2:1/2\n");

  {
    std::ofstream f("values_zero.json");
    f << R"({"1": 0, "2": 0, "3": 0, "6": 0, "9": 0})";
  }
  auto rz = run("reconstruct --q 3 --n 9 --values values_zero.json");
  CHECK(rz.exit_code == 0);
  CHECK(rz.out == "/9\n");

  // q=3, n=2: (0, 1) is not a signature of any orbit
  {
    std::ofstream f("values_bad.json");
    f << R"({"1": 0, "2": 1})";
  }
  auto rb = run("reconstruct --q 3 --n 2 --values values_bad.json");
  CHECK(rb.exit_code == 3);
  CHECK(rb.out == "NO_PREIMAGE\n");

  {
    std::ofstream f("values_malformed.json");
    f << "{nope";
  }
  CHECK(run("reconstruct --q 3 --n 2 --values values_malformed.json").exit_code == 64);
  CHECK(run("reconstruct --q 3 --n 2 --values missing_file.json").exit_code == 64);

  {
    std::ofstream f("values_16.json");
    f << R"({"1": 0, "2": 0})";
  }
  CHECK(run("reconstruct --q 16 --n 2 --values values_16.json").exit_code == 65);

  // the q = 9 recovery search is gated behind a flag
  CHECK(run("reconstruct --q 9 --n 2 --values values_16.json").exit_code == 65);
  auto r9 = run("reconstruct --q 9 --n 2 --values values_16.json --allow-q9");
  CHECK(r9.exit_code == 0);
  CHECK(r9.out == "/2\n");

  for (const char* p : {"values_ok.json", "values_zero.json", "values_bad.json",
                        "values_malformed.json", "values_16.json"})
    std::remove(p);
}

TEST_CASE("search") {
  auto found = run("search --q 3 --n 2 --k 2");
  CHECK(found.exit_code == 0);
  auto rec = json_lines(found.out).at(0);
  CHECK(rec["found"] == true);
  CHECK(rec["kind"] == "irreplaceable");
  CHECK(rec["v"] == "1:1,2:1/2");
  CHECK(rec["w"] == "/2");

  CHECK(run("search --q 7 --n 5 --k 5").exit_code == 3);

  auto all = run("search --q 5 --n 3 --all-k");
  CHECK(all.exit_code == 0);
  CHECK(json_lines(all.out).size() == 3);

  CHECK(run("search --q 3 --n 2").exit_code == 64);             // neither --k nor --all-k
  CHECK(run("search --q 3 --n 2 --k 1 --all-k").exit_code == 64);
}

TEST_CASE("minimal") {
  auto r = run("minimal --q 7 --n 5");
  CHECK(r.exit_code == 0);
  auto rec = json_lines(r.out).at(0);
  CHECK(rec["set"] == json::array({1, 2, 3, 4}));
  CHECK(rec["mode"] == "one_greedy");

  auto all = run("minimal --q 2 --n 4 --all");
  CHECK(all.exit_code == 0);
  CHECK(json_lines(all.out).at(0)["set"] == json::array({1, 2, 4}));

  CHECK(run("minimal --q 3 --n 2 --set 1").exit_code == 2);  // {s_1} does not separate
}

TEST_CASE("bounds") {
  auto r = run("bounds --q 3 --n 9");
  CHECK(r.exit_code == 0);
  auto rec = json_lines(r.out).at(0);
  CHECK(rec["setSize"] == 5);
  CHECK(rec["orbitCount"] == "55");
  CHECK(rec["klrBound"] == 4);
  CHECK(rec["defect"] == 1);

  auto range = run("bounds --q 3 --n 1..5");
  CHECK(json_lines(range.out).size() == 5);
}

TEST_CASE("multisym") {
  auto r = run("multisym --q 3 --m 2 --n 8");
  CHECK(r.exit_code == 0);
  auto rec = json_lines(r.out).at(0);
  CHECK(rec["mainSize"] == 16);
  CHECK(rec["amitsurSize"] == 44);
  CHECK(rec["cheapSize"] == 72);
  CHECK(rec["klrBound"] == 9);

  auto v = run("multisym --q 3 --m 2 --n 5 --family main --verify");
  CHECK(v.exit_code == 0);
  auto lines = json_lines(v.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[1]["separating"] == true);

  CHECK(run("multisym --q 3 --m 2 --n 26 --family main --verify --cap 1000000").exit_code == 65);
}

TEST_CASE("lacunary") {
  CHECK(run("lacunary --q 3 --f 0,0,1 --g 0,0,1").exit_code == 0);

  auto differ = run("lacunary --q 3 --f 2,0,1 --g 0,0,1");
  CHECK(differ.exit_code == 3);
  auto rec = json_lines(differ.out).at(0);
  CHECK(rec["result"] == "differ_at");
  CHECK(rec["degree"] == 0);

  auto ns = run("lacunary --q 2 --f 1,1,1 --g 0,0,1");
  CHECK(ns.exit_code == 3);
  CHECK(json_lines(ns.out).at(0)["result"] == "not_split");

  CHECK(run("lacunary --q 3 --f 0,1 --g 0,0,1").exit_code == 64);   // degree mismatch
  CHECK(run("lacunary --q 3 --f 0,0,2 --g 0,0,2").exit_code == 64); // not monic
}

TEST_CASE("witness-table") {
  auto r = run("witness-table --fixtures " + fixtures_path());
  CHECK(r.exit_code == 0);
  auto lines = json_lines(r.out);
  CHECK(lines.size() == 19);
  for (const auto& rec : lines) CHECK(rec["ok"] == true);

  // corrupt one row and expect a falsification exit
  std::ifstream in(fixtures_path());
  json doc;
  in >> doc;
  doc[1]["k"] = 1;  // the q=3 pair [1,2] vs [0,0] differs at 2, not 1
  {
    std::ofstream out("fixtures_broken.json");
    out << doc.dump();
  }
  CHECK(run("witness-table --fixtures fixtures_broken.json").exit_code == 2);
  std::remove("fixtures_broken.json");
}

TEST_CASE("output is byte-identical across worker counts") {
  for (const std::string& cmd :
       {std::string("verify-main --q 5 --n 8"), std::string("search --q 5 --n 4 --all-k"),
        std::string("multisym --q 3 --m 2 --n 4 --verify")}) {
    auto one = run(cmd + " --workers 1");
    auto four = run(cmd + " --workers 4");
    CHECK(one.exit_code == four.exit_code);
    CHECK(one.out == four.out);
  }
}

TEST_CASE("formats and --out") {
  auto csv = run("bounds --q 3 --n 1..3 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("q,n,setSize,orbitCount,klrBound,defect\n", 0) == 0);

  auto table = run("bounds --q 3 --n 9 --format table");
  CHECK(table.out.find("klrBound") != std::string::npos);

  CHECK(run("bounds --q 3 --n 9 --format yaml").exit_code == 64);

  auto to_file = run("bounds --q 3 --n 9 --out bounds_out.json");
  CHECK(to_file.exit_code == 0);
  CHECK(to_file.out.empty());
  std::ifstream f("bounds_out.json");
  std::string line;
  std::getline(f, line);
  CHECK(json::parse(line)["orbitCount"] == "55");
  std::remove("bounds_out.json");
}
