#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "matpart/cli.hpp"
#include "matpart/zoo.hpp"

using namespace matpart;
using namespace matpart::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json doc() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("matpart_cli_" + name);
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

// Three blocks of size 2 over a..f, cap 1, same matroid twice.
const char* kBlocks = R"({
  "ground": ["a", "b", "c", "d", "e", "f"],
  "matroids": [
    {"kind": "partition", "blocks": [{"elements": ["a", "b"], "cap": 1},
                                     {"elements": ["c", "d"], "cap": 1},
                                     {"elements": ["e", "f"], "cap": 1}]},
    {"kind": "uniform", "rank": 3}
  ]
})";

}  // namespace

TEST_CASE("konig demo partitions into matchings") {
  const Run r = run({"partition", "builtin:konig-demo", "-k", "3", "--transcript"});
  REQUIRE(r.code == kOk);
  const Json d = r.doc();
  CHECK(d["status"] == "ok");
  CHECK(d["mode"] == "laminar");
  CHECK(d["parts"].size() == 3);
  CHECK(d["transcript"].size() == 2);
  const std::string result = temp_file("konig_result.json", r.out);
  CHECK(run({"verify", "builtin:konig-demo", result}).code == kOk);
}

TEST_CASE("k = 2 is not enough for a degree-3 vertex") {
  const Run r = run({"partition", "builtin:konig-demo", "-k", "2"});
  CHECK(r.code == kNegative);
  const Json d = r.doc();
  CHECK(d["status"] == "infeasible");
  CHECK(d["certificate"]["name"].get<std::string>().rfind("E in I", 0) == 0);
}

TEST_CASE("k4 in generic mode exits 1 with both certificates") {
  const Run r = run({"partition", "builtin:k4", "-k", "2", "--mode", "generic"});
  CHECK(r.code == kNegative);
  const Json d = r.doc();
  CHECK(d["status"] == "infeasible");
  CHECK(d["certificate"]["kind"] == "padded-intersection");
  CHECK(d["certificate"]["exhaustive"]["found"] == false);
}

TEST_CASE("k4 auto mode reports the spanned hypothesis") {
  const Run r = run({"partition", "builtin:k4", "-k", "2"});
  CHECK(r.code == kNegative);
  // Auto mode falls back to generic; the reduction then fails.
  CHECK(r.doc()["mode"] == "generic");
  const Run s = run({"spanned", "builtin:k4", "-k", "2"});
  CHECK(s.code == kNegative);
  const Json d = s.doc();
  CHECK(d["matroids"][0]["elements"].size() == 6);
  CHECK(d["matroids"][1]["elements"].size() == 0);
}

TEST_CASE("overlapping blocks are invalid input") {
  const std::string path = temp_file("overlap.json", R"({
    "ground": ["a", "b", "c"],
    "matroids": [
      {"kind": "partition", "blocks": [{"elements": ["a", "b"], "cap": 1},
                                       {"elements": ["b", "c"], "cap": 1}]},
      {"kind": "uniform", "rank": 2}]})");
  const Run r = run({"partition", path, "-k", "2"});
  CHECK(r.code == kInvalidInput);
  CHECK(r.err.find("matroids[0].blocks") != std::string::npos);
}

TEST_CASE("unknown fields and syntax errors are located") {
  const std::string extra = temp_file("extra.json", R"({
    "ground": ["a"], "matroids": [{"kind": "uniform", "rank": 1, "colour": 3},
                                  {"kind": "uniform", "rank": 1}]})");
  const Run r = run({"partition", extra, "-k", "1"});
  CHECK(r.code == kInvalidInput);
  CHECK(r.err.find("matroids[0].colour: unknown field") != std::string::npos);

  const std::string broken = temp_file("broken.json", "{\n  \"ground\": [\"a\",]\n}");
  const Run b = run({"partition", broken, "-k", "1"});
  CHECK(b.code == kInvalidInput);
  CHECK(b.err.find("line 2") != std::string::npos);

  CHECK(run({"partition", "/nonexistent/x.json", "-k", "1"}).code == kInvalidInput);
  CHECK(run({"partition", "builtin:k4"}).code == kInvalidInput);
  CHECK(run({"partition", "builtin:k4", "-k", "0"}).code == kInvalidInput);
  CHECK(run({"frobnicate"}).code == kInvalidInput);
}

TEST_CASE("verify rejects tampered parts") {
  const std::string inst = temp_file("blocks.json", kBlocks);
  const Run r = run({"partition", inst, "-k", "2"});
  REQUIRE(r.code == kOk);
  Json d = r.doc();
  CHECK(run({"verify", inst, temp_file("good.json", d.dump())}).code == kOk);

  // Move one element so a part holds both members of a block.
  Json bad = d;
  const std::string moved = bad["parts"][1][0];
  bad["parts"][1].erase(0);
  bad["parts"][0].push_back(moved);
  const Run v = run({"verify", inst, temp_file("bad.json", bad.dump())});
  CHECK(v.code == kNegative);
  CHECK(v.doc()["failure"].get<std::string>().find("part 0") != std::string::npos);

  Json missing = d;
  missing["parts"][1].erase(0);
  CHECK(run({"verify", inst, temp_file("missing.json", missing.dump())}).code == kNegative);
}

TEST_CASE("laminar pair export passes the paramodular check") {
  const std::string inst = temp_file("blocks2.json", kBlocks);
  const std::string pair = temp_file("pair.json", run({"export-pair", inst, "-k", "2"}).out);
  const Run r = run({"paramodular-check", pair});
  CHECK(r.code == kOk);
  CHECK(r.doc()["report"]["passed"] == true);

  const Run rank = run({"export-pair", inst, "-k", "2", "--pair", "rank", "--matroid", "2"});
  REQUIRE(rank.code == kOk);
  const Run full =
      run({"paramodular-check", temp_file("rank.json", rank.out), "--mode", "full", "--local"});
  CHECK(full.code == kOk);

  CHECK(run({"export-pair", inst, "-k", "2", "--matroid", "2"}).code == kInvalidInput);
}

TEST_CASE("a non-paramodular table exits 1") {
  const std::string pair = temp_file("badpair.json", R"({
    "ground": ["a", "b"],
    "entries": [{"set": [], "p": 0, "b": 0}, {"set": ["a"], "p": 0, "b": 1},
                {"set": ["b"], "p": 0, "b": 1}, {"set": ["a", "b"], "p": 2, "b": 2}]})");
  const Run r = run({"paramodular-check", pair, "--mode", "full"});
  CHECK(r.code == kNegative);
  CHECK(r.doc()["report"]["violation_count"].get<int>() > 0);
}

TEST_CASE("counterexamples reproduce") {
  const Run f = run({"counterexample", "figure1"});
  CHECK(f.code == kOk);
  const Json d = f.doc();
  CHECK(d["reproduced"] == true);
  CHECK(d["violation"]["e"] == "e3");
  CHECK(d.items().begin().key() == "name");
  CHECK(std::prev(d.end()).key() == "violation");

  const Run k = run({"counterexample", "k4"});
  CHECK(k.code == kOk);
  CHECK(k.doc()["exhaustive"]["found"] == false);
  CHECK(run({"counterexample", "nope"}).code == kInvalidInput);
}

TEST_CASE("gmatroid check of the figure1 family") {
  const Json fam = run({"counterexample", "figure1"}).doc();
  const Json doc = {{"ground", fam["graph"]["left"]}, {"family", fam["family_J"]}};
  const Run r = run({"gmatroid-check", temp_file("family.json", doc.dump())});
  CHECK(r.code == kNegative);
  CHECK(r.doc()["violation_count"].get<int>() > 0);
}

TEST_CASE("oracle subcommands agree with the algorithms") {
  CHECK(run({"oracle", "partition", "builtin:k4", "-k", "2"}).code == kNegative);
  CHECK(run({"oracle", "partition", "builtin:konig-demo", "-k", "3"}).code == kOk);
  CHECK(run({"oracle", "rank-formula", "builtin:k4", "-k", "2"}).code == kOk);
  CHECK(run({"oracle", "rank-formula", "builtin:k4", "-k", "1", "--set", "12", "13", "23"})
            .doc()["formula"] == 2);
  const Run mc = run({"oracle", "max-common", "builtin:k4"});
  CHECK(mc.code == kOk);
  CHECK(mc.doc()["size"] == 3);
  CHECK(run({"oracle", "family", "builtin:konig-demo", "-k", "3"}).code == kOk);
  CHECK(run({"oracle", "pad-bounds", "builtin:konig-demo", "-k", "3"}).code == kOk);
}

TEST_CASE("output is byte-deterministic and --output writes a file") {
  const std::vector<std::string> args{"partition", "builtin:konig-demo", "-k", "3",
                                      "--transcript"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.out == b.out);
  CHECK(run({"counterexample", "figure1"}).out == run({"counterexample", "figure1"}).out);

  const auto path = std::filesystem::temp_directory_path() / "matpart_cli_written.json";
  std::filesystem::remove(path);
  std::vector<std::string> with_output = args;
  with_output.insert(with_output.end(), {"--output", path.string()});
  const Run w = run(with_output);
  CHECK(w.code == kOk);
  CHECK(w.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == a.out);
}

TEST_CASE("show prints documents that load back") {
  for (const auto& name : builtin_names()) {
    const Run r = run({"show", name});
    REQUIRE(r.code == kOk);
    CHECK_NOTHROW(parse_instance(r.doc()));
  }
}
