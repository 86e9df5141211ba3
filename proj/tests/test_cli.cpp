#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "support.hpp"
#include "topochar/io.hpp"

using namespace topochar;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "topochar");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = "cli_test_" + name + ".txt";
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("info") {
  const std::string oct = write_temp("oct", facets_text(octahedron()));
  const Run plain = run({"info", oct});
  CHECK(plain.code == cli::kPass);
  CHECK(plain.out == "f_vector=[6,12,8] dimension=2 n_simplices=26 w1=2 w2=2 w3=2 fermi=1\n");
  const Run json = run({"info", oct, "--json"});
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["w2"] == 2);
  const Run path = run({"info", write_temp("path3", "1 2\n2 3\n"), "--json"});
  CHECK(nlohmann::json::parse(path.out)["w2"] == -1);
  const Run empty = run({"info", write_temp("empty", ""), "--json"});
  CHECK(nlohmann::json::parse(empty.out)["w1"] == 0);
  const Run bad = run({"info", write_temp("bad", "1 2\n3 x\n")});
  CHECK(bad.code == cli::kInput);
  CHECK(bad.err.find("line 2") != std::string::npos);
}

TEST_CASE("verify suites and exit codes") {
  const std::string r = write_temp("r", facets_text(random_whitney(9, 15, 1)));
  for (const char* suite : {"energy", "energy-ball", "sphere", "dual-sphere", "valuation", "local-valuation",
                            "green-inverse", "det-fermi", "barycentric"}) {
    const Run res = run({"verify", suite, r, "--m", "2", "--k", "2", "--json"});
    CHECK_MESSAGE(res.code == cli::kPass, suite);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["suite"] == suite);
    CHECK(j["pass"] == true);
  }
  const std::string p = write_temp("p3", "1 2\n2 3\n");
  const Run product = run({"verify", "product", r, "--with", p, "--json"});
  CHECK(product.code == cli::kPass);
  CHECK(run({"verify", "product", r}).code == cli::kInput);
  CHECK(run({"verify", "nonsense", r}).code == cli::kInput);
  const Run over = run({"verify", "energy", r, "--k", "3", "--budget", "10", "--json"});
  CHECK(over.code == cli::kResource);
  CHECK(nlohmann::json::parse(over.out).contains("partial"));
}

TEST_CASE("valuation with explicit sets") {
  const std::string p = write_temp("p3v", "1 2\n2 3\n");
  CHECK(run({"verify", "valuation", p, "--set-a", "core:1-2", "--set-b", "core:2-3", "--m", "2"}).code ==
        cli::kInput);
  const Run closed = run({"verify", "valuation", p, "--set-a", "core:1-2", "--set-b", "core:2-3", "--m", "2",
                          "--allow-closed", "--json"});
  CHECK(closed.code == cli::kFail);
  CHECK(nlohmann::json::parse(closed.out)["rhs"] == -2);
  CHECK(run({"verify", "valuation", p, "--set-a", "star:1", "--set-b", "star:2", "--m", "2"}).code == cli::kPass);
  CHECK(run({"verify", "valuation", p, "--set-a", "star:7", "--set-b", "all"}).code == cli::kInput);
  CHECK(run({"verify", "valuation", p, "--set-a", "blob:1", "--set-b", "all"}).code == cli::kInput);
}

TEST_CASE("generate writes facets byte for byte") {
  const Run g = run({"generate", "--kind", "path3"});
  CHECK(g.out == "1 2\n2 3\n");
  const Run oct = run({"generate", "--kind", "octahedron"});
  CHECK(oct.out == facets_text(octahedron()));
  const Run rnd = run({"generate", "--kind", "random", "--n", "9", "--edges", "15", "--seed", "1"});
  CHECK(rnd.out == facets_text(random_whitney(9, 15, 1)));
  CHECK(run({"generate", "--kind", "cycle", "--n", "3"}).code == cli::kInput);
  CHECK(run({"generate"}).code == cli::kInput);
}

TEST_CASE("product, betti, recognize, matrix, curvature, bench") {
  const std::string i = write_temp("i", "1 2\n");
  const Run sq = run({"product", i, i});
  CHECK(f_vector(parse_complex(sq.out)).counts == std::vector<std::size_t>{9, 16, 8});
  CHECK(run({"product", i, i, "--route", "ring"}).out == sq.out);

  const std::string tet = write_temp("tet", "1 2 3 4\n");
  CHECK(run({"betti", tet}).out == "[1,0,0,0]\n");
  CHECK(run({"betti", tet, "--set", "set:1-2-3-4"}).out == "[0,0,0,1]\n");
  CHECK(run({"betti", tet, "--set", "set:1-2"}).code == cli::kInput);

  const std::string oct = write_temp("oct2", facets_text(octahedron()));
  CHECK(run({"recognize", oct, "--what", "sphere", "--d", "2"}).code == cli::kPass);
  CHECK(run({"recognize", oct, "--what", "ball", "--d", "2"}).code == cli::kFail);
  CHECK(run({"recognize", oct, "--what", "sphere", "--d", "2", "--budget", "2"}).code == cli::kResource);

  CHECK(run({"matrix", i, "--what", "L"}).out == "[[1,0,1],[0,1,1],[1,1,1]]\n");
  CHECK(run({"matrix", i, "--what", "g"}).out == "[[0,-1,1],[-1,0,1],[1,1,-1]]\n");
  const auto cp = nlohmann::json::parse(run({"matrix", i, "--what", "charpoly"}).out);
  CHECK(cp["L"] == nlohmann::json::array({1, 1, -3, 1}));

  CHECK(run({"curvature", i, "--m", "1"}).out == "{1} 0\n{2} 0\n{1,2} 1\ntotal 1\n");

  const Run bench = run({"bench", oct, "--m", "2", "--json"});
  CHECK(bench.code == cli::kPass);
  const auto b = nlohmann::json::parse(bench.out);
  CHECK(b["equal"] == true);
  CHECK(b["naive"]["tuples"] == 26 * 26);
  CHECK(run({"bench", oct, "--m", "1"}).code == cli::kInput);
}

TEST_CASE("help exits cleanly") {
  CHECK(run({"--help"}).code == cli::kPass);
  CHECK(run({"info"}).code == cli::kInput);
}

}  // TEST_SUITE
