#include <doctest.h>

#include <fstream>
#include <sstream>

#include "qlogic/cli.hpp"
#include "qlogic/error.hpp"
#include "qlogic/stone.hpp"
#include "support.hpp"

using namespace qtest;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  for (auto& a : args) {
    if (a.rfind("@", 0) == 0) a = data_path(a.substr(1)).string();
  }
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("lattice files round-trip through json export") {
  for (const char* file : {"mo2.lat", "boolean2.lat"}) {
    CAPTURE(file);
    auto l = load_orthoposet(file);
    auto again = to_orthoposet(parse_lattice(export_hasse(l, HasseFormat::json)));
    CHECK(again == l);
  }
  for (const char* file : {"chain3.lat", "chain4.lat", "pentagon.lat", "fig3i.lat"}) {
    CAPTURE(file);
    auto l = load_set_lattice(file);
    auto doc = parse_lattice(export_hasse(l, HasseFormat::json));
    auto again = to_set_lattice(doc);
    REQUIRE(again.size() == l.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
      CHECK(again.name(i) == l.name(i));
      CHECK(again.mask(i) == l.mask(i));
    }
  }
}

TEST_CASE("hasse export of MO2 and the two-chain") {
  auto table = export_hasse(mo2(), HasseFormat::table);
  CHECK(table.rfind("6 nodes, 8 covering edges\n", 0) == 0);
  auto chain = export_hasse(two_chain(), HasseFormat::table);
  CHECK(chain.rfind("2 nodes, 1 covering edges\n", 0) == 0);
  auto dot = export_hasse(mo2(), HasseFormat::dot);
  CHECK(contains(dot, "digraph"));
  CHECK(contains(dot, "\"0\" -> \"p-\""));
  CHECK_THROWS_AS(parse_hasse_format("svg"), InvalidInput);
}

TEST_CASE("stone overlay marks six nodes of the 16-element cube") {
  auto l = mo2();
  auto e = stone_embed(l);
  std::vector<std::string> ground{"1", "2", "3", "4"};
  auto cube = powerset(ground);
  std::vector<bool> marked(cube.size(), false);
  for (Element x = 0; x < l.size(); ++x) {
    SetMask m = 0;
    for (std::size_t i = 0; i < 4; ++i) m |= SetMask{e.image[x][i]} << i;
    marked[*cube.find(m)] = true;
  }
  auto table = export_hasse(cube, HasseFormat::table, marked);
  CHECK(table.rfind("16 nodes, 32 covering edges, 6 marked\n", 0) == 0);
  auto dot = export_hasse(cube, HasseFormat::dot, marked);
  std::size_t rings = 0;
  for (auto pos = dot.find("peripheries=2"); pos != std::string::npos;
       pos = dot.find("peripheries=2", pos + 1)) {
    ++rings;
  }
  CHECK(rings == 6);
}

TEST_CASE("ray file parsing") {
  auto doc = parse_rays(read_file(data_path("peres33.rays")));
  CHECK(doc.vectors.size() == 33);
  REQUIRE(doc.exact);
  auto set = load_ray_set(doc, 1e-9);
  CHECK(set.exact);
  CHECK(set.tripods.size() == 16);

  auto decimal = parse_rays("# comment\n1 0 0\n0 0.5 0.5   # trailing\n\n");
  CHECK(decimal.vectors.size() == 2);
  CHECK_FALSE(decimal.exact);
  CHECK_THROWS_AS(parse_rays("1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_rays("1 0 0\n0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_rays("1 x 0\n"), ParseError);
}

TEST_CASE("malformed lattice files") {
  CHECK_THROWS_AS(parse_lattice("{"), ParseError);
  CHECK_THROWS_AS(parse_lattice("[]"), InvalidInput);
  CHECK_THROWS_AS(parse_lattice(R"({"elements": ["0","1"], "zero": "0", "one": "1"})"),
                  InvalidInput);
  CHECK_THROWS_AS(read_file(data_path("missing.lat")), IoError);
}

TEST_CASE("theory files resolve relative lattices") {
  auto doc = parse_theory(read_file(data_path("mo2.thy")), data_path(""));
  CHECK(doc.map.size() == 8);
  CHECK(to_orthoposet(doc.lattice) == mo2());
}

TEST_CASE("cli check and exit codes") {
  auto ok = cli({"check", "@mo2.lat"});
  CHECK(ok.code == kExitOk);
  CHECK(contains(ok.out, "valid orthoposet, 6 elements"));

  auto missing = cli({"check", "@nope.lat"});
  CHECK(missing.code == kExitUsage);
  CHECK_FALSE(missing.err.empty());

  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"check", "@mo2.lat", "--no-such-flag"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("cli validation failure exits 2") {
  auto path = std::filesystem::temp_directory_path() / "qlogic_broken.lat";
  {
    std::ofstream f(path);
    f << R"({"elements": ["0","1","a"], "order": [["0","a"],["a","1"]],
             "complement": {"0":"1","1":"0","a":"a"}, "zero": "0", "one": "1"})";
  }
  auto r = cli({"check", path.string()});
  CHECK(r.code == kExitValidation);
  CHECK(contains(r.err + r.out, "a"));
  std::filesystem::remove(path);
}

TEST_CASE("cli stone table") {
  auto r = cli({"stone", "@mo2.lat", "--format", "table"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "4 maximal ideals"));
  CHECK(contains(r.out, "I1 = {0, p+, q+}"));
  CHECK(contains(r.out, "{1,2}"));
  CHECK(contains(r.out, "{2,4}"));
}

TEST_CASE("cli subcommands run on the bundled data") {
  CHECK(cli({"states", "@mo2.lat"}).code == kExitOk);
  CHECK(cli({"states", "@mo2.lat", "--regime", "additive"}).code == kExitOk);
  CHECK(cli({"kalmbach", "@fig3i.lat"}).code == kExitOk);
  CHECK(contains(cli({"kalmbach", "@pentagon.lat"}).out, "10 elements"));
  auto malhas = cli({"malhas", "@mo2.thy", "--seed", "5"});
  CHECK(malhas.code == kExitOk);
  CHECK(contains(malhas.out, "6 classes"));
  CHECK(contains(malhas.out, "64/64"));
  CHECK(contains(malhas.out, "(B,E)"));
  CHECK(cli({"partition", "@fig7.part"}).code == kExitOk);
  auto ks = cli({"ks-color", "@peres33.rays"});
  CHECK(ks.code == kExitOk);
  CHECK(contains(ks.out, "unsatisfiable"));
  CHECK(cli({"ks-color", "@peres33.rays", "--budget", "2"}).code == kExitResource);
  auto reach = cli({"reach", "--q", "0,0.6,0.8", "--p", "0.8,0,0.6", "--n", "16"});
  CHECK(reach.code == kExitOk);
  CHECK(contains(reach.out, "residual"));
  CHECK(cli({"reach", "--q", "0.8,0,0.6", "--p", "0,0.6,0.8"}).code == kExitValidation);
  CHECK(cli({"export", "@mo2.lat", "--stone", "--format", "table"}).code == kExitOk);
  CHECK(contains(cli({"export", "@mo2.lat"}).out, "digraph"));
}

TEST_CASE("cli json output parses") {
  auto r = cli({"export", "@mo2.lat", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  CHECK(to_orthoposet(parse_lattice(r.out)) == mo2());
}

TEST_CASE("deterministic output is byte-identical across runs") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"malhas", "@mo2.thy", "--seed", "9"},
        std::vector<std::string>{"ks-color", "@peres33.rays", "--deterministic"},
        std::vector<std::string>{"stone", "@mo2.lat"}}) {
    CHECK(cli(args).out == cli(args).out);
  }
}
