#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>

#include <fwf/corpus.hpp>
#include <fwf/io.hpp>

#include "support.hpp"

using namespace fwf;
using fwf::testing::cplx;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(FWF_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string corpus_file(const std::string& name) { return std::string(FWF_CORPUS_DIR) + "/" + name + ".json"; }

Json groups_as_triples(const HomologyProfile& H) {
  Json out = Json::array();
  for (int q = H.min_degree; q <= H.max_degree(); ++q) {
    const auto& g = H.at(q);
    if (g.is_zero()) continue;
    Json t = Json::array();
    for (const auto& x : g.torsion) t.push_back(static_cast<long long>(x));
    out.push_back({q, g.free_rank, t});
  }
  return out;
}

}  // namespace

TEST_CASE("parsing complex documents") {
  SECTION("4-cycle") {
    const auto doc = parse_complex(R"({"name":"C4","m":4,"generators":[[1,2],[2,3],[3,4],[1,4]]})");
    CHECK(doc.name == "C4");
    CHECK(doc.complex() == corpus::cycle(4));
    CHECK_FALSE(doc.expected);
  }
  SECTION("no generators") {
    const auto doc = parse_complex(R"({"name":"empty","m":3,"generators":[]})");
    CHECK(doc.complex().is_empty_complex());
    CHECK(doc.complex().m() == 3);
  }
  SECTION("duplicates collapse") {
    const auto doc = parse_complex(R"({"name":"d","m":3,"generators":[[2,1],[1,2],[1,2,2]]})");
    CHECK(doc.generators == std::vector<std::vector<int>>{{1, 2}});
  }
  SECTION("errors name the offending path") {
    auto message = [](const std::string& text) {
      try {
        parse_complex(text);
      } catch (const ParseError& e) {
        return std::string(e.what());
      }
      return std::string("no error");
    };
    CHECK(message(R"({"name":"bad","m":2,"generators":[[3]]})") == "$.generators[0][0]: vertex 3 > m=2");
    CHECK(message(R"({"name":"bad","m":2,"generators":[[1],[0]]})") == "$.generators[1][0]: vertex 0 < 1");
    CHECK(message(R"({"name":"bad","m":2,"generators":[[1,"x"]]})") == "$.generators[0][1]: expected integer, got string");
    CHECK(message(R"({"name":"bad","generators":[]})") == "$.m: missing");
    CHECK(message(R"({"name":"bad","m":0,"generators":[]})") == "$.m: must lie in 1..64");
    CHECK(message(R"({"name":7,"m":2,"generators":[]})") == "$.name: expected string, got number");
    CHECK(message(R"({"name":"bad","m":2,"generators":{}})") == "$.generators: expected array, got object");
    CHECK(message(R"({"name":"bad","m":2,"generators":[],"extra":1})") == "$.extra: unknown field");
    CHECK(message(R"({"name":"bad","m":2,"generators":[],"expected":[]})") == "$.expected: expected object, got array");
    CHECK(message(R"([1,2])") == "$: expected object, got array");
    CHECK(message("{").rfind("$: invalid JSON", 0) == 0);
  }
}

TEST_CASE("emission is canonical and idempotent") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto K = fwf::testing::random_complex(rng, 1 + trial % 8);
    Json j{{"name", "r"}, {"m", K.m()}, {"generators", Json::array()}};
    // Feed redundant generators: every face, shuffled.
    std::vector<VertexSet> faces;
    K.for_each_face([&](VertexSet s) { faces.push_back(s); });
    std::shuffle(faces.begin(), faces.end(), rng);
    for (auto s : faces) {
      auto v = s.vertices();
      std::shuffle(v.begin(), v.end(), rng);
      j["generators"].push_back(v);
    }
    const auto once = emit(to_json(parse_complex(j.dump())));
    const auto twice = emit(to_json(parse_complex(once)));
    CHECK(once == twice);
    CHECK(parse_complex(once).complex() == K);
  }
}

TEST_CASE("bundled corpus files") {
  const auto entries = corpus::all();
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(FWF_CORPUS_DIR)) {
    if (entry.path().extension() == ".json") ++files;
  }
  CHECK(files == entries.size());
  for (const auto& e : entries) {
    INFO(e.name);
    const auto doc = load_complex(corpus_file(e.name));
    CHECK(doc.name == e.name);
    CHECK(doc.complex() == e.complex);
    REQUIRE(doc.expected);
    const auto& x = *doc.expected;
    CHECK(x.at("reduced_homology_Z") == groups_as_triples(reduced_homology(e.complex, CoefficientRing::Z())));
    if (e.complex.m() <= 10)
      CHECK(x.at("rmac_homology_Z") ==
            groups_as_triples(cubical_homology(build_rmac(e.complex), CoefficientRing::Z())));
    // The certifier verdicts are checked through the CLI below.
  }
}

TEST_CASE("command line") {
  SECTION("certify rp2") {
    const auto r = run_cli("certify " + corpus_file("rp2_6"));
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j.at("rule") == "NEIGHBORLY_DK");
    CHECK(j.at("verdict") == "trivial");
  }
  SECTION("golod on the 4-cycle") {
    const auto r = run_cli("golod " + corpus_file("c4"));
    CHECK(r.code == 1);
    const auto j = Json::parse(r.out);
    CHECK(j.at("golod") == false);
    CHECK(j.at("join").at("witness").at("I") == Json::array({1, 3}));
    CHECK(j.at("join").at("witness").at("J") == Json::array({2, 4}));
  }
  SECTION("bbcg of two points") {
    const auto r = run_cli("bbcg " + corpus_file("boundary_d2") + " --pair 1");
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j.at("summands") == Json::parse(R"([{"I":[1,2],"spheres":[1]}])"));
    CHECK(j.at("desuspended") == true);
  }
  SECTION("certifier verdicts match the corpus expectations") {
    for (const auto& e : corpus::all()) {
      INFO(e.name);
      const auto doc = load_complex(corpus_file(e.name));
      const auto r = run_cli("certify " + corpus_file(e.name));
      const auto j = Json::parse(r.out);
      CHECK(j.at("verdict") == doc.expected->at("verdict"));
      CHECK(j.at("rule") == doc.expected->at("rule"));
      CHECK(j.at("golod").at("golod") == doc.expected->at("golod"));
      CHECK(r.code == (j.at("verdict") == "nontrivial" ? 1 : 0));
    }
  }
  SECTION("exit codes") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate x.json").code == 2);
    CHECK(run_cli("homology /nonexistent.json").code == 2);
    CHECK(run_cli("homology " + corpus_file("c4") + " --coeff Zp:4").code == 2);
    CHECK(run_cli("gcd " + corpus_file("c4")).code == 1);
    CHECK(run_cli("shell " + corpus_file("rp2_6") + " --budget-nodes 1").code == 3);
    CHECK(run_cli("shell " + corpus_file("boundary_d4") + " --dual").code == 0);
    CHECK(run_cli("scm " + corpus_file("rp2_6") + " --coeff Zp:2").code == 1);
    CHECK(run_cli("scm " + corpus_file("rp2_6") + " --coeff Zp:3").code == 0);
    CHECK(run_cli("fill " + corpus_file("c4")).code == 1);
    CHECK(run_cli("fill " + corpus_file("three_points")).code == 0);
    CHECK(run_cli("rmac " + corpus_file("c4") + " --max-m 3").code == 2);
    CHECK(run_cli("bbcg " + corpus_file("c4") + " --betti 0,1").code == 2);
    CHECK(run_cli("corpus nope").code == 2);
  }
  SECTION("output is deterministic") {
    for (const char* cmd : {"certify --all-rules", "golod", "rmac", "bbcg", "fill --homology", "dual", "nonfaces"}) {
      const std::string args = std::string(cmd) + " " + corpus_file("rp2_6");
      INFO(args);
      const auto a = run_cli(args), b = run_cli(args);
      CHECK(a.out == b.out);
      CHECK_FALSE(a.out.empty());
    }
  }
  SECTION("corpus listing and round trip") {
    const auto names = Json::parse(run_cli("corpus").out).at("complexes");
    CHECK(names.size() == corpus::all().size());
    const auto doc = parse_complex(run_cli("corpus berglund_10").out);
    CHECK(doc.complex() == corpus::berglund());
    const auto dual = Json::parse(run_cli("dual " + corpus_file("c4")).out).at("dual");
    CHECK(parse_complex(dual.dump()).complex() == alexander_dual(corpus::cycle(4)));
    CHECK(dual.at("generators") == Json::parse("[[1,3],[2,4]]"));
  }
}
