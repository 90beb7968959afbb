#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "fixtures.hpp"
#include "l1kit/cli.hpp"

using namespace l1kit;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string f4_text() {
  return std::string("# the four trees\n") + fixtures::kT1 + "\n" + fixtures::kT2 + "\n\n" +
         fixtures::kT3 + "\n" + fixtures::kT4 + "\n";
}

}  // namespace

TEST_CASE("reconstruct") {
  const auto r = run({"reconstruct", fixtures::fixture_path("f4.trees"), "--format", "enewick"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == std::string(fixtures::kN4) + "\n");

  const auto j = run({"reconstruct", "-"}, f4_text());
  REQUIRE(j.code == cli::kOk);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["decision"] == "yes");
  CHECK(doc["reason"].is_null());
  CHECK(doc["k"] == 2);
  CHECK(doc["network"] == fixtures::kN4);
  CHECK(doc["chosen_pairs"].size() == 2);

  const auto all = run({"reconstruct", "--all", "--format", "json"}, f4_text());
  CHECK(nlohmann::json::parse(all.out)["all_networks"].size() == 3);

  const auto three = run({"reconstruct", fixtures::fixture_path("three.trees")});
  CHECK(three.code == cli::kNoNetwork);
  CHECK(three.err.find("NOT_POWER_OF_TWO") != std::string::npos);
  const auto three_doc = nlohmann::json::parse(three.out);
  CHECK(three_doc["decision"] == "no");
  CHECK(three_doc["k"] == -1);

  const auto apart = run({"reconstruct", fixtures::fixture_path("distance2.trees")});
  CHECK(apart.code == cli::kNoNetwork);
  CHECK(apart.err.find("NOT_HYPERCUBE") != std::string::npos);

  const auto dot = run({"reconstruct", "--format", "dot"}, f4_text());
  CHECK(dot.out.find("digraph") != std::string::npos);
}

TEST_CASE("enumerate") {
  const auto e = run({"enumerate", "--format", "enewick"}, f4_text());
  CHECK(e.code == cli::kOk);
  CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 3);
  const auto j = nlohmann::json::parse(run({"enumerate"}, f4_text()).out);
  CHECK(j["sequence_count"] == 3);
  CHECK(j["network_count"] == 3);
  CHECK(run({"enumerate", fixtures::fixture_path("three.trees")}).code == cli::kNoNetwork);
}

TEST_CASE("check agrees with reconstruct") {
  for (const char* name : {"f4.trees", "three.trees", "distance2.trees"}) {
    const auto c = run({"check", fixtures::fixture_path(name)});
    const auto r = run({"reconstruct", fixtures::fixture_path(name)});
    CHECK(c.code == r.code);
    CHECK(nlohmann::json::parse(c.out)["decision"] == nlohmann::json::parse(r.out)["decision"]);
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::string trees = run({"oracle", "--leaves", "5", "--reticulations", "2", "--class",
                                   seed % 2 ? "any" : "level1", "--seed",
                                   std::to_string(seed), "--emit", "display-set"})
                                  .out;
    CHECK(run({"check"}, trees).code == run({"reconstruct"}, trees).code);
  }
  const auto doc = nlohmann::json::parse(run({"check"}, f4_text()).out);
  CHECK(doc["hypercube"] == true);
  CHECK(doc["candidates"].size() == 2);
}

TEST_CASE("rspr-graph and display-set") {
  const auto dot = run({"rspr-graph", fixtures::fixture_path("f4.trees"), "--format", "dot"});
  CHECK(dot.code == cli::kOk);
  CHECK(dot.out.find("graph") != std::string::npos);
  CHECK(dot.out.find("{1} | {1,2,3,4}") != std::string::npos);
  const auto g = nlohmann::json::parse(run({"rspr-graph"}, f4_text()).out);
  CHECK(g["vertices"].size() == 4);
  CHECK(g["edges"].size() == 4);
  CHECK(g["connected"] == true);

  const auto ds = run({"display-set", fixtures::fixture_path("n4.enewick")});
  CHECK(ds.code == cli::kOk);
  const auto d = nlohmann::json::parse(ds.out);
  CHECK(d["k"] == 2);
  CHECK(d["size"] == 4);
  CHECK(d["maximum"] == true);
  CHECK(d["encodings"].size() == 4);
  const auto nw = run({"display-set", "--format", "newick"}, fixtures::kN4);
  CHECK(std::count(nw.out.begin(), nw.out.end(), '\n') == 4);
  CHECK(run({"display-set", "--cap", "1"}, fixtures::kN4).code == cli::kInputError);
}

TEST_CASE("classify") {
  const auto c = nlohmann::json::parse(run({"classify"}, fixtures::kN4).out);
  CHECK(c["level1"] == true);
  CHECK(c["tree_child"] == true);
  const auto e = run({"classify", "--format", "enewick"}, "((b,a),c);");
  CHECK(e.out == "((a,b),c);\n");
}

TEST_CASE("exit codes and determinism") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"reconstruct", "--format", "png"}, f4_text()).code == cli::kUsage);
  CHECK(run({"reconstruct", "/nonexistent/file"}).code == cli::kInputError);
  const auto bad = run({"reconstruct"}, "((1,2),3);\n((1,2,3);\n");
  CHECK(bad.code == cli::kInputError);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"reconstruct"}, "").code == cli::kInputError);
  CHECK(run({"classify"}, "((a)#H1,b);").code == cli::kInputError);
  CHECK(run({"--help"}).code == cli::kOk);

  for (const auto& args : std::vector<std::vector<std::string>>{
           {"reconstruct", "--pretty"}, {"enumerate"}, {"rspr-graph", "--format", "dot"},
           {"check"}}) {
    const auto a = run(args, f4_text());
    const auto b = run(args, f4_text());
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
  const std::vector<std::string> gen{"oracle", "--leaves", "8", "--reticulations", "3",
                                     "--seed", "77"};
  CHECK(run(gen).out == run(gen).out);
  const auto net = run({"oracle", "--leaves", "6", "--reticulations", "2", "--no-trivial",
                        "--seed", "3"});
  CHECK(net.code == cli::kOk);
  CHECK(run({"reconstruct", "--format", "enewick"},
            run({"display-set", "--format", "newick"}, net.out).out)
            .code == cli::kOk);
}
