#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "dk/json_io.hpp"

using namespace dk;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

std::string temp_input(const std::string& text) {
  static int counter = 0;
  std::string path = "dkc_input_" + std::to_string(counter++) + ".json";
  std::ofstream(path) << text;
  return path;
}

CliResult run_cli(const std::string& args, const std::string& input = "") {
  std::string cmd = std::string(DKC_PATH) + " " + args;
  if (!input.empty()) cmd += " --input " + temp_input(input);
  cmd += " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  CliResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WEXITSTATUS(status);
  return r;
}

json run_json(const std::string& args, const std::string& input = "") {
  CliResult r = run_cli(args, input);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::string arrow_functor_input() {
  CatValuedFunctor f;
  f.base = arrow_category();
  f.fiber = {terminal_category(), discrete_category({"p", "q"})};
  f.transition = {identity_fin_functor(f.fiber[0]),
                  constant_fin_functor(f.fiber[1], f.fiber[0], 0),
                  identity_fin_functor(f.fiber[1])};
  json j{{"base", category_to_json(f.base)},
         {"fibers", json::array()},
         {"transitions", json::array()}};
  for (const auto& c : f.fiber) j["fibers"].push_back(category_to_json(c));
  for (const auto& t : f.transition) j["transitions"].push_back(functor_to_json(t));
  return j.dump();
}

std::string intro_instance_input() {
  ChainComplexFp b = single_group_complex(FpAbelianGroup::free_group(1), 1, 2);
  K0Simplex s;
  s.n = 2;
  s.classes[{0}] = {};
  s.classes[{1}] = {};
  s.classes[{2}] = {};
  s.classes[{0, 1}] = {Int(1)};
  s.classes[{0, 2}] = {Int(3)};
  s.classes[{1, 2}] = {Int(2)};
  s.classes[{0, 1, 2}] = {};
  return json{{"complex", complex_to_json(b)}, {"simplex", k0_simplex_to_json(s)}}.dump();
}

std::string z1_input() {
  return complex_to_json(single_group_complex(FpAbelianGroup::free_group(1), 1, 1)).dump();
}

}  // namespace

TEST_CASE("snf examples: identity stays put, [[2,4],[6,8]] gives diag(2,4)") {
  json id = run_json("snf", "[[1,0],[0,1]]");
  CHECK(id["diagonal"] == json::parse("[1,1]"));
  CHECK(id["rank"] == 2);
  json r = run_json("snf", "[[2,4],[6,8]]");
  CHECK(r["diagonal"] == json::parse("[2,4]"));
  IntMatrix s = matrix_from_json(r["s"]);
  IntMatrix u = matrix_from_json(r["u"]);
  IntMatrix v = matrix_from_json(r["v"]);
  IntMatrix m{{2, 4}, {6, 8}};
  IntMatrix umv = u * m * v;
  CHECK(umv.at(0, 0) == s.at(0, 0));
  CHECK(umv.at(1, 1) == s.at(1, 1));
}

TEST_CASE("normal-form on the diag(2,3) presentation gives factor 6") {
  json r = run_json("normal-form", "[[2,0],[0,3]]");
  CHECK(r["free_rank"] == 0);
  CHECK(r["invariant_factors"] == json::parse("[6]"));
}

TEST_CASE("solve reports solvability") {
  json ok = run_json("solve", R"({"matrix": [[2,0],[0,3]], "rhs": [4,9]})");
  CHECK(ok["solvable"] == true);
  CHECK(ok["solution"] == json::parse("[2,3]"));
  json no = run_json("solve", R"({"matrix": [[2]], "rhs": [3]})");
  CHECK(no["solvable"] == false);
}

TEST_CASE("dk nerve of the degree-one line has level ranks 0,1,2,3") {
  json r = run_json("dk nerve --max-dim 3", z1_input());
  CHECK(r["level_ranks"] == json::parse("[0,1,2,3]"));
  SimplicialAbGroup nv = simplicial_group_from_json(r["nerve"]);
  CHECK(nv.truncation == 3);
}

TEST_CASE("dk counit and unit pass on the pipeline examples") {
  CliResult counit = run_cli("dk counit --max-dim 4", z1_input());
  CHECK(counit.code == 0);
  CHECK(json::parse(counit.out)["verdict"] == "pass");

  json nerve = run_json("dk nerve --max-dim 3", z1_input())["nerve"];
  CliResult unit = run_cli("dk unit", nerve.dump());
  CHECK(unit.code == 0);
  CHECK(json::parse(unit.out)["verdict"] == "pass");

  CliResult omega = run_cli("dk omega-check", nerve.dump());
  CHECK(omega.code == 0);
}

TEST_CASE("dk normalize recovers the input complex of a nerve") {
  json nerve = run_json("dk nerve --max-dim 3", z1_input())["nerve"];
  json norm = run_json("dk normalize", nerve.dump());
  ChainComplexFp c = complex_from_json(norm);
  CHECK(normal_form(c.levels[1]).free_rank == 1);
  CHECK(normal_form(c.levels[0]).free_rank == 0);
  CHECK(normal_form(c.levels[2]).free_rank == 0);
}

TEST_CASE("dk conservativity verdict on an identity map") {
  SimplicialAbGroup a = free_simplicial_abelian_group(standard_simplex(1, 2));
  SimplicialMap id = identity_simplicial_map(a);
  json j{{"source", simplicial_group_to_json(a)},
         {"target", simplicial_group_to_json(a)},
         {"levels", json::array()}};
  for (const auto& h : id.level_maps) j["levels"].push_back(matrix_to_json(h.matrix));
  CliResult r = run_cli("dk conservativity", j.dump());
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["result"]["ladder_ok"] == true);
}

TEST_CASE("twocat cube prints the eight q-cube labels") {
  json r = run_json("twocat cube --k 2 --which q");
  CHECK(r["dimension"] == 3);
  CHECK(r["labels"] ==
        json::parse(R"(["01","02","11","12","001","002","011","012"])"));
}

TEST_CASE("twocat sigma, slice, nerve, and obligations emit artifacts") {
  json s = run_json("twocat sigma", "[0,1,2]");
  CHECK(s["two_cat"]["objects"].size() == 3);

  json sl = run_json("twocat slice --n 1");
  CHECK(sl["labels"].size() == 5);  // 0, 1, 00, 01, 11

  std::string poset = json{{"poset", json{{"labels", {"a", "b"}},
                                          {"leq", {{true, true}, {false, true}}}}}}
                          .dump();
  json nerve = run_json("twocat nerve --max-dim 2", poset);
  TruncSset x = sset_from_json(nerve);
  CHECK(x.size(0) == 2);
  CHECK(x.size(1) == 3);

  json ob = run_json("twocat obligations --n 2");
  CHECK(ob["n"] == 2);
  CHECK(ob["zero_obligations"].size() == 5);
}

TEST_CASE("groth commands: chi artifact, eta-check and compare verdicts") {
  std::string input = arrow_functor_input();
  json c = run_json("groth chi", input);
  FiberedSset fs = fibered_from_json(c);
  CHECK(fs.total.size(0) == 3);

  CliResult eta = run_cli("groth eta-check", input);
  CHECK(eta.code == 0);
  CHECK(json::parse(eta.out)["verdict"] == "pass");

  CliResult cmp = run_cli("groth compare", input);
  CHECK(cmp.code == 0);
  json rep = json::parse(cmp.out);
  CHECK(rep["result"]["chi_sizes"] == json::parse("[3,5,7]"));

  json g = run_json("groth gamma",
                    json{{"functor", json::parse(input)}, {"object", 1}}.dump());
  CHECK(g["level_sizes"] == json::parse("[2,2,2]"));

  json l = run_json("groth lax", input);
  CHECK(l["total"]["labels"][2].size() == 7);
}

TEST_CASE("k0 commands: intro instance passes, perturbed instance fails with exit 1") {
  CliResult pass = run_cli("k0 check-nerve", intro_instance_input());
  CHECK(pass.code == 0);
  CHECK(json::parse(pass.out)["verdict"] == "pass");

  json bad = json::parse(intro_instance_input());
  bad["simplex"]["classes"]["0,2"] = json::parse("[4]");
  CliResult fail = run_cli("k0 check-nerve", bad.dump());
  CHECK(fail.code == 1);
  json rep = json::parse(fail.out);
  CHECK(rep["verdict"] == "fail");
  CHECK(rep["counterexample"]["subset"] == json::parse("[0,1,2]"));
}

TEST_CASE("k0 check-s, decat, and tot round-trip through the binary") {
  ChainComplexFp b = single_group_complex(FpAbelianGroup::free_group(1), 0, 1);
  RankTriangle t;
  t.n = 1;
  t.vertices = {{Int(2)}, {Int(2)}};
  t.edges[{0, 0}] = {};
  t.edges[{1, 1}] = {};
  t.edges[{0, 1}] = {};
  std::string input =
      json{{"complex", complex_to_json(b)}, {"triangle", rank_triangle_to_json(t)}}.dump();
  CliResult r = run_cli("k0 check-s", input);
  CHECK(r.code == 0);
  json d = run_json("k0 decat", input);
  CHECK(d["classes"]["0"] == json::parse("[2]"));

  json tot = run_json("k0 tot",
                      R"({"group": {"generators": 1, "relations": [[]]},
                          "k": 2, "cube": [[1],[4],[2],[9]]})");
  CHECK(tot["total"] == json::parse("[4]"));
}

TEST_CASE("identical inputs produce byte-identical output") {
  std::string input = arrow_functor_input();
  CliResult a = run_cli("groth chi", input);
  CliResult b = run_cli("groth chi", input);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CliResult c = run_cli("twocat obligations --n 2");
  CliResult d = run_cli("twocat obligations --n 2");
  CHECK(c.out == d.out);
}

TEST_CASE("exit codes: 2 on malformed input, 3 on exhausted budget") {
  CHECK(run_cli("snf", "not json at all").code == 2);
  CHECK(run_cli("dk nerve", "{\"truncation\": 0}").code == 2);
  CHECK(run_cli("groth chi --budget 2", arrow_functor_input()).code == 3);
  CHECK(run_cli("twocat cube --which z --k 1").code == 2);
}

TEST_CASE("seed and timing flags decorate reports without changing verdicts") {
  CliResult r = run_cli("groth eta-check --seed 11 --timing --parallel",
                        arrow_functor_input());
  CHECK(r.code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["parameters"]["seed"] == 11);
  CHECK(rep.contains("duration_ms"));
}

TEST_CASE("dot output renders digraphs") {
  CliResult r = run_cli("twocat slice --n 1 --format dot");
  CHECK(r.code == 0);
  CHECK(r.out.find("digraph poset") != std::string::npos);
  CliResult c = run_cli("groth chi --format dot", arrow_functor_input());
  CHECK(c.out.find("digraph skeleton") != std::string::npos);
  CHECK(run_cli("snf --format dot", "[[1]]").code == 2);
}
