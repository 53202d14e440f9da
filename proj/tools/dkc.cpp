// dkc: command-line front end.  JSON in (stdin or --input), JSON or DOT out
// (stdout or --output).  Verification subcommands emit a run report and exit
// 1 when the property fails; malformed input exits 2; an exhausted
// enumeration budget exits 3.  Output is byte-identical across runs unless
// --timing is given.
#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <string>

#include "dk/json_io.hpp"

using namespace dk;

namespace {

struct Options {
  std::string input, output;
  std::string format = "json";
  long long budget = 500000;
  int max_dim = -1;   // -1: per-command default
  long long seed = -1;  // embedded in reports when given
  bool parallel = false;
  bool timing = false;
};

[[noreturn]] void bad_input(const std::string& msg) { throw std::invalid_argument(msg); }

json read_input(const Options& o) {
  std::string text;
  if (o.input.empty()) {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(o.input);
    if (!in) bad_input("cannot open input '" + o.input + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad_input(std::string("bad JSON: ") + e.what());
  }
}

const json& get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    bad_input(std::string("missing field '") + key + "'");
  return j.at(key);
}

void emit_text(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) bad_input("cannot open output '" + o.output + "'");
  out << text;
}

void emit(const Options& o, const json& j) { emit_text(o, j.dump(2) + "\n"); }

void json_only(const Options& o) {
  if (o.format != "json") bad_input("this command only emits json");
}

int max_dim_or(const Options& o, int fallback) {
  return o.max_dim >= 0 ? o.max_dim : fallback;
}

using Clock = std::chrono::steady_clock;

json start_report(const std::string& command, json parameters, const Options& o) {
  if (o.seed >= 0) parameters["seed"] = o.seed;
  return json{{"command", command}, {"parameters", std::move(parameters)}};
}

int finish_report(const Options& o, json report, bool ok, json counterexample,
                  Clock::time_point t0) {
  report["verdict"] = ok ? "pass" : "fail";
  if (!ok) report["counterexample"] = std::move(counterexample);
  if (o.timing)
    report["duration_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                Clock::now() - t0)
                                .count();
  json_only(o);
  emit(o, report);
  return ok ? 0 : 1;
}

// Truncate or pad with trivial levels so the complex reaches truncation M.
ChainComplexFp resize_complex(ChainComplexFp b, int M) {
  if (M < 0) bad_input("max dimension must be nonnegative");
  if (M < b.truncation) return truncate_complex(b, M);
  while (b.truncation < M) {
    FpAbelianGroup t = FpAbelianGroup::trivial();
    b.differentials.emplace_back(t, b.levels.back(),
                                 IntMatrix(b.levels.back().generators, 0));
    b.levels.push_back(t);
    b.truncation += 1;
  }
  return b;
}

// First level whose map fails to be an isomorphism, -1 when all pass.  The
// parallel path still reports the smallest failing level.
int first_non_iso(const std::vector<AbHom>& maps, bool parallel) {
  int n = static_cast<int>(maps.size());
  std::vector<char> ok(n, 0);
  if (parallel) {
    std::vector<std::future<bool>> futures;
    futures.reserve(n);
    for (int k = 0; k < n; ++k)
      futures.push_back(
          std::async(std::launch::async, [&maps, k] { return is_isomorphism(maps[k]); }));
    for (int k = 0; k < n; ++k) ok[k] = futures[k].get() ? 1 : 0;
  } else {
    for (int k = 0; k < n; ++k) ok[k] = is_isomorphism(maps[k]) ? 1 : 0;
  }
  for (int k = 0; k < n; ++k)
    if (!ok[k]) return k;
  return -1;
}

std::vector<Int> vec_add(std::vector<Int> a, const std::vector<Int>& b, const Int& sign) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
  return a;
}

// --- matrix / group utilities -----------------------------------------------

int run_snf(const Options& o) {
  json_only(o);
  IntMatrix m = matrix_from_json(read_input(o));
  SnfResult r = smith_normal_form(m);
  json diagonal = json::array();
  int d = std::min(m.rows(), m.cols());
  for (int i = 0; i < d; ++i) diagonal.push_back(int_to_json(r.s.at(i, i)));
  emit(o, json{{"s", matrix_to_json(r.s)},
               {"u", matrix_to_json(r.u)},
               {"v", matrix_to_json(r.v)},
               {"rank", r.rank},
               {"diagonal", diagonal}});
  return 0;
}

int run_solve(const Options& o) {
  json_only(o);
  json j = read_input(o);
  IntMatrix m = matrix_from_json(get(j, "matrix"));
  std::vector<Int> rhs = ints_from_json(get(j, "rhs"));
  if (static_cast<int>(rhs.size()) != m.rows())
    bad_input("rhs length must match the matrix row count");
  auto x = solve(m, rhs);
  if (x)
    emit(o, json{{"solvable", true}, {"solution", ints_to_json(*x)}});
  else
    emit(o, json{{"solvable", false}});
  return 0;
}

int run_normal_form(const Options& o) {
  json_only(o);
  json j = read_input(o);
  FpAbelianGroup g = (j.is_object() && j.contains("generators"))
                         ? group_from_json(j)
                         : [&] {
                             IntMatrix rels = matrix_from_json(j);
                             return FpAbelianGroup(rels.rows(), rels);
                           }();
  GroupNormalForm nf = normal_form(g);
  emit(o, json{{"free_rank", nf.free_rank},
               {"invariant_factors", ints_to_json(nf.invariant_factors)}});
  return 0;
}

// --- the chain-complex / simplicial-group pipeline --------------------------

int run_dk_normalize(const Options& o) {
  json_only(o);
  SimplicialAbGroup a = simplicial_group_from_json(read_input(o));
  if (o.max_dim >= 0 && o.max_dim < a.truncation) a = truncate(a, o.max_dim);
  emit(o, complex_to_json(normalized_chains(a)));
  return 0;
}

int run_dk_nerve(const Options& o) {
  json_only(o);
  ChainComplexFp b = complex_from_json(read_input(o));
  int M = max_dim_or(o, b.truncation);
  SimplicialAbGroup nv = dold_kan_nerve(resize_complex(b, M), M);
  json ranks = json::array();
  for (const auto& g : nv.levels) ranks.push_back(normal_form(g).free_rank);
  emit(o, json{{"level_ranks", ranks}, {"nerve", simplicial_group_to_json(nv)}});
  return 0;
}

int run_dk_counit(const Options& o) {
  auto t0 = Clock::now();
  ChainComplexFp b = complex_from_json(read_input(o));
  int M = max_dim_or(o, b.truncation);
  json report = start_report("dk counit", json{{"max_dim", M}}, o);
  ChainComplexFp bb = resize_complex(b, M);
  CounitData cd = counit(dold_kan_nerve_data(bb, M), bb);
  int bad = first_non_iso(cd.map.level_maps, o.parallel);
  return finish_report(o, std::move(report), bad < 0, json{{"level", bad}}, t0);
}

int run_dk_unit(const Options& o) {
  auto t0 = Clock::now();
  SimplicialAbGroup a = simplicial_group_from_json(read_input(o));
  if (o.max_dim >= 0 && o.max_dim < a.truncation) a = truncate(a, o.max_dim);
  json report = start_report("dk unit", json{{"max_dim", a.truncation}}, o);
  UnitData ud = unit(a);
  int bad = first_non_iso(ud.map.level_maps, o.parallel);
  return finish_report(o, std::move(report), bad < 0, json{{"level", bad}}, t0);
}

int run_dk_omega_check(const Options& o) {
  auto t0 = Clock::now();
  SimplicialAbGroup a = simplicial_group_from_json(read_input(o));
  if (a.truncation < 1) bad_input("omega-check needs truncation at least 1");
  json report = start_report("dk omega-check", json{{"truncation", a.truncation}}, o);
  bool ok = omega_compat_check(a);
  json cx;
  if (!ok)
    cx = json{{"chains_of_loop", complex_to_json(normalized_chains(loop_object(a).omega))},
              {"loop_of_chains", complex_to_json(omega_complex(normalized_chains(a)))}};
  return finish_report(o, std::move(report), ok, std::move(cx), t0);
}

int run_dk_conservativity(const Options& o) {
  auto t0 = Clock::now();
  SimplicialMap f = simplicial_map_from_json(read_input(o));
  int M = max_dim_or(o, f.source.truncation);
  json report = start_report("dk conservativity", json{{"max_dim", M}}, o);
  ConservativityReport r = conservativity_check(f, M);
  report["result"] = json{{"precondition_ok", r.precondition_ok},
                          {"conclusion_ok", r.conclusion_ok},
                          {"ladder_ok", r.ladder_ok}};
  bool ok = r.precondition_ok && r.conclusion_ok && r.ladder_ok;
  json cx{{"precondition_ok", r.precondition_ok},
          {"conclusion_ok", r.conclusion_ok},
          {"ladder_ok", r.ladder_ok},
          {"failed_level", r.failed_level}};
  return finish_report(o, std::move(report), ok, std::move(cx), t0);
}

// --- two-categorical machinery ----------------------------------------------

int run_twocat_sigma(const Options& o) {
  json_only(o);
  json j = read_input(o);
  std::vector<int> I;
  const json& arr = j.is_array() ? j : get(j, "I");
  if (!arr.is_array()) bad_input("expected an array of integers");
  for (const auto& v : arr) {
    if (!v.is_number_integer()) bad_input("expected an array of integers");
    I.push_back(v.get<int>());
  }
  for (size_t i = 1; i < I.size(); ++i)
    if (I[i - 1] >= I[i]) bad_input("index set must be strictly increasing");
  SigmaCat s = sigma(I);
  json elements = json::array();
  for (int v : s.elements) elements.push_back(v);
  emit(o, json{{"elements", elements}, {"two_cat", two_cat_to_json(s.cat)}});
  return 0;
}

PosetEnriched2Cat two_cat_input(const json& j) {
  if (j.contains("two_cat")) return two_cat_from_json(get(j, "two_cat"));
  if (j.contains("poset"))
    return two_cat_of_fin_category(poset_category(poset_from_json(get(j, "poset"))));
  bad_input("expected 'two_cat' or 'poset'");
}

int run_twocat_nerve(const Options& o) {
  PosetEnriched2Cat c = two_cat_input(read_input(o));
  TruncSset x = scaled_nerve(c, max_dim_or(o, 2), o.budget);
  if (o.format == "dot")
    emit_text(o, dot_of_sset(x));
  else
    emit(o, sset_to_json(x));
  return 0;
}

int run_twocat_slice(const Options& o, int n, int m_obj) {
  SlicePoset sp = n_over_slice(n, m_obj < 0 ? n : m_obj);
  if (o.format == "dot")
    emit_text(o, dot_of_poset(sp.poset));
  else
    emit(o, poset_to_json(sp.poset));
  return 0;
}

int run_twocat_cube(const Options& o, int k, const std::string& which) {
  if (k < 1) bad_input("cube dimension parameter must be positive");
  SlicePoset sp = n_over_slice(k, k);
  Cube c = which == "f" ? cube_f(k) : which == "b" ? cube_b(k) : cube_q(k);
  if (o.format == "dot") {
    emit_text(o, dot_of_cube(c, sp));
    return 0;
  }
  json labels = json::array();
  for (int v : c.vertices) labels.push_back(sp.poset.labels[v]);
  emit(o, json{{"dimension", c.dimension}, {"labels", labels}});
  return 0;
}

int run_twocat_obligations(const Options& o, int n, int m_obj) {
  json_only(o);
  emit(o, obligation_report_to_json(nerve_condition_report(n, m_obj < 0 ? n : m_obj)));
  return 0;
}

// --- Grothendieck constructions ---------------------------------------------

int run_groth_chi(const Options& o) {
  CatValuedFunctor f = cat_valued_from_json(read_input(o));
  ChiData x = chi(f, max_dim_or(o, 2), o.budget);
  if (o.format == "dot")
    emit_text(o, dot_of_sset(x.fs.total));
  else
    emit(o, fibered_to_json(x.fs));
  return 0;
}

int run_groth_gamma(const Options& o) {
  json j = read_input(o);
  const json& jobj = get(j, "object");
  if (!jobj.is_number_integer()) bad_input("'object' must be an integer");
  int obj = jobj.get<int>();
  int m_map = max_dim_or(o, 2);
  FinCategory c;
  FiberedSset x;
  if (j.contains("fibered")) {
    c = category_from_json(get(j, "category"));
    x = fibered_from_json(get(j, "fibered"));
  } else {
    CatValuedFunctor f = cat_valued_from_json(get(j, "functor"));
    c = f.base;
    x = chi(f, m_map, o.budget).fs;
  }
  if (obj < 0 || obj >= c.num_objects()) bad_input("'object' out of range");
  GammaData g = gamma(c, x, obj, m_map, o.budget);
  if (o.format == "dot") {
    emit_text(o, dot_of_sset(g.sset));
    return 0;
  }
  json sizes = json::array();
  for (int k = 0; k <= g.sset.truncation(); ++k) sizes.push_back(g.sset.size(k));
  emit(o, json{{"level_sizes", sizes}, {"sset", sset_to_json(g.sset)}});
  return 0;
}

int run_groth_eta_check(const Options& o) {
  auto t0 = Clock::now();
  CatValuedFunctor f = cat_valued_from_json(read_input(o));
  int M = max_dim_or(o, 2);
  json report = start_report("groth eta-check", json{{"max_dim", M}, {"budget", o.budget}}, o);
  ChiData x = chi(f, M, o.budget);
  bool ok = true;
  json cx;
  for (int c = 0; c < f.base.num_objects() && ok; ++c) {
    GammaData g = gamma(f.base, x.fs, c, M, o.budget);
    SsetMap eta = eta_map(f, x, g, c);
    SsetMap ev = ev_map(f, x, g, c);
    CatNerve nf = nerve_of_category(f.fiber[c], M);
    SsetMap round = compose(nf.sset, g.sset, nf.sset, ev, eta);
    SsetMap ident = identity_sset_map(nf.sset);
    for (int k = 0; k <= M && ok; ++k)
      for (int i = 0; i < nf.sset.size(k) && ok; ++i)
        if (round.level[k][i] != ident.level[k][i]) {
          ok = false;
          cx = json{{"object", c}, {"level", k}, {"index", i}};
        }
  }
  report["result"] = json{{"objects_checked", f.base.num_objects()}};
  return finish_report(o, std::move(report), ok, std::move(cx), t0);
}

int run_groth_lax(const Options& o) {
  json j = read_input(o);
  LaxCatValuedFunctor f = j.contains("two_cat")
                              ? lax_cat_valued_from_json(j)
                              : lax_of_cat_valued(cat_valued_from_json(j));
  LaxChiData l = lax_chi(f, max_dim_or(o, 2), o.budget);
  if (o.format == "dot")
    emit_text(o, dot_of_sset(l.fs.total));
  else
    emit(o, fibered_to_json(l.fs));
  return 0;
}

int run_groth_compare(const Options& o) {
  auto t0 = Clock::now();
  CatValuedFunctor f = cat_valued_from_json(read_input(o));
  int M = max_dim_or(o, 2);
  json report = start_report("groth compare", json{{"max_dim", M}, {"budget", o.budget}}, o);
  ChiData x = chi(f, M, o.budget);
  LaxChiData l = lax_chi(lax_of_cat_valued(f), M, o.budget);
  ChiLaxComparison cmp = compare_chi_lax(f, x, l);
  json chi_sizes = json::array(), lax_sizes = json::array();
  for (int k = 0; k <= M; ++k) {
    chi_sizes.push_back(x.fs.total.size(k));
    lax_sizes.push_back(l.fs.total.size(k));
  }
  report["result"] = json{{"chi_sizes", chi_sizes}, {"lax_sizes", lax_sizes}};
  bool ok = true;
  json cx;
  if (!is_simplicial_map(x.fs.base, l.fs.base, cmp.base_map)) {
    ok = false;
    cx = json{{"check", "base map simplicial"}};
  }
  if (ok && !is_simplicial_map(x.fs.total, l.fs.total, cmp.total_map)) {
    ok = false;
    cx = json{{"check", "total map simplicial"}};
  }
  for (int k = 0; ok && k <= M; ++k)
    for (int i = 0; ok && i < x.fs.total.size(k); ++i)
      if (l.fs.projection.level[k][cmp.total_map.level[k][i]] !=
          cmp.base_map.level[k][x.fs.projection.level[k][i]]) {
        ok = false;
        cx = json{{"check", "projection square"}, {"level", k}, {"index", i}};
      }
  if (ok) {
    std::vector<int> hit(l.fs.total.size(0), 0);
    for (int i = 0; i < x.fs.total.size(0); ++i) hit[cmp.total_map.level[0][i]] += 1;
    for (size_t v = 0; v < hit.size(); ++v)
      if (hit[v] != 1) {
        ok = false;
        cx = json{{"check", "vertex bijection"}, {"index", static_cast<int>(v)}};
      }
  }
  return finish_report(o, std::move(report), ok, std::move(cx), t0);
}

// --- decategorified checks --------------------------------------------------

int run_k0_check_nerve(const Options& o) {
  auto t0 = Clock::now();
  json j = read_input(o);
  ChainComplexFp b = complex_from_json(get(j, "complex"));
  K0Simplex s = k0_simplex_from_json(get(j, "simplex"));
  json report = start_report("k0 check-nerve", json{{"n", s.n}}, o);
  bool ok = check_nerve_simplex(b, s);
  json cx;
  if (!ok) {
    // locate the first boundary equation that fails, in subset order
    for (const auto& [subset, cls] : s.classes) {
      int k = static_cast<int>(subset.size()) - 1;
      if (k < 1) continue;
      std::vector<Int> lhs = b.diff(k).matrix.apply(cls);
      std::vector<Int> rhs(b.level(k - 1).generators, Int(0));
      for (int i = 0; i <= k; ++i) {
        std::vector<int> face = subset;
        face.erase(face.begin() + i);
        rhs = vec_add(std::move(rhs), s.classes.at(face), Int(i % 2 == 0 ? 1 : -1));
      }
      if (!elements_equal(b.level(k - 1), lhs, rhs)) {
        json key = json::array();
        for (int v : subset) key.push_back(v);
        cx = json{{"subset", key},
                  {"boundary_of_class", ints_to_json(lhs)},
                  {"alternating_face_sum", ints_to_json(rhs)}};
        break;
      }
    }
  }
  return finish_report(o, std::move(report), ok, std::move(cx), t0);
}

int run_k0_check_s(const Options& o) {
  auto t0 = Clock::now();
  json j = read_input(o);
  ChainComplexFp b = complex_from_json(get(j, "complex"));
  RankTriangle t = rank_triangle_from_json(get(j, "triangle"));
  json report = start_report("k0 check-s", json{{"n", t.n}}, o);
  bool ok = check_relative_s(b, t);
  json cx;
  if (!ok) {
    for (int i = 0; i <= t.n && cx.is_null(); ++i)
      if (!is_zero_element(b.level(1), t.edges.at({i, i})))
        cx = json{{"relation", "loop class vanishes"}, {"i", i}};
    for (int i = 0; i <= t.n && cx.is_null(); ++i)
      for (int jv = i + 1; jv <= t.n && cx.is_null(); ++jv) {
        std::vector<Int> lhs = b.diff(1).matrix.apply(t.edges.at({i, jv}));
        std::vector<Int> rhs = vec_add(t.vertices[jv], t.vertices[i], Int(-1));
        if (!elements_equal(b.level(0), lhs, rhs))
          cx = json{{"relation", "boundary matches vertex difference"}, {"i", i}, {"j", jv}};
      }
    for (int i = 0; i <= t.n && cx.is_null(); ++i)
      for (int jv = i + 1; jv <= t.n && cx.is_null(); ++jv)
        for (int k = jv + 1; k <= t.n && cx.is_null(); ++k)
          if (!elements_equal(b.level(1), t.edges.at({i, k}),
                              vec_add(t.edges.at({i, jv}), t.edges.at({jv, k}), Int(1))))
            cx = json{{"relation", "edge additivity"}, {"i", i}, {"j", jv}, {"k", k}};
  }
  return finish_report(o, std::move(report), ok, std::move(cx), t0);
}

int run_k0_decat(const Options& o) {
  json_only(o);
  json j = read_input(o);
  ChainComplexFp b = complex_from_json(get(j, "complex"));
  RankTriangle t = rank_triangle_from_json(get(j, "triangle"));
  emit(o, k0_simplex_to_json(decategorify_relative_s(t, b)));
  return 0;
}

int run_k0_tot(const Options& o) {
  json_only(o);
  json j = read_input(o);
  FpAbelianGroup g = group_from_json(get(j, "group"));
  const json& jk = get(j, "k");
  if (!jk.is_number_integer()) bad_input("'k' must be an integer");
  const json& jc = get(j, "cube");
  if (!jc.is_array()) bad_input("'cube' must be an array of classes");
  std::vector<std::vector<Int>> cube;
  for (const auto& v : jc) cube.push_back(ints_from_json(v));
  emit(o, json{{"total", ints_to_json(euler_totalization(g, jk.get<int>(), cube))}});
  return 0;
}

void enable_fallthrough(CLI::App* app) {
  app->fallthrough();
  for (CLI::App* sub : app->get_subcommands([](const CLI::App*) { return true; }))
    enable_fallthrough(sub);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Dold-Kan, two-categorical nerves, Grothendieck "
               "constructions, and decategorified rank checks"};
  Options opt;
  if (const char* env = std::getenv("DKK_BUDGET")) opt.budget = std::atoll(env);

  app.add_option("--input", opt.input, "read JSON from this file instead of stdin");
  app.add_option("--output", opt.output, "write to this file instead of stdout");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--budget", opt.budget, "enumeration budget (env DKK_BUDGET)");
  app.add_option("--max-dim", opt.max_dim, "truncation level for constructions");
  app.add_option("--seed", opt.seed, "seed echoed into run reports");
  app.add_flag("--parallel", opt.parallel, "check independent levels concurrently");
  app.add_flag("--timing", opt.timing, "include wall-clock duration in reports");
  app.require_subcommand(1);

  std::function<int()> action;
  auto leaf = [&](CLI::App* sub, std::function<int()> fn) {
    sub->callback([&action, fn] { action = fn; });
  };

  leaf(app.add_subcommand("snf", "Smith normal form of an integer matrix"),
       [&] { return run_snf(opt); });
  leaf(app.add_subcommand("solve", "solve m x = rhs over the integers"),
       [&] { return run_solve(opt); });
  leaf(app.add_subcommand("normal-form", "invariant factors of a presented group"),
       [&] { return run_normal_form(opt); });

  CLI::App* dk_cmd = app.add_subcommand("dk", "chain complexes and simplicial groups");
  dk_cmd->require_subcommand(1);
  leaf(dk_cmd->add_subcommand("normalize", "normalized chains of a simplicial group"),
       [&] { return run_dk_normalize(opt); });
  leaf(dk_cmd->add_subcommand("nerve", "nerve of a chain complex with level ranks"),
       [&] { return run_dk_nerve(opt); });
  leaf(dk_cmd->add_subcommand("counit", "verify chains-of-nerve -> complex is an iso"),
       [&] { return run_dk_counit(opt); });
  leaf(dk_cmd->add_subcommand("unit", "verify group -> nerve-of-chains is an iso"),
       [&] { return run_dk_unit(opt); });
  leaf(dk_cmd->add_subcommand("omega-check", "verify chains commute with loops"),
       [&] { return run_dk_omega_check(opt); });
  leaf(dk_cmd->add_subcommand("conservativity", "verify iso on chains forces iso"),
       [&] { return run_dk_conservativity(opt); });

  CLI::App* twocat_cmd = app.add_subcommand("twocat", "poset-enriched two-categories");
  twocat_cmd->require_subcommand(1);
  leaf(twocat_cmd->add_subcommand("sigma", "two-category of intervals of an index set"),
       [&] { return run_twocat_sigma(opt); });
  leaf(twocat_cmd->add_subcommand("nerve", "scaled nerve of a two-category"),
       [&] { return run_twocat_nerve(opt); });
  {
    CLI::App* sub = twocat_cmd->add_subcommand("slice", "slice poset of maps into [n]");
    auto n = std::make_shared<int>(0);
    auto m_obj = std::make_shared<int>(-1);
    sub->add_option("--n", *n, "target simplex dimension")->required();
    sub->add_option("--m-obj", *m_obj, "max source dimension (default n)");
    leaf(sub, [&, n, m_obj] { return run_twocat_slice(opt, *n, *m_obj); });
  }
  {
    CLI::App* sub = twocat_cmd->add_subcommand("cube", "vertex labels of a slice cube");
    auto k = std::make_shared<int>(0);
    auto which = std::make_shared<std::string>("q");
    sub->add_option("--k", *k, "cube parameter")->required();
    sub->add_option("--which", *which, "cube family")
        ->check(CLI::IsMember({"f", "b", "q"}));
    leaf(sub, [&, k, which] { return run_twocat_cube(opt, *k, *which); });
  }
  {
    CLI::App* sub = twocat_cmd->add_subcommand("obligations", "nerve-condition obligations");
    auto n = std::make_shared<int>(0);
    auto m_obj = std::make_shared<int>(-1);
    sub->add_option("--n", *n, "simplex dimension")->required();
    sub->add_option("--m-obj", *m_obj, "max slice object dimension (default n)");
    leaf(sub, [&, n, m_obj] { return run_twocat_obligations(opt, *n, *m_obj); });
  }

  CLI::App* groth_cmd = app.add_subcommand("groth", "Grothendieck constructions");
  groth_cmd->require_subcommand(1);
  leaf(groth_cmd->add_subcommand("chi", "fibered total space of a functor"),
       [&] { return run_groth_chi(opt); });
  leaf(groth_cmd->add_subcommand("gamma", "mapping space of sections over a slice"),
       [&] { return run_groth_gamma(opt); });
  leaf(groth_cmd->add_subcommand("eta-check", "verify ev after eta is the identity"),
       [&] { return run_groth_eta_check(opt); });
  leaf(groth_cmd->add_subcommand("lax", "lax total space over the scaled nerve"),
       [&] { return run_groth_lax(opt); });
  leaf(groth_cmd->add_subcommand("compare", "verify the strict-to-lax comparison"),
       [&] { return run_groth_compare(opt); });

  CLI::App* k0_cmd = app.add_subcommand("k0", "decategorified rank checks");
  k0_cmd->require_subcommand(1);
  leaf(k0_cmd->add_subcommand("check-nerve", "verify boundary equations of classes"),
       [&] { return run_k0_check_nerve(opt); });
  leaf(k0_cmd->add_subcommand("check-s", "verify relative rank conditions"),
       [&] { return run_k0_check_s(opt); });
  leaf(k0_cmd->add_subcommand("decat", "classes of a relative rank triangle"),
       [&] { return run_k0_decat(opt); });
  leaf(k0_cmd->add_subcommand("tot", "signed vertex sum of a cube of classes"),
       [&] { return run_k0_tot(opt); });

  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return std::string(e.what()).find("budget") != std::string::npos ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
