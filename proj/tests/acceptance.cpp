// Acceptance gate: one line per criterion, zero exit only when all pass.
// Every check is exact integer arithmetic; randomized suites use a fixed
// seed so reruns see the same instances.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dk/groth.hpp"
#include "dk/json_io.hpp"
#include "dk/k0bridge.hpp"

using namespace dk;

namespace {

std::mt19937 rng(20250823);

int rand_in(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

FpAbelianGroup random_group(int max_gens) {
  int gens = rand_in(0, max_gens);
  int rels = gens == 0 ? 0 : rand_in(0, gens + 1);
  IntMatrix r(gens, rels);
  for (int i = 0; i < gens; ++i)
    for (int j = 0; j < rels; ++j) r.at(i, j) = rand_in(-4, 4);
  return FpAbelianGroup(gens, r);
}

// Unimodular matrix with its exact inverse, built from a few elementary row
// operations so entries stay small.
struct UniPair {
  IntMatrix u, u_inv;
};

UniPair random_unimodular(int n) {
  UniPair p{IntMatrix(n, n), IntMatrix(n, n)};
  for (int i = 0; i < n; ++i) p.u.at(i, i) = p.u_inv.at(i, i) = 1;
  if (n < 2) return p;
  int ops = rand_in(3, 8);
  for (int t = 0; t < ops; ++t) {
    int i = rand_in(0, n - 1), j = rand_in(0, n - 1);
    if (i == j) continue;
    Int lambda = rand_in(-2, 2);
    for (int c = 0; c < n; ++c) p.u.at(j, c) += lambda * p.u.at(i, c);
    for (int r = 0; r < n; ++r) p.u_inv.at(r, i) -= lambda * p.u_inv.at(r, j);
  }
  return p;
}

SimplicialAbGroup conjugate_simplicial(const SimplicialAbGroup& a) {
  int M = a.truncation;
  std::vector<UniPair> u;
  for (const auto& g : a.levels) u.push_back(random_unimodular(g.generators));
  SimplicialAbGroup b;
  b.truncation = M;
  for (int n = 0; n <= M; ++n)
    b.levels.emplace_back(a.levels[n].generators, u[n].u * a.levels[n].relations);
  b.faces.resize(M + 1);
  b.degens.resize(M + 1);
  for (int k = 1; k <= M; ++k)
    for (int i = 0; i <= k; ++i)
      b.faces[k].emplace_back(b.levels[k], b.levels[k - 1],
                              u[k - 1].u * a.face(k, i).matrix * u[k].u_inv);
  for (int k = 0; k < M; ++k)
    for (int i = 0; i <= k; ++i)
      b.degens[k].emplace_back(b.levels[k], b.levels[k + 1],
                               u[k + 1].u * a.degen(k, i).matrix * u[k].u_inv);
  check_simplicial_group(b);
  return b;
}

ChainComplexFp conjugate_complex(const ChainComplexFp& a) {
  std::vector<UniPair> u;
  for (const auto& g : a.levels) u.push_back(random_unimodular(g.generators));
  ChainComplexFp b;
  b.truncation = a.truncation;
  for (int n = 0; n <= a.truncation; ++n)
    b.levels.emplace_back(a.levels[n].generators, u[n].u * a.levels[n].relations);
  for (int k = 1; k <= a.truncation; ++k)
    b.differentials.emplace_back(b.levels[k], b.levels[k - 1],
                                 u[k - 1].u * a.diff(k).matrix * u[k].u_inv);
  check_chain_complex(b);
  return b;
}

// Two equal levels joined by the identity differential, trivial elsewhere.
ChainComplexFp identity_piece(const FpAbelianGroup& g, int k, int M) {
  ChainComplexFp b = single_group_complex(g, k, M);
  b.levels[k - 1] = g;
  IntMatrix id(g.generators, g.generators);
  for (int i = 0; i < g.generators; ++i) id.at(i, i) = 1;
  b.differentials[k - 1] = AbHom(b.levels[k], b.levels[k - 1], id);
  if (k >= 2)
    b.differentials[k - 2] =
        AbHom(b.levels[k - 1], b.levels[k - 2], IntMatrix(b.levels[k - 2].generators, g.generators));
  check_chain_complex(b);
  return b;
}

ChainComplexFp random_complex(int M) {
  std::vector<ChainComplexFp> parts;
  int n = rand_in(2, 4);
  for (int t = 0; t < n; ++t) {
    FpAbelianGroup g = random_group(2);
    if (rand_in(0, 2) == 0) {
      int k = rand_in(1, M);
      parts.push_back(identity_piece(g, k, M));
    } else {
      parts.push_back(single_group_complex(g, rand_in(0, M), M));
    }
  }
  return conjugate_complex(complex_direct_sum(parts));
}

FpAbelianGroup group_direct_sum(const FpAbelianGroup& a, const FpAbelianGroup& b) {
  IntMatrix r(a.generators + b.generators, a.relations.cols() + b.relations.cols());
  for (int i = 0; i < a.generators; ++i)
    for (int j = 0; j < a.relations.cols(); ++j) r.at(i, j) = a.relations.at(i, j);
  for (int i = 0; i < b.generators; ++i)
    for (int j = 0; j < b.relations.cols(); ++j)
      r.at(a.generators + i, a.relations.cols() + j) = b.relations.at(i, j);
  return FpAbelianGroup(a.generators + b.generators, r);
}

std::vector<Int> column(const IntMatrix& m, int j) {
  std::vector<Int> out;
  for (int i = 0; i < m.rows(); ++i) out.push_back(m.at(i, j));
  return out;
}

bool columns_equal(const FpAbelianGroup& g, const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int j = 0; j < a.cols(); ++j)
    if (!elements_equal(g, column(a, j), column(b, j))) return false;
  return true;
}

// Fixtures shared with the library test suite.

FinCategory isopair() {
  FinCategory c;
  c.objects = {"a", "b"};
  c.arrows = {{0, 0, "ida"}, {1, 1, "idb"}, {0, 1, "u"}, {1, 0, "v"}};
  c.identity = {0, 1};
  c.after = {{0, -1, -1, 3}, {-1, 1, 2, -1}, {2, -1, -1, 1}, {-1, 3, 0, -1}};
  return c;
}

CatValuedFunctor over_point(const FinCategory& fib) {
  CatValuedFunctor f;
  f.base = terminal_category();
  f.fiber = {fib};
  f.transition = {identity_fin_functor(fib)};
  return f;
}

CatValuedFunctor point_to_discrete() {
  CatValuedFunctor f;
  f.base = arrow_category();
  FinCategory pt = terminal_category();
  FinCategory d2 = discrete_category({"p", "q"});
  f.fiber = {pt, d2};
  f.transition = {identity_fin_functor(pt), constant_fin_functor(d2, pt, 0),
                  identity_fin_functor(d2)};
  return f;
}

CatValuedFunctor iso_over_arrow() {
  CatValuedFunctor f;
  f.base = arrow_category();
  FinCategory g = isopair();
  f.fiber = {g, g};
  f.transition = {identity_fin_functor(g), identity_fin_functor(g),
                  identity_fin_functor(g)};
  return f;
}

PosetEnriched2Cat walking_two_cell() {
  PosetEnriched2Cat c;
  c.objects = {"x", "y"};
  c.hom.assign(2, std::vector<HomPoset>(2));
  c.hom[0][0].labels = {"idx"};
  c.hom[0][0].leq = {{true}};
  c.hom[1][1].labels = {"idy"};
  c.hom[1][1].leq = {{true}};
  c.hom[0][1].labels = {"f", "g"};
  c.hom[0][1].leq = {{true, true}, {false, true}};
  c.identities = {0, 0};
  c.comp.assign(2, std::vector<std::vector<std::vector<std::vector<int>>>>(
                       2, std::vector<std::vector<std::vector<int>>>(2)));
  c.comp[0][0][0] = {{0}};
  c.comp[0][0][1] = {{0, 1}};
  c.comp[0][1][0] = {{}, {}};
  c.comp[0][1][1] = {{0}, {1}};
  c.comp[1][1][0] = {{}};
  c.comp[1][1][1] = {{0}};
  return c;
}

// Reporting machinery.

struct Checker {
  bool ok = true;
  std::string first_failure;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

// --- criterion 1: levelwise projection onto the normalized part -------------

bool criterion_projection(Checker& c) {
  // Truncation-4 groups whose levels keep at most 3 generators: by the
  // correspondence with complexes this forces content in degrees 0 and 4
  // only, so the instance space is (C_0, C_4) pairs up to change of basis.
  for (int t = 0; t < 50; ++t) {
    std::cerr << '.';
    FpAbelianGroup g, h;
    switch (t % 3) {
      case 0: g = random_group(3); h = FpAbelianGroup::trivial(); break;
      case 1: g = random_group(2); h = random_group(1); break;
      default: g = FpAbelianGroup::trivial(); h = random_group(3); break;
    }
    ChainComplexFp b = complex_direct_sum(
        {single_group_complex(g, 0, 4), single_group_complex(h, 4, 4)});
    SimplicialAbGroup a = conjugate_simplicial(dold_kan_nerve(b, 4));
    for (int n = 0; n <= 4; ++n) {
      AbHom p = pi(a, n);
      c.expect(columns_equal(a.levels[n], p.matrix * p.matrix, p.matrix),
               "pi is not idempotent");
      Subgroup nor = normalized_subgroup(a, n);
      Subgroup deg = degenerate_subgroup(a, n);
      SubgroupSolver nor_solver(nor.inclusion);
      SubgroupSolver deg_solver(deg.inclusion);
      c.expect(nor_solver.contains_columns(p.matrix), "image of pi escapes the normalized part");
      c.expect(columns_equal(a.levels[n], p.matrix * nor.inclusion.matrix, nor.inclusion.matrix),
               "pi does not fix the normalized part");
      IntMatrix on_deg = p.matrix * deg.inclusion.matrix;
      for (int j = 0; j < on_deg.cols(); ++j)
        c.expect(is_zero_element(a.levels[n], column(on_deg, j)),
                 "pi does not kill the degenerate part");
      IntMatrix complement = p.matrix;
      for (int i = 0; i < complement.rows(); ++i) complement.at(i, i) -= 1;
      c.expect(deg_solver.contains_columns(complement),
               "kernel of pi escapes the degenerate part");
      c.expect(normal_form(a.levels[n]) == normal_form(group_direct_sum(nor.group, deg.group)),
               "level does not split as normalized plus degenerate");
      if (!c.ok) return false;
    }
  }
  return c.ok;
}

// --- criterion 2: counit is a levelwise isomorphism --------------------------

bool criterion_counit(Checker& c) {
  for (int t = 0; t < 50 && c.ok; ++t) {
    std::cerr << '.';
    ChainComplexFp b = random_complex(5);
    CounitData cd = counit(dold_kan_nerve_data(b, 5), b);
    for (const auto& f : cd.map.level_maps)
      c.expect(is_isomorphism(f), "counit level fails to be an isomorphism");
  }
  return c.ok;
}

// --- criterion 3: unit is an isomorphism on sums and nerves ------------------

std::vector<SimplicialAbGroup> unit_instances() {
  std::vector<SimplicialAbGroup> base;
  for (int k = 0; k <= 3; ++k) {
    std::cerr << 'f' << k;
    base.push_back(free_simplicial_abelian_group(standard_simplex(k, 4)));
  }
  std::vector<SimplicialAbGroup> out = base;
  for (int i = 0; i <= 3; ++i)
    for (int j = i; j <= 3 && out.size() < 14; ++j) {
      std::cerr << 's' << i << j;
      out.push_back(simplicial_direct_sum({base[i], base[j]}).group);
    }
  while (out.size() < 30) {
    std::cerr << 'n';
    out.push_back(dold_kan_nerve(random_complex(4), 4));
  }
  std::cerr << std::endl;
  return out;
}

bool criterion_unit(Checker& c, const std::vector<SimplicialAbGroup>& instances) {
  for (const auto& a : instances) {
    std::cerr << '.';
    UnitData ud = unit(a);
    for (const auto& f : ud.map.level_maps)
      c.expect(is_isomorphism(f), "unit level fails to be an isomorphism");
    if (!c.ok) break;
  }
  return c.ok;
}

// --- criterion 4: chains commute with loops ----------------------------------

bool criterion_omega(Checker& c, const std::vector<SimplicialAbGroup>& instances) {
  for (const auto& a : instances) {
    std::cerr << '.';
    c.expect(omega_compat_check(a), "loop-then-chains differs from chains-then-loop");
  }
  for (int t = 0; t < 10 && c.ok; ++t) {
    std::cerr << '+';
    c.expect(omega_compat_check(conjugate_simplicial(dold_kan_nerve(random_complex(3), 3))),
             "loop-then-chains differs from chains-then-loop");
  }
  return c.ok;
}

// --- criterion 5: maps that are isomorphisms on chains -----------------------

bool criterion_conservativity(Checker& c) {
  for (int t = 0; t < 8 && c.ok; ++t) {
    SimplicialAbGroup a = dold_kan_nerve(random_complex(3), 3);
    SimplicialAbGroup s = simplicial_direct_sum({a, a}).group;
    SimplicialMap f;
    f.source = s;
    f.target = s;
    int lambda = rand_in(-3, 3);
    for (int n = 0; n <= s.truncation; ++n) {
      int g = a.levels[n].generators;
      IntMatrix m(2 * g, 2 * g);
      for (int i = 0; i < 2 * g; ++i) m.at(i, i) = 1;
      for (int i = 0; i < g; ++i) m.at(i, g + i) = lambda;  // shear block
      f.level_maps.emplace_back(s.levels[n], s.levels[n], m);
    }
    c.expect(is_simplicial_map(f), "shear is not simplicial");
    ConservativityReport r = conservativity_check(f, s.truncation);
    c.expect(r.precondition_ok, "shear is not an isomorphism on chains");
    c.expect(r.conclusion_ok, "conservativity conclusion fails");
    c.expect(r.ladder_ok, "path/loop ladder fails");
  }
  return c.ok;
}

// --- criterion 6: cube calculus ----------------------------------------------

bool criterion_cubes(Checker& c) {
  for (int k = 1; k <= 6 && c.ok; ++k)
    for (const auto& bits : all_bit_vectors(k)) {
      MonotoneMap lhs = b_vertex(k, bits);
      MonotoneMap rhs = compose(f_vertex(k, bits), MonotoneMap::face(0, k));
      c.expect(lhs.values() == rhs.values(), "back cube is not the 0th-face pullback");
      c.expect(q_vertex(k, 0, bits).values() == lhs.values(), "q does not select b at 0");
      c.expect(q_vertex(k, 1, bits).values() == f_vertex(k, bits).values(),
               "q does not select f at 1");
    }
  SlicePoset sp = n_over_slice(2, 2);
  Cube q2 = cube_q(2);
  std::vector<std::string> labels;
  for (int v : q2.vertices) labels.push_back(sp.poset.labels[v]);
  c.expect(labels == std::vector<std::string>(
                         {"01", "02", "11", "12", "001", "002", "011", "012"}),
           "q-cube labels differ from the fixed figure");
  FpAbelianGroup g(2, IntMatrix{{0}, {6}});
  {
    std::vector<std::vector<Int>> seg = {{Int(3), Int(1)}, {Int(7), Int(5)}};
    std::vector<Int> diff = {seg[1][0] - seg[0][0], seg[1][1] - seg[0][1]};
    c.expect(elements_equal(g, euler_totalization(g, 1, seg), diff),
             "interval total is not endpoint difference");
  }
  for (int k = 2; k <= 5 && c.ok; ++k) {
    std::vector<std::vector<Int>> cube(1 << k), back, front;
    for (auto& v : cube) {
      v = {Int(rand_in(-9, 9)), Int(rand_in(-9, 9))};
    }
    back.assign(cube.begin(), cube.begin() + (1 << (k - 1)));
    front.assign(cube.begin() + (1 << (k - 1)), cube.end());
    std::vector<Int> total = euler_totalization(g, k, cube);
    std::vector<Int> split = euler_totalization(g, k - 1, front);
    std::vector<Int> b_part = euler_totalization(g, k - 1, back);
    for (size_t i = 0; i < split.size(); ++i) split[i] -= b_part[i];
    c.expect(elements_equal(g, total, split), "cube total is not front minus back");
  }
  return c.ok;
}

// --- criterion 7: interval two-categories and their nerves -------------------

bool criterion_sigma(Checker& c) {
  for (int mask = 1; mask < (1 << 6) && c.ok; ++mask) {
    std::vector<int> I;
    for (int i = 0; i < 6; ++i)
      if (mask & (1 << i)) I.push_back(i);
    if (I.size() > 5) continue;
    try {
      check_two_category(sigma(I).cat);
    } catch (const std::logic_error&) {
      c.expect(false, "interval two-category fails associativity or units");
    }
  }
  std::vector<PosetEnriched2Cat> fixed = {two_cat_of_fin_category(arrow_category()),
                                          walking_two_cell(), sigma({0, 1, 2}).cat};
  for (const auto& tc : fixed) {
    try {
      check_simplicial_identities(scaled_nerve(tc, 3));
    } catch (const std::logic_error&) {
      c.expect(false, "scaled nerve violates a simplicial identity");
    }
  }
  for (int n = 1; n <= 6 && c.ok; ++n) {
    std::vector<int> I;
    for (int i = 0; i <= n; ++i) I.push_back(i);
    SigmaCat s = sigma(I);
    c.expect(static_cast<int>(s.cat.hom[0][n].labels.size()) == (1 << (n - 1)),
             "hom(0,n) does not have 2^(n-1) one-cells");
  }
  return c.ok;
}

// --- criterion 8: sections of the Grothendieck construction ------------------

bool criterion_groth(Checker& c) {
  std::vector<CatValuedFunctor> fixtures = {over_point(isopair()),
                                            over_point(arrow_category()),
                                            point_to_discrete(), iso_over_arrow()};
  int M = 2;
  for (const auto& f : fixtures) {
    ChiData x = chi(f, M);
    for (int obj = 0; obj < f.base.num_objects(); ++obj) {
      GammaData g = gamma(f.base, x.fs, obj, M);
      SsetMap eta = eta_map(f, x, g, obj);
      SsetMap ev = ev_map(f, x, g, obj);
      CatNerve nf = nerve_of_category(f.fiber[obj], M);
      SsetMap round = compose(nf.sset, g.sset, nf.sset, ev, eta);
      SsetMap ident = identity_sset_map(nf.sset);
      for (int k = 0; k <= M; ++k)
        c.expect(round.level[k] == ident.level[k], "ev after eta moves a simplex");

      // fibers of chi against the fiber nerve
      SsetMap emb = chi_fiber_embedding(f, x, obj);
      std::vector<std::vector<int>> idx = chi_fiber_indices(f, x, obj);
      for (int k = 0; k <= M; ++k) {
        std::set<int> image(emb.level[k].begin(), emb.level[k].end());
        std::set<int> expected(idx[k].begin(), idx[k].end());
        c.expect(image == expected && image.size() == emb.level[k].size(),
                 "chi fiber is not the embedded fiber nerve");
      }
    }
    // comparison with the lax construction: bijective on vertices over each base point
    LaxChiData l = lax_chi(lax_of_cat_valued(f), M);
    ChiLaxComparison cmp = compare_chi_lax(f, x, l);
    c.expect(is_simplicial_map(x.fs.total, l.fs.total, cmp.total_map),
             "comparison total map is not simplicial");
    std::vector<int> hit(l.fs.total.size(0), 0);
    for (int i = 0; i < x.fs.total.size(0); ++i) {
      hit[cmp.total_map.level[0][i]] += 1;
      c.expect(l.fs.projection.level[0][cmp.total_map.level[0][i]] ==
                   cmp.base_map.level[0][x.fs.projection.level[0][i]],
               "comparison does not respect the projections");
    }
    for (int v : hit) c.expect(v == 1, "comparison is not a vertex bijection");
    if (!c.ok) break;
  }
  return c.ok;
}

// --- criterion 9: decategorified rank classes --------------------------------

bool criterion_k0(Checker& c) {
  ChainComplexFp z1 = single_group_complex(FpAbelianGroup::free_group(1), 1, 5);
  SimplicialAbGroup nv = dold_kan_nerve(z1, 5);
  for (int n = 0; n <= 5; ++n) {
    GroupNormalForm nf = normal_form(nv.levels[n]);
    c.expect(nf.free_rank == n && nf.invariant_factors.empty(),
             "nerve level rank differs from its degree");
  }

  // rank triangles over a two-term complex with torsion in degree 0
  ChainComplexFp b;
  b.truncation = 2;
  b.levels = {FpAbelianGroup(2, IntMatrix{{0}, {4}}), FpAbelianGroup::free_group(2),
              FpAbelianGroup::trivial()};
  IntMatrix d(2, 2);
  for (int t = 0; t < 100 && c.ok; ++t) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) d.at(i, j) = rand_in(-3, 3);
    b.differentials.clear();
    b.differentials.emplace_back(b.levels[1], b.levels[0], d);
    b.differentials.emplace_back(b.levels[2], b.levels[1], IntMatrix(2, 0));
    RankTriangle tri;
    tri.n = 2;
    std::vector<std::vector<Int>> row(3);
    row[0] = {Int(0), Int(0)};
    for (int j = 1; j <= 2; ++j) row[j] = {Int(rand_in(-5, 5)), Int(rand_in(-5, 5))};
    std::vector<Int> a0 = {Int(rand_in(-5, 5)), Int(rand_in(-5, 5))};
    for (int i = 0; i <= 2; ++i) tri.vertices.push_back(
        {a0[0] + d.at(0, 0) * row[i][0] + d.at(0, 1) * row[i][1],
         a0[1] + d.at(1, 0) * row[i][0] + d.at(1, 1) * row[i][1]});
    for (int i = 0; i <= 2; ++i)
      for (int j = i; j <= 2; ++j)
        tri.edges[{i, j}] = {row[j][0] - row[i][0], row[j][1] - row[i][1]};
    c.expect(check_relative_s(b, tri), "constructed triangle fails the rank conditions");
    K0Simplex s = decategorify_relative_s(tri, b);
    c.expect(check_nerve_simplex(b, s), "decategorified classes fail the boundary equations");
  }
  return c.ok;
}

// --- criterion 10: frozen obligation schema ----------------------------------

bool criterion_golden(Checker& c) {
  std::ifstream in(GOLDEN_OBLIGATIONS);
  c.expect(static_cast<bool>(in), "golden file missing");
  if (!c.ok) return false;
  std::stringstream ss;
  ss << in.rdbuf();
  std::string produced = obligation_report_to_json(nerve_condition_report(2, 2)).dump(2) + "\n";
  c.expect(produced == ss.str(), "obligation report differs from the frozen golden file");
  return c.ok;
}

int run(const char* name, const std::function<bool(Checker&)>& body) {
  Checker c;
  std::cerr << "[start] " << name << std::endl;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body(c);
  } catch (const std::exception& e) {
    error = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cout << name << ": " << (ok ? "pass" : "FAIL") << " (" << ms << " ms)";
  if (!ok && !c.first_failure.empty()) std::cout << " — " << c.first_failure;
  if (!error.empty()) std::cout << " — exception: " << error;
  std::cout << std::endl;
  return ok ? 0 : 1;
}

}  // namespace

int main() {
  int failures = 0;
  std::vector<SimplicialAbGroup> instances = unit_instances();
  failures += run("criterion 1 (levelwise projection)", criterion_projection);
  failures += run("criterion 2 (counit isomorphism)", criterion_counit);
  failures += run("criterion 3 (unit isomorphism)",
                  [&](Checker& c) { return criterion_unit(c, instances); });
  failures += run("criterion 4 (loops commute with chains)",
                  [&](Checker& c) { return criterion_omega(c, instances); });
  failures += run("criterion 5 (conservativity harness)", criterion_conservativity);
  failures += run("criterion 6 (cube calculus)", criterion_cubes);
  failures += run("criterion 7 (interval categories and nerves)", criterion_sigma);
  failures += run("criterion 8 (sections and comparisons)", criterion_groth);
  failures += run("criterion 9 (rank classes)", criterion_k0);
  failures += run("criterion 10 (frozen obligation schema)", criterion_golden);
  if (failures) std::cout << failures << " criteria failed\n";
  return failures;
}
