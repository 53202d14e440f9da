#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "dk/k0bridge.hpp"

using dk::AbHom;
using dk::ChainComplexFp;
using dk::FpAbelianGroup;
using dk::Int;
using dk::IntMatrix;
using dk::K0Simplex;
using dk::RankTriangle;

namespace {

// 0 <- Z <- Z <- 0 ... with the identity differential, padded with zeros.
ChainComplexFp two_term_identity(int M) {
  FpAbelianGroup z = FpAbelianGroup::free_group(1);
  ChainComplexFp b;
  b.truncation = M;
  b.levels = {z, z};
  b.differentials = {AbHom(z, z, IntMatrix{{1}})};
  for (int k = 2; k <= M; ++k) {
    b.levels.push_back(FpAbelianGroup::trivial());
    b.differentials.push_back(
        AbHom(b.levels[k], b.levels[k - 1], IntMatrix(b.levels[k - 1].generators, 0)));
  }
  dk::check_chain_complex(b);
  return b;
}

std::vector<Int> col(std::vector<long long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

K0Simplex three_edges(const ChainComplexFp& b, long long b01, long long b02, long long b12) {
  K0Simplex s;
  s.n = 2;
  for (int i = 0; i <= 2; ++i) s.classes[{i}] = std::vector<Int>(b.level(0).generators, Int(0));
  s.classes[{0, 1}] = col({b01});
  s.classes[{0, 2}] = col({b02});
  s.classes[{1, 2}] = col({b12});
  s.classes[{0, 1, 2}] = std::vector<Int>(b.level(2).generators, Int(0));
  return s;
}

}  // namespace

TEST_CASE("boundary equations on a single free group") {
  ChainComplexFp b = dk::single_group_complex(FpAbelianGroup::free_group(1), 1, 2);
  K0Simplex zero;
  zero.n = 2;
  for (int mask = 1; mask < 8; ++mask) {
    std::vector<int> s;
    for (int i = 0; i <= 2; ++i)
      if (mask & (1 << i)) s.push_back(i);
    zero.classes[s] = std::vector<Int>(b.level(static_cast<int>(s.size()) - 1).generators, Int(0));
  }
  CHECK(dk::check_nerve_simplex(b, zero));

  K0Simplex s1 = three_edges(b, 1, 3, 2);
  CHECK(dk::check_nerve_simplex(b, s1));
  K0Simplex s2 = three_edges(b, 1, 1, 1);
  CHECK(!dk::check_nerve_simplex(b, s2));
}

TEST_CASE("malformed collections are rejected") {
  ChainComplexFp b = dk::single_group_complex(FpAbelianGroup::free_group(1), 1, 2);
  K0Simplex s = three_edges(b, 1, 3, 2);
  s.classes.erase({0, 2});
  CHECK_THROWS_AS(dk::check_nerve_simplex(b, s), std::invalid_argument);
  K0Simplex t = three_edges(b, 1, 3, 2);
  t.classes[{0, 1}] = col({1, 2});  // wrong arity
  CHECK_THROWS_AS(dk::check_nerve_simplex(b, t), std::invalid_argument);
  K0Simplex u = three_edges(b, 1, 3, 2);
  u.n = 3;
  CHECK_THROWS_AS(dk::check_nerve_simplex(b, u), std::invalid_argument);
}

TEST_CASE("relative rank conditions") {
  ChainComplexFp b = two_term_identity(2);
  RankTriangle t;
  t.n = 2;
  t.vertices = {col({0}), col({1}), col({3})};
  for (int i = 0; i <= 2; ++i) t.edges[{i, i}] = col({0});
  t.edges[{0, 1}] = col({1});
  t.edges[{0, 2}] = col({3});
  t.edges[{1, 2}] = col({2});
  CHECK(dk::check_relative_s(b, t));

  RankTriangle bad = t;
  bad.edges[{1, 2}] = col({1});
  CHECK(!dk::check_relative_s(b, bad));

  RankTriangle zero;
  zero.n = 2;
  zero.vertices.assign(3, col({0}));
  for (int i = 0; i <= 2; ++i)
    for (int j = i; j <= 2; ++j) zero.edges[{i, j}] = col({0});
  CHECK(dk::check_relative_s(b, zero));

  K0Simplex s = dk::decategorify_relative_s(t, b);
  CHECK(dk::check_nerve_simplex(b, s));
  CHECK(s.classes.at({1}) == col({1}));
  CHECK(s.classes.at({0, 2}) == col({3}));
  CHECK(dk::check_nerve_simplex(b, dk::decategorify_relative_s(zero, b)));
  CHECK_THROWS_AS(dk::decategorify_relative_s(bad, b), std::invalid_argument);
}

TEST_CASE("complexes with content above degree 1 are rejected") {
  ChainComplexFp b = dk::single_group_complex(FpAbelianGroup::free_group(1), 2, 2);
  RankTriangle t;
  t.n = 0;
  t.vertices = {std::vector<Int>(b.level(0).generators, Int(0))};
  t.edges[{0, 0}] = std::vector<Int>(b.level(1).generators, Int(0));
  CHECK_THROWS_AS(dk::check_relative_s(b, t), std::invalid_argument);
}

TEST_CASE("random valid triangles decategorify to nerve simplices") {
  // d : Z^2 -> Z + Z/4
  FpAbelianGroup b0(2, IntMatrix{{0}, {4}});
  FpAbelianGroup b1 = FpAbelianGroup::free_group(2);
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> entry(-3, 3), cls(-10, 10);
  int n = 3;
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix d(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) d.at(i, j) = entry(rng);
    ChainComplexFp b;
    b.truncation = n;
    b.levels = {b0, b1};
    b.differentials = {AbHom(b1, b0, d)};
    for (int k = 2; k <= n; ++k) {
      b.levels.push_back(FpAbelianGroup::trivial());
      b.differentials.push_back(
          AbHom(b.levels[k], b.levels[k - 1], IntMatrix(b.levels[k - 1].generators, 0)));
    }
    dk::check_chain_complex(b);

    // free choices: a_0 and the row a_{0j}; the rest follows
    std::vector<Int> a0 = {Int(cls(rng)), Int(cls(rng))};
    std::vector<std::vector<Int>> row(n + 1, std::vector<Int>(2, Int(0)));
    for (int j = 1; j <= n; ++j) row[j] = {Int(cls(rng)), Int(cls(rng))};
    RankTriangle t;
    t.n = n;
    for (int i = 0; i <= n; ++i) {
      std::vector<Int> di = d.apply(row[i]);
      t.vertices.push_back({a0[0] + di[0], a0[1] + di[1]});
      for (int j = i; j <= n; ++j)
        t.edges[{i, j}] = {row[j][0] - row[i][0], row[j][1] - row[i][1]};
    }
    CHECK(dk::check_relative_s(b, t));
    CHECK(dk::check_nerve_simplex(b, dk::decategorify_relative_s(t, b)));

    RankTriangle bad = t;
    bad.edges[{1, 2}][0] += 1;
    CHECK(!dk::check_relative_s(b, bad));
  }
}

TEST_CASE("alternating vertex sums") {
  FpAbelianGroup g = FpAbelianGroup::free_group(1);
  CHECK(dk::euler_totalization(g, 1, {col({5}), col({8})}) == col({3}));
  CHECK_THROWS_AS(dk::euler_totalization(g, 0, {col({1})}), std::invalid_argument);
  CHECK_THROWS_AS(dk::euler_totalization(g, 1, {col({1})}), std::invalid_argument);

  for (int k = 1; k <= 5; ++k) {
    std::vector<std::vector<Int>> cube(1 << k, col({7}));
    CHECK(dk::is_zero_element(g, dk::euler_totalization(g, k, cube)));
  }
}

TEST_CASE("front and back faces split the totalization") {
  FpAbelianGroup g(2, IntMatrix{{0}, {6}});  // Z + Z/6
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> cls(-20, 20);
  for (int k = 2; k <= 5; ++k) {
    std::vector<std::vector<Int>> cube(1 << k);
    for (auto& v : cube) v = {Int(cls(rng)), Int(cls(rng))};
    std::vector<std::vector<Int>> back(cube.begin(), cube.begin() + (1 << (k - 1)));
    std::vector<std::vector<Int>> front(cube.begin() + (1 << (k - 1)), cube.end());
    std::vector<Int> tc = dk::euler_totalization(g, k, cube);
    std::vector<Int> tf = dk::euler_totalization(g, k - 1, front);
    std::vector<Int> tb = dk::euler_totalization(g, k - 1, back);
    CHECK(dk::elements_equal(g, tc, {tf[0] - tb[0], tf[1] - tb[1]}));
  }
}

TEST_CASE("vertex-map cubes recover the idempotent") {
  dk::SimplicialAbGroup a = dk::free_simplicial_abelian_group(dk::standard_simplex(2, 3));
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> cls(-5, 5);
  for (int n = 1; n <= 3; ++n) {
    auto bits = dk::all_bit_vectors(n);
    std::vector<std::vector<Int>> samples;
    for (int gidx = 0; gidx < a.level(n).generators; ++gidx) {
      std::vector<Int> e(a.level(n).generators, Int(0));
      e[gidx] = 1;
      samples.push_back(e);
    }
    std::vector<Int> mix(a.level(n).generators);
    for (auto& v : mix) v = cls(rng);
    samples.push_back(mix);
    for (const auto& x : samples) {
      std::vector<std::vector<Int>> cube;
      for (const auto& j : bits)
        cube.push_back(dk::act(a, dk::f_vertex(n, j)).matrix.apply(x));
      std::vector<Int> tot = dk::euler_totalization(a.level(n), n, cube);
      CHECK(dk::elements_equal(a.level(n), tot, dk::pi(a, n).matrix.apply(x)));
    }
  }
}

TEST_CASE("restricted classes of a simplicial element satisfy the boundary equations") {
  dk::SimplicialAbGroup a = dk::free_simplicial_abelian_group(dk::standard_simplex(2, 3));
  dk::SplitDecomposition sd = dk::split_decomposition(a);
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> cls(-4, 4);
  for (int n = 2; n <= 3; ++n) {
    std::vector<std::vector<Int>> samples;
    for (int gidx = 0; gidx < a.level(n).generators; ++gidx) {
      std::vector<Int> e(a.level(n).generators, Int(0));
      e[gidx] = 1;
      samples.push_back(e);
    }
    std::vector<Int> mix(a.level(n).generators);
    for (auto& v : mix) v = cls(rng);
    samples.push_back(mix);
    for (const auto& x : samples) {
      K0Simplex s;
      s.n = n;
      for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i <= n; ++i)
          if (mask & (1 << i)) subset.push_back(i);
        int k = static_cast<int>(subset.size()) - 1;
        dk::MonotoneMap sigma(k, n, subset);
        std::vector<Int> pulled = dk::act(a, sigma).matrix.apply(x);
        s.classes[subset] = sd.proj_normalized[k].matrix.apply(pulled);
      }
      CHECK(dk::check_nerve_simplex(sd.normalized, s));
    }
  }
}
