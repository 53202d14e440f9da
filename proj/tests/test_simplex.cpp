#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dk/simplex.hpp"

#include <set>
#include <string>

using dk::MonotoneMap;

namespace {

std::string label(const MonotoneMap& m) {
  std::string s;
  for (int v : m.values()) s += static_cast<char>('0' + v);
  return s;
}

}  // namespace

TEST_CASE("generators pinned") {
  CHECK(MonotoneMap::face(0, 1).values() == std::vector<int>{1});
  CHECK(MonotoneMap::face(1, 1).values() == std::vector<int>{0});
  CHECK(MonotoneMap::face(1, 3).values() == std::vector<int>{0, 2, 3});
  CHECK(MonotoneMap::degeneracy(0, 0).values() == std::vector<int>{0, 0});
  CHECK(MonotoneMap::degeneracy(1, 2).values() == std::vector<int>{0, 1, 1, 2});
  CHECK(dk::compose(MonotoneMap::degeneracy(0, 0), MonotoneMap::face(0, 1)).is_identity());
  CHECK(MonotoneMap::identity(3).is_identity());
  CHECK(MonotoneMap::vertex(2, 4).values() == std::vector<int>{2});
}

TEST_CASE("cosimplicial identities up to n = 6") {
  for (int n = 1; n <= 6; ++n) {
    // d_j d_i = d_i d_{j-1} for i < j   (maps [n-1] -> [n+1])
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n + 1; ++j)
        CHECK(dk::compose(MonotoneMap::face(j, n + 1), MonotoneMap::face(i, n)) ==
              dk::compose(MonotoneMap::face(i, n + 1), MonotoneMap::face(j - 1, n)));
    // s_j s_i = s_i s_{j+1} for i <= j  (maps [n+2] -> [n])
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        CHECK(dk::compose(MonotoneMap::degeneracy(j, n), MonotoneMap::degeneracy(i, n + 1)) ==
              dk::compose(MonotoneMap::degeneracy(i, n), MonotoneMap::degeneracy(j + 1, n + 1)));
    // s_j d_i, three cases  (maps [n] -> [n])
    for (int i = 0; i <= n + 1; ++i)
      for (int j = 0; j <= n; ++j) {
        MonotoneMap lhs =
            dk::compose(MonotoneMap::degeneracy(j, n), MonotoneMap::face(i, n + 1));
        if (i < j)
          CHECK(lhs == dk::compose(MonotoneMap::face(i, n), MonotoneMap::degeneracy(j - 1, n - 1)));
        else if (i == j || i == j + 1)
          CHECK(lhs.is_identity());
        else
          CHECK(lhs == dk::compose(MonotoneMap::face(i - 1, n), MonotoneMap::degeneracy(j, n - 1)));
      }
  }
}

TEST_CASE("epi-mono factorization") {
  SUBCASE("pinned example") {
    MonotoneMap f(2, 2, {0, 0, 2});
    auto em = dk::epi_mono_factorize(f);
    CHECK(em.epi.values() == std::vector<int>{0, 0, 1});
    CHECK(em.mono.values() == std::vector<int>{0, 2});
    CHECK(dk::compose(em.mono, em.epi) == f);
  }
  SUBCASE("injective and surjective edge cases") {
    MonotoneMap inj(1, 3, {1, 3});
    auto a = dk::epi_mono_factorize(inj);
    CHECK(a.epi.is_identity());
    CHECK(a.mono == inj);
    MonotoneMap surj(3, 1, {0, 0, 1, 1});
    auto b = dk::epi_mono_factorize(surj);
    CHECK(b.mono.is_identity());
    CHECK(b.epi == surj);
  }
  SUBCASE("total and unique, exhaustive over small ordinals") {
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n)
        for (const auto& f : dk::all_monotone_maps(m, n)) {
          auto em = dk::epi_mono_factorize(f);
          CHECK(em.epi.is_surjective());
          CHECK(em.mono.is_injective());
          CHECK(dk::compose(em.mono, em.epi) == f);
          // Uniqueness: count all surjection/injection pairs composing to f.
          int count = 0;
          for (int mid = 0; mid <= n; ++mid)
            for (const auto& e : dk::all_surjections(m, mid))
              for (const auto& mo : dk::all_injections(mid, n))
                if (dk::compose(mo, e) == f) ++count;
          CHECK(count == 1);
        }
  }
}

TEST_CASE("enumerations") {
  // |Hom([m],[n])| = C(m+n+1, m+1), injections C(n+1, m+1).
  CHECK(dk::all_monotone_maps(1, 1).size() == 3);
  CHECK(dk::all_monotone_maps(2, 2).size() == 10);
  CHECK(dk::all_injections(1, 2).size() == 3);
  CHECK(dk::all_injections(2, 2).size() == 1);
  CHECK(dk::all_injections(3, 2).empty());
  CHECK(dk::all_surjections(2, 1).size() == 2);
  // Lexicographic order and distinctness.
  auto maps = dk::all_monotone_maps(2, 3);
  for (size_t i = 1; i < maps.size(); ++i) CHECK(maps[i - 1] < maps[i]);
}

TEST_CASE("f_vertex pinned values") {
  CHECK(dk::f_vertex(2, {1, 1}).is_identity());
  CHECK(dk::f_vertex(2, {0, 1}).values() == std::vector<int>{0, 0, 2});
  CHECK(dk::f_vertex(2, {1, 0}).values() == std::vector<int>{0, 1, 1});
  CHECK(dk::f_vertex(2, {0, 0}).values() == std::vector<int>{0, 0, 1});
  CHECK(dk::f_vertex(0, {}).is_identity());
  // Non-identity bit patterns give non-injective maps (k <= 6).
  for (int k = 0; k <= 6; ++k) {
    std::set<MonotoneMap> seen;
    for (const auto& bits : dk::all_bit_vectors(k)) {
      MonotoneMap f = dk::f_vertex(k, bits);
      CHECK(seen.insert(f).second);  // pairwise distinct
      bool all_ones = true;
      for (int b : bits) all_ones = all_ones && b == 1;
      CHECK(f.is_injective() == all_ones);
      CHECK(f.is_identity() == all_ones);
    }
  }
}

TEST_CASE("b_vertex pinned values and relation to f") {
  CHECK(dk::b_vertex(2, {0, 0}).values() == std::vector<int>{0, 1});
  CHECK(dk::b_vertex(2, {0, 1}).values() == std::vector<int>{0, 2});
  CHECK(dk::b_vertex(2, {1, 0}).values() == std::vector<int>{1, 1});
  CHECK(dk::b_vertex(2, {1, 1}).values() == std::vector<int>{1, 2});
  for (int k = 1; k <= 6; ++k)
    for (const auto& bits : dk::all_bit_vectors(k))
      CHECK(dk::compose(dk::f_vertex(k, bits), MonotoneMap::face(0, k)) ==
            dk::b_vertex(k, bits));
}

TEST_CASE("q_vertex reproduces the printed k=2 labels") {
  CHECK(dk::q_vertex(2, 1, {1, 1}).is_identity());
  std::vector<std::string> labels;
  for (const auto& all : dk::all_bit_vectors(3)) {
    std::vector<int> rest(all.begin() + 1, all.end());
    labels.push_back(label(dk::q_vertex(2, all[0], rest)));
  }
  CHECK(labels == std::vector<std::string>{"01", "02", "11", "12", "001", "002", "011", "012"});
}

TEST_CASE("bit vector enumeration order") {
  auto bv = dk::all_bit_vectors(2);
  REQUIRE(bv.size() == 4);
  CHECK(bv[0] == std::vector<int>{0, 0});
  CHECK(bv[1] == std::vector<int>{0, 1});
  CHECK(bv[2] == std::vector<int>{1, 0});
  CHECK(bv[3] == std::vector<int>{1, 1});
  CHECK(dk::all_bit_vectors(0).size() == 1);
}
