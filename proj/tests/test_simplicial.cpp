#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dk/simplicial.hpp"
#include "oracles.hpp"

using dk::AbHom;
using dk::IntMatrix;
using dk::MonotoneMap;
using dk::SimplicialAbGroup;
using dk::TruncSset;

namespace {

// Simplicial map of standard simplices induced by postcomposition with g.
dk::SsetMap simplex_postcompose(int src_n, int dst_n, const MonotoneMap& g, int M) {
  dk::SsetMap f;
  f.level.resize(M + 1);
  (void)src_n;
  for (int k = 0; k <= M; ++k)
    for (const auto& s : dk::all_monotone_maps(k, src_n))
      f.level[k].push_back(dk::standard_simplex_index(dst_n, dk::compose(g, s)));
  return f;
}

}  // namespace

TEST_CASE("free simplicial group on the interval") {
  SimplicialAbGroup a = dk::free_simplicial_abelian_group(dk::standard_simplex(1, 2));
  CHECK(a.levels[0].generators == 2);
  CHECK(a.levels[1].generators == 3);
  CHECK(a.levels[2].generators == 4);
  dk::check_simplicial_group(a);
  // Moore differential on [01]: d = d0 - d1 sends it to [1] - [0].
  AbHom d = dk::moore_differential(a, 1);
  int e01 = dk::standard_simplex_index(1, MonotoneMap::identity(1));
  CHECK(d.matrix.at(0, e01) == -1);
  CHECK(d.matrix.at(1, e01) == 1);
  // d on a degenerate edge vanishes.
  int e00 = dk::standard_simplex_index(1, MonotoneMap::constant(1, 1, 0));
  CHECK(d.matrix.at(0, e00) == 0);
  CHECK(d.matrix.at(1, e00) == 0);
}

TEST_CASE("moore differential squares to zero") {
  SimplicialAbGroup a = dk::free_simplicial_abelian_group(dk::standard_simplex(2, 3));
  dk::check_simplicial_group(a);
  for (int n = 2; n <= 3; ++n)
    CHECK(dk::is_zero_map(dk::compose(dk::moore_differential(a, n - 1),
                                      dk::moore_differential(a, n))));
  // Constant simplicial group: d = 0 at odd levels, identity-free check at 1.
  SimplicialAbGroup c = dk::free_simplicial_abelian_group(dk::standard_simplex(0, 2));
  CHECK(dk::is_zero_map(dk::moore_differential(c, 1)));
}

TEST_CASE("act matches the underlying simplicial set on free groups") {
  TruncSset x = dk::standard_simplex(2, 3);
  SimplicialAbGroup a = dk::free_simplicial_abelian_group(x);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    int n = static_cast<int>(oracle::rand_in(rng, 0, 3));
    int m = static_cast<int>(oracle::rand_in(rng, 0, 3));
    auto fs = dk::all_monotone_maps(m, n);
    const auto& f = fs[static_cast<size_t>(oracle::rand_in(rng, 0, static_cast<long long>(fs.size()) - 1))];
    AbHom h = dk::act(a, f);
    for (int s = 0; s < x.size(n); ++s) {
      for (int r = 0; r < x.size(m); ++r)
        CHECK(h.matrix.at(r, s) == (r == x.act(f, s) ? 1 : 0));
    }
  }
}

TEST_CASE("act agrees with the epi-mono route") {
  SimplicialAbGroup a = dk::free_simplicial_abelian_group(dk::standard_simplex(2, 3));
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& f : dk::all_monotone_maps(m, n)) {
        auto em = dk::epi_mono_factorize(f);
        CHECK(dk::equal_as_maps(dk::act(a, f),
                                dk::compose(dk::act(a, em.epi), dk::act(a, em.mono))));
      }
  // Pinned: act along (0,0,2) is s0 . d1.
  AbHom h = dk::act(a, MonotoneMap(2, 2, {0, 0, 2}));
  AbHom expect = dk::compose(a.degens[1][0], a.faces[2][1]);
  CHECK(dk::equal_as_maps(h, expect));
}

TEST_CASE("normalized subgroup ranks") {
  SimplicialAbGroup d1 = dk::free_simplicial_abelian_group(dk::standard_simplex(1, 2));
  CHECK(dk::normal_form(dk::normalized_subgroup(d1, 0).group).free_rank == 2);
  CHECK(dk::normal_form(dk::normalized_subgroup(d1, 1).group).free_rank == 1);
  CHECK(dk::normal_form(dk::normalized_subgroup(d1, 2).group).free_rank == 0);
  SimplicialAbGroup d2 = dk::free_simplicial_abelian_group(dk::standard_simplex(2, 3));
  CHECK(dk::normal_form(dk::normalized_subgroup(d2, 0).group).free_rank == 3);
  CHECK(dk::normal_form(dk::normalized_subgroup(d2, 1).group).free_rank == 3);
  CHECK(dk::normal_form(dk::normalized_subgroup(d2, 2).group).free_rank == 1);
  CHECK(dk::normal_form(dk::normalized_subgroup(d2, 3).group).free_rank == 0);
  // Constant group: trivial in positive degrees.
  SimplicialAbGroup c = dk::free_simplicial_abelian_group(dk::standard_simplex(0, 2));
  CHECK(dk::is_trivial(dk::normalized_subgroup(c, 1).group));
  CHECK(dk::is_trivial(dk::normalized_subgroup(c, 2).group));
}

TEST_CASE("degenerate subgroup ranks and containment in ker pi") {
  SimplicialAbGroup c = dk::free_simplicial_abelian_group(dk::standard_simplex(0, 2));
  auto dc = dk::degenerate_subgroup(c, 1);
  CHECK(dk::normal_form(dc.group).free_rank == 1);  // everything degenerate
  SimplicialAbGroup d1 = dk::free_simplicial_abelian_group(dk::standard_simplex(1, 2));
  auto dd = dk::degenerate_subgroup(d1, 1);
  CHECK(dk::normal_form(dd.group).free_rank == 2);
  CHECK(dk::is_zero_map(dk::compose(dk::pi(d1, 1), dd.inclusion)));
  SimplicialAbGroup d2 = dk::free_simplicial_abelian_group(dk::standard_simplex(2, 3));
  for (int n = 1; n <= 3; ++n)
    CHECK(dk::is_zero_map(dk::compose(dk::pi(d2, n), dk::degenerate_subgroup(d2, n).inclusion)));
}

TEST_CASE("pi pinned forms and idempotence") {
  SimplicialAbGroup d1 = dk::free_simplicial_abelian_group(dk::standard_simplex(1, 3));
  CHECK(dk::equal_as_maps(dk::pi(d1, 0), dk::identity_hom(d1.levels[0])));
  AbHom p1 = dk::pi(d1, 1);
  AbHom expect = dk::hom_sub(dk::identity_hom(d1.levels[1]),
                             dk::compose(d1.degens[0][0], d1.faces[1][1]));
  CHECK(dk::equal_as_maps(p1, expect));
  SimplicialAbGroup d2 = dk::free_simplicial_abelian_group(dk::standard_simplex(2, 3));
  for (int n = 0; n <= 3; ++n) {
    AbHom p = dk::pi(d2, n);
    CHECK(dk::equal_as_maps(dk::compose(p, p), p));
    // Retraction onto the normalized part.
    auto nb = dk::normalized_subgroup(d2, n);
    CHECK(dk::equal_as_maps(dk::compose(p, nb.inclusion), nb.inclusion));
    // Image is the normalized subgroup, kernel the degenerate one.
    CHECK(dk::subgroups_equal(dk::image_subgroup(p).inclusion, nb.inclusion));
    if (n >= 1)
      CHECK(dk::subgroups_equal(dk::kernel(p).inclusion,
                                dk::degenerate_subgroup(d2, n).inclusion));
    else
      CHECK(dk::is_trivial(dk::kernel(p).group));
  }
}

TEST_CASE("pi is natural for maps of standard simplices") {
  int M = 3;
  TruncSset x = dk::standard_simplex(1, M);
  TruncSset y = dk::standard_simplex(2, M);
  for (const auto& g : dk::all_monotone_maps(1, 2)) {
    dk::SsetMap sm = simplex_postcompose(1, 2, g, M);
    REQUIRE(dk::is_simplicial_map(x, y, sm));
    dk::SimplicialMap f = dk::free_simplicial_map(x, y, sm);
    REQUIRE(dk::is_simplicial_map(f));
    for (int n = 0; n <= M; ++n)
      CHECK(dk::equal_as_maps(dk::compose(f.level_maps[n], dk::pi(f.source, n)),
                              dk::compose(dk::pi(f.target, n), f.level_maps[n])));
  }
}

TEST_CASE("moore differential on the normalized part equals d0") {
  SimplicialAbGroup a = dk::free_simplicial_abelian_group(dk::standard_simplex(2, 3));
  for (int n = 1; n <= 3; ++n) {
    auto nb = dk::normalized_subgroup(a, n);
    CHECK(dk::equal_as_maps(dk::compose(dk::moore_differential(a, n), nb.inclusion),
                            dk::compose(a.faces[n][0], nb.inclusion)));
  }
}

TEST_CASE("path object, boundary, loops") {
  SimplicialAbGroup c = dk::free_simplicial_abelian_group(dk::standard_simplex(0, 3));
  SimplicialAbGroup pc = dk::path_object(c);
  CHECK(pc.truncation == 2);
  dk::check_simplicial_group(pc);
  for (int k = 0; k <= 2; ++k) CHECK(pc.levels[k] == c.levels[k]);
  CHECK(dk::is_simplicial_map(dk::boundary_map(c)));
  auto lc = dk::loop_object(c);
  for (int k = 0; k <= 2; ++k) CHECK(dk::is_trivial(lc.omega.levels[k]));

  SimplicialAbGroup d1 = dk::free_simplicial_abelian_group(dk::standard_simplex(1, 3));
  CHECK(dk::is_simplicial_map(dk::boundary_map(d1)));
  auto l1 = dk::loop_object(d1);
  dk::check_simplicial_group(l1.omega);
  CHECK(dk::is_simplicial_map(l1.inclusion));
  // Composite Omega -> P -> A is zero levelwise.
  dk::SimplicialMap b = dk::boundary_map(d1);
  for (int k = 0; k <= l1.omega.truncation; ++k)
    CHECK(dk::is_zero_map(dk::compose(b.level_maps[k], l1.inclusion.level_maps[k])));
}

TEST_CASE("direct sums of simplicial groups") {
  SimplicialAbGroup d1 = dk::free_simplicial_abelian_group(dk::standard_simplex(1, 2));
  SimplicialAbGroup pt = dk::free_simplicial_abelian_group(dk::standard_simplex(0, 2));
  auto s = dk::simplicial_direct_sum({d1, pt});
  dk::check_simplicial_group(s.group);
  CHECK(s.group.levels[0].generators == 3);
  CHECK(s.group.levels[1].generators == 4);
  for (size_t i = 0; i < 2; ++i) {
    CHECK(dk::is_simplicial_map(s.inclusions[i]));
    CHECK(dk::is_simplicial_map(s.projections[i]));
    auto round = dk::compose(s.projections[i], s.inclusions[i]);
    for (int k = 0; k <= 2; ++k)
      CHECK(dk::equal_as_maps(round.level_maps[k],
                              dk::identity_hom(s.inclusions[i].source.levels[k])));
  }
}
