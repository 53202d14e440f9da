#include "dk/groth.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace dk {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::logic_error(msg); }

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(v[i]);
  }
  return s;
}

// Position of the pair (i,j), i < j, in the lex list over [0..k].
int pair_pos(int k, int i, int j) { return i * k - i * (i - 1) / 2 + j - i - 1; }

// Constant chain at object c, level k.
std::vector<int> constant_chain(const FinCategory& base, int c, int k) {
  if (k == 0) return {c};
  return std::vector<int>(static_cast<size_t>(k), base.identity[c]);
}

}  // namespace

void check_cat_valued_functor(const CatValuedFunctor& f) {
  check_fin_category(f.base);
  if (static_cast<int>(f.fiber.size()) != f.base.num_objects()) fail("chi data: fiber count");
  for (const auto& c : f.fiber) check_fin_category(c);
  if (static_cast<int>(f.transition.size()) != f.base.num_arrows())
    fail("chi data: transition count");
  for (int a = 0; a < f.base.num_arrows(); ++a) {
    const auto& t = f.transition[a];
    if (!is_fin_functor(f.fiber[f.base.arrows[a].tgt], f.fiber[f.base.arrows[a].src], t))
      fail("chi data: transition is not a functor");
  }
  for (int x = 0; x < f.base.num_objects(); ++x)
    if (!fin_functors_equal(f.transition[f.base.identity[x]], identity_fin_functor(f.fiber[x])))
      fail("chi data: transition of an identity");
  for (int u = 0; u < f.base.num_arrows(); ++u)
    for (int v = 0; v < f.base.num_arrows(); ++v) {
      if (f.base.arrows[u].tgt != f.base.arrows[v].src) continue;
      if (!fin_functors_equal(f.transition[f.base.after[v][u]],
                              compose_fin_functors(f.transition[u], f.transition[v])))
        fail("chi data: transition of a composite");
    }
}

int ChiData::index_of(int k, int base, const std::vector<int>& ys) const {
  for (size_t x = 0; x < base_of[k].size(); ++x)
    if (base_of[k][x] == base && fiber_of[k][x] == ys) return static_cast<int>(x);
  return -1;
}

ChiData chi(const CatValuedFunctor& f, int M, long long budget) {
  check_cat_valued_functor(f);
  ChiData out;
  out.base_nerve = nerve_of_category(f.base, M);
  for (const auto& c : f.fiber) out.fiber_nerves.push_back(nerve_of_category(c, M));
  out.base_of.assign(M + 1, {});
  out.fiber_of.assign(M + 1, {});
  std::vector<std::vector<std::string>> labels(M + 1);
  std::vector<std::map<std::pair<int, std::vector<int>>, int>> index(M + 1);

  for (int k = 0; k <= M; ++k) {
    for (int b = 0; b < out.base_nerve.sset.size(k); ++b) {
      std::vector<int> objs = out.base_nerve.chain_objects(f.base, k, b);
      const auto& chain = out.base_nerve.chains[k][b];
      std::vector<int> ys(k + 1);
      // Choose y_m top down; d_0 of y_m must be the transition image of y_{m+1}.
      auto rec = [&](auto&& self, int m) -> void {
        if (m < 0) {
          index[k][std::make_pair(b, ys)] = static_cast<int>(out.base_of[k].size());
          out.base_of[k].push_back(b);
          out.fiber_of[k].push_back(ys);
          labels[k].push_back(out.base_nerve.sset.label(k, b) + "|" + join_ints(ys));
          return;
        }
        const CatNerve& nerve = out.fiber_nerves[objs[m]];
        int want = -1;
        if (m < k)
          want = nerve_apply_functor(f.fiber[objs[m + 1]], f.fiber[objs[m]],
                                     f.transition[chain[m]], out.fiber_nerves[objs[m + 1]],
                                     nerve, k - m - 1, ys[m + 1]);
        for (int y = 0; y < nerve.sset.size(k - m); ++y) {
          if (--budget < 0) throw std::runtime_error("chi: budget exceeded");
          if (m < k && nerve.sset.face_of(k - m, 0, y) != want) continue;
          ys[m] = y;
          self(self, m - 1);
        }
      };
      rec(rec, k);
    }
  }

  std::vector<std::vector<std::vector<int>>> face(M + 1), degen(M + 1);
  auto moved = [&](int k, int x, const MonotoneMap& alpha) {
    int kp = alpha.src_dim();
    int b2 = out.base_nerve.sset.act(alpha, out.base_of[k][x]);
    std::vector<int> objs2 = out.base_nerve.chain_objects(f.base, kp, b2);
    std::vector<int> ys2(kp + 1);
    for (int t = 0; t <= kp; ++t) {
      std::vector<int> vals(kp - t + 1);
      for (int s = 0; s <= kp - t; ++s) vals[s] = alpha(t + s) - alpha(t);
      MonotoneMap shift(kp - t, k - alpha(t), vals);
      ys2[t] = out.fiber_nerves[objs2[t]].sset.act(shift, out.fiber_of[k][x][alpha(t)]);
    }
    auto it = index[kp].find(std::make_pair(b2, ys2));
    if (it == index[kp].end()) fail("chi: structure image missing");
    return it->second;
  };
  for (int k = 1; k <= M; ++k) {
    face[k].assign(k + 1, std::vector<int>(out.base_of[k].size()));
    for (int i = 0; i <= k; ++i)
      for (size_t x = 0; x < out.base_of[k].size(); ++x)
        face[k][i][x] = moved(k, static_cast<int>(x), MonotoneMap::face(i, k));
  }
  for (int k = 0; k < M; ++k) {
    degen[k].assign(k + 1, std::vector<int>(out.base_of[k].size()));
    for (int i = 0; i <= k; ++i)
      for (size_t x = 0; x < out.base_of[k].size(); ++x)
        degen[k][i][x] = moved(k, static_cast<int>(x), MonotoneMap::degeneracy(i, k));
  }
  out.fs.total = TruncSset(M, std::move(labels), std::move(face), std::move(degen));
  if (M >= 1)
    for (size_t x = 0; x < out.base_of[1].size(); ++x) {
      int c0 = out.base_nerve.chain_objects(f.base, 1, out.base_of[1][x])[0];
      int u = out.fiber_nerves[c0].chains[1][out.fiber_of[1][x][0]][0];
      if (arrow_is_iso(f.fiber[c0], u)) out.fs.total.marked_edges().insert(static_cast<int>(x));
    }
  out.fs.base = out.base_nerve.sset;
  out.fs.projection.level = out.base_of;
  return out;
}

std::vector<std::vector<int>> chi_fiber_indices(const CatValuedFunctor& f, const ChiData& x,
                                                int c) {
  int M = x.fs.total.truncation();
  std::vector<std::vector<int>> out(M + 1);
  for (int k = 0; k <= M; ++k) {
    int b = x.base_nerve.chain_index(k, constant_chain(f.base, c, k));
    for (size_t i = 0; i < x.base_of[k].size(); ++i)
      if (x.base_of[k][i] == b) out[k].push_back(static_cast<int>(i));
  }
  return out;
}

SsetMap chi_fiber_embedding(const CatValuedFunctor& f, const ChiData& x, int c) {
  int M = x.fs.total.truncation();
  const CatNerve& nerve = x.fiber_nerves[c];
  SsetMap e;
  e.level.resize(M + 1);
  for (int k = 0; k <= M; ++k) {
    int b = x.base_nerve.chain_index(k, constant_chain(f.base, c, k));
    e.level[k].resize(nerve.sset.size(k));
    for (int y = 0; y < nerve.sset.size(k); ++y) {
      std::vector<int> ys(k + 1);
      ys[0] = y;
      for (int m = 0; m < k; ++m) ys[m + 1] = nerve.sset.face_of(k - m, 0, ys[m]);
      int idx = x.index_of(k, b, ys);
      if (idx < 0) fail("chi fiber: simplex missing");
      e.level[k][y] = idx;
    }
  }
  return e;
}

void check_cat_valued_nat_trans(const CatValuedFunctor& f, const CatValuedFunctor& g,
                                const CatValuedNatTrans& t) {
  if (f.base.num_objects() != g.base.num_objects() ||
      f.base.num_arrows() != g.base.num_arrows())
    fail("nat trans: base mismatch");
  if (static_cast<int>(t.component.size()) != f.base.num_objects())
    fail("nat trans: component count");
  for (int x = 0; x < f.base.num_objects(); ++x)
    if (!is_fin_functor(f.fiber[x], g.fiber[x], t.component[x]))
      fail("nat trans: component is not a functor");
  for (int a = 0; a < f.base.num_arrows(); ++a) {
    int xo = f.base.arrows[a].src, yo = f.base.arrows[a].tgt;
    if (!fin_functors_equal(compose_fin_functors(t.component[xo], f.transition[a]),
                            compose_fin_functors(g.transition[a], t.component[yo])))
      fail("nat trans: naturality square");
  }
}

SsetMap chi_map(const CatValuedFunctor& f, const CatValuedFunctor& g,
                const CatValuedNatTrans& t, const ChiData& xf, const ChiData& xg) {
  check_cat_valued_nat_trans(f, g, t);
  int M = xf.fs.total.truncation();
  SsetMap m;
  m.level.resize(M + 1);
  for (int k = 0; k <= M; ++k) {
    m.level[k].resize(xf.base_of[k].size());
    for (size_t x = 0; x < xf.base_of[k].size(); ++x) {
      int b = xf.base_of[k][x];
      std::vector<int> objs = xf.base_nerve.chain_objects(f.base, k, b);
      std::vector<int> ys(k + 1);
      for (int mm = 0; mm <= k; ++mm)
        ys[mm] = nerve_apply_functor(f.fiber[objs[mm]], g.fiber[objs[mm]], t.component[objs[mm]],
                                     xf.fiber_nerves[objs[mm]], xg.fiber_nerves[objs[mm]],
                                     k - mm, xf.fiber_of[k][x][mm]);
      int idx = xg.index_of(k, b, ys);
      if (idx < 0) fail("chi_map: image missing");
      m.level[k][x] = idx;
    }
  }
  return m;
}

namespace {

// All simplicial maps a -> x with proj_x . g = over and marked nondegenerate
// edges landing on marked edges.  Backtracks over nondegenerate simplices in
// level-then-index order; degenerate values are forced.
std::vector<SsetMap> maps_over(const TruncSset& a, const TruncSset& x, const SsetMap& over,
                               const SsetMap& proj, long long& budget) {
  int M = a.truncation();
  std::vector<SsetMap> found;
  SsetMap g;
  g.level.assign(M + 1, {});
  // degeneracy witnesses: (i, b) with degen(i, b) = simplex, or (-1, -1)
  std::vector<std::vector<std::pair<int, int>>> wit(M + 1);
  for (int k = 1; k <= M; ++k) {
    wit[k].assign(a.size(k), {-1, -1});
    for (int i = 0; i <= k - 1; ++i)
      for (int b = 0; b < a.size(k - 1); ++b) {
        int s = a.degen_of(k - 1, i, b);
        if (wit[k][s].first < 0) wit[k][s] = {i, b};
      }
  }
  // candidate buckets by projection value
  std::vector<std::map<int, std::vector<int>>> bucket(M + 1);
  for (int k = 0; k <= M; ++k)
    for (int y = 0; y < x.size(k); ++y) bucket[k][proj.level[k][y]].push_back(y);

  auto level_rec = [&](auto&& self, int k, const std::vector<int>& nd, size_t pos) -> void {
    if (pos == nd.size()) {
      for (int z = 0; z < a.size(k); ++z) {
        if (!a.is_degenerate(k, z)) continue;
        auto [i, b] = wit[k][z];
        g.level[k][z] = x.degen_of(k - 1, i, g.level[k - 1][b]);
      }
      if (k == M) {
        found.push_back(g);
        return;
      }
      g.level[k + 1].assign(a.size(k + 1), -1);
      self(self, k + 1, a.nondegenerate(k + 1), 0);
      g.level[k + 1].clear();
      return;
    }
    int z = nd[pos];
    auto it = bucket[k].find(over.level[k][z]);
    if (it == bucket[k].end()) return;
    for (int y : it->second) {
      if (--budget < 0) throw std::runtime_error("gamma: budget exceeded");
      bool ok = true;
      for (int i = 0; ok && i <= k && k >= 1; ++i)
        ok = x.act(MonotoneMap::face(i, k), y) ==
             g.level[k - 1][a.act(MonotoneMap::face(i, k), z)];
      if (ok && k == 1 && a.edge_marked(z) && !x.edge_marked(y)) ok = false;
      if (!ok) continue;
      g.level[k][z] = y;
      self(self, k, nd, pos + 1);
    }
    g.level[k][z] = -1;
  };
  g.level[0].assign(a.size(0), -1);
  level_rec(level_rec, 0, a.nondegenerate(0), 0);
  return found;
}

}  // namespace

int GammaData::index_of(int k, const SsetMap& g) const {
  for (size_t i = 0; i < maps[k].size(); ++i)
    if (maps[k][i].level == g.level) return static_cast<int>(i);
  return -1;
}

GammaData gamma(const FinCategory& c, const FiberedSset& x, int obj, int m_map,
                long long budget) {
  if (m_map < 0 || m_map > 2) throw std::invalid_argument("gamma: m_map out of range");
  int M = x.total.truncation();
  GammaData out;
  out.slice = slice_over(c, obj);
  out.slice_nerve = nerve_of_category(out.slice.cat, M);
  out.slice_nerve.sset.mark_all_edges();
  CatNerve base_nerve = nerve_of_category(c, M);
  if (x.base.size(0) != base_nerve.sset.size(0) || x.base.size(M) != base_nerve.sset.size(M))
    throw std::invalid_argument("gamma: base is not the nerve of c");
  out.slice_to_base = nerve_functor_map(out.slice.cat, c, out.slice.forgetful, out.slice_nerve,
                                        base_nerve);

  std::vector<std::vector<std::string>> labels(m_map + 1);
  for (int k = 0; k <= m_map; ++k) {
    TruncSset dk = standard_simplex(k, M);
    out.domains.push_back(product(dk, out.slice_nerve.sset));
    SsetMap over;
    over.level.resize(M + 1);
    for (int l = 0; l <= M; ++l) {
      over.level[l].resize(out.domains[k].size(l));
      for (int z = 0; z < out.domains[k].size(l); ++z)
        over.level[l][z] =
            out.slice_to_base.level[l][product_split(dk, out.slice_nerve.sset, l, z).second];
    }
    out.domain_over.push_back(over);
    out.maps.push_back(maps_over(out.domains[k], x.total, over, x.projection, budget));
    for (size_t i = 0; i < out.maps[k].size(); ++i)
      labels[k].push_back("m" + std::to_string(k) + "_" + std::to_string(i));
  }

  // Structure maps act by precomposition on the simplex coordinate.
  auto reindexed = [&](int k, const SsetMap& g, const MonotoneMap& alpha) {
    int kp = alpha.src_dim();
    TruncSset dk = standard_simplex(k, M), dp = standard_simplex(kp, M);
    SsetMap post = standard_simplex_map(alpha, M);
    SsetMap h;
    h.level.resize(M + 1);
    for (int l = 0; l <= M; ++l) {
      h.level[l].resize(out.domains[kp].size(l));
      for (int z = 0; z < out.domains[kp].size(l); ++z) {
        auto [u, v] = product_split(dp, out.slice_nerve.sset, l, z);
        h.level[l][z] = g.level[l][product_index(dk, out.slice_nerve.sset, l,
                                                 post.level[l][u], v)];
      }
    }
    int idx = out.index_of(kp, h);
    if (idx < 0) fail("gamma: structure image missing");
    return idx;
  };
  std::vector<std::vector<std::vector<int>>> face(m_map + 1), degen(m_map + 1);
  for (int k = 1; k <= m_map; ++k) {
    face[k].assign(k + 1, std::vector<int>(out.maps[k].size()));
    for (int i = 0; i <= k; ++i)
      for (size_t z = 0; z < out.maps[k].size(); ++z)
        face[k][i][z] = reindexed(k, out.maps[k][z], MonotoneMap::face(i, k));
  }
  for (int k = 0; k < m_map; ++k) {
    degen[k].assign(k + 1, std::vector<int>(out.maps[k].size()));
    for (int i = 0; i <= k; ++i)
      for (size_t z = 0; z < out.maps[k].size(); ++z)
        degen[k][i][z] = reindexed(k, out.maps[k][z], MonotoneMap::degeneracy(i, k));
  }
  out.sset = TruncSset(m_map, std::move(labels), std::move(face), std::move(degen));
  return out;
}

namespace {

// Monotone maps [l] -> [k] listed by standard-simplex index.
std::vector<std::vector<MonotoneMap>> simplex_index_tables(int k, int M) {
  std::vector<std::vector<MonotoneMap>> t(M + 1);
  for (int l = 0; l <= M; ++l) {
    auto all = all_monotone_maps(l, k);
    t[l].resize(all.size(), MonotoneMap::identity(0));
    for (const auto& f : all) t[l][standard_simplex_index(k, f)] = f;
  }
  return t;
}

}  // namespace

SsetMap eta_map(const CatValuedFunctor& f, const ChiData& x, const GammaData& g, int obj) {
  int M = x.fs.total.truncation();
  int m_map = g.sset.truncation();
  const CatNerve& nf = x.fiber_nerves[obj];
  SsetMap eta;
  eta.level.resize(m_map + 1);
  for (int k = 0; k <= m_map; ++k) {
    TruncSset dk = standard_simplex(k, M);
    auto phis = simplex_index_tables(k, M);
    eta.level[k].resize(nf.sset.size(k));
    for (int y = 0; y < nf.sset.size(k); ++y) {
      SsetMap h;
      h.level.resize(M + 1);
      for (int l = 0; l <= M; ++l) {
        h.level[l].resize(g.domains[k].size(l));
        for (int z = 0; z < g.domains[k].size(l); ++z) {
          auto [u, v] = product_split(dk, g.slice_nerve.sset, l, z);
          const MonotoneMap& phi = phis[l][u];
          int yphi = nf.sset.act(phi, y);
          std::vector<int> slice_objs = g.slice_nerve.chain_objects(g.slice.cat, l, v);
          int b = x.base_nerve.chain_index(
              l, l == 0 ? std::vector<int>{g.slice.forgetful.obj[slice_objs[0]]}
                        : [&] {
                            std::vector<int> ch;
                            for (int sa : g.slice_nerve.chains[l][v])
                              ch.push_back(g.slice.forgetful.arr[sa]);
                            return ch;
                          }());
          std::vector<int> ys(l + 1);
          for (int m = 0; m <= l; ++m) {
            std::vector<int> vals(l - m + 1);
            for (int s2 = 0; s2 <= l - m; ++s2) vals[s2] = m + s2;
            int tail = nf.sset.act(MonotoneMap(l - m, l, vals), yphi);
            int arrow = g.slice.object_arrow[slice_objs[m]];
            int cm = f.base.arrows[arrow].src;
            ys[m] = nerve_apply_functor(f.fiber[obj], f.fiber[cm], f.transition[arrow], nf,
                                        x.fiber_nerves[cm], l - m, tail);
          }
          int idx = x.index_of(l, b, ys);
          if (idx < 0) fail("eta: image simplex missing");
          h.level[l][z] = idx;
        }
      }
      int gi = g.index_of(k, h);
      if (gi < 0) fail("eta: image map not enumerated");
      eta.level[k][y] = gi;
    }
  }
  return eta;
}

SsetMap ev_map(const CatValuedFunctor& f, const ChiData& x, const GammaData& g, int obj) {
  int M = x.fs.total.truncation();
  int m_map = g.sset.truncation();
  int id_obj = -1;
  for (size_t i = 0; i < g.slice.object_arrow.size(); ++i)
    if (g.slice.object_arrow[i] == f.base.identity[obj]) id_obj = static_cast<int>(i);
  if (id_obj < 0) fail("ev: identity slice object missing");
  SsetMap ev;
  ev.level.resize(m_map + 1);
  for (int k = 0; k <= m_map; ++k) {
    TruncSset dk = standard_simplex(k, M);
    int top = standard_simplex_index(k, MonotoneMap::identity(k));
    int vchain = g.slice_nerve.chain_index(k, constant_chain(g.slice.cat, id_obj, k));
    int z = product_index(dk, g.slice_nerve.sset, k, top, vchain);
    ev.level[k].resize(g.maps[k].size());
    for (size_t i = 0; i < g.maps[k].size(); ++i)
      ev.level[k][i] = x.fiber_of[k][g.maps[k][i].level[k][z]][0];
  }
  return ev;
}

void check_lax_cat_valued_functor(const LaxCatValuedFunctor& f) {
  check_two_category(f.base);
  int n = f.base.num_objects();
  if (static_cast<int>(f.fiber.size()) != n) fail("lax data: fiber count");
  for (const auto& c : f.fiber) check_fin_category(c);
  if (static_cast<int>(f.transition.size()) != n) fail("lax data: transition rows");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(f.transition[x].size()) != n) fail("lax data: transition cols");
    for (int y = 0; y < n; ++y) {
      if (static_cast<int>(f.transition[x][y].size()) != f.base.hom[x][y].size())
        fail("lax data: transition hom size");
      for (const auto& t : f.transition[x][y])
        if (!is_fin_functor(f.fiber[y], f.fiber[x], t))
          fail("lax data: transition is not a functor");
    }
  }
  for (int x = 0; x < n; ++x)
    if (!fin_functors_equal(f.transition[x][x][f.base.identities[x]],
                            identity_fin_functor(f.fiber[x])))
      fail("lax data: transition of an identity");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int a = 0; a < static_cast<int>(f.base.hom[x][y].size()); ++a)
          for (int b = 0; b < static_cast<int>(f.base.hom[y][z].size()); ++b)
            if (!fin_functors_equal(
                    f.transition[x][z][f.base.compose1(x, y, z, a, b)],
                    compose_fin_functors(f.transition[x][y][a], f.transition[y][z][b])))
              fail("lax data: transition of a composite");
}

namespace {

// Interval {m, m+1, ..., k}.
std::vector<int> tail_set(int m, int k) {
  std::vector<int> s;
  for (int i = m; i <= k; ++i) s.push_back(i);
  return s;
}

// Non-identity morphisms out of the minimum singleton, by target then table order.
struct FreeMor {
  int b = 0;  // target object
  int h = 0;  // index within morphisms[a0][b]
};

std::vector<FreeMor> free_morphisms(const GCategory& gc) {
  std::vector<FreeMor> out;
  std::vector<int> min_singleton{gc.elements.front()};
  int a0 = gc.object_index(min_singleton);
  for (int b = 0; b < static_cast<int>(gc.objects.size()); ++b)
    for (int h = 0; h < static_cast<int>(gc.morphisms[a0][b].size()); ++h) {
      if (b == a0 && gc.morphisms[a0][b][h] == min_singleton) continue;
      out.push_back({b, h});
    }
  return out;
}

int find_morphism(const GCategory& gc, int a, int b, const std::vector<int>& h) {
  for (size_t i = 0; i < gc.morphisms[a][b].size(); ++i)
    if (gc.morphisms[a][b][i] == h) return static_cast<int>(i);
  return -1;
}

int free_position(const GCategory& gc, const std::vector<FreeMor>& fl, int b,
                  const std::vector<int>& h) {
  int hi = find_morphism(gc, gc.object_index({gc.elements.front()}), b, h);
  for (size_t i = 0; i < fl.size(); ++i)
    if (fl[i].b == b && fl[i].h == hi) return static_cast<int>(i);
  return -1;
}

// 1-cell assigned to the subset S by the edge-data 2-functor (V, E) at level k.
int sigma_cell(const PosetEnriched2Cat& c, const std::vector<int>& V, const std::vector<int>& E,
               int k, const std::vector<int>& S) {
  if (S.size() == 1) return c.identities[V[S[0]]];
  int e = E[pair_pos(k, S[0], S[1])];
  for (size_t t = 1; t + 1 < S.size(); ++t)
    e = c.compose1(V[S[0]], V[S[t]], V[S[t + 1]], e, E[pair_pos(k, S[t], S[t + 1])]);
  return e;
}

// Monotone image of a subset, with duplicates collapsed.
std::vector<int> subset_image(const MonotoneMap& alpha, const std::vector<int>& s) {
  std::vector<int> out;
  for (int v : s) {
    int w = alpha(v);
    if (out.empty() || out.back() != w) out.push_back(w);
  }
  return out;
}

std::string lax_label(const std::string& base, const std::vector<int>& verts,
                      const std::vector<std::vector<int>>& arrows) {
  std::string s = base + "|" + join_ints(verts) + "|";
  for (size_t m = 0; m < arrows.size(); ++m) {
    if (m) s += ";";
    s += join_ints(arrows[m]);
  }
  return s;
}

}  // namespace

int LaxChiData::index_of(int k, int base, const std::vector<int>& verts,
                         const std::vector<std::vector<int>>& arrows) const {
  for (size_t x = 0; x < base_of[k].size(); ++x)
    if (base_of[k][x] == base && vertex_of[k][x] == verts && arrows_of[k][x] == arrows)
      return static_cast<int>(x);
  return -1;
}

LaxChiData lax_chi(const LaxCatValuedFunctor& f, int M, long long budget) {
  if (M < 0 || M > 2) throw std::invalid_argument("lax_chi: truncation out of range");
  check_lax_cat_valued_functor(f);
  LaxChiData out;
  out.base = scaled_nerve_data(f.base, M, budget);
  out.base_of.assign(M + 1, {});
  out.vertex_of.assign(M + 1, {});
  out.arrows_of.assign(M + 1, {});
  std::vector<std::vector<std::string>> labels(M + 1);

  for (int k = 0; k <= M; ++k) {
    std::vector<GCategory> gcats;
    std::vector<std::vector<FreeMor>> frees;
    for (int m = 0; m <= k; ++m) {
      gcats.push_back(g_category(tail_set(m, k)));
      frees.push_back(free_morphisms(gcats[m]));
    }
    for (int bi = 0; bi < out.base.sset.size(k); ++bi) {
      const auto& V = out.base.verts[k][bi];
      const auto& E = out.base.edges[k][bi];
      std::vector<int> xi(k + 1);
      std::vector<std::vector<int>> objval(k + 1);
      std::vector<std::vector<std::vector<std::vector<int>>>> valtab(k + 1);
      std::vector<std::vector<int>> freeval(k + 1);

      // Forced object values at level m from the vertex choices above it.
      auto fill_objects = [&](int m) {
        const GCategory& gm = gcats[m];
        objval[m].resize(gm.objects.size());
        for (size_t s = 0; s < gm.objects.size(); ++s) {
          const auto& S = gm.objects[s];
          int cell = sigma_cell(f.base, V, E, k, S);
          objval[m][s] = f.transition[V[S.front()]][V[S.back()]][cell].obj[xi[S.back()]];
        }
      };
      // Morphism values forced away from the minimum singleton; false when an
      // endpoint fails to match.
      auto fill_forced = [&](int m) {
        const GCategory& gm = gcats[m];
        const FinCategory& fib = f.fiber[V[m]];
        int a0 = gm.object_index({m});
        size_t no = gm.objects.size();
        valtab[m].assign(no, {});
        for (size_t a = 0; a < no; ++a) {
          valtab[m][a].assign(no, {});
          for (size_t b = 0; b < no; ++b)
            valtab[m][a][b].assign(gm.morphisms[a][b].size(), -1);
        }
        for (size_t a = 0; a < no; ++a) {
          if (static_cast<int>(a) == a0) continue;
          const auto& S = gm.objects[a];
          int ms = S.back();
          const GCategory& gt = gcats[ms];
          int ta0 = gt.object_index({ms});
          for (size_t b = 0; b < no; ++b)
            for (size_t h = 0; h < gm.morphisms[a][b].size(); ++h) {
              const auto& H = gm.morphisms[a][b][h];
              int tb = gt.object_index(H);
              int th = find_morphism(gt, ta0, tb, H);
              int inner = valtab[ms][ta0][tb][th];
              int cell = sigma_cell(f.base, V, E, k, S);
              int val = f.transition[V[S.front()]][V[ms]][cell].arr[inner];
              if (fib.arrows[val].src != objval[m][a] || fib.arrows[val].tgt != objval[m][b])
                return false;
              valtab[m][a][b][h] = val;
            }
        }
        return true;
      };
      auto check_functor = [&](int m) {
        const GCategory& gm = gcats[m];
        const FinCategory& fib = f.fiber[V[m]];
        size_t no = gm.objects.size();
        for (size_t a = 0; a < no; ++a)
          for (size_t b = 0; b < no; ++b)
            for (size_t h1 = 0; h1 < gm.morphisms[a][b].size(); ++h1)
              for (size_t c2 = 0; c2 < no; ++c2)
                for (size_t h2 = 0; h2 < gm.morphisms[b][c2].size(); ++h2) {
                  std::vector<int> u;
                  std::set_union(gm.morphisms[a][b][h1].begin(), gm.morphisms[a][b][h1].end(),
                                 gm.morphisms[b][c2][h2].begin(), gm.morphisms[b][c2][h2].end(),
                                 std::back_inserter(u));
                  int hc = find_morphism(gm, static_cast<int>(a), static_cast<int>(c2), u);
                  if (hc < 0) return false;
                  if (valtab[m][a][c2][hc] !=
                      fib.after[valtab[m][b][c2][h2]][valtab[m][a][b][h1]])
                    return false;
                }
        return true;
      };

      auto emit = [&]() {
        std::vector<std::vector<int>> arrows(k + 1);
        for (int m = 0; m <= k; ++m) arrows[m] = freeval[m];
        out.base_of[k].push_back(bi);
        out.vertex_of[k].push_back(xi);
        out.arrows_of[k].push_back(arrows);
        labels[k].push_back(lax_label(out.base.sset.label(k, bi), xi, arrows));
      };
      auto level_rec = [&](auto&& self, int m) -> void {
        if (m < 0) {
          emit();
          return;
        }
        const GCategory& gm = gcats[m];
        const FinCategory& fib = f.fiber[V[m]];
        int a0 = gm.object_index({m});
        for (int v = 0; v < fib.num_objects(); ++v) {
          xi[m] = v;
          fill_objects(m);
          if (!fill_forced(m)) continue;
          // identity of the minimum singleton
          int idm = find_morphism(gm, a0, a0, {m});
          valtab[m][a0][a0][idm] = fib.identity[v];
          freeval[m].assign(frees[m].size(), -1);
          auto arrow_rec = [&](auto&& arec, size_t pos) -> void {
            if (pos == frees[m].size()) {
              if (check_functor(m)) self(self, m - 1);
              return;
            }
            const FreeMor& fm = frees[m][pos];
            for (int ar = 0; ar < fib.num_arrows(); ++ar) {
              if (--budget < 0) throw std::runtime_error("lax_chi: budget exceeded");
              if (fib.arrows[ar].src != objval[m][a0] ||
                  fib.arrows[ar].tgt != objval[m][fm.b])
                continue;
              freeval[m][pos] = ar;
              valtab[m][a0][fm.b][fm.h] = ar;
              arec(arec, pos + 1);
            }
          };
          arrow_rec(arrow_rec, 0);
        }
      };
      level_rec(level_rec, k);
    }
  }

  // Structure maps: reindex the free data along the image subsets.
  std::vector<std::map<std::string, int>> index(M + 1);
  for (int k = 0; k <= M; ++k)
    for (size_t x = 0; x < labels[k].size(); ++x) index[k][labels[k][x]] = static_cast<int>(x);
  auto moved = [&](int k, int x, const MonotoneMap& alpha) {
    int kp = alpha.src_dim();
    int b2 = out.base.sset.act(alpha, out.base_of[k][x]);
    std::vector<int> xi2(kp + 1);
    for (int t = 0; t <= kp; ++t) xi2[t] = out.vertex_of[k][x][alpha(t)];
    std::vector<std::vector<int>> arrows2(kp + 1);
    for (int t = 0; t <= kp; ++t) {
      GCategory gnew = g_category(tail_set(t, kp));
      auto fl = free_morphisms(gnew);
      int a0 = gnew.object_index({t});
      int old_m = alpha(t);
      GCategory gold = g_category(tail_set(old_m, k));
      auto fl_old = free_morphisms(gold);
      arrows2[t].resize(fl.size());
      for (size_t p = 0; p < fl.size(); ++p) {
        std::vector<int> S = gnew.objects[fl[p].b];
        std::vector<int> H = gnew.morphisms[a0][fl[p].b][fl[p].h];
        std::vector<int> Si = subset_image(alpha, S);
        std::vector<int> Hi = subset_image(alpha, H);
        if (Si.size() == 1) {
          // fully collapsed: the image morphism is an identity
          int vfib = out.base.verts[k][out.base_of[k][x]][old_m];
          arrows2[t][p] = f.fiber[vfib].identity[out.vertex_of[k][x][old_m]];
          continue;
        }
        int q = free_position(gold, fl_old, gold.object_index(Si), Hi);
        if (q < 0) fail("lax_chi: image morphism not free");
        arrows2[t][p] = out.arrows_of[k][x][old_m][q];
      }
    }
    auto it = index[kp].find(lax_label(out.base.sset.label(kp, b2), xi2, arrows2));
    if (it == index[kp].end()) fail("lax_chi: structure image missing");
    return it->second;
  };
  std::vector<std::vector<std::vector<int>>> face(M + 1), degen(M + 1);
  for (int k = 1; k <= M; ++k) {
    face[k].assign(k + 1, std::vector<int>(out.base_of[k].size()));
    for (int i = 0; i <= k; ++i)
      for (size_t x = 0; x < out.base_of[k].size(); ++x)
        face[k][i][x] = moved(k, static_cast<int>(x), MonotoneMap::face(i, k));
  }
  for (int k = 0; k < M; ++k) {
    degen[k].assign(k + 1, std::vector<int>(out.base_of[k].size()));
    for (int i = 0; i <= k; ++i)
      for (size_t x = 0; x < out.base_of[k].size(); ++x)
        degen[k][i][x] = moved(k, static_cast<int>(x), MonotoneMap::degeneracy(i, k));
  }
  out.fs.total = TruncSset(M, std::move(labels), std::move(face), std::move(degen));
  if (M >= 1)
    for (size_t x = 0; x < out.base_of[1].size(); ++x) {
      int v0 = out.base.verts[1][out.base_of[1][x]][0];
      if (arrow_is_iso(f.fiber[v0], out.arrows_of[1][x][0][0]))
        out.fs.total.marked_edges().insert(static_cast<int>(x));
    }
  out.fs.base = out.base.sset;
  out.fs.projection.level = out.base_of;
  return out;
}

namespace {

struct HomIndexing {
  std::vector<std::vector<std::vector<int>>> arr;  // [x][y][pos] -> arrow index
  std::vector<int> pos;                            // arrow -> position in its hom
};

HomIndexing hom_indexing(const FinCategory& c) {
  int n = c.num_objects();
  HomIndexing h;
  h.arr.assign(n, std::vector<std::vector<int>>(n));
  h.pos.assign(c.num_arrows(), -1);
  for (int a = 0; a < c.num_arrows(); ++a) {
    h.pos[a] = static_cast<int>(h.arr[c.arrows[a].src][c.arrows[a].tgt].size());
    h.arr[c.arrows[a].src][c.arrows[a].tgt].push_back(a);
  }
  return h;
}

// Composite arrow along positions i..j of a nerve chain (i < j).
int chain_composite(const FinCategory& c, const std::vector<int>& chain, int i, int j) {
  int a = chain[i];
  for (int t = i + 1; t < j; ++t) a = c.after[chain[t]][a];
  return a;
}

int chain_vertex0(const FinCategory& c, const CatNerve& n, int lvl, int idx) {
  if (lvl == 0) return n.chains[0][idx][0];
  return c.arrows[n.chains[lvl][idx][0]].src;
}

}  // namespace

PosetEnriched2Cat two_cat_of_fin_category(const FinCategory& c) {
  check_fin_category(c);
  HomIndexing hi = hom_indexing(c);
  int n = c.num_objects();
  PosetEnriched2Cat t;
  t.objects = c.objects;
  t.hom.assign(n, std::vector<HomPoset>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int m = static_cast<int>(hi.arr[x][y].size());
      t.hom[x][y].labels.resize(m);
      t.hom[x][y].leq.assign(m, std::vector<bool>(m, false));
      for (int p = 0; p < m; ++p) {
        t.hom[x][y].labels[p] = c.arrows[hi.arr[x][y][p]].label;
        t.hom[x][y].leq[p][p] = true;
      }
    }
  t.identities.resize(n);
  for (int x = 0; x < n; ++x) t.identities[x] = hi.pos[c.identity[x]];
  t.comp.assign(n, std::vector<std::vector<std::vector<std::vector<int>>>>(
                       n, std::vector<std::vector<std::vector<int>>>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        auto& tab = t.comp[x][y][z];
        tab.assign(hi.arr[x][y].size(), std::vector<int>(hi.arr[y][z].size()));
        for (size_t fp = 0; fp < hi.arr[x][y].size(); ++fp)
          for (size_t gp = 0; gp < hi.arr[y][z].size(); ++gp)
            tab[fp][gp] = hi.pos[c.after[hi.arr[y][z][gp]][hi.arr[x][y][fp]]];
      }
  return t;
}

LaxCatValuedFunctor lax_of_cat_valued(const CatValuedFunctor& f) {
  check_cat_valued_functor(f);
  HomIndexing hi = hom_indexing(f.base);
  LaxCatValuedFunctor out;
  out.base = two_cat_of_fin_category(f.base);
  out.fiber = f.fiber;
  int n = f.base.num_objects();
  out.transition.assign(n, std::vector<std::vector<FinFunctor>>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int a : hi.arr[x][y]) out.transition[x][y].push_back(f.transition[a]);
  return out;
}

ChiLaxComparison compare_chi_lax(const CatValuedFunctor& f, const ChiData& x,
                                 const LaxChiData& l) {
  int M = x.fs.total.truncation();
  HomIndexing hi = hom_indexing(f.base);
  ChiLaxComparison out;
  out.base_map.level.resize(M + 1);
  // base chain -> vertex tuple + composite-edge tuple
  std::vector<std::vector<int>> base_image(M + 1);
  for (int k = 0; k <= M; ++k) {
    out.base_map.level[k].resize(x.base_nerve.sset.size(k));
    for (int b = 0; b < x.base_nerve.sset.size(k); ++b) {
      std::vector<int> verts = x.base_nerve.chain_objects(f.base, k, b);
      std::vector<int> edges;
      for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
          edges.push_back(hi.pos[chain_composite(f.base, x.base_nerve.chains[k][b], i, j)]);
      int idx = l.base.sset.index_of_label(k, scaled_simplex_label(verts, edges));
      if (idx < 0) fail("compare: base simplex missing");
      out.base_map.level[k][b] = idx;
    }
  }
  out.total_map.level.resize(M + 1);
  for (int k = 0; k <= M; ++k) {
    out.total_map.level[k].resize(x.base_of[k].size());
    for (size_t s = 0; s < x.base_of[k].size(); ++s) {
      int b = x.base_of[k][s];
      std::vector<int> objs = x.base_nerve.chain_objects(f.base, k, b);
      std::vector<int> xi(k + 1);
      std::vector<std::vector<int>> arrows(k + 1);
      for (int m = 0; m <= k; ++m) {
        const CatNerve& nerve = x.fiber_nerves[objs[m]];
        int ym = x.fiber_of[k][s][m];
        xi[m] = chain_vertex0(f.fiber[objs[m]], nerve, k - m, ym);
        GCategory gm = g_category(tail_set(m, k));
        auto fl = free_morphisms(gm);
        arrows[m].resize(fl.size());
        for (size_t p = 0; p < fl.size(); ++p) {
          int target_max = gm.objects[fl[p].b].back();
          arrows[m][p] =
              chain_composite(f.fiber[objs[m]], nerve.chains[k - m][ym], 0, target_max - m);
        }
      }
      int idx = l.index_of(k, out.base_map.level[k][b], xi, arrows);
      if (idx < 0) fail("compare: total simplex missing");
      out.total_map.level[k][s] = idx;
    }
  }
  return out;
}

SsetMap lax_chi_map(const CatValuedFunctor& f, const CatValuedFunctor& g,
                    const CatValuedNatTrans& t, const LaxChiData& lf, const LaxChiData& lg) {
  check_cat_valued_nat_trans(f, g, t);
  int M = lf.fs.total.truncation();
  SsetMap m;
  m.level.resize(M + 1);
  for (int k = 0; k <= M; ++k) {
    m.level[k].resize(lf.base_of[k].size());
    for (size_t x = 0; x < lf.base_of[k].size(); ++x) {
      int b = lf.base_of[k][x];
      const auto& V = lf.base.verts[k][b];
      std::vector<int> xi(k + 1);
      std::vector<std::vector<int>> arrows(k + 1);
      for (int mm = 0; mm <= k; ++mm) {
        xi[mm] = t.component[V[mm]].obj[lf.vertex_of[k][x][mm]];
        for (int val : lf.arrows_of[k][x][mm])
          arrows[mm].push_back(t.component[V[mm]].arr[val]);
      }
      int idx = lg.index_of(k, b, xi, arrows);
      if (idx < 0) fail("lax_chi_map: image missing");
      m.level[k][x] = idx;
    }
  }
  return m;
}

}  // namespace dk
