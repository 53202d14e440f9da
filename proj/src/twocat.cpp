#include "dk/twocat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dk {

namespace {

void fail(const std::string& what) { throw std::logic_error(what); }

void check_poset_axioms(const HomPoset& p, const std::string& where) {
  int n = p.size();
  if (static_cast<int>(p.leq.size()) != n) fail(where + ": ragged leq");
  for (const auto& row : p.leq)
    if (static_cast<int>(row.size()) != n) fail(where + ": ragged leq row");
  for (int a = 0; a < n; ++a)
    if (!p.leq[a][a]) fail(where + ": not reflexive");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && p.leq[a][b] && p.leq[b][a]) fail(where + ": not antisymmetric");
      if (!p.leq[a][b]) continue;
      for (int c = 0; c < n; ++c)
        if (p.leq[b][c] && !p.leq[a][c]) fail(where + ": not transitive");
    }
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

bool sorted_contains(const std::vector<int>& big, const std::vector<int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void require_chain(const std::vector<int>& I, const std::string& who) {
  if (I.empty()) throw std::invalid_argument(who + ": empty element set");
  for (size_t i = 1; i < I.size(); ++i)
    if (I[i - 1] >= I[i]) throw std::invalid_argument(who + ": elements not strictly increasing");
}

// All monotone maps [m] -> [n] shared by the slice poset and the lax slice
// 2-category, ordered by source dimension then lexicographically.
std::vector<MonotoneMap> slice_objects(int n, int M_obj) {
  std::vector<MonotoneMap> out;
  for (int m = 0; m <= M_obj; ++m)
    for (const auto& f : all_monotone_maps(m, n)) out.push_back(f);
  return out;
}

bool pointwise_leq(const MonotoneMap& a, const MonotoneMap& b) {
  for (int i = 0; i <= a.src_dim(); ++i)
    if (a(i) > b(i)) return false;
  return true;
}

}  // namespace

void check_two_category(const PosetEnriched2Cat& c) {
  int n = c.num_objects();
  if (static_cast<int>(c.hom.size()) != n || static_cast<int>(c.identities.size()) != n ||
      static_cast<int>(c.comp.size()) != n)
    fail("two-category: ragged object data");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(c.hom[x].size()) != n || static_cast<int>(c.comp[x].size()) != n)
      fail("two-category: ragged hom data");
    for (int y = 0; y < n; ++y) {
      check_poset_axioms(c.hom[x][y], "hom(" + c.objects[x] + "," + c.objects[y] + ")");
      if (static_cast<int>(c.comp[x][y].size()) != n) fail("two-category: ragged comp data");
      for (int z = 0; z < n; ++z) {
        const auto& table = c.comp[x][y][z];
        if (static_cast<int>(table.size()) != c.hom[x][y].size())
          fail("two-category: comp table rows");
        for (const auto& row : table) {
          if (static_cast<int>(row.size()) != c.hom[y][z].size())
            fail("two-category: comp table cols");
          for (int v : row)
            if (v < 0 || v >= c.hom[x][z].size()) fail("two-category: comp out of range");
        }
      }
    }
    if (c.identities[x] < 0 || c.identities[x] >= c.hom[x][x].size())
      fail("two-category: identity out of range");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int f = 0; f < c.hom[x][y].size(); ++f) {
        if (c.compose1(x, x, y, c.identities[x], f) != f) fail("two-category: left unit");
        if (c.compose1(x, y, y, f, c.identities[y]) != f) fail("two-category: right unit");
      }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w)
          for (int f = 0; f < c.hom[x][y].size(); ++f)
            for (int g = 0; g < c.hom[y][z].size(); ++g)
              for (int h = 0; h < c.hom[z][w].size(); ++h)
                if (c.compose1(x, z, w, c.compose1(x, y, z, f, g), h) !=
                    c.compose1(x, y, w, f, c.compose1(y, z, w, g, h)))
                  fail("two-category: associativity");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int f = 0; f < c.hom[x][y].size(); ++f)
          for (int fp = 0; fp < c.hom[x][y].size(); ++fp) {
            if (!c.leq1(x, y, f, fp)) continue;
            for (int g = 0; g < c.hom[y][z].size(); ++g)
              for (int gp = 0; gp < c.hom[y][z].size(); ++gp)
                if (c.leq1(y, z, g, gp) &&
                    !c.leq1(x, z, c.compose1(x, y, z, f, g), c.compose1(x, y, z, fp, gp)))
                  fail("two-category: composition not monotone");
          }
}

bool is_two_functor(const PosetEnriched2Cat& src, const PosetEnriched2Cat& dst,
                    const TwoFunctor& f) {
  int n = src.num_objects();
  if (static_cast<int>(f.obj.size()) != n || static_cast<int>(f.map1.size()) != n) return false;
  for (int x = 0; x < n; ++x) {
    if (f.obj[x] < 0 || f.obj[x] >= dst.num_objects()) return false;
    if (static_cast<int>(f.map1[x].size()) != n) return false;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (static_cast<int>(f.map1[x][y].size()) != src.hom[x][y].size()) return false;
      for (int a = 0; a < src.hom[x][y].size(); ++a) {
        int img = f.map1[x][y][a];
        if (img < 0 || img >= dst.hom[f.obj[x]][f.obj[y]].size()) return false;
        for (int b = 0; b < src.hom[x][y].size(); ++b)
          if (src.leq1(x, y, a, b) &&
              !dst.leq1(f.obj[x], f.obj[y], img, f.map1[x][y][b]))
            return false;
      }
    }
  for (int x = 0; x < n; ++x)
    if (f.map1[x][x][src.identities[x]] != dst.identities[f.obj[x]]) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int a = 0; a < src.hom[x][y].size(); ++a)
          for (int b = 0; b < src.hom[y][z].size(); ++b)
            if (f.map1[x][z][src.compose1(x, y, z, a, b)] !=
                dst.compose1(f.obj[x], f.obj[y], f.obj[z], f.map1[x][y][a], f.map1[y][z][b]))
              return false;
  return true;
}

TwoFunctor identity_two_functor(const PosetEnriched2Cat& c) {
  TwoFunctor f;
  int n = c.num_objects();
  f.obj.resize(n);
  f.map1.assign(n, std::vector<std::vector<int>>(n));
  for (int x = 0; x < n; ++x) {
    f.obj[x] = x;
    for (int y = 0; y < n; ++y) {
      f.map1[x][y].resize(c.hom[x][y].size());
      for (int a = 0; a < c.hom[x][y].size(); ++a) f.map1[x][y][a] = a;
    }
  }
  return f;
}

TwoFunctor compose(const PosetEnriched2Cat& a, const PosetEnriched2Cat& /*b*/,
                   const PosetEnriched2Cat& /*c*/, const TwoFunctor& g, const TwoFunctor& f) {
  TwoFunctor h;
  int n = a.num_objects();
  h.obj.resize(n);
  h.map1.assign(n, std::vector<std::vector<int>>(n));
  for (int x = 0; x < n; ++x) h.obj[x] = g.obj[f.obj[x]];
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      h.map1[x][y].resize(a.hom[x][y].size());
      for (int m = 0; m < a.hom[x][y].size(); ++m)
        h.map1[x][y][m] = g.map1[f.obj[x]][f.obj[y]][f.map1[x][y][m]];
    }
  return h;
}

std::string subset_label(const std::vector<int>& s) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << '}';
  return os.str();
}

int SigmaCat::hom_index(int i, int j, const std::vector<int>& s) const {
  const auto& list = subsets[i][j];
  auto it = std::lower_bound(list.begin(), list.end(), s);
  if (it == list.end() || *it != s) return -1;
  return static_cast<int>(it - list.begin());
}

SigmaCat sigma(const std::vector<int>& I) {
  require_chain(I, "sigma");
  int n = static_cast<int>(I.size());
  SigmaCat sc;
  sc.elements = I;
  auto& c = sc.cat;
  c.objects.resize(n);
  for (int i = 0; i < n; ++i) c.objects[i] = std::to_string(I[i]);
  sc.subsets.assign(n, std::vector<std::vector<std::vector<int>>>(n));
  c.hom.assign(n, std::vector<HomPoset>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      auto& list = sc.subsets[i][j];
      int mid = j - i - 1;
      for (int mask = 0; mask < (1 << std::max(mid, 0)); ++mask) {
        std::vector<int> s{I[i]};
        for (int t = 0; t < mid; ++t)
          if (mask & (1 << t)) s.push_back(I[i + 1 + t]);
        if (j > i) s.push_back(I[j]);
        list.push_back(std::move(s));
      }
      std::sort(list.begin(), list.end());
      auto& hp = c.hom[i][j];
      int h = static_cast<int>(list.size());
      hp.labels.resize(h);
      hp.leq.assign(h, std::vector<bool>(h, false));
      for (int a = 0; a < h; ++a) {
        hp.labels[a] = subset_label(list[a]);
        for (int b = 0; b < h; ++b) hp.leq[a][b] = sorted_contains(list[b], list[a]);
      }
    }
  c.identities.assign(n, 0);
  c.comp.assign(n, std::vector<std::vector<std::vector<std::vector<int>>>>(
                       n, std::vector<std::vector<std::vector<int>>>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto& table = c.comp[i][j][k];
        table.assign(sc.subsets[i][j].size(), std::vector<int>(sc.subsets[j][k].size()));
        for (size_t a = 0; a < sc.subsets[i][j].size(); ++a)
          for (size_t b = 0; b < sc.subsets[j][k].size(); ++b) {
            int u = sc.hom_index(i, k, sorted_union(sc.subsets[i][j][a], sc.subsets[j][k][b]));
            if (u < 0) fail("sigma: union escaped hom");
            table[a][b] = u;
          }
      }
  return sc;
}

TwoFunctor sigma_map(const SigmaCat& src, const SigmaCat& dst, const MonotoneMap& alpha) {
  int n = static_cast<int>(src.elements.size());
  if (alpha.src_dim() != n - 1 || alpha.dst_dim() != static_cast<int>(dst.elements.size()) - 1)
    throw std::invalid_argument("sigma_map: dimension mismatch");
  TwoFunctor f;
  f.obj.resize(n);
  for (int i = 0; i < n; ++i) f.obj[i] = alpha(i);
  f.map1.assign(n, std::vector<std::vector<int>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      f.map1[i][j].resize(src.subsets[i][j].size());
      for (size_t a = 0; a < src.subsets[i][j].size(); ++a) {
        std::vector<int> img;
        for (int v : src.subsets[i][j][a]) {
          int p = static_cast<int>(std::lower_bound(src.elements.begin(), src.elements.end(), v) -
                                   src.elements.begin());
          img.push_back(dst.elements[alpha(p)]);
        }
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        int idx = dst.hom_index(alpha(i), alpha(j), img);
        if (idx < 0) fail("sigma_map: image escaped hom");
        f.map1[i][j][a] = idx;
      }
    }
  return f;
}

std::string scaled_simplex_label(const std::vector<int>& verts, const std::vector<int>& edges) {
  std::ostringstream os;
  for (size_t i = 0; i < verts.size(); ++i) {
    if (i) os << '.';
    os << verts[i];
  }
  os << '|';
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) os << '.';
    os << edges[i];
  }
  return os.str();
}

namespace {

// Flatten the strict upper triangle of an edge matrix in (i,j) lexicographic
// pair order.
std::vector<int> flatten_edges(const std::vector<std::vector<int>>& e, int k) {
  std::vector<int> out;
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) out.push_back(e[i][j]);
  return out;
}

int pair_pos(int k, int i, int j) {
  // Position of (i,j), i < j, in the lexicographic pair order on [k].
  int pos = 0;
  for (int a = 0; a < i; ++a) pos += k - a;
  return pos + (j - i - 1);
}

}  // namespace

ScaledNerve scaled_nerve_data(const PosetEnriched2Cat& c, int M, long long budget) {
  int N = c.num_objects();
  ScaledNerve out;
  std::vector<std::vector<std::string>> labels(M + 1);
  out.verts.resize(M + 1);
  out.edges.resize(M + 1);
  std::vector<std::map<std::string, int>> index(M + 1);
  long long total = 0;
  auto emit = [&](int k, const std::vector<int>& verts, const std::vector<int>& edges) {
    if (++total > budget) throw std::runtime_error("scaled_nerve: budget exceeded");
    std::string l = scaled_simplex_label(verts, edges);
    index[k].emplace(l, static_cast<int>(labels[k].size()));
    labels[k].push_back(std::move(l));
    out.verts[k].push_back(verts);
    out.edges[k].push_back(edges);
  };
  for (int k = 0; k <= M; ++k) {
    std::vector<int> verts(k + 1, 0);
    std::vector<std::vector<int>> e(k + 1, std::vector<int>(k + 1, -1));
    // Pairs are assigned in order (0,1); (0,2),(1,2); (0,3),... so that when
    // (i,j) is chosen every triangle (a,i,j) with a < i is fully assigned.
    std::vector<std::pair<int, int>> order;
    for (int j = 1; j <= k; ++j)
      for (int i = 0; i < j; ++i) order.emplace_back(i, j);
    auto assign = [&](auto&& self, size_t step) -> void {
      if (step == order.size()) {
        emit(k, verts, flatten_edges(e, k));
        return;
      }
      auto [i, j] = order[step];
      int x = verts[i], y = verts[j];
      for (int f = 0; f < c.hom[x][y].size(); ++f) {
        bool ok = true;
        for (int a = 0; a < i && ok; ++a)
          ok = c.leq1(verts[a], y, e[a][j],
                      c.compose1(verts[a], x, y, e[a][i], f));
        if (!ok) continue;
        e[i][j] = f;
        self(self, step + 1);
      }
      e[i][j] = -1;
    };
    auto vert_loop = [&](auto&& self, int pos) -> void {
      if (pos == k + 1) {
        for (int i = 0; i <= k; ++i)
          for (int j = i + 1; j <= k; ++j)
            if (c.hom[verts[i]][verts[j]].size() == 0) return;
        assign(assign, 0);
        return;
      }
      for (int x = 0; x < N; ++x) {
        verts[pos] = x;
        self(self, pos + 1);
      }
    };
    vert_loop(vert_loop, 0);
  }
  // Structure maps by label lookup.
  std::vector<std::vector<std::vector<int>>> face(M + 1), degen(M + 1);
  for (int k = 1; k <= M; ++k) {
    face[k].assign(k + 1, std::vector<int>(labels[k].size()));
    for (int i = 0; i <= k; ++i)
      for (size_t x = 0; x < labels[k].size(); ++x) {
        std::vector<int> v;
        for (int a = 0; a <= k; ++a)
          if (a != i) v.push_back(out.verts[k][x][a]);
        std::vector<int> e;
        for (int a = 0; a < k; ++a)
          for (int b = a + 1; b < k; ++b) {
            int pa = a < i ? a : a + 1;
            int pb = b < i ? b : b + 1;
            e.push_back(out.edges[k][x][pair_pos(k, pa, pb)]);
          }
        auto it = index[k - 1].find(scaled_simplex_label(v, e));
        if (it == index[k - 1].end()) fail("scaled_nerve: missing face");
        face[k][i][x] = it->second;
      }
  }
  for (int k = 0; k < M; ++k) {
    degen[k].assign(k + 1, std::vector<int>(labels[k].size()));
    for (int i = 0; i <= k; ++i)
      for (size_t x = 0; x < labels[k].size(); ++x) {
        MonotoneMap s = MonotoneMap::degeneracy(i, k);
        std::vector<int> v(k + 2);
        for (int a = 0; a <= k + 1; ++a) v[a] = out.verts[k][x][s(a)];
        std::vector<int> e;
        for (int a = 0; a <= k + 1; ++a)
          for (int b = a + 1; b <= k + 1; ++b) {
            int p = s(a), q = s(b);
            if (p == q)
              e.push_back(c.identities[out.verts[k][x][p]]);
            else
              e.push_back(out.edges[k][x][pair_pos(k, p, q)]);
          }
        auto it = index[k + 1].find(scaled_simplex_label(v, e));
        if (it == index[k + 1].end()) fail("scaled_nerve: missing degeneracy");
        degen[k][i][x] = it->second;
      }
  }
  out.sset = TruncSset(M, std::move(labels), std::move(face), std::move(degen));
  if (M >= 2) {
    for (int t = 0; t < out.sset.size(2); ++t) {
      const auto& v = out.verts[2][t];
      const auto& e = out.edges[2][t];
      if (e[1] == c.compose1(v[0], v[1], v[2], e[0], e[2]))
        out.sset.thin_triangles().insert(t);
    }
  }
  return out;
}

TruncSset scaled_nerve(const PosetEnriched2Cat& c, int M, long long budget) {
  return scaled_nerve_data(c, M, budget).sset;
}

namespace {

LaxSlice lax_slice(const PosetEnriched2Cat& c, int obj, bool over) {
  if (obj < 0 || obj >= c.num_objects()) throw std::invalid_argument("lax slice: bad object");
  LaxSlice sl;
  int N = c.num_objects();
  for (int x = 0; x < N; ++x) {
    const HomPoset& arrows = over ? c.hom[x][obj] : c.hom[obj][x];
    for (int p = 0; p < arrows.size(); ++p) {
      sl.arrow_object.push_back(x);
      sl.arrow_index.push_back(p);
      sl.cat.objects.push_back(c.objects[x] + "/" + arrows.labels[p]);
    }
  }
  int S = static_cast<int>(sl.cat.objects.size());
  // For each slice hom, the selected ambient arrow indices and the reverse map.
  std::vector<std::vector<std::vector<int>>> sel(S, std::vector<std::vector<int>>(S));
  std::vector<std::vector<std::vector<int>>> pos(S, std::vector<std::vector<int>>(S));
  sl.cat.hom.assign(S, std::vector<HomPoset>(S));
  for (int a = 0; a < S; ++a)
    for (int b = 0; b < S; ++b) {
      int x = sl.arrow_object[a], p = sl.arrow_index[a];
      int y = sl.arrow_object[b], q = sl.arrow_index[b];
      pos[a][b].assign(c.hom[x][y].size(), -1);
      for (int f = 0; f < c.hom[x][y].size(); ++f) {
        bool keep = over ? c.leq1(x, obj, c.compose1(x, y, obj, f, q), p)
                         : c.leq1(obj, y, c.compose1(obj, x, y, p, f), q);
        if (!keep) continue;
        pos[a][b][f] = static_cast<int>(sel[a][b].size());
        sel[a][b].push_back(f);
      }
      auto& hp = sl.cat.hom[a][b];
      int h = static_cast<int>(sel[a][b].size());
      hp.labels.resize(h);
      hp.leq.assign(h, std::vector<bool>(h, false));
      for (int u = 0; u < h; ++u) {
        hp.labels[u] = c.hom[x][y].labels[sel[a][b][u]];
        for (int v = 0; v < h; ++v) hp.leq[u][v] = c.leq1(x, y, sel[a][b][u], sel[a][b][v]);
      }
    }
  sl.cat.identities.resize(S);
  for (int a = 0; a < S; ++a) {
    int x = sl.arrow_object[a];
    int id = pos[a][a][c.identities[x]];
    if (id < 0) fail("lax slice: identity not in slice hom");
    sl.cat.identities[a] = id;
  }
  sl.cat.comp.assign(S, std::vector<std::vector<std::vector<std::vector<int>>>>(
                            S, std::vector<std::vector<std::vector<int>>>(S)));
  for (int a = 0; a < S; ++a)
    for (int b = 0; b < S; ++b)
      for (int d = 0; d < S; ++d) {
        auto& table = sl.cat.comp[a][b][d];
        table.assign(sel[a][b].size(), std::vector<int>(sel[b][d].size()));
        for (size_t u = 0; u < sel[a][b].size(); ++u)
          for (size_t v = 0; v < sel[b][d].size(); ++v) {
            int amb = c.compose1(sl.arrow_object[a], sl.arrow_object[b], sl.arrow_object[d],
                                 sel[a][b][u], sel[b][d][v]);
            int r = pos[a][d][amb];
            if (r < 0) fail("lax slice: composition escaped slice hom");
            table[u][v] = r;
          }
      }
  sl.forgetful.obj = sl.arrow_object;
  sl.forgetful.map1.assign(S, std::vector<std::vector<int>>(S));
  for (int a = 0; a < S; ++a)
    for (int b = 0; b < S; ++b) sl.forgetful.map1[a][b] = sel[a][b];
  return sl;
}

}  // namespace

LaxSlice lax_over(const PosetEnriched2Cat& c, int obj) { return lax_slice(c, obj, true); }
LaxSlice lax_under(const PosetEnriched2Cat& c, int obj) { return lax_slice(c, obj, false); }

std::string value_string(const MonotoneMap& phi) {
  bool wide = false;
  for (int i = 0; i <= phi.src_dim(); ++i) wide = wide || phi(i) > 9;
  std::ostringstream os;
  for (int i = 0; i <= phi.src_dim(); ++i) {
    if (i && wide) os << ';';
    os << phi(i);
  }
  return os.str();
}

int SlicePoset::index_of(const MonotoneMap& phi) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == phi) return static_cast<int>(i);
  return -1;
}

SlicePoset n_over_slice(int n, int M_obj) {
  if (n < 0 || M_obj < 0) throw std::invalid_argument("n_over_slice: negative parameter");
  SlicePoset sp;
  sp.objects = slice_objects(n, M_obj);
  int N = static_cast<int>(sp.objects.size());
  sp.poset.labels.resize(N);
  for (int i = 0; i < N; ++i) sp.poset.labels[i] = value_string(sp.objects[i]);
  sp.poset.leq.assign(N, std::vector<bool>(N, false));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      const auto& f = sp.objects[a];
      const auto& g = sp.objects[b];
      if (f.src_dim() > g.src_dim()) continue;
      int shift = g.src_dim() - f.src_dim();
      bool ok = true;
      for (int i = 0; i <= f.src_dim() && ok; ++i) ok = f(i) <= g(i + shift);
      sp.poset.leq[a][b] = ok;
    }
  sp.poset.validate();
  return sp;
}

int DeltaPrimeSlice::object_index(const MonotoneMap& phi) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == phi) return static_cast<int>(i);
  return -1;
}

int DeltaPrimeSlice::hom_index(int x, int y, const MonotoneMap& f) const {
  const auto& list = homs[x][y];
  for (size_t i = 0; i < list.size(); ++i)
    if (list[i] == f) return static_cast<int>(i);
  return -1;
}

DeltaPrimeSlice delta_prime_slice(int n, int M_obj) {
  if (n < 0 || M_obj < 0) throw std::invalid_argument("delta_prime_slice: negative parameter");
  DeltaPrimeSlice sl;
  sl.objects = slice_objects(n, M_obj);
  int N = static_cast<int>(sl.objects.size());
  auto& c = sl.cat;
  c.objects.resize(N);
  for (int i = 0; i < N; ++i) c.objects[i] = value_string(sl.objects[i]);
  sl.homs.assign(N, std::vector<std::vector<MonotoneMap>>(N));
  c.hom.assign(N, std::vector<HomPoset>(N));
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      const auto& phi = sl.objects[x];
      const auto& psi = sl.objects[y];
      for (const auto& f : all_monotone_maps(phi.src_dim(), psi.src_dim())) {
        bool ok = true;
        for (int i = 0; i <= phi.src_dim() && ok; ++i) ok = phi(i) <= psi(f(i));
        if (ok) sl.homs[x][y].push_back(f);
      }
      auto& hp = c.hom[x][y];
      int h = static_cast<int>(sl.homs[x][y].size());
      hp.labels.resize(h);
      hp.leq.assign(h, std::vector<bool>(h, false));
      for (int a = 0; a < h; ++a) {
        hp.labels[a] = value_string(sl.homs[x][y][a]);
        // 2-cells run against the pointwise order here.
        for (int b = 0; b < h; ++b)
          hp.leq[a][b] = pointwise_leq(sl.homs[x][y][b], sl.homs[x][y][a]);
      }
    }
  c.identities.resize(N);
  for (int x = 0; x < N; ++x) {
    int id = sl.hom_index(x, x, MonotoneMap::identity(sl.objects[x].src_dim()));
    if (id < 0) fail("delta_prime_slice: missing identity");
    c.identities[x] = id;
  }
  c.comp.assign(N, std::vector<std::vector<std::vector<std::vector<int>>>>(
                       N, std::vector<std::vector<std::vector<int>>>(N)));
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y)
      for (int z = 0; z < N; ++z) {
        auto& table = c.comp[x][y][z];
        table.assign(sl.homs[x][y].size(), std::vector<int>(sl.homs[y][z].size()));
        for (size_t a = 0; a < sl.homs[x][y].size(); ++a)
          for (size_t b = 0; b < sl.homs[y][z].size(); ++b) {
            int r = sl.hom_index(x, z, compose(sl.homs[y][z][b], sl.homs[x][y][a]));
            if (r < 0) fail("delta_prime_slice: composition escaped hom");
            table[a][b] = r;
          }
      }
  return sl;
}

namespace {

Cube make_cube(int k, int dim, bool q_style, bool b_style) {
  if (k < 1) throw std::invalid_argument("cube: k must be >= 1");
  SlicePoset sp = n_over_slice(k, k);
  Cube c;
  c.dimension = dim;
  for (const auto& bits : all_bit_vectors(dim)) {
    MonotoneMap v = q_style
                        ? q_vertex(k, bits[0], std::vector<int>(bits.begin() + 1, bits.end()))
                        : (b_style ? b_vertex(k, bits) : f_vertex(k, bits));
    int idx = sp.index_of(v);
    if (idx < 0) fail("cube: vertex outside slice poset");
    c.vertices.push_back(idx);
  }
  return c;
}

}  // namespace

Cube cube_f(int k) { return make_cube(k, k, false, false); }
Cube cube_b(int k) { return make_cube(k, k, false, true); }
Cube cube_q(int k) { return make_cube(k, k + 1, true, false); }

bool cube_edges_valid(const Cube& c, const FinPoset& p) {
  int total = 1 << c.dimension;
  if (static_cast<int>(c.vertices.size()) != total) return false;
  for (int v = 0; v < total; ++v)
    for (int b = 0; b < c.dimension; ++b) {
      int mask = 1 << (c.dimension - 1 - b);
      if (v & mask) continue;
      if (!p.leq[c.vertices[v]][c.vertices[v | mask]]) return false;
    }
  return true;
}

int GCategory::object_index(const std::vector<int>& s) const {
  auto it = std::lower_bound(objects.begin(), objects.end(), s);
  if (it == objects.end() || *it != s) return -1;
  return static_cast<int>(it - objects.begin());
}

namespace {

std::vector<std::vector<int>> subsets_with_min_max(const std::vector<int>& I, int mn, int mx) {
  std::vector<std::vector<int>> out;
  int n = static_cast<int>(I.size());
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int t = 0; t < n; ++t)
      if (mask & (1 << t)) s.push_back(I[t]);
    if (s.front() == mn && s.back() == mx) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

GCategory g_category(const std::vector<int>& I) {
  require_chain(I, "g_category");
  GCategory g;
  g.elements = I;
  int n = static_cast<int>(I.size());
  for (int mask = 1; mask < (1 << n); ++mask) {
    if (!(mask & 1)) continue;  // objects must contain min I
    std::vector<int> s;
    for (int t = 0; t < n; ++t)
      if (mask & (1 << t)) s.push_back(I[t]);
    g.objects.push_back(std::move(s));
  }
  std::sort(g.objects.begin(), g.objects.end());
  int N = static_cast<int>(g.objects.size());
  g.morphisms.assign(N, std::vector<std::vector<std::vector<int>>>(N));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      const auto& S = g.objects[a];
      const auto& T = g.objects[b];
      for (auto& h : subsets_with_min_max(I, S.back(), T.back()))
        if (sorted_contains(sorted_union(S, h), T)) g.morphisms[a][b].push_back(std::move(h));
      std::sort(g.morphisms[a][b].begin(), g.morphisms[a][b].end());
    }
  return g;
}

void check_g_category(const GCategory& g) {
  int N = static_cast<int>(g.objects.size());
  auto find = [&](int a, int b, const std::vector<int>& h) {
    const auto& list = g.morphisms[a][b];
    return std::binary_search(list.begin(), list.end(), h);
  };
  for (int a = 0; a < N; ++a) {
    std::vector<int> id{g.objects[a].back()};
    if (!find(a, a, id)) fail("g_category: missing identity");
  }
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (const auto& h1 : g.morphisms[a][b]) {
        if (sorted_union(std::vector<int>{g.objects[a].back()}, h1) != h1)
          fail("g_category: left unit broken");
        if (sorted_union(h1, std::vector<int>{g.objects[b].back()}) != h1)
          fail("g_category: right unit broken");
        for (int c = 0; c < N; ++c)
          for (const auto& h2 : g.morphisms[b][c])
            if (!find(a, c, sorted_union(h1, h2))) fail("g_category: composition not closed");
      }
}

std::vector<int> g_pullback_object(const std::vector<int>& I, const std::vector<int>& T,
                                   const std::vector<int>& S) {
  return sorted_intersection(sorted_union(T, S), I);
}

std::optional<std::vector<int>> g_pullback_morphism(
    const std::vector<int>& I, const std::vector<int>& T, const std::vector<int>& Tp,
    const std::vector<int>& S, const std::vector<int>& Sp, const std::vector<int>& H) {
  std::vector<int> A = g_pullback_object(I, T, S);
  std::vector<int> B = g_pullback_object(I, Tp, Sp);
  if (A.empty() || B.empty()) return std::nullopt;
  std::vector<int> Hp = sorted_intersection(H, I);
  std::vector<int> ends{A.back(), B.back()};
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  Hp = sorted_union(Hp, ends);
  if (Hp.front() != A.back() || Hp.back() != B.back()) return std::nullopt;
  if (!sorted_contains(sorted_union(A, Hp), B)) return std::nullopt;
  return Hp;
}

bool g_pullback_functorial(const std::vector<int>& I, const std::vector<int>& J) {
  require_chain(I, "g_pullback");
  require_chain(J, "g_pullback");
  if (!sorted_contains(J, I)) throw std::invalid_argument("g_pullback: I not inside J");
  GCategory gj = g_category(J);
  GCategory gi = g_category(I);
  auto Ts = subsets_with_min_max(J, J.front(), I.front());
  auto valid_morphism = [&](const std::vector<int>& A, const std::vector<int>& B,
                            const std::vector<int>& h) {
    int a = gi.object_index(A), b = gi.object_index(B);
    if (a < 0 || b < 0) return false;
    const auto& list = gi.morphisms[a][b];
    return std::binary_search(list.begin(), list.end(), h);
  };
  int NJ = static_cast<int>(gj.objects.size());
  for (const auto& T : Ts)
    for (int s = 0; s < NJ; ++s)
      if (gi.object_index(g_pullback_object(I, T, gj.objects[s])) < 0) return false;
  // Identities: (T = T, identity of S) must land on the identity.
  for (const auto& T : Ts)
    for (int s = 0; s < NJ; ++s) {
      const auto& S = gj.objects[s];
      auto img = g_pullback_morphism(I, T, T, S, S, std::vector<int>{S.back()});
      std::vector<int> A = g_pullback_object(I, T, S);
      if (!img || *img != std::vector<int>{A.back()}) return false;
    }
  // All product morphisms: T-factor morphisms point along reverse inclusion.
  auto t_arrow = [&](const std::vector<int>& T, const std::vector<int>& Tp) {
    return sorted_contains(T, Tp);
  };
  for (const auto& T : Ts)
    for (const auto& Tp : Ts) {
      if (!t_arrow(T, Tp)) continue;
      for (int s = 0; s < NJ; ++s)
        for (int sp = 0; sp < NJ; ++sp)
          for (const auto& H : gj.morphisms[s][sp]) {
            auto img = g_pullback_morphism(I, T, Tp, gj.objects[s], gj.objects[sp], H);
            if (!img) return false;
            if (!valid_morphism(g_pullback_object(I, T, gj.objects[s]),
                                g_pullback_object(I, Tp, gj.objects[sp]), *img))
              return false;
          }
    }
  // Composition in both factors.
  for (const auto& T : Ts)
    for (const auto& Tp : Ts)
      for (const auto& Tpp : Ts) {
        if (!t_arrow(T, Tp) || !t_arrow(Tp, Tpp)) continue;
        for (int s = 0; s < NJ; ++s)
          for (int sp = 0; sp < NJ; ++sp)
            for (const auto& H1 : gj.morphisms[s][sp])
              for (int spp = 0; spp < NJ; ++spp)
                for (const auto& H2 : gj.morphisms[sp][spp]) {
                  auto i1 = g_pullback_morphism(I, T, Tp, gj.objects[s], gj.objects[sp], H1);
                  auto i2 = g_pullback_morphism(I, Tp, Tpp, gj.objects[sp], gj.objects[spp], H2);
                  auto ic = g_pullback_morphism(I, T, Tpp, gj.objects[s], gj.objects[spp],
                                                sorted_union(H1, H2));
                  if (!i1 || !i2 || !ic) return false;
                  if (sorted_union(*i1, *i2) != *ic) return false;
                }
      }
  return true;
}

MPoset m_poset(int n, int M_obj, int M, long long budget) {
  MPoset mp;
  SlicePoset sp = n_over_slice(n, M_obj);
  mp.slice_nerve = nerve_of_poset(sp.poset, M);
  DeltaPrimeSlice dps = delta_prime_slice(n, M_obj);
  ScaledNerve sn = scaled_nerve_data(dps.cat, M, budget);
  mp.nerve_part = sn.sset;
  if (M >= 1) {
    for (int e = 0; e < mp.nerve_part.size(1); ++e) {
      int x0 = sn.verts[1][e][0], x1 = sn.verts[1][e][1];
      const MonotoneMap& f = dps.homs[x0][x1][sn.edges[1][e][0]];
      if (dps.objects[x0] == compose(dps.objects[x1], f))
        mp.nerve_part.marked_edges().insert(e);
    }
  }
  TruncSset d1 = standard_simplex(1, M);
  mp.cylinder_part = product(d1, mp.slice_nerve);
  // Chain enumeration mirrors nerve_of_poset but goes through chain/label
  // lookups so the gluing maps stay correct independently of ordering.
  std::vector<std::map<std::string, int>> xindex(M + 1);
  for (int k = 0; k <= M; ++k)
    for (int x = 0; x < mp.nerve_part.size(k); ++x)
      xindex[k].emplace(mp.nerve_part.label(k, x), x);
  SsetMap into_nerve, into_cyl;
  into_nerve.level.resize(M + 1);
  into_cyl.level.resize(M + 1);
  int NP = sp.poset.size();
  for (int k = 0; k <= M; ++k) {
    into_nerve.level[k].assign(mp.slice_nerve.size(k), -1);
    into_cyl.level[k].assign(mp.slice_nerve.size(k), -1);
    std::vector<int> chain(k + 1);
    int zero = standard_simplex_index(1, MonotoneMap::constant(k, 1, 0));
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == k + 1) {
        int a = poset_chain_index(sp.poset, chain);
        std::vector<int> edges;
        for (int i = 0; i <= k; ++i)
          for (int j = i + 1; j <= k; ++j) {
            int mi = sp.objects[chain[i]].src_dim();
            int mj = sp.objects[chain[j]].src_dim();
            std::vector<int> vals(mi + 1);
            for (int t = 0; t <= mi; ++t) vals[t] = t + (mj - mi);
            int h = dps.hom_index(chain[i], chain[j], MonotoneMap(mi, mj, std::move(vals)));
            if (h < 0) fail("m_poset: slice inclusion misses hom");
            edges.push_back(h);
          }
        auto it = xindex[k].find(scaled_simplex_label(chain, edges));
        if (it == xindex[k].end()) fail("m_poset: slice chain misses scaled nerve");
        into_nerve.level[k][a] = it->second;
        into_cyl.level[k][a] = product_index(d1, mp.slice_nerve, k, zero, a);
        return;
      }
      for (int x = 0; x < NP; ++x) {
        if (pos > 0 && !sp.poset.leq[chain[pos - 1]][x]) continue;
        chain[pos] = x;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
    for (int v : into_nerve.level[k])
      if (v < 0) fail("m_poset: chain enumeration incomplete");
  }
  PushoutResult pr =
      pushout(mp.slice_nerve, mp.nerve_part, mp.cylinder_part, into_nerve, into_cyl);
  mp.sset = pr.sset;
  mp.r = pr.from_x;
  mp.s.level.resize(M + 1);
  for (int k = 0; k <= M; ++k) {
    int one = standard_simplex_index(1, MonotoneMap::constant(k, 1, 1));
    mp.s.level[k].resize(mp.slice_nerve.size(k));
    for (int a = 0; a < mp.slice_nerve.size(k); ++a)
      mp.s.level[k][a] = pr.from_y.level[k][product_index(d1, mp.slice_nerve, k, one, a)];
  }
  return mp;
}

NerveConditionReport nerve_condition_report(int n, int M_obj) {
  if (n < 0 || M_obj < 0)
    throw std::invalid_argument("nerve_condition_report: negative parameter");
  NerveConditionReport rep;
  rep.n = n;
  int kmax = std::min(n, M_obj);
  std::set<MonotoneMap> universe;
  for (int v = 0; v <= n; ++v) universe.insert(MonotoneMap::vertex(v, n));
  for (int k = 1; k <= kmax; ++k)
    for (const auto& s : all_injections(k, n))
      for (const auto& bits : all_bit_vectors(k + 1))
        universe.insert(
            compose(s, q_vertex(k, bits[0], std::vector<int>(bits.begin() + 1, bits.end()))));
  for (const auto& phi : universe)
    if (phi.src_dim() >= 1 && !phi.is_injective())
      rep.zero_obligations.push_back(value_string(phi));
  for (int k = 1; k <= kmax; ++k)
    for (const auto& s : all_injections(k, n)) {
      CubeObligation q{s, {}};
      for (const auto& bits : all_bit_vectors(k + 1))
        q.vertices.push_back(value_string(
            compose(s, q_vertex(k, bits[0], std::vector<int>(bits.begin() + 1, bits.end())))));
      rep.limit_cubes.push_back(std::move(q));
      CubeObligation f{s, {}};
      for (const auto& bits : all_bit_vectors(k))
        f.vertices.push_back(value_string(compose(s, f_vertex(k, bits))));
      rep.bicartesian_cubes.push_back(std::move(f));
    }
  for (const auto& phi : universe)
    for (const auto& psi : universe)
      for (const auto& f : all_monotone_maps(phi.src_dim(), psi.src_dim())) {
        if (f.is_identity() && phi == psi) continue;
        if (compose(psi, f) == phi)
          rep.cartesian_edges.push_back(
              {value_string(phi), value_string(psi), value_string(f)});
      }
  return rep;
}

}  // namespace dk
