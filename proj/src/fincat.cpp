#include "dk/fincat.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace dk {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::logic_error(msg); }

}  // namespace

void check_fin_category(const FinCategory& c) {
  const int no = c.num_objects(), na = c.num_arrows();
  if (static_cast<int>(c.identity.size()) != no) fail("fincat: identity size");
  if (static_cast<int>(c.after.size()) != na) fail("fincat: table rows");
  std::set<std::string> seen;
  for (const auto& l : c.objects)
    if (!seen.insert(l).second) fail("fincat: duplicate object label");
  seen.clear();
  for (const auto& a : c.arrows) {
    if (a.src < 0 || a.src >= no || a.tgt < 0 || a.tgt >= no) fail("fincat: arrow endpoints");
    if (!seen.insert(a.label).second) fail("fincat: duplicate arrow label");
  }
  for (int x = 0; x < no; ++x) {
    int e = c.identity[x];
    if (e < 0 || e >= na) fail("fincat: identity index");
    if (c.arrows[e].src != x || c.arrows[e].tgt != x) fail("fincat: identity endpoints");
  }
  for (int g = 0; g < na; ++g) {
    if (static_cast<int>(c.after[g].size()) != na) fail("fincat: table cols");
    for (int f = 0; f < na; ++f) {
      int gf = c.after[g][f];
      if (c.arrows[f].tgt != c.arrows[g].src) {
        if (gf != -1) fail("fincat: composite of non-composable pair");
        continue;
      }
      if (gf < 0 || gf >= na) fail("fincat: composite out of range");
      if (c.arrows[gf].src != c.arrows[f].src || c.arrows[gf].tgt != c.arrows[g].tgt)
        fail("fincat: composite endpoints");
    }
  }
  for (int f = 0; f < na; ++f) {
    if (c.after[c.identity[c.arrows[f].tgt]][f] != f) fail("fincat: left unit");
    if (c.after[f][c.identity[c.arrows[f].src]] != f) fail("fincat: right unit");
  }
  for (int f = 0; f < na; ++f)
    for (int g = 0; g < na; ++g) {
      if (c.arrows[f].tgt != c.arrows[g].src) continue;
      for (int h = 0; h < na; ++h) {
        if (c.arrows[g].tgt != c.arrows[h].src) continue;
        if (c.after[h][c.after[g][f]] != c.after[c.after[h][g]][f])
          fail("fincat: associativity");
      }
    }
}

bool arrow_is_iso(const FinCategory& c, int a) {
  const auto& f = c.arrows[a];
  for (int b = 0; b < c.num_arrows(); ++b) {
    if (c.arrows[b].src != f.tgt || c.arrows[b].tgt != f.src) continue;
    if (c.after[b][a] == c.identity[f.src] && c.after[a][b] == c.identity[f.tgt]) return true;
  }
  return false;
}

FinCategory discrete_category(const std::vector<std::string>& objs) {
  FinCategory c;
  c.objects = objs;
  for (size_t x = 0; x < objs.size(); ++x) {
    c.identity.push_back(static_cast<int>(x));
    c.arrows.push_back({static_cast<int>(x), static_cast<int>(x), "id_" + objs[x]});
  }
  c.after.assign(c.arrows.size(), std::vector<int>(c.arrows.size(), -1));
  for (size_t x = 0; x < objs.size(); ++x) c.after[x][x] = static_cast<int>(x);
  return c;
}

FinCategory terminal_category() { return discrete_category({"*"}); }

FinCategory arrow_category() {
  FinPoset p;
  p.labels = {"0", "1"};
  p.leq = {{true, true}, {false, true}};
  return poset_category(p);
}

FinCategory poset_category(const FinPoset& p) {
  p.validate();
  FinCategory c;
  c.objects = p.labels;
  c.identity.assign(p.size(), -1);
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.leq[x][y]) {
        if (x == y) c.identity[x] = static_cast<int>(c.arrows.size());
        c.arrows.push_back({x, y, p.labels[x] + "<" + p.labels[y]});
      }
  const int na = c.num_arrows();
  c.after.assign(na, std::vector<int>(na, -1));
  auto find = [&](int x, int y) {
    for (int a = 0; a < na; ++a)
      if (c.arrows[a].src == x && c.arrows[a].tgt == y) return a;
    fail("poset_category: missing arrow");
  };
  for (int g = 0; g < na; ++g)
    for (int f = 0; f < na; ++f)
      if (c.arrows[f].tgt == c.arrows[g].src)
        c.after[g][f] = find(c.arrows[f].src, c.arrows[g].tgt);
  return c;
}

bool is_fin_functor(const FinCategory& a, const FinCategory& b, const FinFunctor& f) {
  if (static_cast<int>(f.obj.size()) != a.num_objects()) return false;
  if (static_cast<int>(f.arr.size()) != a.num_arrows()) return false;
  for (int x : f.obj)
    if (x < 0 || x >= b.num_objects()) return false;
  for (int u = 0; u < a.num_arrows(); ++u) {
    int v = f.arr[u];
    if (v < 0 || v >= b.num_arrows()) return false;
    if (b.arrows[v].src != f.obj[a.arrows[u].src]) return false;
    if (b.arrows[v].tgt != f.obj[a.arrows[u].tgt]) return false;
  }
  for (int x = 0; x < a.num_objects(); ++x)
    if (f.arr[a.identity[x]] != b.identity[f.obj[x]]) return false;
  for (int u = 0; u < a.num_arrows(); ++u)
    for (int v = 0; v < a.num_arrows(); ++v)
      if (a.arrows[u].tgt == a.arrows[v].src)
        if (f.arr[a.after[v][u]] != b.after[f.arr[v]][f.arr[u]]) return false;
  return true;
}

FinFunctor identity_fin_functor(const FinCategory& a) {
  FinFunctor f;
  for (int x = 0; x < a.num_objects(); ++x) f.obj.push_back(x);
  for (int u = 0; u < a.num_arrows(); ++u) f.arr.push_back(u);
  return f;
}

FinFunctor compose_fin_functors(const FinFunctor& g, const FinFunctor& f) {
  FinFunctor h;
  for (int x : f.obj) h.obj.push_back(g.obj[x]);
  for (int u : f.arr) h.arr.push_back(g.arr[u]);
  return h;
}

bool fin_functors_equal(const FinFunctor& f, const FinFunctor& g) {
  return f.obj == g.obj && f.arr == g.arr;
}

FinFunctor constant_fin_functor(const FinCategory& a, const FinCategory& b, int obj) {
  FinFunctor f;
  f.obj.assign(a.num_objects(), obj);
  f.arr.assign(a.num_arrows(), b.identity[obj]);
  return f;
}

namespace {

std::string chain_label(const FinCategory& c, const std::vector<int>& chain) {
  std::string l = c.objects[c.arrows[chain[0]].src];
  for (int a : chain) l += "." + c.arrows[a].label;
  return l;
}

}  // namespace

int CatNerve::chain_index(int k, const std::vector<int>& chain) const {
  for (int x = 0; x < sset.size(k); ++x)
    if (chains[k][x] == chain) return x;
  return -1;
}

std::vector<int> CatNerve::chain_objects(const FinCategory& c, int k, int x) const {
  std::vector<int> out;
  if (k == 0) {
    out.push_back(chains[0][x][0]);
    return out;
  }
  out.push_back(c.arrows[chains[k][x][0]].src);
  for (int a : chains[k][x]) out.push_back(c.arrows[a].tgt);
  return out;
}

CatNerve nerve_of_category(const FinCategory& c, int M) {
  CatNerve out;
  out.chains.assign(M + 1, {});
  std::vector<std::vector<std::string>> labels(M + 1);
  std::vector<std::map<std::vector<int>, int>> index(M + 1);
  for (int x = 0; x < c.num_objects(); ++x) {
    index[0][{x}] = x;
    out.chains[0].push_back({x});
    labels[0].push_back(c.objects[x]);
  }
  for (int k = 1; k <= M; ++k) {
    std::vector<int> chain(k);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == k) {
        index[k][chain] = static_cast<int>(out.chains[k].size());
        out.chains[k].push_back(chain);
        labels[k].push_back(chain_label(c, chain));
        return;
      }
      for (int a = 0; a < c.num_arrows(); ++a) {
        if (pos > 0 && c.arrows[chain[pos - 1]].tgt != c.arrows[a].src) continue;
        chain[pos] = a;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
  }
  std::vector<std::vector<std::vector<int>>> face(M + 1), degen(M + 1);
  for (int k = 1; k <= M; ++k) {
    face[k].assign(k + 1, std::vector<int>(out.chains[k].size()));
    for (int i = 0; i <= k; ++i)
      for (size_t x = 0; x < out.chains[k].size(); ++x) {
        const auto& ch = out.chains[k][x];
        std::vector<int> f;
        if (k == 1) {
          f = {i == 0 ? c.arrows[ch[0]].tgt : c.arrows[ch[0]].src};
        } else if (i == 0) {
          f.assign(ch.begin() + 1, ch.end());
        } else if (i == k) {
          f.assign(ch.begin(), ch.end() - 1);
        } else {
          f.assign(ch.begin(), ch.begin() + (i - 1));
          f.push_back(c.after[ch[i]][ch[i - 1]]);
          f.insert(f.end(), ch.begin() + (i + 1), ch.end());
        }
        face[k][i][x] = index[k - 1].at(f);
      }
  }
  for (int k = 0; k < M; ++k) {
    degen[k].assign(k + 1, std::vector<int>(out.chains[k].size()));
    for (int i = 0; i <= k; ++i)
      for (size_t x = 0; x < out.chains[k].size(); ++x) {
        const auto& ch = out.chains[k][x];
        std::vector<int> d;
        if (k == 0) {
          d = {c.identity[ch[0]]};
        } else {
          d.assign(ch.begin(), ch.begin() + i);
          int at = i == 0 ? c.arrows[ch[0]].src : c.arrows[ch[i - 1]].tgt;
          d.push_back(c.identity[at]);
          d.insert(d.end(), ch.begin() + i, ch.end());
        }
        degen[k][i][x] = index[k + 1].at(d);
      }
  }
  out.sset = TruncSset(M, std::move(labels), std::move(face), std::move(degen));
  return out;
}

int nerve_apply_functor(const FinCategory& a, const FinCategory& b, const FinFunctor& f,
                        const CatNerve& na, const CatNerve& nb, int k, int x) {
  (void)a;
  (void)b;
  std::vector<int> image;
  if (k == 0)
    image = {f.obj[na.chains[0][x][0]]};
  else
    for (int u : na.chains[k][x]) image.push_back(f.arr[u]);
  int y = nb.chain_index(k, image);
  if (y < 0) fail("nerve_apply_functor: image chain missing");
  return y;
}

SsetMap nerve_functor_map(const FinCategory& a, const FinCategory& b, const FinFunctor& f,
                          const CatNerve& na, const CatNerve& nb) {
  SsetMap m;
  int M = na.sset.truncation();
  m.level.resize(M + 1);
  for (int k = 0; k <= M; ++k) {
    m.level[k].resize(na.sset.size(k));
    for (int x = 0; x < na.sset.size(k); ++x)
      m.level[k][x] = nerve_apply_functor(a, b, f, na, nb, k, x);
  }
  return m;
}

SliceCategory slice_over(const FinCategory& c, int tgt) {
  SliceCategory s;
  // Objects: arrows p : x -> tgt, in arrow order, labeled by p.
  std::vector<int> back(c.num_arrows(), -1);
  for (int p = 0; p < c.num_arrows(); ++p)
    if (c.arrows[p].tgt == tgt) {
      back[p] = static_cast<int>(s.object_arrow.size());
      s.cat.objects.push_back(c.arrows[p].label);
      s.object_arrow.push_back(p);
      s.forgetful.obj.push_back(c.arrows[p].src);
    }
  // Morphisms p -> q: arrows u with q.u = p.
  const int no = static_cast<int>(s.object_arrow.size());
  s.cat.identity.assign(no, -1);
  for (int i = 0; i < no; ++i)
    for (int j = 0; j < no; ++j) {
      int p = s.object_arrow[i], q = s.object_arrow[j];
      for (int u = 0; u < c.num_arrows(); ++u) {
        if (c.arrows[u].src != c.arrows[p].src || c.arrows[u].tgt != c.arrows[q].src) continue;
        if (c.after[q][u] != p) continue;
        if (i == j && u == c.identity[c.arrows[p].src])
          s.cat.identity[i] = static_cast<int>(s.cat.arrows.size());
        s.cat.arrows.push_back({i, j, c.arrows[u].label + ">" + c.arrows[q].label});
        s.morphism_arrow.push_back(u);
        s.forgetful.arr.push_back(u);
      }
    }
  const int na = static_cast<int>(s.cat.arrows.size());
  s.cat.after.assign(na, std::vector<int>(na, -1));
  for (int g = 0; g < na; ++g)
    for (int f = 0; f < na; ++f) {
      if (s.cat.arrows[f].tgt != s.cat.arrows[g].src) continue;
      int u = c.after[s.morphism_arrow[g]][s.morphism_arrow[f]];
      int i = s.cat.arrows[f].src, k2 = s.cat.arrows[g].tgt;
      for (int h = 0; h < na; ++h)
        if (s.cat.arrows[h].src == i && s.cat.arrows[h].tgt == k2 && s.morphism_arrow[h] == u)
          s.cat.after[g][f] = h;
      if (s.cat.after[g][f] < 0) fail("slice_over: composition not closed");
    }
  return s;
}

TruncSset truncate_sset(const TruncSset& x, int M) {
  if (M > x.truncation()) fail("truncate_sset: deeper than source");
  std::vector<std::vector<std::string>> labels(M + 1);
  std::vector<std::vector<std::vector<int>>> face(M + 1), degen(M + 1);
  for (int k = 0; k <= M; ++k) {
    for (int i = 0; i < x.size(k); ++i) labels[k].push_back(x.label(k, i));
    if (k >= 1) {
      face[k].assign(k + 1, std::vector<int>(x.size(k)));
      for (int i = 0; i <= k; ++i)
        for (int a = 0; a < x.size(k); ++a) face[k][i][a] = x.face_of(k, i, a);
    }
    if (k < M) {
      degen[k].assign(k + 1, std::vector<int>(x.size(k)));
      for (int i = 0; i <= k; ++i)
        for (int a = 0; a < x.size(k); ++a) degen[k][i][a] = x.degen_of(k, i, a);
    }
  }
  TruncSset out(M, std::move(labels), std::move(face), std::move(degen));
  out.marked_edges() = x.marked_edges();
  if (M >= 2) out.thin_triangles() = x.thin_triangles();
  return out;
}

}  // namespace dk
