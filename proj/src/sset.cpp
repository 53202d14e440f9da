#include "dk/sset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dk {

TruncSset::TruncSset(int truncation, std::vector<std::vector<std::string>> labels,
                     std::vector<std::vector<std::vector<int>>> face,
                     std::vector<std::vector<std::vector<int>>> degen)
    : truncation_(truncation),
      labels_(std::move(labels)),
      face_(std::move(face)),
      degen_(std::move(degen)) {
  if (static_cast<int>(labels_.size()) != truncation_ + 1)
    throw std::invalid_argument("TruncSset: level count mismatch");
  face_.resize(truncation_ + 1);
  degen_.resize(truncation_ + 1);
  for (int k = 1; k <= truncation_; ++k) {
    if (static_cast<int>(face_[k].size()) != k + 1)
      throw std::invalid_argument("TruncSset: face arity mismatch");
    for (const auto& col : face_[k])
      if (col.size() != labels_[k].size())
        throw std::invalid_argument("TruncSset: face table size mismatch");
  }
  for (int k = 0; k < truncation_; ++k) {
    if (static_cast<int>(degen_[k].size()) != k + 1)
      throw std::invalid_argument("TruncSset: degeneracy arity mismatch");
    for (const auto& col : degen_[k])
      if (col.size() != labels_[k].size())
        throw std::invalid_argument("TruncSset: degeneracy table size mismatch");
  }
}

int TruncSset::index_of_label(int k, const std::string& l) const {
  for (int x = 0; x < size(k); ++x)
    if (labels_[k][x] == l) return x;
  return -1;
}

int TruncSset::act(const MonotoneMap& f, int x) const {
  int n = f.dst_dim();
  int m = f.src_dim();
  if (n > truncation_ || m > truncation_)
    throw std::invalid_argument("TruncSset::act: level above truncation");
  if (f.is_identity()) return x;
  if (!f.is_surjective()) {
    // Largest missed value v: f = face(v, n) . f' with f' into [n-1].
    int v = n;
    while (v >= 0) {
      bool hit = false;
      for (int i = 0; i <= m; ++i) hit = hit || f(i) == v;
      if (!hit) break;
      --v;
    }
    std::vector<int> vals(m + 1);
    for (int i = 0; i <= m; ++i) vals[i] = f(i) > v ? f(i) - 1 : f(i);
    return act(MonotoneMap(m, n - 1, std::move(vals)), face_of(n, v, x));
  }
  // Surjective, not identity: smallest repeat i, f = f' . degeneracy(i, m-1).
  int i = 0;
  while (f(i) != f(i + 1)) ++i;
  std::vector<int> vals;
  for (int t = 0; t <= m; ++t)
    if (t != i + 1) vals.push_back(f(t));
  int y = act(MonotoneMap(m - 1, n, std::move(vals)), x);
  return degen_of(m - 1, i, y);
}

bool TruncSset::is_degenerate(int k, int x) const {
  if (k == 0) return false;
  for (int i = 0; i < k; ++i)
    for (int z = 0; z < size(k - 1); ++z)
      if (degen_[k - 1][i][z] == x) return true;
  return false;
}

std::vector<int> TruncSset::nondegenerate(int k) const {
  std::vector<int> out;
  for (int x = 0; x < size(k); ++x)
    if (!is_degenerate(k, x)) out.push_back(x);
  return out;
}

bool TruncSset::edge_marked(int e) const {
  if (truncation_ < 1) throw std::logic_error("edge_marked: no edges");
  return marked_edges_.count(e) > 0 || is_degenerate(1, e);
}

bool TruncSset::triangle_thin(int t) const {
  if (truncation_ < 2) throw std::logic_error("triangle_thin: no triangles");
  return thin_triangles_.count(t) > 0 || is_degenerate(2, t);
}

void TruncSset::mark_all_edges() {
  if (truncation_ < 1) return;
  for (int e = 0; e < size(1); ++e) marked_edges_.insert(e);
}

void check_simplicial_identities(const TruncSset& x) {
  int M = x.truncation();
  auto fail = [](const std::string& what) { throw std::logic_error("simplicial identity: " + what); };
  for (int k = 2; k <= M; ++k)
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j)
        for (int s = 0; s < x.size(k); ++s)
          if (x.face_of(k - 1, i, x.face_of(k, j, s)) !=
              x.face_of(k - 1, j - 1, x.face_of(k, i, s)))
            fail("d_i d_j");
  for (int k = 0; k + 1 < M; ++k)
    for (int i = 0; i <= k; ++i)
      for (int j = i; j <= k; ++j)
        for (int s = 0; s < x.size(k); ++s)
          if (x.degen_of(k + 1, j + 1, x.degen_of(k, i, s)) !=
              x.degen_of(k + 1, i, x.degen_of(k, j, s)))
            fail("s_i s_j");
  for (int k = 1; k <= M - 1; ++k)
    for (int i = 0; i <= k + 1; ++i)
      for (int j = 0; j <= k; ++j)
        for (int s = 0; s < x.size(k); ++s) {
          int lhs = x.face_of(k + 1, i, x.degen_of(k, j, s));
          if (i < j) {
            if (lhs != x.degen_of(k - 1, j - 1, x.face_of(k, i, s))) fail("d_i s_j, i<j");
          } else if (i == j || i == j + 1) {
            if (lhs != s) fail("d_i s_j, identity cases");
          } else {
            if (lhs != x.degen_of(k - 1, j, x.face_of(k, i - 1, s))) fail("d_i s_j, i>j+1");
          }
        }
  // Labels unique per level.
  for (int k = 0; k <= M; ++k) {
    std::set<std::string> seen;
    for (int s = 0; s < x.size(k); ++s)
      if (!seen.insert(x.label(k, s)).second) fail("duplicate label " + x.label(k, s));
  }
}

bool is_simplicial_map(const TruncSset& src, const TruncSset& dst, const SsetMap& f) {
  int M = src.truncation();
  if (dst.truncation() != M) return false;
  if (static_cast<int>(f.level.size()) != M + 1) return false;
  for (int k = 0; k <= M; ++k) {
    if (static_cast<int>(f.level[k].size()) != src.size(k)) return false;
    for (int x : f.level[k])
      if (x < 0 || x >= dst.size(k)) return false;
  }
  for (int k = 1; k <= M; ++k)
    for (int i = 0; i <= k; ++i)
      for (int x = 0; x < src.size(k); ++x)
        if (f.level[k - 1][src.face_of(k, i, x)] != dst.face_of(k, i, f.level[k][x]))
          return false;
  for (int k = 0; k < M; ++k)
    for (int i = 0; i <= k; ++i)
      for (int x = 0; x < src.size(k); ++x)
        if (f.level[k + 1][src.degen_of(k, i, x)] != dst.degen_of(k, i, f.level[k][x]))
          return false;
  return true;
}

SsetMap identity_sset_map(const TruncSset& x) {
  SsetMap f;
  f.level.resize(x.truncation() + 1);
  for (int k = 0; k <= x.truncation(); ++k) {
    f.level[k].resize(x.size(k));
    std::iota(f.level[k].begin(), f.level[k].end(), 0);
  }
  return f;
}

SsetMap compose(const TruncSset& a, const TruncSset&, const TruncSset&,
                const SsetMap& g, const SsetMap& f) {
  SsetMap h;
  h.level.resize(a.truncation() + 1);
  for (int k = 0; k <= a.truncation(); ++k) {
    h.level[k].resize(a.size(k));
    for (int x = 0; x < a.size(k); ++x) h.level[k][x] = g.level[k][f.level[k][x]];
  }
  return h;
}

namespace {

std::string map_label(const MonotoneMap& f) {
  std::string s;
  for (int v : f.values()) {
    if (v > 9) s += ';';
    s += std::to_string(v);
  }
  return s;
}

}  // namespace

TruncSset standard_simplex(int n, int M) {
  std::vector<std::vector<std::string>> labels(M + 1);
  std::vector<std::vector<MonotoneMap>> maps(M + 1);
  for (int k = 0; k <= M; ++k) {
    maps[k] = all_monotone_maps(k, n);
    for (const auto& f : maps[k]) labels[k].push_back(map_label(f));
  }
  auto find = [&](int k, const MonotoneMap& f) {
    auto it = std::lower_bound(maps[k].begin(), maps[k].end(), f);
    return static_cast<int>(it - maps[k].begin());
  };
  std::vector<std::vector<std::vector<int>>> face(M + 1), degen(M + 1);
  for (int k = 1; k <= M; ++k) {
    face[k].resize(k + 1);
    for (int i = 0; i <= k; ++i)
      for (const auto& f : maps[k])
        face[k][i].push_back(find(k - 1, compose(f, MonotoneMap::face(i, k))));
  }
  for (int k = 0; k < M; ++k) {
    degen[k].resize(k + 1);
    for (int i = 0; i <= k; ++i)
      for (const auto& f : maps[k])
        degen[k][i].push_back(find(k + 1, compose(f, MonotoneMap::degeneracy(i, k))));
  }
  return TruncSset(M, std::move(labels), std::move(face), std::move(degen));
}

int standard_simplex_index(int n, const MonotoneMap& f) {
  auto maps = all_monotone_maps(f.src_dim(), n);
  auto it = std::lower_bound(maps.begin(), maps.end(), f);
  if (it == maps.end() || !(*it == f))
    throw std::invalid_argument("standard_simplex_index: not a simplex");
  return static_cast<int>(it - maps.begin());
}

SsetMap standard_simplex_map(const MonotoneMap& g, int M) {
  SsetMap r;
  r.level.resize(static_cast<size_t>(M) + 1);
  for (int k = 0; k <= M; ++k)
    for (const auto& phi : all_monotone_maps(k, g.src_dim()))
      r.level[k].push_back(standard_simplex_index(g.dst_dim(), compose(g, phi)));
  return r;
}

void FinPoset::validate() const {
  int n = size();
  if (static_cast<int>(leq.size()) != n) throw std::logic_error("FinPoset: shape");
  for (const auto& row : leq)
    if (static_cast<int>(row.size()) != n) throw std::logic_error("FinPoset: shape");
  for (int a = 0; a < n; ++a)
    if (!leq[a][a]) throw std::logic_error("FinPoset: not reflexive");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (leq[a][b] && leq[b][a] && a != b) throw std::logic_error("FinPoset: not antisymmetric");
      for (int c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c] && !leq[a][c]) throw std::logic_error("FinPoset: not transitive");
    }
  std::set<std::string> seen(labels.begin(), labels.end());
  if (static_cast<int>(seen.size()) != n) throw std::logic_error("FinPoset: duplicate labels");
}

namespace {

void poset_chains(const FinPoset& p, int len, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v < p.size(); ++v) {
    if (!cur.empty() && !p.leq[cur.back()][v]) continue;
    cur.push_back(v);
    poset_chains(p, len, cur, out);
    cur.pop_back();
  }
}

std::string chain_label(const FinPoset& p, const std::vector<int>& chain) {
  std::string s;
  for (size_t i = 0; i < chain.size(); ++i) {
    if (i) s += '<';
    s += p.labels[chain[i]];
  }
  return s;
}

}  // namespace

TruncSset nerve_of_poset(const FinPoset& p, int M) {
  p.validate();
  std::vector<std::vector<std::vector<int>>> chains(M + 1);
  std::vector<std::vector<std::string>> labels(M + 1);
  for (int k = 0; k <= M; ++k) {
    std::vector<int> cur;
    poset_chains(p, k + 1, cur, chains[k]);
    for (const auto& c : chains[k]) labels[k].push_back(chain_label(p, c));
  }
  auto find = [&](int k, const std::vector<int>& c) {
    auto it = std::lower_bound(chains[k].begin(), chains[k].end(), c);
    return static_cast<int>(it - chains[k].begin());
  };
  std::vector<std::vector<std::vector<int>>> face(M + 1), degen(M + 1);
  for (int k = 1; k <= M; ++k) {
    face[k].resize(k + 1);
    for (int i = 0; i <= k; ++i)
      for (const auto& c : chains[k]) {
        std::vector<int> d = c;
        d.erase(d.begin() + i);
        face[k][i].push_back(find(k - 1, d));
      }
  }
  for (int k = 0; k < M; ++k) {
    degen[k].resize(k + 1);
    for (int i = 0; i <= k; ++i)
      for (const auto& c : chains[k]) {
        std::vector<int> d = c;
        d.insert(d.begin() + i, c[i]);
        degen[k][i].push_back(find(k + 1, d));
      }
  }
  return TruncSset(M, std::move(labels), std::move(face), std::move(degen));
}

int poset_chain_index(const FinPoset& p, const std::vector<int>& chain) {
  int k = static_cast<int>(chain.size()) - 1;
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  poset_chains(p, k + 1, cur, all);
  auto it = std::lower_bound(all.begin(), all.end(), chain);
  if (it == all.end() || *it != chain)
    throw std::invalid_argument("poset_chain_index: not a chain");
  return static_cast<int>(it - all.begin());
}

TruncSset product(const TruncSset& x, const TruncSset& y) {
  if (x.truncation() != y.truncation())
    throw std::invalid_argument("product: truncation mismatch");
  int M = x.truncation();
  std::vector<std::vector<std::string>> labels(M + 1);
  std::vector<std::vector<std::vector<int>>> face(M + 1), degen(M + 1);
  for (int k = 0; k <= M; ++k)
    for (int ix = 0; ix < x.size(k); ++ix)
      for (int iy = 0; iy < y.size(k); ++iy)
        labels[k].push_back('(' + x.label(k, ix) + ',' + y.label(k, iy) + ')');
  auto pair_index = [&](int k, int ix, int iy) { return ix * y.size(k) + iy; };
  for (int k = 1; k <= M; ++k) {
    face[k].resize(k + 1);
    for (int i = 0; i <= k; ++i)
      for (int ix = 0; ix < x.size(k); ++ix)
        for (int iy = 0; iy < y.size(k); ++iy)
          face[k][i].push_back(pair_index(k - 1, x.face_of(k, i, ix), y.face_of(k, i, iy)));
  }
  for (int k = 0; k < M; ++k) {
    degen[k].resize(k + 1);
    for (int i = 0; i <= k; ++i)
      for (int ix = 0; ix < x.size(k); ++ix)
        for (int iy = 0; iy < y.size(k); ++iy)
          degen[k][i].push_back(pair_index(k + 1, x.degen_of(k, i, ix), y.degen_of(k, i, iy)));
  }
  TruncSset r(M, std::move(labels), std::move(face), std::move(degen));
  if (M >= 1)
    for (int ix = 0; ix < x.size(1); ++ix)
      for (int iy = 0; iy < y.size(1); ++iy)
        if (x.edge_marked(ix) && y.edge_marked(iy))
          r.marked_edges().insert(ix * y.size(1) + iy);
  if (M >= 2)
    for (int ix = 0; ix < x.size(2); ++ix)
      for (int iy = 0; iy < y.size(2); ++iy)
        if (x.triangle_thin(ix) && y.triangle_thin(iy))
          r.thin_triangles().insert(ix * y.size(2) + iy);
  return r;
}

int product_index(const TruncSset&, const TruncSset& y, int k, int ix, int iy) {
  return ix * y.size(k) + iy;
}

std::pair<int, int> product_split(const TruncSset&, const TruncSset& y, int k, int p) {
  return {p / y.size(k), p % y.size(k)};
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

PushoutResult pushout(const TruncSset& a, const TruncSset& x, const TruncSset& y,
                      const SsetMap& f, const SsetMap& g) {
  int M = a.truncation();
  if (x.truncation() != M || y.truncation() != M)
    throw std::invalid_argument("pushout: truncation mismatch");
  if (!is_simplicial_map(a, x, f) || !is_simplicial_map(a, y, g))
    throw std::invalid_argument("pushout: not simplicial maps");
  // Disjoint union indices: x-simplices first, then y-simplices.
  std::vector<UnionFind> uf;
  for (int k = 0; k <= M; ++k) {
    uf.emplace_back(x.size(k) + y.size(k));
    for (int s = 0; s < a.size(k); ++s)
      uf[k].unite(f.level[k][s], x.size(k) + g.level[k][s]);
  }
  // Canonical numbering of classes, in disjoint-union order of their roots.
  std::vector<std::vector<int>> cls(M + 1);
  std::vector<int> count(M + 1, 0);
  for (int k = 0; k <= M; ++k) {
    cls[k].assign(x.size(k) + y.size(k), -1);
    for (int s = 0; s < x.size(k) + y.size(k); ++s)
      if (uf[k].find(s) == s) cls[k][s] = count[k]++;
    for (int s = 0; s < x.size(k) + y.size(k); ++s) cls[k][s] = cls[k][uf[k].find(s)];
  }
  // Side prefixes keep class labels unique even when both inputs use the
  // same label strings.
  auto du_label = [&](int k, int s) {
    return s < x.size(k) ? "x:" + x.label(k, s) : "y:" + y.label(k, s - x.size(k));
  };
  std::vector<std::vector<std::string>> labels(M + 1);
  for (int k = 0; k <= M; ++k) {
    labels[k].resize(count[k]);
    // Deterministic class label: lexicographically smallest member label.
    for (int s = 0; s < x.size(k) + y.size(k); ++s) {
      std::string& slot = labels[k][cls[k][s]];
      std::string l = du_label(k, s);
      if (slot.empty() || l < slot) slot = l;
    }
  }
  auto du_face = [&](int k, int i, int s) {
    return s < x.size(k) ? x.face_of(k, i, s) : x.size(k - 1) + y.face_of(k, i, s - x.size(k));
  };
  auto du_degen = [&](int k, int i, int s) {
    return s < x.size(k) ? x.degen_of(k, i, s) : x.size(k + 1) + y.degen_of(k, i, s - x.size(k));
  };
  std::vector<std::vector<std::vector<int>>> face(M + 1), degen(M + 1);
  for (int k = 1; k <= M; ++k) {
    face[k].assign(k + 1, std::vector<int>(count[k], -1));
    for (int i = 0; i <= k; ++i)
      for (int s = 0; s < x.size(k) + y.size(k); ++s) {
        int& slot = face[k][i][cls[k][s]];
        int v = cls[k - 1][du_face(k, i, s)];
        if (slot == -1)
          slot = v;
        else if (slot != v)
          throw std::logic_error("pushout: face maps do not descend");
      }
  }
  for (int k = 0; k < M; ++k) {
    degen[k].assign(k + 1, std::vector<int>(count[k], -1));
    for (int i = 0; i <= k; ++i)
      for (int s = 0; s < x.size(k) + y.size(k); ++s) {
        int& slot = degen[k][i][cls[k][s]];
        int v = cls[k + 1][du_degen(k, i, s)];
        if (slot == -1)
          slot = v;
        else if (slot != v)
          throw std::logic_error("pushout: degeneracy maps do not descend");
      }
  }
  PushoutResult r{TruncSset(M, std::move(labels), std::move(face), std::move(degen)), {}, {}};
  if (M >= 1) {
    for (int e : x.marked_edges()) r.sset.marked_edges().insert(cls[1][e]);
    for (int e : y.marked_edges()) r.sset.marked_edges().insert(cls[1][x.size(1) + e]);
  }
  if (M >= 2) {
    for (int t : x.thin_triangles()) r.sset.thin_triangles().insert(cls[2][t]);
    for (int t : y.thin_triangles()) r.sset.thin_triangles().insert(cls[2][x.size(2) + t]);
  }
  r.from_x.level.resize(M + 1);
  r.from_y.level.resize(M + 1);
  for (int k = 0; k <= M; ++k) {
    for (int s = 0; s < x.size(k); ++s) r.from_x.level[k].push_back(cls[k][s]);
    for (int s = 0; s < y.size(k); ++s) r.from_y.level[k].push_back(cls[k][x.size(k) + s]);
  }
  return r;
}

}  // namespace dk
