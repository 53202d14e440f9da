#include "dk/simplicial.hpp"

#include <stdexcept>

namespace dk {

namespace {

void check_shapes(const SimplicialAbGroup& a) {
  int M = a.truncation;
  if (static_cast<int>(a.levels.size()) != M + 1)
    throw std::logic_error("simplicial group: level count");
  if (static_cast<int>(a.faces.size()) < M + 1 || static_cast<int>(a.degens.size()) < M)
    throw std::logic_error("simplicial group: table count");
  for (int k = 1; k <= M; ++k) {
    if (static_cast<int>(a.faces[k].size()) != k + 1)
      throw std::logic_error("simplicial group: face arity");
    for (const auto& h : a.faces[k])
      if (h.source != a.levels[k] || h.target != a.levels[k - 1])
        throw std::logic_error("simplicial group: face shape");
  }
  for (int k = 0; k < M; ++k) {
    if (static_cast<int>(a.degens[k].size()) != k + 1)
      throw std::logic_error("simplicial group: degeneracy arity");
    for (const auto& h : a.degens[k])
      if (h.source != a.levels[k] || h.target != a.levels[k + 1])
        throw std::logic_error("simplicial group: degeneracy shape");
  }
}

}  // namespace

void check_simplicial_group(const SimplicialAbGroup& a) {
  check_shapes(a);
  int M = a.truncation;
  auto fail = [](const char* what) {
    throw std::logic_error(std::string("simplicial group identity: ") + what);
  };
  for (int k = 1; k <= M; ++k)
    for (const auto& h : a.faces[k])
      if (!is_well_defined(h)) fail("face not well defined");
  for (int k = 0; k < M; ++k)
    for (const auto& h : a.degens[k])
      if (!is_well_defined(h)) fail("degeneracy not well defined");
  for (int k = 2; k <= M; ++k)
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j)
        if (!equal_as_maps(compose(a.faces[k - 1][i], a.faces[k][j]),
                           compose(a.faces[k - 1][j - 1], a.faces[k][i])))
          fail("d_i d_j");
  for (int k = 0; k + 1 < M; ++k)
    for (int i = 0; i <= k; ++i)
      for (int j = i; j <= k; ++j)
        if (!equal_as_maps(compose(a.degens[k + 1][j + 1], a.degens[k][i]),
                           compose(a.degens[k + 1][i], a.degens[k][j])))
          fail("s_i s_j");
  for (int k = 1; k <= M - 1; ++k)
    for (int i = 0; i <= k + 1; ++i)
      for (int j = 0; j <= k; ++j) {
        AbHom lhs = compose(a.faces[k + 1][i], a.degens[k][j]);
        if (i < j) {
          if (!equal_as_maps(lhs, compose(a.degens[k - 1][j - 1], a.faces[k][i])))
            fail("d_i s_j, i<j");
        } else if (i == j || i == j + 1) {
          if (!equal_as_maps(lhs, identity_hom(a.levels[k]))) fail("d_i s_j, identity");
        } else {
          if (!equal_as_maps(lhs, compose(a.degens[k - 1][j], a.faces[k][i - 1])))
            fail("d_i s_j, i>j+1");
        }
      }
}

AbHom act(const SimplicialAbGroup& a, const MonotoneMap& f) {
  int n = f.dst_dim();
  int m = f.src_dim();
  if (n > a.truncation || m > a.truncation)
    throw std::invalid_argument("act: level above truncation");
  if (f.is_identity()) return identity_hom(a.levels[n]);
  if (!f.is_surjective()) {
    int v = n;
    while (v >= 0) {
      bool hit = false;
      for (int i = 0; i <= m; ++i) hit = hit || f(i) == v;
      if (!hit) break;
      --v;
    }
    std::vector<int> vals(m + 1);
    for (int i = 0; i <= m; ++i) vals[i] = f(i) > v ? f(i) - 1 : f(i);
    return compose(act(a, MonotoneMap(m, n - 1, std::move(vals))), a.faces[n][v]);
  }
  int i = 0;
  while (f(i) != f(i + 1)) ++i;
  std::vector<int> vals;
  for (int t = 0; t <= m; ++t)
    if (t != i + 1) vals.push_back(f(t));
  return compose(a.degens[m - 1][i], act(a, MonotoneMap(m - 1, n, std::move(vals))));
}

AbHom moore_differential(const SimplicialAbGroup& a, int n) {
  if (n < 1 || n > a.truncation) throw std::invalid_argument("moore_differential: bad level");
  AbHom d = a.faces[n][0];
  for (int i = 1; i <= n; ++i) {
    if (i % 2)
      d = hom_sub(d, a.faces[n][i]);
    else
      d = hom_add(d, a.faces[n][i]);
  }
  return d;
}

Subgroup normalized_subgroup(const SimplicialAbGroup& a, int n) {
  std::vector<AbHom> fs;
  for (int i = 1; i <= n; ++i) fs.push_back(a.faces[n][i]);
  return intersection_of_kernels(a.levels[n], fs);
}

Subgroup degenerate_subgroup(const SimplicialAbGroup& a, int n) {
  if (n < 1 || n > a.truncation) throw std::invalid_argument("degenerate_subgroup: bad level");
  IntMatrix cols(a.levels[n].generators, 0);
  for (int i = 0; i < n; ++i) cols = cols.hstack(a.degens[n - 1][i].matrix);
  return subgroup_generated(a.levels[n], cols);
}

AbHom pi(const SimplicialAbGroup& a, int n) {
  if (n > a.truncation) throw std::invalid_argument("pi: level above truncation");
  AbHom acc = zero_hom(a.levels[n], a.levels[n]);
  for (const auto& bits : all_bit_vectors(n)) {
    int ones = 0;
    for (int b : bits) ones += b;
    AbHom term = act(a, f_vertex(n, bits));
    acc = (n - ones) % 2 ? hom_sub(acc, term) : hom_add(acc, term);
  }
  return acc;
}

bool is_simplicial_map(const SimplicialMap& f) {
  int M = f.source.truncation;
  if (f.target.truncation != M) return false;
  if (static_cast<int>(f.level_maps.size()) != M + 1) return false;
  for (int k = 0; k <= M; ++k) {
    if (f.level_maps[k].source != f.source.levels[k]) return false;
    if (f.level_maps[k].target != f.target.levels[k]) return false;
    if (!is_well_defined(f.level_maps[k])) return false;
  }
  for (int k = 1; k <= M; ++k)
    for (int i = 0; i <= k; ++i)
      if (!equal_as_maps(compose(f.level_maps[k - 1], f.source.faces[k][i]),
                         compose(f.target.faces[k][i], f.level_maps[k])))
        return false;
  for (int k = 0; k < M; ++k)
    for (int i = 0; i <= k; ++i)
      if (!equal_as_maps(compose(f.level_maps[k + 1], f.source.degens[k][i]),
                         compose(f.target.degens[k][i], f.level_maps[k])))
        return false;
  return true;
}

SimplicialMap identity_simplicial_map(const SimplicialAbGroup& a) {
  SimplicialMap f{a, a, {}};
  for (int k = 0; k <= a.truncation; ++k) f.level_maps.push_back(identity_hom(a.levels[k]));
  return f;
}

SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
  SimplicialMap h{g.source, f.target, {}};
  for (size_t k = 0; k < f.level_maps.size(); ++k)
    h.level_maps.push_back(compose(f.level_maps[k], g.level_maps[k]));
  return h;
}

SimplicialAbGroup truncate(const SimplicialAbGroup& a, int new_truncation) {
  if (new_truncation > a.truncation) throw std::invalid_argument("truncate: cannot extend");
  SimplicialAbGroup r;
  r.truncation = new_truncation;
  r.levels.assign(a.levels.begin(), a.levels.begin() + new_truncation + 1);
  r.faces.assign(a.faces.begin(), a.faces.begin() + new_truncation + 1);
  r.degens.assign(a.degens.begin(), a.degens.begin() + new_truncation);
  r.degens.resize(new_truncation + 1);
  return r;
}

SimplicialAbGroup path_object(const SimplicialAbGroup& a) {
  if (a.truncation < 1) throw std::invalid_argument("path_object: truncation exhausted");
  int M = a.truncation - 1;
  SimplicialAbGroup p;
  p.truncation = M;
  for (int k = 0; k <= M; ++k) p.levels.push_back(a.levels[k + 1]);
  p.faces.resize(M + 1);
  p.degens.resize(M + 1);
  // join with [0]: face(i,k)*id = face(i,k+1), degeneracy(i,k)*id =
  // degeneracy(i,k+1), for 0 <= i <= k, so the last face/degeneracy in each
  // level is dropped.
  for (int k = 1; k <= M; ++k)
    for (int i = 0; i <= k; ++i) p.faces[k].push_back(a.faces[k + 1][i]);
  for (int k = 0; k < M; ++k)
    for (int i = 0; i <= k; ++i) p.degens[k].push_back(a.degens[k + 1][i]);
  return p;
}

SimplicialMap boundary_map(const SimplicialAbGroup& a) {
  SimplicialMap d{path_object(a), truncate(a, a.truncation - 1), {}};
  for (int n = 0; n < a.truncation; ++n) d.level_maps.push_back(a.faces[n + 1][n + 1]);
  return d;
}

LoopObject loop_object(const SimplicialAbGroup& a) {
  SimplicialMap d = boundary_map(a);
  int M = d.source.truncation;
  std::vector<Subgroup> kers;
  std::vector<SubgroupSolver> solvers;
  for (int k = 0; k <= M; ++k) {
    kers.push_back(kernel(d.level_maps[k]));
    solvers.emplace_back(kers[k].inclusion);
  }
  SimplicialAbGroup om;
  om.truncation = M;
  for (int k = 0; k <= M; ++k) om.levels.push_back(kers[k].group);
  om.faces.resize(M + 1);
  om.degens.resize(M + 1);
  for (int k = 1; k <= M; ++k)
    for (int i = 0; i <= k; ++i)
      om.faces[k].push_back(
          solvers[k - 1].corestrict(compose(d.source.faces[k][i], kers[k].inclusion)));
  for (int k = 0; k < M; ++k)
    for (int i = 0; i <= k; ++i)
      om.degens[k].push_back(
          solvers[k + 1].corestrict(compose(d.source.degens[k][i], kers[k].inclusion)));
  SimplicialMap incl{om, d.source, {}};
  for (int k = 0; k <= M; ++k) incl.level_maps.push_back(kers[k].inclusion);
  return {std::move(om), std::move(incl)};
}

SimplicialAbGroup free_simplicial_abelian_group(const TruncSset& x) {
  int M = x.truncation();
  SimplicialAbGroup a;
  a.truncation = M;
  for (int k = 0; k <= M; ++k) a.levels.push_back(FpAbelianGroup::free_group(x.size(k)));
  a.faces.resize(M + 1);
  a.degens.resize(M + 1);
  for (int k = 1; k <= M; ++k)
    for (int i = 0; i <= k; ++i) {
      IntMatrix m(x.size(k - 1), x.size(k));
      for (int s = 0; s < x.size(k); ++s) m.at(x.face_of(k, i, s), s) = 1;
      a.faces[k].emplace_back(a.levels[k], a.levels[k - 1], std::move(m));
    }
  for (int k = 0; k < M; ++k)
    for (int i = 0; i <= k; ++i) {
      IntMatrix m(x.size(k + 1), x.size(k));
      for (int s = 0; s < x.size(k); ++s) m.at(x.degen_of(k, i, s), s) = 1;
      a.degens[k].emplace_back(a.levels[k], a.levels[k + 1], std::move(m));
    }
  return a;
}

SimplicialMap free_simplicial_map(const TruncSset& x, const TruncSset& y, const SsetMap& f) {
  if (!is_simplicial_map(x, y, f))
    throw std::invalid_argument("free_simplicial_map: not a simplicial map");
  SimplicialMap r{free_simplicial_abelian_group(x), free_simplicial_abelian_group(y), {}};
  for (int k = 0; k <= x.truncation(); ++k) {
    IntMatrix m(y.size(k), x.size(k));
    for (int s = 0; s < x.size(k); ++s) m.at(f.level[k][s], s) = 1;
    r.level_maps.emplace_back(r.source.levels[k], r.target.levels[k], std::move(m));
  }
  return r;
}

SimplicialDirectSum simplicial_direct_sum(const std::vector<SimplicialAbGroup>& parts) {
  if (parts.empty()) throw std::invalid_argument("simplicial_direct_sum: empty");
  int M = parts[0].truncation;
  for (const auto& p : parts)
    if (p.truncation != M) throw std::invalid_argument("simplicial_direct_sum: truncations differ");
  std::vector<DirectSum> sums;
  for (int k = 0; k <= M; ++k) {
    std::vector<FpAbelianGroup> lv;
    for (const auto& p : parts) lv.push_back(p.levels[k]);
    sums.push_back(direct_sum(lv));
  }
  SimplicialAbGroup g;
  g.truncation = M;
  for (int k = 0; k <= M; ++k) g.levels.push_back(sums[k].group);
  g.faces.resize(M + 1);
  g.degens.resize(M + 1);
  size_t np = parts.size();
  for (int k = 1; k <= M; ++k)
    for (int i = 0; i <= k; ++i) {
      std::vector<std::vector<const AbHom*>> blocks(np, std::vector<const AbHom*>(np, nullptr));
      for (size_t p = 0; p < np; ++p) blocks[p][p] = &parts[p].faces[k][i];
      g.faces[k].push_back(block_hom(sums[k], sums[k - 1], blocks));
    }
  for (int k = 0; k < M; ++k)
    for (int i = 0; i <= k; ++i) {
      std::vector<std::vector<const AbHom*>> blocks(np, std::vector<const AbHom*>(np, nullptr));
      for (size_t p = 0; p < np; ++p) blocks[p][p] = &parts[p].degens[k][i];
      g.degens[k].push_back(block_hom(sums[k], sums[k + 1], blocks));
    }
  SimplicialDirectSum r{std::move(g), {}, {}};
  for (size_t p = 0; p < np; ++p) {
    SimplicialMap incl{parts[p], r.group, {}};
    SimplicialMap proj{r.group, parts[p], {}};
    for (int k = 0; k <= M; ++k) {
      incl.level_maps.push_back(sums[k].inclusions[p]);
      proj.level_maps.push_back(sums[k].projections[p]);
    }
    r.inclusions.push_back(std::move(incl));
    r.projections.push_back(std::move(proj));
  }
  return r;
}

}  // namespace dk
