#include "dk/dold_kan.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace dk {

void check_chain_complex(const ChainComplexFp& b) {
  const int M = b.truncation;
  if (static_cast<int>(b.levels.size()) != M + 1)
    throw std::logic_error("chain complex: level count mismatch");
  if (static_cast<int>(b.differentials.size()) != M)
    throw std::logic_error("chain complex: differential count mismatch");
  for (int k = 1; k <= M; ++k) {
    const AbHom& d = b.diff(k);
    if (d.source != b.level(k) || d.target != b.level(k - 1))
      throw std::logic_error("chain complex: differential endpoints mismatch");
    if (!is_well_defined(d))
      throw std::logic_error("chain complex: differential not well defined");
  }
  for (int k = 2; k <= M; ++k)
    if (!is_zero_map(compose(b.diff(k - 1), b.diff(k))))
      throw std::logic_error("chain complex: d.d nonzero");
}

bool complexes_equal(const ChainComplexFp& a, const ChainComplexFp& b) {
  if (a.truncation != b.truncation) return false;
  for (int k = 0; k <= a.truncation; ++k)
    if (a.level(k) != b.level(k)) return false;
  for (int k = 1; k <= a.truncation; ++k)
    if (a.diff(k).matrix != b.diff(k).matrix) return false;
  return true;
}

ChainComplexFp single_group_complex(const FpAbelianGroup& g, int degree, int M) {
  ChainComplexFp b;
  b.truncation = M;
  for (int k = 0; k <= M; ++k)
    b.levels.push_back(k == degree ? g : FpAbelianGroup::trivial());
  for (int k = 1; k <= M; ++k)
    b.differentials.push_back(zero_hom(b.level(k), b.level(k - 1)));
  return b;
}

ChainComplexFp truncate_complex(const ChainComplexFp& b, int new_truncation) {
  if (new_truncation > b.truncation)
    throw std::invalid_argument("truncate_complex: would extend");
  ChainComplexFp r;
  r.truncation = new_truncation;
  r.levels.assign(b.levels.begin(), b.levels.begin() + new_truncation + 1);
  r.differentials.assign(b.differentials.begin(), b.differentials.begin() + new_truncation);
  return r;
}

ChainComplexFp complex_direct_sum(const std::vector<ChainComplexFp>& parts) {
  if (parts.empty()) throw std::invalid_argument("complex_direct_sum: empty");
  const int M = parts[0].truncation;
  for (const auto& p : parts)
    if (p.truncation != M)
      throw std::invalid_argument("complex_direct_sum: truncation mismatch");
  ChainComplexFp r;
  r.truncation = M;
  std::vector<DirectSum> sums;
  for (int k = 0; k <= M; ++k) {
    std::vector<FpAbelianGroup> lv;
    for (const auto& p : parts) lv.push_back(p.level(k));
    sums.push_back(direct_sum(lv));
    r.levels.push_back(sums[k].group);
  }
  for (int k = 1; k <= M; ++k) {
    std::vector<std::vector<const AbHom*>> blocks(
        parts.size(), std::vector<const AbHom*>(parts.size(), nullptr));
    for (size_t i = 0; i < parts.size(); ++i) blocks[i][i] = &parts[i].diff(k);
    r.differentials.push_back(block_hom(sums[k], sums[k - 1], blocks));
  }
  return r;
}

bool is_chain_map(const ChainMap& f) {
  const int M = f.source.truncation;
  if (f.target.truncation != M) return false;
  if (static_cast<int>(f.level_maps.size()) != M + 1) return false;
  for (int k = 0; k <= M; ++k) {
    const AbHom& h = f.level_maps[k];
    if (h.source != f.source.level(k) || h.target != f.target.level(k)) return false;
    if (!is_well_defined(h)) return false;
  }
  for (int k = 1; k <= M; ++k)
    if (!equal_as_maps(compose(f.target.diff(k), f.level_maps[k]),
                       compose(f.level_maps[k - 1], f.source.diff(k))))
      return false;
  return true;
}

bool is_levelwise_isomorphism(const ChainMap& f) {
  for (const AbHom& h : f.level_maps)
    if (!is_isomorphism(h)) return false;
  return true;
}

FpAbelianGroup homology(const ChainComplexFp& b, int k) {
  Subgroup cycles;
  if (k >= 1 && k <= b.truncation) {
    cycles = kernel(b.diff(k));
  } else {
    cycles.group = b.level(k);
    cycles.inclusion = identity_hom(b.level(k));
  }
  AbHom boundaries_in;
  if (k < b.truncation) {
    boundaries_in = corestrict(b.diff(k + 1), cycles.inclusion);
  } else {
    boundaries_in = zero_hom(FpAbelianGroup::trivial(), cycles.group);
  }
  return cokernel(boundaries_in).group;
}

NormalizedChains normalized_chains_data(const SimplicialAbGroup& a) {
  NormalizedChains c;
  const int M = a.truncation;
  c.complex.truncation = M;
  for (int n = 0; n <= M; ++n) {
    c.parts.push_back(normalized_subgroup(a, n));
    c.complex.levels.push_back(c.parts[n].group);
  }
  for (int k = 1; k <= M; ++k)
    c.complex.differentials.push_back(corestrict(
        compose(a.face(k, 0), c.parts[k].inclusion), c.parts[k - 1].inclusion));
  return c;
}

ChainComplexFp normalized_chains(const SimplicialAbGroup& a) {
  return normalized_chains_data(a).complex;
}

ChainMap normalized_chains_map(const SimplicialMap& f) {
  NormalizedChains cs = normalized_chains_data(f.source);
  NormalizedChains ct = normalized_chains_data(f.target);
  ChainMap g;
  for (int n = 0; n <= f.source.truncation; ++n)
    g.level_maps.push_back(corestrict(compose(f.level_maps[n], cs.parts[n].inclusion),
                                      ct.parts[n].inclusion));
  g.source = std::move(cs.complex);
  g.target = std::move(ct.complex);
  return g;
}

ChainComplexFp moore_complex(const SimplicialAbGroup& a) {
  ChainComplexFp b;
  b.truncation = a.truncation;
  b.levels = a.levels;
  for (int k = 1; k <= a.truncation; ++k)
    b.differentials.push_back(moore_differential(a, k));
  return b;
}

SplitDecomposition split_decomposition(const SimplicialAbGroup& a) {
  SplitDecomposition s;
  const int M = a.truncation;
  s.moore = moore_complex(a);
  NormalizedChains nc = normalized_chains_data(a);
  s.normalized = nc.complex;

  std::vector<Subgroup> deg;
  for (int n = 0; n <= M; ++n) {
    if (n == 0) {
      Subgroup z;
      z.group = FpAbelianGroup::trivial();
      z.inclusion = zero_hom(z.group, a.level(0));
      deg.push_back(z);
    } else {
      deg.push_back(degenerate_subgroup(a, n));
    }
  }
  s.degenerate.truncation = M;
  for (int n = 0; n <= M; ++n) s.degenerate.levels.push_back(deg[n].group);
  for (int k = 1; k <= M; ++k)
    s.degenerate.differentials.push_back(corestrict(
        compose(s.moore.diff(k), deg[k].inclusion), deg[k - 1].inclusion));

  for (int n = 0; n <= M; ++n) {
    s.incl_normalized.push_back(nc.parts[n].inclusion);
    s.incl_degenerate.push_back(deg[n].inclusion);
    AbHom p = pi(a, n);
    s.proj_normalized.push_back(corestrict(p, nc.parts[n].inclusion));
    s.proj_degenerate.push_back(
        corestrict(hom_sub(identity_hom(a.level(n)), p), deg[n].inclusion));
  }
  return s;
}

namespace {

// The contravariant action on ambient sums: route slot (alpha . tau) to slot
// tau when the composite stays injective, zero otherwise.
AbHom ambient_pullback(const ChainComplexFp& b, const DoldKanNerve& nv,
                       const MonotoneMap& alpha,
                       const std::vector<std::map<MonotoneMap, int>>& index,
                       const std::vector<AbHom>& level_ids) {
  const int n = alpha.dst_dim();
  const int m = alpha.src_dim();
  (void)b;
  std::vector<std::vector<const AbHom*>> blocks(
      nv.sigmas[m].size(),
      std::vector<const AbHom*>(nv.sigmas[n].size(), nullptr));
  for (size_t j = 0; j < nv.sigmas[m].size(); ++j) {
    MonotoneMap comp = compose(alpha, nv.sigmas[m][j]);
    if (!comp.is_injective()) continue;
    blocks[j][static_cast<size_t>(index[n].at(comp))] =
        &level_ids[static_cast<size_t>(comp.src_dim())];
  }
  return block_hom(nv.ambients[n], nv.ambients[m], blocks);
}

}  // namespace

DoldKanNerve dold_kan_nerve_data(const ChainComplexFp& b, int M) {
  DoldKanNerve nv;
  nv.nerve.truncation = M;

  // Levels: subgroup of the sigma-indexed sum cut out by the boundary
  // equations.
  std::vector<std::map<MonotoneMap, int>> index(M + 1);
  for (int n = 0; n <= M; ++n) {
    std::vector<MonotoneMap> sig;
    std::vector<FpAbelianGroup> parts;
    for (int k = 0; k <= std::min(n, b.truncation); ++k)
      for (const MonotoneMap& s : all_injections(k, n)) {
        index[n][s] = static_cast<int>(sig.size());
        sig.push_back(s);
        parts.push_back(b.level(k));
      }
    nv.sigmas.push_back(std::move(sig));
    nv.ambients.push_back(direct_sum(parts));

    std::vector<AbHom> equations;
    for (size_t j = 0; j < nv.sigmas[n].size(); ++j) {
      const MonotoneMap& s = nv.sigmas[n][j];
      const int k = s.src_dim();
      if (k < 1) continue;
      AbHom e = compose(b.diff(k), nv.ambients[n].projections[j]);
      for (int i = 0; i <= k; ++i) {
        const AbHom& p =
            nv.ambients[n].projections[static_cast<size_t>(
                index[n].at(compose(s, MonotoneMap::face(i, k))))];
        e = (i % 2 == 0) ? hom_sub(e, p) : hom_add(e, p);
      }
      equations.push_back(std::move(e));
    }
    Subgroup lvl = intersection_of_kernels(nv.ambients[n].group, equations);
    nv.nerve.levels.push_back(lvl.group);
    nv.inclusions.push_back(lvl.inclusion);
  }

  std::vector<AbHom> level_ids;
  for (int k = 0; k <= b.truncation; ++k)
    level_ids.push_back(identity_hom(b.level(k)));
  std::vector<SubgroupSolver> solvers;
  solvers.reserve(static_cast<size_t>(M) + 1);
  for (int n = 0; n <= M; ++n) solvers.emplace_back(nv.inclusions[n]);

  nv.nerve.faces.resize(M + 1);
  nv.nerve.degens.resize(M + 1);
  for (int n = 1; n <= M; ++n)
    for (int i = 0; i <= n; ++i)
      nv.nerve.faces[n].push_back(solvers[n - 1].corestrict(compose(
          ambient_pullback(b, nv, MonotoneMap::face(i, n), index, level_ids),
          nv.inclusions[n])));
  for (int n = 0; n < M; ++n)
    for (int i = 0; i <= n; ++i)
      nv.nerve.degens[n].push_back(solvers[n + 1].corestrict(compose(
          ambient_pullback(b, nv, MonotoneMap::degeneracy(i, n), index, level_ids),
          nv.inclusions[n])));
  return nv;
}

SimplicialAbGroup dold_kan_nerve(const ChainComplexFp& b, int M) {
  return dold_kan_nerve_data(b, M).nerve;
}

SimplicialMap dold_kan_nerve_map(const DoldKanNerve& src, const DoldKanNerve& dst,
                                 const ChainMap& g) {
  const int M = src.nerve.truncation;
  if (dst.nerve.truncation != M)
    throw std::invalid_argument("nerve map: truncation mismatch");
  SimplicialMap f;
  f.source = src.nerve;
  f.target = dst.nerve;
  for (int n = 0; n <= M; ++n) {
    if (src.sigmas[n].size() != dst.sigmas[n].size())
      throw std::invalid_argument("nerve map: slot mismatch");
    std::vector<std::vector<const AbHom*>> blocks(
        dst.sigmas[n].size(),
        std::vector<const AbHom*>(src.sigmas[n].size(), nullptr));
    for (size_t j = 0; j < src.sigmas[n].size(); ++j)
      blocks[j][j] = &g.level_maps[static_cast<size_t>(src.sigmas[n][j].src_dim())];
    AbHom amb = block_hom(src.ambients[n], dst.ambients[n], blocks);
    f.level_maps.push_back(
        corestrict(compose(amb, src.inclusions[n]), dst.inclusions[n]));
  }
  return f;
}

CounitData counit(const DoldKanNerve& nv, const ChainComplexFp& b) {
  CounitData c;
  const int M = nv.nerve.truncation;
  c.chains = normalized_chains_data(nv.nerve);
  c.map.source = c.chains.complex;
  c.map.target = truncate_complex(b, M);
  for (int k = 0; k <= M; ++k) {
    int id_slot = -1;
    for (size_t j = 0; j < nv.sigmas[k].size(); ++j)
      if (nv.sigmas[k][j].src_dim() == k && nv.sigmas[k][j].is_identity())
        id_slot = static_cast<int>(j);
    c.map.level_maps.push_back(
        compose(nv.ambients[k].projections[static_cast<size_t>(id_slot)],
                compose(nv.inclusions[k], c.chains.parts[k].inclusion)));
  }
  return c;
}

UnitData unit(const SimplicialAbGroup& a) {
  UnitData u;
  const int M = a.truncation;
  u.chains = normalized_chains_data(a);
  u.nerve = dold_kan_nerve_data(u.chains.complex, M);

  std::vector<AbHom> pibar;  // A_k -> C(A)_k
  for (int k = 0; k <= M; ++k)
    pibar.push_back(corestrict(pi(a, k), u.chains.parts[k].inclusion));

  u.map.source = a;
  u.map.target = u.nerve.nerve;
  for (int n = 0; n <= M; ++n) {
    std::vector<AbHom> comps;
    for (const MonotoneMap& s : u.nerve.sigmas[n])
      comps.push_back(compose(pibar[static_cast<size_t>(s.src_dim())], act(a, s)));
    AbHom t = tuple_into_sum(u.nerve.ambients[n], comps);
    u.map.level_maps.push_back(corestrict(t, u.nerve.inclusions[n]));
  }
  return u;
}

ChainComplexFp omega_complex(const ChainComplexFp& b) {
  if (b.truncation < 1) throw std::invalid_argument("omega_complex: truncation 0");
  ChainComplexFp r;
  r.truncation = b.truncation - 1;
  r.levels.assign(b.levels.begin() + 1, b.levels.end());
  r.differentials.assign(b.differentials.begin() + 1, b.differentials.end());
  return r;
}

bool omega_compat_check(const SimplicialAbGroup& a) {
  if (a.truncation < 1) return true;
  LoopObject lo = loop_object(a);
  NormalizedChains com = normalized_chains_data(lo.omega);
  NormalizedChains ca = normalized_chains_data(a);
  ChainComplexFp oca = omega_complex(ca.complex);
  const int M = a.truncation - 1;

  // Both sides sit inside A_{k+1}; compare there, then transport the
  // differentials through the induced identification.
  std::vector<AbHom> t;
  for (int k = 0; k <= M; ++k) {
    AbHom j = compose(lo.inclusion.level_maps[k], com.parts[k].inclusion);
    if (!subgroups_equal(j, ca.parts[k + 1].inclusion)) return false;
    t.push_back(corestrict(j, ca.parts[k + 1].inclusion));
    if (!is_isomorphism(t[k])) return false;
  }
  for (int k = 1; k <= M; ++k)
    if (!equal_as_maps(compose(t[k - 1], com.complex.diff(k)),
                       compose(oca.diff(k), t[k])))
      return false;
  return true;
}

ConservativityReport conservativity_check(const SimplicialMap& f, int M) {
  ConservativityReport rep;
  if (M > f.source.truncation) M = f.source.truncation;

  ChainMap cf = normalized_chains_map(f);
  rep.precondition_ok = true;
  for (int n = 0; n <= M; ++n)
    if (!is_isomorphism(cf.level_maps[n])) {
      rep.precondition_ok = false;
      rep.failed_level = n;
      return rep;
    }

  rep.conclusion_ok = true;
  for (int n = 0; n <= M; ++n)
    if (!is_isomorphism(f.level_maps[n])) {
      rep.conclusion_ok = false;
      rep.failed_level = n;
    }

  // Exercise the path/loop ladder one level down: both outer verticals and
  // the middle one must again be isomorphisms, and the two squares commute.
  rep.ladder_ok = true;
  if (M >= 1) {
    SimplicialAbGroup ps = path_object(truncate(f.source, M));
    SimplicialAbGroup pt = path_object(truncate(f.target, M));
    SimplicialMap pf;
    pf.source = ps;
    pf.target = pt;
    for (int k = 0; k <= M - 1; ++k) pf.level_maps.push_back(f.level_maps[k + 1]);

    LoopObject os = loop_object(truncate(f.source, M));
    LoopObject ot = loop_object(truncate(f.target, M));
    SimplicialMap bs = boundary_map(truncate(f.source, M));
    SimplicialMap bt = boundary_map(truncate(f.target, M));
    for (int k = 0; k <= M - 1; ++k) {
      AbHom of = corestrict(compose(pf.level_maps[k], os.inclusion.level_maps[k]),
                            ot.inclusion.level_maps[k]);
      if (!is_isomorphism(of) || !is_isomorphism(pf.level_maps[k]))
        rep.ladder_ok = false;
      if (!equal_as_maps(compose(ot.inclusion.level_maps[k], of),
                         compose(pf.level_maps[k], os.inclusion.level_maps[k])))
        rep.ladder_ok = false;
      if (!equal_as_maps(compose(bt.level_maps[k], pf.level_maps[k]),
                         compose(f.level_maps[k], bs.level_maps[k])))
        rep.ladder_ok = false;
    }
  }
  return rep;
}

}  // namespace dk
