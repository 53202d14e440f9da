#include "dk/abelian.hpp"

#include <stdexcept>

namespace dk {

FpAbelianGroup FpAbelianGroup::cyclic(const Int& n) {
  IntMatrix r(1, n == 0 ? 0 : 1);
  if (n != 0) r.at(0, 0) = n;
  return FpAbelianGroup(1, std::move(r));
}

GroupNormalForm normal_form(const FpAbelianGroup& g) {
  SnfOptions o;
  o.want_u = o.want_v = false;
  SnfResult f = smith_normal_form(g.relations, o);
  GroupNormalForm nf;
  nf.free_rank = g.generators - f.rank;
  for (int i = 0; i < f.rank; ++i)
    if (f.s.at(i, i) >= 2) nf.invariant_factors.push_back(f.s.at(i, i));
  return nf;
}

bool is_trivial(const FpAbelianGroup& g) {
  if (g.generators == 0) return true;
  GroupNormalForm nf = normal_form(g);
  return nf.free_rank == 0 && nf.invariant_factors.empty();
}

AbHom::AbHom(FpAbelianGroup src, FpAbelianGroup tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
  if (matrix.rows() != target.generators || matrix.cols() != source.generators)
    throw std::invalid_argument("hom matrix shape mismatch");
}

AbHom identity_hom(const FpAbelianGroup& g) {
  return AbHom(g, g, IntMatrix::identity(g.generators));
}

AbHom zero_hom(const FpAbelianGroup& src, const FpAbelianGroup& tgt) {
  return AbHom(src, tgt, IntMatrix::zero(tgt.generators, src.generators));
}

AbHom compose(const AbHom& f, const AbHom& g) {
  if (g.target != f.source) throw std::invalid_argument("compose: middle group mismatch");
  return AbHom(g.source, f.target, f.matrix * g.matrix);
}

static void require_parallel(const AbHom& f, const AbHom& g) {
  if (f.source != g.source || f.target != g.target)
    throw std::invalid_argument("parallel homs required");
}

AbHom hom_add(const AbHom& f, const AbHom& g) {
  require_parallel(f, g);
  return AbHom(f.source, f.target, f.matrix + g.matrix);
}

AbHom hom_sub(const AbHom& f, const AbHom& g) {
  require_parallel(f, g);
  return AbHom(f.source, f.target, f.matrix - g.matrix);
}

AbHom hom_negate(const AbHom& f) { return AbHom(f.source, f.target, -f.matrix); }

AbHom hom_scale(const Int& c, const AbHom& f) { return AbHom(f.source, f.target, f.matrix.scaled(c)); }

// Columnwise membership of cols in the integer span of span's columns.
static bool cols_in_span(const IntMatrix& span, const IntMatrix& cols) {
  if (cols.cols() == 0) return true;
  if (cols.is_zero()) return true;
  return SnfSolver(span).solve_matrix(cols).has_value();
}

bool is_well_defined(const AbHom& f) {
  return cols_in_span(f.target.relations, f.matrix * f.source.relations);
}

bool equal_as_maps(const AbHom& f, const AbHom& g) {
  require_parallel(f, g);
  return cols_in_span(f.target.relations, f.matrix - g.matrix);
}

bool is_zero_map(const AbHom& f) { return cols_in_span(f.target.relations, f.matrix); }

bool elements_equal(const FpAbelianGroup& g, const std::vector<Int>& a, const std::vector<Int>& b) {
  if (static_cast<int>(a.size()) != g.generators || static_cast<int>(b.size()) != g.generators)
    throw std::invalid_argument("element length mismatch");
  std::vector<Int> d(a.size());
  for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return cols_in_span(g.relations, IntMatrix::column(d));
}

bool is_zero_element(const FpAbelianGroup& g, const std::vector<Int>& a) {
  return elements_equal(g, a, std::vector<Int>(a.size(), Int(0)));
}

SimplifiedPresentation simplify(const FpAbelianGroup& g) {
  SnfOptions o;
  o.want_u = true;
  o.want_u_inv = true;
  o.want_v = false;
  SnfResult f = smith_normal_form(g.relations, o);
  // In coordinates y = U x the relations become diag(d_i); coordinates with
  // d_i = 1 are trivial and get dropped.
  std::vector<int> kept;
  std::vector<Int> torsion;
  for (int i = 0; i < g.generators; ++i) {
    Int d = i < f.rank ? f.s.at(i, i) : Int(0);
    if (d == 1) continue;
    kept.push_back(i);
    if (d >= 2) torsion.push_back(d);
  }
  const int k = static_cast<int>(kept.size());
  IntMatrix rels(k, static_cast<int>(torsion.size()));
  {
    int col = 0;
    for (int row = 0; row < k; ++row) {
      Int d = kept[row] < f.rank ? f.s.at(kept[row], kept[row]) : Int(0);
      if (d >= 2) rels.at(row, col++) = d;
    }
  }
  SimplifiedPresentation out;
  out.group = FpAbelianGroup(k, std::move(rels));
  out.fwd = IntMatrix(k, g.generators);
  out.bwd = IntMatrix(g.generators, k);
  for (int r = 0; r < k; ++r)
    for (int j = 0; j < g.generators; ++j) {
      out.fwd.at(r, j) = f.u.at(kept[r], j);
      out.bwd.at(j, r) = f.u_inv.at(j, kept[r]);
    }
  return out;
}

Subgroup kernel(const AbHom& f) {
  const IntMatrix& F = f.matrix;
  const IntMatrix& RH = f.target.relations;
  const int g = f.source.generators;
  // Solutions of F x = RH y: the x-projections generate the preimage lattice
  // {x : F x lies in the relation span}.
  IntMatrix big = F.hstack(-RH);
  IntMatrix ker = kernel_basis(big);
  IntMatrix P = ker.block(0, g, 0, ker.cols());
  // Relations: combinations of these generators that land in source relations.
  IntMatrix rel_big = P.hstack(-f.source.relations);
  IntMatrix rel_ker = kernel_basis(rel_big);
  IntMatrix C = rel_ker.block(0, P.cols(), 0, rel_ker.cols());
  FpAbelianGroup raw(P.cols(), std::move(C));
  SimplifiedPresentation sp = simplify(raw);
  Subgroup out;
  out.group = sp.group;
  out.inclusion = AbHom(sp.group, f.source, P * sp.bwd);
  return out;
}

Quotient cokernel(const AbHom& f) {
  FpAbelianGroup raw(f.target.generators, f.matrix.hstack(f.target.relations));
  SimplifiedPresentation sp = simplify(raw);
  Quotient out;
  out.group = sp.group;
  out.projection = AbHom(f.target, sp.group, sp.fwd);
  return out;
}

Subgroup subgroup_generated(const FpAbelianGroup& ambient, const IntMatrix& columns) {
  if (columns.rows() != ambient.generators)
    throw std::invalid_argument("subgroup generator shape mismatch");
  IntMatrix rel_big = columns.hstack(-ambient.relations);
  IntMatrix rel_ker = kernel_basis(rel_big);
  IntMatrix C = rel_ker.block(0, columns.cols(), 0, rel_ker.cols());
  FpAbelianGroup raw(columns.cols(), std::move(C));
  SimplifiedPresentation sp = simplify(raw);
  Subgroup out;
  out.group = sp.group;
  out.inclusion = AbHom(sp.group, ambient, columns * sp.bwd);
  return out;
}

Subgroup image_subgroup(const AbHom& f) { return subgroup_generated(f.target, f.matrix); }

Subgroup intersection_of_kernels(const FpAbelianGroup& source, const std::vector<AbHom>& fs) {
  if (fs.empty()) {
    Subgroup out;
    out.group = source;
    out.inclusion = identity_hom(source);
    return out;
  }
  std::vector<FpAbelianGroup> targets;
  targets.reserve(fs.size());
  for (const auto& f : fs) {
    if (f.source != source) throw std::invalid_argument("intersection_of_kernels: source mismatch");
    targets.push_back(f.target);
  }
  DirectSum sum = direct_sum(targets);
  AbHom stacked = tuple_into_sum(sum, fs);
  return kernel(stacked);
}

bool is_isomorphism(const AbHom& f) {
  if (!is_well_defined(f)) return false;
  return kernel(f).group.generators == 0 && cokernel(f).group.generators == 0;
}

AbHom inverse_of_isomorphism(const AbHom& f) {
  // Solve f(x_j) = e_j modulo target relations for each target generator.
  IntMatrix big = f.matrix.hstack(f.target.relations);
  SnfSolver s(big);
  IntMatrix inv(f.source.generators, f.target.generators);
  for (int j = 0; j < f.target.generators; ++j) {
    std::vector<Int> e(f.target.generators, Int(0));
    e[j] = 1;
    auto x = s.solve(e);
    if (!x) throw std::invalid_argument("inverse_of_isomorphism: hom is not surjective");
    for (int i = 0; i < f.source.generators; ++i) inv.at(i, j) = (*x)[i];
  }
  AbHom g(f.target, f.source, std::move(inv));
  if (!is_well_defined(g) || !equal_as_maps(compose(g, f), identity_hom(f.source)) ||
      !equal_as_maps(compose(f, g), identity_hom(f.target)))
    throw std::invalid_argument("inverse_of_isomorphism: hom is not an isomorphism");
  return g;
}

SubgroupSolver::SubgroupSolver(const AbHom& inclusion)
    : incl_(inclusion), solver_(inclusion.matrix.hstack(inclusion.target.relations)) {}

std::optional<IntMatrix> SubgroupSolver::try_corestrict_matrix(const IntMatrix& cols) const {
  auto sol = solver_.solve_matrix(cols);
  if (!sol) return std::nullopt;
  return sol->block(0, incl_.source.generators, 0, cols.cols());
}

AbHom SubgroupSolver::corestrict(const AbHom& f) const {
  if (f.target != incl_.target) throw std::invalid_argument("corestrict: ambient mismatch");
  auto x = try_corestrict_matrix(f.matrix);
  if (!x) throw std::invalid_argument("corestrict: image not contained in subgroup");
  return AbHom(f.source, incl_.source, std::move(*x));
}

bool SubgroupSolver::contains(const std::vector<Int>& ambient_element) const {
  return try_corestrict_matrix(IntMatrix::column(ambient_element)).has_value();
}

bool SubgroupSolver::contains_columns(const IntMatrix& cols) const {
  return try_corestrict_matrix(cols).has_value();
}

AbHom corestrict(const AbHom& f, const AbHom& inclusion) {
  return SubgroupSolver(inclusion).corestrict(f);
}

bool subgroups_equal(const AbHom& incl_a, const AbHom& incl_b) {
  if (incl_a.target != incl_b.target) throw std::invalid_argument("subgroups_equal: ambient mismatch");
  return SubgroupSolver(incl_b).contains_columns(incl_a.matrix) &&
         SubgroupSolver(incl_a).contains_columns(incl_b.matrix);
}

DirectSum direct_sum(const std::vector<FpAbelianGroup>& parts) {
  int gens = 0, rels = 0;
  for (const auto& p : parts) {
    gens += p.generators;
    rels += p.relations.cols();
  }
  IntMatrix R(gens, rels);
  int go = 0, ro = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.generators; ++i)
      for (int j = 0; j < p.relations.cols(); ++j) R.at(go + i, ro + j) = p.relations.at(i, j);
    go += p.generators;
    ro += p.relations.cols();
  }
  DirectSum out;
  out.group = FpAbelianGroup(gens, std::move(R));
  go = 0;
  for (const auto& p : parts) {
    IntMatrix in(gens, p.generators), pr(p.generators, gens);
    for (int i = 0; i < p.generators; ++i) {
      in.at(go + i, i) = 1;
      pr.at(i, go + i) = 1;
    }
    out.inclusions.emplace_back(p, out.group, std::move(in));
    out.projections.emplace_back(out.group, p, std::move(pr));
    go += p.generators;
  }
  return out;
}

AbHom tuple_into_sum(const DirectSum& sum, const std::vector<AbHom>& fs) {
  if (fs.size() != sum.inclusions.size()) throw std::invalid_argument("tuple_into_sum arity mismatch");
  if (fs.empty()) throw std::invalid_argument("tuple_into_sum: empty family");
  IntMatrix m = IntMatrix::zero(sum.group.generators, fs[0].source.generators);
  for (size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].source != fs[0].source) throw std::invalid_argument("tuple_into_sum: source mismatch");
    if (fs[i].target != sum.inclusions[i].source)
      throw std::invalid_argument("tuple_into_sum: factor mismatch");
    m = m + sum.inclusions[i].matrix * fs[i].matrix;
  }
  return AbHom(fs[0].source, sum.group, std::move(m));
}

AbHom cotuple_from_sum(const DirectSum& sum, const std::vector<AbHom>& fs) {
  if (fs.size() != sum.projections.size())
    throw std::invalid_argument("cotuple_from_sum arity mismatch");
  if (fs.empty()) throw std::invalid_argument("cotuple_from_sum: empty family");
  IntMatrix m = IntMatrix::zero(fs[0].target.generators, sum.group.generators);
  for (size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].target != fs[0].target) throw std::invalid_argument("cotuple_from_sum: target mismatch");
    if (fs[i].source != sum.projections[i].target)
      throw std::invalid_argument("cotuple_from_sum: factor mismatch");
    m = m + fs[i].matrix * sum.projections[i].matrix;
  }
  return AbHom(sum.group, fs[0].target, std::move(m));
}

AbHom block_hom(const DirectSum& src, const DirectSum& dst,
                const std::vector<std::vector<const AbHom*>>& blocks) {
  IntMatrix m = IntMatrix::zero(dst.group.generators, src.group.generators);
  for (size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].size() != src.inclusions.size()) throw std::invalid_argument("block_hom ragged blocks");
    for (size_t i = 0; i < blocks[j].size(); ++i) {
      const AbHom* f = blocks[j][i];
      if (!f) continue;
      if (f->source != src.inclusions[i].source || f->target != dst.inclusions[j].source)
        throw std::invalid_argument("block_hom block shape mismatch");
      m = m + dst.inclusions[j].matrix * f->matrix * src.projections[i].matrix;
    }
  }
  return AbHom(src.group, dst.group, std::move(m));
}

}  // namespace dk
