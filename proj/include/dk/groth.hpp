#pragma once
// Grothendieck constructions over finite bases: the fibered simplicial set
// chi(F) of a category-valued functor, the mapping-space functor gamma, the
// unit eta with its one-sided inverse ev, the lax variant over a
// poset-enriched 2-category, and the comparison map between the two.

#include "dk/fincat.hpp"
#include "dk/twocat.hpp"

#include <vector>

namespace dk {

// Contravariant strict functor into categories: fiber per object, transition
// per arrow with F(id) = id and F(g.f) = F(f).F(g) on the nose.
struct CatValuedFunctor {
  FinCategory base;
  std::vector<FinCategory> fiber;
  std::vector<FinFunctor> transition;  // per arrow a : x -> y, fiber[y] -> fiber[x]
};

// Throws std::logic_error on a strictness or shape failure.
void check_cat_valued_functor(const CatValuedFunctor& f);

// Marked total space over a marked base with a levelwise projection.
struct FiberedSset {
  TruncSset total;
  TruncSset base;
  SsetMap projection;
};

// chi(F): a level-n simplex is a base chain c_0 -> ... -> c_n together with
// one simplex y_m of N(F(c_m)) in dimension n - m for each m, subject to
// d_0 y_m = F(c_m -> c_{m+1})(y_{m+1}).  Edges whose y_0 component is an
// isomorphism are marked.
struct ChiData {
  FiberedSset fs;
  CatNerve base_nerve;
  std::vector<CatNerve> fiber_nerves;                // per base object
  std::vector<std::vector<int>> base_of;             // [k][x]
  std::vector<std::vector<std::vector<int>>> fiber_of;  // [k][x][m]

  int index_of(int k, int base, const std::vector<int>& ys) const;  // -1 if absent
};

ChiData chi(const CatValuedFunctor& f, int M, long long budget = 500000);

// Total-space indices lying over the constant chain at c, per level.
std::vector<std::vector<int>> chi_fiber_indices(const CatValuedFunctor& f, const ChiData& x, int c);
// N(F(c)) -> total, y |-> (constant chain, (y, d_0 y, d_0^2 y, ...)); a
// levelwise bijection onto chi_fiber_indices(f, x, c).
SsetMap chi_fiber_embedding(const CatValuedFunctor& f, const ChiData& x, int c);

// Fiberwise functor map chi(F) -> chi(G) induced by components t[c] : F(c) -> G(c)
// commuting with the transitions.
struct CatValuedNatTrans {
  std::vector<FinFunctor> component;
};
void check_cat_valued_nat_trans(const CatValuedFunctor& f, const CatValuedFunctor& g,
                                const CatValuedNatTrans& t);
SsetMap chi_map(const CatValuedFunctor& f, const CatValuedFunctor& g,
                const CatValuedNatTrans& t, const ChiData& xf, const ChiData& xg);

// gamma(X, c): level k lists the simplicial maps Delta^k x N(C_{/c}) -> X
// over N(C) that send every edge with degenerate Delta^k component to a
// marked edge of X.
struct GammaData {
  TruncSset sset;
  SliceCategory slice;
  CatNerve slice_nerve;                 // all edges marked
  SsetMap slice_to_base;                // N(C_{/c}) -> N(C)
  std::vector<TruncSset> domains;       // per k <= M_map
  std::vector<SsetMap> domain_over;     // per k, domain -> N(C)
  std::vector<std::vector<SsetMap>> maps;  // [k][i] : domains[k] -> X.total

  int index_of(int k, const SsetMap& g) const;  // -1 if absent
};

GammaData gamma(const FinCategory& c, const FiberedSset& x, int obj, int m_map,
                long long budget = 500000);

// eta : N(F(c)) -> gamma(chi(F), c) sending y to the map whose value on a
// product simplex (phi, slice chain) restricts y along phi and pushes the
// tail {m..j} through the transition of the m-th slice arrow.
SsetMap eta_map(const CatValuedFunctor& f, const ChiData& x, const GammaData& g, int obj);
// ev : gamma(chi(F), c) -> N(F(c)), evaluation at the identity vertex of the
// slice.  ev after eta is the identity on the nose.
SsetMap ev_map(const CatValuedFunctor& f, const ChiData& x, const GammaData& g, int obj);

// Enrichment-respecting category-valued data on a poset-enriched 2-category:
// a fiber per object and a contravariant transition per 1-morphism, strict on
// identities and composites.  No action on 2-cells is recorded.
struct LaxCatValuedFunctor {
  PosetEnriched2Cat base;
  std::vector<FinCategory> fiber;
  std::vector<std::vector<std::vector<FinFunctor>>> transition;  // [x][y][f] : fiber[y] -> fiber[x]
};

void check_lax_cat_valued_functor(const LaxCatValuedFunctor& f);

// lax_chi(F): a level-n simplex is a scaled-nerve simplex sigma together with
// a functor xi_m : G({m,...,n}) -> F(sigma(m)) for each m.  Object values are
// forced as xi_m(S) = F(sigma(S))(xi_{max S}) with sigma(S) the edge-composite
// along S; morphism values with source other than the minimum singleton are
// forced through the corresponding singleton morphism one level up; the free
// choices are the vertex objects and the arrows out of each {m}, constrained
// by functoriality.  Edges with an isomorphism arrow component are marked.
struct LaxChiData {
  FiberedSset fs;
  ScaledNerve base;
  std::vector<std::vector<int>> base_of;               // [k][x]
  std::vector<std::vector<std::vector<int>>> vertex_of;  // [k][x][m]: object of fiber[sigma(m)]
  // [k][x][m][h]: arrow for the h-th non-identity morphism out of {m} in
  // g_category({m,...,k}), morphisms enumerated by target object then table order.
  std::vector<std::vector<std::vector<std::vector<int>>>> arrows_of;

  int index_of(int k, int base, const std::vector<int>& verts,
               const std::vector<std::vector<int>>& arrows) const;  // -1 if absent
};

LaxChiData lax_chi(const LaxCatValuedFunctor& f, int M, long long budget = 500000);

// View a finite 1-category as a poset-enriched 2-category with discrete homs,
// and transport category-valued data along the identification.
PosetEnriched2Cat two_cat_of_fin_category(const FinCategory& c);
LaxCatValuedFunctor lax_of_cat_valued(const CatValuedFunctor& f);

// Comparison chi(F) -> lax_chi(F) over a finite 1-category: restriction of
// the fiber data along max : G(I) -> I.  Returns the total-space map and the
// base-space map (category nerve -> scaled nerve).
struct ChiLaxComparison {
  SsetMap total_map;
  SsetMap base_map;
};
ChiLaxComparison compare_chi_lax(const CatValuedFunctor& f, const ChiData& x,
                                 const LaxChiData& l);

// Fiberwise map lax_chi(F) -> lax_chi(G) induced by a natural transformation.
SsetMap lax_chi_map(const CatValuedFunctor& f, const CatValuedFunctor& g,
                    const CatValuedNatTrans& t, const LaxChiData& lf, const LaxChiData& lg);

}  // namespace dk
