#pragma once
// Finite poset-enriched 2-categories and the combinatorial tower built on
// them: subset composition categories, scaled nerves, lax slices, slice
// posets of the simplex category, cubes, the glued marked complex, and the
// machine-readable obligation report.

#include "dk/simplex.hpp"
#include "dk/sset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dk {

struct HomPoset {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;  // leq[a][b]
  int size() const { return static_cast<int>(labels.size()); }
};

// 2-category whose hom-categories are finite posets.  comp[x][y][z][f][g] is
// the index of (g after f) in hom(x,z) for f in hom(x,y), g in hom(y,z).
struct PosetEnriched2Cat {
  std::vector<std::string> objects;
  std::vector<std::vector<HomPoset>> hom;
  std::vector<int> identities;  // identities[x] indexes hom[x][x]
  std::vector<std::vector<std::vector<std::vector<std::vector<int>>>>> comp;

  int num_objects() const { return static_cast<int>(objects.size()); }
  int compose1(int x, int y, int z, int f, int g) const { return comp[x][y][z][f][g]; }
  bool leq1(int x, int y, int a, int b) const { return hom[x][y].leq[a][b]; }
};

// Throws std::logic_error on any failed axiom (partial orders, unit laws,
// associativity, monotonicity of composition).
void check_two_category(const PosetEnriched2Cat& c);

struct TwoFunctor {
  std::vector<int> obj;                            // source object -> target object
  std::vector<std::vector<std::vector<int>>> map1;  // [x][y][f] -> hom index
};
bool is_two_functor(const PosetEnriched2Cat& src, const PosetEnriched2Cat& dst,
                    const TwoFunctor& f);
TwoFunctor identity_two_functor(const PosetEnriched2Cat& c);
TwoFunctor compose(const PosetEnriched2Cat& a, const PosetEnriched2Cat& b,
                   const PosetEnriched2Cat& c, const TwoFunctor& g,
                   const TwoFunctor& f);  // g after f: a -> b -> c

std::string subset_label(const std::vector<int>& s);

// Subset-composition 2-category on a finite chain I: objects are elements,
// hom(i,j) is the inclusion-ordered poset of subsets with min i and max j,
// composition is union.
struct SigmaCat {
  PosetEnriched2Cat cat;
  std::vector<int> elements;  // I, strictly increasing
  std::vector<std::vector<std::vector<std::vector<int>>>> subsets;  // [i][j][k]
  int hom_index(int i, int j, const std::vector<int>& s) const;  // -1 if absent
};
SigmaCat sigma(const std::vector<int>& I);

// Direct image along alpha (positions of src.elements into dst.elements).
TwoFunctor sigma_map(const SigmaCat& src, const SigmaCat& dst, const MonotoneMap& alpha);

// Scaled nerve: level-n simplices are strict 2-functors out of the
// subset-composition category on [n], recorded as a vertex tuple plus an edge
// matrix satisfying all triangle relations f_ik <= f_jk . f_ij.  Triangles
// with equality are marked thin.  Throws std::runtime_error when the simplex
// count would exceed the budget.
struct ScaledNerve {
  TruncSset sset;
  std::vector<std::vector<std::vector<int>>> verts;  // [k][x] -> k+1 object ids
  std::vector<std::vector<std::vector<int>>> edges;  // [k][x] -> hom ids, pairs (i,j) i<j lex
};
ScaledNerve scaled_nerve_data(const PosetEnriched2Cat& c, int M, long long budget = 500000);
TruncSset scaled_nerve(const PosetEnriched2Cat& c, int M, long long budget = 500000);
std::string scaled_simplex_label(const std::vector<int>& verts, const std::vector<int>& edges);

// Lax slices.  Over: objects are arrows into c, a morphism (x,phi) -> (y,psi)
// is f: x -> y with psi.f <= phi.  Under: objects are arrows out of c, a
// morphism is f with f.phi <= psi.  2-cells ordered as in the ambient homs.
struct LaxSlice {
  PosetEnriched2Cat cat;
  TwoFunctor forgetful;
  std::vector<int> arrow_object;  // slice object -> ambient endpoint x
  std::vector<int> arrow_index;   // index of the structure arrow in its hom
};
LaxSlice lax_over(const PosetEnriched2Cat& c, int obj);
LaxSlice lax_under(const PosetEnriched2Cat& c, int obj);

// The poset of monotone maps [m] -> [n] (m <= M_obj) where phi <= phi' iff
// m <= m' and phi(i) <= phi'(i + m' - m) for all i.
struct SlicePoset {
  FinPoset poset;
  std::vector<MonotoneMap> objects;
  int index_of(const MonotoneMap& phi) const;  // -1 if absent
};
SlicePoset n_over_slice(int n, int M_obj);

// Lax slice of the 2-categorical simplex category (2-cells reversed) over
// [n]: hom(phi, phi') = all monotone f with phi <= phi'.f pointwise, ordered
// by the reversed pointwise order on f.  The slice poset above includes via
// the maps f: i -> i + (m'-m).
struct DeltaPrimeSlice {
  PosetEnriched2Cat cat;
  std::vector<MonotoneMap> objects;
  std::vector<std::vector<std::vector<MonotoneMap>>> homs;  // [x][y][k]
  int object_index(const MonotoneMap& phi) const;
  int hom_index(int x, int y, const MonotoneMap& f) const;
};
DeltaPrimeSlice delta_prime_slice(int n, int M_obj);

// Cubes in n_over_slice(k, k): vertex i is indexed by the binary expansion of
// i with the first coordinate most significant.
struct Cube {
  int dimension = 0;
  std::vector<int> vertices;  // 2^dimension poset element indices
};
Cube cube_f(int k);
Cube cube_b(int k);
Cube cube_q(int k);  // dimension k+1; first coordinate selects b (0) or f (1)
// Every edge (single bit 0 -> 1) realizes a <= relation in the poset.
bool cube_edges_valid(const Cube& c, const FinPoset& p);

// The 1-category of subsets S of I with min S = min I; a morphism S -> T is
// a subset H with min H = max S, max H = max T, T contained in S united H;
// composition is union.
struct GCategory {
  std::vector<int> elements;                // I
  std::vector<std::vector<int>> objects;    // subsets, sorted
  std::vector<std::vector<std::vector<std::vector<int>>>> morphisms;  // [a][b][k]
  int object_index(const std::vector<int>& s) const;
};
GCategory g_category(const std::vector<int>& I);
void check_g_category(const GCategory& g);

// Pullback data for I inside J: pairs a connecting subset T (min T = min J,
// max T = min I) with G(J) data; objects map by union-then-intersect.  The
// morphism image can fail to be a morphism for general I; the checker reports
// whether the whole assignment is strictly functorial.
std::vector<int> g_pullback_object(const std::vector<int>& I, const std::vector<int>& T,
                                   const std::vector<int>& S);
std::optional<std::vector<int>> g_pullback_morphism(
    const std::vector<int>& I, const std::vector<int>& T, const std::vector<int>& Tp,
    const std::vector<int>& S, const std::vector<int>& Sp, const std::vector<int>& H);
bool g_pullback_functorial(const std::vector<int>& I, const std::vector<int>& J);

// The glued complex: scaled nerve of the lax simplex slice, with an interval
// times the nerve of the slice poset attached along its {0}-end.  Edges of
// the scaled-nerve part whose triangle commutes strictly are marked.
struct MPoset {
  TruncSset sset;
  SsetMap r;  // from the scaled nerve part
  SsetMap s;  // from the {1}-end of the cylinder
  TruncSset nerve_part;     // scaled nerve of the lax slice
  TruncSset cylinder_part;  // interval times slice-poset nerve
  TruncSset slice_nerve;    // nerve of the slice poset
};
MPoset m_poset(int n, int M_obj, int M = 2, long long budget = 500000);

// Proof-obligation schema for level n: which vertices must be zero, which
// pulled-back cubes must be limit cubes (q) or biCartesian cubes (f), and
// which strictly commuting triangle edges must be Cartesian.
struct CubeObligation {
  MonotoneMap sigma;                  // nondegenerate [k] into [n]
  std::vector<std::string> vertices;  // value strings, bit-lex order
};
struct CartesianEdgeObligation {
  std::string from, to, via;  // value strings of phi, phi', f
};
struct NerveConditionReport {
  int n = 0;
  std::vector<std::string> zero_obligations;
  std::vector<CubeObligation> limit_cubes;        // q-cubes per nondegenerate sigma
  std::vector<CubeObligation> bicartesian_cubes;  // f-cubes per nondegenerate sigma
  std::vector<CartesianEdgeObligation> cartesian_edges;
};
NerveConditionReport nerve_condition_report(int n, int M_obj);

// Value string of a monotone map: digits joined, ';'-separated if any value
// exceeds 9 (matches the simplex labeling convention).
std::string value_string(const MonotoneMap& phi);

}  // namespace dk
