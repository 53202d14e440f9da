#pragma once
// Finite 1-categories with globally indexed arrows and a total composition
// table, functors between them, category nerves, and slice categories.

#include "dk/sset.hpp"

#include <string>
#include <vector>

namespace dk {

struct FinArrow {
  int src = 0;
  int tgt = 0;
  std::string label;
};

// Arrows include the identities; after[g][f] = g . f when tgt(f) = src(g),
// -1 otherwise.  Object and arrow labels must be unique.
struct FinCategory {
  std::vector<std::string> objects;
  std::vector<FinArrow> arrows;
  std::vector<int> identity;               // per object
  std::vector<std::vector<int>> after;

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  int compose(int g, int f) const { return after[g][f]; }  // g after f
};

// Throws std::logic_error with a description of the first failure.
void check_fin_category(const FinCategory& c);

bool arrow_is_iso(const FinCategory& c, int a);

FinCategory discrete_category(const std::vector<std::string>& objs);
FinCategory terminal_category();
FinCategory arrow_category();  // two objects 0 -> 1
FinCategory poset_category(const FinPoset& p);

// Object and arrow assignments; functoriality is a checkable property.
struct FinFunctor {
  std::vector<int> obj;
  std::vector<int> arr;
};

bool is_fin_functor(const FinCategory& a, const FinCategory& b, const FinFunctor& f);
FinFunctor identity_fin_functor(const FinCategory& a);
// g after f as assignments (no category arguments needed).
FinFunctor compose_fin_functors(const FinFunctor& g, const FinFunctor& f);
bool fin_functors_equal(const FinFunctor& f, const FinFunctor& g);
FinFunctor constant_fin_functor(const FinCategory& a, const FinCategory& b, int obj);

// Nerve: level 0 lists objects, level k lists composable chains (a_1,...,a_k)
// in lexicographic arrow-index order.  Inner faces compose, outer faces drop.
struct CatNerve {
  TruncSset sset;
  std::vector<std::vector<std::vector<int>>> chains;  // [k][x]; level 0: {object}

  // Index of a chain at level k (the single-object list at level 0); -1 if absent.
  int chain_index(int k, const std::vector<int>& chain) const;
  // Object indices c_0,...,c_k along the chain at level k.
  std::vector<int> chain_objects(const FinCategory& c, int k, int x) const;
};

CatNerve nerve_of_category(const FinCategory& c, int M);

// Image of the level-k simplex x of na under the functor f, as an index in nb.
int nerve_apply_functor(const FinCategory& a, const FinCategory& b, const FinFunctor& f,
                        const CatNerve& na, const CatNerve& nb, int k, int x);
// The induced simplicial map N(f) : N(a) -> N(b).
SsetMap nerve_functor_map(const FinCategory& a, const FinCategory& b, const FinFunctor& f,
                          const CatNerve& na, const CatNerve& nb);

// Slice c/tgt: objects are the arrows into tgt, morphisms the commuting
// triangles.  object_arrow and morphism_arrow give the underlying base data.
struct SliceCategory {
  FinCategory cat;
  FinFunctor forgetful;              // slice -> base, on the nose
  std::vector<int> object_arrow;     // slice object -> arrow into tgt
  std::vector<int> morphism_arrow;   // slice arrow -> underlying base arrow
};

SliceCategory slice_over(const FinCategory& c, int tgt);

// Copy of the bottom M levels, markings included.
TruncSset truncate_sset(const TruncSset& x, int M);

}  // namespace dk
