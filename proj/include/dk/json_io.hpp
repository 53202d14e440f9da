#pragma once
// JSON readers/writers for the library types plus DOT export for 1-skeleta,
// posets, and cubes.  Readers throw std::invalid_argument on malformed input;
// writers emit integers as JSON numbers when they fit and as decimal strings
// otherwise.

#include <json.hpp>

#include <string>
#include <vector>

#include "dk/groth.hpp"
#include "dk/k0bridge.hpp"

namespace dk {

using nlohmann::json;

json int_to_json(const Int& v);
Int int_from_json(const json& j);
json ints_to_json(const std::vector<Int>& v);
std::vector<Int> ints_from_json(const json& j);

json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);  // {"rows","cols","entries"} or bare 2D array

json group_to_json(const FpAbelianGroup& g);
FpAbelianGroup group_from_json(const json& j);

json complex_to_json(const ChainComplexFp& b);
ChainComplexFp complex_from_json(const json& j);  // validated

json simplicial_group_to_json(const SimplicialAbGroup& a);
SimplicialAbGroup simplicial_group_from_json(const json& j);  // validated

SimplicialMap simplicial_map_from_json(const json& j);  // {"source","target","levels"}

json sset_to_json(const TruncSset& x);
TruncSset sset_from_json(const json& j);

json sset_map_to_json(const SsetMap& f);
SsetMap sset_map_from_json(const json& j);

json fibered_to_json(const FiberedSset& f);
FiberedSset fibered_from_json(const json& j);

json category_to_json(const FinCategory& c);
FinCategory category_from_json(const json& j);  // validated

json functor_to_json(const FinFunctor& f);
FinFunctor functor_from_json(const json& j);

CatValuedFunctor cat_valued_from_json(const json& j);  // validated

json two_cat_to_json(const PosetEnriched2Cat& c);
PosetEnriched2Cat two_cat_from_json(const json& j);  // validated

LaxCatValuedFunctor lax_cat_valued_from_json(const json& j);  // validated

json poset_to_json(const FinPoset& p);
FinPoset poset_from_json(const json& j);

json k0_simplex_to_json(const K0Simplex& s);
K0Simplex k0_simplex_from_json(const json& j);

json rank_triangle_to_json(const RankTriangle& t);
RankTriangle rank_triangle_from_json(const json& j);

json obligation_report_to_json(const NerveConditionReport& r);

// DOT digraph of the 1-skeleton; marked nondegenerate edges drawn bold.
std::string dot_of_sset(const TruncSset& x);
// DOT of the covering relation.
std::string dot_of_poset(const FinPoset& p);
// DOT of a cube: vertices labeled by poset elements, edges along bit flips.
std::string dot_of_cube(const Cube& c, const SlicePoset& p);

}  // namespace dk
