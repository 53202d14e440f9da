#pragma once
// The classical correspondence between truncated connective chain complexes
// and truncated simplicial abelian groups: normalized chains, the nerve, the
// unit/counit isomorphisms, loop compatibility, and the conservativity
// harness.

#include "dk/abelian.hpp"
#include "dk/simplicial.hpp"

#include <vector>

namespace dk {

struct ChainComplexFp {
  int truncation = 0;
  std::vector<FpAbelianGroup> levels;   // 0..M
  std::vector<AbHom> differentials;     // index k-1 holds d_k : B_k -> B_{k-1}

  const FpAbelianGroup& level(int k) const { return levels[k]; }
  const AbHom& diff(int k) const { return differentials[k - 1]; }
};

void check_chain_complex(const ChainComplexFp& b);
bool complexes_equal(const ChainComplexFp& a, const ChainComplexFp& b);

// g concentrated in one degree, zero elsewhere.
ChainComplexFp single_group_complex(const FpAbelianGroup& g, int degree, int M);

ChainComplexFp truncate_complex(const ChainComplexFp& b, int new_truncation);

// Levelwise direct sum with block-diagonal differentials.
ChainComplexFp complex_direct_sum(const std::vector<ChainComplexFp>& parts);

struct ChainMap {
  ChainComplexFp source;
  ChainComplexFp target;
  std::vector<AbHom> level_maps;
};

bool is_chain_map(const ChainMap& f);
bool is_levelwise_isomorphism(const ChainMap& f);

// Homology at level k: ker(d_k) / im(d_{k+1}), with the boundary maps taken
// as zero beyond the ends.
FpAbelianGroup homology(const ChainComplexFp& b, int k);

// Normalized chains (A-bar levels with the 0th face as differential),
// keeping the level inclusions into A.
struct NormalizedChains {
  ChainComplexFp complex;
  std::vector<Subgroup> parts;  // parts[n].inclusion : C(A)_n -> A_n
};
NormalizedChains normalized_chains_data(const SimplicialAbGroup& a);
ChainComplexFp normalized_chains(const SimplicialAbGroup& a);

// The induced map on normalized chains of a simplicial map.
ChainMap normalized_chains_map(const SimplicialMap& f);

ChainComplexFp moore_complex(const SimplicialAbGroup& a);

// Exact splitting (A, d) = (A-bar, d_0) + (D, d) with witnessing homs.
struct SplitDecomposition {
  ChainComplexFp moore;
  ChainComplexFp normalized;
  ChainComplexFp degenerate;
  std::vector<AbHom> incl_normalized;  // into A_n
  std::vector<AbHom> incl_degenerate;
  std::vector<AbHom> proj_normalized;  // out of A_n; incl . proj sums to id
  std::vector<AbHom> proj_degenerate;
};
SplitDecomposition split_decomposition(const SimplicialAbGroup& a);

// The nerve of a complex: level n is the subgroup of the direct sum over
// injective sigma: [k] -> [n] of B_k cut out by the boundary equations
// d b_sigma = sum_i (-1)^i b_{sigma . face_i}.
struct DoldKanNerve {
  SimplicialAbGroup nerve;
  std::vector<DirectSum> ambients;              // per level n
  std::vector<std::vector<MonotoneMap>> sigmas;  // slot order per level
  std::vector<AbHom> inclusions;                // nerve level -> ambient
};
DoldKanNerve dold_kan_nerve_data(const ChainComplexFp& b, int M);
SimplicialAbGroup dold_kan_nerve(const ChainComplexFp& b, int M);

// Functoriality: the simplicial map N(g) induced by a chain map.
SimplicialMap dold_kan_nerve_map(const DoldKanNerve& src, const DoldKanNerve& dst,
                                 const ChainMap& g);

// Counit C(N(B)) -> B, levelwise projection to the identity-indexed slot.
struct CounitData {
  NormalizedChains chains;  // of the nerve
  ChainMap map;             // chains.complex -> b
};
CounitData counit(const DoldKanNerve& nv, const ChainComplexFp& b);

// Unit A -> N(C(A)), a |-> {pi(sigma^* a)}_sigma.
struct UnitData {
  NormalizedChains chains;  // C(A)
  DoldKanNerve nerve;       // N(C(A))
  SimplicialMap map;
};
UnitData unit(const SimplicialAbGroup& a);

// Shift: drop level 0.
ChainComplexFp omega_complex(const ChainComplexFp& b);

// C(loop(A)) and loop(C(A)) agree as subcomplexes of the shifted levels.
bool omega_compat_check(const SimplicialAbGroup& a);

struct ConservativityReport {
  bool precondition_ok = false;  // C(f) iso up to the requested level
  bool conclusion_ok = false;    // f iso levelwise
  bool ladder_ok = false;        // loop/path ladder maps are isos too
  int failed_level = -1;
};
ConservativityReport conservativity_check(const SimplicialMap& f, int M);

}  // namespace dk
