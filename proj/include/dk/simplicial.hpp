#pragma once
// Truncated simplicial abelian groups: structure-map calculus, the Moore
// differential, normalized and degenerate subgroups, the idempotent pi, and
// path/loop objects.

#include "dk/abelian.hpp"
#include "dk/simplex.hpp"
#include "dk/sset.hpp"

#include <vector>

namespace dk {

struct SimplicialAbGroup {
  int truncation = 0;
  std::vector<FpAbelianGroup> levels;   // 0..M
  std::vector<std::vector<AbHom>> faces;   // faces[k][i] : A_k -> A_{k-1}
  std::vector<std::vector<AbHom>> degens;  // degens[k][i] : A_k -> A_{k+1}

  const FpAbelianGroup& level(int k) const { return levels[k]; }
  const AbHom& face(int k, int i) const { return faces[k][i]; }
  const AbHom& degen(int k, int i) const { return degens[k][i]; }
};

// Throws std::logic_error when a simplicial identity fails.
void check_simplicial_group(const SimplicialAbGroup& a);

// Structure map A(f): A_n -> A_m for f: [m] -> [n].
AbHom act(const SimplicialAbGroup& a, const MonotoneMap& f);

// Alternating sum of the face homs at level n (1 <= n <= M).
AbHom moore_differential(const SimplicialAbGroup& a, int n);

// Intersection of ker(d_i), i = 1..n; all of A_0 at n = 0.
Subgroup normalized_subgroup(const SimplicialAbGroup& a, int n);

// Subgroup generated by the images of all degeneracies into level n >= 1.
Subgroup degenerate_subgroup(const SimplicialAbGroup& a, int n);

// The idempotent at level n projecting onto the normalized part along the
// degenerate part.
AbHom pi(const SimplicialAbGroup& a, int n);

struct SimplicialMap {
  SimplicialAbGroup source;
  SimplicialAbGroup target;
  std::vector<AbHom> level_maps;
};

bool is_simplicial_map(const SimplicialMap& f);
SimplicialMap identity_simplicial_map(const SimplicialAbGroup& a);
SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g);  // f after g

SimplicialAbGroup truncate(const SimplicialAbGroup& a, int new_truncation);

// Path object P(A)_n = A_{n+1}, structure maps pulled back along join with
// a terminal point; truncation drops by one.
SimplicialAbGroup path_object(const SimplicialAbGroup& a);

// The simplicial map P(A) -> truncate(A, M-1) given levelwise by the last
// face hom d_{n+1}.
SimplicialMap boundary_map(const SimplicialAbGroup& a);

// Levelwise kernel of the boundary map with induced structure maps.
struct LoopObject {
  SimplicialAbGroup omega;
  SimplicialMap inclusion;  // omega -> path_object(a)
};
LoopObject loop_object(const SimplicialAbGroup& a);

// Level k free on X_k with induced structure maps.
SimplicialAbGroup free_simplicial_abelian_group(const TruncSset& x);

// Basis-to-basis map induced by a map of simplicial sets.
SimplicialMap free_simplicial_map(const TruncSset& x, const TruncSset& y, const SsetMap& f);

struct SimplicialDirectSum {
  SimplicialAbGroup group;
  std::vector<SimplicialMap> inclusions;
  std::vector<SimplicialMap> projections;
};
SimplicialDirectSum simplicial_direct_sum(const std::vector<SimplicialAbGroup>& parts);

}  // namespace dk
