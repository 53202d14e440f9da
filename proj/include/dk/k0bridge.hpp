#pragma once
// Class-level shadows of categorified rank data: boundary checks for nerve
// simplices valued in a chain complex, rank triangles with their
// decategorification, and alternating vertex sums over cubes.

#include "dk/dold_kan.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dk {

// Classes b_S indexed by the nonempty subsets S of {0..n}; the class at a
// subset of size k+1 is an element of the level-k group of the complex.
struct K0Simplex {
  int n = 0;
  std::map<std::vector<int>, std::vector<Int>> classes;
};

// True iff d b_S = sum_i (-1)^i b_{S with i-th element dropped} holds in the
// presented groups for every subset of size >= 2.  Throws std::invalid_argument
// on malformed indexing or n beyond the truncation of b.
bool check_nerve_simplex(const ChainComplexFp& b, const K0Simplex& s);

// Vertex classes a_i in level 0 and edge classes a_{ij} (i <= j) in level 1.
struct RankTriangle {
  int n = 0;
  std::vector<std::vector<Int>> vertices;
  std::map<std::pair<int, int>, std::vector<Int>> edges;
};

// For b concentrated in degrees {0,1}: a_{ii} = 0, d a_{ij} = a_j - a_i, and
// a_{ik} = a_{ij} + a_{jk}.  Throws std::invalid_argument when b has content
// above degree 1 or the indexing is malformed.
bool check_relative_s(const ChainComplexFp& b, const RankTriangle& t);

// The induced nerve simplex: singletons and pairs carry the triangle classes,
// larger subsets carry zero.  Requires check_relative_s(b, t) and
// b.truncation >= t.n; the output passes check_nerve_simplex.
K0Simplex decategorify_relative_s(const RankTriangle& t, const ChainComplexFp& b);

// sum_j (-1)^(k - |j|) cube[j] in g, entries indexed like all_bit_vectors(k).
std::vector<Int> euler_totalization(const FpAbelianGroup& g, int k,
                                    const std::vector<std::vector<Int>>& cube);

}  // namespace dk
