#pragma once
// Truncated simplicial sets with optional edge/triangle markings, plus the
// standard constructions: simplices, poset nerves, products, pushouts.

#include "dk/simplex.hpp"

#include <set>
#include <string>
#include <vector>

namespace dk {

// Simplices at level k are indices 0..size(k)-1 with unique string labels.
// face[k][i] maps level k to level k-1 (1 <= k <= M, 0 <= i <= k);
// degen[k][i] maps level k to level k+1 (0 <= k < M, 0 <= i <= k).
class TruncSset {
 public:
  TruncSset() : truncation_(0) {}
  TruncSset(int truncation, std::vector<std::vector<std::string>> labels,
            std::vector<std::vector<std::vector<int>>> face,
            std::vector<std::vector<std::vector<int>>> degen);

  int truncation() const { return truncation_; }
  int size(int k) const { return static_cast<int>(labels_[k].size()); }
  const std::string& label(int k, int x) const { return labels_[k][x]; }
  int index_of_label(int k, const std::string& l) const;  // -1 if absent

  int face_of(int k, int i, int x) const { return face_[k][i][x]; }
  int degen_of(int k, int i, int x) const { return degen_[k][i][x]; }

  // Structure map X(f): X_n -> X_m for f: [m] -> [n]; acts on the simplex
  // index x at level n.
  int act(const MonotoneMap& f, int x) const;

  bool is_degenerate(int k, int x) const;
  std::vector<int> nondegenerate(int k) const;

  // Markings.  Degenerate edges and triangles count as marked implicitly.
  std::set<int>& marked_edges() { return marked_edges_; }
  const std::set<int>& marked_edges() const { return marked_edges_; }
  std::set<int>& thin_triangles() { return thin_triangles_; }
  const std::set<int>& thin_triangles() const { return thin_triangles_; }
  bool edge_marked(int e) const;      // marked or degenerate
  bool triangle_thin(int t) const;    // thin or degenerate

  void mark_all_edges();

 private:
  int truncation_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<std::vector<int>>> face_;
  std::vector<std::vector<std::vector<int>>> degen_;
  std::set<int> marked_edges_;
  std::set<int> thin_triangles_;
};

// Throws std::logic_error with a description if an identity fails.
void check_simplicial_identities(const TruncSset& x);

// Level assignments of a simplicial map; source and target kept externally.
struct SsetMap {
  std::vector<std::vector<int>> level;  // level[k][x] = image index
};

bool is_simplicial_map(const TruncSset& src, const TruncSset& dst, const SsetMap& f);
SsetMap identity_sset_map(const TruncSset& x);
SsetMap compose(const TruncSset& a, const TruncSset& b, const TruncSset& c,
                const SsetMap& g, const SsetMap& f);  // g after f: a -> b -> c

// Delta^n truncated at M: level k is all monotone maps [k] -> [n].
TruncSset standard_simplex(int n, int M);
// Index of the simplex of standard_simplex(n, M) given by f: [k] -> [n].
int standard_simplex_index(int n, const MonotoneMap& f);
// Postcomposition with g as a map of standard simplices.
SsetMap standard_simplex_map(const MonotoneMap& g, int M);

// Finite poset on labeled elements; leq must be reflexive, transitive,
// antisymmetric (validated).
struct FinPoset {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;  // leq[a][b] : a <= b
  int size() const { return static_cast<int>(labels.size()); }
  void validate() const;
};

// Nerve of a poset: level k = weakly increasing chains of length k+1.
TruncSset nerve_of_poset(const FinPoset& p, int M);
// Index of the chain (c_0 <= ... <= c_k) in nerve_of_poset(p, M).
int poset_chain_index(const FinPoset& p, const std::vector<int>& chain);

// Levelwise product with componentwise structure maps.  An edge or triangle
// is marked iff both components are marked (or degenerate).
TruncSset product(const TruncSset& x, const TruncSset& y);
int product_index(const TruncSset& x, const TruncSset& y, int k, int ix, int iy);
std::pair<int, int> product_split(const TruncSset& x, const TruncSset& y, int k, int p);

// Pushout of x <-f- a -g-> y: disjoint union modulo f(a) ~ g(a).  Returns
// the glued set plus the two inclusion maps.
struct PushoutResult {
  TruncSset sset;
  SsetMap from_x;
  SsetMap from_y;
};
PushoutResult pushout(const TruncSset& a, const TruncSset& x, const TruncSset& y,
                      const SsetMap& f, const SsetMap& g);

}  // namespace dk
