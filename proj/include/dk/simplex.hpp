#pragma once
// Finite ordinals [n] = {0 < ... < n} and the monotone maps between them,
// together with the cube vertex maps used by the normalization retraction
// and the q/f/b cubes.

#include <string>
#include <vector>

namespace dk {

// Monotone map [m] -> [n]; stores the images of 0..m.
class MonotoneMap {
 public:
  MonotoneMap(int src_dim, int dst_dim, std::vector<int> values);

  static MonotoneMap identity(int n);
  // delta_i : [n-1] -> [n], injection skipping i.
  static MonotoneMap face(int i, int n);
  // sigma_i : [n+1] -> [n], surjection repeating i.
  static MonotoneMap degeneracy(int i, int n);
  static MonotoneMap vertex(int v, int n);  // [0] -> [n]
  static MonotoneMap constant(int src_dim, int dst_dim, int value);

  int src_dim() const { return src_dim_; }
  int dst_dim() const { return dst_dim_; }
  int operator()(int i) const { return values_[i]; }
  const std::vector<int>& values() const { return values_; }

  bool is_identity() const;
  bool is_injective() const;
  bool is_surjective() const;

  bool operator==(const MonotoneMap& o) const;
  bool operator!=(const MonotoneMap& o) const { return !(*this == o); }
  bool operator<(const MonotoneMap& o) const;  // for ordered containers

  // "(v0,...,vm):[m]->[n]"
  std::string to_string() const;

 private:
  int src_dim_;
  int dst_dim_;
  std::vector<int> values_;
};

// f after g: compose(f, g)(i) = f(g(i)).
MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);

// Unique factorization f = mono . epi with epi surjective, mono injective.
struct EpiMonoFactorization {
  MonotoneMap epi;
  MonotoneMap mono;
};
EpiMonoFactorization epi_mono_factorize(const MonotoneMap& f);

// Enumerations, each in lexicographic order of the value vectors.
std::vector<MonotoneMap> all_monotone_maps(int m, int n);
std::vector<MonotoneMap> all_injections(int m, int n);
std::vector<MonotoneMap> all_surjections(int m, int n);

// Cube vertex maps.  bits = (j_1,...,j_k) with entries in {0,1}.
//
// f_vertex: [k] -> [k], i |-> i - 1 + j_i with j_0 = 1; identity iff all
// bits are 1.  b_vertex: [k-1] -> [k], i |-> i + j_{i+1}, requires k >= 1;
// equals compose(f_vertex, face(0, k)).  q_vertex selects b when j0 = 0 and
// f when j0 = 1.
MonotoneMap f_vertex(int k, const std::vector<int>& bits);
MonotoneMap b_vertex(int k, const std::vector<int>& bits);
MonotoneMap q_vertex(int k, int j0, const std::vector<int>& bits);

// All bit vectors of the given length in lexicographic order (first bit
// most significant), e.g. 000, 001, 010, ...
std::vector<std::vector<int>> all_bit_vectors(int length);

}  // namespace dk
