#pragma once

#include "dk/matrix.hpp"

#include <optional>
#include <vector>

namespace dk {

// Finitely presented abelian group: cokernel of relations : Z^r -> Z^generators.
// Columns of `relations` are relators written in the generators.
struct FpAbelianGroup {
  int generators = 0;
  IntMatrix relations;  // generators x r

  FpAbelianGroup() : relations(0, 0) {}
  FpAbelianGroup(int gens, IntMatrix rels) : generators(gens), relations(std::move(rels)) {}

  static FpAbelianGroup trivial() { return FpAbelianGroup(0, IntMatrix(0, 0)); }
  static FpAbelianGroup free_group(int rank) { return FpAbelianGroup(rank, IntMatrix(rank, 0)); }
  static FpAbelianGroup cyclic(const Int& n);  // Z/n (n = 0 gives Z)

  bool operator==(const FpAbelianGroup& o) const {
    return generators == o.generators && relations == o.relations;
  }
  bool operator!=(const FpAbelianGroup& o) const { return !(*this == o); }
};

// Invariant-factor decomposition: Z^free_rank + sum Z/d_i with 2 <= d_1 | d_2 | ...
struct GroupNormalForm {
  int free_rank = 0;
  std::vector<Int> invariant_factors;
  bool operator==(const GroupNormalForm& o) const {
    return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
  }
};

GroupNormalForm normal_form(const FpAbelianGroup& g);
bool is_trivial(const FpAbelianGroup& g);

// Homomorphism, recorded by generator images; well-definedness (matrix maps
// source relations into the span of target relations) is a checkable property,
// not enforced on construction.
struct AbHom {
  FpAbelianGroup source, target;
  IntMatrix matrix;  // target.generators x source.generators

  AbHom() = default;
  AbHom(FpAbelianGroup src, FpAbelianGroup tgt, IntMatrix m);
};

AbHom identity_hom(const FpAbelianGroup& g);
AbHom zero_hom(const FpAbelianGroup& src, const FpAbelianGroup& tgt);
// compose(f, g) is "f after g": source g.source, target f.target.
AbHom compose(const AbHom& f, const AbHom& g);
AbHom hom_add(const AbHom& f, const AbHom& g);
AbHom hom_sub(const AbHom& f, const AbHom& g);
AbHom hom_negate(const AbHom& f);
AbHom hom_scale(const Int& c, const AbHom& f);

bool is_well_defined(const AbHom& f);
// Equality as maps: matrices agree up to the span of target relations.
bool equal_as_maps(const AbHom& f, const AbHom& g);
bool is_zero_map(const AbHom& f);
// Two elements of g represent the same coset.
bool elements_equal(const FpAbelianGroup& g, const std::vector<Int>& a, const std::vector<Int>& b);
bool is_zero_element(const FpAbelianGroup& g, const std::vector<Int>& a);

// Kernel and cokernel both come back with Tietze-reduced presentations; the
// attached hom is exact (integral), computed through the reduction's
// inverse-pair, so nothing is lost by the simplification.
struct Subgroup {
  FpAbelianGroup group;
  AbHom inclusion;  // group -> ambient
};
struct Quotient {
  FpAbelianGroup group;
  AbHom projection;  // ambient -> group
};

Subgroup kernel(const AbHom& f);
Quotient cokernel(const AbHom& f);
// Subgroup of `ambient` generated by the columns of `columns`.
Subgroup subgroup_generated(const FpAbelianGroup& ambient, const IntMatrix& columns);
Subgroup image_subgroup(const AbHom& f);
// Common-source homs; empty list yields the whole source with identity inclusion.
Subgroup intersection_of_kernels(const FpAbelianGroup& source, const std::vector<AbHom>& fs);

bool is_isomorphism(const AbHom& f);
// Exact inverse of an isomorphism (throws if f is not one).
AbHom inverse_of_isomorphism(const AbHom& f);

// Presentation simplification: an isomorphic group with generators cut down to
// the invariant-factor count, plus the exact iso pair relating them.
struct SimplifiedPresentation {
  FpAbelianGroup group;
  IntMatrix fwd;  // old gens -> new gens (matrix of the iso)
  IntMatrix bwd;  // new gens -> old gens (matrix of the inverse)
};
SimplifiedPresentation simplify(const FpAbelianGroup& g);

// Factor through a subgroup: given f : G -> H whose image lies in the
// subgroup, produce G -> K with incl . result = f.  Throws if containment
// fails.  SubgroupSolver amortizes the factorization over many corestrictions
// into the same subgroup.
class SubgroupSolver {
 public:
  explicit SubgroupSolver(const AbHom& inclusion);
  const AbHom& inclusion() const { return incl_; }
  AbHom corestrict(const AbHom& f) const;
  std::optional<IntMatrix> try_corestrict_matrix(const IntMatrix& cols) const;
  bool contains(const std::vector<Int>& ambient_element) const;
  bool contains_columns(const IntMatrix& cols) const;

 private:
  AbHom incl_;
  SnfSolver solver_;  // factorization of [incl.matrix | ambient relations]
};

AbHom corestrict(const AbHom& f, const AbHom& inclusion);
// Same image in the common ambient group?
bool subgroups_equal(const AbHom& incl_a, const AbHom& incl_b);

// Direct sums with the canonical injections and projections.
struct DirectSum {
  FpAbelianGroup group;
  std::vector<AbHom> inclusions;
  std::vector<AbHom> projections;
};
DirectSum direct_sum(const std::vector<FpAbelianGroup>& parts);
// Pair a family f_i : A -> B_i into A -> sum B_i.
AbHom tuple_into_sum(const DirectSum& sum, const std::vector<AbHom>& fs);
// Copair a family f_i : A_i -> B into sum A_i -> B.
AbHom cotuple_from_sum(const DirectSum& sum, const std::vector<AbHom>& fs);
// Block map sum A_i -> sum B_j from a matrix of homs (may be sparse: nullptr =
// zero block).  blocks[j][i] : A_i -> B_j.
AbHom block_hom(const DirectSum& src, const DirectSum& dst,
                const std::vector<std::vector<const AbHom*>>& blocks);

}  // namespace dk
