#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sixtermk/snf.hpp"

namespace sixtermk {

// Finitely generated abelian group in invariant-factor form:
// Z^rank + Z/d1 + ... + Z/dt with 2 <= d1 | d2 | ... | dt.
// Generator convention everywhere: free generators first, then torsion
// generators in the listed order.
struct FinAbGroup {
  std::size_t rank = 0;
  std::vector<Int> torsion;

  bool operator==(const FinAbGroup& o) const = default;

  std::size_t gens() const { return rank + torsion.size(); }
  bool is_zero() const { return rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }
  // 0 encodes infinite order.
  Int order() const;
  // Order of generator g (0 = infinite).
  Int gen_order(std::size_t g) const {
    return g < rank ? Int(0) : torsion[g - rank];
  }
  // Columns span the relation lattice in generator coordinates.
  IntMatrix relation_matrix() const;

  static FinAbGroup zero() { return {}; }
  static FinAbGroup free_group(std::size_t r) { return {r, {}}; }
  static FinAbGroup cyclic(const Int& d);  // d = 0 gives Z
};

// Presentation of a quotient Z^ambient / (relation columns) together with the
// two change-of-basis maps:
//   proj: ambient coordinates -> canonical generators (group.gens() x ambient)
//   lift: canonical generators -> ambient coordinates (ambient x group.gens())
// proj * lift = identity modulo the canonical relations.
struct Quotient {
  FinAbGroup group;
  IntMatrix proj;
  IntMatrix lift;
};

Quotient canonicalize(std::size_t ambient, const IntMatrix& relations);

// Homomorphism between canonical presentations; matrix shape is
// (target gens) x (source gens), torsion-target rows reduced mod their order.
struct GroupHom {
  FinAbGroup source;
  FinAbGroup target;
  IntMatrix matrix;

  GroupHom() = default;
  GroupHom(FinAbGroup src, FinAbGroup tgt, IntMatrix m);

  bool operator==(const GroupHom& o) const;

  bool is_well_defined() const;
  bool is_zero_map() const { return matrix.is_zero(); }
  std::vector<Int> apply(const std::vector<Int>& x) const {
    return reduce_coords(target, matrix.apply(x));
  }

  static GroupHom identity(const FinAbGroup& g);
  static GroupHom zero(const FinAbGroup& src, const FinAbGroup& tgt);
  static GroupHom scalar(const FinAbGroup& g, const Int& n);  // x -> n*x

  // Reduce a coordinate vector of g modulo torsion orders into [0, d).
  static std::vector<Int> reduce_coords(const FinAbGroup& g,
                                        std::vector<Int> x);
};

GroupHom compose(const GroupHom& g, const GroupHom& f);  // g after f
GroupHom add(const GroupHom& f, const GroupHom& g);
GroupHom negate(const GroupHom& f);

// Canonical presentation of the subgroup of b generated by the columns of
// gens (in b's generator coordinates), with its inclusion hom.
struct Subgroup {
  FinAbGroup group;
  GroupHom incl;
};
Subgroup subgroup_generated(const FinAbGroup& b, const IntMatrix& gens);

FinAbGroup cokernel_presentation(const IntMatrix& m);

Subgroup kernel(const GroupHom& f);

struct ImageCokernel {
  FinAbGroup image;
  FinAbGroup cokernel;
  GroupHom proj;  // target -> cokernel
};
ImageCokernel image_and_cokernel(const GroupHom& f);

bool is_exact_pair(const GroupHom& f, const GroupHom& g);

// Does the element x of f.target lie in the image of f?
bool in_image(const GroupHom& f, const std::vector<Int>& x);

// Direct sum with the canonical injections and projections.
struct DirectSum {
  FinAbGroup group;
  std::vector<GroupHom> inject;   // summand -> sum
  std::vector<GroupHom> project;  // sum -> summand
};
DirectSum direct_sum(const std::vector<FinAbGroup>& parts);

// Is f invertible? (kernel and cokernel both trivial)
bool is_isomorphism(const GroupHom& f);

// All elements of a finite group as coordinate vectors (throws on infinite).
std::vector<std::vector<Int>> all_elements(const FinAbGroup& g);

// Order of the element x in g (0 = infinite).
Int element_order(const FinAbGroup& g, const std::vector<Int>& x);

}  // namespace sixtermk
