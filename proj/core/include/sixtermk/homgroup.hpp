#pragma once

#include <functional>

#include "sixtermk/group.hpp"

namespace sixtermk {

// Hom(a, b) with an explicit basis and two-way coordinate maps. Internally a
// direct sum of cyclic pieces, one per (source gen, target gen) pair: the
// piece for (i, j) is generated by the hom a_i -> g_ij * b_j and has the
// listed order (0 = infinite). Pieces of order 1 are kept with gens 0 slots
// skipped, so coordinates stay aligned with the canonical group.
class HomData {
public:
  HomData(FinAbGroup a, FinAbGroup b);

  const FinAbGroup& group() const { return group_; }
  const FinAbGroup& source() const { return a_; }
  const FinAbGroup& target() const { return b_; }

  // Coordinates (w.r.t. group()'s canonical generators) of a well-defined hom.
  std::vector<Int> coordinates_of(const GroupHom& f) const;
  GroupHom from_coordinates(const std::vector<Int>& coords) const;
  std::vector<GroupHom> basis() const;

private:
  FinAbGroup a_, b_;
  FinAbGroup group_;
  // Per nontrivial cyclic piece: source gen, target gen, generator value,
  // order (0 = Z).
  struct Piece {
    std::size_t src, tgt;
    Int gen_value;
    Int order;
  };
  std::vector<Piece> pieces_;
  Quotient sum_;  // canonicalization of the piece-wise direct sum
};

// Spec-level entry points.
struct HomGroupResult {
  FinAbGroup group;
  std::vector<GroupHom> basis;
};
HomGroupResult hom_group(const FinAbGroup& a, const FinAbGroup& b);

FinAbGroup ext_group(const FinAbGroup& a, const FinAbGroup& b);

struct TensorModResult {
  FinAbGroup group;
  GroupHom reduce;  // a -> a tensor Z/n
  IntMatrix lift;   // section of reduce on generators (a.gens x group.gens)
};
TensorModResult tensor_mod(const FinAbGroup& a, const Int& n);

struct TorModResult {
  FinAbGroup group;
  GroupHom incl;  // n-torsion subgroup -> a
};
TorModResult tor_mod(const FinAbGroup& a, const Int& n);

GroupHom times_n(const FinAbGroup& g, const Int& n);

// The hom a tensor Z/n -> b tensor Z/n induced by f: a -> b.
GroupHom induced_on_tensor(const GroupHom& f, const TensorModResult& src,
                           const TensorModResult& dst);

// The hom Tor(a, Z/n) -> Tor(b, Z/n) induced by f (restriction to n-torsion).
GroupHom induced_on_tor(const GroupHom& f, const TorModResult& src,
                        const TorModResult& dst);

// Kernel of a Z-linear constraint on tuples of homs: the tuple space is
// ⊕_k Hom(v_k), the constraint lands in ⊕_k Hom(w_k), and `constraint` maps a
// tuple to its defect tuple. Used for chain-map groups and block corrections.
struct HomTupleKernel {
  FinAbGroup group;
  std::vector<HomData> slots;
  std::vector<IntMatrix> slot_coords;  // per slot: tuple coords from group coords
  std::vector<GroupHom> tuple_from(const std::vector<Int>& coords) const;
};
HomTupleKernel solve_hom_constraints(
    std::vector<HomData> v_slots, const std::vector<HomData>& w_slots,
    const std::function<std::vector<GroupHom>(const std::vector<GroupHom>&)>&
        constraint);

}  // namespace sixtermk
