#pragma once

#include "sixtermk/invariant.hpp"

namespace sixtermk {

// Isomorphism classes of finite abelian groups of the given order, in
// invariant-factor form, deterministically ordered.
std::vector<FinAbGroup> abelian_groups_of_order(const Int& n);

// A cyclic (or linear) chain of node/edge slots, any of which may be UNKNOWN.
// Edge c maps node c to node c+1 (mod size when cyclic).
struct SequenceConstraint {
  std::string name;
  bool cyclic = true;
  std::vector<std::optional<FinAbGroup>> nodes;
  std::vector<std::optional<GroupHom>> edges;
  std::vector<std::size_t> exact_at;  // empty = exact at every position
};

struct SlotResolution {
  enum Status { UNKNOWN, UNIQUE, CANDIDATES, CONTRADICTION };
  Status status = UNKNOWN;
  std::vector<FinAbGroup> groups;  // singleton when UNIQUE
  std::vector<std::string> provenance;
};

SlotResolution merge_resolutions(const SlotResolution& a,
                                 const SlotResolution& b);

struct DeduceOptions {
  Int max_order = 1000000;  // cap on R5 candidate enumeration
  Int filter_cap = 2000;    // max |H| for the brute-force realizability filter
};

struct DeduceResult {
  std::vector<SlotResolution> nodes;  // parallel to constraint nodes
  bool contradiction = false;
};

DeduceResult deduce(const SequenceConstraint& c, const DeduceOptions& opt = {});

// Does a short exact sequence 0 -> q -> h -> k -> 0 exist? Exhaustive over
// Hom(q, h); only called for finite groups under the filter cap.
bool ses_realizable(const FinAbGroup& q, const FinAbGroup& h,
                    const FinAbGroup& k);

struct HLayerReport {
  struct Slot {
    Int n;
    std::size_t i = 0;
    SlotResolution res;
  };
  std::vector<Slot> slots;  // one per (modulus, i)
  bool contradiction = false;
};

// Instantiate the two H-flanked cyclic sequences for every (n, i), deduce,
// merge, and write UNIQUE groups back into the invariant's H slots.
HLayerReport solve_H_layer(IdealKInvariant& inv, const DeduceOptions& opt = {});

// Find the six h-map families of one modulus layer by staged exhaustive
// search over Hom-group coordinates (free coordinates bounded by `bound`),
// pruning with exactness and the triangle identities. Requires H slots set.
// Populates the layer and returns true on success.
bool witness_search_layer(IdealKInvariant& inv, const Int& n, long bound);

// Template-scoped wrapper: searches every layer the template's cells touch.
// Templates without h-map cells succeed vacuously.
bool witness_search(TemplateId id, IdealKInvariant& inv, long bound);

}  // namespace sixtermk
