#pragma once

#include <array>
#include <optional>

#include "sixtermk/homgroup.hpp"

namespace sixtermk {

// Cyclic six-term sequence: groups p0..p5 with maps m_i: p_i -> p_{i+1 mod 6}.
// Slot roles: p0=K0(ideal), p1=K0(middle), p2=K0(quotient),
// p3=K1(ideal), p4=K1(middle), p5=K1(quotient); m2 is the exponential map,
// m5 the index map.
struct SixTermSeq {
  std::array<FinAbGroup, 6> groups;
  std::array<GroupHom, 6> maps;
  bool verified_exact = false;

  bool shape_ok() const;
  bool operator==(const SixTermSeq& o) const {
    return groups == o.groups && maps == o.maps;
  }

  static SixTermSeq all_zero();
};

// Per-position exactness report; a failing position carries a witness element
// (coordinates in p_i) that lies in ker(m_i) \ im(m_{i-1}), or a note that
// the composite itself is nonzero.
struct ExactnessReport {
  std::array<bool, 6> position_ok{};
  std::array<std::optional<std::vector<Int>>, 6> witness;
  std::array<bool, 6> composite_nonzero{};
  bool all_ok() const {
    for (bool b : position_ok)
      if (!b) return false;
    return true;
  }
};
ExactnessReport validate_exactness(const SixTermSeq& s);

// Marks the sequence verified-exact iff the check passes.
bool verify_and_mark(SixTermSeq& s);

// Tuple of slotwise homs commuting with both sequences' maps.
struct SixTermHom {
  std::array<GroupHom, 6> components;
  bool commutes(const SixTermSeq& s, const SixTermSeq& t) const;
  bool is_isomorphism_tuple() const;
};

SixTermHom add(const SixTermHom& a, const SixTermHom& b);
SixTermHom negate(const SixTermHom& a);
SixTermHom compose(const SixTermHom& g, const SixTermHom& f);
SixTermHom identity_tuple(const SixTermSeq& s);

// Hom_six(s, t): kernel of the chain-condition constraint map
// ⊕ Hom(S.p_i, T.p_i) -> ⊕ Hom(S.p_i, T.p_{i+1}).
struct HomSixResult {
  FinAbGroup group;
  std::vector<SixTermHom> basis;
  // Tuple for arbitrary coordinates w.r.t. group's generators.
  SixTermHom from_coordinates(const std::vector<Int>& coords) const;

  // internal reconstruction state
  std::vector<HomData> slot_homs;
  std::vector<IntMatrix> slot_coords;  // per slot: slot hom gens x group.gens
};
HomSixResult hom_six(const SixTermSeq& s, const SixTermSeq& t);

SixTermSeq rotate3(const SixTermSeq& s);

std::optional<SixTermHom> signed_iso_search(const SixTermSeq& s,
                                            const SixTermSeq& t, long bound);

}  // namespace sixtermk
