#pragma once

#include "sixtermk/sixterm.hpp"

namespace sixtermk {

// Signs applied to the maps m_0..m_5.
struct SignPattern {
  std::array<int, 6> signs{1, 1, 1, 1, 1, 1};
};

// Mapping-cone transform on sequence data: one backwards rotation of the
// groups with sign twists on the two maps entering/leaving the moved slot.
// groups: (q0..q5) = (p5, p0, p1, p2, p3, p4)
// maps:   (n0..n5) = (-m5, m0, -m1, m2, m3, m4)
SixTermSeq mc_data(const SixTermSeq& s);

SixTermSeq mc_iter(const SixTermSeq& s, long k);

// The canonical signed identification rotate3(s) -> mc_iter(s, 3):
// diagonal identities with signs (+1, -1, +1, +1, -1, +1).
SixTermHom x_e_iso(const SixTermSeq& s);

// Transport of a commuting tuple a: s -> t to mc_data(s) -> mc_data(t):
// components rotate by one slot.
SixTermHom lambda_transform(const SixTermHom& a, const SixTermSeq& s,
                            const SixTermSeq& t);

}  // namespace sixtermk
