#pragma once

#include "sixtermk/functors.hpp"

namespace sixtermk {

// K_j(A; Z/n) in the split model tensor ⊕ Tor with the block maps retained.
struct ModNKGroup {
  Int n;
  FinAbGroup kj, kj1;      // K_j and K_{j+1} feeding the two blocks
  TensorModResult tensor;  // kj ⊗ Z/n
  TorModResult tor;        // Tor(kj1, Z/n) = n-torsion of kj1
  FinAbGroup total;
  GroupHom tensor_in, tor_in;    // block -> total
  GroupHom tensor_out, tor_out;  // total -> block
};

ModNKGroup k_with_coefficients(const FinAbGroup& kj, const FinAbGroup& kj1,
                               const Int& n);

// rho: kj -> total, reduction into the tensor block.
GroupHom rho_map(const FinAbGroup& kj, const ModNKGroup& target);

// beta: total -> kj1, projection to the Tor block followed by inclusion.
GroupHom beta_map(const ModNKGroup& source, const FinAbGroup& kj1);

SixTermSeq sign_twist(const SixTermSeq& s, const SignPattern& pattern);

// Tilde convention: maps 0 and 3 are negated.
SignPattern tilde_pattern();

// The mod-n sequence of an exact six-term sequence. Slot i holds
// (p_i ⊗ Z/n) ⊕ Tor(p_{i+3}, Z/n); the map out of slot i acts by m_i on the
// tensor block and -Tor(m_{i+3}) on the Tor block, plus a Tor -> tensor
// correction solved for when the pure block maps fail exactness.
struct CoefficientSeq {
  std::array<ModNKGroup, 6> slots;
  SixTermSeq seq;  // untwisted maps f_{n,i}; groups are the slot totals
  bool exact = false;
  bool corrected = false;  // nonzero corrections were needed
  std::string warning;     // set when no correction restored exactness
};
CoefficientSeq coefficient_sequence(const SixTermSeq& s, const Int& n);

// Every exact block sequence over the mod-n slots of s, in deterministic
// order (the one coefficient_sequence picks comes first). The correction is
// not unique in general, and downstream constraints can reject the first
// choice, so callers may need to try the rest.
std::vector<SixTermSeq> exact_block_sequences(const SixTermSeq& s,
                                              const Int& n);

}  // namespace sixtermk
