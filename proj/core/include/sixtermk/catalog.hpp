#pragma once

#include <string>

#include "sixtermk/coefficients.hpp"

namespace sixtermk {

// Built-in generating extensions. Descriptor grammar for the CLI:
// `E:n:i`, `F:n:i`, `F1:i`, `file:PATH`.
struct ExtensionDescriptor {
  enum class Kind { E, F, F1, TrivialIdeal, TrivialQuotient, Custom };
  Kind kind = Kind::E;
  Int n = 2;       // E and F families
  long i = 0;      // reduced mod 6
  SixTermSeq custom;  // TrivialIdeal/TrivialQuotient input or Custom payload
  std::string path;   // Custom source (informational)

  static ExtensionDescriptor E(const Int& n, long i);
  static ExtensionDescriptor F(const Int& n, long i);
  static ExtensionDescriptor F1(long i);
  static ExtensionDescriptor trivial_ideal(const SixTermSeq& e);
  static ExtensionDescriptor trivial_quotient(const SixTermSeq& e);
  static ExtensionDescriptor custom_seq(const SixTermSeq& e,
                                        std::string path = "");
};

SixTermSeq build(const ExtensionDescriptor& desc);

struct KGroupPairs {
  std::pair<FinAbGroup, FinAbGroup> ideal, middle, quotient;  // (K_0, K_1)
};
KGroupPairs k_groups_of(const ExtensionDescriptor& desc);

// Parse `E:n:i` / `F:n:i` / `F1:i`; `file:PATH` is resolved by the caller
// (returns Custom with path set and an empty payload).
ExtensionDescriptor parse_descriptor(const std::string& text);
std::string format_descriptor(const ExtensionDescriptor& desc);

}  // namespace sixtermk
