#pragma once

#include "sixtermk/catalog.hpp"

namespace sixtermk {

// One modulus worth of invariant data: the F_{n,.} layer, the Bockstein maps,
// and (initially unknown) H slots with their six families of structure maps.
struct ModulusLayer {
  Int n;
  CoefficientSeq coeff;  // slot groups + untwisted maps f_{n,i}
  SixTermSeq f_tilde;    // tilde-twisted f_{n,i}
  std::array<GroupHom, 6> rho;      // F_{1,i} -> F_{n,i}
  std::array<GroupHom, 6> beta;     // F_{n,i} -> F_{1,i+3}
  std::array<GroupHom, 6> xn_base;  // x n on F_{1,i}

  std::array<std::optional<FinAbGroup>, 6> H;
  std::array<std::optional<GroupHom>, 6> h11_in;   // F_{1,i+1} -> H_i
  std::array<std::optional<GroupHom>, 6> h11_out;  // H_i -> F_{1,i+3}
  std::array<std::optional<GroupHom>, 6> hn1_in;   // F_{n,i} -> H_i
  std::array<std::optional<GroupHom>, 6> hn1_out;  // H_i -> F_{1,i+2}
  std::array<std::optional<GroupHom>, 6> h1n_in;   // F_{1,i+2} -> H_i
  std::array<std::optional<GroupHom>, 6> h1n_out;  // H_i -> F_{n,i+1}
};

struct IdealKInvariant {
  ExtensionDescriptor desc;
  SixTermSeq base;        // K_six(e), untwisted maps f_{1,i}
  SixTermSeq base_tilde;  // tilde-twisted base
  std::vector<ModulusLayer> layers;

  const ModulusLayer* layer(const Int& n) const;
  ModulusLayer* layer(const Int& n);
  bool fully_populated() const;
};

IdealKInvariant compute_invariant(const ExtensionDescriptor& e,
                                  const std::vector<Int>& moduli);

enum class TemplateId {
  SEQ1, SEQ2, SEQ3, SEQ4,
  TRI1, TRI2, TRI3,
  D0, D1, D1s, D2, D2s, D3, D3s,
  CORSQ,
};
std::optional<TemplateId> parse_template_id(const std::string& name);
std::string format_template_id(TemplateId id);
std::vector<TemplateId> all_template_ids();

struct CellVerdict {
  std::string name;
  enum Status { PASS, FAIL, SKIP } status;
};

struct DiagramReport {
  TemplateId id;
  std::vector<CellVerdict> cells;
  bool any_failed() const;
  bool any_skipped() const;
  // A template counts as passed only with no failures and no skips.
  bool passed() const { return !any_failed() && !any_skipped(); }
};

std::vector<DiagramReport> verify_diagrams(const IdealKInvariant& inv,
                                           const std::vector<TemplateId>& ids);

// Hom_Lambda: slotwise hom tuples commuting with every structure map.
struct HomLambdaResult {
  FinAbGroup group;
  // Slot order: base 0..5, then per layer F_{n,0..5}, H_{n,0..5}.
  std::vector<std::vector<GroupHom>> basis;
};
HomLambdaResult hom_lambda(const IdealKInvariant& a, const IdealKInvariant& b);

}  // namespace sixtermk
