#include "sixtermk/invariant.hpp"

#include <stdexcept>

namespace sixtermk {

namespace {

using OptHom = std::optional<GroupHom>;

OptHom opt_compose(const OptHom& g, const OptHom& f) {
  if (!g || !f) return std::nullopt;
  return compose(*g, *f);
}

OptHom opt_negate(const OptHom& f) {
  if (!f) return std::nullopt;
  return negate(*f);
}

OptHom opt_scale(const OptHom& f, const Int& n) {
  if (!f) return std::nullopt;
  return GroupHom(f->source, f->target, f->matrix * n);
}

CellVerdict check_exact(std::string name, const OptHom& f, const OptHom& g) {
  if (!f || !g) return {std::move(name), CellVerdict::SKIP};
  return {std::move(name),
          is_exact_pair(*f, *g) ? CellVerdict::PASS : CellVerdict::FAIL};
}

CellVerdict check_eq(std::string name, const OptHom& lhs, const OptHom& rhs) {
  if (!lhs || !rhs) return {std::move(name), CellVerdict::SKIP};
  return {std::move(name),
          *lhs == *rhs ? CellVerdict::PASS : CellVerdict::FAIL};
}

// Cyclic sequence: edges[c] maps nodes[c] -> nodes[(c+1) % L].
struct CyclicSeq {
  std::vector<OptHom> edges;
};

void check_cyclic(std::vector<CellVerdict>& out, const std::string& prefix,
                  const CyclicSeq& seq) {
  const std::size_t L = seq.edges.size();
  for (std::size_t c = 0; c < L; ++c)
    out.push_back(check_exact(prefix + " pos" + std::to_string(c),
                              seq.edges[(c + L - 1) % L], seq.edges[c]));
}

// 3x6 grid, rows cyclic mod 6; vertical cycles run through column c and then
// column c+3 (v[2][c] lands on row 0 of column c+3).
struct Grid {
  std::array<std::array<OptHom, 6>, 3> h;
  std::array<std::array<OptHom, 6>, 3> v;
};

void check_grid(std::vector<CellVerdict>& out, const std::string& prefix,
                const Grid& g) {
  for (std::size_t r = 0; r < 3; ++r) {
    CyclicSeq row;
    for (std::size_t c = 0; c < 6; ++c) row.edges.push_back(g.h[r][c]);
    check_cyclic(out, prefix + " row" + std::to_string(r), row);
  }
  for (std::size_t c0 = 0; c0 < 3; ++c0) {
    CyclicSeq col;
    for (std::size_t c : {c0, c0 + 3})
      for (std::size_t r = 0; r < 3; ++r) col.edges.push_back(g.v[r][c]);
    check_cyclic(out, prefix + " col" + std::to_string(c0), col);
  }
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 6; ++c) {
      OptHom lhs = opt_compose(g.v[r][(c + 1) % 6], g.h[r][c]);
      OptHom rhs = r < 2 ? opt_compose(g.h[r + 1][c], g.v[r][c])
                         : opt_compose(g.h[0][(c + 3) % 6], g.v[2][c]);
      out.push_back(check_eq(prefix + " square(" + std::to_string(r) + "," +
                                 std::to_string(c) + ")",
                             lhs, rhs));
    }
}

}  // namespace

const ModulusLayer* IdealKInvariant::layer(const Int& n) const {
  for (const auto& l : layers)
    if (l.n == n) return &l;
  return nullptr;
}

ModulusLayer* IdealKInvariant::layer(const Int& n) {
  for (auto& l : layers)
    if (l.n == n) return &l;
  return nullptr;
}

bool IdealKInvariant::fully_populated() const {
  for (const auto& l : layers)
    for (std::size_t i = 0; i < 6; ++i)
      if (!l.H[i] || !l.h11_in[i] || !l.h11_out[i] || !l.hn1_in[i] ||
          !l.hn1_out[i] || !l.h1n_in[i] || !l.h1n_out[i])
        return false;
  return true;
}

IdealKInvariant compute_invariant(const ExtensionDescriptor& e,
                                  const std::vector<Int>& moduli) {
  IdealKInvariant inv;
  inv.desc = e;
  inv.base = build(e);
  if (!inv.base.verified_exact && !verify_and_mark(inv.base))
    throw std::invalid_argument("compute_invariant: sequence is not exact");
  inv.base_tilde = sign_twist(inv.base, tilde_pattern());
  for (const Int& n : moduli) {
    if (n < 2)
      throw std::invalid_argument("compute_invariant: modulus must be >= 2");
    ModulusLayer l;
    l.n = n;
    l.coeff = coefficient_sequence(inv.base, n);
    l.f_tilde = sign_twist(l.coeff.seq, tilde_pattern());
    for (std::size_t i = 0; i < 6; ++i) {
      l.rho[i] = rho_map(inv.base.groups[i], l.coeff.slots[i]);
      l.beta[i] = beta_map(l.coeff.slots[i], inv.base.groups[(i + 3) % 6]);
      l.xn_base[i] = times_n(inv.base.groups[i], n);
    }
    inv.layers.push_back(std::move(l));
  }
  return inv;
}

std::optional<TemplateId> parse_template_id(const std::string& name) {
  if (name == "SEQ1") return TemplateId::SEQ1;
  if (name == "SEQ2") return TemplateId::SEQ2;
  if (name == "SEQ3") return TemplateId::SEQ3;
  if (name == "SEQ4") return TemplateId::SEQ4;
  if (name == "TRI1") return TemplateId::TRI1;
  if (name == "TRI2") return TemplateId::TRI2;
  if (name == "TRI3") return TemplateId::TRI3;
  if (name == "D0") return TemplateId::D0;
  if (name == "D1") return TemplateId::D1;
  if (name == "D1*") return TemplateId::D1s;
  if (name == "D2") return TemplateId::D2;
  if (name == "D2*") return TemplateId::D2s;
  if (name == "D3") return TemplateId::D3;
  if (name == "D3*") return TemplateId::D3s;
  if (name == "COR-SQ") return TemplateId::CORSQ;
  return std::nullopt;
}

std::string format_template_id(TemplateId id) {
  switch (id) {
    case TemplateId::SEQ1: return "SEQ1";
    case TemplateId::SEQ2: return "SEQ2";
    case TemplateId::SEQ3: return "SEQ3";
    case TemplateId::SEQ4: return "SEQ4";
    case TemplateId::TRI1: return "TRI1";
    case TemplateId::TRI2: return "TRI2";
    case TemplateId::TRI3: return "TRI3";
    case TemplateId::D0: return "D0";
    case TemplateId::D1: return "D1";
    case TemplateId::D1s: return "D1*";
    case TemplateId::D2: return "D2";
    case TemplateId::D2s: return "D2*";
    case TemplateId::D3: return "D3";
    case TemplateId::D3s: return "D3*";
    case TemplateId::CORSQ: return "COR-SQ";
  }
  return "?";
}

std::vector<TemplateId> all_template_ids() {
  return {TemplateId::SEQ1, TemplateId::SEQ2, TemplateId::SEQ3,
          TemplateId::SEQ4, TemplateId::TRI1, TemplateId::TRI2,
          TemplateId::TRI3, TemplateId::D0,   TemplateId::D1,
          TemplateId::D1s,  TemplateId::D2,   TemplateId::D2s,
          TemplateId::D3,   TemplateId::D3s,  TemplateId::CORSQ};
}

bool DiagramReport::any_failed() const {
  for (const auto& c : cells)
    if (c.status == CellVerdict::FAIL) return true;
  return false;
}

bool DiagramReport::any_skipped() const {
  for (const auto& c : cells)
    if (c.status == CellVerdict::SKIP) return true;
  return false;
}

namespace {

struct LayerView {
  const IdealKInvariant& inv;
  const ModulusLayer& l;

  OptHom f1(std::size_t i) const { return inv.base_tilde.maps[i % 6]; }
  OptHom fn(std::size_t i) const { return l.f_tilde.maps[i % 6]; }
  OptHom rho(std::size_t i) const { return l.rho[i % 6]; }
  OptHom beta(std::size_t i) const { return l.beta[i % 6]; }
  OptHom xn(std::size_t i) const { return l.xn_base[i % 6]; }
  OptHom nf1(std::size_t i) const { return opt_scale(f1(i), l.n); }
  OptHom h11i(std::size_t i) const { return l.h11_in[i % 6]; }
  OptHom h11o(std::size_t i) const { return l.h11_out[i % 6]; }
  OptHom hn1i(std::size_t i) const { return l.hn1_in[i % 6]; }
  OptHom hn1o(std::size_t i) const { return l.hn1_out[i % 6]; }
  OptHom h1ni(std::size_t i) const { return l.h1n_in[i % 6]; }
  OptHom h1no(std::size_t i) const { return l.h1n_out[i % 6]; }
  // Identity / zero helpers on named slots.
  OptHom id_base(std::size_t i) const {
    return GroupHom::identity(inv.base.groups[i % 6]);
  }
  OptHom id_F(std::size_t i) const {
    return GroupHom::identity(l.coeff.slots[i % 6].total);
  }
  const FinAbGroup& B(std::size_t i) const { return inv.base.groups[i % 6]; }
  const FinAbGroup& F(std::size_t i) const {
    return l.coeff.slots[i % 6].total;
  }
  std::optional<FinAbGroup> H(std::size_t i) const { return l.H[i % 6]; }
};

OptHom zero_hom(const std::optional<FinAbGroup>& a,
                const std::optional<FinAbGroup>& b) {
  if (!a || !b) return std::nullopt;
  return GroupHom::zero(*a, *b);
}

CyclicSeq seq2_edges(const LayerView& v, std::size_t i) {
  return {{v.h11i(i), v.h11o(i), v.nf1(i + 3), v.h11i(i + 3), v.h11o(i + 3),
           v.nf1(i)}};
}

CyclicSeq seq3_edges(const LayerView& v, std::size_t i) {
  return {{v.hn1i(i), v.hn1o(i), opt_compose(v.fn(i + 2), v.rho(i + 2)),
           v.hn1i(i + 3), v.hn1o(i + 3),
           opt_compose(v.fn(i + 5), v.rho(i + 5))}};
}

// The h^{1,n} cyclic sequence (no spec identifier; used by witness search and
// the starred grids).
CyclicSeq seq_h1n_edges(const LayerView& v, std::size_t i) {
  return {{v.h1ni(i), v.h1no(i), opt_compose(v.beta(i + 2), v.fn(i + 1)),
           v.h1ni(i + 3), v.h1no(i + 3),
           opt_compose(v.beta(i + 5), v.fn(i + 4))}};
}

CyclicSeq seq4_edges(const LayerView& v, std::size_t i) {
  return {{v.rho(i), v.beta(i), v.xn(i + 3), v.rho(i + 3), v.beta(i + 3),
           v.xn(i)}};
}

Grid make_D0(const LayerView& w) {
  Grid g;
  for (std::size_t c = 0; c < 6; ++c) {
    g.h[0][c] = w.f1(c);
    g.h[1][c] = w.fn(c);
    g.h[2][c] = w.f1(c + 3);
    g.v[0][c] = w.rho(c);
    g.v[1][c] = c % 2 == 0 ? w.beta(c) : opt_negate(w.beta(c));
    g.v[2][c] = w.xn(c + 3);
  }
  return g;
}

Grid make_D1(const LayerView& w, std::size_t i) {
  Grid g;
  for (std::size_t k = 0; k < 2; ++k) {
    std::size_t c = 3 * k, j = i + 3 * k;  // columns c..c+2 use index j
    g.h[0][c] = w.f1(j);
    g.h[0][c + 1] = w.f1(j + 1);
    g.h[0][c + 2] = w.f1(j + 2);
    g.h[1][c] = w.hn1i(j);
    g.h[1][c + 1] = w.hn1o(j);
    g.h[1][c + 2] = opt_compose(w.rho(j + 3), w.f1(j + 2));
    g.h[2][c] = w.id_base(j + 3);
    g.h[2][c + 1] = zero_hom(w.B(j + 3), FinAbGroup::zero());
    g.h[2][c + 2] = zero_hom(FinAbGroup::zero(), w.B(j));
    g.v[0][c] = w.rho(j);
    g.v[0][c + 1] = w.h11i(j);
    g.v[0][c + 2] = w.id_base(j + 2);
    g.v[1][c] = w.beta(j);
    g.v[1][c + 1] = w.h11o(j);
    g.v[1][c + 2] = zero_hom(w.B(j + 2), FinAbGroup::zero());
    g.v[2][c] = w.xn(j + 3);
    g.v[2][c + 1] = w.nf1(j + 3);
    g.v[2][c + 2] = zero_hom(FinAbGroup::zero(), w.B(j + 5));
  }
  // Row 2 of column blocks must chain: fix the wrap targets.
  // (cols: j+3, 0, 0-source -> next block's j+3.)
  return g;
}

Grid make_D1s(const LayerView& w, std::size_t i) {
  Grid g;
  for (std::size_t k = 0; k < 2; ++k) {
    std::size_t c = 3 * k, j = i + 3 * k;
    g.h[0][c] = zero_hom(FinAbGroup::zero(), w.B(j + 1));
    g.h[0][c + 1] = w.id_base(j + 1);
    g.h[0][c + 2] = zero_hom(w.B(j + 1), FinAbGroup::zero());
    g.h[1][c] = w.hn1i(j);
    g.h[1][c + 1] = w.hn1o(j);
    g.h[1][c + 2] = opt_compose(w.rho(j + 3), w.f1(j + 2));
    g.h[2][c] = w.beta(j);
    g.h[2][c + 1] = w.xn(j + 3);
    g.h[2][c + 2] = w.rho(j + 3);
    g.v[0][c] = zero_hom(FinAbGroup::zero(), w.F(j));
    g.v[0][c + 1] = w.h11i(j);
    g.v[0][c + 2] = w.f1(j + 1);
    g.v[1][c] = w.id_F(j);
    g.v[1][c + 1] = w.h11o(j);
    g.v[1][c + 2] = w.f1(j + 2);
    g.v[2][c] = zero_hom(w.F(j), FinAbGroup::zero());
    g.v[2][c + 1] = w.nf1(j + 3);
    g.v[2][c + 2] = w.f1(j + 3);
  }
  return g;
}

Grid make_D2(const LayerView& w, std::size_t i) {
  Grid g;
  for (std::size_t k = 0; k < 2; ++k) {
    std::size_t c = 3 * k, j = i + 3 * k;
    g.h[0][c] = w.xn(j + 1);
    g.h[0][c + 1] = w.rho(j + 1);
    g.h[0][c + 2] = w.beta(j + 1);
    g.h[1][c] = w.h1ni(j);
    g.h[1][c + 1] = w.h1no(j);
    g.h[1][c + 2] = opt_compose(w.f1(j + 4), w.beta(j + 1));
    g.h[2][c] = w.id_base(j + 3);
    g.h[2][c + 1] = zero_hom(w.B(j + 3), FinAbGroup::zero());
    g.h[2][c + 2] = zero_hom(FinAbGroup::zero(), w.B(j));
    g.v[0][c] = w.f1(j + 1);
    g.v[0][c + 1] = w.h11i(j);
    g.v[0][c + 2] = w.id_F(j + 1);
    g.v[1][c] = w.f1(j + 2);
    g.v[1][c + 1] = w.h11o(j);
    g.v[1][c + 2] = zero_hom(w.F(j + 1), FinAbGroup::zero());
    g.v[2][c] = w.f1(j + 3);
    g.v[2][c + 1] = w.nf1(j + 3);
    g.v[2][c + 2] = zero_hom(FinAbGroup::zero(), w.F(j + 4));
  }
  return g;
}

Grid make_D2s(const LayerView& w, std::size_t i) {
  Grid g;
  for (std::size_t k = 0; k < 2; ++k) {
    std::size_t c = 3 * k, j = i + 3 * k;
    g.h[0][c] = zero_hom(FinAbGroup::zero(), w.B(j + 1));
    g.h[0][c + 1] = w.id_base(j + 1);
    g.h[0][c + 2] = zero_hom(w.B(j + 1), FinAbGroup::zero());
    g.h[1][c] = w.h1ni(j);
    g.h[1][c + 1] = w.h1no(j);
    g.h[1][c + 2] =
        opt_negate(opt_compose(w.f1(j + 4), w.beta(j + 1)));
    g.h[2][c] = w.f1(j + 2);
    g.h[2][c + 1] = w.f1(j + 3);
    g.h[2][c + 2] = w.f1(j + 4);
    g.v[0][c] = zero_hom(FinAbGroup::zero(), w.B(j + 2));
    g.v[0][c + 1] = w.h11i(j);
    g.v[0][c + 2] = w.rho(j + 1);
    g.v[1][c] = w.id_base(j + 2);
    g.v[1][c + 1] = w.h11o(j);
    g.v[1][c + 2] = opt_negate(w.beta(j + 1));
    g.v[2][c] = zero_hom(w.B(j + 2), FinAbGroup::zero());
    g.v[2][c + 1] = w.nf1(j + 3);
    g.v[2][c + 2] = w.xn(j + 4);
  }
  return g;
}

Grid make_D3(const LayerView& w, std::size_t i) {
  Grid g;
  for (std::size_t k = 0; k < 2; ++k) {
    std::size_t c = 3 * k, j = i + 3 * k;
    g.h[0][c] = w.fn(j + 5);
    g.h[0][c + 1] = w.fn(j);
    g.h[0][c + 2] = w.fn(j + 1);
    g.h[1][c] = w.h1ni(j);
    g.h[1][c + 1] = w.h1no(j);
    g.h[1][c + 2] =
        opt_negate(opt_compose(w.beta(j + 2), w.fn(j + 1)));
    g.h[2][c] = w.id_base(j + 2);
    g.h[2][c + 1] = zero_hom(w.B(j + 2), FinAbGroup::zero());
    g.h[2][c + 2] = zero_hom(FinAbGroup::zero(), w.B(j + 5));
    g.v[0][c] = opt_negate(w.beta(j + 5));
    g.v[0][c + 1] = w.hn1i(j);
    g.v[0][c + 2] = w.id_F(j + 1);
    g.v[1][c] = w.xn(j + 2);
    g.v[1][c + 1] = w.hn1o(j);
    g.v[1][c + 2] = zero_hom(w.F(j + 1), FinAbGroup::zero());
    g.v[2][c] = w.rho(j + 2);
    g.v[2][c + 1] = opt_compose(w.fn(j + 2), w.rho(j + 2));
    g.v[2][c + 2] = zero_hom(FinAbGroup::zero(), w.F(j + 4));
  }
  return g;
}

Grid make_D3s(const LayerView& w, std::size_t i) {
  Grid g;
  for (std::size_t k = 0; k < 2; ++k) {
    std::size_t c = 3 * k, j = i + 3 * k;
    g.h[0][c] = zero_hom(FinAbGroup::zero(), w.F(j));
    g.h[0][c + 1] = w.id_F(j);
    g.h[0][c + 2] = zero_hom(w.F(j), FinAbGroup::zero());
    g.h[1][c] = w.h1ni(j);
    g.h[1][c + 1] = w.h1no(j);
    g.h[1][c + 2] = opt_compose(w.beta(j + 2), w.fn(j + 1));
    g.h[2][c] = w.xn(j + 2);
    g.h[2][c + 1] = w.rho(j + 2);
    g.h[2][c + 2] = w.beta(j + 2);
    g.v[0][c] = zero_hom(FinAbGroup::zero(), w.B(j + 2));
    g.v[0][c + 1] = w.hn1i(j);
    g.v[0][c + 2] = w.fn(j);
    g.v[1][c] = w.id_base(j + 2);
    g.v[1][c + 1] = w.hn1o(j);
    g.v[1][c + 2] = w.fn(j + 1);
    g.v[2][c] = zero_hom(w.B(j + 2), FinAbGroup::zero());
    g.v[2][c + 1] = opt_compose(w.fn(j + 2), w.rho(j + 2));
    g.v[2][c + 2] = w.fn(j + 2);
  }
  return g;
}

}  // namespace

std::vector<DiagramReport> verify_diagrams(const IdealKInvariant& inv,
                                           const std::vector<TemplateId>& ids) {
  std::vector<DiagramReport> out;
  for (TemplateId id : ids) {
    DiagramReport rep;
    rep.id = id;
    if (id == TemplateId::SEQ1) {
      CyclicSeq base;
      for (std::size_t c = 0; c < 6; ++c)
        base.edges.push_back(inv.base_tilde.maps[c]);
      check_cyclic(rep.cells, "SEQ1 base", base);
    }
    for (const auto& l : inv.layers) {
      LayerView w{inv, l};
      const std::string tag = " n=" + l.n.str();
      switch (id) {
        case TemplateId::SEQ1: {
          CyclicSeq row;
          for (std::size_t c = 0; c < 6; ++c)
            row.edges.push_back(l.f_tilde.maps[c]);
          check_cyclic(rep.cells, "SEQ1" + tag, row);
          break;
        }
        case TemplateId::SEQ2:
          for (std::size_t i = 0; i < 3; ++i)
            check_cyclic(rep.cells,
                         "SEQ2" + tag + " i=" + std::to_string(i),
                         seq2_edges(w, i));
          break;
        case TemplateId::SEQ3:
          for (std::size_t i = 0; i < 3; ++i)
            check_cyclic(rep.cells,
                         "SEQ3" + tag + " i=" + std::to_string(i),
                         seq3_edges(w, i));
          break;
        case TemplateId::SEQ4:
          for (std::size_t i = 0; i < 3; ++i)
            check_cyclic(rep.cells,
                         "SEQ4" + tag + " i=" + std::to_string(i),
                         seq4_edges(w, i));
          break;
        case TemplateId::TRI1:
          for (std::size_t i = 0; i < 6; ++i) {
            const std::string p = "TRI1" + tag + " i=" + std::to_string(i);
            rep.cells.push_back(
                check_eq(p + " sq-in", opt_compose(w.hn1i(i), w.rho(i)),
                         opt_compose(w.h11i(i), w.f1(i))));
            rep.cells.push_back(check_eq(
                p + " tri-top", opt_compose(w.hn1o(i), w.h11i(i)), w.f1(i + 1)));
            rep.cells.push_back(check_eq(
                p + " tri-bot", opt_compose(w.h11o(i), w.hn1i(i)), w.beta(i)));
            rep.cells.push_back(
                check_eq(p + " sq-out", opt_compose(w.f1(i + 2), w.hn1o(i)),
                         opt_scale(w.h11o(i), l.n)));
          }
          break;
        case TemplateId::TRI2:
          for (std::size_t i = 0; i < 6; ++i) {
            const std::string p = "TRI2" + tag + " i=" + std::to_string(i);
            rep.cells.push_back(
                check_eq(p + " sq-in", opt_compose(w.h11i(i), w.xn(i + 1)),
                         opt_compose(w.h1ni(i), w.f1(i + 1))));
            rep.cells.push_back(check_eq(p + " tri-top",
                                         opt_compose(w.h1no(i), w.h11i(i)),
                                         w.rho(i + 1)));
            rep.cells.push_back(check_eq(p + " tri-bot",
                                         opt_compose(w.h11o(i), w.h1ni(i)),
                                         w.f1(i + 2)));
            rep.cells.push_back(check_eq(
                p + " sq-out",
                opt_compose(opt_negate(w.beta(i + 1)), w.h1no(i)),
                opt_compose(w.f1(i + 3), w.h11o(i))));
          }
          break;
        case TemplateId::TRI3:
          for (std::size_t i = 0; i < 6; ++i) {
            const std::string p = "TRI3" + tag + " i=" + std::to_string(i);
            rep.cells.push_back(
                check_eq(p + " sq-in", opt_compose(w.hn1i(i), w.fn(i + 5)),
                         opt_compose(w.h1ni(i), opt_negate(w.beta(i + 5)))));
            rep.cells.push_back(check_eq(
                p + " tri-top", opt_compose(w.h1no(i), w.hn1i(i)), w.fn(i)));
            rep.cells.push_back(check_eq(p + " tri-bot",
                                         opt_compose(w.hn1o(i), w.h1ni(i)),
                                         w.xn(i + 2)));
            rep.cells.push_back(
                check_eq(p + " sq-out", opt_compose(w.fn(i + 1), w.h1no(i)),
                         opt_compose(w.rho(i + 2), w.hn1o(i))));
          }
          break;
        case TemplateId::CORSQ:
          for (std::size_t i = 0; i < 6; ++i) {
            const std::string p = "COR-SQ" + tag + " i=" + std::to_string(i);
            rep.cells.push_back(
                check_eq(p + " rho", opt_compose(w.rho(i + 1), w.f1(i)),
                         opt_compose(w.fn(i), w.rho(i))));
            rep.cells.push_back(check_eq(
                p + " beta", opt_compose(w.beta(i + 1), w.fn(i)),
                opt_negate(opt_compose(w.f1(i + 3), w.beta(i)))));
          }
          break;
        case TemplateId::D0:
          check_grid(rep.cells, "D0" + tag, make_D0(w));
          break;
        case TemplateId::D1:
          for (std::size_t i = 0; i < 3; ++i)
            check_grid(rep.cells, "D1" + tag + " i=" + std::to_string(i),
                       make_D1(w, i));
          break;
        case TemplateId::D1s:
          for (std::size_t i = 0; i < 3; ++i)
            check_grid(rep.cells, "D1*" + tag + " i=" + std::to_string(i),
                       make_D1s(w, i));
          break;
        case TemplateId::D2:
          for (std::size_t i = 0; i < 3; ++i)
            check_grid(rep.cells, "D2" + tag + " i=" + std::to_string(i),
                       make_D2(w, i));
          break;
        case TemplateId::D2s:
          for (std::size_t i = 0; i < 3; ++i)
            check_grid(rep.cells, "D2*" + tag + " i=" + std::to_string(i),
                       make_D2s(w, i));
          break;
        case TemplateId::D3:
          for (std::size_t i = 0; i < 3; ++i)
            check_grid(rep.cells, "D3" + tag + " i=" + std::to_string(i),
                       make_D3(w, i));
          break;
        case TemplateId::D3s:
          for (std::size_t i = 0; i < 3; ++i)
            check_grid(rep.cells, "D3*" + tag + " i=" + std::to_string(i),
                       make_D3s(w, i));
          break;
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

HomLambdaResult hom_lambda(const IdealKInvariant& a, const IdealKInvariant& b) {
  if (!a.fully_populated() || !b.fully_populated())
    throw std::invalid_argument("hom_lambda: UNKNOWN slots present");
  if (a.layers.size() != b.layers.size())
    throw std::invalid_argument("hom_lambda: moduli sets differ");
  for (std::size_t k = 0; k < a.layers.size(); ++k)
    if (a.layers[k].n != b.layers[k].n)
      throw std::invalid_argument("hom_lambda: moduli sets differ");

  // Slot order: base 0..5, then per layer F_{n,0..5} and H_{n,0..5}.
  auto slots_of = [](const IdealKInvariant& x) {
    std::vector<FinAbGroup> s;
    for (std::size_t i = 0; i < 6; ++i) s.push_back(x.base.groups[i]);
    for (const auto& l : x.layers) {
      for (std::size_t i = 0; i < 6; ++i) s.push_back(l.coeff.slots[i].total);
      for (std::size_t i = 0; i < 6; ++i) s.push_back(*l.H[i]);
    }
    return s;
  };
  std::vector<FinAbGroup> sa = slots_of(a), sb = slots_of(b);

  struct Edge {
    std::size_t src, dst;
    GroupHom ma, mb;
  };
  std::vector<Edge> edges;
  auto collect = [&](const IdealKInvariant& x) {
    std::vector<GroupHom> maps;
    for (std::size_t i = 0; i < 6; ++i) maps.push_back(x.base_tilde.maps[i]);
    for (std::size_t k = 0; k < x.layers.size(); ++k) {
      const ModulusLayer& l = x.layers[k];
      for (std::size_t i = 0; i < 6; ++i) maps.push_back(l.f_tilde.maps[i]);
      for (std::size_t i = 0; i < 6; ++i) maps.push_back(l.rho[i]);
      for (std::size_t i = 0; i < 6; ++i) maps.push_back(l.beta[i]);
      for (std::size_t i = 0; i < 6; ++i) maps.push_back(l.xn_base[i]);
      for (std::size_t i = 0; i < 6; ++i) maps.push_back(*l.h11_in[i]);
      for (std::size_t i = 0; i < 6; ++i) maps.push_back(*l.h11_out[i]);
      for (std::size_t i = 0; i < 6; ++i) maps.push_back(*l.hn1_in[i]);
      for (std::size_t i = 0; i < 6; ++i) maps.push_back(*l.hn1_out[i]);
      for (std::size_t i = 0; i < 6; ++i) maps.push_back(*l.h1n_in[i]);
      for (std::size_t i = 0; i < 6; ++i) maps.push_back(*l.h1n_out[i]);
    }
    return maps;
  };
  std::vector<GroupHom> ma = collect(a), mb = collect(b);

  // Endpoint slot indices, mirroring collect()'s order.
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  auto Fs = [&](std::size_t k, std::size_t i) { return 6 + 12 * k + i % 6; };
  auto Hs = [&](std::size_t k, std::size_t i) {
    return 6 + 12 * k + 6 + i % 6;
  };
  for (std::size_t i = 0; i < 6; ++i) ends.push_back({i, (i + 1) % 6});
  for (std::size_t k = 0; k < a.layers.size(); ++k) {
    for (std::size_t i = 0; i < 6; ++i)
      ends.push_back({Fs(k, i), Fs(k, i + 1)});
    for (std::size_t i = 0; i < 6; ++i) ends.push_back({i, Fs(k, i)});
    for (std::size_t i = 0; i < 6; ++i) ends.push_back({Fs(k, i), (i + 3) % 6});
    for (std::size_t i = 0; i < 6; ++i) ends.push_back({i, i});
    for (std::size_t i = 0; i < 6; ++i)
      ends.push_back({(i + 1) % 6, Hs(k, i)});
    for (std::size_t i = 0; i < 6; ++i)
      ends.push_back({Hs(k, i), (i + 3) % 6});
    for (std::size_t i = 0; i < 6; ++i) ends.push_back({Fs(k, i), Hs(k, i)});
    for (std::size_t i = 0; i < 6; ++i)
      ends.push_back({Hs(k, i), (i + 2) % 6});
    for (std::size_t i = 0; i < 6; ++i)
      ends.push_back({(i + 2) % 6, Hs(k, i)});
    for (std::size_t i = 0; i < 6; ++i)
      ends.push_back({Hs(k, i), Fs(k, i + 1)});
  }
  for (std::size_t e = 0; e < ma.size(); ++e)
    edges.push_back({ends[e].first, ends[e].second, ma[e], mb[e]});

  std::vector<HomData> v_slots, w_slots;
  for (std::size_t s = 0; s < sa.size(); ++s) v_slots.emplace_back(sa[s], sb[s]);
  for (const auto& e : edges)
    w_slots.emplace_back(sa[e.src], sb[e.dst]);

  HomTupleKernel kern = solve_hom_constraints(
      std::move(v_slots), w_slots, [&](const std::vector<GroupHom>& alpha) {
        std::vector<GroupHom> defect;
        for (const auto& e : edges)
          defect.push_back(add(compose(e.mb, alpha[e.src]),
                               negate(compose(alpha[e.dst], e.ma))));
        return defect;
      });

  HomLambdaResult out;
  out.group = kern.group;
  for (std::size_t g = 0; g < out.group.gens(); ++g) {
    std::vector<Int> e(out.group.gens());
    e[g] = 1;
    out.basis.push_back(kern.tuple_from(e));
  }
  return out;
}

}  // namespace sixtermk
