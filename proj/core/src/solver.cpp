#include "sixtermk/solver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "sixtermk/homgroup.hpp"
#include "sixtermk/literal.hpp"

namespace sixtermk {

namespace {

std::vector<std::vector<unsigned>> partitions(unsigned n) {
  // Descending partitions of n, lexicographically largest first.
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left,
                                                    unsigned maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool group_less(const FinAbGroup& a, const FinAbGroup& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  if (a.torsion.size() != b.torsion.size())
    return a.torsion.size() < b.torsion.size();
  return a.torsion < b.torsion;
}

}  // namespace

std::vector<FinAbGroup> abelian_groups_of_order(const Int& n) {
  if (n <= 0) throw std::invalid_argument("abelian_groups_of_order: n >= 1");
  if (n == 1) return {FinAbGroup::zero()};

  std::map<Int, unsigned> factor;
  Int m = n;
  for (Int p = 2; p * p <= m; ++p)
    while (m % p == 0) {
      ++factor[p];
      m /= p;
    }
  if (m > 1) ++factor[m];

  std::vector<FinAbGroup> acc = {FinAbGroup::zero()};
  for (const auto& [p, e] : factor) {
    std::vector<FinAbGroup> next;
    for (const auto& part : partitions(e))
      for (const FinAbGroup& g : acc) {
        std::vector<FinAbGroup> parts = {g};
        for (unsigned exp : part) {
          Int pe = 1;
          for (unsigned t = 0; t < exp; ++t) pe *= p;
          parts.push_back(FinAbGroup::cyclic(pe));
        }
        next.push_back(direct_sum(parts).group);
      }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end(), group_less);
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  return acc;
}

bool ses_realizable(const FinAbGroup& q, const FinAbGroup& h,
                    const FinAbGroup& k) {
  if (q.rank || h.rank || k.rank)
    throw std::invalid_argument("ses_realizable: finite groups only");
  HomData homs(q, h);
  for (const auto& coords : all_elements(homs.group())) {
    GroupHom f = homs.from_coordinates(coords);
    if (!kernel(f).group.is_zero()) continue;
    if (image_and_cokernel(f).cokernel == k) return true;
  }
  return false;
}

SlotResolution merge_resolutions(const SlotResolution& a,
                                 const SlotResolution& b) {
  SlotResolution out;
  out.provenance = a.provenance;
  out.provenance.insert(out.provenance.end(), b.provenance.begin(),
                        b.provenance.end());
  auto contradict = [&]() {
    out.status = SlotResolution::CONTRADICTION;
    out.groups.clear();
    out.provenance.push_back("contradiction: resolutions disagree");
    return out;
  };
  if (a.status == SlotResolution::CONTRADICTION ||
      b.status == SlotResolution::CONTRADICTION)
    return contradict();
  if (a.status == SlotResolution::UNKNOWN) {
    out.status = b.status;
    out.groups = b.groups;
    return out;
  }
  if (b.status == SlotResolution::UNKNOWN) {
    out.status = a.status;
    out.groups = a.groups;
    return out;
  }
  // Both carry candidate lists (UNIQUE = singleton); intersect.
  std::vector<FinAbGroup> both;
  for (const auto& g : a.groups)
    if (std::find(b.groups.begin(), b.groups.end(), g) != b.groups.end())
      both.push_back(g);
  if (both.empty()) return contradict();
  out.groups = std::move(both);
  out.status = out.groups.size() == 1 ? SlotResolution::UNIQUE
                                      : SlotResolution::CANDIDATES;
  return out;
}

namespace {

// Resolve one unknown node flanked by known nodes: exactness around it yields
// 0 -> coker(u) -> X -> ker(v) -> 0 with u the edge into the predecessor and
// v the edge out of the successor.
SlotResolution resolve_node(const SequenceConstraint& c, std::size_t x,
                            const DeduceOptions& opt) {
  SlotResolution res;
  const std::size_t L = c.nodes.size();
  auto exact_here = [&](std::size_t p) {
    return c.exact_at.empty() ||
           std::find(c.exact_at.begin(), c.exact_at.end(), p) !=
               c.exact_at.end();
  };
  auto idx = [&](long k) -> std::optional<std::size_t> {
    if (c.cyclic) return static_cast<std::size_t>(((k % (long)L) + L) % L);
    if (k < 0 || k >= (long)L) return std::nullopt;
    return static_cast<std::size_t>(k);
  };

  auto pred = idx((long)x - 1), succ = idx((long)x + 1);
  if (!pred || !succ || !c.nodes[*pred] || !c.nodes[*succ]) return res;
  if (!exact_here(x) || !exact_here(*pred) || !exact_here(*succ)) return res;

  std::optional<FinAbGroup> q;  // coker(u), the sub part of X
  if (c.nodes[*pred]->is_zero()) {
    q = FinAbGroup::zero();
  } else if (auto up = idx((long)*pred - 1);
             up && c.edges[*up] && exact_here(*pred)) {
    q = image_and_cokernel(*c.edges[*up]).cokernel;
  }
  std::optional<FinAbGroup> k;  // ker(v), the quotient part of X
  if (c.nodes[*succ]->is_zero()) {
    k = FinAbGroup::zero();
  } else if (c.edges[*succ]) {
    k = kernel(*c.edges[*succ]).group;
  }
  if (!q || !k) return res;

  const std::string where = c.name.empty() ? "" : " [" + c.name + "]";
  auto unique = [&](const FinAbGroup& g, const std::string& rule) {
    res.status = SlotResolution::UNIQUE;
    res.groups = {g};
    res.provenance.push_back(rule + ": 0 -> " + format_group(*q) + " -> X -> " +
                             format_group(*k) + " -> 0 gives X = " +
                             format_group(g) + where);
  };

  if (q->is_zero() && k->is_zero()) {
    unique(FinAbGroup::zero(), "R1");
  } else if (q->is_zero()) {
    unique(*k, "R2");
  } else if (k->is_zero()) {
    unique(*q, "R2");
  } else if (k->is_free()) {
    unique(direct_sum({*q, *k}).group, "R4");
  } else if (q->rank == 0 && k->rank == 0) {
    Int order = q->order() * k->order();
    if (order > opt.max_order) {
      res.provenance.push_back("R5 skipped: order " + order.str() +
                               " exceeds cap" + where);
      return res;
    }
    std::vector<FinAbGroup> cands;
    for (const FinAbGroup& g : abelian_groups_of_order(order))
      if (order > opt.filter_cap || ses_realizable(*q, g, *k))
        cands.push_back(g);
    if (cands.empty()) {
      res.status = SlotResolution::CONTRADICTION;
      res.provenance.push_back("R5: no abelian group of order " + order.str() +
                               " admits 0 -> " + format_group(*q) +
                               " -> X -> " + format_group(*k) + " -> 0" +
                               where);
    } else if (cands.size() == 1) {
      unique(cands[0], "R5");
    } else {
      res.status = SlotResolution::CANDIDATES;
      res.groups = cands;
      std::string list;
      for (const auto& g : cands) {
        if (!list.empty()) list += ", ";
        list += format_group(g);
      }
      res.provenance.push_back("R5: |X| = " + order.str() + ", candidates {" +
                               list + "}" + where);
    }
  }
  return res;
}

}  // namespace

DeduceResult deduce(const SequenceConstraint& c, const DeduceOptions& opt) {
  if (c.nodes.size() != c.edges.size() && c.cyclic)
    throw std::invalid_argument("deduce: cyclic chain needs |nodes| == |edges|");
  DeduceResult out;
  out.nodes.resize(c.nodes.size());
  for (std::size_t x = 0; x < c.nodes.size(); ++x) {
    if (c.nodes[x]) {
      out.nodes[x].status = SlotResolution::UNIQUE;
      out.nodes[x].groups = {*c.nodes[x]};
      continue;
    }
    out.nodes[x] = resolve_node(c, x, opt);
    if (out.nodes[x].status == SlotResolution::CONTRADICTION)
      out.contradiction = true;
  }
  return out;
}

namespace {

SequenceConstraint seq2_constraint(const IdealKInvariant& inv,
                                   const ModulusLayer& l, std::size_t i) {
  auto f1 = [&](std::size_t j) { return inv.base_tilde.maps[j % 6]; };
  auto B = [&](std::size_t j) { return inv.base.groups[j % 6]; };
  auto nf1 = [&](std::size_t j) {
    return GroupHom(f1(j).source, f1(j).target, f1(j).matrix * l.n);
  };
  SequenceConstraint c;
  c.name = "SEQ2 n=" + l.n.str() + " i=" + std::to_string(i);
  c.nodes = {B(i + 1), std::nullopt, B(i + 3), B(i + 4), std::nullopt, B(i)};
  c.edges = {std::nullopt, std::nullopt, nf1(i + 3),
             std::nullopt, std::nullopt, nf1(i)};
  return c;
}

SequenceConstraint seq3_constraint(const IdealKInvariant& inv,
                                   const ModulusLayer& l, std::size_t i) {
  auto B = [&](std::size_t j) { return inv.base.groups[j % 6]; };
  auto F = [&](std::size_t j) { return l.coeff.slots[j % 6].total; };
  auto fnrho = [&](std::size_t j) {
    return compose(l.f_tilde.maps[j % 6], l.rho[j % 6]);
  };
  SequenceConstraint c;
  c.name = "SEQ3 n=" + l.n.str() + " i=" + std::to_string(i);
  c.nodes = {F(i), std::nullopt, B(i + 2), F(i + 3), std::nullopt, B(i + 5)};
  c.edges = {std::nullopt, std::nullopt, fnrho(i + 2),
             std::nullopt, std::nullopt, fnrho(i + 5)};
  return c;
}

}  // namespace

HLayerReport solve_H_layer(IdealKInvariant& inv, const DeduceOptions& opt) {
  HLayerReport rep;
  for (ModulusLayer& l : inv.layers) {
    std::array<SlotResolution, 6> slot;
    for (std::size_t i = 0; i < 3; ++i) {
      DeduceResult r2 = deduce(seq2_constraint(inv, l, i), opt);
      DeduceResult r3 = deduce(seq3_constraint(inv, l, i), opt);
      // Node 1 of either instance is H_i, node 4 is H_{i+3}.
      slot[i] = merge_resolutions(r2.nodes[1], r3.nodes[1]);
      slot[i + 3] = merge_resolutions(r2.nodes[4], r3.nodes[4]);
    }
    for (std::size_t i = 0; i < 6; ++i) {
      if (slot[i].status == SlotResolution::UNIQUE) l.H[i] = slot[i].groups[0];
      if (slot[i].status == SlotResolution::CONTRADICTION)
        rep.contradiction = true;
      rep.slots.push_back({l.n, i, std::move(slot[i])});
    }
  }
  return rep;
}

namespace {

// Enumerate homs with group coordinates in "small first" order (0, 1, -1, ...;
// torsion coordinates walk their residues from both ends). Leftmost
// coordinate varies slowest. Visitor returns true to stop.
bool enumerate_homs(const HomData& homs, long bound,
                    const std::function<bool(const GroupHom&)>& visit) {
  const FinAbGroup& g = homs.group();
  std::vector<std::vector<Int>> values(g.gens());
  for (std::size_t k = 0; k < g.gens(); ++k) {
    Int d = g.gen_order(k);
    if (d == 0) {
      values[k].push_back(0);
      for (long v = 1; v <= bound; ++v) {
        values[k].push_back(v);
        values[k].push_back(-v);
      }
    } else {
      values[k].push_back(0);
      for (Int lo = 1, hi = d - 1; lo <= hi; ++lo, --hi) {
        values[k].push_back(lo);
        if (hi != lo) values[k].push_back(hi);
      }
    }
  }
  std::vector<Int> coords(g.gens());
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == coords.size()) return visit(homs.from_coordinates(coords));
    for (const Int& v : values[k]) {
      coords[k] = v;
      if (rec(k + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

struct LayerMaps {
  GroupHom h11i, h11o, hn1i, hn1o, h1ni, h1no;
};

// Staged search for the six h maps at one index i, pruning each stage with
// every exactness and triangle condition determined so far.
std::optional<LayerMaps> search_index(const IdealKInvariant& inv,
                                      const ModulusLayer& l, std::size_t i,
                                      long bound) {
  auto f1 = [&](std::size_t j) { return inv.base_tilde.maps[j % 6]; };
  auto fn = [&](std::size_t j) { return l.f_tilde.maps[j % 6]; };
  auto rho = [&](std::size_t j) { return l.rho[j % 6]; };
  auto beta = [&](std::size_t j) { return l.beta[j % 6]; };
  auto xn = [&](std::size_t j) { return l.xn_base[j % 6]; };
  auto nf1 = [&](std::size_t j) {
    GroupHom f = f1(j);
    return GroupHom(f.source, f.target, f.matrix * l.n);
  };
  auto B = [&](std::size_t j) { return inv.base.groups[j % 6]; };
  auto F = [&](std::size_t j) { return l.coeff.slots[j % 6].total; };
  const FinAbGroup& H = *l.H[i];

  HomData hd_h11i(B(i + 1), H), hd_h11o(H, B(i + 3));
  HomData hd_hn1i(F(i), H), hd_hn1o(H, B(i + 2));
  HomData hd_h1ni(B(i + 2), H), hd_h1no(H, F(i + 1));

  std::optional<LayerMaps> found;
  LayerMaps cur;

  enumerate_homs(hd_h11i, bound, [&](const GroupHom& h11i) {
    if (!is_exact_pair(nf1(i), h11i)) return false;
    cur.h11i = h11i;
    return enumerate_homs(hd_h11o, bound, [&](const GroupHom& h11o) {
      if (!is_exact_pair(h11i, h11o)) return false;
      if (!is_exact_pair(h11o, nf1(i + 3))) return false;
      cur.h11o = h11o;
      return enumerate_homs(hd_hn1i, bound, [&](const GroupHom& hn1i) {
        if (!is_exact_pair(compose(fn(i + 5), rho(i + 5)), hn1i)) return false;
        if (!(compose(hn1i, rho(i)) == compose(h11i, f1(i)))) return false;
        if (!(compose(h11o, hn1i) == beta(i))) return false;
        cur.hn1i = hn1i;
        return enumerate_homs(hd_hn1o, bound, [&](const GroupHom& hn1o) {
          if (!is_exact_pair(hn1i, hn1o)) return false;
          if (!is_exact_pair(hn1o, compose(fn(i + 2), rho(i + 2))))
            return false;
          if (!(compose(hn1o, h11i) == f1(i + 1))) return false;
          GroupHom nh11o(h11o.source, h11o.target, h11o.matrix * l.n);
          if (!(compose(f1(i + 2), hn1o) == nh11o)) return false;
          cur.hn1o = hn1o;
          return enumerate_homs(hd_h1ni, bound, [&](const GroupHom& h1ni) {
            if (!is_exact_pair(compose(beta(i + 5), fn(i + 4)), h1ni))
              return false;
            if (!(compose(h11i, xn(i + 1)) == compose(h1ni, f1(i + 1))))
              return false;
            if (!(compose(h11o, h1ni) == f1(i + 2))) return false;
            if (!(compose(hn1i, fn(i + 5)) ==
                  compose(h1ni, negate(beta(i + 5)))))
              return false;
            if (!(compose(hn1o, h1ni) == xn(i + 2))) return false;
            cur.h1ni = h1ni;
            return enumerate_homs(hd_h1no, bound, [&](const GroupHom& h1no) {
              if (!is_exact_pair(h1ni, h1no)) return false;
              if (!is_exact_pair(h1no, compose(beta(i + 2), fn(i + 1))))
                return false;
              if (!(compose(h1no, h11i) == rho(i + 1))) return false;
              if (!(compose(negate(beta(i + 1)), h1no) ==
                    compose(f1(i + 3), h11o)))
                return false;
              if (!(compose(h1no, hn1i) == fn(i))) return false;
              if (!(compose(fn(i + 1), h1no) == compose(rho(i + 2), hn1o)))
                return false;
              cur.h1no = h1no;
              found = cur;
              return true;
            });
          });
        });
      });
    });
  });
  return found;
}

}  // namespace

namespace {

// One full attempt against the layer's current maps; commits only on success.
bool search_layer_once(IdealKInvariant& inv, ModulusLayer& l, long bound) {
  std::array<LayerMaps, 6> maps;
  for (std::size_t i = 0; i < 6; ++i) {
    std::optional<LayerMaps> m = search_index(inv, l, i, bound);
    if (!m) return false;
    maps[i] = *m;
  }
  for (std::size_t i = 0; i < 6; ++i) {
    l.h11_in[i] = maps[i].h11i;
    l.h11_out[i] = maps[i].h11o;
    l.hn1_in[i] = maps[i].hn1i;
    l.hn1_out[i] = maps[i].hn1o;
    l.h1n_in[i] = maps[i].h1ni;
    l.h1n_out[i] = maps[i].h1no;
  }
  return true;
}

}  // namespace

bool witness_search_layer(IdealKInvariant& inv, const Int& n, long bound) {
  ModulusLayer* l = inv.layer(n);
  if (!l) throw std::invalid_argument("witness_search_layer: no such modulus");
  for (std::size_t i = 0; i < 6; ++i)
    if (!l->H[i])
      throw std::invalid_argument("witness_search_layer: H slots unresolved");
  if (search_layer_once(inv, *l, bound)) return true;
  // The Tor -> tensor correction in the coefficient sequence is not unique,
  // and the triangle identities can reject the choice made when the layer was
  // built. Retry with every other exact correction before giving up.
  const SixTermSeq original_seq = l->coeff.seq;
  const SixTermSeq original_tilde = l->f_tilde;
  for (const SixTermSeq& alt : exact_block_sequences(inv.base, l->n)) {
    if (alt == original_seq) continue;
    l->coeff.seq = alt;
    l->f_tilde = sign_twist(alt, tilde_pattern());
    if (search_layer_once(inv, *l, bound)) return true;
  }
  l->coeff.seq = original_seq;
  l->f_tilde = original_tilde;
  return false;
}

bool witness_search(TemplateId id, IdealKInvariant& inv, long bound) {
  switch (id) {
    case TemplateId::SEQ1:
    case TemplateId::SEQ4:
    case TemplateId::D0:
    case TemplateId::CORSQ:
      return true;  // no h-map cells
    default:
      break;
  }
  for (const ModulusLayer& l : inv.layers)
    if (!witness_search_layer(inv, l.n, bound)) return false;
  return true;
}

}  // namespace sixtermk
