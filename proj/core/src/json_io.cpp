#include "sixtermk/json_io.hpp"

#include <stdexcept>

#include "sixtermk/literal.hpp"

namespace sixtermk {

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(m.at(r, c).convert_to<long long>());
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw std::invalid_argument("matrix: expected " + std::to_string(rows) +
                                " rows");
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw std::invalid_argument("matrix: expected " + std::to_string(cols) +
                                  " cols");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = Int(j[r][c].get<long long>());
  }
  return m;
}

Json hom_to_json(const GroupHom& f) {
  return Json{{"source", format_group(f.source)},
              {"target", format_group(f.target)},
              {"matrix", matrix_to_json(f.matrix)}};
}

GroupHom hom_from_json(const Json& j) {
  FinAbGroup src = parse_group_literal(j.at("source").get<std::string>());
  FinAbGroup tgt = parse_group_literal(j.at("target").get<std::string>());
  return GroupHom(src, tgt,
                  matrix_from_json(j.at("matrix"), tgt.gens(), src.gens()));
}

Json seq_to_json(const SixTermSeq& s) {
  Json groups = Json::array(), maps = Json::array();
  for (std::size_t i = 0; i < 6; ++i) groups.push_back(format_group(s.groups[i]));
  for (std::size_t i = 0; i < 6; ++i)
    maps.push_back(matrix_to_json(s.maps[i].matrix));
  return Json{{"groups", std::move(groups)}, {"maps", std::move(maps)}};
}

SixTermSeq seq_from_json(const Json& j) {
  const Json& groups = j.at("groups");
  const Json& maps = j.at("maps");
  if (groups.size() != 6 || maps.size() != 6)
    throw std::invalid_argument("sequence: need 6 groups and 6 maps");
  SixTermSeq s;
  for (std::size_t i = 0; i < 6; ++i)
    s.groups[i] = parse_group_literal(groups[i].get<std::string>());
  for (std::size_t i = 0; i < 6; ++i) {
    const FinAbGroup& src = s.groups[i];
    const FinAbGroup& tgt = s.groups[(i + 1) % 6];
    s.maps[i] =
        GroupHom(src, tgt, matrix_from_json(maps[i], tgt.gens(), src.gens()));
  }
  return s;
}

namespace {

template <typename T, typename F>
Json six_array(const std::array<T, 6>& xs, F&& f) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(f(x));
  return out;
}

Json opt_hom_to_json(const std::optional<GroupHom>& f) {
  return f ? hom_to_json(*f) : Json(nullptr);
}

std::optional<GroupHom> opt_hom_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return hom_from_json(j);
}

}  // namespace

Json invariant_to_json(const IdealKInvariant& inv) {
  Json out;
  out["descriptor"] = format_descriptor(inv.desc);
  out["base"] = seq_to_json(inv.base);
  Json moduli = Json::array();
  for (const auto& l : inv.layers) moduli.push_back(l.n.convert_to<long long>());
  out["moduli"] = std::move(moduli);
  Json layers = Json::array();
  for (const auto& l : inv.layers) {
    Json lj;
    lj["n"] = l.n.convert_to<long long>();
    Json F = Json::array();
    for (std::size_t i = 0; i < 6; ++i)
      F.push_back(format_group(l.coeff.slots[i].total));
    lj["F"] = std::move(F);
    Json f = Json::array();
    for (std::size_t i = 0; i < 6; ++i)
      f.push_back(hom_to_json(l.f_tilde.maps[i]));
    lj["f"] = std::move(f);
    lj["rho"] = six_array(l.rho, hom_to_json);
    lj["beta"] = six_array(l.beta, hom_to_json);
    lj["xn"] = six_array(l.xn_base, hom_to_json);
    lj["H"] = six_array(l.H, [](const std::optional<FinAbGroup>& g) {
      return g ? Json(format_group(*g)) : Json(nullptr);
    });
    lj["h11_in"] = six_array(l.h11_in, opt_hom_to_json);
    lj["h11_out"] = six_array(l.h11_out, opt_hom_to_json);
    lj["hn1_in"] = six_array(l.hn1_in, opt_hom_to_json);
    lj["hn1_out"] = six_array(l.hn1_out, opt_hom_to_json);
    lj["h1n_in"] = six_array(l.h1n_in, opt_hom_to_json);
    lj["h1n_out"] = six_array(l.h1n_out, opt_hom_to_json);
    layers.push_back(std::move(lj));
  }
  out["layers"] = std::move(layers);
  return out;
}

IdealKInvariant invariant_from_json(const Json& j) {
  std::vector<Int> moduli;
  for (const auto& n : j.at("moduli")) moduli.push_back(Int(n.get<long long>()));

  ExtensionDescriptor desc;
  const std::string dtext = j.at("descriptor").get<std::string>();
  try {
    desc = parse_descriptor(dtext);
    if (desc.kind == ExtensionDescriptor::Kind::Custom)
      desc.custom = seq_from_json(j.at("base"));
  } catch (const std::invalid_argument&) {
    desc = ExtensionDescriptor::custom_seq(seq_from_json(j.at("base")), dtext);
  }
  IdealKInvariant inv = compute_invariant(desc, moduli);

  // Slot groups and rho/beta/xn are recomputed (they are canonical); the
  // stored sequence maps, H slots and h maps come from the file. The maps
  // matter because the coefficient correction is not unique and a witness
  // search may have settled on a different one than compute_invariant.
  const Json& layers = j.at("layers");
  if (layers.size() != inv.layers.size())
    throw std::invalid_argument("invariant: layer count mismatch");
  for (std::size_t k = 0; k < inv.layers.size(); ++k) {
    const Json& lj = layers[k];
    ModulusLayer& l = inv.layers[k];
    for (std::size_t i = 0; i < 6; ++i) {
      GroupHom f = hom_from_json(lj.at("f")[i]);
      if (!(f.source == l.f_tilde.maps[i].source &&
            f.target == l.f_tilde.maps[i].target))
        throw std::invalid_argument("invariant: layer map shape mismatch");
      l.f_tilde.maps[i] = f;
    }
    l.coeff.seq = sign_twist(l.f_tilde, tilde_pattern());
    if (!validate_exactness(l.coeff.seq).all_ok())
      throw std::invalid_argument("invariant: stored layer maps are not exact");
    l.coeff.seq.verified_exact = true;
    l.f_tilde.verified_exact = true;
    for (std::size_t i = 0; i < 6; ++i) {
      const Json& h = lj.at("H")[i];
      if (!h.is_null()) l.H[i] = parse_group_literal(h.get<std::string>());
      l.h11_in[i] = opt_hom_from_json(lj.at("h11_in")[i]);
      l.h11_out[i] = opt_hom_from_json(lj.at("h11_out")[i]);
      l.hn1_in[i] = opt_hom_from_json(lj.at("hn1_in")[i]);
      l.hn1_out[i] = opt_hom_from_json(lj.at("hn1_out")[i]);
      l.h1n_in[i] = opt_hom_from_json(lj.at("h1n_in")[i]);
      l.h1n_out[i] = opt_hom_from_json(lj.at("h1n_out")[i]);
    }
  }
  return inv;
}

Json constraint_to_json(const SequenceConstraint& c) {
  Json nodes = Json::array(), edges = Json::array();
  for (const auto& n : c.nodes)
    nodes.push_back(n ? Json(format_group(*n)) : Json("?"));
  for (const auto& e : c.edges)
    edges.push_back(e ? hom_to_json(*e) : Json("?"));
  Json out{{"name", c.name},
           {"cyclic", c.cyclic},
           {"nodes", std::move(nodes)},
           {"edges", std::move(edges)}};
  if (!c.exact_at.empty()) out["exact_at"] = c.exact_at;
  return out;
}

SequenceConstraint constraint_from_json(const Json& j) {
  SequenceConstraint c;
  c.name = j.value("name", "");
  c.cyclic = j.value("cyclic", true);
  for (const auto& n : j.at("nodes")) {
    if (n.is_null() || (n.is_string() && n.get<std::string>() == "?"))
      c.nodes.push_back(std::nullopt);
    else
      c.nodes.push_back(parse_group_literal(n.get<std::string>()));
  }
  for (const auto& e : j.at("edges")) {
    if (e.is_null() || (e.is_string() && e.get<std::string>() == "?"))
      c.edges.push_back(std::nullopt);
    else
      c.edges.push_back(hom_from_json(e));
  }
  if (j.contains("exact_at"))
    c.exact_at = j.at("exact_at").get<std::vector<std::size_t>>();
  if (c.cyclic && c.nodes.size() != c.edges.size())
    throw std::invalid_argument("constraint: cyclic chain needs equal counts");
  return c;
}

Json resolution_to_json(const SlotResolution& r) {
  static const char* names[] = {"UNKNOWN", "UNIQUE", "CANDIDATES",
                                "CONTRADICTION"};
  Json groups = Json::array();
  for (const auto& g : r.groups) groups.push_back(format_group(g));
  return Json{{"status", names[r.status]},
              {"groups", std::move(groups)},
              {"provenance", r.provenance}};
}

Json deduce_result_to_json(const SequenceConstraint& c, const DeduceResult& r) {
  Json nodes = Json::array();
  for (const auto& n : r.nodes) nodes.push_back(resolution_to_json(n));
  return Json{{"name", c.name},
              {"contradiction", r.contradiction},
              {"nodes", std::move(nodes)}};
}

Json reports_to_json(const std::vector<DiagramReport>& reps) {
  Json out = Json::array();
  for (const auto& rep : reps) {
    Json cells = Json::array();
    for (const auto& c : rep.cells) {
      static const char* names[] = {"PASS", "FAIL", "SKIP"};
      cells.push_back(Json{{"name", c.name}, {"status", names[c.status]}});
    }
    out.push_back(Json{{"template", format_template_id(rep.id)},
                       {"passed", rep.passed()},
                       {"cells", std::move(cells)}});
  }
  return out;
}

Json h_layer_report_to_json(const HLayerReport& rep) {
  Json slots = Json::array();
  for (const auto& s : rep.slots)
    slots.push_back(Json{{"n", s.n.convert_to<long long>()},
                         {"i", s.i},
                         {"resolution", resolution_to_json(s.res)}});
  return Json{{"contradiction", rep.contradiction},
              {"slots", std::move(slots)}};
}

}  // namespace sixtermk
