#include "sixtermk/sixterm.hpp"

#include <stdexcept>

namespace sixtermk {

bool SixTermSeq::shape_ok() const {
  for (std::size_t i = 0; i < 6; ++i) {
    if (maps[i].source != groups[i]) return false;
    if (maps[i].target != groups[(i + 1) % 6]) return false;
  }
  return true;
}

SixTermSeq SixTermSeq::all_zero() {
  SixTermSeq s;
  for (std::size_t i = 0; i < 6; ++i)
    s.maps[i] = GroupHom::zero(FinAbGroup::zero(), FinAbGroup::zero());
  s.verified_exact = true;
  return s;
}

ExactnessReport validate_exactness(const SixTermSeq& s) {
  if (!s.shape_ok())
    throw std::invalid_argument("validate_exactness: shape violation");
  ExactnessReport rep;
  for (std::size_t i = 0; i < 6; ++i) {
    const GroupHom& f = s.maps[(i + 5) % 6];
    const GroupHom& g = s.maps[i];
    GroupHom gf = compose(g, f);
    if (!gf.is_zero_map()) {
      rep.position_ok[i] = false;
      rep.composite_nonzero[i] = true;
      for (std::size_t c = 0; c < gf.matrix.cols(); ++c) {
        bool nonzero = false;
        for (std::size_t r = 0; r < gf.matrix.rows(); ++r)
          if (gf.matrix.at(r, c) != 0) nonzero = true;
        if (nonzero) {
          rep.witness[i] = f.matrix.col_vector(c);
          break;
        }
      }
      continue;
    }
    Subgroup k = kernel(g);
    bool ok = true;
    for (std::size_t c = 0; c < k.incl.matrix.cols() && ok; ++c) {
      std::vector<Int> x = k.incl.matrix.col_vector(c);
      if (!in_image(f, x)) {
        ok = false;
        rep.witness[i] = x;
      }
    }
    rep.position_ok[i] = ok;
  }
  return rep;
}

bool verify_and_mark(SixTermSeq& s) {
  s.verified_exact = validate_exactness(s).all_ok();
  return s.verified_exact;
}

bool SixTermHom::commutes(const SixTermSeq& s, const SixTermSeq& t) const {
  for (std::size_t i = 0; i < 6; ++i) {
    std::size_t j = (i + 1) % 6;
    if (!(compose(t.maps[i], components[i]) ==
          compose(components[j], s.maps[i])))
      return false;
  }
  return true;
}

bool SixTermHom::is_isomorphism_tuple() const {
  for (const auto& c : components)
    if (!is_isomorphism(c)) return false;
  return true;
}

SixTermHom add(const SixTermHom& a, const SixTermHom& b) {
  SixTermHom out;
  for (std::size_t i = 0; i < 6; ++i)
    out.components[i] = add(a.components[i], b.components[i]);
  return out;
}

SixTermHom negate(const SixTermHom& a) {
  SixTermHom out;
  for (std::size_t i = 0; i < 6; ++i)
    out.components[i] = negate(a.components[i]);
  return out;
}

SixTermHom compose(const SixTermHom& g, const SixTermHom& f) {
  SixTermHom out;
  for (std::size_t i = 0; i < 6; ++i)
    out.components[i] = compose(g.components[i], f.components[i]);
  return out;
}

SixTermHom identity_tuple(const SixTermSeq& s) {
  SixTermHom out;
  for (std::size_t i = 0; i < 6; ++i)
    out.components[i] = GroupHom::identity(s.groups[i]);
  return out;
}

SixTermHom HomSixResult::from_coordinates(const std::vector<Int>& coords) const {
  SixTermHom out;
  for (std::size_t i = 0; i < 6; ++i)
    out.components[i] =
        slot_homs[i].from_coordinates(slot_coords[i].apply(coords));
  return out;
}

HomSixResult hom_six(const SixTermSeq& s, const SixTermSeq& t) {
  HomSixResult res;
  std::vector<FinAbGroup> v_parts, w_parts;
  std::vector<HomData> w_homs;
  for (std::size_t i = 0; i < 6; ++i) {
    res.slot_homs.emplace_back(s.groups[i], t.groups[i]);
    v_parts.push_back(res.slot_homs[i].group());
    w_homs.emplace_back(s.groups[i], t.groups[(i + 1) % 6]);
    w_parts.push_back(w_homs[i].group());
  }
  DirectSum V = direct_sum(v_parts);
  DirectSum W = direct_sum(w_parts);

  // Constraint map: (alpha_i) -> (t.m_i o alpha_i - alpha_{i+1} o s.m_i).
  IntMatrix cmat(W.group.gens(), V.group.gens());
  for (std::size_t g = 0; g < V.group.gens(); ++g) {
    std::vector<Int> e(V.group.gens());
    e[g] = 1;
    std::array<GroupHom, 6> alpha;
    for (std::size_t i = 0; i < 6; ++i)
      alpha[i] =
          res.slot_homs[i].from_coordinates(V.project[i].matrix.apply(e));
    std::vector<Int> w(W.group.gens());
    for (std::size_t i = 0; i < 6; ++i) {
      GroupHom d = add(compose(t.maps[i], alpha[i]),
                       negate(compose(alpha[(i + 1) % 6], s.maps[i])));
      std::vector<Int> wi =
          W.inject[i].matrix.apply(w_homs[i].coordinates_of(d));
      for (std::size_t r = 0; r < w.size(); ++r) w[r] += wi[r];
    }
    for (std::size_t r = 0; r < w.size(); ++r) cmat.at(r, g) = w[r];
  }
  GroupHom constraint(V.group, W.group, cmat);
  Subgroup k = kernel(constraint);
  res.group = k.group;
  for (std::size_t i = 0; i < 6; ++i)
    res.slot_coords.push_back(V.project[i].matrix * k.incl.matrix);
  for (std::size_t g = 0; g < res.group.gens(); ++g) {
    std::vector<Int> e(res.group.gens());
    e[g] = 1;
    res.basis.push_back(res.from_coordinates(e));
  }
  return res;
}

SixTermSeq rotate3(const SixTermSeq& s) {
  SixTermSeq out;
  for (std::size_t i = 0; i < 6; ++i) {
    out.groups[i] = s.groups[(i + 3) % 6];
    out.maps[i] = s.maps[(i + 3) % 6];
  }
  out.verified_exact = s.verified_exact;
  return out;
}

std::optional<SixTermHom> signed_iso_search(const SixTermSeq& s,
                                            const SixTermSeq& t, long bound) {
  if (bound < 1)
    throw std::invalid_argument("signed_iso_search: bound must be >= 1");
  // Necessary condition: slotwise equal canonical forms.
  for (std::size_t i = 0; i < 6; ++i)
    if (!(s.groups[i] == t.groups[i])) return std::nullopt;
  HomSixResult h = hom_six(s, t);
  const std::size_t g = h.group.gens();
  if (g == 0) {
    SixTermHom zero = h.from_coordinates({});
    if (zero.is_isomorphism_tuple()) return zero;
    return std::nullopt;
  }
  // Deterministic order per coordinate: 0, 1, -1, 2, -2, ...
  std::vector<Int> values;
  values.push_back(0);
  for (long v = 1; v <= bound; ++v) {
    values.push_back(v);
    values.push_back(-v);
  }
  std::vector<std::size_t> idx(g, 0);
  for (;;) {
    std::vector<Int> coords(g);
    for (std::size_t i = 0; i < g; ++i) coords[i] = values[idx[i]];
    SixTermHom cand = h.from_coordinates(coords);
    if (cand.is_isomorphism_tuple()) return cand;
    std::size_t j = 0;
    while (j < g) {
      if (++idx[j] < values.size()) break;
      idx[j] = 0;
      ++j;
    }
    if (j == g) break;
  }
  return std::nullopt;
}

}  // namespace sixtermk
