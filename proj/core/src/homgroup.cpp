#include "sixtermk/homgroup.hpp"

#include <stdexcept>

namespace sixtermk {

namespace {

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

HomData::HomData(FinAbGroup a, FinAbGroup b)
    : a_(std::move(a)), b_(std::move(b)) {
  for (std::size_t i = 0; i < a_.gens(); ++i) {
    Int p = a_.gen_order(i);
    for (std::size_t j = 0; j < b_.gens(); ++j) {
      Int q = b_.gen_order(j);
      if (p == 0) {
        pieces_.push_back({i, j, 1, q});
      } else if (q != 0) {
        Int g = gcd_int(p, q);
        if (g > 1) pieces_.push_back({i, j, q / g, g});
      }
      // p > 0, q == 0: only the zero hom
    }
  }
  std::vector<std::size_t> finite;
  for (std::size_t k = 0; k < pieces_.size(); ++k)
    if (pieces_[k].order != 0) finite.push_back(k);
  IntMatrix r(pieces_.size(), finite.size());
  for (std::size_t c = 0; c < finite.size(); ++c)
    r.at(finite[c], c) = pieces_[finite[c]].order;
  sum_ = canonicalize(pieces_.size(), r);
  group_ = sum_.group;
}

std::vector<Int> HomData::coordinates_of(const GroupHom& f) const {
  if (f.source != a_ || f.target != b_)
    throw std::invalid_argument("HomData: hom has wrong endpoints");
  std::vector<Int> pc(pieces_.size());
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    const Piece& p = pieces_[k];
    Int m = f.matrix.at(p.tgt, p.src);
    if (m % p.gen_value != 0)
      throw std::invalid_argument("HomData: hom not in the modeled group");
    pc[k] = m / p.gen_value;
  }
  return GroupHom::reduce_coords(group_, sum_.proj.apply(pc));
}

GroupHom HomData::from_coordinates(const std::vector<Int>& coords) const {
  std::vector<Int> pc = sum_.lift.apply(coords);
  IntMatrix m(b_.gens(), a_.gens());
  for (std::size_t k = 0; k < pieces_.size(); ++k)
    m.at(pieces_[k].tgt, pieces_[k].src) = pieces_[k].gen_value * pc[k];
  return {a_, b_, m};
}

std::vector<GroupHom> HomData::basis() const {
  std::vector<GroupHom> out;
  for (std::size_t k = 0; k < group_.gens(); ++k) {
    std::vector<Int> e(group_.gens());
    e[k] = 1;
    out.push_back(from_coordinates(e));
  }
  return out;
}

HomGroupResult hom_group(const FinAbGroup& a, const FinAbGroup& b) {
  HomData h(a, b);
  return {h.group(), h.basis()};
}

FinAbGroup ext_group(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<FinAbGroup> parts;
  for (const auto& d : a.torsion)
    for (std::size_t j = 0; j < b.gens(); ++j) {
      Int q = b.gen_order(j);
      Int e = q == 0 ? d : gcd_int(d, q);
      if (e > 1) parts.push_back(FinAbGroup::cyclic(e));
    }
  return direct_sum(parts).group;
}

TensorModResult tensor_mod(const FinAbGroup& a, const Int& n) {
  if (n < 2) throw std::invalid_argument("tensor_mod: modulus must be >= 2");
  IntMatrix rel =
      (IntMatrix::identity(a.gens()) * n).hconcat(a.relation_matrix());
  Quotient q = canonicalize(a.gens(), rel);
  return {q.group, GroupHom(a, q.group, q.proj), q.lift};
}

TorModResult tor_mod(const FinAbGroup& a, const Int& n) {
  if (n < 2) throw std::invalid_argument("tor_mod: modulus must be >= 2");
  std::vector<std::vector<Int>> cols;
  for (std::size_t j = 0; j < a.torsion.size(); ++j) {
    Int d = a.torsion[j];
    Int g = gcd_int(d, n);
    if (g > 1) {
      std::vector<Int> c(a.gens());
      c[a.rank + j] = d / g;
      cols.push_back(c);
    }
  }
  IntMatrix gens(a.gens(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < a.gens(); ++r) gens.at(r, c) = cols[c][r];
  Subgroup s = subgroup_generated(a, gens);
  return {s.group, s.incl};
}

GroupHom times_n(const FinAbGroup& g, const Int& n) {
  return GroupHom::scalar(g, n);
}

GroupHom induced_on_tensor(const GroupHom& f, const TensorModResult& src,
                           const TensorModResult& dst) {
  return {src.group, dst.group, dst.reduce.matrix * f.matrix * src.lift};
}

std::vector<GroupHom> HomTupleKernel::tuple_from(
    const std::vector<Int>& coords) const {
  std::vector<GroupHom> out;
  for (std::size_t k = 0; k < slots.size(); ++k)
    out.push_back(slots[k].from_coordinates(slot_coords[k].apply(coords)));
  return out;
}

HomTupleKernel solve_hom_constraints(
    std::vector<HomData> v_slots, const std::vector<HomData>& w_slots,
    const std::function<std::vector<GroupHom>(const std::vector<GroupHom>&)>&
        constraint) {
  std::vector<FinAbGroup> v_parts, w_parts;
  for (const auto& h : v_slots) v_parts.push_back(h.group());
  for (const auto& h : w_slots) w_parts.push_back(h.group());
  DirectSum V = direct_sum(v_parts);
  DirectSum W = direct_sum(w_parts);

  IntMatrix cmat(W.group.gens(), V.group.gens());
  for (std::size_t g = 0; g < V.group.gens(); ++g) {
    std::vector<Int> e(V.group.gens());
    e[g] = 1;
    std::vector<GroupHom> tuple;
    for (std::size_t k = 0; k < v_slots.size(); ++k)
      tuple.push_back(
          v_slots[k].from_coordinates(V.project[k].matrix.apply(e)));
    std::vector<GroupHom> defect = constraint(tuple);
    std::vector<Int> w(W.group.gens());
    for (std::size_t k = 0; k < w_slots.size(); ++k) {
      std::vector<Int> wk =
          W.inject[k].matrix.apply(w_slots[k].coordinates_of(defect[k]));
      for (std::size_t r = 0; r < w.size(); ++r) w[r] += wk[r];
    }
    for (std::size_t r = 0; r < w.size(); ++r) cmat.at(r, g) = w[r];
  }
  Subgroup k = kernel(GroupHom(V.group, W.group, cmat));

  HomTupleKernel out;
  out.group = k.group;
  out.slots = std::move(v_slots);
  for (std::size_t i = 0; i < out.slots.size(); ++i)
    out.slot_coords.push_back(V.project[i].matrix * k.incl.matrix);
  return out;
}

GroupHom induced_on_tor(const GroupHom& f, const TorModResult& src,
                        const TorModResult& dst) {
  const FinAbGroup& b = f.target;
  IntMatrix sys = dst.incl.matrix.hconcat(b.relation_matrix());
  IntMatrix out(dst.group.gens(), src.group.gens());
  for (std::size_t c = 0; c < src.group.gens(); ++c) {
    std::vector<Int> img = f.matrix.apply(src.incl.matrix.col_vector(c));
    auto sol = solve_linear(sys, img);
    if (!sol)
      throw std::logic_error("induced_on_tor: image left the torsion part");
    for (std::size_t r = 0; r < dst.group.gens(); ++r) out.at(r, c) = (*sol)[r];
  }
  return {src.group, dst.group, out};
}

}  // namespace sixtermk
