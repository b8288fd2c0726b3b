#include "sixtermk/group.hpp"

#include <numeric>
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

Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_int(a, b) * b;
}

}  // namespace

Int FinAbGroup::order() const {
  if (rank > 0) return 0;
  Int n = 1;
  for (const auto& d : torsion) n *= d;
  return n;
}

IntMatrix FinAbGroup::relation_matrix() const {
  IntMatrix r(gens(), torsion.size());
  for (std::size_t j = 0; j < torsion.size(); ++j)
    r.at(rank + j, j) = torsion[j];
  return r;
}

FinAbGroup FinAbGroup::cyclic(const Int& d) {
  if (d == 0) return free_group(1);
  if (d == 1) return zero();
  return {0, {d}};
}

Quotient canonicalize(std::size_t ambient, const IntMatrix& relations) {
  if (relations.rows() != ambient)
    throw std::invalid_argument("canonicalize: relation shape mismatch");
  SNFResult s = smith_normal_form(relations);
  const std::size_t steps = std::min(ambient, relations.cols());

  std::vector<std::size_t> free_idx, tor_idx;
  std::vector<Int> torsion;
  for (std::size_t i = 0; i < ambient; ++i) {
    Int d = i < steps ? s.d.at(i, i) : Int(0);
    if (d == 0)
      free_idx.push_back(i);
    else if (d >= 2) {
      tor_idx.push_back(i);
      torsion.push_back(d);
    }
    // d == 1: the coordinate dies in the quotient
  }

  Quotient q;
  q.group = {free_idx.size(), torsion};
  std::vector<std::size_t> keep = free_idx;
  keep.insert(keep.end(), tor_idx.begin(), tor_idx.end());
  q.proj = s.u.select_rows(keep);
  for (std::size_t j = 0; j < torsion.size(); ++j) {
    std::size_t r = free_idx.size() + j;
    for (std::size_t c = 0; c < ambient; ++c) {
      Int v = q.proj.at(r, c) % torsion[j];
      if (v < 0) v += torsion[j];
      q.proj.at(r, c) = v;
    }
  }
  q.lift = s.u_inv.select_cols(keep);
  return q;
}

GroupHom::GroupHom(FinAbGroup src, FinAbGroup tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
  if (matrix.rows() != target.gens() || matrix.cols() != source.gens())
    throw std::invalid_argument("GroupHom: matrix shape mismatch");
  for (std::size_t j = 0; j < target.torsion.size(); ++j) {
    std::size_t r = target.rank + j;
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      Int v = matrix.at(r, c) % target.torsion[j];
      if (v < 0) v += target.torsion[j];
      matrix.at(r, c) = v;
    }
  }
}

bool GroupHom::operator==(const GroupHom& o) const {
  return source == o.source && target == o.target && matrix == o.matrix;
}

bool GroupHom::is_well_defined() const {
  for (std::size_t c = 0; c < source.gens(); ++c) {
    Int p = source.gen_order(c);
    if (p == 0) continue;
    for (std::size_t r = 0; r < target.gens(); ++r) {
      Int v = p * matrix.at(r, c);
      Int q = target.gen_order(r);
      if (q == 0) {
        if (v != 0) return false;
      } else if (v % q != 0) {
        return false;
      }
    }
  }
  return true;
}

GroupHom GroupHom::identity(const FinAbGroup& g) {
  return {g, g, IntMatrix::identity(g.gens())};
}

GroupHom GroupHom::zero(const FinAbGroup& src, const FinAbGroup& tgt) {
  return {src, tgt, IntMatrix::zero(tgt.gens(), src.gens())};
}

GroupHom GroupHom::scalar(const FinAbGroup& g, const Int& n) {
  return {g, g, IntMatrix::identity(g.gens()) * n};
}

std::vector<Int> GroupHom::reduce_coords(const FinAbGroup& g,
                                         std::vector<Int> x) {
  for (std::size_t j = 0; j < g.torsion.size(); ++j) {
    Int& v = x[g.rank + j];
    v %= g.torsion[j];
    if (v < 0) v += g.torsion[j];
  }
  return x;
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (f.target != g.source)
    throw std::invalid_argument("compose: shape mismatch");
  return {f.source, g.target, g.matrix * f.matrix};
}

GroupHom add(const GroupHom& f, const GroupHom& g) {
  if (f.source != g.source || f.target != g.target)
    throw std::invalid_argument("add: shape mismatch");
  return {f.source, f.target, f.matrix + g.matrix};
}

GroupHom negate(const GroupHom& f) {
  return {f.source, f.target, -f.matrix};
}

Subgroup subgroup_generated(const FinAbGroup& b, const IntMatrix& gens) {
  if (gens.rows() != b.gens())
    throw std::invalid_argument("subgroup_generated: shape mismatch");
  IntMatrix rel = b.relation_matrix();
  IntMatrix basis = lattice_basis(gens.hconcat(rel));
  const std::size_t s = basis.cols();
  // Relations among the basis columns modulo b's relation lattice.
  IntMatrix ker = kernel_basis(basis.hconcat(rel));
  std::vector<std::size_t> top(s);
  for (std::size_t i = 0; i < s; ++i) top[i] = i;
  IntMatrix sub_rel = ker.select_rows(top);
  Quotient q = canonicalize(s, sub_rel);
  return {q.group, GroupHom(q.group, b, basis * q.lift)};
}

FinAbGroup cokernel_presentation(const IntMatrix& m) {
  return canonicalize(m.rows(), m).group;
}

Subgroup kernel(const GroupHom& f) {
  IntMatrix rel_t = f.target.relation_matrix();
  IntMatrix ker = kernel_basis(f.matrix.hconcat(rel_t));
  std::vector<std::size_t> top(f.source.gens());
  for (std::size_t i = 0; i < top.size(); ++i) top[i] = i;
  return subgroup_generated(f.source, ker.select_rows(top));
}

ImageCokernel image_and_cokernel(const GroupHom& f) {
  Subgroup im = subgroup_generated(f.target, f.matrix);
  IntMatrix rel = f.target.relation_matrix();
  Quotient q = canonicalize(f.target.gens(), f.matrix.hconcat(rel));
  return {im.group, q.group, GroupHom(f.target, q.group, q.proj)};
}

bool in_image(const GroupHom& f, const std::vector<Int>& x) {
  IntMatrix m = f.matrix.hconcat(f.target.relation_matrix());
  return in_lattice(m, x);
}

bool is_exact_pair(const GroupHom& f, const GroupHom& g) {
  if (f.target != g.source)
    throw std::invalid_argument("is_exact_pair: shape mismatch");
  if (!compose(g, f).is_zero_map()) return false;
  Subgroup k = kernel(g);
  for (std::size_t c = 0; c < k.incl.matrix.cols(); ++c)
    if (!in_image(f, k.incl.matrix.col_vector(c))) return false;
  return true;
}

DirectSum direct_sum(const std::vector<FinAbGroup>& parts) {
  std::size_t ambient = 0, rel_cols = 0;
  for (const auto& p : parts) {
    ambient += p.gens();
    rel_cols += p.torsion.size();
  }
  IntMatrix rel(ambient, rel_cols);
  std::size_t ro = 0, co = 0;
  for (const auto& p : parts) {
    for (std::size_t j = 0; j < p.torsion.size(); ++j)
      rel.at(ro + p.rank + j, co + j) = p.torsion[j];
    ro += p.gens();
    co += p.torsion.size();
  }
  Quotient q = canonicalize(ambient, rel);
  DirectSum out;
  out.group = q.group;
  std::size_t off = 0;
  for (const auto& p : parts) {
    IntMatrix inj(ambient, p.gens());
    for (std::size_t j = 0; j < p.gens(); ++j) inj.at(off + j, j) = 1;
    out.inject.emplace_back(p, out.group, q.proj * inj);
    std::vector<std::size_t> rows(p.gens());
    for (std::size_t j = 0; j < p.gens(); ++j) rows[j] = off + j;
    out.project.emplace_back(out.group, p, q.lift.select_rows(rows));
    off += p.gens();
  }
  return out;
}

bool is_isomorphism(const GroupHom& f) {
  if (!kernel(f).group.is_zero()) return false;
  return image_and_cokernel(f).cokernel.is_zero();
}

std::vector<std::vector<Int>> all_elements(const FinAbGroup& g) {
  if (g.rank > 0)
    throw std::invalid_argument("all_elements: group is infinite");
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(g.torsion.size());
  for (;;) {
    out.push_back(cur);
    std::size_t j = 0;
    while (j < cur.size()) {
      cur[j] += 1;
      if (cur[j] < g.torsion[j]) break;
      cur[j] = 0;
      ++j;
    }
    if (j == cur.size()) break;
  }
  if (g.torsion.empty()) out.resize(1);
  return out;
}

Int element_order(const FinAbGroup& g, const std::vector<Int>& x) {
  for (std::size_t i = 0; i < g.rank; ++i)
    if (x[i] != 0) return 0;
  Int ord = 1;
  for (std::size_t j = 0; j < g.torsion.size(); ++j) {
    Int v = x[g.rank + j] % g.torsion[j];
    if (v < 0) v += g.torsion[j];
    if (v == 0) continue;
    ord = lcm_int(ord, g.torsion[j] / gcd_int(v, g.torsion[j]));
  }
  return ord;
}

}  // namespace sixtermk
