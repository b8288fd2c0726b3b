#include "sixtermk/snf.hpp"

#include <cstdlib>

namespace sixtermk {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  SNFResult res{IntMatrix::identity(r), m, IntMatrix::identity(c),
                IntMatrix::identity(r), IntMatrix::identity(c)};
  IntMatrix& d = res.d;

  auto row_add = [&](std::size_t a, std::size_t b, const Int& k) {
    d.add_row(a, b, k);
    res.u.add_row(a, b, k);
    res.u_inv.add_col(b, a, -k);  // col b -= k * col a
  };
  auto col_add = [&](std::size_t a, std::size_t b, const Int& k) {
    d.add_col(a, b, k);
    res.v.add_col(a, b, k);
    res.v_inv.add_row(b, a, -k);  // row b -= k * row a
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    res.u.swap_rows(a, b);
    res.u_inv.swap_cols(a, b);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    res.v.swap_cols(a, b);
    res.v_inv.swap_rows(a, b);
  };
  auto row_negate = [&](std::size_t a) {
    d.negate_row(a);
    res.u.negate_row(a);
    res.u_inv.negate_col(a);
  };

  const std::size_t steps = std::min(r, c);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest-magnitude nonzero pivot in the trailing submatrix.
      std::size_t pi = t, pj = t;
      bool found = false;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          const Int& e = d.at(i, j);
          if (e == 0) continue;
          if (!found || abs_int(e) < abs_int(d.at(pi, pj))) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) {
        t = steps;  // trailing submatrix is zero, done entirely
        break;
      }
      row_swap(t, pi);
      col_swap(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        if (q != 0) row_add(i, t, -q);
        if (d.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        if (q != 0) col_add(j, t, -q);
        if (d.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;  // a smaller pivot appeared; repeat

      // Pivot must divide every remaining entry for the divisibility chain.
      bool fixed = true;
      for (std::size_t i = t + 1; i < r && fixed; ++i)
        for (std::size_t j = t + 1; j < c && fixed; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            row_add(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (t >= steps) break;
    if (d.at(t, t) < 0) row_negate(t);
  }
  // Normalize signs of any pivots placed before an early exit.
  for (std::size_t t = 0; t < steps; ++t)
    if (d.at(t, t) < 0) row_negate(t);
  return res;
}

std::optional<std::vector<Int>> solve_linear(const IntMatrix& m,
                                             const std::vector<Int>& b) {
  SNFResult s = smith_normal_form(m);
  std::vector<Int> ub = s.u.apply(b);
  const std::size_t steps = std::min(m.rows(), m.cols());
  std::vector<Int> y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < steps && s.d.at(i, i) != 0) {
      if (ub[i] % s.d.at(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / s.d.at(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v.apply(y);
}

IntMatrix kernel_basis(const IntMatrix& m) {
  SNFResult s = smith_normal_form(m);
  const std::size_t steps = std::min(m.rows(), m.cols());
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (j >= steps || s.d.at(j, j) == 0) free_cols.push_back(j);
  return s.v.select_cols(free_cols);
}

IntMatrix lattice_basis(const IntMatrix& m) {
  SNFResult s = smith_normal_form(m);
  const std::size_t steps = std::min(m.rows(), m.cols());
  IntMatrix ud = s.u_inv * s.d;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t j = 0; j < steps; ++j)
    if (s.d.at(j, j) != 0) pivot_cols.push_back(j);
  return ud.select_cols(pivot_cols);
}

bool in_lattice(const IntMatrix& m, const std::vector<Int>& b) {
  return solve_linear(m, b).has_value();
}

}  // namespace sixtermk
