#pragma once

#include <optional>

#include "sixtermk/int_matrix.hpp"

namespace sixtermk {

// Smith normal form d = u*m*v with unimodular u, v. The inverses are tracked
// alongside so that solving and membership tests need no extra elimination.
struct SNFResult {
  IntMatrix u, d, v;
  IntMatrix u_inv, v_inv;
};

SNFResult smith_normal_form(const IntMatrix& m);

// One integer solution x of m*x = b, if any.
std::optional<std::vector<Int>> solve_linear(const IntMatrix& m,
                                             const std::vector<Int>& b);

// Basis of the integer kernel {x : m*x = 0}, as matrix columns.
IntMatrix kernel_basis(const IntMatrix& m);

// Basis of the column lattice of m (image of Z^cols), as matrix columns.
IntMatrix lattice_basis(const IntMatrix& m);

// Does b lie in the column lattice of m?
bool in_lattice(const IntMatrix& m, const std::vector<Int>& b);

}  // namespace sixtermk
