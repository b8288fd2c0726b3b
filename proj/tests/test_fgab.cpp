#include <doctest.h>

#include <random>

#include "sixtermk/homgroup.hpp"
#include "sixtermk/literal.hpp"

using namespace sixtermk;

TEST_SUITE_BEGIN("fgab");

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t maxdim, long maxabs) {
  std::uniform_int_distribution<std::size_t> dim(0, maxdim);
  std::uniform_int_distribution<long> val(-maxabs, maxabs);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = val(rng);
  return m;
}

FinAbGroup G(const std::string& lit) { return parse_group_literal(lit); }

}  // namespace

TEST_CASE("smith normal form on a pinned matrix") {
  IntMatrix m(2, 2, {2, 4, 6, 8});
  SNFResult s = smith_normal_form(m);
  CHECK(s.d.at(0, 0) == 2);
  CHECK(s.d.at(1, 1) == 4);
  CHECK(s.d.at(0, 1) == 0);
  CHECK(s.d.at(1, 0) == 0);
  CHECK(s.u * m * s.v == s.d);
  CHECK(s.u * s.u_inv == IntMatrix::identity(2));
  CHECK(s.v * s.v_inv == IntMatrix::identity(2));
}

TEST_CASE("smith normal form round trips on random matrices") {
  std::mt19937 rng(20240817);
  for (int t = 0; t < 200; ++t) {
    IntMatrix m = random_matrix(rng, 5, 9);
    SNFResult s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(s.u * s.u_inv == IntMatrix::identity(m.rows()));
    CHECK(s.v * s.v_inv == IntMatrix::identity(m.cols()));
    // Diagonal, nonnegative, divisibility chain.
    for (std::size_t r = 0; r < s.d.rows(); ++r)
      for (std::size_t c = 0; c < s.d.cols(); ++c)
        if (r != c) CHECK(s.d.at(r, c) == 0);
    std::size_t k = std::min(s.d.rows(), s.d.cols());
    for (std::size_t i = 0; i + 1 < k; ++i) {
      CHECK(s.d.at(i, i) >= 0);
      if (s.d.at(i, i) != 0)
        CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
      else
        CHECK(s.d.at(i + 1, i + 1) == 0);
    }
  }
}

TEST_CASE("kernel and lattice bases agree with the matrix") {
  std::mt19937 rng(7);
  for (int t = 0; t < 100; ++t) {
    IntMatrix m = random_matrix(rng, 4, 6);
    IntMatrix k = kernel_basis(m);
    CHECK((m * k).is_zero());
    IntMatrix lat = lattice_basis(m);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::vector<Int> col(m.rows());
      for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m.at(r, c);
      CHECK(in_lattice(lat, col));
    }
  }
}

TEST_CASE("solve_linear returns actual solutions") {
  IntMatrix m(2, 2, {2, 0, 0, 3});
  auto x = solve_linear(m, {4, 9});
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == std::vector<Int>{4, 9});
  CHECK_FALSE(solve_linear(m, {1, 0}).has_value());
}

TEST_CASE("canonicalize: cokernel of diag(2,3) is Z/6") {
  Quotient q = canonicalize(2, IntMatrix(2, 2, {2, 0, 0, 3}));
  CHECK(q.group == G("Z/6"));
  CHECK(cokernel_presentation(IntMatrix(2, 2, {2, 0, 0, 3})) == G("Z/6"));
}

TEST_CASE("canonicalize: proj is a left inverse of lift") {
  std::mt19937 rng(99);
  for (int t = 0; t < 60; ++t) {
    IntMatrix rel = random_matrix(rng, 4, 6);
    Quotient q = canonicalize(rel.rows(), rel);
    IntMatrix pl = q.proj * q.lift;
    for (std::size_t i = 0; i < q.group.gens(); ++i)
      for (std::size_t j = 0; j < q.group.gens(); ++j) {
        Int want = i == j ? 1 : 0;
        Int d = q.group.gen_order(i);
        if (d == 0)
          CHECK(pl.at(i, j) == want);
        else
          CHECK((pl.at(i, j) - want) % d == 0);
      }
  }
}

TEST_CASE("group literals round trip") {
  for (const char* lit : {"0", "Z", "Z^2", "Z/2", "Z + Z/2 + Z/6",
                          "Z^3 + Z/4"}) {
    CHECK(format_group(parse_group_literal(lit)) == lit);
  }
  CHECK(parse_group_literal(" Z^2+Z/2 ") == G("Z^2 + Z/2"));
  // Non-canonical input renormalizes.
  CHECK(format_group(parse_group_literal("Z/2 + Z/3")) == "Z/6");
  CHECK_THROWS_AS(parse_group_literal("Z/x"), std::invalid_argument);
}

TEST_CASE("kernel of times-2 on Z/4") {
  Subgroup k = kernel(GroupHom::scalar(G("Z/4"), 2));
  CHECK(k.group == G("Z/2"));
  CHECK(k.incl.matrix.at(0, 0) == 2);
}

TEST_CASE("image and cokernel of diag(2,3) on Z^2") {
  GroupHom f(G("Z^2"), G("Z^2"), IntMatrix(2, 2, {2, 0, 0, 3}));
  ImageCokernel ic = image_and_cokernel(f);
  CHECK(ic.image == G("Z^2"));
  CHECK(ic.cokernel == G("Z/6"));
}

TEST_CASE("exact pair checks") {
  FinAbGroup Z = G("Z"), Z4 = G("Z/4"), Z2 = G("Z/2");
  GroupHom times2(Z, Z, IntMatrix(1, 1, {2}));
  GroupHom red(Z, Z2, IntMatrix(1, 1, {1}));
  CHECK(is_exact_pair(times2, red));
  GroupHom red4(Z, Z4, IntMatrix(1, 1, {1}));
  CHECK_FALSE(is_exact_pair(times2, red4));  // composite nonzero
  // ker(red4) = 4Z strictly inside im(times2) fails the other inclusion too.
  GroupHom times4(Z, Z, IntMatrix(1, 1, {4}));
  CHECK(is_exact_pair(times4, red4));
}

TEST_CASE("hom groups on pinned examples") {
  CHECK(hom_group(G("Z/4"), G("Z/6")).group == G("Z/2"));
  CHECK(hom_group(G("Z + Z/4"), G("Z/6")).group == G("Z/2 + Z/6"));
  CHECK(hom_group(G("Z"), G("Z")).group == G("Z"));
  CHECK(hom_group(G("Z/3"), G("Z/4")).group == G("0"));
  CHECK(hom_group(G("Z/2"), G("Z")).group == G("0"));
}

TEST_CASE("hom basis elements are well-defined and independent") {
  HomGroupResult r = hom_group(G("Z/4 + Z/8"), G("Z/2 + Z/8"));
  HomData hd(G("Z/4 + Z/8"), G("Z/2 + Z/8"));
  for (const GroupHom& b : r.basis) CHECK(b.is_well_defined());
  // Coordinates round trip through the basis.
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> val(0, 7);
  for (int t = 0; t < 20; ++t) {
    std::vector<Int> coords;
    for (std::size_t g = 0; g < hd.group().gens(); ++g)
      coords.push_back(val(rng) % hd.group().gen_order(g));
    GroupHom f = hd.from_coordinates(coords);
    CHECK(hd.coordinates_of(f) == coords);
  }
}

TEST_CASE("ext, tensor and tor on pinned examples") {
  CHECK(ext_group(G("Z/4"), G("Z/6")) == G("Z/2"));
  CHECK(ext_group(G("Z"), G("Z/5")) == G("0"));
  CHECK(tensor_mod(G("Z/4"), 6).group == G("Z/2"));
  CHECK(tensor_mod(G("Z"), 6).group == G("Z/6"));
  CHECK(tor_mod(G("Z/4"), 6).group == G("Z/2"));
  CHECK(tor_mod(G("Z"), 6).group == G("0"));
  CHECK(tor_mod(G("Z/12"), 8).group == G("Z/4"));
}

TEST_CASE("subgroup_generated and direct sums") {
  FinAbGroup Z12 = G("Z/12");
  Subgroup s = subgroup_generated(Z12, IntMatrix(1, 1, {4}));
  CHECK(s.group == G("Z/3"));
  DirectSum ds = direct_sum({G("Z"), G("Z/2"), G("Z/4")});
  CHECK(ds.group == G("Z + Z/2 + Z/4"));
  for (std::size_t p = 0; p < 3; ++p) {
    GroupHom id = compose(ds.project[p], ds.inject[p]);
    CHECK(id == GroupHom::identity(id.source));
  }
}

TEST_CASE("all_elements and element_order") {
  FinAbGroup g = G("Z/2 + Z/4");
  auto elems = all_elements(g);
  CHECK(elems.size() == 8);
  CHECK(element_order(g, {0, 0}) == 1);
  CHECK(element_order(g, {1, 0}) == 2);
  CHECK(element_order(g, {1, 1}) == 4);
}

TEST_SUITE_END();
