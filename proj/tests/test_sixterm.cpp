#include <doctest.h>

#include "sixtermk/catalog.hpp"
#include "sixtermk/literal.hpp"
#include "testutil.hpp"

using namespace sixtermk;

TEST_SUITE_BEGIN("sixterm");

namespace {
FinAbGroup G(const std::string& lit) { return parse_group_literal(lit); }
}  // namespace

TEST_CASE("catalog base sequence is exact with witnesses absent") {
  SixTermSeq s = build(ExtensionDescriptor::E(2, 0));
  ExactnessReport r = validate_exactness(s);
  CHECK(r.all_ok());
  for (std::size_t i = 0; i < 6; ++i) CHECK_FALSE(r.witness[i].has_value());
}

TEST_CASE("breaking one map is detected with a witness") {
  SixTermSeq s = build(ExtensionDescriptor::E(2, 0));
  // Kill the reduction Z -> Z/2; position 4 loses surjectivity onto ker(m4).
  s.maps[3] = GroupHom::zero(s.groups[3], s.groups[4]);
  ExactnessReport r = validate_exactness(s);
  CHECK_FALSE(r.all_ok());
  CHECK_FALSE(r.position_ok[4]);
  REQUIRE(r.witness[4].has_value());
  // The witness is an element of ker(m4) \ im(m3) = Z/2 \ {0}.
  CHECK(*r.witness[4] == std::vector<Int>{1});
}

TEST_CASE("a nonzero composite is reported as such") {
  SixTermSeq s = build(ExtensionDescriptor::E(2, 0));
  s.maps[2] = GroupHom::identity(s.groups[2]);  // now m3 ∘ m2 != 0
  ExactnessReport r = validate_exactness(s);
  CHECK_FALSE(r.position_ok[3]);
  CHECK(r.composite_nonzero[3]);
}

TEST_CASE("random generator produces exact sequences") {
  std::mt19937 rng(20250501);
  for (int t = 0; t < 50; ++t) {
    SixTermSeq s = testutil::random_exact_sequence(rng);
    CHECK(validate_exactness(s).all_ok());
  }
}

TEST_CASE("hom_six pinned values") {
  SixTermSeq f1 = build(ExtensionDescriptor::F1(0));
  SixTermSeq e20 = build(ExtensionDescriptor::E(2, 0));
  CHECK(hom_six(f1, f1).group == G("Z"));
  CHECK(hom_six(f1, e20).group == G("0"));
  // Chain maps e20 -> e20: alpha2 = alpha3 = a on Z forces alpha4 = a mod 2,
  // so the group is Z.
  CHECK(hom_six(e20, e20).group == G("Z"));
}

TEST_CASE("hom_six basis elements are chain maps") {
  SixTermSeq e = build(ExtensionDescriptor::E(4, 2));
  HomSixResult r = hom_six(e, e);
  for (const SixTermHom& b : r.basis) CHECK(b.commutes(e, e));
  // The identity tuple is in the span: its coordinates reproduce it.
  std::mt19937 rng(11);
  for (int t = 0; t < 5; ++t) {
    SixTermSeq s = testutil::random_exact_sequence(rng);
    HomSixResult rs = hom_six(s, s);
    for (const SixTermHom& b : rs.basis) CHECK(b.commutes(s, s));
  }
}

TEST_CASE("rotate3 shifts groups by three") {
  SixTermSeq e = build(ExtensionDescriptor::E(2, 0));
  SixTermSeq r = rotate3(e);
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(r.groups[i] == e.groups[(i + 3) % 6]);
  CHECK(validate_exactness(r).all_ok());
}

TEST_CASE("signed_iso_search finds the identity and respects shapes") {
  SixTermSeq e = build(ExtensionDescriptor::E(3, 1));
  auto iso = signed_iso_search(e, e, 1);
  REQUIRE(iso.has_value());
  CHECK(iso->is_isomorphism_tuple());
  CHECK(iso->commutes(e, e));
  // No signed identity between sequences of different shape.
  SixTermSeq f = build(ExtensionDescriptor::F(3, 1));
  CHECK_FALSE(signed_iso_search(e, f, 1).has_value());
}

TEST_CASE("all_zero sequence verifies trivially") {
  SixTermSeq z = SixTermSeq::all_zero();
  CHECK(validate_exactness(z).all_ok());
  CHECK(hom_six(z, z).group == G("0"));
}

TEST_SUITE_END();
