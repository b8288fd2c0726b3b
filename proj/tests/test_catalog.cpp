#include <doctest.h>

#include "sixtermk/catalog.hpp"
#include "sixtermk/literal.hpp"

using namespace sixtermk;

TEST_SUITE_BEGIN("catalog");

namespace {
FinAbGroup G(const std::string& lit) { return parse_group_literal(lit); }
}  // namespace

TEST_CASE("E family base tuple") {
  SixTermSeq e = build(ExtensionDescriptor::E(6, 0));
  std::array<FinAbGroup, 6> want = {G("0"), G("0"), G("Z"),
                                    G("Z"), G("Z/6"), G("0")};
  CHECK(e.groups == want);
  CHECK(e.maps[2].matrix == IntMatrix(1, 1, {6}));
  CHECK(e.maps[3].matrix == IntMatrix(1, 1, {1}));
  CHECK(validate_exactness(e).all_ok());
}

TEST_CASE("F1 and F family base tuples") {
  SixTermSeq f1 = build(ExtensionDescriptor::F1(0));
  CHECK(f1.groups == std::array<FinAbGroup, 6>{G("Z"), G("Z"), G("0"), G("0"),
                                               G("0"), G("0")});
  CHECK(f1.maps[0] == GroupHom::identity(G("Z")));
  CHECK(validate_exactness(f1).all_ok());

  SixTermSeq f = build(ExtensionDescriptor::F(5, 0));
  CHECK(f.groups == std::array<FinAbGroup, 6>{G("0"), G("0"), G("0"), G("Z/5"),
                                              G("Z/5"), G("0")});
  CHECK(f.maps[3] == GroupHom::identity(G("Z/5")));
  CHECK(validate_exactness(f).all_ok());
}

TEST_CASE("shifted members are mc iterates") {
  for (long i = 0; i < 6; ++i) {
    CHECK(build(ExtensionDescriptor::E(3, i)) ==
          mc_iter(build(ExtensionDescriptor::E(3, 0)), i));
    CHECK(build(ExtensionDescriptor::F(4, i)) ==
          mc_iter(build(ExtensionDescriptor::F(4, 0)), i));
  }
}

TEST_CASE("trivial ideal and trivial quotient extensions") {
  SixTermSeq e = build(ExtensionDescriptor::E(2, 0));
  SixTermSeq ti = build(ExtensionDescriptor::trivial_ideal(e));
  CHECK(ti.groups == std::array<FinAbGroup, 6>{e.groups[0], e.groups[0], G("0"),
                                               e.groups[3], e.groups[3],
                                               G("0")});
  CHECK(validate_exactness(ti).all_ok());
  SixTermSeq tq = build(ExtensionDescriptor::trivial_quotient(e));
  CHECK(tq.groups == std::array<FinAbGroup, 6>{G("0"), e.groups[2], e.groups[2],
                                               G("0"), e.groups[5],
                                               e.groups[5]});
  CHECK(validate_exactness(tq).all_ok());
}

TEST_CASE("k_groups_of pairs up the right slots") {
  KGroupPairs k = k_groups_of(ExtensionDescriptor::E(2, 0));
  CHECK(k.ideal == std::pair{G("0"), G("Z")});
  CHECK(k.middle == std::pair{G("0"), G("Z/2")});
  CHECK(k.quotient == std::pair{G("Z"), G("0")});
}

TEST_CASE("descriptor grammar round trips") {
  for (const char* text : {"E:2:0", "E:12:5", "F:3:4", "F1:1"}) {
    ExtensionDescriptor d = parse_descriptor(text);
    CHECK(format_descriptor(d) == text);
  }
  ExtensionDescriptor f = parse_descriptor("file:seq.json");
  CHECK(f.kind == ExtensionDescriptor::Kind::Custom);
  CHECK(f.path == "seq.json");
  CHECK(format_descriptor(f) == "file:seq.json");
}

TEST_CASE("descriptor index reduces mod 6") {
  CHECK(build(ExtensionDescriptor::E(2, 7)) ==
        build(ExtensionDescriptor::E(2, 1)));
  CHECK(build(ExtensionDescriptor::E(2, -1)) ==
        build(ExtensionDescriptor::E(2, 5)));
}

TEST_CASE("bad descriptors are rejected") {
  CHECK_THROWS_AS(parse_descriptor("G:2:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("E:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("E:x:0"), std::invalid_argument);
  CHECK_THROWS_AS(build(ExtensionDescriptor::E(1, 0)), std::invalid_argument);
}

TEST_SUITE_END();
