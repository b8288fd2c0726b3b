#include <doctest.h>

#include "sixtermk/json_io.hpp"
#include "sixtermk/literal.hpp"

using namespace sixtermk;

TEST_SUITE_BEGIN("json_io");

namespace {
FinAbGroup G(const std::string& lit) { return parse_group_literal(lit); }
}  // namespace

TEST_CASE("hom serialization round trips") {
  GroupHom f(G("Z + Z/4"), G("Z/8"), IntMatrix(1, 2, {3, 2}));
  Json j = hom_to_json(f);
  CHECK(j["source"] == "Z + Z/4");
  CHECK(j["target"] == "Z/8");
  CHECK(hom_from_json(j) == f);
  // Shape mismatch is rejected.
  j["matrix"] = Json::array({Json::array({1, 2, 3})});
  CHECK_THROWS_AS(hom_from_json(j), std::invalid_argument);
}

TEST_CASE("sequence files round trip") {
  SixTermSeq e = build(ExtensionDescriptor::E(4, 1));
  SixTermSeq back = seq_from_json(seq_to_json(e));
  CHECK(back == e);
  Json bad = seq_to_json(e);
  bad["groups"].erase(5);
  CHECK_THROWS_AS(seq_from_json(bad), std::invalid_argument);
}

TEST_CASE("invariant files keep H slots and h maps") {
  IdealKInvariant inv = compute_invariant(ExtensionDescriptor::E(2, 0), {2});
  solve_H_layer(inv);
  REQUIRE(witness_search_layer(inv, 2, 6));
  IdealKInvariant back = invariant_from_json(invariant_to_json(inv));
  CHECK(back.fully_populated());
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(*back.layers[0].H[i] == *inv.layers[0].H[i]);
    CHECK(*back.layers[0].h11_in[i] == *inv.layers[0].h11_in[i]);
    CHECK(*back.layers[0].h1n_out[i] == *inv.layers[0].h1n_out[i]);
  }
  CHECK(back.base == inv.base);
}

TEST_CASE("a retried block correction survives a round trip") {
  // Witness search replaces the layer sequence here; the file must carry the
  // replacement so the stored h maps still verify after loading.
  IdealKInvariant inv = compute_invariant(ExtensionDescriptor::E(3, 3), {3});
  solve_H_layer(inv);
  REQUIRE(witness_search_layer(inv, 3, 6));
  IdealKInvariant back = invariant_from_json(invariant_to_json(inv));
  CHECK(back.layers[0].f_tilde == inv.layers[0].f_tilde);
  for (const auto& rep : verify_diagrams(back, all_template_ids())) {
    CHECK_FALSE(rep.any_failed());
    CHECK_FALSE(rep.any_skipped());
  }
}

TEST_CASE("unresolved invariant slots serialize as null") {
  IdealKInvariant inv = compute_invariant(ExtensionDescriptor::E(2, 0), {3});
  Json j = invariant_to_json(inv);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(j["layers"][0]["H"][i].is_null());
    CHECK(j["layers"][0]["h11_in"][i].is_null());
  }
  IdealKInvariant back = invariant_from_json(j);
  CHECK_FALSE(back.fully_populated());
}

TEST_CASE("constraint files use ? for unknowns") {
  SequenceConstraint c;
  c.name = "demo";
  c.cyclic = false;
  c.nodes = {G("0"), G("Z/2"), std::nullopt, G("Z"), G("0")};
  c.edges = {GroupHom::zero(G("0"), G("Z/2")), std::nullopt, std::nullopt,
             GroupHom::zero(G("Z"), G("0"))};
  Json j = constraint_to_json(c);
  CHECK(j["nodes"][2] == "?");
  CHECK(j["edges"][1] == "?");
  SequenceConstraint back = constraint_from_json(j);
  CHECK_FALSE(back.nodes[2].has_value());
  CHECK(back.nodes[1] == G("Z/2"));
  DeduceResult r = deduce(back);
  REQUIRE(r.nodes[2].status == SlotResolution::UNIQUE);
  CHECK(r.nodes[2].groups[0] == G("Z + Z/2"));
  Json out = deduce_result_to_json(back, r);
  CHECK(out["nodes"][2]["status"] == "UNIQUE");
  CHECK(out["nodes"][2]["provenance"].size() > 0);
}

TEST_CASE("diagram reports serialize per cell") {
  IdealKInvariant inv = compute_invariant(ExtensionDescriptor::E(2, 0), {2});
  Json j = reports_to_json(verify_diagrams(inv, {TemplateId::D0}));
  CHECK(j[0]["template"] == "D0");
  CHECK(j[0]["passed"] == true);
  for (const auto& cell : j[0]["cells"]) CHECK(cell["status"] == "PASS");
}

TEST_SUITE_END();
