#pragma once

#include <json.hpp>

#include "sixtermk/solver.hpp"

namespace sixtermk {

using Json = nlohmann::json;

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

// Homs carry their endpoint literals so files stand alone.
Json hom_to_json(const GroupHom& f);
GroupHom hom_from_json(const Json& j);

// Sequence files: {"groups": [6 literals], "maps": [6 row-major matrices]}.
Json seq_to_json(const SixTermSeq& s);
SixTermSeq seq_from_json(const Json& j);

// Invariant files: base sequence, moduli, per-modulus F/H slots and named map
// matrices; UNKNOWN slots encoded as null.
Json invariant_to_json(const IdealKInvariant& inv);
IdealKInvariant invariant_from_json(const Json& j);

// Constraint files: node/edge chains with "?" (or null) for UNKNOWN.
Json constraint_to_json(const SequenceConstraint& c);
SequenceConstraint constraint_from_json(const Json& j);

Json resolution_to_json(const SlotResolution& r);
Json deduce_result_to_json(const SequenceConstraint& c, const DeduceResult& r);
Json reports_to_json(const std::vector<DiagramReport>& reps);
Json h_layer_report_to_json(const HLayerReport& rep);

}  // namespace sixtermk
