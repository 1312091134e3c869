#pragma once

#include <json.hpp>

#include "lexconn/cuts.hpp"
#include "lexconn/graph.hpp"
#include "lexconn/harness.hpp"
#include "lexconn/invariants.hpp"
#include "lexconn/lexprod.hpp"

namespace lexconn {

// JSON encodings. ExtendedNat is an integer or the string "infinity"; vertex
// sets are id arrays. Keys keep insertion order so output is stable.
using Json = nlohmann::ordered_json;

void to_json(Json& j, const VertexSet& s);
void from_json(const Json& j, VertexSet& s);
void to_json(Json& j, const ExtendedNat& e);
void from_json(const Json& j, ExtendedNat& e);
void to_json(Json& j, const CutCertificate& c);
void from_json(const Json& j, CutCertificate& c);
void to_json(Json& j, const LexK1Result& r);
void to_json(Json& j, const LexSuperResult& r);
void to_json(Json& j, const InvariantReport& r);
void from_json(const Json& j, InvariantReport& r);
void to_json(Json& j, const DiscrepancyCertificate& c);
void from_json(const Json& j, DiscrepancyCertificate& c);

/// wall_time_ms is left out when `include_timing` is false, which makes the
/// document a pure function of (theorem, family, reading).
Json report_to_json(const VerificationReport& r, bool include_timing = true);

}  // namespace lexconn
