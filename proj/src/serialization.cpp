#include "lexconn/serialization.hpp"

#include <stdexcept>

namespace lexconn {

void to_json(Json& j, const VertexSet& s) { j = s.ids(); }

void from_json(const Json& j, VertexSet& s) { s = VertexSet(j.get<std::vector<Vertex>>()); }

void to_json(Json& j, const ExtendedNat& e) {
  if (e.is_finite())
    j = e.value();
  else
    j = "infinity";
}

void from_json(const Json& j, ExtendedNat& e) {
  if (j.is_string() && j.get<std::string>() == "infinity")
    e = ExtendedNat::infinity();
  else if (j.is_number_unsigned())
    e = ExtendedNat(j.get<std::uint64_t>());
  else
    throw std::invalid_argument("expected a non-negative integer or \"infinity\"");
}

void to_json(Json& j, const CutCertificate& c) {
  j = Json{{"cut", c.cut},
           {"disconnects", c.disconnects},
           {"reduces_to_trivial", c.reduces_to_trivial},
           {"isolated_after", c.isolated_after},
           {"is_minimum", c.is_minimum}};
}

void from_json(const Json& j, CutCertificate& c) {
  c.cut = j.at("cut").get<VertexSet>();
  c.disconnects = j.at("disconnects").get<bool>();
  c.reduces_to_trivial = j.at("reduces_to_trivial").get<bool>();
  c.isolated_after = j.at("isolated_after").get<VertexSet>();
  c.is_minimum = j.at("is_minimum").get<bool>();
}

void to_json(Json& j, const LexK1Result& r) {
  j = Json{{"value", r.value}, {"branch", to_string(r.branch)}};
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  if (r.fallback_reason) j["fallback_reason"] = *r.fallback_reason;
}

void to_json(Json& j, const LexSuperResult& r) {
  j = Json{{"super", r.super_connected}, {"branch", to_string(r.branch)}};
  if (r.reason) j["reason"] = *r.reason;
}

void to_json(Json& j, const InvariantReport& r) {
  j = Json::object();
  if (r.k) j["k"] = *r.k;
  if (r.k1) j["k1"] = *r.k1;
  if (r.super) {
    j["super"] = r.super->super_connected;
    if (r.super->reason != SuperReason::computed) j["super_reason"] = to_string(r.super->reason);
  }
  if (r.delta) j["delta"] = *r.delta;
  if (r.v0) j["v0"] = *r.v0;
  if (r.k_cut) j["k_cut"] = *r.k_cut;
  if (r.k1_cut) j["k1_cut"] = *r.k1_cut;
}

void from_json(const Json& j, InvariantReport& r) {
  r = {};
  if (j.contains("k")) r.k = j.at("k").get<std::size_t>();
  if (j.contains("k1")) r.k1 = j.at("k1").get<ExtendedNat>();
  if (j.contains("super")) {
    SuperReason reason = SuperReason::computed;
    if (j.contains("super_reason")) {
      auto s = j.at("super_reason").get<std::string>();
      if (s == "disconnected")
        reason = SuperReason::disconnected;
      else if (s == "complete_convention")
        reason = SuperReason::complete_convention;
      else
        throw std::invalid_argument("unknown super_reason '" + s + "'");
    }
    r.super = SuperVerdict{j.at("super").get<bool>(), reason};
  }
  if (j.contains("delta")) r.delta = j.at("delta").get<std::size_t>();
  if (j.contains("v0")) r.v0 = j.at("v0").get<VertexSet>();
  if (j.contains("k_cut")) r.k_cut = j.at("k_cut").get<VertexSet>();
  if (j.contains("k1_cut")) r.k1_cut = j.at("k1_cut").get<VertexSet>();
}

namespace {

Json value_json(const TheoremValue& v) {
  if (auto b = std::get_if<bool>(&v)) return *b;
  return std::get<ExtendedNat>(v);
}

TheoremValue value_from_json(const Json& j) {
  if (j.is_boolean()) return j.get<bool>();
  return j.get<ExtendedNat>();
}

}  // namespace

void to_json(Json& j, const DiscrepancyCertificate& c) {
  j = Json{{"theorem_id", to_string(c.theorem_id)},
           {"g1", c.g1},
           {"g2", c.g2},
           {"formula_value", value_json(c.formula_value)},
           {"oracle_value", value_json(c.oracle_value)},
           {"witness", c.witness}};
  j["reading"] = c.reading ? Json(to_string(*c.reading)) : Json(nullptr);
  j["g1_invariants"] = c.g1_invariants;
  j["g2_invariants"] = c.g2_invariants;
}

void from_json(const Json& j, DiscrepancyCertificate& c) {
  c.theorem_id = parse_theorem_id(j.at("theorem_id").get<std::string>());
  c.g1 = j.at("g1").get<std::string>();
  c.g2 = j.at("g2").get<std::string>();
  c.formula_value = value_from_json(j.at("formula_value"));
  c.oracle_value = value_from_json(j.at("oracle_value"));
  c.witness = j.at("witness").get<CutCertificate>();
  c.reading.reset();
  if (j.contains("reading") && !j.at("reading").is_null()) {
    auto r = parse_cut_reading(j.at("reading").get<std::string>());
    if (!r) throw std::invalid_argument("unknown reading");
    c.reading = *r;
  }
  c.g1_invariants = j.value("g1_invariants", Json::object()).get<InvariantReport>();
  c.g2_invariants = j.value("g2_invariants", Json::object()).get<InvariantReport>();
}

Json report_to_json(const VerificationReport& r, bool include_timing) {
  Json j{{"theorem_id", to_string(r.theorem_id)},
         {"reading", to_string(r.reading)},
         {"mode", to_string(r.family.mode)},
         {"n1_max", r.family.n1_max},
         {"n2_max", r.family.n2_max},
         {"instances_checked", r.instances_checked},
         {"skipped", r.skipped},
         {"agreements", r.agreements}};
  j["agreement_rate"] =
      r.instances_checked ? double(r.agreements) / double(r.instances_checked) : 1.0;
  j["discrepancies"] = r.discrepancies;
  if (r.witness_audit) {
    j["witness_audit"] = Json{{"finite_results", r.witness_audit->finite_results},
                              {"verified", r.witness_audit->verified},
                              {"oracle_fallbacks", r.witness_audit->oracle_fallbacks}};
  }
  if (r.family.mode == FamilyMode::random) {
    j["seed"] = r.family.seed;
    j["samples"] = r.family.sample_count;
    j["p"] = r.family.edge_probability.to_string();
  }
  if (include_timing) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

}  // namespace lexconn
