#pragma once

#include <string>

#include "json.hpp"

#include "mirrorhodge/bipoly.hpp"
#include "mirrorhodge/report.hpp"

namespace mhodge {

// All emission goes through nlohmann's order-preserving json so the byte
// layout of reports is canonical: same inputs, same bytes, regardless of
// --jobs or repetition.
using OrderedJson = nlohmann::ordered_json;

// {"vars":["u","v"],"terms":[{"e":[p,q],"c":"<signed decimal>"}]} with terms
// ascending lexicographically by (p, q). Coefficients are decimal strings;
// they outgrow 64-bit integers for moderate genus.
OrderedJson poly_to_json(const BiPoly& p);
BiPoly poly_from_json(const OrderedJson& j);

// Human-readable single line, descending total degree, explicit signs.
std::string poly_to_text(const BiPoly& p);

OrderedJson report_to_json(const MirrorReport& rep, bool include_timing = false);
MirrorReport report_from_json(const OrderedJson& j);
std::string report_to_text(const MirrorReport& rep, bool include_timing = false);

OrderedJson sweep_to_json(const SweepResult& result, bool include_timing = false);
std::string sweep_to_text(const SweepResult& result, bool include_timing = false);

OrderedJson stability_audit_to_json(const StabilityAuditReport& rep);
std::string stability_audit_to_text(const StabilityAuditReport& rep);

OrderedJson torsion_audit_to_json(const TorsionAuditReport& rep);
std::string torsion_audit_to_text(const TorsionAuditReport& rep);

// Canonical byte form of a JSON document (2-space indent, trailing newline).
std::string json_to_bytes(const OrderedJson& j);

} // namespace mhodge
