#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>

#include "verifier.hpp"

namespace sfreecut {

using json = nlohmann::json;

/// Parsed instance document: n, S (as Q), f, optional rays and box.
struct InstanceDoc {
    size_t n = 0;
    HPolyhedron Q;
    RatVec f;
    std::vector<RatVec> rays;
    std::optional<SearchBox> box;

    SDescription s_description() const { return SDescription(Q); }
    TableauInstance tableau() const { return TableauInstance(f, rays, SDescription(Q)); }
};

/// Parsed body document: anchored rows or an anchor-free half-space.
struct BodyDoc {
    std::optional<RatVec> f;
    std::vector<RatVec> rows;    // anchored form when f is set
    std::optional<HalfSpace> halfspace;

    bool anchored() const { return f.has_value(); }
    SFreeBody body() const;
};

InstanceDoc parse_instance(const std::string& text);
BodyDoc parse_body(const std::string& text);

/// Canonical re-emission: sorted keys, lowest-term rational strings,
/// two-space indent, trailing newline. Byte-stable under round trips.
std::string emit_instance(const InstanceDoc& doc);
std::string emit_body(const BodyDoc& doc);
std::string emit_body(const SFreeBody& body);

std::string canonical_dump(const json& j);

/// "x1lo x1hi x2lo x2hi ..." (whitespace separated rationals).
SearchBox parse_box_string(const std::string& text, size_t n);

json box_json(const SearchBox& box);
json rat_vec_json(const RatVec& v);
json int_vec_json(const IntVec& v);
json maximality_report_json(const MaximalityReport& rep);
json tilt_trace_json(const std::vector<TiltStep>& steps);
json body_json(const SFreeBody& body);
json hpolyhedron_json(const HPolyhedron& P);
json validity_report_json(const ValidityReport& rep);
json tighten_steps_json(const std::vector<TightenStep>& steps);

} // namespace sfreecut
