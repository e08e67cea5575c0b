#include "io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace sfreecut {

namespace {

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed document at byte ") + std::to_string(e.byte) + ": " +
                         e.what());
    }
}

Rat rat_from_json(const json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw ParseError(where + ": expected rational string");
}

RatVec vec_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected array");
    RatVec v;
    for (size_t i = 0; i < j.size(); ++i) v.push_back(rat_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

std::vector<RatVec> mat_from_json(const json& j, const std::string& where, size_t n) {
    if (!j.is_array()) throw ParseError(where + ": expected array of rows");
    std::vector<RatVec> rows;
    for (size_t i = 0; i < j.size(); ++i) {
        RatVec r = vec_from_json(j[i], where + "[" + std::to_string(i) + "]");
        if (r.size() != n)
            throw ParseError(where + "[" + std::to_string(i) + "]: expected " + std::to_string(n) +
                             " entries, got " + std::to_string(r.size()));
        rows.push_back(std::move(r));
    }
    return rows;
}

const json& require(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing field \"" + key + "\"");
    return *it;
}

} // namespace

InstanceDoc parse_instance(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) throw ParseError("instance: expected object");
    size_t n = 0;
    {
        const json& jn = require(j, "n", "instance");
        if (!jn.is_number_unsigned() || jn.get<size_t>() == 0)
            throw ParseError("instance.n: expected positive integer");
        n = jn.get<size_t>();
    }
    const json& js = require(j, "S", "instance");
    std::vector<RatVec> A = mat_from_json(require(js, "A", "instance.S"), "instance.S.A", n);
    RatVec b = vec_from_json(require(js, "b", "instance.S"), "instance.S.b");
    if (b.size() != A.size()) throw ParseError("instance.S.b: length must match row count of A");
    RatVec f = vec_from_json(require(j, "f", "instance"), "instance.f");
    if (f.size() != n) throw ParseError("instance.f: expected " + std::to_string(n) + " entries");

    InstanceDoc doc{n, A.empty() ? HPolyhedron(RatMat(0, n), {}) : HPolyhedron::from_rows(A, b),
                    std::move(f), {}, std::nullopt};
    if (auto it = j.find("rays"); it != j.end()) doc.rays = mat_from_json(*it, "instance.rays", n);
    if (auto it = j.find("box"); it != j.end()) {
        RatVec lo = vec_from_json(require(*it, "lower", "instance.box"), "instance.box.lower");
        RatVec hi = vec_from_json(require(*it, "upper", "instance.box"), "instance.box.upper");
        if (lo.size() != n || hi.size() != n) throw ParseError("instance.box: expected dimension " + std::to_string(n));
        try {
            doc.box = SearchBox(std::move(lo), std::move(hi));
        } catch (const Error& e) {
            throw ParseError(std::string("instance.box: ") + e.what());
        }
    }
    return doc;
}

BodyDoc parse_body(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) throw ParseError("body: expected object");
    BodyDoc doc;
    if (auto it = j.find("halfspace"); it != j.end()) {
        RatVec a = vec_from_json(require(*it, "a", "body.halfspace"), "body.halfspace.a");
        Rat beta = rat_from_json(require(*it, "b", "body.halfspace"), "body.halfspace.b");
        doc.halfspace = HalfSpace{std::move(a), std::move(beta)};
        return doc;
    }
    RatVec f = vec_from_json(require(j, "f", "body"), "body.f");
    std::vector<RatVec> rows = mat_from_json(require(j, "rows", "body"), "body.rows", f.size());
    if (rows.empty()) throw ParseError("body.rows: at least one row required");
    doc.f = std::move(f);
    doc.rows = std::move(rows);
    return doc;
}

SFreeBody BodyDoc::body() const {
    if (!anchored()) throw InvalidInput("body document is an anchor-free half-space");
    return SFreeBody(*f, rows);
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json rat_vec_json(const RatVec& v) {
    json out = json::array();
    for (const Rat& x : v) out.push_back(rat_to_string(x));
    return out;
}

json int_vec_json(const IntVec& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(x.str());
    return out;
}

static json mat_json(const std::vector<RatVec>& rows) {
    json out = json::array();
    for (const RatVec& r : rows) out.push_back(rat_vec_json(r));
    return out;
}

json box_json(const SearchBox& box) {
    return json{{"lower", rat_vec_json(box.lower)}, {"upper", rat_vec_json(box.upper)}};
}

SearchBox parse_box_string(const std::string& text, size_t n) {
    std::istringstream in(text);
    std::vector<Rat> vals;
    std::string tok;
    while (in >> tok) vals.push_back(parse_rat(tok));
    if (vals.size() != 2 * n)
        throw ParseError("box: expected " + std::to_string(2 * n) + " rationals, got " +
                         std::to_string(vals.size()));
    RatVec lo(n), hi(n);
    for (size_t i = 0; i < n; ++i) {
        lo[i] = vals[2 * i];
        hi[i] = vals[2 * i + 1];
    }
    return SearchBox(std::move(lo), std::move(hi));
}

std::string emit_instance(const InstanceDoc& doc) {
    json j;
    j["n"] = doc.n;
    j["S"] = json{{"A", mat_json(doc.Q.A().row_list())}, {"b", rat_vec_json(doc.Q.b())}};
    j["f"] = rat_vec_json(doc.f);
    if (!doc.rays.empty()) j["rays"] = mat_json(doc.rays);
    if (doc.box) j["box"] = box_json(*doc.box);
    return canonical_dump(j);
}

json body_json(const SFreeBody& body) {
    return json{{"f", rat_vec_json(body.f())}, {"rows", mat_json(body.rows())}};
}

std::string emit_body(const BodyDoc& doc) {
    if (doc.halfspace) {
        json j{{"halfspace",
                json{{"a", rat_vec_json(doc.halfspace->a)}, {"b", rat_to_string(doc.halfspace->beta)}}}};
        return canonical_dump(j);
    }
    json j{{"f", rat_vec_json(*doc.f)}, {"rows", mat_json(doc.rows)}};
    return canonical_dump(j);
}

std::string emit_body(const SFreeBody& body) { return canonical_dump(body_json(body)); }

json maximality_report_json(const MaximalityReport& rep) {
    json certs = json::array();
    for (const auto& c : rep.facet_certificates) certs.push_back(c ? int_vec_json(*c) : json(nullptr));
    json j{{"verdict", to_string(rep.verdict)},
           {"facet_certificates", certs},
           {"non_facet_rows", rep.non_facet_rows},
           {"violating_point", rep.violating_point ? int_vec_json(*rep.violating_point) : json(nullptr)},
           {"box_used", box_json(rep.box_used)},
           {"note", rep.note}};
    return j;
}

json tilt_trace_json(const std::vector<TiltStep>& steps) {
    json out = json::array();
    for (const TiltStep& s : steps) {
        json j{{"tilted_row", s.tilted_row},
               {"d1", rat_vec_json(s.d1)},
               {"dropped", s.dropped}};
        if (!s.d2.empty()) {
            j["partner_row"] = s.partner_row;
            j["d2"] = rat_vec_json(s.d2);
            j["lambda_star"] = rat_to_string(s.lambda_star);
        }
        if (s.xbar) {
            j["xbar"] = int_vec_json(*s.xbar);
            j["lambda_bar"] = rat_to_string(s.lambda_bar);
            j["new_row"] = rat_vec_json(s.new_row);
        }
        out.push_back(std::move(j));
    }
    return out;
}

json hpolyhedron_json(const HPolyhedron& P) {
    return json{{"A", mat_json(P.A().row_list())}, {"b", rat_vec_json(P.b())}};
}

json validity_report_json(const ValidityReport& rep) {
    json j{{"valid", rep.valid_within_box()},
           {"minimum", rep.minimum_value ? json(rat_to_string(*rep.minimum_value)) : json(nullptr)},
           {"unbounded_below", rep.unbounded_below},
           {"points_checked", rep.points_checked},
           {"unreachable_points", rep.unreachable_points},
           {"box_used", box_json(rep.box_used)}};
    if (rep.attained_x) j["attained_at"] = json{{"x", int_vec_json(*rep.attained_x)}, {"s", rat_vec_json(*rep.attained_s)}};
    if (rep.recession_witness) j["recession_witness"] = rat_vec_json(*rep.recession_witness);
    return j;
}

json tighten_steps_json(const std::vector<TightenStep>& steps) {
    json out = json::array();
    for (const TightenStep& s : steps) {
        json j{{"shell_row", s.shell_row}, {"action", s.dropped ? "drop" : "push"}};
        if (s.pushed_to) j["pushed_to"] = int_vec_json(*s.pushed_to);
        out.push_back(std::move(j));
    }
    return out;
}

} // namespace sfreecut
