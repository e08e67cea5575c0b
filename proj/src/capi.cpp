#include "sfreecut/sfreecut.h"

#include <cstring>
#include <nlohmann/json.hpp>
#include <string>

#include "io.hpp"
#include "svg.hpp"

using namespace sfreecut;

struct sfc_instance {
    InstanceDoc doc;
};

struct sfc_body {
    BodyDoc doc;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
sfc_status guarded(F&& fn) {
    try {
        fn();
        return SFC_OK;
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return SFC_ERROR_PARSE;
    } catch (const DimensionMismatch& e) {
        g_last_error = e.what();
        return SFC_ERROR_INVALID;
    } catch (const InvalidInput& e) {
        g_last_error = e.what();
        return SFC_ERROR_INVALID;
    } catch (const UnboundedError& e) {
        g_last_error = e.what();
        return SFC_ERROR_UNBOUNDED;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SFC_ERROR_INTERNAL;
    }
}

sfc_status require_args(bool ok) {
    if (!ok) {
        g_last_error = "null argument";
        return SFC_ERROR_INVALID;
    }
    return SFC_OK;
}

struct ResolvedBox {
    SearchBox box;
    std::string source; // "flag" | "instance" | "derived" | "default"
};

// Priority: explicit flag, instance box, bounding box of a bounded fallback
// polyhedron (+2 per side), [-10,10]^n with a warning.
ResolvedBox resolve_box(const char* box_text, const InstanceDoc& inst,
                        const HPolyhedron* fallback) {
    if (box_text && *box_text) return {parse_box_string(box_text, inst.n), "flag"};
    if (inst.box) return {*inst.box, "instance"};
    if (fallback) {
        GeneratorForm rec = cone_generators(fallback->A());
        if (rec.rays.empty() && rec.lineality.empty()) {
            GeneratorForm g = double_description_anchored(*fallback);
            if (auto derived = box_from_vertices(g, inst.n, 2))
                return {*derived, "derived"};
        }
    }
    return {default_search_box(inst.n), "default"};
}

void attach_box_meta(json& j, const ResolvedBox& rb) {
    j["box_used"] = box_json(rb.box);
    j["box_source"] = rb.source;
    if (rb.source == "default") j["box_warning"] = "no box given; fell back to [-10,10]^n";
}

HPolyhedron body_polyhedron(const BodyDoc& doc) {
    if (doc.halfspace) return HPolyhedron::from_rows({doc.halfspace->a}, {doc.halfspace->beta});
    return doc.body().as_hpolyhedron();
}

HPolyhedron intersect_with_q(const HPolyhedron& P, const HPolyhedron& Q) {
    return P.with_extra_rows(Q.A().row_list(), Q.b());
}

} // namespace

extern "C" {

const char* sfc_version(void) { return "0.1.0"; }

const char* sfc_last_error(void) { return g_last_error.c_str(); }

void sfc_string_free(char* s) { delete[] s; }

sfc_status sfc_instance_parse(const char* text, sfc_instance** out) {
    if (sfc_status st = require_args(text && out)) return st;
    return guarded([&] { *out = new sfc_instance{parse_instance(text)}; });
}

sfc_status sfc_body_parse(const char* text, sfc_body** out) {
    if (sfc_status st = require_args(text && out)) return st;
    return guarded([&] { *out = new sfc_body{parse_body(text)}; });
}

void sfc_instance_free(sfc_instance* inst) { delete inst; }
void sfc_body_free(sfc_body* body) { delete body; }

sfc_status sfc_instance_emit(const sfc_instance* inst, char** out_text) {
    if (sfc_status st = require_args(inst && out_text)) return st;
    return guarded([&] { *out_text = dup_string(emit_instance(inst->doc)); });
}

sfc_status sfc_body_emit(const sfc_body* body, char** out_text) {
    if (sfc_status st = require_args(body && out_text)) return st;
    return guarded([&] { *out_text = dup_string(emit_body(body->doc)); });
}

sfc_status sfc_check(const sfc_body* body, const sfc_instance* inst, const char* box,
                     char** out_report, int* out_negative) {
    if (sfc_status st = require_args(body && inst && out_report && out_negative)) return st;
    return guarded([&] {
        SDescription S = inst->doc.s_description();
        HPolyhedron BQ = intersect_with_q(body_polyhedron(body->doc), inst->doc.Q);
        ResolvedBox rb = resolve_box(box, inst->doc, &BQ);

        SFreeness sf;
        MaximalityReport rep(rb.box);
        if (body->doc.halfspace) {
            sf = is_s_free(*body->doc.halfspace, S, rb.box);
            rep = is_maximal_s_free(*body->doc.halfspace, S, rb.box);
        } else {
            SFreeBody B = body->doc.body();
            sf = is_s_free(B, S, rb.box);
            rep = is_maximal_s_free(B, S, rb.box);
        }
        json j;
        j["command"] = "check";
        j["s_free"] = sf.s_free;
        j["witness"] = sf.witness ? int_vec_json(*sf.witness) : json(nullptr);
        j["maximality"] = maximality_report_json(rep);
        attach_box_meta(j, rb);
        *out_negative = (!sf.s_free || rep.verdict == MaximalityVerdict::NotMaximal) ? 1 : 0;
        *out_report = dup_string(canonical_dump(j));
    });
}

sfc_status sfc_maximalize(const sfc_body* body, const sfc_instance* inst, const char* box,
                          int want_trace, char** out_body_text, char** out_report,
                          int* out_negative) {
    if (sfc_status st = require_args(body && inst && out_body_text && out_report && out_negative))
        return st;
    return guarded([&] {
        if (!body->doc.anchored())
            throw InvalidInput("maximalize: an anchored body (f + rows) is required");
        SFreeBody B = body->doc.body();
        SDescription S = inst->doc.s_description();
        HPolyhedron BQ = intersect_with_q(B.as_hpolyhedron(), inst->doc.Q);
        ResolvedBox rb = resolve_box(box, inst->doc, &BQ);

        TiltResult tilt = tilt_to_maximal(B, S, rb.box);
        json j;
        j["command"] = "maximalize";
        j["body"] = body_json(tilt.body);
        j["maximality"] = maximality_report_json(tilt.report);
        j["box_limited"] = tilt.box_limited_drop;
        if (want_trace) j["trace"] = tilt_trace_json(tilt.steps);
        j["steps"] = tilt.steps.size();
        attach_box_meta(j, rb);
        bool ok = tilt.report.verdict == MaximalityVerdict::MaximalCaseI ||
                  tilt.report.verdict == MaximalityVerdict::MaximalCaseII;
        *out_negative = ok ? 0 : 1;
        *out_body_text = dup_string(emit_body(tilt.body));
        *out_report = dup_string(canonical_dump(j));
    });
}

sfc_status sfc_cut(const sfc_instance* inst, const sfc_body* initial, const char* box,
                   char** out_report, int* out_negative) {
    if (sfc_status st = require_args(inst && out_report && out_negative)) return st;
    return guarded([&] {
        TableauInstance tab = inst->doc.tableau();
        std::optional<SFreeBody> start;
        if (initial) {
            if (!initial->doc.anchored())
                throw InvalidInput("cut: the initial body must be anchored (f + rows)");
            start = initial->doc.body();
            if (start->f() != tab.f)
                throw InvalidInput("cut: initial body anchor differs from the instance f");
        }
        HPolyhedron base = (start ? *start : default_initial_body(tab)).as_hpolyhedron();
        HPolyhedron BQ = intersect_with_q(base, inst->doc.Q);
        ResolvedBox rb = resolve_box(box, inst->doc, &BQ);

        CutResult cut = generate_cut(tab, start, rb.box);
        json j;
        j["command"] = "cut";
        json coeffs = json::array();
        for (const Rat& c : cut.coefficients) coeffs.push_back(rat_to_string(c));
        j["coefficients"] = coeffs;
        j["body"] = body_json(cut.body);
        j["maximality"] = maximality_report_json(cut.maximality);
        j["trace"] = tilt_trace_json(cut.trace);
        j["box_limited"] = cut.box_limited;
        attach_box_meta(j, rb);
        bool ok = cut.maximality.verdict == MaximalityVerdict::MaximalCaseI ||
                  cut.maximality.verdict == MaximalityVerdict::MaximalCaseII;
        *out_negative = ok ? 0 : 1;
        *out_report = dup_string(canonical_dump(j));
    });
}

sfc_status sfc_verify(const sfc_instance* inst, const sfc_body* gauge, const char* box,
                      char** out_report, int* out_negative) {
    if (sfc_status st = require_args(inst && gauge && out_report && out_negative)) return st;
    return guarded([&] {
        if (!gauge->doc.anchored())
            throw InvalidInput("verify: an anchored body (f + rows) is required");
        TableauInstance tab = inst->doc.tableau();
        if (*gauge->doc.f != tab.f)
            throw InvalidInput("verify: gauge anchor differs from the instance f");
        GaugeFunction psi(*gauge->doc.f, gauge->doc.rows);
        HPolyhedron BQ = intersect_with_q(body_of(psi).as_hpolyhedron(), inst->doc.Q);
        ResolvedBox rb = resolve_box(box, inst->doc, &BQ);

        ValidityReport rep = verify_validity(psi, tab, rb.box);
        json j = validity_report_json(rep);
        j["command"] = "verify";
        attach_box_meta(j, rb);
        *out_negative = rep.valid_within_box() ? 0 : 1;
        *out_report = dup_string(canonical_dump(j));
    });
}

sfc_status sfc_polar(const sfc_body* body, char** out_report) {
    if (sfc_status st = require_args(body && out_report)) return st;
    return guarded([&] {
        std::vector<RatVec> rows;
        if (body->doc.halfspace) {
            // a x <= beta has 0 interior iff beta > 0; rescale to rhs 1.
            if (body->doc.halfspace->beta <= 0)
                throw InvalidInput("polar: origin is not interior to the half-space");
            rows.push_back(vec_scale(Rat(1) / body->doc.halfspace->beta, body->doc.halfspace->a));
        } else {
            rows = body->doc.rows;
        }
        PolarBody P = polar(rows);
        json j;
        j["command"] = "polar";
        json gens = json::array();
        for (const RatVec& g : P.generators) gens.push_back(rat_vec_json(g));
        j["generators"] = gens;
        j["includes_origin"] = P.includes_origin;
        *out_report = dup_string(canonical_dump(j));
    });
}

sfc_status sfc_tighten(const sfc_body* body, const sfc_instance* inst, const char* box,
                       char** out_report, int* out_negative) {
    if (sfc_status st = require_args(body && inst && out_report && out_negative)) return st;
    return guarded([&] {
        if (!body->doc.anchored())
            throw InvalidInput("tighten: an anchored body (f + rows) is required");
        SFreeBody B = body->doc.body();
        SDescription S = inst->doc.s_description();
        HPolyhedron base = intersect_with_q(B.as_hpolyhedron(), shell(S));
        ResolvedBox rb = resolve_box(box, inst->doc, &base);

        TightenResult res = tighten_lattice(B, S, rb.box);
        json j;
        j["command"] = "tighten";
        j["polyhedron"] = hpolyhedron_json(res.polyhedron);
        j["steps"] = tighten_steps_json(res.steps);
        attach_box_meta(j, rb);
        *out_negative = 0;
        *out_report = dup_string(canonical_dump(j));
    });
}

sfc_status sfc_plot(const sfc_instance* inst, const sfc_body* const* bodies, size_t n_bodies,
                    const char* box, char** out_svg) {
    if (sfc_status st = require_args(inst && out_svg && (n_bodies == 0 || bodies))) return st;
    return guarded([&] {
        if (inst->doc.n != 2) throw InvalidInput("plot: only n = 2 scenes are supported");
        ResolvedBox rb = resolve_box(box, inst->doc, nullptr);
        PlotScene scene{inst->doc.s_description(), {}, rb.box, inst->doc.f};
        for (size_t i = 0; i < n_bodies; ++i) {
            if (!bodies[i]) throw InvalidInput("plot: null body handle");
            scene.bodies.push_back(body_polyhedron(bodies[i]->doc));
        }
        *out_svg = dup_string(plot_svg(scene));
    });
}

} // extern "C"
