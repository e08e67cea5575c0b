#include "sfree.hpp"

#include <algorithm>

namespace sfreecut {

namespace {

const char* kProxyNote = "B cap Q full-dimensionality used as proxy for B cap conv(S) interior; "
                         "certificates searched within box only";

std::string point_str(const IntVec& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += p[i].str();
    }
    return s + ")";
}

// The S-free analysis assumes f in conv(S) \ Z^n; an integral anchor is a
// degenerate input for every checker below.
void require_fractional_anchor(const SFreeBody& B) {
    if (is_integral(B.f()))
        throw InvalidInput("anchor f is integral; S-free analysis requires f outside Z^n");
}

} // namespace

SFreeBody::SFreeBody(RatVec f, std::vector<RatVec> rows) : f_(std::move(f)) {
    if (f_.empty()) throw InvalidInput("SFreeBody: empty anchor");
    if (rows.empty()) throw InvalidInput("SFreeBody: a body needs at least one row");
    for (const RatVec& a : rows) {
        if (a.size() != f_.size()) throw DimensionMismatch("SFreeBody: row dimension != anchor dimension");
        bool seen = false;
        for (const RatVec& prev : rows_)
            if (prev == a) { seen = true; break; }
        if (!seen) rows_.push_back(a);
    }
}

HPolyhedron SFreeBody::as_hpolyhedron() const {
    RatVec rhs;
    rhs.reserve(rows_.size());
    for (const RatVec& a : rows_) rhs.push_back(Rat(1) + dot(a, f_));
    return HPolyhedron::from_rows(rows_, rhs);
}

Rat SFreeBody::gauge_value(const RatVec& x_minus_f) const {
    Rat best = dot(rows_[0], x_minus_f);
    for (size_t i = 1; i < rows_.size(); ++i) best = std::max(best, dot(rows_[i], x_minus_f));
    return best;
}

std::string to_string(MaximalityVerdict v) {
    switch (v) {
        case MaximalityVerdict::MaximalCaseI: return "maximal-case-i";
        case MaximalityVerdict::MaximalCaseII: return "maximal-case-ii";
        case MaximalityVerdict::NotMaximal: return "not-maximal";
        case MaximalityVerdict::UndecidedBox: return "undecided-box";
    }
    return "?";
}

SFreeness is_s_free(const SFreeBody& B, const SDescription& S, const SearchBox& box) {
    if (B.dim() != S.dim()) throw DimensionMismatch("is_s_free: dimensions differ");
    require_fractional_anchor(B);
    HPolyhedron PB = B.as_hpolyhedron();
    HPolyhedron both = PB.with_extra_rows(S.Q.A().row_list(), S.Q.b());
    SFreeness res;
    for (const IntVec& p : enumerate_integer_points(both, box)) {
        if (membership(PB, to_ratvec(p)) == Membership::Interior) {
            res.s_free = false;
            res.witness = p;
            return res;
        }
    }
    res.s_free = true;
    return res;
}

SFreeness is_s_free(const HalfSpace& H, const SDescription& S, const SearchBox& box) {
    if (H.a.size() != S.dim()) throw DimensionMismatch("is_s_free: dimensions differ");
    HPolyhedron PH = HPolyhedron::from_rows({H.a}, {H.beta});
    HPolyhedron both = PH.with_extra_rows(S.Q.A().row_list(), S.Q.b());
    SFreeness res;
    for (const IntVec& p : enumerate_integer_points(both, box)) {
        if (membership(PH, to_ratvec(p)) == Membership::Interior) {
            res.s_free = false;
            res.witness = p;
            return res;
        }
    }
    res.s_free = true;
    return res;
}

FacetCertificates facet_certificates(const SFreeBody& B, const SDescription& S, const SearchBox& box) {
    if (B.dim() != S.dim()) throw DimensionMismatch("facet_certificates: dimensions differ");
    require_fractional_anchor(B);
    HPolyhedron PB = B.as_hpolyhedron();
    FacetCertificates out;
    out.per_row.resize(PB.row_count());
    for (size_t i = 0; i < PB.row_count(); ++i) {
        if (!is_facet_row(PB, i)) {
            out.non_facet_rows.push_back(i);
            continue;
        }
        RatVec a = PB.row(i);
        // facet slice of B, intersected with Q: a x = b as two inequalities
        HPolyhedron slice = PB.with_extra_rows({vec_scale(Rat(-1), a)}, {Rat(-PB.rhs(i))});
        slice = slice.with_extra_rows(S.Q.A().row_list(), S.Q.b());
        for (const IntVec& p : enumerate_integer_points(slice, box)) {
            if (facet_rel_interior_test(PB, i, to_ratvec(p))) {
                out.per_row[i] = p;
                break;
            }
        }
    }
    return out;
}

namespace {

// conv(S) ⊆ {a x >= beta}, decided through the generators of Q.
bool q_within_upper_side(const SDescription& S, const RatVec& a, const Rat& beta) {
    GeneratorForm g = double_description_anchored(S.Q);
    if (g.is_empty) return false;
    for (const RatVec& v : g.vertices)
        if (dot(a, v) < beta) return false;
    for (const RatVec& r : g.rays)
        if (dot(a, r) < 0) return false;
    for (const RatVec& l : g.lineality)
        if (dot(a, l) != 0) return false;
    return true;
}

MaximalityReport halfspace_maximality(const RatVec& a, const Rat& beta, const SDescription& S,
                                      const SearchBox& box) {
    MaximalityReport rep(box);
    rep.note = kProxyNote;
    rep.facet_certificates.resize(1);
    if (a.size() != S.dim()) throw DimensionMismatch("halfspace maximality: dimensions differ");
    if (is_zero_vec(a)) throw InvalidInput("halfspace maximality: zero normal");
    HPolyhedron H = HPolyhedron::from_rows({a}, {beta});
    HPolyhedron HQ = H.with_extra_rows(S.Q.A().row_list(), S.Q.b());
    int dim_hq = polyhedron_dim(HQ);
    const int n = static_cast<int>(S.dim());

    if (dim_hq == n) {
        // Full-dimensional intersection: case (ii) cannot apply; fall back to
        // the case (i) conditions for the one-facet polyhedron.
        for (const IntVec& p : enumerate_integer_points(HQ, box)) {
            if (membership(H, to_ratvec(p)) == Membership::Interior) {
                rep.verdict = MaximalityVerdict::NotMaximal;
                rep.violating_point = p;
                return rep;
            }
        }
        if (!s_full_dimensional_in_box(S, box)) {
            rep.note += "; S not certified full-dimensional in box";
            return rep; // undecided
        }
        HPolyhedron slice = HQ.with_extra_rows({vec_scale(Rat(-1), a)}, {Rat(-beta)});
        for (const IntVec& p : enumerate_integer_points(slice, box)) {
            if (facet_rel_interior_test(H, 0, to_ratvec(p))) {
                rep.facet_certificates[0] = p;
                rep.verdict = MaximalityVerdict::MaximalCaseI;
                return rep;
            }
        }
        rep.verdict = MaximalityVerdict::NotMaximal;
        return rep;
    }

    if (dim_hq < 0) {
        // The boundary hyperplane misses Q entirely, so it cannot support
        // conv(S); the half-space can be translated outward.
        rep.verdict = MaximalityVerdict::NotMaximal;
        return rep;
    }

    if (!q_within_upper_side(S, a, beta)) {
        rep.verdict = MaximalityVerdict::UndecidedBox;
        return rep;
    }
    // Supporting contact must be exhibited by an S-point on the hyperplane.
    HPolyhedron on_plane = HQ.with_extra_rows({vec_scale(Rat(-1), a)}, {Rat(-beta)});
    for (const IntVec& p : enumerate_integer_points(on_plane, box)) {
        rep.facet_certificates[0] = p;
        rep.verdict = MaximalityVerdict::MaximalCaseII;
        return rep;
    }
    rep.verdict = MaximalityVerdict::UndecidedBox;
    return rep;
}

} // namespace

MaximalityReport is_maximal_s_free(const HalfSpace& H, const SDescription& S, const SearchBox& box) {
    return halfspace_maximality(H.a, H.beta, S, box);
}

MaximalityReport is_maximal_s_free(const SFreeBody& B, const SDescription& S, const SearchBox& box) {
    if (B.dim() != S.dim()) throw DimensionMismatch("is_maximal_s_free: dimensions differ");
    require_fractional_anchor(B);
    MaximalityReport rep(box);
    rep.note = kProxyNote;
    rep.facet_certificates.resize(B.rows().size());

    SFreeness sf = is_s_free(B, S, box);
    if (!sf.s_free) {
        rep.verdict = MaximalityVerdict::NotMaximal;
        rep.violating_point = sf.witness;
        return rep;
    }
    if (!s_full_dimensional_in_box(S, box)) {
        rep.note += "; S not certified full-dimensional in box";
        return rep; // undecided
    }

    HPolyhedron PB = B.as_hpolyhedron();
    HPolyhedron BQ = PB.with_extra_rows(S.Q.A().row_list(), S.Q.b());
    const int n = static_cast<int>(B.dim());
    if (polyhedron_dim(BQ) == n) {
        FacetCertificates fc = facet_certificates(B, S, box);
        rep.facet_certificates = fc.per_row;
        rep.non_facet_rows = fc.non_facet_rows;
        bool all = true;
        for (size_t i = 0; i < PB.row_count(); ++i) {
            bool facet = std::find(fc.non_facet_rows.begin(), fc.non_facet_rows.end(), i) ==
                         fc.non_facet_rows.end();
            if (facet && !fc.per_row[i]) all = false;
        }
        rep.verdict = all ? MaximalityVerdict::MaximalCaseI : MaximalityVerdict::NotMaximal;
        return rep;
    }
    if (B.rows().size() == 1) {
        const RatVec& a = B.rows()[0];
        return halfspace_maximality(a, Rat(1) + dot(a, B.f()), S, box);
    }
    // Multi-row body whose intersection with Q is lower-dimensional: neither
    // case (i) nor case (ii) applies through the Q proxy.
    return rep;
}

SFreeBody lineality_extend(const SFreeBody& B, const RatVec& r, const SDescription& S,
                           const SearchBox& box) {
    if (r.size() != B.dim()) throw DimensionMismatch("lineality_extend: direction dimension");
    require_fractional_anchor(B);
    if (is_zero_vec(r)) throw InvalidInput("lineality_extend: zero direction");
    for (const RatVec& a : B.rows())
        if (dot(a, r) > 0) throw InvalidInput("lineality_extend: r not in rec(B)");
    for (size_t i = 0; i < S.Q.row_count(); ++i)
        if (dot(S.Q.row(i), r) > 0) throw InvalidInput("lineality_extend: r not in rec(Q)");
    HPolyhedron BQ = B.as_hpolyhedron().with_extra_rows(S.Q.A().row_list(), S.Q.b());
    if (polyhedron_dim(BQ) != static_cast<int>(B.dim()))
        throw InvalidInput("lineality_extend: B cap Q is not full-dimensional");

    std::vector<RatVec> kept;
    for (const RatVec& a : B.rows())
        if (dot(a, r) == 0) kept.push_back(a);
    if (kept.empty())
        throw InvalidInput("lineality_extend: all rows dropped; B+<r> is the whole space");
    SFreeBody out(B.f(), kept);
    SFreeness sf = is_s_free(out, S, box);
    if (!sf.s_free)
        throw Error("lineality_extend: extension not S-free within box, witness " +
                    point_str(*sf.witness));
    return out;
}

HPolyhedron shell(const SDescription& S) {
    RatMat A(0, S.dim());
    RatVec b;
    for (size_t i = 0; i < S.Q.row_count(); ++i) {
        RatVec joint = S.Q.row(i);
        joint.push_back(S.Q.rhs(i));
        joint = primitive(joint); // positive rescale to integral, content 1
        RatVec a(joint.begin(), joint.begin() + S.dim());
        A.append_row(a);
        b.push_back(joint.back() + Rat(1, 2));
    }
    return HPolyhedron(std::move(A), std::move(b));
}

TightenResult tighten_lattice(const SFreeBody& B, const SDescription& S, const SearchBox& box) {
    require_fractional_anchor(B);
    SFreeness sf = is_s_free(B, S, box);
    if (!sf.s_free)
        throw InvalidInput("tighten_lattice: body is not S-free, witness " + point_str(*sf.witness));

    HPolyhedron PB = B.as_hpolyhedron();
    HPolyhedron P0 = shell(S);
    const size_t body_rows = PB.row_count();

    struct ShellRow {
        RatVec a;
        Rat rhs;
    };
    std::vector<ShellRow> shell_rows;
    for (size_t i = 0; i < P0.row_count(); ++i) shell_rows.push_back({P0.row(i), P0.rhs(i)});

    auto combined = [&]() {
        std::vector<RatVec> rows;
        RatVec rhs;
        for (const ShellRow& s : shell_rows) {
            rows.push_back(s.a);
            rhs.push_back(s.rhs);
        }
        return PB.with_extra_rows(rows, rhs);
    };

    TightenResult result{combined(), {}, box};
    const size_t budget = shell_rows.size();
    size_t pushes_and_drops = 0;

    bool progress = true;
    while (progress) {
        progress = false;
        HPolyhedron K = combined();
        for (size_t s = 0; s < shell_rows.size(); ++s) {
            size_t row_idx = body_rows + s;
            if (!is_facet_row(K, row_idx)) {
                // Redundant shell inequality; not part of the facet system.
                result.steps.push_back({s, true, std::nullopt});
                shell_rows.erase(shell_rows.begin() + s);
                progress = true;
                break;
            }
            // Certified when some integer point lies in the facet's relative interior.
            RatVec a = K.row(row_idx);
            HPolyhedron slice = K.with_extra_rows({vec_scale(Rat(-1), a)}, {Rat(-K.rhs(row_idx))});
            bool certified = false;
            for (const IntVec& p : enumerate_integer_points(slice, box)) {
                if (facet_rel_interior_test(K, row_idx, to_ratvec(p))) {
                    certified = true;
                    break;
                }
            }
            if (certified) continue;

            if (++pushes_and_drops > budget)
                throw Error("tighten_lattice: facet updates exceeded the shell row count");
            HPolyhedron without = K.without_row(row_idx);
            std::optional<IntVec> best;
            Rat best_dist;
            for (const IntVec& p : enumerate_integer_points(without, box)) {
                if (membership(without, to_ratvec(p)) != Membership::Interior) continue;
                Rat dist = dot(a, to_ratvec(p)) - shell_rows[s].rhs;
                if (!best || dist < best_dist) {
                    best = p;
                    best_dist = dist;
                } // enumeration is lex sorted, so the first minimizer wins ties
            }
            if (!best) {
                result.steps.push_back({s, true, std::nullopt});
                shell_rows.erase(shell_rows.begin() + s);
            } else {
                result.steps.push_back({s, false, best});
                shell_rows[s].rhs = dot(a, to_ratvec(*best));
            }
            progress = true;
            break;
        }
    }
    result.polyhedron = combined();
    return result;
}

TiltResult tilt_to_maximal(const SFreeBody& C, const SDescription& S, const SearchBox& box) {
    if (C.dim() != S.dim()) throw DimensionMismatch("tilt_to_maximal: dimensions differ");
    require_fractional_anchor(C);
    std::vector<IntVec> s_points = s_points_in_box(S, box);
    if (s_points.empty()) throw InvalidInput("tilt_to_maximal: no S-point inside the box");
    {
        SFreeness sf = is_s_free(C, S, box);
        if (!sf.s_free)
            throw InvalidInput("tilt_to_maximal: body is not S-free, witness " + point_str(*sf.witness));
    }
    {
        // rec(C cap Q) must already lie in lin(C); otherwise Lemma 5
        // extension is the caller's job.
        RatMat stacked = RatMat::from_rows(C.rows());
        for (size_t i = 0; i < S.Q.row_count(); ++i) stacked.append_row(S.Q.row(i));
        GeneratorForm rec = cone_generators(stacked);
        auto in_lin_c = [&](const RatVec& g) {
            for (const RatVec& a : C.rows())
                if (dot(a, g) != 0) return false;
            return true;
        };
        for (const RatVec& g : rec.rays)
            if (!in_lin_c(g))
                throw InvalidInput("tilt_to_maximal: rec(C cap Q) not inside lin(C); "
                                   "apply lineality_extend first");
        for (const RatVec& g : rec.lineality)
            if (!in_lin_c(g))
                throw InvalidInput("tilt_to_maximal: rec(C cap Q) not inside lin(C); "
                                   "apply lineality_extend first");
    }

    const RatVec& f = C.f();
    std::vector<RatVec> gens = recession_generator_list(S);
    std::vector<RatVec> rows = SFreeBody(f, C.rows()).rows(); // deduplicated
    const size_t budget = rows.size();

    TiltResult result{C, {}, MaximalityReport(box), false};

    auto uncertified_facets = [&](const SFreeBody& body) {
        FacetCertificates fc = facet_certificates(body, S, box);
        std::vector<size_t> out;
        for (size_t i = 0; i < body.rows().size(); ++i) {
            bool facet = std::find(fc.non_facet_rows.begin(), fc.non_facet_rows.end(), i) ==
                         fc.non_facet_rows.end();
            if (facet && !fc.per_row[i]) out.push_back(i);
        }
        return out;
    };

    while (true) {
        SFreeBody body(f, rows);
        rows = body.rows();
        std::vector<size_t> open = uncertified_facets(body);
        if (open.empty()) break;
        if (result.steps.size() >= budget) {
            result.box_limited_drop = true;
            break;
        }
        const size_t d1_idx = open.front();
        const RatVec d1 = rows[d1_idx];

        std::vector<RatVec> qualifying;
        for (const RatVec& g : gens) {
            if (dot(d1, g) <= 0) continue;
            bool ok = true;
            for (size_t i = 0; i < rows.size() && ok; ++i)
                if (i != d1_idx && dot(rows[i], g) > 0) ok = false;
            if (ok) qualifying.push_back(g);
        }

        bool stepped = false;
        TiltStep last_attempt;
        for (size_t d2_idx = 0; d2_idx < rows.size() && !stepped; ++d2_idx) {
            if (d2_idx == d1_idx) continue;
            const RatVec d2 = rows[d2_idx];
            Rat lambda_star(0);
            for (const RatVec& g : qualifying) {
                Rat denom = dot(vec_sub(d1, d2), g); // > 0 for qualifying g
                lambda_star = std::max(lambda_star, Rat(-dot(d2, g) / denom));
            }
            RatVec tilt_row = vec_add(vec_scale(lambda_star, d1), vec_scale(Rat(1) - lambda_star, d2));

            std::optional<IntVec> xbar;
            Rat lambda_bar;
            for (const IntVec& p : s_points) {
                RatVec diff = vec_sub(to_ratvec(p), f);
                if (dot(d1, diff) <= 1) continue;
                if (dot(tilt_row, diff) >= 1) continue;
                bool inside_others = true;
                for (size_t i = 0; i < rows.size() && inside_others; ++i)
                    if (i != d1_idx && dot(rows[i], diff) >= 1) inside_others = false;
                if (!inside_others) continue;
                Rat lam = (Rat(1) - dot(d2, diff)) / dot(vec_sub(d1, d2), diff);
                if (lam <= lambda_star) continue;
                if (!xbar || lam > lambda_bar) { // lex order of s_points breaks ties
                    xbar = p;
                    lambda_bar = lam;
                }
            }
            last_attempt = TiltStep{d1_idx, d1, d2_idx, d2, lambda_star, false, std::nullopt, Rat(0), {}};
            if (!xbar) continue;

            RatVec new_row =
                vec_add(vec_scale(lambda_bar, d1), vec_scale(Rat(1) - lambda_bar, d2));
            std::vector<RatVec> trial = rows;
            trial[d1_idx] = new_row;
            SFreeBody trial_body(f, trial);
            SFreeness sf = is_s_free(trial_body, S, box);
            if (!sf.s_free)
                throw Error("tilt_to_maximal: tilted body lost S-freeness at witness " +
                            point_str(*sf.witness));
            // Partner accepted only if the new facet is S-certified; xbar
            // itself must witness it.
            size_t new_idx = 0;
            while (trial_body.rows()[new_idx] != new_row) ++new_idx;
            HPolyhedron trial_h = trial_body.as_hpolyhedron();
            if (!is_facet_row(trial_h, new_idx) ||
                !facet_rel_interior_test(trial_h, new_idx, to_ratvec(*xbar)))
                continue;

            rows = trial_body.rows();
            result.steps.push_back(
                TiltStep{d1_idx, d1, d2_idx, d2, lambda_star, false, xbar, lambda_bar, new_row});
            stepped = true;
        }
        if (stepped) continue;

        // No partner produced a certified facet: drop d1 (Claim-1 style) and
        // remember that maximality is then certified only within the box.
        if (rows.size() == 1) {
            result.box_limited_drop = true;
            break;
        }
        last_attempt.dropped = true;
        result.steps.push_back(last_attempt);
        rows.erase(rows.begin() + d1_idx);
        result.box_limited_drop = true;
    }

    // Canonical output: drop redundant rows (they define no facet).
    {
        SFreeBody body(f, rows);
        HPolyhedron h = body.as_hpolyhedron();
        std::vector<RatVec> keep;
        for (size_t i = 0; i < body.rows().size(); ++i)
            if (is_facet_row(h, i)) keep.push_back(body.rows()[i]);
        if (!keep.empty()) rows = keep;
    }

    result.body = SFreeBody(f, rows);
    result.report = is_maximal_s_free(result.body, S, box);
    return result;
}

} // namespace sfreecut
