#include "topcell/topcell.h"

#include "topcell/serialize.hpp"

#include <memory>
#include <sstream>
#include <string>

using namespace topcell;

struct tc_report {
    std::string json;
    std::string text;
    int exit_code = 0;
};

struct tc_diagram {
    DiagramSpec spec;
};

namespace {

thread_local std::string g_last_error;

tc_status status_for(const Error& e) {
    switch (e.code()) {
        case errc::parse_error: return TC_ERR_PARSE;
        case errc::invalid_argument:
        case errc::index_out_of_range: return TC_ERR_INVALID_ARGUMENT;
        case errc::internal_error: return TC_ERR_INTERNAL;
        default: return TC_ERR_DOMAIN;
    }
}

template <typename F>
tc_status guarded(F&& f) {
    try {
        f();
        return TC_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_for(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TC_ERR_INTERNAL;
    }
}

tc_report* make_report(Json json, std::string text, int exit_code) {
    auto* r = new tc_report;
    r->json = json.dump(2);
    r->text = std::move(text);
    r->exit_code = exit_code;
    return r;
}

const char* pass_str(bool b) { return b ? "pass" : "FAIL"; }

int exit_code_for(Outcome o) {
    switch (o) {
        case Outcome::splits: return 0;
        case Outcome::not_split:
        case Outcome::obstructed_two_piece: return 1;
        case Outcome::undecided: return 3;
        case Outcome::inconsistent_input: return 2;
    }
    return 2;
}

void render_verdict(std::ostringstream& out, const Verdict& v) {
    out << v.name << ": " << outcome_name(v.outcome) << "\n";
    for (const auto& w : v.witness) out << "  " << w << "\n";
}

struct SurfaceCheck {
    Verdict main;
    std::optional<Verdict> two_piece;
};

SurfaceCheck run_surface(const SurfaceDescriptor& d) {
    SurfaceCheck c;
    c.main = surface_verdict(d);
    if (d.pic) c.two_piece = beauville_voisin_obstruction(d);
    return c;
}

Json surface_check_json(const SurfaceCheck& c) {
    Json j = verdict_to_json(c.main);
    if (c.two_piece) j["two_piece_obstruction"] = verdict_to_json(*c.two_piece);
    return j;
}

void render_surface_check(std::ostringstream& out, const SurfaceCheck& c) {
    render_verdict(out, c.main);
    if (c.two_piece && c.two_piece->outcome == Outcome::obstructed_two_piece) {
        out << "  additionally: " << outcome_name(c.two_piece->outcome) << "\n";
        for (const auto& w : c.two_piece->witness) out << "    " << w << "\n";
    }
}

struct LemmaRun {
    std::vector<EigenReport> identities;
    std::vector<WuRow> wu_table;
    bool all_asserted_pass = true;
};

LemmaRun run_lemma(int rank_max, int prime) {
    LemmaRun run;
    auto record = [&](EigenReport r) {
        if (r.asserted && !r.pass) run.all_asserted_pass = false;
        run.identities.push_back(std::move(r));
    };
    for (unsigned r = 1; r <= static_cast<unsigned>(rank_max); ++r) {
        if (prime == 0 || prime == 2)
            record(verify_sq4_eigen(build_model(r, 2, SignConvention::mixed)));
        if (prime == 0 || prime == 3) {
            record(verify_p1_eigen(build_model(r, 3, SignConvention::mixed)));
            record(verify_p1_eigen(build_model(r, 3, SignConvention::alternating)));
        }
    }
    if (prime == 0 || prime == 2) {
        auto rows = compare_wu_formulas(2, static_cast<unsigned>(rank_max));
        run.wu_table.insert(run.wu_table.end(), rows.begin(), rows.end());
    }
    if (prime == 0 || prime == 3) {
        auto rows = compare_wu_formulas(3, static_cast<unsigned>(rank_max));
        run.wu_table.insert(run.wu_table.end(), rows.begin(), rows.end());
    }
    return run;
}

Json lemma_json(const LemmaRun& run) {
    Json j;
    j["identities"] = Json::array();
    for (const auto& r : run.identities) j["identities"].push_back(eigen_report_to_json(r));
    j["wu_table"] = Json::array();
    for (const auto& row : run.wu_table) j["wu_table"].push_back(wu_row_to_json(row));
    j["all_asserted_pass"] = run.all_asserted_pass;
    return j;
}

std::string lemma_text(const LemmaRun& run) {
    std::ostringstream out;
    out << "Thom-class eigen identities\n";
    for (const auto& r : run.identities) {
        out << "  r=" << r.rank << " p=" << r.prime << " [" << sign_convention_name(r.convention)
            << "] " << r.identity << ": residual = " << r.residual.str();
        if (r.asserted)
            out << "  " << pass_str(r.pass) << "\n";
        else
            out << "  (recorded; identity not claimed at this rank)\n";
    }
    out << "Closed-form table for the shift-2 operation on chern classes\n";
    for (const auto& row : run.wu_table) {
        out << "  p=" << row.prime << " r=" << row.rank << " i=" << row.index << ": ";
        if (row.agrees)
            out << "closed form agrees with the splitting-principle value\n";
        else
            out << "DISAGREES; closed form - oracle = " << row.discrepancy.str() << "\n";
    }
    out << (run.all_asserted_pass ? "all asserted identities hold\n"
                                  : "some asserted identity FAILED\n");
    return out.str();
}

}  // namespace

extern "C" {

const char* tc_version(void) { return "0.1.0"; }

const char* tc_status_name(tc_status status) {
    switch (status) {
        case TC_OK: return "ok";
        case TC_ERR_INVALID_ARGUMENT: return "invalid argument";
        case TC_ERR_PARSE: return "parse error";
        case TC_ERR_DOMAIN: return "domain error";
        case TC_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* tc_last_error(void) { return g_last_error.c_str(); }

const char* tc_report_json(const tc_report* report) { return report->json.c_str(); }
const char* tc_report_text(const tc_report* report) { return report->text.c_str(); }
int tc_report_exit_code(const tc_report* report) { return report->exit_code; }
void tc_report_free(tc_report* report) { delete report; }

tc_status tc_verify_lemma(int rank_max, int prime, tc_report** out) {
    return guarded([&] {
        if (rank_max < 1 || rank_max > 6)
            fail(errc::invalid_argument, "rank_max must be between 1 and 6");
        if (prime != 0 && prime != 2 && prime != 3)
            fail(errc::invalid_argument, "prime must be 2, 3 or 0 (both)");
        LemmaRun run = run_lemma(rank_max, prime);
        *out = make_report(lemma_json(run), lemma_text(run), run.all_asserted_pass ? 0 : 1);
    });
}

tc_status tc_check_surface(const char* descriptor_json, tc_report** out) {
    return guarded([&] {
        if (!descriptor_json) fail(errc::invalid_argument, "null descriptor");
        SurfaceDescriptor d = surface_from_json(parse_json(descriptor_json));
        SurfaceCheck c = run_surface(d);
        std::ostringstream text;
        render_surface_check(text, c);
        *out = make_report(surface_check_json(c), text.str(), exit_code_for(c.main.outcome));
    });
}

tc_status tc_check_curve(const char* descriptor_json, tc_report** out) {
    return guarded([&] {
        if (!descriptor_json) fail(errc::invalid_argument, "null descriptor");
        CurveDescriptor d = curve_from_json(parse_json(descriptor_json));
        Verdict v = curve_verdict(d);
        std::ostringstream text;
        render_verdict(text, v);
        *out = make_report(verdict_to_json(v), text.str(), exit_code_for(v.outcome));
    });
}

tc_status tc_catalog(const char* catalog_json, tc_report** out) {
    return guarded([&] {
        Json j = parse_json(catalog_json ? catalog_json : builtin_catalog_json());
        Catalog catalog = catalog_from_json(j);
        Json entries = Json::array();
        std::ostringstream text;
        for (const auto& d : catalog.surfaces) {
            SurfaceCheck c = run_surface(d);
            entries.push_back(surface_check_json(c));
            render_surface_check(text, c);
        }
        for (const auto& d : catalog.curves) {
            Verdict v = curve_verdict(d);
            entries.push_back(verdict_to_json(v));
            render_verdict(text, v);
        }
        Json report;
        report["entries"] = std::move(entries);
        *out = make_report(std::move(report), text.str(), 0);
    });
}

tc_status tc_snf(const char* matrix_json, tc_report** out) {
    return guarded([&] {
        if (!matrix_json) fail(errc::invalid_argument, "null matrix");
        IMat a = matrix_from_json(parse_json(matrix_json));
        SnfResult snf = smith_normal_form(a);
        std::ostringstream text;
        text << "U*A*V = D with diagonal (";
        auto diag = snf.diagonal();
        for (size_t i = 0; i < diag.size(); ++i) text << (i ? ", " : "") << diag[i].str();
        text << ")\n";
        *out = make_report(snf_to_json(a, snf), text.str(), 0);
    });
}

tc_status tc_projectors(const char* instance_json, int genus_max, tc_report** out) {
    return guarded([&] {
        Json j;
        std::ostringstream text;
        bool all_pass = true;
        if (!instance_json) {
            if (genus_max < 0 || genus_max > 16)
                fail(errc::invalid_argument, "genus_max must be between 0 and 16");
            Json checks = Json::array();
            for (unsigned g = 0; g <= static_cast<unsigned>(genus_max); ++g) {
                CurvePreset preset = curve_preset(g);
                ProjectorReport r = projector_check(
                    preset.realization, {preset.pi0, preset.pi1, preset.pi2}, preset.delta);
                all_pass = all_pass && r.all_pass();
                Json cj = projector_report_to_json(r);
                cj["genus"] = g;
                checks.push_back(std::move(cj));
                text << "curve preset genus " << g << ": " << pass_str(r.all_pass()) << "\n";
            }
            AbelianSurfacePreset ab = abelian_surface_preset();
            Pi3Report pi3 = jacobian_pi3_check(ab.realization, ab.pi1, ab.pi1_adjoint);
            all_pass = all_pass && pi3.zero;
            j["curve_presets"] = std::move(checks);
            j["pi3_zero"] = pi3.zero;
            text << "abelian-surface preset: " << pi3.detail << " " << pass_str(pi3.zero)
                 << "\n";
        } else {
            Json inst = parse_json(instance_json);
            Realization r;
            for (const auto& g : inst.at("realization")) r.weights.push_back(group_from_json(g));
            auto parse_projector = [&](const Json& pj) {
                Projector p;
                p.name = pj.contains("name") ? pj["name"].get<std::string>() : "p";
                const auto& blocks = pj.at("blocks");
                if (blocks.size() != r.weights.size())
                    fail(errc::shape_mismatch, "projector needs one block per weight");
                for (size_t w = 0; w < r.weights.size(); ++w)
                    p.blocks.emplace_back(r.weights[w], r.weights[w],
                                          matrix_from_json(blocks[w]));
                return p;
            };
            std::vector<Projector> ps;
            for (const auto& pj : inst.at("projectors")) ps.push_back(parse_projector(pj));
            Projector delta = inst.contains("delta") ? parse_projector(inst["delta"])
                                                     : projector_identity(r, "delta");
            ProjectorReport report = projector_check(r, ps, delta);
            all_pass = report.all_pass();
            j = projector_report_to_json(report);
            for (const auto& item : report.items)
                text << item.description << ": " << pass_str(item.pass) << "\n";
            if (inst.contains("pi1") && inst.contains("pi1_adjoint")) {
                Pi3Report pi3 = jacobian_pi3_check(r, parse_projector(inst["pi1"]),
                                                   parse_projector(inst["pi1_adjoint"]));
                all_pass = all_pass && pi3.zero;
                j["pi3_zero"] = pi3.zero;
                text << pi3.detail << ": " << pass_str(pi3.zero) << "\n";
            }
        }
        j["all_pass"] = all_pass;
        *out = make_report(std::move(j), text.str(), all_pass ? 0 : 1);
    });
}

tc_status tc_diagram_parse(const char* diagram_json, tc_diagram** out) {
    return guarded([&] {
        if (!diagram_json) fail(errc::invalid_argument, "null diagram");
        auto d = std::make_unique<tc_diagram>();
        d->spec = diagram_from_json(parse_json(diagram_json));
        *out = d.release();
    });
}

void tc_diagram_free(tc_diagram* diagram) { delete diagram; }

tc_status tc_diagram_check(const tc_diagram* diagram, tc_report** out) {
    return guarded([&] {
        DiagramReport r = check_diagram(diagram->spec);
        std::ostringstream text;
        for (const auto& item : r.items) {
            text << item.description << ": " << pass_str(item.pass);
            if (!item.detail.empty()) text << " (" << item.detail << ")";
            text << "\n";
        }
        text << (r.all_pass() ? "diagram assertions hold\n" : "diagram assertions FAILED\n");
        *out = make_report(diagram_report_to_json(r), text.str(), r.all_pass() ? 0 : 2);
    });
}

tc_status tc_diagram_lift(const tc_diagram* diagram, const char* cycle_json,
                          const char* twist_json, int psi, tc_report** out) {
    return guarded([&] {
        if (!cycle_json) fail(errc::invalid_argument, "null cycle");
        std::vector<Int> cycle = vector_from_json(parse_json(cycle_json));
        std::optional<std::vector<Int>> twist;
        if (twist_json) twist = vector_from_json(parse_json(twist_json));

        DiagramReport check = check_diagram(diagram->spec);
        Json j;
        j["diagram"] = diagram_report_to_json(check);
        std::ostringstream text;
        if (!check.all_pass()) {
            for (const auto& item : check.items)
                if (!item.pass) text << "diagram assertion failed: " << item.description << "\n";
            *out = make_report(std::move(j), text.str(), 2);
            return;
        }

        LiftVerdict v = lift_query(diagram->spec, cycle, twist);
        j["lift"] = lift_verdict_to_json(v);
        text << lift_outcome_name(v.outcome) << " via " << v.route << ": " << v.detail << "\n";
        int code = v.outcome == LiftOutcome::lifts ? 0
                   : v.outcome == LiftOutcome::obstructed ? 1
                                                          : 3;
        if (psi) {
            PsiVerdict pv = psi_obstruction(diagram->spec, cycle);
            Json pj;
            pj["lifts"] = pv.lifts;
            pj["psi_class"] = vector_to_json(pv.psi_class);
            pj["detail"] = pv.detail;
            j["psi"] = std::move(pj);
            text << "secondary obstruction: " << (pv.lifts ? "Lifts" : "Obstructed") << " ("
                 << pv.detail << ")\n";
            if (!pv.lifts) code = 1;
        }
        *out = make_report(std::move(j), text.str(), code);
    });
}

}  // extern "C"
