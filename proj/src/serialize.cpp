#include "topcell/serialize.hpp"

namespace topcell {

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        fail(errc::parse_error, e.what());
    }
}

Json int_to_json(const Int& x) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (x >= lo && x <= hi) return Json(static_cast<long long>(x));
    return Json(x.str());
}

Int json_to_int(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            fail(errc::parse_error, "not an integer string: " + j.get<std::string>());
        }
    }
    fail(errc::parse_error, "expected an integer, got " + j.dump());
}

namespace {

const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(errc::parse_error, std::string("missing field: ") + key);
    return *it;
}

std::vector<unsigned> exponents_from_json(const Json& j) {
    if (!j.is_array()) fail(errc::parse_error, "monomial must be an exponent array");
    std::vector<unsigned> exps;
    for (const auto& e : j) {
        Int v = json_to_int(e);
        if (v < 0) fail(errc::parse_error, "negative exponent");
        exps.push_back(static_cast<unsigned>(v));
    }
    return exps;
}

TermList terms_from_json(const Json& j) {
    if (!j.is_array()) fail(errc::parse_error, "term list must be an array");
    TermList terms;
    for (const auto& t : j)
        terms.emplace_back(json_to_int(field(t, "coeff")), exponents_from_json(field(t, "monomial")));
    return terms;
}

Json terms_to_json(const TermList& terms) {
    Json out = Json::array();
    for (const auto& [c, exps] : terms) {
        Json t;
        t["coeff"] = int_to_json(c);
        t["monomial"] = exps;
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

Json ring_to_json(const GradedRing& ring) {
    Json j;
    j["modulus"] = int_to_json(ring.modulus());
    j["generators"] = Json::array();
    for (const auto& g : ring.generators())
        j["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
    j["rules"] = Json::array();
    for (const auto& r : ring.rules()) {
        Json rule;
        rule["generator"] = r.generator;
        rule["power"] = r.power;
        rule["rhs"] = terms_to_json(r.rhs);
        j["rules"].push_back(std::move(rule));
    }
    if (ring.degree_cap()) j["degree_cap"] = *ring.degree_cap();
    return j;
}

RingPtr ring_from_json(const Json& j) {
    Int modulus = json_to_int(field(j, "modulus"));
    std::vector<Generator> gens;
    for (const auto& g : field(j, "generators"))
        gens.push_back({field(g, "name").get<std::string>(),
                        static_cast<unsigned>(json_to_int(field(g, "degree")))});
    std::vector<RuleData> rules;
    if (j.contains("rules"))
        for (const auto& r : j["rules"]) {
            RuleData rd;
            rd.generator = field(r, "generator").get<std::string>();
            rd.power = static_cast<unsigned>(json_to_int(field(r, "power")));
            rd.rhs = terms_from_json(field(r, "rhs"));
            rules.push_back(std::move(rd));
        }
    std::optional<unsigned> cap;
    if (j.contains("degree_cap") && !j["degree_cap"].is_null())
        cap = static_cast<unsigned>(json_to_int(j["degree_cap"]));
    return GradedRing::make(std::move(modulus), std::move(gens), std::move(rules), cap);
}

Json element_terms_to_json(const RingElement& e) {
    Json out = Json::array();
    const auto& terms = e.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        Json t;
        t["coeff"] = int_to_json(it->second);
        t["monomial"] = it->first.exponents();
        out.push_back(std::move(t));
    }
    return out;
}

RingElement element_from_json(const RingPtr& ring, const Json& j) {
    return ring->element(terms_from_json(j));
}

Json matrix_to_json(const IMat& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < m.cols; ++k) row.push_back(int_to_json(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IMat matrix_from_json(const Json& j) {
    const Json& rows = j.is_object() ? field(j, "matrix") : j;
    if (!rows.is_array()) fail(errc::parse_error, "matrix must be an array of rows");
    std::vector<std::vector<Int>> data;
    for (const auto& row : rows) {
        if (!row.is_array()) fail(errc::parse_error, "matrix row must be an array");
        std::vector<Int> r;
        for (const auto& x : row) r.push_back(json_to_int(x));
        data.push_back(std::move(r));
    }
    return IMat::from_rows(data);
}

Json group_to_json(const FgAbGroup& g) {
    Json j;
    j["generators"] = g.ngens();
    Json rels = Json::array();
    for (size_t c = 0; c < g.relations().cols; ++c) {
        Json rel = Json::array();
        for (size_t r = 0; r < g.relations().rows; ++r)
            rel.push_back(int_to_json(g.relations().at(r, c)));
        rels.push_back(std::move(rel));
    }
    j["relations"] = std::move(rels);
    return j;
}

GroupPtr group_from_json(const Json& j) {
    const Json& rels = j.contains("relations") ? j["relations"] : Json::array();
    if (!rels.is_array()) fail(errc::parse_error, "relations must be an array of columns");
    size_t ngens = 0;
    if (j.contains("generators"))
        ngens = static_cast<size_t>(json_to_int(j["generators"]));
    else if (!rels.empty())
        ngens = rels.front().size();
    else
        fail(errc::parse_error, "group needs a generator count or at least one relation");
    IMat rel(ngens, rels.size());
    for (size_t c = 0; c < rels.size(); ++c) {
        const auto& col = rels[c];
        if (col.size() != ngens) fail(errc::parse_error, "relation length != generator count");
        for (size_t r = 0; r < ngens; ++r) rel.at(r, c) = json_to_int(col[r]);
    }
    return FgAbGroup::make(ngens, std::move(rel));
}

std::vector<Int> vector_from_json(const Json& j) {
    if (!j.is_array()) fail(errc::parse_error, "expected an array of integers");
    std::vector<Int> v;
    for (const auto& x : j) v.push_back(json_to_int(x));
    return v;
}

Json vector_to_json(const std::vector<Int>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(int_to_json(x));
    return out;
}

Json diagram_to_json(const DiagramSpec& spec) {
    Json j;
    j["nodes"] = Json::object();
    for (const auto& [name, g] : spec.nodes) j["nodes"][name] = group_to_json(*g);
    j["arrows"] = Json::object();
    for (const auto& [name, a] : spec.arrows)
        j["arrows"][name] = {
            {"src", a.src}, {"dst", a.dst}, {"matrix", matrix_to_json(a.hom.matrix())}};
    j["assertions"] = Json::array();
    for (const auto& assertion : spec.assertions) {
        if (const auto* c = std::get_if<DiagramSpec::CommuteAssertion>(&assertion))
            j["assertions"].push_back({{"commute", Json::array({c->left, c->right})}});
        else {
            const auto& e = std::get<DiagramSpec::ExactAssertion>(assertion);
            j["assertions"].push_back({{"exact", Json::array({e.first, e.second})}});
        }
    }
    if (spec.cup) {
        Json cup;
        cup["ch1"] = spec.cup->ch1_node;
        cup["maps"] = Json::array();
        for (const auto& m : spec.cup->maps) cup["maps"].push_back(matrix_to_json(m));
        j["cup"] = std::move(cup);
    }
    return j;
}

DiagramSpec diagram_from_json(const Json& j) {
    DiagramSpec spec;
    for (const auto& [name, g] : field(j, "nodes").items())
        spec.nodes.emplace(name, group_from_json(g));
    if (j.contains("arrows"))
        for (const auto& [name, a] : j["arrows"].items()) {
            std::string src = field(a, "src").get<std::string>();
            std::string dst = field(a, "dst").get<std::string>();
            auto si = spec.nodes.find(src);
            auto di = spec.nodes.find(dst);
            if (si == spec.nodes.end() || di == spec.nodes.end())
                fail(errc::malformed_spec, "arrow " + name + " references an unknown node");
            IMat m = matrix_from_json(field(a, "matrix"));
            spec.arrows.emplace(name,
                                DiagramSpec::Arrow{src, dst, Homo(si->second, di->second, m)});
        }
    if (j.contains("assertions"))
        for (const auto& a : j["assertions"]) {
            if (a.contains("commute")) {
                const auto& paths = a["commute"];
                if (!paths.is_array() || paths.size() != 2)
                    fail(errc::parse_error, "commute assertion needs two paths");
                DiagramSpec::CommuteAssertion c;
                for (const auto& n : paths[0]) c.left.push_back(n.get<std::string>());
                for (const auto& n : paths[1]) c.right.push_back(n.get<std::string>());
                spec.assertions.push_back(std::move(c));
            } else if (a.contains("exact")) {
                const auto& pair = a["exact"];
                if (!pair.is_array() || pair.size() != 2)
                    fail(errc::parse_error, "exact assertion needs two arrow names");
                spec.assertions.push_back(DiagramSpec::ExactAssertion{
                    pair[0].get<std::string>(), pair[1].get<std::string>()});
            } else {
                fail(errc::parse_error, "unknown assertion kind: " + a.dump());
            }
        }
    if (j.contains("cup")) {
        DiagramSpec::CupData cup;
        cup.ch1_node = field(j["cup"], "ch1").get<std::string>();
        for (const auto& m : field(j["cup"], "maps")) cup.maps.push_back(matrix_from_json(m));
        spec.cup = std::move(cup);
    }
    spec.validate();
    return spec;
}

namespace {

TriState tristate_from_json(const Json& j, const char* key) {
    if (!j.contains(key)) return TriState::unknown;
    std::string s = j.at(key).get<std::string>();
    if (s == "yes") return TriState::yes;
    if (s == "no") return TriState::no;
    if (s == "unknown") return TriState::unknown;
    fail(errc::parse_error, std::string(key) + " must be yes/no/unknown");
}

BaseField base_field_from_json(const Json& j) {
    if (!j.contains("base_field")) return BaseField::other;
    std::string s = j.at("base_field").get<std::string>();
    if (s == "alg_closed_char_ne_2") return BaseField::alg_closed_char_ne_2;
    if (s == "other") return BaseField::other;
    fail(errc::parse_error, "base_field must be alg_closed_char_ne_2 or other");
}

}  // namespace

Json surface_to_json(const SurfaceDescriptor& d) {
    Json j;
    j["type"] = "surface";
    j["name"] = d.name;
    j["c1_squared"] = int_to_json(d.c1_squared);
    j["c2"] = int_to_json(d.c2);
    j["c1_even"] = tristate_name(d.c1_even);
    j["has_rational_point"] = tristate_name(d.has_rational_point);
    j["canonical_trivial"] = tristate_name(d.canonical_trivial);
    j["h1_et_square_vanishes"] = tristate_name(d.h1_et_square_vanishes);
    j["base_field"] = base_field_name(d.base_field);
    if (d.pic)
        j["pic_rational_curve_data"] = {
            {"pic_spanned_by_rational_curves", d.pic->pic_spanned_by_rational_curves},
            {"ample_sum_of_rational_curves", d.pic->ample_sum_of_rational_curves},
            {"all_KC_ne_minus2", d.pic->all_kc_ne_minus2}};
    return j;
}

SurfaceDescriptor surface_from_json(const Json& j) {
    SurfaceDescriptor d;
    d.name = j.contains("name") ? j["name"].get<std::string>() : "surface";
    d.c1_squared = json_to_int(field(j, "c1_squared"));
    d.c2 = json_to_int(field(j, "c2"));
    d.c1_even = tristate_from_json(j, "c1_even");
    d.has_rational_point = tristate_from_json(j, "has_rational_point");
    d.canonical_trivial = tristate_from_json(j, "canonical_trivial");
    d.h1_et_square_vanishes = tristate_from_json(j, "h1_et_square_vanishes");
    d.base_field = base_field_from_json(j);
    if (j.contains("pic_rational_curve_data")) {
        const Json& p = j["pic_rational_curve_data"];
        d.pic = PicRationalCurveData{
            field(p, "pic_spanned_by_rational_curves").get<bool>(),
            field(p, "ample_sum_of_rational_curves").get<bool>(),
            field(p, "all_KC_ne_minus2").get<bool>()};
    }
    return d;
}

Json curve_to_json(const CurveDescriptor& d) {
    Json j;
    j["type"] = "curve";
    j["name"] = d.name;
    j["genus"] = d.genus;
    j["has_theta_char"] = tristate_name(d.has_theta_char);
    j["has_rational_point"] = tristate_name(d.has_rational_point);
    j["base_field"] = base_field_name(d.base_field);
    return j;
}

CurveDescriptor curve_from_json(const Json& j) {
    CurveDescriptor d;
    d.name = j.contains("name") ? j["name"].get<std::string>() : "curve";
    Int genus = json_to_int(field(j, "genus"));
    if (genus < 0) fail(errc::parse_error, "genus must be nonnegative");
    d.genus = static_cast<unsigned>(genus);
    d.has_theta_char = tristate_from_json(j, "has_theta_char");
    d.has_rational_point = tristate_from_json(j, "has_rational_point");
    d.base_field = base_field_from_json(j);
    return d;
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["name"] = v.name;
    j["outcome"] = outcome_name(v.outcome);
    j["witness"] = v.witness;
    return j;
}

Catalog catalog_from_json(const Json& j) {
    Catalog c;
    if (j.contains("surfaces"))
        for (const auto& s : j["surfaces"]) c.surfaces.push_back(surface_from_json(s));
    if (j.contains("curves"))
        for (const auto& s : j["curves"]) c.curves.push_back(curve_from_json(s));
    return c;
}

Json wu_row_to_json(const WuRow& row) {
    Json j;
    j["prime"] = row.prime;
    j["rank"] = row.rank;
    j["index"] = row.index;
    j["agrees"] = row.agrees;
    j["oracle"] = element_terms_to_json(row.oracle);
    j["closed_form"] = element_terms_to_json(row.closed_form);
    j["discrepancy"] = element_terms_to_json(row.discrepancy);
    return j;
}

Json eigen_report_to_json(const EigenReport& r) {
    Json j;
    j["rank"] = r.rank;
    j["effective_rank"] = r.effective_rank;
    j["prime"] = r.prime;
    j["convention"] = sign_convention_name(r.convention);
    j["identity"] = r.identity;
    j["residual"] = element_terms_to_json(r.residual);
    j["residual_str"] = r.residual.str();
    j["pass"] = r.pass;
    j["asserted"] = r.asserted;
    return j;
}

Json lift_verdict_to_json(const LiftVerdict& v) {
    Json j;
    j["outcome"] = lift_outcome_name(v.outcome);
    j["route"] = v.route;
    j["detail"] = v.detail;
    if (!v.witness.empty()) j["witness"] = vector_to_json(v.witness);
    return j;
}

Json diagram_report_to_json(const DiagramReport& r) {
    Json items = Json::array();
    for (const auto& item : r.items) {
        Json i;
        i["description"] = item.description;
        i["pass"] = item.pass;
        if (!item.detail.empty()) i["detail"] = item.detail;
        items.push_back(std::move(i));
    }
    Json j;
    j["assertions"] = std::move(items);
    j["all_pass"] = r.all_pass();
    return j;
}

Json projector_report_to_json(const ProjectorReport& r) {
    Json items = Json::array();
    for (const auto& item : r.items)
        items.push_back({{"description", item.description}, {"pass", item.pass}});
    Json j;
    j["checks"] = std::move(items);
    j["all_pass"] = r.all_pass();
    return j;
}

Json pipeline_report_to_json(const PipelineReport& r) {
    Json j;
    j["splits"] = r.splits;
    j["rho_injective"] = r.rho_injective;
    j["c1_even"] = tristate_name(r.c1_even);
    j["cycles"] = Json::array();
    for (const auto& c : r.cycles) {
        Json cj;
        cj["name"] = c.name;
        cj["sq2_value"] = vector_to_json(c.sq2_value);
        cj["lift"] = lift_verdict_to_json(c.lift);
        j["cycles"].push_back(std::move(cj));
    }
    if (!r.obstruction.empty()) j["obstruction"] = vector_to_json(r.obstruction);
    j["detail"] = r.detail;
    return j;
}

Json thm01_report_to_json(const Thm01Report& r) {
    Json j;
    j["impose_c1_even"] = r.impose_c1_even;
    j["impose_2c2_eq_c1sq"] = r.impose_2c2_eq_c1sq;
    j["rank"] = r.rank_residual;
    j["c1"] = element_terms_to_json(r.c1_residual);
    j["c2"] = element_terms_to_json(r.c2_residual);
    j["all_zero"] = r.all_zero;
    return j;
}

Json snf_to_json(const IMat& a, const SnfResult& snf) {
    Json j;
    j["matrix"] = matrix_to_json(a);
    j["U"] = matrix_to_json(snf.u);
    j["D"] = matrix_to_json(snf.d);
    j["V"] = matrix_to_json(snf.v);
    Json factors = Json::array();
    for (const auto& d : snf.diagonal()) factors.push_back(int_to_json(d));
    j["diagonal"] = std::move(factors);
    return j;
}

}  // namespace topcell
