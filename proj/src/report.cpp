#include "cliffsym/report.hpp"

#include <sstream>

#include "cliffsym/coverings.hpp"

namespace cliffsym {

std::string abc_to_string(const std::array<int, 3>& abc) {
    auto s = [](int x) { return x > 0 ? "+" : "-"; };
    return std::string("(") + s(abc[0]) + "," + s(abc[1]) + "," + s(abc[2]) + ")";
}

std::string kelem_to_string(const std::vector<Scalar>& coeffs,
                            const std::vector<BladeMask>& k_labels, const AlgebraSig& sig) {
    Multivector v(sig);
    for (size_t t = 0; t < coeffs.size(); ++t) v.add_term(k_labels[t], coeffs[t]);
    return v.to_string();
}

std::vector<std::vector<std::string>> matrix_to_strings(const KMatrix& m,
                                                        const std::vector<BladeMask>& k_labels,
                                                        const AlgebraSig& sig) {
    std::vector<std::vector<std::string>> out(m.side, std::vector<std::string>(m.side));
    for (int i = 0; i < m.side; ++i)
        for (int j = 0; j < m.side; ++j) {
            std::vector<Scalar> coeffs(m.dimk);
            for (int t = 0; t < m.dimk; ++t) coeffs[t] = m.at(i, j, t);
            out[i][j] = kelem_to_string(coeffs, k_labels, sig);
        }
    return out;
}

std::vector<std::vector<std::string>> matrix_to_strings(const MonoMat& m,
                                                        const std::vector<BladeMask>& k_labels,
                                                        const AlgebraSig& sig) {
    return matrix_to_strings(kmatrix_from_mono(m, static_cast<int>(k_labels.size())), k_labels, sig);
}

std::string matrix_to_text(const std::vector<std::vector<std::string>>& rows) {
    size_t width = 1;
    for (const auto& r : rows)
        for (const auto& e : r) width = std::max(width, e.size());
    std::ostringstream os;
    for (const auto& r : rows) {
        os << "  [";
        for (size_t j = 0; j < r.size(); ++j) {
            os << (j ? "  " : " ");
            os << std::string(width - r[j].size(), ' ') << r[j];
        }
        os << " ]\n";
    }
    return os.str();
}

Json spec_to_json(const IdempotentSpec& spec) {
    std::string blades, signs;
    for (size_t i = 0; i < spec.blades.size(); ++i) {
        if (i) { blades += ","; signs += ","; }
        blades += blade_name(spec.blades[i]);
        signs += spec.signs[i] > 0 ? "+" : "-";
    }
    return Json{{"blades", blades}, {"signs", signs}};
}

Json rep_dump_json(const SpinorRep& rep) {
    Json j;
    j["p"] = rep.sig.p;
    j["q"] = rep.sig.q;
    j["idempotent"] = rep.f.to_string();
    Json kb = Json::array();
    for (BladeMask m : rep.k_labels) kb.push_back(blade_name(m));
    j["k_basis"] = kb;
    Json gens = Json::array();
    for (const auto& g : rep.gens) gens.push_back(matrix_to_strings(g, rep.k_labels, rep.sig));
    j["generators"] = gens;
    return j;
}

namespace {

Json group_to_json(const GroupClass& g) {
    return Json{{"cover", g.order8_cover}, {"abc", abc_to_string(g.abc)}};
}

}  // namespace

Json classification_to_json(const ClassificationReport& r, const SpinorRep& rep) {
    Json j;
    j["p"] = r.sig.p;
    j["q"] = r.sig.q;
    j["idempotent"] = r.idempotent;
    j["type"] = r.h_type;
    j["ring"] = ring_name(r.ring);
    j["abc"] = abc_to_string(r.group.abc);
    j["order4_group"] = r.group.order4;
    j["order8_cover"] = r.group.order8_cover;
    j["abelian"] = r.group.abelian;
    j["cliffordian"] = !r.group.abelian;
    j["W"] = matrix_to_strings(r.aut.W, rep.k_labels, rep.sig);
    j["E"] = matrix_to_strings(r.aut.E, rep.k_labels, rep.sig);
    j["C"] = matrix_to_strings(r.aut.C, rep.k_labels, rep.sig);
    Json conf;
    conf["pass"] = r.conformance.pass;
    conf["case"] = r.conformance.case_label;
    Json adm = Json::array();
    for (const auto& g : r.conformance.admissible) adm.push_back(group_to_json(g));
    conf["admissible"] = adm;
    j["conformance"] = conf;
    j["pin"] = pin_descriptor_to_json(pin_descriptor(r.sig.p, r.sig.q, r));
    if (r.aut.complex_convention) j["abc_convention"] = "complex-normalized";
    return j;
}

Json semisimple_to_json(const SemisimpleReport& r) {
    Json j;
    j["p"] = r.sig.p;
    j["q"] = r.sig.q;
    j["type"] = r.h_type;
    j["ring"] = ring_name(r.ring);
    j["simple"] = false;
    Json variants = Json::array();
    for (const auto& v : r.variants) {
        Json vj;
        vj["variant"] = std::string(1, v.name);
        vj["summand_p"] = v.summand.p;
        vj["summand_q"] = v.summand.q;
        Json reports = Json::array();
        for (const auto& rep : v.reports) {
            Json rj;
            rj["idempotent"] = rep.idempotent;
            rj["abc"] = abc_to_string(rep.group.abc);
            rj["order8_cover"] = rep.group.order8_cover;
            rj["conformance_pass"] = rep.conformance.pass;
            reports.push_back(rj);
        }
        vj["reports"] = reports;
        variants.push_back(vj);
    }
    j["variants"] = variants;
    Json adm = Json::array();
    for (const auto& g : r.admissible) adm.push_back(group_to_json(g));
    j["admissible"] = adm;
    j["pass"] = r.pass;
    return j;
}

Json pin_descriptor_to_json(const PinDescriptor& d) {
    return Json{{"name", d.name},
                {"abc", abc_to_string(d.abc)},
                {"cover", d.cover},
                {"cliffordian", d.cliffordian},
                {"semidirect", d.semidirect}};
}

Json complex_aut_to_json(const ComplexAutResult& r) {
    return Json{{"n", r.n},
                {"m", r.m},
                {"group", r.group.order4},
                {"cover", r.group.order8_cover},
                {"abc", abc_to_string(r.group.abc)},
                {"abelian", r.group.abelian},
                {"abc_convention", "complex-normalized"}};
}

Json complex_pin_to_json(const ComplexPinDescriptor& d) {
    return Json{{"name", d.name},
                {"abc", abc_to_string(d.abc)},
                {"cover", d.cover},
                {"cliffordian", d.cliffordian},
                {"semidirect", d.semidirect}};
}

Json opposite_to_json(const OppositeComparison& c) {
    Json j;
    j["type_pq"] = c.type_pq;
    j["type_qp"] = c.type_qp;
    j["relation"] = c.isomorphic ? "isomorphic" : "distinct";
    Json a = Json::array(), b = Json::array();
    for (const auto& g : c.covers_pq) a.push_back(group_to_json(g));
    for (const auto& g : c.covers_qp) b.push_back(group_to_json(g));
    j["covers_pq"] = a;
    j["covers_qp"] = b;
    return j;
}

Json clock_to_json(const ClockTable& t) {
    Json j;
    j["kind"] = t.kind;
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json rj;
        rj["hour"] = r.hour;
        rj[t.kind == "real" ? "pq_type" : "n_mod_2"] = r.pq_type;
        rj["ring"] = r.ring;
        Json sigs = Json::array();
        for (const auto& s : r.signatures) sigs.push_back(abc_to_string(s));
        rj["signatures"] = sigs;
        rows.push_back(rj);
    }
    j["rows"] = rows;
    return j;
}

Json chevalley_to_json(const AlgebraSig& a, const AlgebraSig& b, const ChevalleyCheck& chk) {
    Json j;
    j["a"] = {{"p", a.p}, {"q", a.q}};
    j["b"] = {{"p", b.p}, {"q", b.q}};
    j["verified"] = chk.ok;
    j["dim_log2"] = chk.dim_log2;
    j["class_a"] = bw_class_real(a.p, a.q).h;
    j["class_b"] = bw_class_real(b.p, b.q).h;
    j["class_sum"] = bw_class_real(a.p + b.p, a.q + b.q).h;
    if (!chk.ok) j["detail"] = chk.detail;
    return j;
}

}  // namespace cliffsym
