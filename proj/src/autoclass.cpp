#include "cliffsym/autoclass.hpp"

#include <stdexcept>
#include <tuple>

namespace cliffsym {

namespace {

GroupClass group_from_signs(int a, int b, int c) {
    GroupClass gc;
    gc.abc = {a, b, c};
    int eps = a * b * c;
    gc.abelian = eps == 1;
    if (gc.abelian) {
        if (a == 1 && b == 1 && c == 1) {
            gc.order4 = "Z2*Z2";
            gc.order8_cover = "Z2*Z2*Z2";
        } else {
            gc.order4 = "Z4";
            gc.order8_cover = "Z2*Z4";
        }
    } else {
        if (a == -1 && b == -1 && c == -1) {
            gc.order4 = "Q4/Z2";
            gc.order8_cover = "Q4";
        } else {
            gc.order4 = "D4/Z2";
            gc.order8_cover = "D4";
        }
    }
    return gc;
}

MonoMat prod_over(const SpinorRep& rep, const std::vector<int>& idxs) {
    MonoMat acc = MonoMat::identity(rep.side);
    for (int i : idxs) acc = mono_mul(acc, rep.gens[i], rep.ktab);
    return acc;
}

bool commutes_with(const MonoMat& A, const MonoMat& M, const KTable& kt) {
    return mono_mul(A, M, kt) == mono_mul(M, A, kt);
}

bool anticommutes_with(const MonoMat& A, const MonoMat& M, const KTable& kt) {
    return mono_mul(A, M, kt) == -mono_mul(M, A, kt);
}

/// (com1) when flip = false: commute with the symmetric part, anticommute
/// with the skewsymmetric part. (com2) when flip = true.
bool valid_candidate(const MonoMat& A, const SpinorRep& rep, const SymmetrySplit& split, bool flip) {
    for (int i : split.sym)
        if (!(flip ? anticommutes_with(A, rep.gens[i], rep.ktab)
                   : commutes_with(A, rep.gens[i], rep.ktab)))
            return false;
    for (int i : split.skew)
        if (!(flip ? commutes_with(A, rep.gens[i], rep.ktab)
                   : anticommutes_with(A, rep.gens[i], rep.ktab)))
            return false;
    return true;
}

struct Candidate {
    MonoMat m;
    AutForm form;
};

std::pair<MonoMat, AutForm> unique_candidate(const std::vector<Candidate>& cands,
                                             const SpinorRep& rep, const SymmetrySplit& split,
                                             bool flip, const char* which) {
    std::vector<const Candidate*> valid;
    for (const auto& c : cands) {
        if (!valid_candidate(c.m, rep, split, flip)) continue;
        bool dup = false;
        for (const auto* v : valid)
            if (mono_proportional(v->m, c.m)) { dup = true; break; }
        if (!dup) valid.push_back(&c);
    }
    if (valid.empty())
        throw std::logic_error(std::string(which) + ": no candidate satisfies the permutation conditions");
    if (valid.size() > 1)
        throw std::logic_error(std::string(which) + ": ambiguous non-proportional candidates");
    return {valid.front()->m, valid.front()->form};
}

AutMatrices construct_wec_even(const SpinorRep& rep, const SymmetrySplit& split) {
    AutMatrices am;
    std::vector<int> all(rep.sig.n());
    for (int i = 0; i < rep.sig.n(); ++i) all[i] = i;
    am.W = prod_over(rep, all);

    MonoMat S = prod_over(rep, split.sym);
    MonoMat K = prod_over(rep, split.skew);
    MonoMat I = MonoMat::identity(rep.side);
    std::vector<Candidate> cands{
        {I, AutForm::Identity},
        {S, AutForm::ProdSym},
        {K, AutForm::ProdSkew},
        {am.W, AutForm::W},
        {mono_mul(am.W, S, rep.ktab), AutForm::WProdSym},
        {mono_mul(am.W, K, rep.ktab), AutForm::WProdSkew},
    };
    std::tie(am.E, am.e_form) = unique_candidate(cands, rep, split, false, "construct_wec: E");
    std::tie(am.C, am.c_form) = unique_candidate(cands, rep, split, true, "construct_wec: C");

    // the validated C candidate fixes the ray only up to sign; normalize to
    // C = E W exactly
    MonoMat EW = mono_mul(am.E, am.W, rep.ktab);
    MonoMat WE = mono_mul(am.W, am.E, rep.ktab);
    if (!mono_proportional(am.C, EW) && !mono_proportional(am.C, WE))
        throw std::logic_error("construct_wec: C not proportional to EW or WE");
    am.C = EW;

    am.a = mono_square_sign(am.W, rep.ktab);
    am.b = mono_square_sign(am.E, rep.ktab);
    am.c = mono_square_sign(am.C, rep.ktab);
    if (!am.a || !am.b || !am.c) throw std::logic_error("construct_wec: square not +-I");

    MonoMat EC = mono_mul(am.E, am.C, rep.ktab);
    MonoMat CE = mono_mul(am.C, am.E, rep.ktab);
    if (EC == CE) am.eps = 1;
    else if (EC == -CE) am.eps = -1;
    else throw std::logic_error("construct_wec: E and C neither commute nor anticommute");
    if (am.eps != am.a * am.b * am.c)
        throw std::logic_error("construct_wec: commutation sign disagrees with abc product");
    return am;
}

/// Types 3/7: classify through the complex algebra C_{n-1}. A gamma basis of
/// m symmetric and m skewsymmetric generator matrices is selected and the
/// E/C products of the complex classification theorem are validated against
/// it; abc is reported in the complex scaling convention.
AutMatrices construct_wec_complex_ring(const SpinorRep& rep, const SymmetrySplit& split) {
    int n = rep.sig.n();
    int m = (n - 1) / 2;
    if (static_cast<int>(split.sym.size()) < m || static_cast<int>(split.skew.size()) < m)
        throw std::logic_error("complex-ring route: cannot select m symmetric and m skew generators");
    std::vector<int> gsym(split.sym.begin(), split.sym.begin() + m);
    std::vector<int> gskew(split.skew.begin(), split.skew.begin() + m);

    SymmetrySplit gamma_split;
    gamma_split.sym = gsym;
    gamma_split.skew = gskew;

    AutMatrices am;
    am.complex_convention = true;
    std::vector<int> gammas;
    gammas.insert(gammas.end(), gsym.begin(), gsym.end());
    gammas.insert(gammas.end(), gskew.begin(), gskew.end());
    am.W = prod_over(rep, gammas);

    if (m % 2 == 1) {
        am.E = prod_over(rep, gsym);
        am.C = prod_over(rep, gskew);
        am.e_form = AutForm::ProdSym;
        am.c_form = AutForm::ProdSkew;
    } else {
        am.E = prod_over(rep, gskew);
        am.C = prod_over(rep, gsym);
        am.e_form = AutForm::ProdSkew;
        am.c_form = AutForm::ProdSym;
    }
    if (!valid_candidate(am.E, rep, gamma_split, false))
        throw std::logic_error("complex-ring route: E fails the gamma permutation conditions");
    if (!valid_candidate(am.C, rep, gamma_split, true))
        throw std::logic_error("complex-ring route: C fails the gamma permutation conditions");
    if (!mono_square_sign(am.E, rep.ktab) || !mono_square_sign(am.C, rep.ktab))
        throw std::logic_error("complex-ring route: square not +-I");

    MonoMat EC = mono_mul(am.E, am.C, rep.ktab);
    MonoMat CE = mono_mul(am.C, am.E, rep.ktab);
    if (EC == CE) am.eps = 1;
    else if (EC == -CE) am.eps = -1;
    else throw std::logic_error("complex-ring route: E and C neither commute nor anticommute");
    if (am.eps != (m % 2 == 0 ? 1 : -1))
        throw std::logic_error("complex-ring route: commutation disagrees with parity of m");

    // over C the elements scale by any eta; the convention fixes all squares
    // to + for the commuting case and - for the anticommuting case
    am.a = am.b = am.c = am.eps;
    return am;
}

}  // namespace

std::string aut_form_name(AutForm f) {
    switch (f) {
        case AutForm::ProdSym: return "prod_sym";
        case AutForm::ProdSkew: return "prod_skew";
        case AutForm::Identity: return "identity";
        case AutForm::WProdSym: return "w*prod_sym";
        case AutForm::WProdSkew: return "w*prod_skew";
        case AutForm::W: return "w";
    }
    throw std::logic_error("aut_form_name");
}

KMatrix structural_transpose(const KMatrix& m) { return kmatrix_transpose(m); }

SymmetrySplit symmetry_split(const SpinorRep& rep) {
    SymmetrySplit s;
    for (int i = 0; i < rep.sig.n(); ++i) {
        const MonoMat& M = rep.gens[i];
        MonoMat MT = mono_transpose(M);
        int sq = mono_square_sign(M, rep.ktab);
        if (MT == M) {
            s.sym.push_back(i);
            (sq == 1 ? s.h : s.g) += 1;
        } else if (MT == -M) {
            s.skew.push_back(i);
            (sq == 1 ? s.l : s.t) += 1;
        } else {
            throw std::logic_error("symmetry_split: generator neither symmetric nor skewsymmetric");
        }
    }
    return s;
}

AutMatrices construct_wec(const SpinorRep& rep, const SymmetrySplit& split) {
    StructureInfo info = mod8_type(rep.sig.p, rep.sig.q);
    if (!info.simple)
        throw std::invalid_argument("construct_wec: semisimple type; classify via decomposition");
    if (info.ring == RingTag::C) return construct_wec_complex_ring(rep, split);
    return construct_wec_even(rep, split);
}

std::array<int, 3> signature_abc(const AutMatrices& am) { return {am.a, am.b, am.c}; }

GroupClass classify_group(const AutMatrices& am, const KTable& ktab) {
    // closure of {+-I, +-W, +-E, +-C} under matrix products
    const MonoMat I = MonoMat::identity(am.W.side);
    const MonoMat* octet[4] = {&I, &am.W, &am.E, &am.C};
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            MonoMat p = mono_mul(*octet[x], *octet[y], ktab);
            bool hit = false;
            for (int z = 0; z < 4 && !hit; ++z) hit = mono_proportional(p, *octet[z]);
            if (!hit) throw std::logic_error("classify_group: octet not closed under multiplication");
        }
    return group_from_signs(am.a, am.b, am.c);
}

AutTable aut_multiplication_table(const AutMatrices& am, const KTable&) {
    // abstract products with c := w*e; matches the matrix table whenever the
    // four matrices are pairwise non-proportional
    AutTable t;
    auto set = [&](int x, int y, int sign, int idx) { t.cell[x][y] = {sign, idx}; };
    int a = am.a, b = am.b, c = am.c, eps = am.eps;
    for (int y = 0; y < 4; ++y) set(0, y, 1, y);
    for (int x = 1; x < 4; ++x) set(x, 0, 1, x);
    set(1, 1, a, 0);
    set(2, 2, b, 0);
    set(3, 3, c, 0);
    set(1, 2, 1, 3);        // W*E = C
    set(2, 1, eps, 3);      // E*W = eps C
    set(1, 3, a, 2);        // W*C = a E
    set(3, 1, eps * a, 2);  // C*W = eps a E
    set(2, 3, eps * b, 1);  // E*C = eps b W
    set(3, 2, b, 1);        // C*E = b W
    return t;
}

Conformance theorem_conformance(int p, int q, const GroupClass& gc, const SymmetrySplit& split) {
    StructureInfo info = mod8_type(p, q);
    Conformance conf;
    const int n = p + q;
    auto in0145 = [](int x) { int r = ((x % 8) + 8) % 8; return r == 0 || r == 1 || r == 4 || r == 5; };

    int a = 0, b = 0, c = 0;
    switch (info.h_type) {
        case 0:
        case 2: {
            a = info.h_type == 0 ? 1 : -1;
            if (q % 2 == 0) {
                b = (q % 4 == 0 || q % 4 == 3) ? 1 : -1;
                c = (p % 4 == 0 || p % 4 == 1) ? 1 : -1;
                conf.case_label = "type " + std::to_string(info.h_type) + ", E=prod_skew (p=" +
                                  std::to_string(p % 4) + ", q=" + std::to_string(q % 4) + " mod 4)";
            } else {
                b = (p % 4 == 0 || p % 4 == 1) ? 1 : -1;
                c = (q % 4 == 0 || q % 4 == 3) ? 1 : -1;
                conf.case_label = "type " + std::to_string(info.h_type) + ", E=prod_sym (p=" +
                                  std::to_string(p % 4) + ", q=" + std::to_string(q % 4) + " mod 4)";
            }
            break;
        }
        case 4:
        case 6: {
            a = info.h_type == 4 ? 1 : -1;
            int k = split.k();
            if (k % 2 == 0) {
                b = in0145(split.l - split.t) ? 1 : -1;
                c = in0145(split.h - split.g) ? 1 : -1;
                conf.case_label = "type " + std::to_string(info.h_type) +
                                  (k == 0 ? ", degenerate k=0" : ", k even") + " (l-t=" +
                                  std::to_string(split.l - split.t) + ", h-g=" +
                                  std::to_string(split.h - split.g) + " mod 8)";
            } else {
                b = in0145(split.h - split.g) ? 1 : -1;
                c = in0145(split.l - split.t) ? 1 : -1;
                conf.case_label = "type " + std::to_string(info.h_type) +
                                  (k == n ? ", degenerate k=p+q" : ", k odd") + " (h-g=" +
                                  std::to_string(split.h - split.g) + ", l-t=" +
                                  std::to_string(split.l - split.t) + " mod 8)";
            }
            break;
        }
        case 3:
        case 7: {
            if (p % 2 == 0) {
                a = b = c = 1;
                conf.case_label = "type " + std::to_string(info.h_type) +
                                  ", complexification m even (p even, q odd)";
            } else {
                a = b = c = -1;
                conf.case_label = "type " + std::to_string(info.h_type) +
                                  ", complexification m odd (p odd, q even)";
            }
            break;
        }
        default:
            throw std::invalid_argument("theorem_conformance: semisimple type; use classify_semisimple");
    }
    GroupClass want = group_from_signs(a, b, c);
    conf.admissible.push_back(want);
    conf.pass = gc.abc == want.abc && gc.order8_cover == want.order8_cover;
    return conf;
}

ClassificationReport classify_rep(const SpinorRep& rep) {
    ClassificationReport r{rep.sig, rep.spec, rep.f.to_string()};
    StructureInfo info = mod8_type(rep.sig.p, rep.sig.q);
    r.h_type = info.h_type;
    r.ring = info.ring;
    r.split = symmetry_split(rep);
    r.aut = construct_wec(rep, r.split);
    r.group = classify_group(r.aut, rep.ktab);
    r.conformance = theorem_conformance(rep.sig.p, rep.sig.q, r.group, r.split);
    return r;
}

std::vector<GroupClass> semisimple_admissible(int p, int q) {
    std::vector<GroupClass> out;
    auto add = [&](int a, int b, int c) { out.push_back(group_from_signs(a, b, c)); };
    if (q == 0) {
        add(1, 1, 1);
        add(1, -1, -1);
        add(1, -1, 1);
        add(1, 1, -1);
    } else if (p == 0) {
        add(-1, -1, 1);
        add(-1, 1, -1);
        add(-1, -1, -1);
        add(-1, 1, 1);
    } else {
        for (int a : {1, -1})
            for (int b : {1, -1})
                for (int c : {1, -1}) add(a, b, c);
    }
    return out;
}

SemisimpleReport classify_semisimple(int p, int q) {
    StructureInfo info = mod8_type(p, q);
    if (info.simple) throw std::invalid_argument("classify_semisimple: type is simple");
    SemisimpleReport rep;
    rep.sig = AlgebraSig(p, q);
    rep.h_type = info.h_type;
    rep.ring = info.ring;
    rep.admissible = semisimple_admissible(p, q);

    Decomposition d = semisimple_decomposition(p, q);
    auto run_variant = [&](char name, const AlgebraSig& summand) {
        SemisimpleReport::Variant v{name, summand, {}};
        for (const auto& fam : commuting_blade_sets(summand)) {
            int k = static_cast<int>(fam.size());
            for (int bits = 0; bits < (1 << k); ++bits) {
                SpinorRep srep = build_spinor_rep(summand, spec_from_family(fam, bits));
                v.reports.push_back(classify_rep(srep));
            }
        }
        rep.variants.push_back(std::move(v));
    };
    if (d.variant_a) run_variant('A', *d.variant_a);
    if (d.variant_b) run_variant('B', *d.variant_b);

    rep.pass = !rep.variants.empty();
    for (const auto& v : rep.variants)
        for (const auto& r : v.reports) {
            bool ok = false;
            for (const auto& adm : rep.admissible)
                if (adm.abc == r.group.abc && adm.order8_cover == r.group.order8_cover) {
                    ok = true;
                    break;
                }
            if (!ok || !r.conformance.pass) rep.pass = false;
        }
    return rep;
}

}  // namespace cliffsym
