#include "cliffsym/coverings.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliffsym {

namespace {

std::string abc_str(const std::array<int, 3>& abc) {
    auto s = [](int x) { return x > 0 ? "+" : "-"; };
    return std::string("(") + s(abc[0]) + "," + s(abc[1]) + "," + s(abc[2]) + ")";
}

void add_unique(std::vector<GroupClass>& set, const GroupClass& gc) {
    for (const auto& g : set)
        if (g.abc == gc.abc && g.order8_cover == gc.order8_cover) return;
    set.push_back(gc);
}

/// Realized (cover, abc) set of one side: all enumerated idempotents for the
/// simple types, both decomposition variants for the semisimple ones.
std::vector<GroupClass> realized_covers(int p, int q) {
    std::vector<GroupClass> out;
    StructureInfo info = mod8_type(p, q);
    if (info.simple) {
        AlgebraSig sig(p, q);
        for (const auto& fam : commuting_blade_sets(sig)) {
            int k = static_cast<int>(fam.size());
            for (int bits = 0; bits < (1 << k); ++bits) {
                SpinorRep rep = build_spinor_rep(sig, spec_from_family(fam, bits));
                add_unique(out, classify_rep(rep).group);
            }
        }
    } else {
        SemisimpleReport rep = classify_semisimple(p, q);
        for (const auto& v : rep.variants)
            for (const auto& r : v.reports) add_unique(out, r.group);
    }
    return out;
}

MonoMat kron(const MonoMat& a, const MonoMat& b, const KTable& kt) {
    MonoMat r;
    r.side = a.side * b.side;
    r.col.resize(r.side);
    for (int ja = 0; ja < a.side; ++ja)
        for (int jb = 0; jb < b.side; ++jb) {
            const auto& ea = a.col[ja];
            const auto& eb = b.col[jb];
            r.col[ja * b.side + jb] = {static_cast<std::uint8_t>(ea.row * b.side + eb.row),
                                       kt.mul(ea.v, eb.v)};
        }
    return r;
}

}  // namespace

DabrowskiRow dabrowski_row(const std::array<int, 3>& abc) {
    for (int x : abc)
        if (x != 1 && x != -1) throw std::invalid_argument("dabrowski_row: signs must be +-1");
    int prod = abc[0] * abc[1] * abc[2];
    DabrowskiRow row;
    row.pt_commutes = prod == 1;
    if (row.pt_commutes)
        row.cover = (abc[0] == 1 && abc[1] == 1 && abc[2] == 1) ? "Z2*Z2*Z2" : "Z2*Z4";
    else
        row.cover = (abc[0] == -1 && abc[1] == -1 && abc[2] == -1) ? "Q4" : "D4";
    return row;
}

PinDescriptor pin_descriptor(int p, int q, const ClassificationReport& report) {
    PinDescriptor d;
    d.abc = report.group.abc;
    DabrowskiRow row = dabrowski_row(d.abc);
    if (row.cover != report.group.order8_cover)
        throw std::logic_error("pin_descriptor: computed cover contradicts the covering table");
    d.cover = row.cover;
    d.cliffordian = !row.pt_commutes;
    d.name = "Pin^" + abc_str(d.abc) + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    d.semidirect = "(Spin_0(" + std::to_string(p) + "," + std::to_string(q) + ") odot " + d.cover +
                   ") / Z2";
    return d;
}

OppositeComparison opposite_comparison(int p, int q) {
    OppositeComparison cmp;
    cmp.type_pq = mod8_type(p, q).h_type;
    cmp.type_qp = mod8_type(q, p).h_type;
    int d = cmp.type_pq;
    cmp.isomorphic = (d == 0 || d == 4);
    cmp.covers_pq = realized_covers(p, q);
    cmp.covers_qp = realized_covers(q, p);
    return cmp;
}

ComplexRep build_complex_rep(int n) {
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("build_complex_rep: n must be even positive");
    ComplexRep rep;
    rep.n = n;
    rep.m = n / 2;
    rep.side = 1 << rep.m;
    rep.ktab.dim = 2;
    rep.ktab.tab[0 * 2 + 0] = {1, 0};
    rep.ktab.tab[0 * 2 + 1] = {1, 1};
    rep.ktab.tab[1 * 2 + 0] = {1, 1};
    rep.ktab.tab[1 * 2 + 1] = {-1, 0};  // i^2 = -1

    MonoMat s1, s2, s3;
    s1.side = s2.side = s3.side = 2;
    s1.col = {{1, {1, 0}}, {0, {1, 0}}};    // [[0,1],[1,0]]
    s2.col = {{1, {1, 1}}, {0, {-1, 1}}};   // [[0,-i],[i,0]]
    s3.col = {{0, {1, 0}}, {1, {-1, 0}}};   // [[1,0],[0,-1]]
    MonoMat id2 = MonoMat::identity(2);

    auto build = [&](int pos, const MonoMat& mid) {
        MonoMat acc = MonoMat::identity(1);
        acc.side = 1;
        acc.col = {{0, {1, 0}}};
        for (int t = 0; t < rep.m; ++t) {
            const MonoMat& factor = t < pos ? s3 : (t == pos ? mid : id2);
            acc = kron(acc, factor, rep.ktab);
        }
        return acc;
    };
    // symmetric generators first, skewsymmetric second, the split the
    // complex classification expects
    std::vector<MonoMat> sym, skew;
    for (int kpos = 0; kpos < rep.m; ++kpos) {
        sym.push_back(build(kpos, s1));
        skew.push_back(build(kpos, s2));
    }
    rep.gens.insert(rep.gens.end(), sym.begin(), sym.end());
    rep.gens.insert(rep.gens.end(), skew.begin(), skew.end());

    for (int i = 0; i < n; ++i) {
        if (mono_square_sign(rep.gens[i], rep.ktab) != 1)
            throw std::logic_error("build_complex_rep: generator square not +I");
        for (int j = i + 1; j < n; ++j)
            if (mono_mul(rep.gens[i], rep.gens[j], rep.ktab) !=
                -mono_mul(rep.gens[j], rep.gens[i], rep.ktab))
                throw std::logic_error("build_complex_rep: generators fail to anticommute");
    }
    return rep;
}

ComplexAutResult complex_aut(int n) {
    ComplexRep rep = build_complex_rep(n);
    int m = rep.m;
    ComplexAutResult res;
    res.n = n;
    res.m = m;

    auto prod = [&](int from, int to) {
        MonoMat acc = MonoMat::identity(rep.side);
        for (int i = from; i < to; ++i) acc = mono_mul(acc, rep.gens[i], rep.ktab);
        return acc;
    };
    AutMatrices& am = res.aut;
    am.complex_convention = true;
    am.W = prod(0, n);
    if (m % 2 == 1) {
        am.E = prod(0, m);       // product of the m symmetric generators
        am.C = prod(m, n);       // product of the m skewsymmetric generators
        am.e_form = AutForm::ProdSym;
        am.c_form = AutForm::ProdSkew;
    } else {
        am.E = prod(m, n);
        am.C = prod(0, m);
        am.e_form = AutForm::ProdSkew;
        am.c_form = AutForm::ProdSym;
    }

    // reversion fixes every generator: E commutes with the symmetric half and
    // anticommutes with the skew half; conjugation negates them: C the other
    // way around
    for (int i = 0; i < n; ++i) {
        bool is_sym = i < m;
        MonoMat EM = mono_mul(am.E, rep.gens[i], rep.ktab);
        MonoMat ME = mono_mul(rep.gens[i], am.E, rep.ktab);
        if ((is_sym && EM != ME) || (!is_sym && EM != -ME))
            throw std::logic_error("complex_aut: E fails the permutation conditions");
        MonoMat CM = mono_mul(am.C, rep.gens[i], rep.ktab);
        MonoMat MC = mono_mul(rep.gens[i], am.C, rep.ktab);
        if ((is_sym && CM != -MC) || (!is_sym && CM != MC))
            throw std::logic_error("complex_aut: C fails the permutation conditions");
    }

    int wsq = mono_square_sign(am.W, rep.ktab);
    if (wsq != (m % 2 == 0 ? 1 : -1)) throw std::logic_error("complex_aut: W^2 parity wrong");
    if (!mono_square_sign(am.E, rep.ktab) || !mono_square_sign(am.C, rep.ktab))
        throw std::logic_error("complex_aut: square not +-I");

    MonoMat EC = mono_mul(am.E, am.C, rep.ktab);
    MonoMat CE = mono_mul(am.C, am.E, rep.ktab);
    if (EC == CE) am.eps = 1;
    else if (EC == -CE) am.eps = -1;
    else throw std::logic_error("complex_aut: E and C neither commute nor anticommute");
    if (am.eps != (m % 2 == 0 ? 1 : -1))
        throw std::logic_error("complex_aut: commutation disagrees with parity of m");

    // over C every element scales freely, so the signature is fixed by the
    // commutation class alone
    am.a = am.b = am.c = am.eps;
    res.group.abc = {am.a, am.b, am.c};
    res.group.abelian = am.eps == 1;
    if (am.eps == 1) {
        res.group.order4 = "Z2*Z2";
        res.group.order8_cover = "Z2*Z2*Z2";
    } else {
        res.group.order4 = "Q4/Z2";
        res.group.order8_cover = "Q4";
    }
    return res;
}

ComplexPinDescriptor complex_pin(int n) {
    ComplexAutResult aut = complex_aut(n);
    ComplexPinDescriptor d;
    d.n = n;
    d.abc = aut.group.abc;
    d.cover = aut.group.order8_cover;
    d.cliffordian = !aut.group.abelian;
    d.name = "Pin^" + abc_str(d.abc) + "(" + std::to_string(n) + ",C)";
    d.semidirect = "(Spin_0(" + std::to_string(n) + ",C) odot " + d.cover + ") / Z2";
    return d;
}

}  // namespace cliffsym
