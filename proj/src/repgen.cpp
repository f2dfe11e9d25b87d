#include "cliffsym/repgen.hpp"

#include "cliffsym/basis_norm.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cliffsym {

namespace {

std::vector<BladeMask> plus_square_blades(const AlgebraSig& sig) {
    std::vector<BladeMask> out;
    BladeMask lim = BladeMask(1) << sig.n();
    for (BladeMask m = 1; m < lim; ++m)
        if (blade_square_sign(m, sig) == 1) out.push_back(m);
    std::sort(out.begin(), out.end(), BladeLess{});
    return out;
}

void require_simple_real(const AlgebraSig& sig, const char* who) {
    if (sig.complex_field) throw std::invalid_argument(std::string(who) + ": complex algebras not supported here");
    StructureInfo info = mod8_type(sig.p, sig.q);
    if (!info.simple)
        throw std::invalid_argument(std::string(who) + ": Cl(" + std::to_string(sig.p) + "," +
                                    std::to_string(sig.q) + ") is semisimple; recurse via decomposition");
}

struct FamilyEnum {
    const AlgebraSig& sig;
    int k;
    std::vector<BladeMask> blades;
    std::vector<std::vector<bool>> comm;
    std::vector<bool> is_plus_square;
    std::vector<std::vector<BladeMask>> out;

    explicit FamilyEnum(const AlgebraSig& s) : sig(s) {
        k = idem_factor_count(sig.p, sig.q);
        blades = plus_square_blades(sig);
        BladeMask lim = BladeMask(1) << sig.n();
        is_plus_square.assign(lim, false);
        for (BladeMask b : blades) is_plus_square[b] = true;
        comm.assign(blades.size(), std::vector<bool>(blades.size(), false));
        for (size_t i = 0; i < blades.size(); ++i)
            for (size_t j = 0; j < blades.size(); ++j)
                comm[i][j] = blades_commute(blades[i], blades[j]);
    }

    void run() {
        if (k == 0) {
            out.push_back({});
            return;
        }
        std::vector<size_t> gens;
        std::vector<BladeMask> span{0};
        rec(gens, span, 0);
    }

    void rec(std::vector<size_t>& gens, std::vector<BladeMask>& span, size_t start) {
        if (static_cast<int>(gens.size()) == k) {
            std::vector<BladeMask> fam;
            for (size_t g : gens) fam.push_back(blades[g]);
            out.push_back(fam);
            return;
        }
        for (size_t i = start; i < blades.size(); ++i) {
            BladeMask b = blades[i];
            if (std::find(span.begin(), span.end(), b) != span.end()) continue;
            bool ok = true;
            for (size_t g : gens)
                if (!comm[g][i]) { ok = false; break; }
            if (!ok) continue;
            // every new subgroup element must itself be a commuting +1-square
            // blade, and b must be the (grade, mask)-minimum of the new coset
            // (canonical greedy basis, one generating set per subgroup)
            std::vector<BladeMask> fresh;
            fresh.reserve(span.size());
            for (BladeMask x : span) fresh.push_back(x ^ b);
            for (BladeMask x : fresh) {
                if (!is_plus_square[x]) { ok = false; break; }
                if (x != b && blade_less(x, b)) { ok = false; break; }
            }
            if (!ok) continue;
            for (BladeMask x : fresh) {
                for (BladeMask y : span)
                    if (y != 0 && !blades_commute(x, y)) { ok = false; break; }
                if (!ok) break;
            }
            if (ok)
                for (size_t a = 0; a + 1 < fresh.size() && ok; ++a)
                    for (size_t c = a + 1; c < fresh.size(); ++c)
                        if (!blades_commute(fresh[a], fresh[c])) { ok = false; break; }
            if (!ok) continue;
            gens.push_back(i);
            size_t old = span.size();
            span.insert(span.end(), fresh.begin(), fresh.end());
            rec(gens, span, i + 1);
            span.resize(old);
            gens.pop_back();
        }
    }
};

void validate_spec(const IdempotentSpec& spec, const AlgebraSig& sig) {
    require_simple_real(sig, "idempotent spec");
    int k = idem_factor_count(sig.p, sig.q);
    if (static_cast<int>(spec.blades.size()) != k)
        throw std::invalid_argument("idempotent spec: expected " + std::to_string(k) +
                                    " commuting blades for Cl(" + std::to_string(sig.p) + "," +
                                    std::to_string(sig.q) + "), got " +
                                    std::to_string(spec.blades.size()));
    if (spec.signs.size() != spec.blades.size())
        throw std::invalid_argument("idempotent spec: signs/blades length mismatch");
    BladeMask lim = BladeMask(1) << sig.n();
    std::vector<BladeMask> span{0};
    for (size_t i = 0; i < spec.blades.size(); ++i) {
        BladeMask b = spec.blades[i];
        if (b == 0 || b >= lim)
            throw std::invalid_argument("idempotent spec: blade out of range");
        if (spec.signs[i] != 1 && spec.signs[i] != -1)
            throw std::invalid_argument("idempotent spec: signs must be +1/-1");
        if (blade_square_sign(b, sig) != 1)
            throw std::invalid_argument("idempotent spec: " + blade_name(b) + " does not square to +1");
        for (size_t j = 0; j < i; ++j)
            if (!blades_commute(b, spec.blades[j]))
                throw std::invalid_argument("idempotent spec: " + blade_name(b) + " and " +
                                            blade_name(spec.blades[j]) + " do not commute");
        if (std::find(span.begin(), span.end(), b) != span.end())
            throw std::invalid_argument("idempotent spec: blades not independent (group order below 2^k)");
        size_t old = span.size();
        for (size_t t = 0; t < old; ++t) span.push_back(span[t] ^ b);
    }
}

}  // namespace

std::vector<std::vector<BladeMask>> commuting_blade_sets(const AlgebraSig& sig) {
    require_simple_real(sig, "commuting_blade_sets");
    FamilyEnum e(sig);
    e.run();
    return e.out;
}

Multivector primitive_idempotent(const IdempotentSpec& spec, const AlgebraSig& sig) {
    validate_spec(spec, sig);
    Multivector f = Multivector::unit(sig);
    Scalar half(make_ratio(1, 2));
    for (size_t i = 0; i < spec.blades.size(); ++i) {
        Multivector factor = Multivector::unit(sig) * half;
        factor.add_term(spec.blades[i], Scalar(make_ratio(spec.signs[i], 2)));
        f = f * factor;
    }
    if (f.is_zero() || f * f != f) throw std::logic_error("primitive_idempotent: f*f != f");
    return f;
}

namespace {

struct RepBuilder {
    const AlgebraSig& sig;
    int n;
    BladeMask lim;
    std::vector<int> chi;       // blade(t)*f = chi[t]*f on the idempotent group span; 0 off-span
    std::vector<int> srow;      // spinor row of each mask
    std::vector<int> kcos;      // K label index within the centralizer span; -1 off-span
    std::vector<BladeMask> slabels, klabels;

    explicit RepBuilder(const AlgebraSig& s) : sig(s), n(s.n()), lim(BladeMask(1) << s.n()) {}

    void build_group(const IdempotentSpec& spec) {
        chi.assign(lim, 0);
        chi[0] = 1;
        std::vector<BladeMask> span{0};
        for (size_t i = 0; i < spec.blades.size(); ++i) {
            BladeMask g = spec.blades[i];
            int s = spec.signs[i];
            size_t old = span.size();
            for (size_t t = 0; t < old; ++t) {
                auto [mm, sm] = blade_mul(span[t], g, sig);
                chi[mm] = sm * s * chi[span[t]];
                span.push_back(mm);
            }
        }
    }

    void build_labels(const std::vector<BladeMask>* k_override) {
        std::vector<BladeMask> order(lim);
        for (BladeMask m = 0; m < lim; ++m) order[m] = m;
        std::sort(order.begin(), order.end(), BladeLess{});

        // centralizer of the idempotent group
        std::vector<BladeMask> cent;
        for (BladeMask m : order) {
            bool ok = true;
            for (BladeMask t = 0; t < lim; ++t)
                if (chi[t] != 0 && !blades_commute(m, t)) { ok = false; break; }
            if (ok) cent.push_back(m);
        }
        // K labels: one per idempotent-group coset inside the centralizer
        kcos.assign(lim, -1);
        klabels.clear();
        for (BladeMask m : cent) {
            if (kcos[m] >= 0) continue;
            int idx = static_cast<int>(klabels.size());
            klabels.push_back(m);
            for (BladeMask t = 0; t < lim; ++t)
                if (chi[t] != 0) kcos[m ^ t] = idx;
        }
        if (k_override) {
            if (k_override->size() != klabels.size())
                throw std::invalid_argument("k basis override: wrong size");
            if ((*k_override)[0] != 0)
                throw std::invalid_argument("k basis override: first element must be Id");
            std::vector<bool> seen(klabels.size(), false);
            for (BladeMask b : *k_override) {
                if (b >= lim || kcos[b] < 0)
                    throw std::invalid_argument("k basis override: " + blade_name(b) +
                                                " does not centralize the idempotent group");
                if (seen[kcos[b]]) throw std::invalid_argument("k basis override: duplicate coset");
                seen[kcos[b]] = true;
            }
            // override order becomes the K coordinate order
            klabels = *k_override;
            std::fill(kcos.begin(), kcos.end(), -1);
            for (size_t idx = 0; idx < klabels.size(); ++idx)
                for (BladeMask t = 0; t < lim; ++t)
                    if (chi[t] != 0) kcos[klabels[idx] ^ t] = static_cast<int>(idx);
        }
        // spinor labels: transversal of the centralizer span
        std::vector<bool> centspan(lim, false);
        for (BladeMask m : cent) centspan[m] = true;
        srow.assign(lim, -1);
        slabels.clear();
        for (BladeMask m : order) {
            if (srow[m] >= 0) continue;
            int idx = static_cast<int>(slabels.size());
            slabels.push_back(m);
            for (BladeMask c : cent) srow[m ^ c] = idx;
        }
    }

    // sign * blade(mask) * f = coeff * b_row * kappa_idx
    std::pair<int, KMono> decompose(BladeMask mask, int sign) const {
        int row = srow[mask];
        BladeMask rem = slabels[row] ^ mask;
        int kj = kcos[rem];
        if (kj < 0) throw std::logic_error("decompose: remainder off the centralizer span");
        BladeMask t = rem ^ klabels[kj];
        auto [m1, s1] = blade_mul(slabels[row], klabels[kj], sig);
        auto [m2, s2] = blade_mul(m1, t, sig);
        if (m2 != mask) throw std::logic_error("decompose: mask mismatch");
        int coeff = sign * s1 * s2 * chi[t];
        return {row, KMono{static_cast<std::int8_t>(coeff), static_cast<std::uint8_t>(kj)}};
    }

    KTable build_ktable() const {
        KTable kt;
        kt.dim = static_cast<int>(klabels.size());
        for (int a = 0; a < kt.dim; ++a)
            for (int b = 0; b < kt.dim; ++b) {
                auto [mm, ss] = blade_mul(klabels[a], klabels[b], sig);
                int c = kcos[mm];
                BladeMask t = mm ^ klabels[c];
                auto [m1, s1] = blade_mul(klabels[c], t, sig);
                if (m1 != mm) throw std::logic_error("ktable: coset mismatch");
                kt.tab[a * kt.dim + b] =
                    KMono{static_cast<std::int8_t>(ss * s1 * chi[t]), static_cast<std::uint8_t>(c)};
            }
        return kt;
    }
};

}  // namespace

SpinorRep build_spinor_rep(const AlgebraSig& sig, const IdempotentSpec& spec,
                           const std::vector<BladeMask>* k_basis_override) {
    Multivector f = primitive_idempotent(spec, sig);
    SpinorRep rep(sig, spec, std::move(f));

    RepBuilder rb(sig);
    rb.build_group(spec);
    rb.build_labels(k_basis_override);
    rep.spinor_labels = rb.slabels;
    rep.k_labels = rb.klabels;
    rep.side = static_cast<int>(rb.slabels.size());
    rep.dimk = static_cast<int>(rb.klabels.size());

    int k = static_cast<int>(spec.blades.size());
    if (static_cast<long>(rep.side) * rep.dimk * (1L << k) != (1L << sig.n()))
        throw std::logic_error("build_spinor_rep: dimension bookkeeping failed");
    StructureInfo info = mod8_type(sig.p, sig.q);
    if (rep.side != info.matrix_side || rep.dimk != ring_dim(info.ring))
        throw std::logic_error("build_spinor_rep: Wedderburn dimensions mismatch");

    rep.ktab = rb.build_ktable();

    rep.gens.reserve(sig.n());
    for (int i = 0; i < sig.n(); ++i) {
        MonoMat M;
        M.side = rep.side;
        M.col.resize(rep.side);
        for (int j = 0; j < rep.side; ++j) {
            auto [mm, ss] = blade_mul(BladeMask(1) << i, rb.slabels[j], sig);
            auto [row, v] = rb.decompose(mm, ss);
            M.col[j] = {static_cast<std::uint8_t>(row), v};
        }
        rep.gens.push_back(std::move(M));
    }

    rep.units = normalize_spinor_basis(rep.gens, rep.ktab, rep.side, sig.n() % 2 == 1);

    // T-coset minima give the ideal basis labels
    std::vector<BladeMask> order(rb.lim);
    for (BladeMask m = 0; m < rb.lim; ++m) order[m] = m;
    std::sort(order.begin(), order.end(), BladeLess{});
    std::vector<bool> seen(rb.lim, false);
    for (BladeMask m : order) {
        if (seen[m]) continue;
        rep.ideal_labels.push_back(m);
        for (BladeMask t = 0; t < rb.lim; ++t)
            if (rb.chi[t] != 0) seen[m ^ t] = true;
    }

    verify_generator_relations(rep);
    return rep;
}

void materialize_bases(SpinorRep& rep) {
    if (!rep.ideal_basis.empty()) return;
    for (BladeMask m : rep.ideal_labels)
        rep.ideal_basis.push_back(Multivector::blade(rep.sig, m) * rep.f);
    for (BladeMask m : rep.k_labels)
        rep.k_basis.push_back(rep.f * Multivector::blade(rep.sig, m) * rep.f);
    for (int j = 0; j < rep.side; ++j) {
        Multivector b = Multivector::blade(rep.sig, rep.spinor_labels[j]) * rep.f;
        const KMono& u = rep.units[j];
        rep.spinor_basis.push_back(b * (rep.k_basis[u.idx] * Scalar(u.sign)));
    }
}

KMatrix spinor_matrix(const Multivector& x, const SpinorRep& rep) {
    if (x.sig() != rep.sig) throw std::invalid_argument("spinor_matrix: signature mismatch");
    // rebuild the decomposition tables; cheap relative to matrix use
    RepBuilder rb(rep.sig);
    rb.build_group(rep.spec);
    rb.build_labels(nullptr);
    rb.klabels = rep.k_labels;
    rb.kcos.assign(rb.lim, -1);
    for (size_t idx = 0; idx < rep.k_labels.size(); ++idx)
        for (BladeMask t = 0; t < rb.lim; ++t)
            if (rb.chi[t] != 0) rb.kcos[rep.k_labels[idx] ^ t] = static_cast<int>(idx);

    KMatrix out = KMatrix::zeros(rep.side, rep.dimk);
    for (const auto& [mask, c] : x.terms()) {
        for (int j = 0; j < rep.side; ++j) {
            auto [mm, ss] = blade_mul(mask, rep.spinor_labels[j], rep.sig);
            auto [row, v] = rb.decompose(mm, ss);
            KMono adj = rep.ktab.mul(rep.ktab.mul(rep.ktab.inv(rep.units[row]), v), rep.units[j]);
            Scalar add = c * Scalar(adj.sign);
            out.at(row, j, adj.idx) += add;
        }
    }
    return out;
}

void verify_generator_relations(const SpinorRep& rep) {
    for (int i = 0; i < rep.sig.n(); ++i) {
        int sq = mono_square_sign(rep.gens[i], rep.ktab);
        if (sq != metric_sign(i, rep.sig))
            throw std::logic_error("generator relations: wrong metric square");
        for (int j = i + 1; j < rep.sig.n(); ++j) {
            MonoMat ab = mono_mul(rep.gens[i], rep.gens[j], rep.ktab);
            MonoMat ba = mono_mul(rep.gens[j], rep.gens[i], rep.ktab);
            if (ab != -ba) throw std::logic_error("generator relations: generators fail to anticommute");
        }
    }
}

}  // namespace cliffsym
