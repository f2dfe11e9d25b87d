#pragma once

#include <optional>
#include <vector>

#include "cliffsym/kalg.hpp"
#include "cliffsym/multivector.hpp"
#include "cliffsym/structure.hpp"

namespace cliffsym {

/// Primitive idempotent recipe: f = prod_i (1 + sign_i * e_{blade_i}) / 2^k
/// with mutually commuting +1-square blades generating a group of order 2^k.
struct IdempotentSpec {
    std::vector<BladeMask> blades;
    std::vector<int> signs;  // +1 / -1, same length as blades
};

/// All families of k_idem mutually commuting +1-square blades whose masks are
/// linearly independent over GF(2), one canonical generating set per generated
/// subgroup (greedy-minimal in ascending (grade, mask) order). Requires a
/// simple type; semisimple callers recurse via structure.
std::vector<std::vector<BladeMask>> commuting_blade_sets(const AlgebraSig& sig);

/// Validates the spec and returns f with f*f == f.
Multivector primitive_idempotent(const IdempotentSpec& spec, const AlgebraSig& sig);

/// Sign pattern number `bits` (0 .. 2^k-1) over a family, in lexicographic
/// order with '+' before '-': bit 0 of the pattern index drives the LAST sign.
inline IdempotentSpec spec_from_family(const std::vector<BladeMask>& family, int bits) {
    IdempotentSpec spec;
    spec.blades = family;
    int k = static_cast<int>(family.size());
    for (int i = 0; i < k; ++i) spec.signs.push_back((bits >> (k - 1 - i) & 1) ? -1 : 1);
    return spec;
}

/// Spinor representation of Cl(p,q) on the minimal left ideal Cl*f, with the
/// generator matrices written in K-basis coordinates. Generator matrices are
/// monomial (one +-kappa entry per column); the spinor basis is rescaled by
/// right K-units so that every generator is structurally symmetric or
/// skewsymmetric.
struct SpinorRep {
    AlgebraSig sig;
    IdempotentSpec spec;
    Multivector f;

    int side = 1;  // matrix side (spinor basis size over K)
    int dimk = 1;  // dim_R(K)

    std::vector<BladeMask> ideal_labels;   // one blade per T-coset, ascending minima
    std::vector<BladeMask> k_labels;       // K basis blade labels
    std::vector<BladeMask> spinor_labels;  // transversal blade labels
    std::vector<KMono> units;              // purification rescale of the spinor basis

    KTable ktab;
    std::vector<MonoMat> gens;

    // Multivector views, filled by materialize_bases.
    std::vector<Multivector> ideal_basis;
    std::vector<Multivector> k_basis;
    std::vector<Multivector> spinor_basis;

    SpinorRep(const AlgebraSig& s, const IdempotentSpec& sp, Multivector f_)
        : sig(s), spec(sp), f(std::move(f_)) {}
};

/// Build the representation. k_basis_override selects representative blades
/// for the K basis (used to match prestored presentations); each override
/// blade must centralize the idempotent group and hit a distinct coset.
SpinorRep build_spinor_rep(const AlgebraSig& sig, const IdempotentSpec& spec,
                           const std::vector<BladeMask>* k_basis_override = nullptr);

/// Fill the ideal/K/spinor basis multivector views.
void materialize_bases(SpinorRep& rep);

/// Left-action matrix of an arbitrary element in K coordinates.
KMatrix spinor_matrix(const Multivector& x, const SpinorRep& rep);

/// Checks that gens reproduce the Clifford relations of sig exactly.
void verify_generator_relations(const SpinorRep& rep);

}  // namespace cliffsym
