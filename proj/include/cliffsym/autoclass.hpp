#pragma once

#include <array>
#include <string>
#include <vector>

#include "cliffsym/repgen.hpp"

namespace cliffsym {

/// Per-generator transpose symmetry of a spinor basis, with the quaternionic
/// square counts: l/t skewsymmetric with square +I/-I, h/g symmetric likewise.
struct SymmetrySplit {
    std::vector<int> sym, skew;
    int l = 0, t = 0, h = 0, g = 0;
    int k() const { return static_cast<int>(skew.size()); }
};

/// Candidate shape the validated E / C matrix came from.
enum class AutForm { ProdSym, ProdSkew, Identity, WProdSym, WProdSkew, W };

std::string aut_form_name(AutForm f);

/// Matrices of the fundamental automorphisms in a given representation.
/// W is always the full generator product; E satisfies Ei = E Ei^T E^-1 and
/// C satisfies -Ei = C Ei^T C^-1, each unique among the candidate products
/// up to sign. For the odd complex-ring types the gamma-basis products of
/// Theorem 2.1 are used and abc is reported in the complex scaling convention.
struct AutMatrices {
    MonoMat W, E, C;
    AutForm e_form = AutForm::Identity;
    AutForm c_form = AutForm::Identity;
    int a = 1, b = 1, c = 1;   // signs of W^2, E^2, C^2
    int eps = 1;               // EC = eps * CE
    bool complex_convention = false;  // abc normalized over C (types 3/7)
};

struct GroupClass {
    std::string order4;        // Z2*Z2 | Z4 | Q4/Z2 | D4/Z2
    std::string order8_cover;  // Z2*Z2*Z2 | Z2*Z4 | Q4 | D4
    std::array<int, 3> abc{1, 1, 1};
    bool abelian = true;
};

struct Conformance {
    bool pass = false;
    std::string case_label;
    /// Admissible (cover, abc) entries for this representation per the
    /// classification theorem.
    std::vector<GroupClass> admissible;
};

struct ClassificationReport {
    AlgebraSig sig;
    IdempotentSpec spec;
    std::string idempotent;  // textual form of f
    int h_type = 0;
    RingTag ring = RingTag::R;
    SymmetrySplit split;
    AutMatrices aut;
    GroupClass group;
    Conformance conformance;
};

/// Plain positional transpose (no conjugation of K entries).
inline MonoMat structural_transpose(const MonoMat& m) { return mono_transpose(m); }
KMatrix structural_transpose(const KMatrix& m);

SymmetrySplit symmetry_split(const SpinorRep& rep);

AutMatrices construct_wec(const SpinorRep& rep, const SymmetrySplit& split);
inline AutMatrices construct_wec(const SpinorRep& rep) {
    return construct_wec(rep, symmetry_split(rep));
}

std::array<int, 3> signature_abc(const AutMatrices& am);

/// Abstract order-8 group {+-I, +-W, +-E, +-C} classified by abelianness and
/// element-order census; also verifies closure of the matrix octet.
GroupClass classify_group(const AutMatrices& am, const KTable& ktab);

/// Admissible (group, abc) per Theorem 3.1 for this (p,q) and split, and the
/// matched case label. Works for the simple types; the semisimple types are
/// handled by classify_semisimple.
Conformance theorem_conformance(int p, int q, const GroupClass& gc, const SymmetrySplit& split);

/// Full pipeline for one representation of a simple type.
ClassificationReport classify_rep(const SpinorRep& rep);

/// 4x4 multiplication table of {I,W,E,C}: entry = signed index into
/// {I,W,E,C}, e.g. {+1,3} for +C. Snapshot of the matrix products.
struct AutTable {
    std::array<std::array<std::pair<int, int>, 4>, 4> cell;
};
AutTable aut_multiplication_table(const AutMatrices& am, const KTable& ktab);

/// Admissible signatures of the semisimple types per Theorem 3.1 case 3:
/// a = + branch for Cl(p,0), a = - branch for Cl(0,q), all eight otherwise.
std::vector<GroupClass> semisimple_admissible(int p, int q);

struct SemisimpleReport {
    AlgebraSig sig;
    int h_type = 0;
    RingTag ring = RingTag::RR;
    struct Variant {
        char name;  // 'A' or 'B'
        AlgebraSig summand;
        std::vector<ClassificationReport> reports;
    };
    std::vector<Variant> variants;
    std::vector<GroupClass> admissible;
    bool pass = false;
};

/// Classify a semisimple Cl(p,q) through both direct-sum decompositions,
/// checking every summand representation against the admissible set.
SemisimpleReport classify_semisimple(int p, int q);

}  // namespace cliffsym
