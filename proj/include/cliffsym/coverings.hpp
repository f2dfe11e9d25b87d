#pragma once

#include <array>
#include <string>
#include <vector>

#include "cliffsym/autoclass.hpp"

namespace cliffsym {

struct DabrowskiRow {
    std::string cover;  // Z2*Z2*Z2 | Z2*Z4 | Q4 | D4
    bool pt_commutes;   // PT = TP column
};

/// The eight double coverings of {1,P,T,PT}, by signature (a,b,c).
DabrowskiRow dabrowski_row(const std::array<int, 3>& abc);

struct PinDescriptor {
    std::string name;        // Pin^{a,b,c}(p,q)
    std::array<int, 3> abc;
    std::string cover;
    bool cliffordian;        // PT = -TP
    std::string semidirect;  // (Spin_0(p,q) odot C^{a,b,c}) / Z2
};

PinDescriptor pin_descriptor(int p, int q, const ClassificationReport& report);

struct OppositeComparison {
    int type_pq, type_qp;
    bool isomorphic;  // neutral types (p-q) mod 8 in {0,4}
    /// Cover/abc pairs realized by the enumerated representations of each side
    /// (variant summands for the semisimple types).
    std::vector<GroupClass> covers_pq, covers_qp;
};

OppositeComparison opposite_comparison(int p, int q);

/// Complex Clifford algebra C_n as matrices over the Gaussian rationals,
/// basis ordered with the m symmetric generators first, then the m
/// skewsymmetric ones.
struct ComplexRep {
    int n = 0, m = 0, side = 1;
    KTable ktab;                 // basis {1, i}
    std::vector<MonoMat> gens;
};

ComplexRep build_complex_rep(int n);

struct ComplexAutResult {
    int n = 0, m = 0;
    GroupClass group;        // Z2*Z2 (+,+,+) or Q4/Z2 (-,-,-)
    AutMatrices aut;         // theorem products, raw matrices
};

/// Theorem on Aut(C_n), n even: Z2*Z2 with (+,+,+) for n = 0,4 (mod 8),
/// Q4/Z2 with (-,-,-) for n = 2,6 (mod 8); verified against a constructed
/// representation with the theorem's E, C products.
ComplexAutResult complex_aut(int n);

struct ComplexPinDescriptor {
    int n = 0;
    std::array<int, 3> abc;
    std::string cover;
    bool cliffordian;
    std::string name;  // Pin^{a,b,c}(n, C)
    std::string semidirect;
};

ComplexPinDescriptor complex_pin(int n);

}  // namespace cliffsym
