#pragma once

#include <optional>
#include <string>

#include "cliffsym/blade.hpp"

namespace cliffsym {

/// Division ring of Cl(p,q), determined by (p-q) mod 8.
enum class RingTag { R, C, H, RR, HH };

std::string ring_name(RingTag r);

/// Real dimension of the ring (per summand for the doubled rings).
int ring_dim(RingTag r);

struct StructureInfo {
    int h_type = 0;        // (p-q) mod 8
    RingTag ring = RingTag::R;
    bool simple = true;    // false exactly for types 1 and 5
    int k_idem = 0;        // idempotent factor count q - r_{q-p}
    int matrix_side = 1;   // side of the Wedderburn matrix algebra (per summand)
};

/// Radon-Hurwitz numbers, extended to all integers by r_{i+8} = r_i + 4.
int radon_hurwitz(int i);

int idem_factor_count(int p, int q);

StructureInfo mod8_type(int p, int q);

struct Decomposition {
    /// Cl(p,q-1) + Cl(p,q-1), present when q >= 1.
    std::optional<AlgebraSig> variant_a;
    /// Cl(q,p-1) + Cl(q,p-1), present when p >= 1.
    std::optional<AlgebraSig> variant_b;
};

/// Direct-sum decomposition of the semisimple types (p-q) mod 8 in {1,5}.
/// Throws on a simple type.
Decomposition semisimple_decomposition(int p, int q);

struct ComplexificationIso {
    int n_complex;  // Cl(p,q) ~ C_{n-1} with n = p+q
    int m;          // (n-1)/2
    bool m_even;    // true iff p even and q odd
};

/// Cl(p,q) ~ C_{p+q-1} for the types (p-q) mod 8 in {3,7}. Throws otherwise.
ComplexificationIso complexification_iso(int p, int q);

}  // namespace cliffsym
