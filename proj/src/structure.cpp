#include "cliffsym/structure.hpp"

#include <stdexcept>

namespace cliffsym {

std::string ring_name(RingTag r) {
    switch (r) {
        case RingTag::R: return "R";
        case RingTag::C: return "C";
        case RingTag::H: return "H";
        case RingTag::RR: return "R+R";
        case RingTag::HH: return "H+H";
    }
    throw std::logic_error("ring_name");
}

int ring_dim(RingTag r) {
    switch (r) {
        case RingTag::R: return 1;
        case RingTag::C: return 2;
        case RingTag::H: return 4;
        case RingTag::RR: return 1;
        case RingTag::HH: return 4;
    }
    throw std::logic_error("ring_dim");
}

int radon_hurwitz(int i) {
    static const int table[8] = {0, 1, 2, 2, 3, 3, 3, 3};
    int base = ((i % 8) + 8) % 8;
    return table[base] + 4 * ((i - base) / 8);
}

int idem_factor_count(int p, int q) {
    return q - radon_hurwitz(q - p);
}

StructureInfo mod8_type(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("mod8_type: negative index");
    StructureInfo info;
    info.h_type = ((p - q) % 8 + 8) % 8;
    switch (info.h_type) {
        case 0: case 2: info.ring = RingTag::R; break;
        case 3: case 7: info.ring = RingTag::C; break;
        case 4: case 6: info.ring = RingTag::H; break;
        case 1: info.ring = RingTag::RR; break;
        case 5: info.ring = RingTag::HH; break;
    }
    info.simple = info.h_type != 1 && info.h_type != 5;
    info.k_idem = idem_factor_count(p, q);
    // side = dim_R(minimal left ideal) / dim_R(K): 2^(p+q-k) / ring_dim
    int exp = p + q - info.k_idem;
    long side = 1L << exp;
    side /= ring_dim(info.ring);
    info.matrix_side = static_cast<int>(side);
    return info;
}

Decomposition semisimple_decomposition(int p, int q) {
    StructureInfo info = mod8_type(p, q);
    if (info.simple)
        throw std::invalid_argument("semisimple_decomposition: Cl(" + std::to_string(p) + "," +
                                    std::to_string(q) + ") is simple");
    Decomposition d;
    if (q >= 1) d.variant_a = AlgebraSig(p, q - 1);
    if (p >= 1) d.variant_b = AlgebraSig(q, p - 1);
    return d;
}

ComplexificationIso complexification_iso(int p, int q) {
    StructureInfo info = mod8_type(p, q);
    if (info.h_type != 3 && info.h_type != 7)
        throw std::invalid_argument("complexification_iso: type " + std::to_string(info.h_type) +
                                    " has no complex ring");
    ComplexificationIso iso;
    iso.n_complex = p + q - 1;
    iso.m = iso.n_complex / 2;
    iso.m_even = iso.m % 2 == 0;
    return iso;
}

}  // namespace cliffsym
