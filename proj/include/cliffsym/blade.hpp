#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace cliffsym {

/// Basis monomial e_{i1...ik} as a bitmask: bit i-1 set <=> generator e_i present.
/// Mask 0 is the unit Id. Canonical index order is ascending.
using BladeMask = std::uint32_t;

/// Signature of the algebra: Cl(p,q) over R, or C_n (complex = true, q = 0,
/// all generators squaring +1).
struct AlgebraSig {
    int p = 0;
    int q = 0;
    bool complex_field = false;

    AlgebraSig() = default;
    AlgebraSig(int p_, int q_) : p(p_), q(q_) {
        if (p < 0 || q < 0) throw std::invalid_argument("AlgebraSig: negative index");
    }
    static AlgebraSig real(int p, int q) { return AlgebraSig(p, q); }
    static AlgebraSig complex(int n) {
        AlgebraSig s(n, 0);
        s.complex_field = true;
        return s;
    }

    int n() const { return p + q; }
    int mod8() const { return ((p - q) % 8 + 8) % 8; }
    bool operator==(const AlgebraSig& o) const {
        return p == o.p && q == o.q && complex_field == o.complex_field;
    }
    bool operator!=(const AlgebraSig& o) const { return !(*this == o); }
};

inline int grade(BladeMask m) { return std::popcount(m); }

/// Sign accumulated by reordering the concatenation e_a e_b into ascending
/// order: (-1)^#{(i,j) : i in a, j in b, j < i}.
inline int reorder_sign(BladeMask a, BladeMask b) {
    int swaps = 0;
    a >>= 1;
    while (a) {
        swaps += std::popcount(a & b);
        a >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
}

/// e_i^2 = +1 for 1 <= i <= p, -1 for p < i <= p+q (all +1 in complex mode).
inline int metric_sign(int index0, const AlgebraSig& sig) {
    if (sig.complex_field) return 1;
    return index0 < sig.p ? 1 : -1;
}

/// Product of basis blades: mask XOR plus the accumulated sign from
/// anticommutations and one metric sign per repeated generator.
inline std::pair<BladeMask, int> blade_mul(BladeMask a, BladeMask b, const AlgebraSig& sig) {
    int sign = reorder_sign(a, b);
    BladeMask common = a & b;
    while (common) {
        int i = std::countr_zero(common);
        sign *= metric_sign(i, sig);
        common &= common - 1;
    }
    return {a ^ b, sign};
}

inline int blade_square_sign(BladeMask a, const AlgebraSig& sig) {
    return blade_mul(a, a, sig).second;
}

/// e_a e_b = +- e_b e_a with sign (-1)^(grade(a)*grade(b) - |a&b|).
inline bool blades_commute(BladeMask a, BladeMask b) {
    return ((grade(a) * grade(b) - std::popcount(a & b)) & 1) == 0;
}

/// Canonical blade order: by grade, then by mask.
inline bool blade_less(BladeMask a, BladeMask b) {
    int ga = grade(a), gb = grade(b);
    if (ga != gb) return ga < gb;
    return a < b;
}

struct BladeLess {
    bool operator()(BladeMask a, BladeMask b) const { return blade_less(a, b); }
};

/// "Id" for the unit, otherwise "e" + ascending indices ("e134").
/// The textual form supports generator indices up to 9.
inline std::string blade_name(BladeMask m) {
    if (m == 0) return "Id";
    std::string s = "e";
    for (int i = 0; i < 32; ++i)
        if (m >> i & 1) {
            if (i >= 9) throw std::invalid_argument("blade_name: index above 9 not printable");
            s += static_cast<char>('1' + i);
        }
    return s;
}

/// Inverse of blade_name. Indices must be ascending and distinct.
inline BladeMask parse_blade(const std::string& s) {
    if (s == "Id" || s == "id" || s == "1") return 0;
    if (s.empty() || s[0] != 'e') throw std::invalid_argument("parse_blade: expected 'Id' or 'e<indices>': " + s);
    BladeMask m = 0;
    int last = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (s[i] < '1' || s[i] > '9') throw std::invalid_argument("parse_blade: bad index in " + s);
        int idx = s[i] - '0';
        if (idx <= last) throw std::invalid_argument("parse_blade: indices must ascend in " + s);
        last = idx;
        m |= BladeMask(1) << (idx - 1);
    }
    if (m == 0) throw std::invalid_argument("parse_blade: empty blade " + s);
    return m;
}

}  // namespace cliffsym
