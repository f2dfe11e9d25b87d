#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffsym/scalar.hpp"

namespace cliffsym {

/// Monomial element of the division ring K: sign * kappa_idx, with sign 0 for zero.
/// The K bases produced by repgen are closed under multiplication up to sign,
/// so ring arithmetic on basis monomials never leaves this form.
struct KMono {
    std::int8_t sign = 0;
    std::uint8_t idx = 0;

    bool is_zero() const { return sign == 0; }
    KMono operator-() const { return {static_cast<std::int8_t>(-sign), idx}; }
    bool operator==(const KMono& o) const {
        return sign == o.sign && (sign == 0 || idx == o.idx);
    }
    bool operator!=(const KMono& o) const { return !(*this == o); }
};

/// Multiplication table of the K basis: kappa_a * kappa_b = sign * kappa_c.
struct KTable {
    int dim = 1;
    std::array<KMono, 16> tab{};  // tab[a*dim+b]

    KMono mul(const KMono& a, const KMono& b) const {
        if (a.is_zero() || b.is_zero()) return {};
        KMono t = tab[a.idx * dim + b.idx];
        t.sign = static_cast<std::int8_t>(t.sign * a.sign * b.sign);
        return t;
    }
    /// kappa^2 = +-1 in every basis we build, so units invert to +-themselves.
    KMono inv(const KMono& a) const {
        if (a.is_zero()) throw std::logic_error("KTable::inv of zero");
        KMono sq = tab[a.idx * dim + a.idx];
        if (sq.idx != 0 || sq.sign == 0) throw std::logic_error("K basis element squares off-identity");
        KMono r = a;
        if (sq.sign < 0) r.sign = static_cast<std::int8_t>(-r.sign);
        return r;
    }
};

/// Generalized permutation matrix over K: exactly one monomial entry per
/// column (and per row). Products, transposes and the W/E/C candidates all
/// stay in this form.
struct MonoMat {
    struct Entry {
        std::uint8_t row = 0;
        KMono v{};
    };
    int side = 0;
    std::vector<Entry> col;  // col[j] = (row, value)

    static MonoMat identity(int side) {
        MonoMat m;
        m.side = side;
        m.col.resize(side);
        for (int j = 0; j < side; ++j) m.col[j] = {static_cast<std::uint8_t>(j), {1, 0}};
        return m;
    }

    KMono at(int i, int j) const {
        return col[j].row == i ? col[j].v : KMono{};
    }

    MonoMat operator-() const {
        MonoMat m = *this;
        for (auto& e : m.col) e.v = -e.v;
        return m;
    }

    bool operator==(const MonoMat& o) const {
        if (side != o.side) return false;
        for (int j = 0; j < side; ++j)
            if (col[j].row != o.col[j].row || col[j].v != o.col[j].v) return false;
        return true;
    }
    bool operator!=(const MonoMat& o) const { return !(*this == o); }
};

inline MonoMat mono_mul(const MonoMat& a, const MonoMat& b, const KTable& k) {
    if (a.side != b.side) throw std::logic_error("mono_mul: size mismatch");
    MonoMat r;
    r.side = a.side;
    r.col.resize(a.side);
    for (int j = 0; j < a.side; ++j) {
        const auto& bj = b.col[j];
        const auto& al = a.col[bj.row];
        r.col[j] = {al.row, k.mul(al.v, bj.v)};
        if (r.col[j].v.is_zero()) throw std::logic_error("mono_mul: zero entry");
    }
    return r;
}

/// Plain positional transpose; entries in K are not conjugated.
inline MonoMat mono_transpose(const MonoMat& a) {
    MonoMat r;
    r.side = a.side;
    r.col.resize(a.side);
    for (int j = 0; j < a.side; ++j) r.col[a.col[j].row] = {static_cast<std::uint8_t>(j), a.col[j].v};
    return r;
}

/// +1 / -1 if the matrix is +-identity, 0 otherwise.
inline int mono_pm_identity(const MonoMat& a) {
    int s = 0;
    for (int j = 0; j < a.side; ++j) {
        if (a.col[j].row != j || a.col[j].v.idx != 0) return 0;
        int cs = a.col[j].v.sign;
        if (cs == 0) return 0;
        if (s == 0) s = cs;
        else if (s != cs) return 0;
    }
    return s;
}

inline int mono_square_sign(const MonoMat& a, const KTable& k) {
    return mono_pm_identity(mono_mul(a, a, k));
}

/// True if b == a or b == -a.
inline bool mono_proportional(const MonoMat& a, const MonoMat& b) {
    return a == b || a == -b;
}

/// Dense matrix over K with general coordinates, for representing arbitrary
/// algebra elements.
struct KMatrix {
    int side = 0;
    int dimk = 1;
    std::vector<Scalar> e;  // e[(i*side + j)*dimk + t]

    static KMatrix zeros(int side, int dimk) {
        KMatrix m;
        m.side = side;
        m.dimk = dimk;
        m.e.assign(static_cast<size_t>(side) * side * dimk, Scalar());
        return m;
    }
    Scalar& at(int i, int j, int t) { return e[(static_cast<size_t>(i) * side + j) * dimk + t]; }
    const Scalar& at(int i, int j, int t) const {
        return e[(static_cast<size_t>(i) * side + j) * dimk + t];
    }
    bool operator==(const KMatrix& o) const { return side == o.side && dimk == o.dimk && e == o.e; }
};

KMatrix kmatrix_from_mono(const MonoMat& m, int dimk);
KMatrix kmatrix_mul(const KMatrix& a, const KMatrix& b, const KTable& k);
KMatrix kmatrix_transpose(const KMatrix& a);

}  // namespace cliffsym
