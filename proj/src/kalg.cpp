#include "cliffsym/kalg.hpp"

namespace cliffsym {

KMatrix kmatrix_from_mono(const MonoMat& m, int dimk) {
    KMatrix r = KMatrix::zeros(m.side, dimk);
    for (int j = 0; j < m.side; ++j) {
        const auto& ent = m.col[j];
        if (!ent.v.is_zero()) r.at(ent.row, j, ent.v.idx) = Scalar(ent.v.sign);
    }
    return r;
}

KMatrix kmatrix_mul(const KMatrix& a, const KMatrix& b, const KTable& k) {
    if (a.side != b.side || a.dimk != b.dimk) throw std::logic_error("kmatrix_mul: size mismatch");
    KMatrix r = KMatrix::zeros(a.side, a.dimk);
    for (int i = 0; i < a.side; ++i)
        for (int l = 0; l < a.side; ++l)
            for (int j = 0; j < a.side; ++j)
                for (int s = 0; s < a.dimk; ++s) {
                    const Scalar& x = a.at(i, l, s);
                    if (x.is_zero()) continue;
                    for (int t = 0; t < a.dimk; ++t) {
                        const Scalar& y = b.at(l, j, t);
                        if (y.is_zero()) continue;
                        KMono prod = k.mul({1, static_cast<std::uint8_t>(s)},
                                           {1, static_cast<std::uint8_t>(t)});
                        Scalar add = x * y;
                        if (prod.sign < 0) add = -add;
                        r.at(i, j, prod.idx) += add;
                    }
                }
    return r;
}

KMatrix kmatrix_transpose(const KMatrix& a) {
    KMatrix r = KMatrix::zeros(a.side, a.dimk);
    for (int i = 0; i < a.side; ++i)
        for (int j = 0; j < a.side; ++j)
            for (int t = 0; t < a.dimk; ++t) r.at(j, i, t) = a.at(i, j, t);
    return r;
}

}  // namespace cliffsym
