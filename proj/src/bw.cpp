#include "cliffsym/bw.hpp"

#include <sstream>
#include <stdexcept>

namespace cliffsym {

GtElement GtElement::from_left(const AlgebraSig& a, const AlgebraSig& b, BladeMask m) {
    GtElement e(a, b);
    e.add_term(m, 0, Scalar(1));
    return e;
}

GtElement GtElement::from_right(const AlgebraSig& a, const AlgebraSig& b, BladeMask m) {
    GtElement e(a, b);
    e.add_term(0, m, Scalar(1));
    return e;
}

GtElement GtElement::unit(const AlgebraSig& a, const AlgebraSig& b) {
    GtElement e(a, b);
    e.add_term(0, 0, Scalar(1));
    return e;
}

void GtElement::add_term(BladeMask ma, BladeMask mb, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(ma, mb);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GtElement GtElement::operator*(const GtElement& o) const {
    GtElement r(a_, b_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            auto [ma, sa] = blade_mul(ka.first, kb.first, a_);
            auto [mb, sb] = blade_mul(ka.second, kb.second, b_);
            // graded sign: (-1)^(deg b * deg a')
            int s = sa * sb;
            if ((grade(ka.second) * grade(kb.first)) & 1) s = -s;
            Scalar c = ca * cb;
            if (s < 0) c = -c;
            r.add_term(ma, mb, c);
        }
    return r;
}

GtElement GtElement::operator+(const GtElement& o) const {
    GtElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

GtElement GtElement::operator-() const {
    GtElement r(a_, b_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

GradedAlgebra graded_tensor(const AlgebraSig& a, const AlgebraSig& b) {
    if (a.complex_field != b.complex_field)
        throw std::invalid_argument("graded_tensor: operands must share the base field");
    GradedAlgebra g{a, b, {}, {}};
    for (int i = 0; i < a.n(); ++i) {
        g.gens.push_back(GtElement::from_left(a, b, BladeMask(1) << i));
        g.squares.push_back(metric_sign(i, a));
    }
    for (int j = 0; j < b.n(); ++j) {
        g.gens.push_back(GtElement::from_right(a, b, BladeMask(1) << j));
        g.squares.push_back(metric_sign(j, b));
    }
    return g;
}

ChevalleyCheck verify_chevalley(const AlgebraSig& a, const AlgebraSig& b) {
    GradedAlgebra g = graded_tensor(a, b);
    ChevalleyCheck chk;
    chk.dim_log2 = a.n() + b.n();
    GtElement unit = GtElement::unit(a, b);
    int total = static_cast<int>(g.gens.size());
    for (int i = 0; i < total; ++i) {
        GtElement sq = g.gens[i] * g.gens[i];
        GtElement want = g.squares[i] == 1 ? unit : -unit;
        if (!(sq == want)) {
            chk.detail = "generator " + std::to_string(i + 1) + " has the wrong square";
            return chk;
        }
        (g.squares[i] == 1 ? chk.plus_squares : chk.minus_squares) += 1;
        for (int j = i + 1; j < total; ++j) {
            GtElement anti = g.gens[i] * g.gens[j] + g.gens[j] * g.gens[i];
            if (!anti.is_zero()) {
                chk.detail = "generators " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             " fail to anticommute";
                return chk;
            }
        }
    }
    if (chk.plus_squares != a.p + b.p || chk.minus_squares != a.q + b.q) {
        chk.detail = "square multiset does not match Cl(p+p',q+q')";
        return chk;
    }
    chk.ok = true;
    return chk;
}

BWClass bw_class_real(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("bw_class_real: negative index");
    return BWClass{((q - p) % 8 + 8) % 8, false};
}

BWClass bw_class_complex(int n) {
    if (n < 0) throw std::invalid_argument("bw_class_complex: negative n");
    return BWClass{n % 2, true};
}

bool same_class(int p, int q, int pp, int qq) {
    return ((p + qq) - (pp + q)) % 8 == 0;
}

namespace {

std::array<int, 3> sig3(int a, int b, int c) { return {a, b, c}; }

ClockRow real_row(int hour) {
    // hour h holds the type (p-q) mod 8 = (-h) mod 8
    int type = ((-hour) % 8 + 8) % 8;
    ClockRow row;
    row.hour = hour;
    row.pq_type = type;
    switch (type) {
        case 0:
            row.ring = "R";
            row.signatures = {sig3(1, 1, -1), sig3(1, -1, 1), sig3(1, -1, -1), sig3(1, 1, 1)};
            break;
        case 1:
            row.ring = "R+R";
            row.signatures = {sig3(1, 1, -1),  sig3(1, -1, 1),  sig3(1, -1, -1), sig3(1, 1, 1),
                              sig3(-1, 1, 1),  sig3(-1, -1, -1), sig3(-1, 1, -1), sig3(-1, -1, 1)};
            break;
        case 2:
            row.ring = "R";
            row.signatures = {sig3(-1, -1, -1), sig3(-1, 1, 1), sig3(-1, -1, 1), sig3(-1, 1, -1)};
            break;
        case 3:
            row.ring = "C";
            row.signatures = {sig3(-1, -1, -1), sig3(1, 1, 1)};
            break;
        case 4:
            row.ring = "H";
            row.signatures = {sig3(1, 1, 1), sig3(1, -1, -1), sig3(1, -1, 1), sig3(1, 1, -1)};
            break;
        case 5:
            row.ring = "H+H";
            row.signatures = {sig3(-1, 1, -1), sig3(-1, -1, 1), sig3(-1, -1, -1), sig3(-1, 1, 1),
                              sig3(1, 1, 1),   sig3(1, -1, -1), sig3(1, -1, 1),   sig3(1, 1, -1)};
            break;
        case 6:
            row.ring = "H";
            row.signatures = {sig3(-1, 1, -1), sig3(-1, -1, 1), sig3(-1, -1, -1), sig3(-1, 1, 1)};
            break;
        case 7:
            row.ring = "C";
            row.signatures = {sig3(1, 1, 1), sig3(-1, -1, -1)};
            break;
    }
    return row;
}

}  // namespace

ClockTable trautman_clock(const std::string& kind) {
    ClockTable t;
    t.kind = kind;
    if (kind == "real") {
        for (int h = 0; h < 8; ++h) t.rows.push_back(real_row(h));
    } else if (kind == "complex") {
        ClockRow even{0, 0, "C", {sig3(1, 1, 1), sig3(-1, -1, -1)}};
        ClockRow odd{1, 1, "C+C", {sig3(-1, -1, -1), sig3(1, 1, 1)}};
        t.rows = {even, odd};
    } else {
        throw std::invalid_argument("trautman_clock: kind must be 'real' or 'complex'");
    }
    return t;
}

std::string clock_to_text(const ClockTable& t) {
    std::ostringstream os;
    auto sgn = [](int x) { return x > 0 ? '+' : '-'; };
    if (t.kind == "real")
        os << "Trautman clock, BW_R = Z8   (hour h: q-p = h mod 8)\n";
    else
        os << "Trautman clock, BW_C = Z2   (hour h: n = h mod 2)\n";
    for (const auto& row : t.rows) {
        os << "  h=" << row.hour << "  ";
        if (t.kind == "real")
            os << "p-q=" << row.pq_type << " (mod 8)";
        else
            os << "n=" << row.pq_type << " (mod 2)";
        os << "  ring " << row.ring << "  signatures ";
        for (size_t i = 0; i < row.signatures.size(); ++i) {
            const auto& s = row.signatures[i];
            os << (i ? " " : "") << "(" << sgn(s[0]) << "," << sgn(s[1]) << "," << sgn(s[2]) << ")";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace cliffsym
