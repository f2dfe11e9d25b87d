#include "cliffsym/multivector.hpp"

#include <cctype>
#include <stdexcept>

namespace cliffsym {

Multivector Multivector::blade(const AlgebraSig& sig, BladeMask m, const Scalar& c) {
    if (m >= (BladeMask(1) << sig.n()))
        throw std::invalid_argument("blade mask out of range for signature");
    Multivector x(sig);
    x.add_term(m, c);
    return x;
}

Scalar Multivector::coeff(BladeMask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void Multivector::add_term(BladeMask m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Multivector Multivector::operator+(const Multivector& o) const {
    if (sig_ != o.sig_) throw std::invalid_argument("signature mismatch");
    Multivector r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Multivector Multivector::operator-(const Multivector& o) const {
    if (sig_ != o.sig_) throw std::invalid_argument("signature mismatch");
    Multivector r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Multivector Multivector::operator-() const {
    Multivector r(sig_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Multivector Multivector::operator*(const Scalar& c) const {
    Multivector r(sig_);
    if (c.is_zero()) return r;
    for (const auto& [m, t] : terms_) r.terms_.emplace(m, t * c);
    return r;
}

Multivector Multivector::operator*(const Multivector& o) const {
    if (sig_ != o.sig_) throw std::invalid_argument("signature mismatch");
    Multivector r(sig_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            auto [m, s] = blade_mul(ma, mb, sig_);
            r.add_term(m, s == 1 ? ca * cb : -(ca * cb));
        }
    return r;
}

Multivector Multivector::grade_involution() const {
    Multivector r(sig_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, (grade(m) & 1) ? -c : c);
    return r;
}

Multivector Multivector::reversion() const {
    Multivector r(sig_);
    for (const auto& [m, c] : terms_) {
        int k = grade(m);
        r.terms_.emplace(m, ((k * (k - 1) / 2) & 1) ? -c : c);
    }
    return r;
}

Multivector Multivector::conjugation() const {
    Multivector r(sig_);
    for (const auto& [m, c] : terms_) {
        int k = grade(m);
        r.terms_.emplace(m, ((k * (k + 1) / 2) & 1) ? -c : c);
    }
    return r;
}

std::string Multivector::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        // Pure real / pure imaginary coefficients carry their sign into the
        // " + " / " - " joiners; mixed Gaussian coefficients stay parenthesized.
        Scalar body = c;
        bool negative = false;
        if (c.im == 0) {
            negative = c.re < 0;
        } else if (c.re == 0) {
            negative = c.im < 0;
        }
        if (negative) body = -c;
        bool omit = body.im == 0 && body.re == 1;
        std::string term;
        if (omit) term = blade_name(m);
        else term = scalar_to_string(body) + "*" + blade_name(m);
        if (first) {
            out = negative ? "-" + term : term;
            first = false;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
    }
    return out;
}

Multivector volume_element(const AlgebraSig& sig) {
    return Multivector::blade(sig, (BladeMask(1) << sig.n()) - 1);
}

int omega_square(const AlgebraSig& sig) {
    Multivector w = volume_element(sig);
    Multivector w2 = w * w;
    Scalar c = w2.coeff(0);
    if (c == Scalar(1)) return 1;
    if (c == Scalar(-1)) return -1;
    throw std::logic_error("omega^2 not +-1");
}

std::vector<Multivector> center_basis(const AlgebraSig& sig) {
    std::vector<Multivector> z{Multivector::unit(sig)};
    if (sig.n() % 2 == 1) z.push_back(volume_element(sig));
    return z;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
    bool eof() { skip_ws(); return pos >= s.size(); }
    char peek() { skip_ws(); return pos < s.size() ? s[pos] : '\0'; }
    char get() { skip_ws(); return s[pos++]; }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("parse_multivector: " + why + " at position " +
                                    std::to_string(pos) + " in \"" + s + "\"");
    }

    Rational rational() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected number");
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            size_t den = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == den) fail("expected denominator");
        }
        Rational r(s.substr(start, pos - start));
        r.canonicalize();
        return r;
    }

    // coefficient := '(' rational (+|-) [rational '*'] 'i' ')'
    //              | rational ['*i' | '*' rational? ...]   (handled by caller)
    //              | 'i'
    Scalar paren_coeff() {
        get();  // '('
        Rational re = rational();
        skip_ws();
        char sign = get();
        if (sign != '+' && sign != '-') fail("expected + or - in complex coefficient");
        Rational im(1);
        skip_ws();
        if (peek() != 'i') {
            im = rational();
            skip_ws();
            if (peek() == '*') get();
        }
        if (get() != 'i') fail("expected i");
        if (get() != ')') fail("expected )");
        if (sign == '-') im = -im;
        return Scalar(re, im);
    }

    // term := coefficient ['*' blade] | blade | 'i' ['*' blade]
    Multivector term(const AlgebraSig& sig, bool negate) {
        Scalar c(1);
        bool have_coeff = false;
        skip_ws();
        if (peek() == '(') {
            c = paren_coeff();
            have_coeff = true;
        } else if (peek() == 'i') {
            get();
            c = Scalar::imaginary_unit();
            have_coeff = true;
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Rational r = rational();
            skip_ws();
            if (pos < s.size() && s[pos] == '*' && pos + 1 < s.size() && s[pos + 1] == 'i') {
                pos += 2;
                c = Scalar(Rational(0), r);
            } else {
                c = Scalar(r);
            }
            have_coeff = true;
        }
        BladeMask m = 0;
        skip_ws();
        bool have_blade = false;
        if (have_coeff && pos < s.size() && s[pos] == '*') {
            ++pos;
            skip_ws();
        }
        if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'I')) {
            size_t start = pos;
            if (s[pos] == 'I') {
                if (s.compare(pos, 2, "Id") != 0) fail("expected Id");
                pos += 2;
            } else {
                ++pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            }
            m = cliffsym::parse_blade(s.substr(start, pos - start));
            have_blade = true;
        }
        if (!have_coeff && !have_blade) fail("expected term");
        if (negate) c = -c;
        return Multivector::blade(sig, m, c);
    }

    Multivector parse(const AlgebraSig& sig) {
        skip_ws();
        if (peek() == '0') {
            ++pos;
            if (eof()) return Multivector::zero(sig);
            fail("unexpected input after 0");
        }
        bool neg = false;
        if (peek() == '-') { get(); neg = true; }
        else if (peek() == '+') get();
        Multivector acc = term(sig, neg);
        while (!eof()) {
            char op = get();
            if (op != '+' && op != '-') fail("expected + or -");
            acc = acc + term(sig, op == '-');
        }
        return acc;
    }
};

}  // namespace

Multivector parse_multivector(const std::string& text, const AlgebraSig& sig) {
    Parser p(text);
    return p.parse(sig);
}

}  // namespace cliffsym
