#include "cliffsym/scalar.hpp"

namespace cliffsym {

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

std::string scalar_to_string(const Scalar& s) {
    if (s.is_zero()) return "0";
    if (s.im == 0) return rational_to_string(s.re);
    std::string imag;
    if (s.im == 1) imag = "i";
    else if (s.im == -1) imag = "-i";
    else imag = rational_to_string(s.im) + "*i";
    if (s.re == 0) return imag;
    std::string out = "(" + rational_to_string(s.re);
    if (imag[0] == '-') out += "-" + imag.substr(1);
    else out += "+" + imag;
    out += ")";
    return out;
}

}  // namespace cliffsym
