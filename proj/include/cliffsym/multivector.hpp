#pragma once

#include <map>
#include <string>
#include <vector>

#include "cliffsym/blade.hpp"
#include "cliffsym/scalar.hpp"

namespace cliffsym {

/// Finite association blade mask -> nonzero exact coefficient, with an
/// attached signature. Zero coefficients are never stored, so equality of
/// the maps is equality of elements.
class Multivector {
  public:
    using TermMap = std::map<BladeMask, Scalar, BladeLess>;

    explicit Multivector(const AlgebraSig& sig) : sig_(sig) {}

    static Multivector zero(const AlgebraSig& sig) { return Multivector(sig); }
    static Multivector unit(const AlgebraSig& sig) { return blade(sig, 0); }
    static Multivector blade(const AlgebraSig& sig, BladeMask m, const Scalar& c = Scalar(1));

    const AlgebraSig& sig() const { return sig_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(BladeMask m) const;

    void add_term(BladeMask m, const Scalar& c);

    Multivector operator+(const Multivector& o) const;
    Multivector operator-(const Multivector& o) const;
    Multivector operator-() const;
    Multivector operator*(const Scalar& c) const;
    /// Geometric product, bilinear extension of blade_mul.
    Multivector operator*(const Multivector& o) const;

    bool operator==(const Multivector& o) const { return sig_ == o.sig_ && terms_ == o.terms_; }
    bool operator!=(const Multivector& o) const { return !(*this == o); }

    /// Grade involution: grade-k part scaled by (-1)^k.
    Multivector grade_involution() const;
    /// Reversion: grade-k part scaled by (-1)^(k(k-1)/2).
    Multivector reversion() const;
    /// Clifford conjugation: grade-k part scaled by (-1)^(k(k+1)/2).
    Multivector conjugation() const;

    std::string to_string() const;

  private:
    AlgebraSig sig_;
    TermMap terms_;
};

inline Multivector gp(const Multivector& x, const Multivector& y) { return x * y; }

/// Volume element omega = e_{12...n}.
Multivector volume_element(const AlgebraSig& sig);

/// Sign of omega^2: +1 iff (p-q) mod 8 in {0,1,4,5}.
int omega_square(const AlgebraSig& sig);

/// {1} for p-q even, {1, omega} for p-q odd.
std::vector<Multivector> center_basis(const AlgebraSig& sig);

/// Exact round-trip parse of the textual form produced by to_string.
Multivector parse_multivector(const std::string& text, const AlgebraSig& sig);

}  // namespace cliffsym
