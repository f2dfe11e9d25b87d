#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cliffsym/multivector.hpp"

namespace cliffsym {

/// Element of a graded tensor product A (x) B: exact coefficients on pairs of
/// blade masks, multiplied with the sign rule
/// (a (x) b)(a' (x) b') = (-1)^(deg b * deg a') aa' (x) bb'.
class GtElement {
  public:
    GtElement(const AlgebraSig& a, const AlgebraSig& b) : a_(a), b_(b) {}

    static GtElement from_left(const AlgebraSig& a, const AlgebraSig& b, BladeMask m);
    static GtElement from_right(const AlgebraSig& a, const AlgebraSig& b, BladeMask m);
    static GtElement unit(const AlgebraSig& a, const AlgebraSig& b);

    void add_term(BladeMask ma, BladeMask mb, const Scalar& c);
    GtElement operator*(const GtElement& o) const;
    GtElement operator+(const GtElement& o) const;
    GtElement operator-() const;
    bool operator==(const GtElement& o) const { return terms_ == o.terms_; }
    bool is_zero() const { return terms_.empty(); }

    const std::map<std::pair<BladeMask, BladeMask>, Scalar>& terms() const { return terms_; }

  private:
    AlgebraSig a_, b_;
    std::map<std::pair<BladeMask, BladeMask>, Scalar> terms_;
};

/// Generators x_i = e_i (x) 1 and y_j = 1 (x) e_j with their grades and
/// squares; the structure constants come from the graded sign rule.
struct GradedAlgebra {
    AlgebraSig a, b;
    std::vector<GtElement> gens;   // x_1..x_n then y_1..y_n'
    std::vector<int> squares;      // +-1 per generator
};

GradedAlgebra graded_tensor(const AlgebraSig& a, const AlgebraSig& b);

/// Checks that the graded tensor generators present Cl(p+p', q+q'): pairwise
/// anticommutation, the expected square multiset, and dimension 2^(n+n').
struct ChevalleyCheck {
    bool ok = false;
    int plus_squares = 0, minus_squares = 0;
    int dim_log2 = 0;
    std::string detail;
};
ChevalleyCheck verify_chevalley(const AlgebraSig& a, const AlgebraSig& b);

struct BWClass {
    int h = 0;       // residue mod 8 (real) or mod 2 (complex)
    bool complex_field = false;
};

BWClass bw_class_real(int p, int q);
BWClass bw_class_complex(int n);

/// Same graded-equivalence class: p + q' = p' + q (mod 8).
bool same_class(int p, int q, int pp, int qq);

struct ClockRow {
    int hour;                      // position h on the clock
    int pq_type;                   // (p-q) mod 8 (real) or n mod 2 (complex)
    std::string ring;
    std::vector<std::array<int, 3>> signatures;  // generalized clock annotations
};

struct ClockTable {
    std::string kind;  // "real" or "complex"
    std::vector<ClockRow> rows;
};

/// Trautman spinorial clock: 8 positions h = (q-p) mod 8 over R, 2 positions
/// h = n mod 2 over C, with the division rings and the admissible signature
/// annotations of the generalized diagrams.
ClockTable trautman_clock(const std::string& kind);

std::string clock_to_text(const ClockTable& t);

}  // namespace cliffsym
