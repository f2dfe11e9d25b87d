#pragma once

#include <vector>

#include "cliffsym/kalg.hpp"

namespace cliffsym {

/// Right-rescale the spinor basis by K units so that
///   1. every generator matrix is structurally symmetric or skewsymmetric, and
///   2. for the even algebras, the derived E and C matrices satisfy the
///      transpose corollary E^T = (-1)^(m(m-1)/2) E, C^T = (-1)^(m(m+1)/2) C
///      with side 2^m.
/// Over a noncommutative K the structural transpose is not an
/// antiautomorphism, so neither property is automatic for a raw coset basis;
/// both are restored by a deterministic search over unit rescalings. An
/// already-conforming basis is kept unchanged. `odd_dimension` skips the
/// corollary constraint (the odd complex-ring types classify through their
/// even complex subalgebra instead).
std::vector<KMono> normalize_spinor_basis(std::vector<MonoMat>& gens, const KTable& ktab,
                                          int side, bool odd_dimension);

}  // namespace cliffsym
