#pragma once

#include <json.hpp>

#include "cliffsym/autoclass.hpp"
#include "cliffsym/bw.hpp"
#include "cliffsym/coverings.hpp"

namespace cliffsym {

using Json = nlohmann::ordered_json;

std::string abc_to_string(const std::array<int, 3>& abc);

/// Entry of a K matrix in the multivector textual form over the K basis
/// labels ("Id", "-e2", "1/2*Id + ...").
std::string kelem_to_string(const std::vector<Scalar>& coeffs,
                            const std::vector<BladeMask>& k_labels, const AlgebraSig& sig);

std::vector<std::vector<std::string>> matrix_to_strings(const KMatrix& m,
                                                        const std::vector<BladeMask>& k_labels,
                                                        const AlgebraSig& sig);
std::vector<std::vector<std::string>> matrix_to_strings(const MonoMat& m,
                                                        const std::vector<BladeMask>& k_labels,
                                                        const AlgebraSig& sig);

/// Paper-style bracket layout for eyeball comparison.
std::string matrix_to_text(const std::vector<std::vector<std::string>>& rows);

Json spec_to_json(const IdempotentSpec& spec);

/// {p, q, idempotent, k_basis, generators: [[entry-strings]]}
Json rep_dump_json(const SpinorRep& rep);

/// {p, q, idempotent, type, ring, abc, order4_group, order8_cover, abelian,
///  cliffordian, W, E, C, conformance}
Json classification_to_json(const ClassificationReport& r, const SpinorRep& rep);

Json semisimple_to_json(const SemisimpleReport& r);

Json pin_descriptor_to_json(const PinDescriptor& d);
Json complex_aut_to_json(const ComplexAutResult& r);
Json complex_pin_to_json(const ComplexPinDescriptor& d);
Json opposite_to_json(const OppositeComparison& c);
Json clock_to_json(const ClockTable& t);
Json chevalley_to_json(const AlgebraSig& a, const AlgebraSig& b, const ChevalleyCheck& chk);

}  // namespace cliffsym
