#ifndef BILIAISON_MATRIX_IO_HPP
#define BILIAISON_MATRIX_IO_HPP

#include "biliaison/grmatrix.hpp"
#include "json.hpp"

namespace biliaison {

/// {"kind": "prime", "characteristic": 32003} or {"kind": "rationals"}.
FieldSpec field_spec_from_json(const nlohmann::json& j);
nlohmann::json field_spec_to_json(const FieldSpec& spec);

FieldSpec spec_of(const PrimeField& field);
FieldSpec spec_of(const RationalField& field);

/// Reads row_degrees, col_degrees and entries (rows of polynomial strings). Throws
/// ParseError on malformed input and DegreeError on inconsistent degrees.
template <Field K>
GradedMatrix<K> matrix_from_json(const K& field, const nlohmann::json& j);

template <Field K>
nlohmann::json matrix_to_json(const GradedMatrix<K>& m);

}  // namespace biliaison

#endif  // BILIAISON_MATRIX_IO_HPP
