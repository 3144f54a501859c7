#include "biliaison/matrix_io.hpp"

namespace biliaison {

FieldSpec field_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("field: expected an object with \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  FieldSpec spec;
  if (kind == "rationals") {
    spec = FieldSpec::rationals();
  } else if (kind == "prime") {
    spec = FieldSpec::prime(j.value("characteristic", 32003u));
  } else {
    throw ParseError("field: unknown kind '" + kind + "'");
  }
  spec.validate();
  return spec;
}

nlohmann::json field_spec_to_json(const FieldSpec& spec) {
  if (spec.kind == FieldKind::rationals) return {{"kind", "rationals"}};
  return {{"kind", "prime"}, {"characteristic", spec.characteristic}};
}

FieldSpec spec_of(const PrimeField& field) { return FieldSpec::prime(field.characteristic()); }
FieldSpec spec_of(const RationalField&) { return FieldSpec::rationals(); }

template <Field K>
GradedMatrix<K> matrix_from_json(const K& field, const nlohmann::json& j) {
  try {
    auto rd = j.at("row_degrees").get<std::vector<int>>();
    auto cd = j.at("col_degrees").get<std::vector<int>>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rd.size())
      throw ParseError("entries: expected " + std::to_string(rd.size()) + " rows");
    std::vector<std::vector<MultiPoly<K>>> rows;
    for (const auto& row : entries) {
      if (!row.is_array() || row.size() != cd.size())
        throw ParseError("entries: expected rows of " + std::to_string(cd.size()) + " polynomials");
      rows.emplace_back();
      for (const auto& e : row) rows.back().push_back(parse_poly(field, e.get<std::string>()));
    }
    return GradedMatrix<K>::from_rows(field, std::move(rd), std::move(cd), rows);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix file: ") + e.what());
  }
}

template <Field K>
nlohmann::json matrix_to_json(const GradedMatrix<K>& m) {
  nlohmann::json j;
  j["field"] = field_spec_to_json(spec_of(m.field()));
  j["row_degrees"] = m.row_degrees();
  j["col_degrees"] = m.col_degrees();
  j["entries"] = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).to_string());
    j["entries"].push_back(row);
  }
  return j;
}

template GradedMatrix<PrimeField> matrix_from_json(const PrimeField&, const nlohmann::json&);
template GradedMatrix<RationalField> matrix_from_json(const RationalField&, const nlohmann::json&);
template nlohmann::json matrix_to_json(const GradedMatrix<PrimeField>&);
template nlohmann::json matrix_to_json(const GradedMatrix<RationalField>&);

}  // namespace biliaison
