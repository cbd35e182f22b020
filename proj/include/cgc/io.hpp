#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cgc/census.hpp"
#include "cgc/circulant.hpp"
#include "cgc/mds.hpp"

namespace cgc {

using json = nlohmann::json;

json field_json(const Field& f);
/// {"q", "rows", "entries"}.
json matrix_json(const Matrix& a);
/// {"ring": {"q", "m", "lambda"}, "coeffs"}.
json poly_json(const QuotientElement& a);
json spec_json(const CirculantSpec& spec);
json report_json(const CheckReport& r);
json semi_involutory_json(const SemiInvolutory& s);
json formula_json(const FormulaCount& c);
json exhaustive_json(const ExhaustiveCount& c);
json hit_json(const SearchHit& h);
json census_row_json(const CensusRow& row);

/// Entries rendered in the field's generator symbol, one row per line.
std::string pretty_matrix(const Matrix& a);
std::string pretty_census(const std::vector<CensusRow>& rows);

std::string census_csv(const std::vector<CensusRow>& rows);
std::string hits_csv(const std::vector<SearchHit>& hits);
std::string matrix_csv(const Matrix& a);

std::string join_codes(const std::vector<std::uint32_t>& v, char sep = ',');

}  // namespace cgc
