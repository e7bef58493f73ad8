#pragma once

#include <string>

#include "rankgeo/code.hpp"

namespace rankgeo {

/// Canonical code file: {"p","e","m","modulus","n","k","generator"} with the
/// generator in RREF and elements serialized as -1 (zero) or the exponent.
/// Output bytes are identical across runs for equal codes.
std::string code_to_json(const RankMetricCode& code);
RankMetricCode code_from_json(const std::string& text,
                              std::uint64_t table_bound = kDefaultTableBound);

void write_code_file(const std::string& path, const RankMetricCode& code);
RankMetricCode read_code_file(const std::string& path,
                              std::uint64_t table_bound = kDefaultTableBound);

/// Plain-text matrix: header "p e m rows cols", then the modulus coefficients
/// in ascending degree, then one line of serialized exponents per row.
std::string matrix_to_text(const Matrix& m);
Matrix matrix_from_text(const std::string& text,
                        std::uint64_t table_bound = kDefaultTableBound);

}  // namespace rankgeo
