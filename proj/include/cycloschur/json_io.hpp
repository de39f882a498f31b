#pragma once

// JSON encoding of matrices, network instances, polynomials, Schur table rows
// and verifier reports. Integers are written as decimal strings so that
// values beyond 64 bits survive a round trip.

#include "cycloschur/reduction.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace cycloschur {

using Json = nlohmann::ordered_json;

/// Parse failure with a 1-based line number (0 when no location applies).
class JsonInputError : public std::runtime_error {
public:
    JsonInputError(const std::string& what, std::size_t line);
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parses text, translating nlohmann's byte offsets into line numbers.
Json parse_json_text(const std::string& text);

Json integer_to_json(const Integer& v);
/// Accepts decimal strings and JSON integers.
Integer integer_from_json(const Json& j);

/// Array of rows, each an array of integer strings. Non-integral entries
/// are written as "p/q".
Json matrix_to_json(const RationalMatrix& m);
/// Rows must be equally long; entries are integer strings or JSON integers.
RationalMatrix matrix_from_json(const Json& j);
RationalMatrix read_matrix_file(const std::string& path);

Json network_to_json(const NetworkInstance& instance);
NetworkInstance network_from_json(const Json& j);

/// Coefficients by degree.
Json polynomial_to_json(const IntPolynomial& p);
Json coefficients_to_json(const std::vector<Integer>& coeffs);

Json partition_to_json(const Partition& lambda);
Json schur_row_to_json(std::uint64_t n, const Partition& lambda, const Integer& value);

Json basis_pair_to_json(const BasisPair& pair);
Json verdict_to_json(const TheoremVerdict& verdict);

}  // namespace cycloschur
