#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "invsemi/bresinsky.hpp"
#include "invsemi/factorization.hpp"
#include "invsemi/polynomial.hpp"

namespace invsemi::cli {

using nlohmann::ordered_json;

/// Raised for malformed arguments; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Comma-separated integers, each at least `minimum`.
std::vector<Integer> parse_integer_list(const std::string& text, Integer minimum = 1);

ordered_json to_json(const ExponentVector& a);
ordered_json to_json(const InversePolynomial& j);
ordered_json to_json(const Polynomial& p);
ordered_json to_json(const Binomial& b);
ordered_json to_json(const BigInteger& n);
ordered_json to_json(const PfaffianStructure& s);

/// Indented "key: value" lines. Objects carrying a "text" field print as
/// that text.
void render_human(std::ostream& out, const ordered_json& value);

}  // namespace invsemi::cli
