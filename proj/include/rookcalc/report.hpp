#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rookcalc/qlaurent.hpp"

namespace rookcalc {

using ParamList = std::vector<std::pair<std::string, std::int64_t>>;

/// Outcome of checking one identity instance. holds <=> diff == 0 <=> lhs == rhs.
struct IdentityReport {
    std::string identity;
    ParamList params;
    bool holds = false;
    LaurentPolynomial lhs;
    LaurentPolynomial rhs;
    LaurentPolynomial diff;  // lhs - rhs
};

IdentityReport make_report(std::string identity, ParamList params, LaurentPolynomial lhs, LaurentPolynomial rhs);

/// {identity, params:{...}, holds, lhs, rhs, diff}; polynomials in the exponent->coefficient form.
nlohmann::ordered_json to_json(const IdentityReport& r);

/// "n=2 m=1 s=0"
std::string format_params(const ParamList& params);

}  // namespace rookcalc
