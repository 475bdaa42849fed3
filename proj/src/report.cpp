#include "rookcalc/report.hpp"

namespace rookcalc {

IdentityReport make_report(std::string identity, ParamList params, LaurentPolynomial lhs, LaurentPolynomial rhs) {
    IdentityReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.diff = lhs - rhs;
    r.holds = r.diff.is_zero();
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

nlohmann::ordered_json to_json(const IdentityReport& r) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : r.params) params[name] = value;
    return {
        {"identity", r.identity},
        {"params", params},
        {"holds", r.holds},
        {"lhs", to_json(r.lhs)},
        {"rhs", to_json(r.rhs)},
        {"diff", to_json(r.diff)},
    };
}

std::string format_params(const ParamList& params) {
    std::string out;
    for (const auto& [name, value] : params) {
        if (!out.empty()) out += ' ';
        out += name + "=" + std::to_string(value);
    }
    return out;
}

}  // namespace rookcalc
