#include "rookcalc/stirling.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace rookcalc {

std::string to_string(StirlingKind kind) {
    switch (kind) {
        case StirlingKind::S: return "s";
        case StirlingKind::CD: return "cd";
        case StirlingKind::Type2: return "type2";
    }
    return "?";
}

StirlingTable::StirlingTable(StirlingKind kind, std::int64_t s, std::int64_t c, std::int64_t d)
    : kind_(kind), s_(s), c_(c), d_(d), rows_{{LaurentPolynomial(1L)}} {}

StirlingTable StirlingTable::s_family(std::int64_t s) { return StirlingTable(StirlingKind::S, s, 1, 0); }

StirlingTable StirlingTable::cd_family(std::int64_t s, std::int64_t c, std::int64_t d) {
    return StirlingTable(StirlingKind::CD, s, c, d);
}

StirlingTable StirlingTable::type2_family(std::int64_t alpha, std::int64_t beta, std::int64_t rho) {
    StirlingTable t(StirlingKind::Type2, 1 - beta, beta - alpha, -rho);
    t.alpha_ = alpha;
    t.beta_ = beta;
    t.rho_ = rho;
    return t;
}

ParamList StirlingTable::params() const {
    switch (kind_) {
        case StirlingKind::S: return {{"s", s_}};
        case StirlingKind::CD: return {{"s", s_}, {"c", c_}, {"d", d_}};
        case StirlingKind::Type2: return {{"alpha", alpha_}, {"beta", beta_}, {"rho", rho_}};
    }
    return {};
}

std::int64_t StirlingTable::shift_exponent(int n, int k) const {
    if (kind_ == StirlingKind::S) return s_ * (n - 1) - (s_ - 1) * (k - 1);
    return c_ * (n - 1) + d_ + (n - k) * (s_ - 1);
}

std::int64_t StirlingTable::bracket_argument(int n, int k) const {
    if (kind_ == StirlingKind::S) return s_ * (n - 1) - (s_ - 1) * k;
    return c_ * (n - 1) + d_ + (n - k - 1) * (s_ - 1);
}

const LaurentPolynomial& StirlingTable::stored(int n, int k) const {
    static const LaurentPolynomial zero;
    if (n < 0 || k < 0 || k > n || n >= static_cast<int>(rows_.size())) return zero;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

void StirlingTable::fill(int n_max) {
    while (static_cast<int>(rows_.size()) <= n_max) {
        const int n = static_cast<int>(rows_.size());
        std::vector<LaurentPolynomial> row(static_cast<std::size_t>(n + 1));
        for (int k = 0; k <= n; ++k) {
            LaurentPolynomial value = stored(n - 1, k - 1);
            value.multiply_monomial(1, shift_exponent(n, k));
            const auto& upper = stored(n - 1, k);
            if (!upper.is_zero()) value += bracket(bracket_argument(n, k)) * upper;
            row[static_cast<std::size_t>(k)] = std::move(value);
        }
        rows_.push_back(std::move(row));
    }
}

const LaurentPolynomial& StirlingTable::at(int n, int k) {
    if (n < 0) throw std::invalid_argument("Stirling index n must be non-negative");
    fill(n);
    return stored(n, k);
}

std::vector<std::pair<int, int>> StirlingTable::audit() const {
    std::vector<std::pair<int, int>> failures;
    if (rows_.empty() || rows_[0].size() != 1 || rows_[0][0] != LaurentPolynomial(1L)) failures.emplace_back(0, 0);
    for (int n = 1; n < static_cast<int>(rows_.size()); ++n) {
        for (int k = 0; k <= n; ++k) {
            LaurentPolynomial expected = monomial(1, shift_exponent(n, k)) * stored(n - 1, k - 1) +
                                         bracket(bracket_argument(n, k)) * stored(n - 1, k);
            if (expected != stored(n, k)) failures.emplace_back(n, k);
        }
    }
    return failures;
}

namespace {

using TableKey = std::tuple<StirlingKind, std::int64_t, std::int64_t, std::int64_t>;

StirlingTable& cached_table(StirlingKind kind, std::int64_t a, std::int64_t b, std::int64_t c) {
    thread_local std::map<TableKey, StirlingTable> tables;
    const TableKey key{kind, a, b, c};
    auto it = tables.find(key);
    if (it == tables.end()) {
        switch (kind) {
            case StirlingKind::S: it = tables.emplace(key, StirlingTable::s_family(a)).first; break;
            case StirlingKind::CD: it = tables.emplace(key, StirlingTable::cd_family(a, b, c)).first; break;
            case StirlingKind::Type2: it = tables.emplace(key, StirlingTable::type2_family(a, b, c)).first; break;
        }
    }
    return it->second;
}

}  // namespace

LaurentPolynomial stirling_s(int n, int k, std::int64_t s) {
    return cached_table(StirlingKind::S, s, 0, 0).at(n, k);
}

LaurentPolynomial stirling_cd(int n, int k, std::int64_t s, std::int64_t c, std::int64_t d) {
    return cached_table(StirlingKind::CD, s, c, d).at(n, k);
}

LaurentPolynomial type2(int n, int k, std::int64_t alpha, std::int64_t beta, std::int64_t rho) {
    return cached_table(StirlingKind::Type2, alpha, beta, rho).at(n, k);
}

LaurentPolynomial BellPolynomial::evaluate(const BigInt& x) const {
    LaurentPolynomial total;
    BigInt power = 1;
    for (const auto& c : coefficients) {
        if (power == 0) break;
        LaurentPolynomial term = c;
        term.multiply_monomial(power, 0);
        total += term;
        power *= x;
    }
    return total;
}

namespace {

BellPolynomial row_of(StirlingTable& table, int n) {
    if (n < 0) throw std::invalid_argument("Bell index n must be non-negative");
    BellPolynomial out;
    for (int k = 0; k <= n; ++k) out.coefficients.push_back(table.at(n, k));
    return out;
}

}  // namespace

BellPolynomial bell_poly(int n, std::int64_t s) { return row_of(cached_table(StirlingKind::S, s, 0, 0), n); }

LaurentPolynomial bell_number(int n, std::int64_t s) { return bell_poly(n, s).evaluate(1); }

BellPolynomial bell_type2(int n, std::int64_t alpha, std::int64_t beta, std::int64_t rho) {
    return row_of(cached_table(StirlingKind::Type2, alpha, beta, rho), n);
}

LaurentPolynomial mssha(int n, int k, std::int64_t s, std::int64_t h) {
    if (k > n) return {};
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), BigInt(static_cast<long>(h)).get_mpz_t(), static_cast<unsigned long>(n - k));
    LaurentPolynomial out = stirling_s(n, k, s);
    return out.multiply_monomial(scale, 0);
}

LaurentPolynomial generalized_falling(std::int64_t shift, std::int64_t gamma, int n) {
    LaurentPolynomial out(1L);
    for (int i = 0; i < n; ++i) {
        // factor (x + shift - i*gamma)
        LaurentPolynomial factor = monomial(1, 1);
        factor.add_term(BigInt(static_cast<long>(shift - i * gamma)), 0);
        out *= factor;
    }
    return out;
}

std::string HsuShiueReport::convention() const {
    if (minus_rho.holds && plus_rho.holds) return "both";
    if (minus_rho.holds) return "x-rho";
    if (plus_rho.holds) return "x+rho";
    return "none";
}

HsuShiueReport check_hsu_shiue(int n, std::int64_t alpha, std::int64_t beta, std::int64_t rho) {
    const ParamList params{{"n", n}, {"alpha", alpha}, {"beta", beta}, {"rho", rho}};
    const LaurentPolynomial lhs = generalized_falling(0, alpha, n);
    auto side = [&](std::int64_t shift) {
        LaurentPolynomial rhs;
        for (int k = 0; k <= n; ++k) {
            LaurentPolynomial term = generalized_falling(shift, beta, k);
            term.multiply_monomial(type2(n, k, alpha, beta, rho).coefficient_sum(), 0);
            rhs += term;
        }
        return rhs;
    };
    return HsuShiueReport{make_report("hsu_shiue[x-rho]", params, lhs, side(-rho)),
                          make_report("hsu_shiue[x+rho]", params, lhs, side(rho))};
}

}  // namespace rookcalc
