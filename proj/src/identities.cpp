#include "rookcalc/identities.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "rookcalc/stirling.hpp"

namespace rookcalc::identities {

namespace {

LaurentPolynomial qpow(Exponent e) { return monomial(1, e); }

LaurentPolynomial constant(const BigInt& c) { return LaurentPolynomial(c); }

/// prod_{i=0}^{count-1} [start + step*i]_q; 1 for count <= 0.
LaurentPolynomial bracket_run(std::int64_t start, std::int64_t step, std::int64_t count) {
    LaurentPolynomial out(1L);
    for (std::int64_t i = 0; i < count; ++i) out *= bracket(start + step * i);
    return out;
}

BigInt binom(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt factorial(std::int64_t n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

BigInt rising(std::int64_t a, std::int64_t b) {
    BigInt out = 1;
    for (std::int64_t i = 0; i < b; ++i) out *= BigInt(static_cast<long>(a + i));
    return out;
}

BigInt int_pow(std::int64_t base, std::int64_t e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), BigInt(static_cast<long>(base)).get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

/// Unsigned Stirling numbers of the first kind from the s = 1 table at q = 1.
BigInt cycle_number(int n, int k) { return stirling_s(n, k, 1).coefficient_sum(); }

LaurentPolynomial safe_s(int n, int k, std::int64_t s) { return k < 0 ? LaurentPolynomial{} : stirling_s(n, k, s); }

LaurentPolynomial safe_cd(int n, int k, std::int64_t s, std::int64_t c, std::int64_t d) {
    return k < 0 ? LaurentPolynomial{} : stirling_cd(n, k, s, c, d);
}

LaurentPolynomial safe_t2(int n, int k, std::int64_t alpha, std::int64_t beta, std::int64_t rho) {
    return k < 0 ? LaurentPolynomial{} : type2(n, k, alpha, beta, rho);
}

void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> current(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> go = [&](int index, int remaining) {
        if (index == parts - 1) {
            current[static_cast<std::size_t>(index)] = remaining;
            visit(current);
            return;
        }
        for (int a = 0; a <= remaining; ++a) {
            current[static_cast<std::size_t>(index)] = a;
            go(index + 1, remaining - a);
        }
    };
    if (parts == 0) {
        if (total == 0) visit(current);
        return;
    }
    go(0, total);
}

ParamList oh_params(int n, int k, std::int64_t alpha, std::int64_t s, Rule rule) {
    return {{"n", n}, {"k", k}, {"alpha", alpha}, {"s", s}, {"rule", rule == Rule::SameRow ? 0 : 1}};
}

LaurentPolynomial oh_lhs(int n, int k, std::int64_t alpha, std::int64_t s, Rule rule) {
    return rook_sum(board_jprime(n, alpha), n - k, rule, WeightParams{s});
}

LaurentPolynomial oh1_rhs(int n, int k, std::int64_t alpha, std::int64_t s, bool bare_prefactor) {
    LaurentPolynomial rhs;
    for (int r = 0; r <= n; ++r) {
        if (bare_prefactor) {
            rhs += qpow(alpha) * stirling_s(n, r, s) * q_binomial(r, k, s - 1) * bracket_run(alpha, s - 1, r - k);
        } else {
            rhs += oh1_term(n, k, alpha, s, r);
        }
    }
    return rhs;
}

}  // namespace

LaurentPolynomial oh_term(int n, int k, std::int64_t alpha, std::int64_t s, int r) {
    return qpow(alpha * r) * q_binomial(n, r, s) * safe_s(r, k, s) * bracket_run(alpha, s, n - r);
}

LaurentPolynomial oh1_term(int n, int k, std::int64_t alpha, std::int64_t s, int r) {
    return qpow(alpha * k) * stirling_s(n, r, s) * q_binomial(r, k, s - 1) * bracket_run(alpha, s - 1, r - k);
}

IdentityReport check_oh(int n, int k, std::int64_t alpha, std::int64_t s, Rule rule) {
    LaurentPolynomial rhs;
    for (int r = 0; r <= n; ++r) rhs += oh_term(n, k, alpha, s, r);
    return make_report("oh", oh_params(n, k, alpha, s, rule), oh_lhs(n, k, alpha, s, rule), std::move(rhs));
}

IdentityReport check_oh1(int n, int k, std::int64_t alpha, std::int64_t s, Rule rule) {
    return make_report("oh1", oh_params(n, k, alpha, s, rule), oh_lhs(n, k, alpha, s, rule), oh1_rhs(n, k, alpha, s, false));
}

IdentityReport check_oh1_proof_display(int n, int k, std::int64_t alpha, std::int64_t s, Rule rule) {
    return make_report("oh1_proof_display", oh_params(n, k, alpha, s, rule), oh_lhs(n, k, alpha, s, rule),
                       oh1_rhs(n, k, alpha, s, true));
}

IdentityReport check_spivey_general(int n, int m, int k, std::int64_t s) {
    LaurentPolynomial rhs;
    for (int r = 0; r <= n; ++r) {
        for (int j = 0; j <= m; ++j) {
            const std::int64_t a = j * (1 - s) + s * m;
            rhs += stirling_s(m, j, s) * qpow(r * a) * q_binomial(n, r, s) * safe_s(r, k - j, s) * bracket_run(a, s, n - r);
        }
    }
    return make_report("spivey_general", {{"n", n}, {"m", m}, {"k", k}, {"s", s}}, stirling_s(n + m, k, s), std::move(rhs));
}

IdentityReport check_bell_general(int n, int m, std::int64_t s, std::int64_t x0) {
    const BigInt x(static_cast<long>(x0));
    LaurentPolynomial rhs;
    for (int r = 0; r <= n; ++r) {
        const LaurentPolynomial bell_r = bell_poly(r, s).evaluate(x);
        for (int j = 0; j <= m; ++j) {
            const std::int64_t a = j * (1 - s) + s * m;
            LaurentPolynomial term = stirling_s(m, j, s) * qpow(r * a) * q_binomial(n, r, s) * bell_r * bracket_run(a, s, n - r);
            term.multiply_monomial(int_pow(x0, j), 0);
            rhs += term;
        }
    }
    return make_report("bell_general", {{"n", n}, {"m", m}, {"s", s}, {"x", x0}}, bell_poly(n + m, s).evaluate(x),
                       std::move(rhs));
}

IdentityReport check_thm_ne(int n, int m, int k, std::int64_t s) {
    LaurentPolynomial rhs;
    for (int r = 0; r <= n; ++r) {
        for (int j = 0; j <= std::min(m, k); ++j) {
            const std::int64_t a = j * (1 - s) + s * m;
            rhs += stirling_s(m, j, s) * qpow(a * (k - j)) * q_binomial(r, k - j, s - 1) * stirling_s(n, r, s) *
                   bracket_run(a, s - 1, r - k + j);
        }
    }
    return make_report("thm_ne", {{"n", n}, {"m", m}, {"k", k}, {"s", s}}, stirling_s(n + m, k, 0 + s), std::move(rhs));
}

IdentityReport check_thm_ne_s0(int n, int m, int k) {
    LaurentPolynomial rhs;
    for (int r = 0; r <= n; ++r) {
        for (int j = 0; j <= std::min(m, k); ++j) {
            LaurentPolynomial descending(1L);  // [j][j-1]...[k-r+1]
            for (int t = j; t >= k - r + 1; --t) descending *= bracket(t);
            rhs += stirling_s(m, j, 0) * qpow(static_cast<Exponent>(j) * (k - j)) * q_binomial(r, k - j, -1) *
                   stirling_s(n, r, 0) * descending;
        }
    }
    return make_report("thm_ne_s0", {{"n", n}, {"m", m}, {"k", k}}, stirling_s(n + m, k, 0), std::move(rhs));
}

IdentityReport check_thm_sec(int n, int m, int j, std::int64_t s, SecForm form) {
    LaurentPolynomial rhs;
    for (int k = m; k <= n; ++k) {
        const std::int64_t shifted = (k - m) * (s - 1);
        const std::int64_t a = shifted + k + 1;  // total pre-weight handed to the right block
        for (int r = 0; r <= n - k; ++r) {
            if (form == SecForm::Hey1) {
                rhs += stirling_s(k, m, s) * qpow(r * a + k + shifted) * q_binomial(n - k, r, s) * stirling_s(r, j, s) *
                       bracket_run(a, s, n - k - r);
            } else {
                rhs += stirling_s(k, m, s) * qpow((j + 1) * (k + shifted) + j) * q_binomial(r, j, s - 1) *
                       stirling_s(n - k, r, s) * bracket_run(a, s - 1, r - j);
            }
        }
    }
    return make_report(form == SecForm::Hey1 ? "thm_sec[hey1]" : "thm_sec[hey2]",
                       {{"n", n}, {"m", m}, {"j", j}, {"s", s}, {"form", form == SecForm::Hey1 ? 1 : 2}},
                       stirling_s(n + 1, m + j + 1, s), std::move(rhs));
}

namespace {

ParamList list_params(std::initializer_list<std::pair<std::string, std::int64_t>> head, const std::vector<int>& list,
                      std::initializer_list<std::pair<std::string, std::int64_t>> tail) {
    ParamList out(head);
    out.emplace_back("parts", static_cast<std::int64_t>(list.size()));
    for (std::size_t i = 0; i < list.size(); ++i) out.emplace_back("m" + std::to_string(i + 1), list[i]);
    out.insert(out.end(), tail);
    return out;
}

IdentityReport multisplit_2(int n, const std::vector<int>& m_list, std::int64_t s, bool printed) {
    const int groups = static_cast<int>(m_list.size());
    int m_total = 0;
    for (int v : m_list) m_total += v;
    LaurentPolynomial rhs;
    for_each_composition(n, groups, [&](const std::vector<int>& ks) {
        LaurentPolynomial term(1L);
        std::int64_t offset = 0;
        Exponent separators = 0;
        for (int i = 0; i < groups; ++i) {
            const int ki = ks[static_cast<std::size_t>(i)];
            const int mi = m_list[static_cast<std::size_t>(i)];
            if (i > 0) {
                if (printed) {
                    for (int t = 0; t < i; ++t)
                        separators += ks[static_cast<std::size_t>(t)] + (ks[static_cast<std::size_t>(t)] - m_list[static_cast<std::size_t>(t)]) * (s - 1);
                } else {
                    separators += offset - 1;  // rook-free column just right of group i
                }
            }
            if (ki < mi) return;
            term *= rook_sum(board_jprime(ki, offset), ki - mi, Rule::SameRow, WeightParams{s});
            offset += ki + 1 + (ki - mi) * (s - 1);
        }
        term.multiply_monomial(1, separators);
        rhs += term;
    });
    return make_report(printed ? "multisplit_2_printed" : "multisplit_2", list_params({{"n", n}}, m_list, {{"s", s}}),
                       stirling_s(n + groups - 1, m_total + groups - 1, s), std::move(rhs));
}

}  // namespace

IdentityReport check_multisplit_1(const std::vector<int>& m_list, int k, std::int64_t s) {
    const int parts = static_cast<int>(m_list.size());
    int total = 0;
    for (int v : m_list) total += v;
    LaurentPolynomial rhs;
    for_each_composition(k, parts, [&](const std::vector<int>& js) {
        LaurentPolynomial term(1L);
        std::int64_t offset = 0;
        for (int i = 0; i < parts && !term.is_zero(); ++i) {
            const int mi = m_list[static_cast<std::size_t>(i)];
            const int ji = js[static_cast<std::size_t>(i)];
            term *= rook_sum(board_jprime(mi, offset), mi - ji, Rule::SameRow, WeightParams{s});
            offset += ji * (1 - s) + s * mi;
        }
        rhs += term;
    });
    return make_report("multisplit_1", list_params({}, m_list, {{"k", k}, {"s", s}}), stirling_s(total, k, s), std::move(rhs));
}

IdentityReport check_multisplit_2(int n, const std::vector<int>& m_list, std::int64_t s) {
    return multisplit_2(n, m_list, s, false);
}

IdentityReport check_multisplit_2_printed(int n, const std::vector<int>& m_list, std::int64_t s) {
    return multisplit_2(n, m_list, s, true);
}

IdentityReport check_t1(int n, int m, int k, std::int64_t s, std::int64_t c, std::int64_t d) {
    LaurentPolynomial rhs;
    for (int r = 0; r <= n; ++r) {
        for (int j = 0; j <= m; ++j) {
            const std::int64_t a = d + m * c + (m - j) * (s - 1);
            rhs += stirling_cd(m, j, s, c, d) * qpow(r * a) * q_binomial(n, r, c + s - 1) * safe_cd(r, k - j, s, c, 0) *
                   bracket_run(a, c + s - 1, n - r);
        }
    }
    return make_report("t1", {{"n", n}, {"m", m}, {"k", k}, {"s", s}, {"c", c}, {"d", d}}, stirling_cd(n + m, k, s, c, d),
                       std::move(rhs));
}

namespace {

LaurentPolynomial t1_type2_rhs(int n, int m, int k, std::int64_t alpha, std::int64_t beta, std::int64_t rho) {
    LaurentPolynomial rhs;
    for (int r = 0; r <= n; ++r) {
        for (int j = 0; j <= m; ++j) {
            const std::int64_t a = beta * j - alpha * m - rho;
            rhs += type2(m, j, alpha, beta, rho) * qpow(r * a) * q_binomial(n, r, -alpha) * safe_t2(r, k - j, alpha, beta, 0) *
                   bracket_run(a, -alpha, n - r);
        }
    }
    return rhs;
}

ParamList type2_params(int n, int m, int k, std::int64_t alpha, std::int64_t beta, std::int64_t rho) {
    return {{"n", n}, {"m", m}, {"k", k}, {"alpha", alpha}, {"beta", beta}, {"rho", rho}};
}

LaurentPolynomial mezz_rhs(int n, int m, std::int64_t alpha, std::int64_t beta, std::int64_t rho, std::int64_t x0, bool with_xj) {
    const BigInt x(static_cast<long>(x0));
    LaurentPolynomial rhs;
    for (int r = 0; r <= n; ++r) {
        const LaurentPolynomial bell_r = bell_type2(r, alpha, beta, 0).evaluate(x);
        for (int j = 0; j <= m; ++j) {
            const std::int64_t a = beta * j - alpha * m - rho;
            LaurentPolynomial term = type2(m, j, alpha, beta, rho) * qpow(r * a) * q_binomial(n, r, -alpha) * bell_r *
                                     bracket_run(a, -alpha, n - r);
            if (with_xj) term.multiply_monomial(int_pow(x0, j), 0);
            rhs += term;
        }
    }
    return rhs;
}

LaurentPolynomial thm46_type2_rhs(int n, int m, int k, std::int64_t alpha, std::int64_t beta, std::int64_t rho, bool printed) {
    LaurentPolynomial rhs;
    for (int r = 0; r <= n; ++r) {
        for (int j = 0; j <= std::min(m, k); ++j) {
            const std::int64_t base = rho + alpha * m - beta * j;
            const LaurentPolynomial product =
                printed ? bracket_run(base, -beta, r - k + j) : bracket_run(-base, -beta, r - k + j);
            rhs += type2(m, j, alpha, beta, rho) * qpow(base * (j - k)) * q_binomial(r, k - j, -beta) *
                   type2(n, r, alpha, beta, 0) * product;
        }
    }
    return rhs;
}

LaurentPolynomial mezo_dual_rhs(int n, int m, bool printed) {
    BigInt total = 0;
    for (int r = 0; r <= n; ++r) {
        for (int j = 0; j <= m; ++j) {
            const BigInt chooser = printed ? binom(m, j) : binom(n, r);
            total += cycle_number(m, j) * rising(m, n - r) * chooser * factorial(r);
        }
    }
    return constant(total);
}

}  // namespace

IdentityReport check_t1_type2(int n, int m, int k, std::int64_t alpha, std::int64_t beta, std::int64_t rho) {
    return make_report("t1_type2", type2_params(n, m, k, alpha, beta, rho), type2(n + m, k, alpha, beta, rho),
                       t1_type2_rhs(n, m, k, alpha, beta, rho));
}

IdentityReport check_t1_type2_printed(int n, int m, int k, std::int64_t alpha, std::int64_t beta, std::int64_t rho) {
    return make_report("t1_type2_printed", type2_params(n, m, k, alpha, beta, rho), type2(n, k, alpha, beta, rho),
                       t1_type2_rhs(n, m, k, alpha, beta, rho));
}

IdentityReport check_mezz(int n, int m, std::int64_t alpha, std::int64_t beta, std::int64_t rho, std::int64_t x0) {
    return make_report("mezz", {{"n", n}, {"m", m}, {"alpha", alpha}, {"beta", beta}, {"rho", rho}, {"x", x0}},
                       bell_type2(n + m, alpha, beta, rho).evaluate(BigInt(static_cast<long>(x0))),
                       mezz_rhs(n, m, alpha, beta, rho, x0, true));
}

IdentityReport check_mezz_printed(int n, int m, std::int64_t alpha, std::int64_t beta, std::int64_t rho, std::int64_t x0) {
    return make_report("mezz_printed", {{"n", n}, {"m", m}, {"alpha", alpha}, {"beta", beta}, {"rho", rho}, {"x", x0}},
                       bell_type2(n + m, alpha, beta, rho).evaluate(BigInt(static_cast<long>(x0))),
                       mezz_rhs(n, m, alpha, beta, rho, x0, false));
}

IdentityReport check_thm46(int n, int m, int k, std::int64_t s, std::int64_t c, std::int64_t d) {
    LaurentPolynomial rhs;
    for (int r = 0; r <= n; ++r) {
        for (int j = 0; j <= std::min(m, k); ++j) {
            const std::int64_t a = d + m * c + (m - j) * (s - 1);
            rhs += stirling_cd(m, j, s, c, d) * qpow(a * (k - j)) * q_binomial(r, k - j, s - 1) * stirling_cd(n, r, s, c, 0) *
                   bracket_run(a, s - 1, r - k + j);
        }
    }
    return make_report("thm46", {{"n", n}, {"m", m}, {"k", k}, {"s", s}, {"c", c}, {"d", d}},
                       stirling_cd(n + m, k, s, c, d), std::move(rhs));
}

IdentityReport check_thm46_type2(int n, int m, int k, std::int64_t alpha, std::int64_t beta, std::int64_t rho) {
    return make_report("thm46_type2", type2_params(n, m, k, alpha, beta, rho), type2(n + m, k, alpha, beta, rho),
                       thm46_type2_rhs(n, m, k, alpha, beta, rho, false));
}

IdentityReport check_thm46_type2_printed(int n, int m, int k, std::int64_t alpha, std::int64_t beta, std::int64_t rho) {
    return make_report("thm46_type2_printed", type2_params(n, m, k, alpha, beta, rho), type2(n + m, k, alpha, beta, rho),
                       thm46_type2_rhs(n, m, k, alpha, beta, rho, true));
}

IdentityReport check_katriel(int n, int m) {
    LaurentPolynomial rhs;
    for (int r = 0; r <= n; ++r) {
        const LaurentPolynomial bell_r = bell_number(r, 0);
        for (int j = 0; j <= m; ++j) {
            LaurentPolynomial term = stirling_s(m, j, 0) * qpow(static_cast<Exponent>(r) * j) * bell_r *
                                     pow(bracket(j), static_cast<unsigned>(n - r));
            term.multiply_monomial(binom(n, r), 0);
            rhs += term;
        }
    }
    return make_report("katriel", {{"n", n}, {"m", m}}, bell_number(n + m, 0), std::move(rhs));
}

IdentityReport check_mezo_dual(int n, int m) {
    return make_report("mezo_dual", {{"n", n}, {"m", m}}, constant(factorial(n + m)), mezo_dual_rhs(n, m, false));
}

IdentityReport check_mezo_dual_printed(int n, int m) {
    return make_report("mezo_dual_printed", {{"n", n}, {"m", m}}, constant(factorial(n + m)), mezo_dual_rhs(n, m, true));
}

IdentityReport check_mezo_factorial(int n, int m, int variant) {
    BigInt total = 0;
    for (int r = 0; r <= n; ++r) {
        for (int j = 0; j <= m; ++j) {
            const BigInt cc = cycle_number(m, j) * cycle_number(n, r);
            if (cc == 0) continue;
            if (variant == 1) {
                for (int k = j; k <= j + r; ++k) total += cc * binom(r, k - j) * int_pow(m, r - k + j);
            } else {
                for (int k = 0; k <= r; ++k) total += cc * binom(r, k) * int_pow(m, k);
            }
        }
    }
    return make_report(variant == 1 ? "mezo_factorial" : "mezo_factorial_equiv", {{"n", n}, {"m", m}},
                       constant(factorial(n + m)), constant(total));
}

IdentityReport check_hsu_shiue_identity(int n, std::int64_t alpha, std::int64_t beta, std::int64_t rho) {
    IdentityReport r = check_hsu_shiue(n, alpha, beta, rho).plus_rho;
    r.identity = "hsu_shiue";
    return r;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::int64_t> span(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

int I(const ParamMap& p, const char* key) { return static_cast<int>(p.at(key)); }
std::int64_t L(const ParamMap& p, const char* key) { return p.at(key); }
Rule rule_of(const ParamMap& p) { return p.at("rule") == 0 ? Rule::SameRow : Rule::BottomShift; }

std::vector<int> m_list_of(const ParamMap& p) {
    std::vector<int> out;
    for (int i = 1; i <= I(p, "parts"); ++i) out.push_back(I(p, ("m" + std::to_string(i)).c_str()));
    return out;
}

bool nonneg(const ParamMap& p, std::initializer_list<const char*> keys) {
    return std::all_of(keys.begin(), keys.end(), [&](const char* k) { return p.at(k) >= 0; });
}

// Unused list slots must be 0 so each list is visited once.
bool list_ok(const ParamMap& p) {
    const auto parts = L(p, "parts");
    if (parts < 1 || parts > 3) return false;
    for (int i = 1; i <= 3; ++i) {
        const auto v = L(p, ("m" + std::to_string(i)).c_str());
        if (v < 0 || (i > parts && v != 0)) return false;
    }
    return true;
}

bool convolution_ok(const ParamMap& p, int total) {
    return nonneg(p, {"n", "m", "k"}) && L(p, "n") + L(p, "m") <= total && L(p, "k") <= L(p, "n") + L(p, "m");
}

bool pair_ok(const ParamMap& p, int total) { return nonneg(p, {"n", "m"}) && L(p, "n") + L(p, "m") <= total; }

bool oh_ok(const ParamMap& p, int total) {
    return nonneg(p, {"n", "k"}) && L(p, "k") <= L(p, "n") && L(p, "n") <= total && (L(p, "rule") == 0 || L(p, "rule") == 1);
}

std::vector<IdentityDescriptor> build_registry() {
    std::vector<IdentityDescriptor> r;
    const std::vector<std::string> oh_p{"n", "k", "alpha", "s", "rule"};
    const std::vector<std::string> conv{"n", "m", "k", "s"};
    const std::vector<std::string> cd_p{"n", "m", "k", "s", "c", "d"};
    const std::vector<std::string> t2_p{"n", "m", "k", "alpha", "beta", "rho"};
    const std::vector<std::string> mezz_p{"n", "m", "alpha", "beta", "rho", "x"};

    r.push_back({"oh", oh_p, "rook sum on J'_{n,alpha} = sum_r q^{alpha r} [n,r]_{q^s} S[r,k] prod [alpha+si]", false, "",
                 oh_ok, [](const ParamMap& p) { return check_oh(I(p, "n"), I(p, "k"), L(p, "alpha"), L(p, "s"), rule_of(p)); }});
    r.push_back({"oh1", oh_p, "rook sum on J'_{n,alpha} = sum_r q^{alpha k} S[n,r] [r,k]_{q^{s-1}} prod [alpha+i(s-1)]", false,
                 "supersedes oh1_proof_display", oh_ok,
                 [](const ParamMap& p) { return check_oh1(I(p, "n"), I(p, "k"), L(p, "alpha"), L(p, "s"), rule_of(p)); }});
    r.push_back({"oh1_proof_display", oh_p, "oh1 with prefactor q^alpha", true,
                 "the prefactor must be q^{alpha k}: the k rook-free cells of the first row each carry alpha", oh_ok,
                 [](const ParamMap& p) {
                     return check_oh1_proof_display(I(p, "n"), I(p, "k"), L(p, "alpha"), L(p, "s"), rule_of(p));
                 }});
    r.push_back({"spivey_general", conv, "S[n+m,k] as a double sum over S[m,j] S[r,k-j] with base q^s", false, "",
                 convolution_ok, [](const ParamMap& p) { return check_spivey_general(I(p, "n"), I(p, "m"), I(p, "k"), L(p, "s")); }});
    r.push_back({"bell_general", {"n", "m", "s", "x"}, "B[n+m;x] as a double sum over S[m,j] B[r;x] x^j", false, "", pair_ok,
                 [](const ParamMap& p) { return check_bell_general(I(p, "n"), I(p, "m"), L(p, "s"), L(p, "x")); }});
    r.push_back({"thm_ne", conv, "S[n+m,k] as a double sum over S[m,j] S[n,r] with base q^{s-1}", false, "", convolution_ok,
                 [](const ParamMap& p) { return check_thm_ne(I(p, "n"), I(p, "m"), I(p, "k"), L(p, "s")); }});
    r.push_back({"thm_ne_s0", {"n", "m", "k"}, "q-Stirling (s=0) form with [r,k-j]_{1/q} and [j][j-1]...[k-r+1]", false, "",
                 convolution_ok, [](const ParamMap& p) { return check_thm_ne_s0(I(p, "n"), I(p, "m"), I(p, "k")); }});
    r.push_back({"thm_sec", {"n", "m", "j", "s", "form"}, "S[n+1,m+j+1] split at the (m+1)-th rook-free column", false, "",
                 [](const ParamMap& p, int total) {
                     return nonneg(p, {"n", "m", "j"}) && L(p, "m") + L(p, "j") <= L(p, "n") && L(p, "n") <= total &&
                            (L(p, "form") == 1 || L(p, "form") == 2);
                 },
                 [](const ParamMap& p) {
                     return check_thm_sec(I(p, "n"), I(p, "m"), I(p, "j"), L(p, "s"), L(p, "form") == 1 ? SecForm::Hey1 : SecForm::Hey2);
                 }});
    r.push_back({"multisplit_1", {"parts", "m1", "m2", "m3", "k", "s"}, "S[m_1+...+m_p,k] over j_1+...+j_p=k", false, "",
                 [](const ParamMap& p, int total) {
                     return list_ok(p) && L(p, "k") >= 0 && L(p, "m1") + L(p, "m2") + L(p, "m3") <= total &&
                            L(p, "k") <= L(p, "m1") + L(p, "m2") + L(p, "m3");
                 },
                 [](const ParamMap& p) { return check_multisplit_1(m_list_of(p), I(p, "k"), L(p, "s")); }});
    auto ms2_ok = [](const ParamMap& p, int total) {
        return list_ok(p) && L(p, "n") >= 0 && L(p, "n") + L(p, "parts") - 1 <= total;
    };
    r.push_back({"multisplit_2", {"n", "parts", "m1", "m2", "m3", "s"},
                 "S[n+j-1,m_1+...+m_j+j-1] over k_1+...+k_j=n with rook-free separator columns", false,
                 "supersedes multisplit_2_printed", ms2_ok,
                 [](const ParamMap& p) { return check_multisplit_2(I(p, "n"), m_list_of(p), L(p, "s")); }});
    r.push_back({"multisplit_2_printed", {"n", "parts", "m1", "m2", "m3", "s"},
                 "multisplit_2 with separator exponent sum_{t<i}(k_t+(k_t-m_t)(s-1))", true,
                 "the separator before group i has total sum_{t<i}(k_t+1+(k_t-m_t)(s-1)) - 1; the printed exponent drops "
                 "the i-2 earlier separators (wrong once there are 3 groups)",
                 ms2_ok, [](const ParamMap& p) { return check_multisplit_2_printed(I(p, "n"), m_list_of(p), L(p, "s")); }});
    r.push_back({"t1", cd_p, "S^{c,d}[n+m,k] over S^{c,d}[m,j] S^{c,0}[r,k-j] with base q^{c+s-1}", false, "", convolution_ok,
                 [](const ParamMap& p) {
                     return check_t1(I(p, "n"), I(p, "m"), I(p, "k"), L(p, "s"), L(p, "c"), L(p, "d"));
                 }});
    r.push_back({"t1_type2", t2_p, "Type II form of t1 with left-hand index n+m", false, "supersedes t1_type2_printed",
                 convolution_ok, [](const ParamMap& p) {
                     return check_t1_type2(I(p, "n"), I(p, "m"), I(p, "k"), L(p, "alpha"), L(p, "beta"), L(p, "rho"));
                 }});
    r.push_back({"t1_type2_printed", t2_p, "Type II form of t1 with left-hand index n", true,
                 "the left-hand side must be indexed n+m, as in the (c,d) form", convolution_ok, [](const ParamMap& p) {
                     return check_t1_type2_printed(I(p, "n"), I(p, "m"), I(p, "k"), L(p, "alpha"), L(p, "beta"), L(p, "rho"));
                 }});
    r.push_back({"mezz", mezz_p, "Type II Bell convolution with the x^j factor", false, "supersedes mezz_printed", pair_ok,
                 [](const ParamMap& p) {
                     return check_mezz(I(p, "n"), I(p, "m"), L(p, "alpha"), L(p, "beta"), L(p, "rho"), L(p, "x"));
                 }});
    r.push_back({"mezz_printed", mezz_p, "Type II Bell convolution without x^j", true,
                 "x^j is missing from the right-hand side (holds only at x = 1)", pair_ok, [](const ParamMap& p) {
                     return check_mezz_printed(I(p, "n"), I(p, "m"), L(p, "alpha"), L(p, "beta"), L(p, "rho"), L(p, "x"));
                 }});
    r.push_back({"thm46", cd_p, "S^{c,d}[n+m,k] over S^{c,d}[m,j] S^{c,0}[n,r] with base q^{s-1}", false, "", convolution_ok,
                 [](const ParamMap& p) {
                     return check_thm46(I(p, "n"), I(p, "m"), I(p, "k"), L(p, "s"), L(p, "c"), L(p, "d"));
                 }});
    r.push_back({"thm46_type2", t2_p, "Type II form of thm46 with product [beta j - rho - alpha m - beta i]", false,
                 "supersedes thm46_type2_printed", convolution_ok, [](const ParamMap& p) {
                     return check_thm46_type2(I(p, "n"), I(p, "m"), I(p, "k"), L(p, "alpha"), L(p, "beta"), L(p, "rho"));
                 }});
    r.push_back({"thm46_type2_printed", t2_p, "Type II form of thm46 with product [rho + alpha m - beta(j+i)]", true,
                 "substituting (s,c,d) = (1-beta, beta-alpha, -rho) gives [beta j - rho - alpha m - beta i]; the printed "
                 "bracket negates the first three terms",
                 convolution_ok, [](const ParamMap& p) {
                     return check_thm46_type2_printed(I(p, "n"), I(p, "m"), I(p, "k"), L(p, "alpha"), L(p, "beta"), L(p, "rho"));
                 }});
    r.push_back({"katriel", {"n", "m"}, "B_q[n+m] = sum S_q[m,j] q^{rj} binom(n,r) B_q[r] [j]^{n-r}", false, "", pair_ok,
                 [](const ParamMap& p) { return check_katriel(I(p, "n"), I(p, "m")); }});
    r.push_back({"mezo_dual", {"n", "m"}, "(n+m)! = sum c(m,j) m^{rising n-r} binom(n,r) r!", false,
                 "supersedes mezo_dual_printed", pair_ok, [](const ParamMap& p) { return check_mezo_dual(I(p, "n"), I(p, "m")); }});
    r.push_back({"mezo_dual_printed", {"n", "m"}, "(n+m)! = sum c(m,j) m^{rising n-r} binom(m,j) r!", true,
                 "binom(m,j) must be binom(n,r): the s=1, q=1 case of the Bell convolution", pair_ok,
                 [](const ParamMap& p) { return check_mezo_dual_printed(I(p, "n"), I(p, "m")); }});
    r.push_back({"mezo_factorial", {"n", "m"}, "(n+m)! = sum c(m,j) binom(r,k-j) c(n,r) m^{r-k+j}", false, "", pair_ok,
                 [](const ParamMap& p) { return check_mezo_factorial(I(p, "n"), I(p, "m"), 1); }});
    r.push_back({"mezo_factorial_equiv", {"n", "m"}, "(n+m)! = sum c(m,j) binom(r,k) c(n,r) m^k", false, "", pair_ok,
                 [](const ParamMap& p) { return check_mezo_factorial(I(p, "n"), I(p, "m"), 2); }});
    auto hs_ok = [](const ParamMap& p, int total) { return L(p, "n") >= 0 && L(p, "n") <= total; };
    r.push_back({"hsu_shiue", {"n", "alpha", "beta", "rho"}, "(x|alpha)_n = sum_k type2(n,k)|_{q=1} (x+rho|beta)_k", false,
                 "supersedes hsu_shiue_printed", hs_ok,
                 [](const ParamMap& p) { return check_hsu_shiue_identity(I(p, "n"), L(p, "alpha"), L(p, "beta"), L(p, "rho")); }});
    r.push_back({"hsu_shiue_printed", {"n", "alpha", "beta", "rho"}, "(x|alpha)_n = sum_k type2(n,k)|_{q=1} (x-rho|beta)_k",
                 true, "with the Type II identification rho enters with the opposite sign", hs_ok, [](const ParamMap& p) {
                     IdentityReport rep = check_hsu_shiue(I(p, "n"), L(p, "alpha"), L(p, "beta"), L(p, "rho")).minus_rho;
                     rep.identity = "hsu_shiue_printed";
                     return rep;
                 }});
    return r;
}

}  // namespace

SweepSpec desk_sweep() { return SweepSpec{}; }

std::vector<std::int64_t> desk_range(const std::string& param) {
    if (param == "n" || param == "m" || param == "k" || param == "j") return span(0, 6);
    if (param == "s") return span(-1, 3);
    if (param == "alpha" || param == "beta" || param == "rho" || param == "c" || param == "d") return span(-1, 2);
    if (param == "x") return span(0, 2);
    if (param == "rule") return span(0, 1);
    if (param == "form") return span(1, 2);
    if (param == "parts") return span(1, 3);
    if (param == "m1" || param == "m2" || param == "m3") return span(0, 3);
    throw std::invalid_argument("no desk range for parameter '" + param + "'");
}

const std::vector<IdentityDescriptor>& registry() {
    static const std::vector<IdentityDescriptor> entries = build_registry();
    return entries;
}

const IdentityDescriptor& find_identity(std::string_view name) {
    for (const auto& d : registry())
        if (d.name == name) return d;
    throw UnknownIdentity("unknown identity '" + std::string(name) + "'");
}

std::vector<std::string> validated_identity_names() {
    std::vector<std::string> out;
    for (const auto& d : registry())
        if (!d.printed_variant) out.push_back(d.name);
    return out;
}

unsigned default_threads() {
    if (const char* env = std::getenv("ROOKCALC_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<IdentityReport> run_sweep(std::string_view name, const SweepSpec& spec, unsigned threads) {
    const IdentityDescriptor& id = find_identity(name);
    std::vector<std::vector<std::int64_t>> axes;
    for (const auto& param : id.params) {
        auto it = spec.ranges.find(param);
        axes.push_back(it != spec.ranges.end() ? it->second : desk_range(param));
    }
    std::vector<ParamMap> tuples;
    if (std::none_of(axes.begin(), axes.end(), [](const auto& a) { return a.empty(); })) {
        std::vector<std::size_t> index(axes.size(), 0);
        for (;;) {
            ParamMap p;
            for (std::size_t i = 0; i < axes.size(); ++i) p[id.params[i]] = axes[i][index[i]];
            if (id.feasible(p, spec.total_max)) tuples.push_back(std::move(p));
            std::size_t i = axes.size();
            while (i > 0) {
                --i;
                if (++index[i] < axes[i].size()) break;
                index[i] = 0;
                if (i == 0) {
                    i = axes.size() + 1;
                    break;
                }
            }
            if (i == axes.size() + 1 || axes.empty()) break;
        }
    }
    std::vector<IdentityReport> reports(tuples.size());
    const unsigned workers = std::min<std::size_t>(threads == 0 ? default_threads() : threads, std::max<std::size_t>(1, tuples.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < tuples.size(); ++i) reports[i] = id.evaluate(tuples[i]);
        return reports;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < tuples.size(); i += workers) reports[i] = id.evaluate(tuples[i]);
        });
    }
    for (auto& t : pool) t.join();
    return reports;
}

}  // namespace rookcalc::identities
