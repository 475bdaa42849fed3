#include "rookcalc/qlaurent.hpp"

#include <cctype>
#include <ostream>
#include <vector>

namespace rookcalc {

LaurentPolynomial::LaurentPolynomial(long constant) {
    if (constant != 0) terms_.emplace(0, BigInt(constant));
}

LaurentPolynomial::LaurentPolynomial(const BigInt& constant) {
    if (constant != 0) terms_.emplace(0, constant);
}

LaurentPolynomial::LaurentPolynomial(std::initializer_list<std::pair<const Exponent, BigInt>> terms) {
    for (const auto& [e, c] : terms) add_term(c, e);
}

LaurentPolynomial LaurentPolynomial::monomial(const BigInt& coefficient, Exponent exponent) {
    LaurentPolynomial p;
    if (coefficient != 0) p.terms_.emplace(exponent, coefficient);
    return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(TermMap terms) {
    LaurentPolynomial p;
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second == 0)
            it = terms.erase(it);
        else
            ++it;
    }
    p.terms_ = std::move(terms);
    return p;
}

BigInt LaurentPolynomial::coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

Exponent LaurentPolynomial::min_exponent() const {
    if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

Exponent LaurentPolynomial::max_exponent() const {
    if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

BigInt LaurentPolynomial::coefficient_sum() const {
    BigInt total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

LaurentPolynomial LaurentPolynomial::substitute_power(Exponent factor) const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.add_term(c, e * factor);
    return out;
}

LaurentPolynomial& LaurentPolynomial::add_term(const BigInt& c, Exponent e) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(c, e);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(-c, e);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
    *this = *this * other;
    return *this;
}

LaurentPolynomial& LaurentPolynomial::multiply_monomial(const BigInt& c, Exponent e) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    TermMap shifted;
    for (auto& [exp, coeff] : terms_) shifted.emplace_hint(shifted.end(), exp + e, coeff * c);
    terms_ = std::move(shifted);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    if (b.terms_.size() == 1) {
        out = a;
        return out.multiply_monomial(b.terms_.begin()->second, b.terms_.begin()->first);
    }
    if (a.terms_.size() == 1) {
        out = b;
        return out.multiply_monomial(a.terms_.begin()->second, a.terms_.begin()->first);
    }
    // Dense accumulation over the exponent window.
    const Exponent lo = a.min_exponent() + b.min_exponent();
    const Exponent hi = a.max_exponent() + b.max_exponent();
    std::vector<BigInt> acc(static_cast<std::size_t>(hi - lo + 1));
    BigInt tmp;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            mpz_addmul(acc[static_cast<std::size_t>(ea + eb - lo)].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
    }
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (acc[i] != 0) out.terms_.emplace_hint(out.terms_.end(), lo + static_cast<Exponent>(i), std::move(acc[i]));
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPolynomial pow(const LaurentPolynomial& base, unsigned exponent) {
    LaurentPolynomial result(1L);
    LaurentPolynomial b = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return result;
}

LaurentPolynomial bracket(std::int64_t t, Exponent e) {
    if (e == 0) return LaurentPolynomial(BigInt(static_cast<long>(t)));
    if (t >= 0) {
        LaurentPolynomial out;
        for (std::int64_t i = 0; i < t; ++i) out.add_term(1, e * i);
        return out;
    }
    LaurentPolynomial out = bracket(-t, e);
    return out.multiply_monomial(-1, e * t);
}

LaurentPolynomial q_factorial(std::int64_t n, Exponent e) {
    if (n < 0) throw std::invalid_argument("q_factorial: n must be non-negative");
    LaurentPolynomial out(1L);
    for (std::int64_t i = 2; i <= n; ++i) out *= bracket(i, e);
    return out;
}

LaurentPolynomial q_binomial(std::int64_t n, std::int64_t k, Exponent e) {
    if (n < 0) throw std::invalid_argument("q_binomial: n must be non-negative");
    if (k < 0 || k > n) return {};
    // Row-by-row Pascal rule; row[i] holds G(current, i).
    std::vector<LaurentPolynomial> row{LaurentPolynomial(1L)};
    for (std::int64_t m = 1; m <= n; ++m) {
        std::vector<LaurentPolynomial> next(static_cast<std::size_t>(m + 1));
        next[0] = LaurentPolynomial(1L);
        next[static_cast<std::size_t>(m)] = LaurentPolynomial(1L);
        for (std::int64_t i = 1; i < m; ++i) {
            LaurentPolynomial shifted = row[static_cast<std::size_t>(i)];
            shifted.multiply_monomial(1, e * i);
            next[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i - 1)] + shifted;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

namespace {

BigRational rational_power(const BigRational& x, Exponent e) {
    BigRational base = x;
    if (e < 0) {
        base = 1 / x;
        e = -e;
    }
    BigRational out = 1;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    out = BigRational(num, den);
    out.canonicalize();
    return out;
}

}  // namespace

BigRational eval_at(const LaurentPolynomial& p, const BigRational& x) {
    if (p.is_zero()) return 0;
    if (x == 0) {
        if (p.min_exponent() < 0) throw EvaluationError("evaluation at q = 0 of a polynomial with negative exponents");
        return BigRational(p.coefficient(0));
    }
    BigRational total = 0;
    for (const auto& [e, c] : p.terms()) total += BigRational(c) * rational_power(x, e);
    total.canonicalize();
    return total;
}

std::string to_string(const LaurentPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c < 0;
        BigInt magnitude = abs(c);
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (e == 0) {
            out += magnitude.get_str();
            continue;
        }
        if (magnitude != 1) out += magnitude.get_str() + "*";
        out += 'q';
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

namespace {

class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view text) : text_(text) {}

    LaurentPolynomial parse() {
        LaurentPolynomial out;
        skip_space();
        if (at_end()) fail("empty polynomial");
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        parse_term(out, sign);
        for (;;) {
            skip_space();
            if (at_end()) break;
            char op = peek();
            if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
            ++pos_;
            parse_term(out, op == '-' ? -1 : 1);
        }
        return out;
    }

private:
    void parse_term(LaurentPolynomial& out, int sign) {
        skip_space();
        BigInt coeff = 1;
        bool have_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = BigInt(read_digits());
            have_coeff = true;
        }
        skip_space();
        Exponent e = 0;
        bool have_q = false;
        if (!at_end() && peek() == '*') {
            if (!have_coeff) fail("'*' without coefficient");
            ++pos_;
            skip_space();
            if (at_end() || peek() != 'q') fail("expected 'q' after '*'");
        }
        if (!at_end() && peek() == 'q') {
            ++pos_;
            have_q = true;
            e = 1;
            skip_space();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_space();
                e = read_exponent();
            }
        }
        if (!have_coeff && !have_q) fail("expected a term");
        out.add_term(sign * coeff, e);
    }

    Exponent read_exponent() {
        bool negative = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            negative = peek() == '-';
            ++pos_;
        }
        const std::size_t start = pos_;
        std::string digits = read_digits();
        BigInt value(digits);
        if (!value.fits_slong_p()) {
            pos_ = start;
            fail("exponent out of range");
        }
        long v = value.get_si();
        return negative ? -v : v;
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

nlohmann::ordered_json to_json(const LaurentPolynomial& p) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.get_str();
    return j;
}

LaurentPolynomial from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("polynomial JSON must be an object", 0);
    LaurentPolynomial out;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string()) throw ParseError("coefficient for exponent " + key + " must be a string", 0);
        Exponent e = 0;
        try {
            std::size_t used = 0;
            e = std::stoll(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw ParseError("invalid exponent '" + key + "'", 0);
        }
        BigInt c;
        if (c.set_str(value.get<std::string>(), 10) != 0) throw ParseError("invalid coefficient for exponent " + key, 0);
        out.add_term(c, e);
    }
    return out;
}

BigRational parse_rational(std::string_view text) {
    std::string s(text);
    auto valid_int = [](const std::string& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    const auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true)) throw ParseError("invalid rational numerator '" + num + "'", 0);
    if (!valid_int(den, false)) throw ParseError("invalid rational denominator '" + den + "'", slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    BigInt n(num), d(den);
    if (d == 0) throw ParseError("zero denominator", slash + 1);
    BigRational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const BigRational& r) {
    BigRational canonical = r;
    canonical.canonicalize();
    return canonical.get_str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << to_string(p); }

}  // namespace rookcalc
