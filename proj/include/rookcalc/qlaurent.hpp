#pragma once

/**
 * @file qlaurent.hpp
 * @brief Exact Laurent polynomials in one variable q over GMP integers.
 *
 * A LaurentPolynomial is a finite map exponent -> coefficient with no zero
 * coefficients stored, so equality is structural.  On top of the ring
 * operations this header provides the q-analogues used throughout the
 * library: brackets [t]_{q^e}, q-factorials and Gaussian binomials.
 */

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "json.hpp"

namespace rookcalc {

using BigInt = mpz_class;
using BigRational = mpq_class;
using Exponent = std::int64_t;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Raised when a polynomial with negative exponents is evaluated at 0.
class EvaluationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class LaurentPolynomial {
public:
    using TermMap = std::map<Exponent, BigInt>;

    LaurentPolynomial() = default;
    LaurentPolynomial(long constant);  // NOLINT: integers promote to constants
    explicit LaurentPolynomial(const BigInt& constant);
    LaurentPolynomial(std::initializer_list<std::pair<const Exponent, BigInt>> terms);

    static LaurentPolynomial monomial(const BigInt& coefficient, Exponent exponent);
    static LaurentPolynomial from_terms(TermMap terms);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Coefficient of q^e (zero when absent).
    BigInt coefficient(Exponent e) const;
    /// Lowest / highest exponent; both throw std::logic_error on the zero polynomial.
    Exponent min_exponent() const;
    Exponent max_exponent() const;

    /// Sum of coefficients, i.e. the value at q = 1.
    BigInt coefficient_sum() const;

    /// p(q) -> p(q^factor).
    LaurentPolynomial substitute_power(Exponent factor) const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(const LaurentPolynomial& other);
    /// Multiply in place by c*q^e.
    LaurentPolynomial& multiply_monomial(const BigInt& c, Exponent e);
    /// Add c*q^e in place.
    LaurentPolynomial& add_term(const BigInt& c, Exponent e);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    LaurentPolynomial operator-() const;

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

private:
    TermMap terms_;
};

inline LaurentPolynomial monomial(const BigInt& c, Exponent e) { return LaurentPolynomial::monomial(c, e); }

/// non-negative integer power
LaurentPolynomial pow(const LaurentPolynomial& base, unsigned exponent);

/**
 * [t]_{q^e}.  For t >= 0 this is 1 + q^e + ... + q^{e(t-1)}; negative t uses
 * [-m] = -q^{-em}[m], which is the unique extension of (q^{et}-1)/(q^e-1).
 * With e = 0 the result is the constant t.
 */
LaurentPolynomial bracket(std::int64_t t, Exponent e = 1);

/// [1]_{q^e} [2]_{q^e} ... [n]_{q^e}; requires n >= 0.
LaurentPolynomial q_factorial(std::int64_t n, Exponent e = 1);

/**
 * Gaussian binomial in base q^e from the Pascal rule
 * G(n,k) = G(n-1,k-1) + q^{ek} G(n-1,k).  Zero outside 0 <= k <= n;
 * e = 0 gives the ordinary binomial coefficient.  Requires n >= 0.
 */
LaurentPolynomial q_binomial(std::int64_t n, std::int64_t k, Exponent e = 1);

/// Exact value at q = x.  Throws EvaluationError for x = 0 with negative exponents.
BigRational eval_at(const LaurentPolynomial& p, const BigRational& x);

/// Canonical text: increasing exponents, e.g. "2*q^-1 + 3", "1 + q + q^2", "0".
std::string to_string(const LaurentPolynomial& p);
/// Inverse of to_string; also accepts free spacing and an explicit leading sign.
LaurentPolynomial parse_polynomial(std::string_view text);

/// {"-1":"2","0":"3"}: decimal exponent -> decimal coefficient, increasing exponent.
nlohmann::ordered_json to_json(const LaurentPolynomial& p);
LaurentPolynomial from_json(const nlohmann::json& j);

/// Parses "3", "-2", "1/2".  Throws ParseError.
BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational& r);

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

}  // namespace rookcalc
