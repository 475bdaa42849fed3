#pragma once

/**
 * @file stirling.hpp
 * @brief Generalized q-Stirling numbers from their recurrences.
 *
 * Three families share one triangular recurrence shape
 *   T[n,k] = q^{a(n,k)} T[n-1,k-1] + [b(n,k)]_q T[n-1,k]
 * with T[0,0] = 1 and T[n,k] = 0 outside 0 <= k <= n:
 *
 *   S_{s,q}[n,k]       a = s(n-1) - (s-1)(k-1),         b = s(n-1) - (s-1)k
 *   S^{c,d}_{s,q}[n,k] a = c(n-1) + d + (n-k)(s-1),     b = c(n-1) + d + (n-k-1)(s-1)
 *   Type II (alpha, beta, rho) = S^{beta-alpha, -rho}_{1-beta,q}
 *
 * For S^{c,d} the column k = 0 is produced by the recurrence itself; it is
 * zero exactly when d = 0 (and always for S_{s,q}).
 */

#include <cstdint>
#include <string>
#include <vector>

#include "rookcalc/qlaurent.hpp"
#include "rookcalc/report.hpp"

namespace rookcalc {

enum class StirlingKind { S, CD, Type2 };

std::string to_string(StirlingKind kind);

class StirlingTable {
public:
    static StirlingTable s_family(std::int64_t s);
    static StirlingTable cd_family(std::int64_t s, std::int64_t c, std::int64_t d);
    static StirlingTable type2_family(std::int64_t alpha, std::int64_t beta, std::int64_t rho);

    StirlingKind kind() const noexcept { return kind_; }
    /// Named parameters in declaration order, e.g. {("s",2)} or {("alpha",..),("beta",..),("rho",..)}.
    ParamList params() const;

    /// Memoized entry; fills rows lazily up to n.
    const LaurentPolynomial& at(int n, int k);
    /// Fill every row up to n_max so the table can be read concurrently afterwards.
    void fill(int n_max);
    int rows_filled() const noexcept { return static_cast<int>(rows_.size()) - 1; }

    /// Exponent of the q-power multiplying T[n-1,k-1] and the bracket argument multiplying T[n-1,k].
    std::int64_t shift_exponent(int n, int k) const;
    std::int64_t bracket_argument(int n, int k) const;

    /// Every memoized entry re-checked against its recurrence; returns the (n,k) that fail.
    std::vector<std::pair<int, int>> audit() const;

private:
    StirlingTable(StirlingKind kind, std::int64_t s, std::int64_t c, std::int64_t d);
    const LaurentPolynomial& stored(int n, int k) const;

    StirlingKind kind_;
    std::int64_t s_, c_, d_;            // recurrence parameters
    std::int64_t alpha_ = 0, beta_ = 0, rho_ = 0;  // Type II labels
    std::vector<std::vector<LaurentPolynomial>> rows_;
};

/// Memoized per thread.
LaurentPolynomial stirling_s(int n, int k, std::int64_t s);
LaurentPolynomial stirling_cd(int n, int k, std::int64_t s, std::int64_t c, std::int64_t d);
LaurentPolynomial type2(int n, int k, std::int64_t alpha, std::int64_t beta, std::int64_t rho);

/// sum_k coefficient(k) x^k
struct BellPolynomial {
    std::vector<LaurentPolynomial> coefficients;

    int degree_bound() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
    /// Value at an integer x.
    LaurentPolynomial evaluate(const BigInt& x) const;
};

BellPolynomial bell_poly(int n, std::int64_t s);
LaurentPolynomial bell_number(int n, std::int64_t s);
BellPolynomial bell_type2(int n, std::int64_t alpha, std::int64_t beta, std::int64_t rho);

/// h^{n-k} S_{s,q}[n,k], h an integer scalar.
LaurentPolynomial mssha(int n, int k, std::int64_t s, std::int64_t h);

/**
 * Hsu-Shiue relation (x|alpha)_n = sum_k S_{n,k} (x -+ rho|beta)_k at q = 1,
 * with S_{n,k} = type2(n,k,alpha,beta,rho) evaluated at q = 1.  Both sides are
 * polynomials in x (stored in a LaurentPolynomial whose variable is x).
 */
struct HsuShiueReport {
    IdentityReport minus_rho;  ///< shift (x - rho|beta)_k, as in the original relation
    IdentityReport plus_rho;   ///< shift (x + rho|beta)_k
    bool holds_for_some() const { return minus_rho.holds || plus_rho.holds; }
    /// "x-rho", "x+rho", "both" or "none"
    std::string convention() const;
};

HsuShiueReport check_hsu_shiue(int n, std::int64_t alpha, std::int64_t beta, std::int64_t rho);

/// (z|gamma)_n = z(z-gamma)...(z-(n-1)gamma) as a polynomial in z shifted by `shift`: (x+shift|gamma)_n.
LaurentPolynomial generalized_falling(std::int64_t shift, std::int64_t gamma, int n);

}  // namespace rookcalc
