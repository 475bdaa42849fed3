#pragma once

/**
 * @file identities.hpp
 * @brief Exact checks of the convolution identities for generalized q-Stirling
 *        and Bell numbers.
 *
 * Every check computes both sides as Laurent polynomials in q and compares
 * them exactly.  Where a formula as originally printed is wrong, two entries
 * exist: the validated form (checked against rook sums and recurrences) and a
 * `*_printed` variant kept for the record; the registry flags the latter and
 * carries a note describing the discrepancy.
 */

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rookcalc/report.hpp"
#include "rookcalc/rookboard.hpp"

namespace rookcalc::identities {

// Column-count identity for J'_{n,alpha}: both expansions of the rook sum.
IdentityReport check_oh(int n, int k, std::int64_t alpha, std::int64_t s, Rule rule);
IdentityReport check_oh1(int n, int k, std::int64_t alpha, std::int64_t s, Rule rule);
/// oh1 with the bare prefactor q^alpha instead of q^{alpha k}.
IdentityReport check_oh1_proof_display(int n, int k, std::int64_t alpha, std::int64_t s, Rule rule);
/// The r-th summands of the two expansions.
LaurentPolynomial oh_term(int n, int k, std::int64_t alpha, std::int64_t s, int r);
LaurentPolynomial oh1_term(int n, int k, std::int64_t alpha, std::int64_t s, int r);

IdentityReport check_spivey_general(int n, int m, int k, std::int64_t s);
IdentityReport check_bell_general(int n, int m, std::int64_t s, std::int64_t x0);
IdentityReport check_thm_ne(int n, int m, int k, std::int64_t s);
/// The s = 0 specialization written with [r, k-j]_{1/q} and [j]_q [j-1]_q ... [k-r+1]_q.
IdentityReport check_thm_ne_s0(int n, int m, int k);

enum class SecForm { Hey1, Hey2 };
IdentityReport check_thm_sec(int n, int m, int j, std::int64_t s, SecForm form);

/// S[m_1+...+m_p, k] as a sum over j_1+...+j_p = k of products of J'-board rook sums.
IdentityReport check_multisplit_1(const std::vector<int>& m_list, int k, std::int64_t s);
/// S[n+j-1, m_1+...+m_j+j-1] over k_1+...+k_j = n, j = m_list.size(); separator columns weighted exactly.
IdentityReport check_multisplit_2(int n, const std::vector<int>& m_list, std::int64_t s);
/// Same with the exponent sum_{t<i} (k_t + (k_t-m_t)(s-1)) read inside the product.
IdentityReport check_multisplit_2_printed(int n, const std::vector<int>& m_list, std::int64_t s);

IdentityReport check_t1(int n, int m, int k, std::int64_t s, std::int64_t c, std::int64_t d);
/// Type II form with left-hand index n+m.
IdentityReport check_t1_type2(int n, int m, int k, std::int64_t alpha, std::int64_t beta, std::int64_t rho);
/// Type II form with the printed left-hand index n.
IdentityReport check_t1_type2_printed(int n, int m, int k, std::int64_t alpha, std::int64_t beta, std::int64_t rho);

/// Bell form of the Type II convolution, including the x^j factor.
IdentityReport check_mezz(int n, int m, std::int64_t alpha, std::int64_t beta, std::int64_t rho, std::int64_t x0);
IdentityReport check_mezz_printed(int n, int m, std::int64_t alpha, std::int64_t beta, std::int64_t rho, std::int64_t x0);

IdentityReport check_thm46(int n, int m, int k, std::int64_t s, std::int64_t c, std::int64_t d);
/// Type II form with the product [beta j - rho - alpha m - beta i]_q.
IdentityReport check_thm46_type2(int n, int m, int k, std::int64_t alpha, std::int64_t beta, std::int64_t rho);
/// Type II form with the printed product [rho + alpha m - beta (j+i)]_q.
IdentityReport check_thm46_type2_printed(int n, int m, int k, std::int64_t alpha, std::int64_t beta, std::int64_t rho);

IdentityReport check_katriel(int n, int m);
/// (n+m)! = sum_{r,j} c(m,j) m^{rising n-r} binom(n,r) r!
IdentityReport check_mezo_dual(int n, int m);
/// Printed variant with binom(m,j) in place of binom(n,r).
IdentityReport check_mezo_dual_printed(int n, int m);
/// (n+m)! = sum c(m,j) binom(r,k-j) c(n,r) m^{r-k+j}  (variant 1)
///        = sum c(m,j) binom(r,k)   c(n,r) m^k          (variant 2)
IdentityReport check_mezo_factorial(int n, int m, int variant = 1);

/// Hsu-Shiue (x|alpha)_n = sum_k type2(n,k)(x+rho|beta)_k at q = 1 (the satisfied convention).
IdentityReport check_hsu_shiue_identity(int n, std::int64_t alpha, std::int64_t beta, std::int64_t rho);

// ---------------------------------------------------------------------------
// Registry and sweeps

class UnknownIdentity : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using ParamMap = std::map<std::string, std::int64_t>;

struct SweepSpec {
    /// Values per parameter name; a parameter missing here falls back to the desk range.
    std::map<std::string, std::vector<std::int64_t>> ranges;
    /// Cap on the largest Stirling index an instance touches (n+m for convolutions).
    int total_max = 6;
};

/// Desk ranges: n,m,k,j in 0..6, s in -1..3, alpha,beta,rho,c,d in -1..2, x in 0..2,
/// rule in {0 same-row, 1 bottom-shift}, form in {1,2}, parts in 1..3, m1..m3 in 0..3.
SweepSpec desk_sweep();
std::vector<std::int64_t> desk_range(const std::string& param);

struct IdentityDescriptor {
    std::string name;
    std::vector<std::string> params;  // sweep order
    std::string statement;
    /// Printed variants are kept for the record; they are not part of the validated suite.
    bool printed_variant = false;
    /// For a printed variant: what is wrong; for a validated replacement: which printed entry it supersedes.
    std::string note;
    std::function<bool(const ParamMap&, int total_max)> feasible;
    std::function<IdentityReport(const ParamMap&)> evaluate;
};

const std::vector<IdentityDescriptor>& registry();
/// Throws UnknownIdentity.
const IdentityDescriptor& find_identity(std::string_view name);
std::vector<std::string> validated_identity_names();

/// Cartesian product over the identity's parameters in registry order, skipping
/// infeasible tuples.  Reports come back in that deterministic order regardless
/// of `threads` (0 = ROOKCALC_THREADS or hardware concurrency).
std::vector<IdentityReport> run_sweep(std::string_view name, const SweepSpec& spec, unsigned threads = 0);

/// Thread count from ROOKCALC_THREADS, else hardware concurrency, at least 1.
unsigned default_threads();

}  // namespace rookcalc::identities
