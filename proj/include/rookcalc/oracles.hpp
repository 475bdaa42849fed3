#pragma once

// Brute-force enumerations used as independent ground truth.  None of these
// touch the recurrences or the Pascal rule; they only count.

#include <cstdint>

#include "rookcalc/qlaurent.hpp"

namespace rookcalc::oracle {

/// Sum over weakly increasing t_1 <= ... <= t_{n-k} in {0..k} of q^{t_1+...+t_{n-k}}.
LaurentPolynomial q_binomial_monotone(std::int64_t n, std::int64_t k);

/// Sum over compositions t_0+...+t_k = n-k (t_i >= 0) of q^{0 t_0 + 1 t_1 + ... + k t_k}.
LaurentPolynomial q_binomial_composition(std::int64_t n, std::int64_t k);

/// Set partitions of {1..n} into exactly k blocks, by restricted-growth strings.
std::int64_t partitions(int n, int k);
/// Permutations of {1..n} with exactly k cycles, by walking every permutation.
std::int64_t cycles(int n, int k);
/// All set partitions of {1..n}.
std::int64_t bell(int n);

}  // namespace rookcalc::oracle
