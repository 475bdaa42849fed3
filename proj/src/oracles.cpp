#include "rookcalc/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace rookcalc::oracle {

namespace {

void check_range(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) throw std::invalid_argument("oracle requires 0 <= k <= n");
}

void monotone(std::int64_t remaining, std::int64_t floor, std::int64_t top, Exponent sum, LaurentPolynomial& out) {
    if (remaining == 0) {
        out.add_term(1, sum);
        return;
    }
    for (std::int64_t t = floor; t <= top; ++t) monotone(remaining - 1, t, top, sum + t, out);
}

void composition(std::int64_t part, std::int64_t last_part, std::int64_t remaining, Exponent sum, LaurentPolynomial& out) {
    if (part == last_part) {
        out.add_term(1, sum + part * remaining);
        return;
    }
    for (std::int64_t t = 0; t <= remaining; ++t) composition(part + 1, last_part, remaining - t, sum + part * t, out);
}

// Restricted growth strings a_1 = 0, a_i <= 1 + max(a_1..a_{i-1}); blocks = max + 1.
void growth(int position, int n, int blocks, std::vector<std::int64_t>& by_blocks) {
    if (position == n) {
        ++by_blocks[static_cast<std::size_t>(blocks)];
        return;
    }
    for (int b = 0; b <= blocks; ++b) growth(position + 1, n, std::max(blocks, b + 1), by_blocks);
}

std::vector<std::int64_t> partitions_by_blocks(int n) {
    if (n < 0) throw std::invalid_argument("oracle requires n >= 0");
    std::vector<std::int64_t> by_blocks(static_cast<std::size_t>(n + 1), 0);
    if (n == 0) {
        by_blocks[0] = 1;
        return by_blocks;
    }
    growth(0, n, 0, by_blocks);
    return by_blocks;
}

}  // namespace

LaurentPolynomial q_binomial_monotone(std::int64_t n, std::int64_t k) {
    check_range(n, k);
    LaurentPolynomial out;
    monotone(n - k, 0, k, 0, out);
    return out;
}

LaurentPolynomial q_binomial_composition(std::int64_t n, std::int64_t k) {
    check_range(n, k);
    LaurentPolynomial out;
    composition(0, k, n - k, 0, out);
    return out;
}

std::int64_t partitions(int n, int k) {
    check_range(n, k);
    return partitions_by_blocks(n)[static_cast<std::size_t>(k)];
}

std::int64_t cycles(int n, int k) {
    check_range(n, k);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t count = 0;
    do {
        std::vector<bool> seen(perm.size(), false);
        int c = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (seen[i]) continue;
            ++c;
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
        }
        if (c == k) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

std::int64_t bell(int n) {
    auto by_blocks = partitions_by_blocks(n);
    return std::accumulate(by_blocks.begin(), by_blocks.end(), std::int64_t{0});
}

}  // namespace rookcalc::oracle
