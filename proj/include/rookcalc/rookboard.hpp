#pragma once

/**
 * @file rookboard.hpp
 * @brief Ferrers boards with integer pre-weights and weighted rook placements.
 *
 * Columns are numbered 1..n from right to left and every column is stored
 * bottom cell first, so a cell is addressed by (column j, bottom offset b)
 * with 1 <= b <= length(j).  Rows in the drawings are top-aligned: two cells
 * of different columns lie in the same row when they have the same distance
 * to the top of their column (length - b).
 *
 * Weight of a placement: columns are visited right to left with running
 * pre-weights.  A rook-free column contributes q^(sum of its pre-weights).  A
 * column with a rook at offset b contributes q^(sum below b) * [pre-weight at
 * b]_q; the cells above the rook are cancelled (pre-weight 0).  After a rook,
 * the rule adds s-1 to one cell of every column further left.
 */

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rookcalc/qlaurent.hpp"

namespace rookcalc {

using Preweight = std::int64_t;

class BoardError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Which cell of each column to the left of a rook receives the s-1 increment.
enum class Rule {
    SameRow,      ///< the cell in the same (top-aligned) row
    BottomShift,  ///< the i-th rook from the right hits bottom offset i+1
};

std::string to_string(Rule rule);
/// "same-row" / "bottom-shift"; throws BoardError otherwise.
Rule parse_rule(std::string_view text);

struct WeightParams {
    std::int64_t s = 1;
};

class Board {
public:
    Board() = default;
    /// columns[j-1] holds column j bottom-up. Throws BoardError unless lengths weakly increase.
    explicit Board(std::vector<std::vector<Preweight>> columns);

    int column_count() const noexcept { return static_cast<int>(columns_.size()); }
    int column_length(int j) const { return static_cast<int>(column(j).size()); }
    Preweight preweight(int j, int bottom_offset) const;
    const std::vector<Preweight>& column(int j) const;
    const std::vector<std::vector<Preweight>>& columns() const noexcept { return columns_; }

    std::vector<int> column_lengths() const;
    int nonempty_columns() const;
    std::int64_t cell_count() const;

    friend bool operator==(const Board&, const Board&) = default;

private:
    std::vector<std::vector<Preweight>> columns_;
};

struct PreweightAssignment {
    Preweight uniform = 1;
    /// (column, bottom offset) -> pre-weight, overriding the uniform value.
    std::map<std::pair<int, int>, Preweight> overrides;
};

/**
 * Board outlined by a word over {U, V}.  Column j (from the right) belongs to
 * the j-th U from the right and its length is the number of V's after that U,
 * so (VU)^n gives lengths 0..n-1 and leading V's are extraneous.
 */
Board board_from_word(std::string_view word, const PreweightAssignment& pre = {});

/// (VU)^n, all pre-weights 1: lengths 0, 1, ..., n-1.
Board board_jn(int n);
/// (VU)^n V with bottom cells alpha and all other cells 1: lengths 1..n.
Board board_jprime(int n, Preweight alpha);
/// (VU)^n V with bottom cells d and all other cells c: column j has total c(j-1)+d.
Board board_jcd(int n, Preweight c, Preweight d);
/// Column heights 0, m, 2m, ..., (n-1)m with pre-weight 1.
Board board_jump(int n, int m);

/// Per-column sum of default pre-weights, right to left.
std::vector<Preweight> column_totals(const Board& b);

/// "word=<UV>;pre=<int>" or "word=<UV>;pre=<int>;j,b=v;j,b=v"; unlisted cells default to 1
/// when no uniform value is given.
Board parse_board_spec(std::string_view spec);

struct RookPlacement {
    /// offsets[j-1] is the bottom offset of the rook in column j, 0 when the column is empty of rooks.
    std::vector<int> offsets;

    int rook_count() const;
    bool has_rook(int j) const { return offsets[static_cast<std::size_t>(j - 1)] != 0; }
    friend bool operator==(const RookPlacement&, const RookPlacement&) = default;
};

/// "j:b" pairs right to left, e.g. "2:1 3:2"; "-" for the empty placement.
std::string format_placement(const RookPlacement& p);

/// Throws BoardError unless every rook sits inside its column.
void validate_placement(const Board& b, const RookPlacement& p);

/// Calls visit once for every placement of exactly k rooks (at most one per column).
void for_each_placement(const Board& b, int k, const std::function<void(const RookPlacement&)>& visit);
std::vector<RookPlacement> enumerate_placements(const Board& b, int k);
/// Number of placements of k rooks, without enumerating them.
BigInt placement_count(const Board& b, int k);

/// Weight as q^exponent times the product of [t]_q over the rook cells' final pre-weights.
struct WeightFactors {
    Exponent exponent = 0;
    std::vector<Preweight> rook_preweights;  // right to left
};

WeightFactors placement_factors(const Board& b, const RookPlacement& p, Rule rule, WeightParams params);
LaurentPolynomial placement_weight(const Board& b, const RookPlacement& p, Rule rule, WeightParams params);

/// Sum of placement_weight over every placement of k rooks (0 when there are none).
LaurentPolynomial rook_sum(const Board& b, int k, Rule rule, WeightParams params);

}  // namespace rookcalc
