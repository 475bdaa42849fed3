#include "rookcalc/rookboard.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace rookcalc {

std::string to_string(Rule rule) { return rule == Rule::SameRow ? "same-row" : "bottom-shift"; }

Rule parse_rule(std::string_view text) {
    if (text == "same-row") return Rule::SameRow;
    if (text == "bottom-shift") return Rule::BottomShift;
    throw BoardError("unknown rule '" + std::string(text) + "' (expected same-row or bottom-shift)");
}

Board::Board(std::vector<std::vector<Preweight>> columns) : columns_(std::move(columns)) {
    for (std::size_t j = 1; j < columns_.size(); ++j) {
        if (columns_[j].size() < columns_[j - 1].size())
            throw BoardError("column lengths must weakly increase from right to left (column " + std::to_string(j + 1) + ")");
    }
}

const std::vector<Preweight>& Board::column(int j) const {
    if (j < 1 || j > column_count()) throw BoardError("column " + std::to_string(j) + " outside board");
    return columns_[static_cast<std::size_t>(j - 1)];
}

Preweight Board::preweight(int j, int bottom_offset) const {
    const auto& col = column(j);
    if (bottom_offset < 1 || bottom_offset > static_cast<int>(col.size()))
        throw BoardError("cell (" + std::to_string(j) + "," + std::to_string(bottom_offset) + ") outside board");
    return col[static_cast<std::size_t>(bottom_offset - 1)];
}

std::vector<int> Board::column_lengths() const {
    std::vector<int> out;
    out.reserve(columns_.size());
    for (const auto& c : columns_) out.push_back(static_cast<int>(c.size()));
    return out;
}

int Board::nonempty_columns() const {
    return static_cast<int>(std::count_if(columns_.begin(), columns_.end(), [](const auto& c) { return !c.empty(); }));
}

std::int64_t Board::cell_count() const {
    std::int64_t total = 0;
    for (const auto& c : columns_) total += static_cast<std::int64_t>(c.size());
    return total;
}

Board board_from_word(std::string_view word, const PreweightAssignment& pre) {
    if (word.empty()) throw BoardError("board word must be nonempty");
    std::vector<int> lengths;  // right to left
    int vs_after = 0;
    for (std::size_t i = word.size(); i-- > 0;) {
        const char letter = word[i];
        if (letter == 'V') {
            ++vs_after;
        } else if (letter == 'U') {
            lengths.push_back(vs_after);
        } else {
            throw BoardError(std::string("invalid letter '") + letter + "' in board word at position " + std::to_string(i));
        }
    }
    std::vector<std::vector<Preweight>> columns;
    columns.reserve(lengths.size());
    for (int len : lengths) columns.emplace_back(static_cast<std::size_t>(len), pre.uniform);
    for (const auto& [cell, value] : pre.overrides) {
        const auto [j, b] = cell;
        if (j < 1 || j > static_cast<int>(columns.size()) || b < 1 || b > static_cast<int>(columns[static_cast<std::size_t>(j - 1)].size()))
            throw BoardError("pre-weight for cell (" + std::to_string(j) + "," + std::to_string(b) + ") outside board");
        columns[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(b - 1)] = value;
    }
    return Board(std::move(columns));
}

Board board_jn(int n) {
    std::vector<std::vector<Preweight>> columns;
    for (int j = 1; j <= n; ++j) columns.emplace_back(static_cast<std::size_t>(j - 1), 1);
    return Board(std::move(columns));
}

Board board_jprime(int n, Preweight alpha) { return board_jcd(n, 1, alpha); }

Board board_jcd(int n, Preweight c, Preweight d) {
    std::vector<std::vector<Preweight>> columns;
    for (int j = 1; j <= n; ++j) {
        std::vector<Preweight> col(static_cast<std::size_t>(j), c);
        col[0] = d;
        columns.push_back(std::move(col));
    }
    return Board(std::move(columns));
}

Board board_jump(int n, int m) {
    if (n < 0 || m < 0) throw BoardError("jump board needs n, m >= 0");
    std::vector<std::vector<Preweight>> columns;
    for (int j = 1; j <= n; ++j) columns.emplace_back(static_cast<std::size_t>((j - 1) * m), 1);
    return Board(std::move(columns));
}

std::vector<Preweight> column_totals(const Board& b) {
    std::vector<Preweight> out;
    for (const auto& c : b.columns()) out.push_back(std::accumulate(c.begin(), c.end(), Preweight{0}));
    return out;
}

namespace {

Preweight parse_int(std::string_view text, std::string_view what) {
    std::string s(text);
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size()) throw BoardError("invalid " + std::string(what) + " '" + s + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Board parse_board_spec(std::string_view spec) {
    std::vector<std::string_view> items;
    for (std::size_t start = 0;;) {
        const auto semi = spec.find(';', start);
        items.push_back(trim(spec.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start)));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    std::string_view word;
    bool have_word = false;
    PreweightAssignment pre;
    for (std::string_view item : items) {
        if (item.empty()) continue;
        if (item.substr(0, 5) == "word=") {
            word = item.substr(5);
            have_word = true;
            continue;
        }
        if (item.substr(0, 4) == "pre=") item = item.substr(4);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            pre.uniform = parse_int(item, "uniform pre-weight");
            continue;
        }
        const auto cell = item.substr(0, eq);
        const auto comma = cell.find(',');
        if (comma == std::string_view::npos) throw BoardError("cell pre-weight must look like j,b=v: '" + std::string(item) + "'");
        const auto j = parse_int(trim(cell.substr(0, comma)), "column index");
        const auto b = parse_int(trim(cell.substr(comma + 1)), "bottom offset");
        pre.overrides[{static_cast<int>(j), static_cast<int>(b)}] = parse_int(trim(item.substr(eq + 1)), "pre-weight");
    }
    if (!have_word) throw BoardError("board spec needs word=<UV-string>");
    return board_from_word(word, pre);
}

int RookPlacement::rook_count() const {
    return static_cast<int>(std::count_if(offsets.begin(), offsets.end(), [](int b) { return b != 0; }));
}

std::string format_placement(const RookPlacement& p) {
    std::string out;
    for (std::size_t j = 0; j < p.offsets.size(); ++j) {
        if (p.offsets[j] == 0) continue;
        if (!out.empty()) out += ' ';
        out += std::to_string(j + 1) + ":" + std::to_string(p.offsets[j]);
    }
    return out.empty() ? "-" : out;
}

void validate_placement(const Board& b, const RookPlacement& p) {
    if (static_cast<int>(p.offsets.size()) != b.column_count()) throw BoardError("placement does not match board width");
    for (int j = 1; j <= b.column_count(); ++j) {
        const int off = p.offsets[static_cast<std::size_t>(j - 1)];
        if (off < 0 || off > b.column_length(j))
            throw BoardError("rook in column " + std::to_string(j) + " outside the board");
    }
}

namespace {

void place(const Board& b, std::size_t column, int remaining, RookPlacement& current,
           const std::function<void(const RookPlacement&)>& visit) {
    const std::size_t width = current.offsets.size();
    if (remaining == 0) {
        visit(current);
        return;
    }
    if (width - column < static_cast<std::size_t>(remaining)) return;
    const int len = static_cast<int>(b.columns()[column].size());
    for (int off = 1; off <= len; ++off) {
        current.offsets[column] = off;
        place(b, column + 1, remaining - 1, current, visit);
    }
    current.offsets[column] = 0;
    place(b, column + 1, remaining, current, visit);
}

}  // namespace

void for_each_placement(const Board& b, int k, const std::function<void(const RookPlacement&)>& visit) {
    if (k < 0) return;
    RookPlacement current{std::vector<int>(static_cast<std::size_t>(b.column_count()), 0)};
    place(b, 0, k, current, visit);
}

std::vector<RookPlacement> enumerate_placements(const Board& b, int k) {
    std::vector<RookPlacement> out;
    for_each_placement(b, k, [&](const RookPlacement& p) { out.push_back(p); });
    return out;
}

BigInt placement_count(const Board& b, int k) {
    if (k < 0) return 0;
    // e_k of the column lengths
    std::vector<BigInt> e(static_cast<std::size_t>(k + 1), 0);
    e[0] = 1;
    for (int len : b.column_lengths()) {
        for (int i = k; i >= 1; --i) e[static_cast<std::size_t>(i)] += e[static_cast<std::size_t>(i - 1)] * len;
    }
    return e[static_cast<std::size_t>(k)];
}

WeightFactors placement_factors(const Board& b, const RookPlacement& p, Rule rule, WeightParams params) {
    validate_placement(b, p);
    std::vector<std::vector<Preweight>> current = b.columns();
    WeightFactors out;
    int rooks = 0;
    const Preweight increment = params.s - 1;
    for (std::size_t j = 0; j < current.size(); ++j) {
        const auto& col = current[j];
        const int off = p.offsets[j];
        if (off == 0) {
            out.exponent += std::accumulate(col.begin(), col.end(), Preweight{0});
            continue;
        }
        out.exponent += std::accumulate(col.begin(), col.begin() + (off - 1), Preweight{0});
        out.rook_preweights.push_back(col[static_cast<std::size_t>(off - 1)]);
        ++rooks;
        if (increment == 0) continue;
        const int len = static_cast<int>(col.size());
        for (std::size_t left = j + 1; left < current.size(); ++left) {
            auto& target_col = current[left];
            const int target_len = static_cast<int>(target_col.size());
            const int target = rule == Rule::SameRow ? target_len - (len - off) : rooks + 1;
            if (target >= 1 && target <= target_len) target_col[static_cast<std::size_t>(target - 1)] += increment;
        }
    }
    return out;
}

namespace {

LaurentPolynomial expand(const WeightFactors& f) {
    LaurentPolynomial w = monomial(1, f.exponent);
    for (Preweight t : f.rook_preweights) w *= bracket(t);
    return w;
}

}  // namespace

LaurentPolynomial placement_weight(const Board& b, const RookPlacement& p, Rule rule, WeightParams params) {
    return expand(placement_factors(b, p, rule, params));
}

LaurentPolynomial rook_sum(const Board& b, int k, Rule rule, WeightParams params) {
    // Placements sharing an exponent and a multiset of rook pre-weights have equal weight; tally
    // those first so each distinct product is expanded once.
    std::map<std::pair<Exponent, std::vector<Preweight>>, std::int64_t> tally;
    for_each_placement(b, k, [&](const RookPlacement& p) {
        WeightFactors f = placement_factors(b, p, rule, params);
        std::sort(f.rook_preweights.begin(), f.rook_preweights.end());
        ++tally[{f.exponent, std::move(f.rook_preweights)}];
    });
    LaurentPolynomial total;
    for (const auto& [key, count] : tally) {
        LaurentPolynomial w = expand(WeightFactors{key.first, key.second});
        w.multiply_monomial(BigInt(static_cast<long>(count)), 0);
        total += w;
    }
    return total;
}

}  // namespace rookcalc
