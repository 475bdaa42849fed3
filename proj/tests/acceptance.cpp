// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <algorithm>
#include <sstream>

#include "board_gen.hpp"
#include "cli_support.hpp"
#include "rookcalc/identities.hpp"
#include "rookcalc/oracles.hpp"
#include "rookcalc/rookboard.hpp"
#include "rookcalc/stirling.hpp"

using namespace rookcalc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Criterion {
public:
    explicit Criterion(Outcome& o) : o_(o) {}
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && o_.pass) {
            o_.pass = false;
            o_.detail = "first failure: " + what;
        }
    }
    long checks() const { return checks_; }

private:
    Outcome& o_;
    long checks_ = 0;
};

BigInt binom(int n, int k) {
    BigInt out = 0;
    if (k >= 0 && k <= n) mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt ipow(long base, int e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), BigInt(base).get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

std::string tag(std::initializer_list<std::pair<const char*, long>> fields) {
    std::string out;
    for (const auto& [k, v] : fields) out += std::string(out.empty() ? "" : " ") + k + "=" + std::to_string(v);
    return out;
}

Outcome oracle_matches_recurrence() {
    Outcome o;
    Criterion c(o);
    for (int s = -1; s <= 3; ++s)
        for (int n = 0; n <= 7; ++n)
            for (int k = 0; k <= n; ++k)
                c.expect(stirling_s(n, k, s) == rook_sum(board_jn(n), n - k, Rule::SameRow, {s}), tag({{"s", s}, {"n", n}, {"k", k}}));
    if (o.pass) o.detail = std::to_string(c.checks()) + " entries equal";
    return o;
}

Outcome reference_placements() {
    Outcome o;
    Criterion c(o);
    const RookPlacement on_jn{{0, 1, 2, 0, 1}};
    const RookPlacement on_jprime{{1, 2, 0, 1}};
    for (int s = 0; s <= 3; ++s) {
        c.expect(placement_weight(board_jn(5), on_jn, Rule::SameRow, {s}) == monomial(1, 2 * s + 2) * bracket(s),
                 "J_5 placement " + tag({{"s", s}}));
        for (int a = 0; a <= 3; ++a) {
            const auto expected = monomial(1, 2 * s + 2 * a) * bracket(a) * bracket(a) * bracket(s);
            c.expect(placement_weight(board_jprime(4, a), on_jprime, Rule::BottomShift, {s}) == expected,
                     "J'_4 bottom-shift placement " + tag({{"s", s}, {"alpha", a}}));
        }
    }
    if (o.pass) o.detail = std::to_string(c.checks()) + " symbolic weights equal";
    return o;
}

Outcome rule_and_preweight_invariance() {
    Outcome o;
    Criterion c(o);
    std::mt19937 rng(20240229);
    for (int pair = 0; pair < 200; ++pair) {
        const auto boards = rookcalc::testing::random_board_pair(rng, 6, 6);
        const std::int64_t s = rookcalc::testing::draw(rng, -1, 3);
        for (int k = 0; k <= boards.first.column_count(); ++k) {
            const auto ref = rook_sum(boards.first, k, Rule::SameRow, {s});
            const std::string where = tag({{"pair", pair}, {"k", k}, {"s", static_cast<long>(s)}});
            c.expect(rook_sum(boards.second, k, Rule::SameRow, {s}) == ref, where + " same-row");
            c.expect(rook_sum(boards.first, k, Rule::BottomShift, {s}) == ref, where + " bottom-shift");
            c.expect(rook_sum(boards.second, k, Rule::BottomShift, {s}) == ref, where + " bottom-shift, second distribution");
        }
    }
    if (o.pass) o.detail = "200 pairs, " + std::to_string(c.checks()) + " rook sums agree";
    return o;
}

Outcome identity_suite() {
    Outcome o;
    Criterion c(o);
    const std::vector<std::string> names{"oh",    "oh1",         "spivey_general", "bell_general", "thm_ne",
                                         "thm_sec", "multisplit_1", "multisplit_2",  "t1",           "t1_type2",
                                         "mezz",  "thm46",       "thm46_type2",    "katriel",      "mezo_dual",
                                         "mezo_factorial", "mezo_factorial_equiv"};
    const auto spec = identities::desk_sweep();
    std::size_t instances = 0;
    for (const auto& name : names) {
        const auto reports = identities::run_sweep(name, spec);
        instances += reports.size();
        c.expect(!reports.empty(), name + " has no instances");
        for (const auto& r : reports) c.expect(r.holds, name + " " + format_params(r.params));
    }
    // Each printed variant that fails must have a validated replacement and a note.
    std::size_t errata = 0;
    for (const auto& d : identities::registry()) {
        if (!d.printed_variant) continue;
        const auto reports = identities::run_sweep(d.name, spec);
        const bool fails = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return !r.holds; });
        if (!fails) continue;
        ++errata;
        c.expect(!d.note.empty(), d.name + " fails without a note");
        bool replaced = false;
        for (const auto& v : identities::registry())
            if (!v.printed_variant && v.note == "supersedes " + d.name) {
                const auto fixed = identities::run_sweep(v.name, spec);
                replaced = std::all_of(fixed.begin(), fixed.end(), [](const auto& r) { return r.holds; });
            }
        c.expect(replaced, d.name + " has no validated replacement");
    }
    if (o.pass)
        o.detail = std::to_string(names.size()) + " identities, " + std::to_string(instances) + " instances hold; " +
                   std::to_string(errata) + " printed variants fail and are replaced by validated forms";
    return o;
}

Outcome classical_reproduction() {
    Outcome o;
    Criterion c(o);
    const long bells[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (int n = 0; n <= 8; ++n) {
        BigInt row = 0;
        for (int k = 0; k <= n; ++k) row += stirling_s(n, k, 0).coefficient_sum();
        c.expect(row == bells[n] && row == oracle::bell(n), tag({{"bell", n}}));
        for (int k = 0; k <= n; ++k)
            c.expect(stirling_s(n, k, 1).coefficient_sum() == oracle::cycles(n, k), tag({{"cycles n", n}, {"k", k}}));
    }
    for (int n = 0; n <= 7; ++n)
        for (int m = 0; n + m <= 7; ++m) {
            BigInt rhs = 0;
            for (int k = 0; k <= n; ++k)
                for (int j = 0; j <= m; ++j) rhs += ipow(j, n - k) * binom(n, k) * oracle::partitions(m, j) * oracle::bell(k);
            c.expect(rhs == oracle::bell(n + m), tag({{"spivey n", n}, {"m", m}}));
        }
    for (int n = 0; n <= 8; ++n)
        for (int m = 0; n + m <= 8; ++m) {
            c.expect(identities::check_mezo_dual(n, m).holds, tag({{"mezo_dual n", n}, {"m", m}}));
            c.expect(identities::check_mezo_factorial(n, m, 1).holds, tag({{"mezo_factorial n", n}, {"m", m}}));
            c.expect(identities::check_mezo_factorial(n, m, 2).holds, tag({{"mezo_factorial_equiv n", n}, {"m", m}}));
        }
    if (o.pass) o.detail = std::to_string(c.checks()) + " exact integer checks";
    return o;
}

Outcome gaussian_binomials() {
    Outcome o;
    Criterion c(o);
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) {
            const auto g = q_binomial(n, k);
            const std::string where = tag({{"n", n}, {"k", k}});
            c.expect(g == oracle::q_binomial_monotone(n, k), where + " monotone");
            c.expect(g == oracle::q_binomial_composition(n, k), where + " composition");
            c.expect(g == q_binomial(n, n - k), where + " symmetry");
        }
    if (o.pass) o.detail = std::to_string(c.checks()) + " checks";
    return o;
}

Outcome hsu_shiue() {
    Outcome o;
    Criterion c(o);
    for (int n = 0; n <= 6; ++n) {
        const auto rep = check_hsu_shiue(n, 0, 1, 0);
        c.expect(rep.minus_rho.holds && rep.plus_rho.holds, tag({{"classical n", n}}));
    }
    std::set<std::string> conventions;
    for (int n = 0; n <= 6; ++n)
        for (int a = -1; a <= 2; ++a)
            for (int b = -1; b <= 2; ++b)
                for (int r = -1; r <= 2; ++r) {
                    const auto rep = check_hsu_shiue(n, a, b, r);
                    c.expect(rep.holds_for_some(), tag({{"n", n}, {"alpha", a}, {"beta", b}, {"rho", r}}));
                    if (rep.convention() != "both") conventions.insert(rep.convention());
                }
    c.expect(conventions.size() == 1, "conventions disagree across parameters");
    if (o.pass) o.detail = "convention " + *conventions.begin() + " holds in all " + std::to_string(c.checks() - 1) + " cases";
    return o;
}

Outcome cli_golden() {
    Outcome o;
    Criterion c(o);
    for (const auto& [file, command] : rookcalc::testing::golden_tables()) {
        const auto r = rookcalc::testing::run(rookcalc::testing::split_words(command));
        c.expect(r.code == 0 && r.out == rookcalc::testing::read_file(rookcalc::testing::golden_path(file)), command);
    }
    const auto contract = rookcalc::testing::read_file(rookcalc::testing::golden_path("exit_codes.txt"));
    c.expect(!contract.empty() && rookcalc::testing::replay_exit_codes(contract) == contract, "exit-code contract");
    if (o.pass) o.detail = "3 tables and the exit-code contract are byte-identical";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 oracle equals recurrence (n <= 7, s in -1..3)", oracle_matches_recurrence},
        {"2 reference placement weights on J_5 and J'_{4,alpha}", reference_placements},
        {"3 rule and pre-weight invariance (200 board pairs)", rule_and_preweight_invariance},
        {"4 identity suite over the desk sweep", identity_suite},
        {"5 classical Bell, Stirling, Spivey and factorial identities", classical_reproduction},
        {"6 Gaussian binomials against enumeration", gaussian_binomials},
        {"7 Hsu-Shiue relation and sign convention", hsu_shiue},
        {"8 CLI golden files", cli_golden},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << "  [" << secs << " s]  " << o.detail;
        std::cout << line.str() << std::endl;
        failed += o.pass ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all acceptance criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
    return failed == 0 ? 0 : 1;
}
