#include "rookcalc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "rookcalc/identities.hpp"
#include "rookcalc/rookboard.hpp"
#include "rookcalc/stirling.hpp"

namespace rookcalc::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kTableCap = 20;
constexpr int kCrossCheckCap = 8;
constexpr int kBellCap = 20;
const BigInt kPlacementCap = 10000000;
constexpr std::size_t kFailuresShown = 5;  // per identity in pretty output, unless --verbose

/// Invalid user input that maps to exit code 3.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Pretty, Csv, Json };

const std::map<std::string, Format> kFormats{{"pretty", Format::Pretty}, {"csv", Format::Csv}, {"json", Format::Json}};

std::optional<BigRational> parse_q(const std::string& text) {
    if (text.empty()) return std::nullopt;
    try {
        return parse_rational(text);
    } catch (const std::exception& e) {
        throw InputError("--q: " + std::string(e.what()));
    }
}

/// Canonical text of a value, evaluated at q when requested.
std::string render(const LaurentPolynomial& p, const std::optional<BigRational>& q) {
    if (!q) return to_string(p);
    return to_string(eval_at(p, *q));
}

void put_value(ordered_json& entry, const LaurentPolynomial& p, const std::optional<BigRational>& q) {
    entry["value"] = render(p, q);
    if (!q) entry["terms"] = to_json(p);
}

ordered_json params_json(const ParamList& params) {
    ordered_json out = ordered_json::object();
    for (const auto& [name, value] : params) out[name] = value;
    return out;
}

// ---------------------------------------------------------------------------

struct TableOptions {
    std::string kind = "s";
    std::int64_t s = 1, c = 1, d = 0, alpha = 0, beta = 1, rho = 0;
    int n_max = 6;
    std::string q;
    Format format = Format::Pretty;
    bool cross_check = false;
};

StirlingTable make_table(const TableOptions& o) {
    if (o.kind == "s") return StirlingTable::s_family(o.s);
    if (o.kind == "cd") return StirlingTable::cd_family(o.s, o.c, o.d);
    if (o.kind == "type2") return StirlingTable::type2_family(o.alpha, o.beta, o.rho);
    throw InputError("--kind must be s, cd or type2");
}

/// Rook sum on the board that defines entry (n,k) of the table.
LaurentPolynomial board_value(const TableOptions& o, int n, int k) {
    if (o.kind == "s") return rook_sum(board_jn(n), n - k, Rule::SameRow, WeightParams{o.s});
    if (o.kind == "cd") return rook_sum(board_jcd(n, o.c, o.d), n - k, Rule::SameRow, WeightParams{o.s});
    return rook_sum(board_jcd(n, o.beta - o.alpha, -o.rho), n - k, Rule::SameRow, WeightParams{1 - o.beta});
}

int cmd_table(const TableOptions& o, std::ostream& out, std::ostream& err) {
    const int cap = o.cross_check ? kCrossCheckCap : kTableCap;
    if (o.n_max < 0 || o.n_max > cap)
        throw InputError("--n-max must lie in 0.." + std::to_string(cap) + (o.cross_check ? " with --cross-check" : ""));
    const auto q = parse_q(o.q);
    StirlingTable table = make_table(o);
    table.fill(o.n_max);

    int mismatches = 0;
    if (o.cross_check) {
        for (int n = 0; n <= o.n_max; ++n) {
            for (int k = 0; k <= n; ++k) {
                const LaurentPolynomial expected = board_value(o, n, k);
                if (expected != table.at(n, k)) {
                    ++mismatches;
                    err << "cross-check mismatch at n=" << n << " k=" << k << ": recurrence " << table.at(n, k)
                        << ", rook sum " << expected << '\n';
                }
            }
        }
    }

    switch (o.format) {
        case Format::Pretty:
            for (int n = 0; n <= o.n_max; ++n) {
                out << n << ':';
                for (int k = 0; k <= n; ++k) out << (k == 0 ? " " : ", ") << render(table.at(n, k), q);
                out << '\n';
            }
            break;
        case Format::Csv:
            out << "n,k,value\n";
            for (int n = 0; n <= o.n_max; ++n)
                for (int k = 0; k <= n; ++k) out << n << ',' << k << ',' << render(table.at(n, k), q) << '\n';
            break;
        case Format::Json: {
            ordered_json doc;
            doc["kind"] = o.kind;
            doc["params"] = params_json(table.params());
            doc["q"] = q ? ordered_json(to_string(*q)) : ordered_json(nullptr);
            doc["n_max"] = o.n_max;
            if (o.cross_check) doc["cross_check"] = mismatches == 0 ? "ok" : "mismatch";
            ordered_json entries = ordered_json::array();
            for (int n = 0; n <= o.n_max; ++n) {
                for (int k = 0; k <= n; ++k) {
                    ordered_json e{{"n", n}, {"k", k}};
                    put_value(e, table.at(n, k), q);
                    entries.push_back(std::move(e));
                }
            }
            doc["entries"] = std::move(entries);
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return mismatches == 0 ? kOk : kCrossCheckMismatch;
}

// ---------------------------------------------------------------------------

struct BellOptions {
    std::optional<std::int64_t> s, alpha, beta, rho;
    std::int64_t x = 1;
    int n_max = 6;
    std::string q;
    Format format = Format::Pretty;
};

int cmd_bell(const BellOptions& o, std::ostream& out) {
    if (o.n_max < 0 || o.n_max > kBellCap) throw InputError("--n-max must lie in 0.." + std::to_string(kBellCap));
    const bool type2_family = o.alpha || o.beta || o.rho;
    if (type2_family && o.s) throw InputError("give either --s or --alpha/--beta/--rho, not both");
    const auto q = parse_q(o.q);

    ParamList params;
    std::vector<LaurentPolynomial> values;
    if (type2_family) {
        const std::int64_t a = o.alpha.value_or(0), b = o.beta.value_or(1), r = o.rho.value_or(0);
        params = {{"alpha", a}, {"beta", b}, {"rho", r}};
        for (int n = 0; n <= o.n_max; ++n) values.push_back(bell_type2(n, a, b, r).evaluate(BigInt(static_cast<long>(o.x))));
    } else {
        const std::int64_t s = o.s.value_or(1);
        params = {{"s", s}};
        for (int n = 0; n <= o.n_max; ++n) values.push_back(bell_poly(n, s).evaluate(BigInt(static_cast<long>(o.x))));
    }
    params.emplace_back("x", o.x);

    switch (o.format) {
        case Format::Pretty:
            for (int n = 0; n <= o.n_max; ++n) out << n << ": " << render(values[static_cast<std::size_t>(n)], q) << '\n';
            break;
        case Format::Csv:
            out << "n,value\n";
            for (int n = 0; n <= o.n_max; ++n) out << n << ',' << render(values[static_cast<std::size_t>(n)], q) << '\n';
            break;
        case Format::Json: {
            ordered_json doc;
            doc["family"] = type2_family ? "type2" : "s";
            doc["params"] = params_json(params);
            doc["q"] = q ? ordered_json(to_string(*q)) : ordered_json(nullptr);
            ordered_json entries = ordered_json::array();
            for (int n = 0; n <= o.n_max; ++n) {
                ordered_json e{{"n", n}};
                put_value(e, values[static_cast<std::size_t>(n)], q);
                entries.push_back(std::move(e));
            }
            doc["entries"] = std::move(entries);
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------

struct OracleOptions {
    std::string board;
    int rooks = 0;
    std::string rule = "same-row";
    std::int64_t s = 1;
    bool list = false;
    std::string q;
    Format format = Format::Pretty;
};

int cmd_oracle(const OracleOptions& o, std::ostream& out) {
    Board board;
    Rule rule;
    try {
        board = parse_board_spec(o.board);
        rule = parse_rule(o.rule);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (o.rooks < 0) throw InputError("--rooks must be non-negative");
    const auto q = parse_q(o.q);
    const BigInt count = placement_count(board, o.rooks);
    if (count > kPlacementCap) {
        std::ostringstream msg;
        msg << "board admits " << count << " placements of " << o.rooks << " rooks; the cap is " << kPlacementCap;
        throw std::length_error(msg.str());
    }
    const WeightParams params{o.s};
    const LaurentPolynomial total = rook_sum(board, o.rooks, rule, params);

    std::vector<std::pair<std::string, LaurentPolynomial>> listing;
    if (o.list) {
        for_each_placement(board, o.rooks, [&](const RookPlacement& p) {
            listing.emplace_back(format_placement(p), placement_weight(board, p, rule, params));
        });
    }

    switch (o.format) {
        case Format::Pretty:
            for (const auto& [where, w] : listing) out << where << "  " << render(w, q) << '\n';
            if (o.list) out << "sum  ";
            out << render(total, q) << '\n';
            break;
        case Format::Csv:
            out << "placement,weight\n";
            for (const auto& [where, w] : listing) out << where << ',' << render(w, q) << '\n';
            out << "sum," << render(total, q) << '\n';
            break;
        case Format::Json: {
            ordered_json doc;
            doc["board"] = o.board;
            doc["column_lengths"] = board.column_lengths();
            doc["rooks"] = o.rooks;
            doc["rule"] = to_string(rule);
            doc["s"] = o.s;
            doc["placements"] = count.get_str();
            doc["q"] = q ? ordered_json(to_string(*q)) : ordered_json(nullptr);
            put_value(doc, total, q);
            if (o.list) {
                ordered_json items = ordered_json::array();
                for (const auto& [where, w] : listing) {
                    ordered_json e{{"placement", where}};
                    put_value(e, w, q);
                    items.push_back(std::move(e));
                }
                doc["listing"] = std::move(items);
            }
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------

/// "lo..hi", "a,b,c" or a single integer.
std::vector<std::int64_t> parse_range(const std::string& name, const std::string& text) {
    auto to_int = [&](const std::string& piece) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(piece, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != piece.size()) throw InputError("--" + name + ": cannot read '" + text + "' as a range");
        return static_cast<std::int64_t>(v);
    };
    std::vector<std::int64_t> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const auto lo = to_int(text.substr(0, dots));
        const auto hi = to_int(text.substr(dots + 2));
        for (auto v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::stringstream in(text);
    for (std::string piece; std::getline(in, piece, ',');) out.push_back(to_int(piece));
    if (out.empty()) throw InputError("--" + name + ": empty range");
    return out;
}

const std::vector<std::string> kSweepParams{"n", "m", "k", "j", "s", "alpha", "beta", "rho", "c", "d",
                                            "x", "rule", "form", "parts", "m1", "m2", "m3"};

struct VerifyOptions {
    std::string identity;
    std::string preset = "desk";
    std::optional<int> n_max, m_max;
    int total_max = 6;
    std::map<std::string, std::string> ranges;
    Format format = Format::Pretty;
    bool include_printed = false;
    bool verbose = false;
    unsigned threads = 0;
};

struct IdentityOutcome {
    const identities::IdentityDescriptor* descriptor;
    std::vector<IdentityReport> reports;
    std::size_t held = 0;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
    if (o.preset != "desk") throw InputError("--preset: only 'desk' is defined");
    identities::SweepSpec spec;
    spec.total_max = o.total_max;
    for (const auto& [name, text] : o.ranges) spec.ranges[name] = parse_range(name, text);
    auto cap = [&](const std::string& name, const std::optional<int>& bound) {
        if (!bound) return;
        if (*bound < 0) throw InputError("--" + name + "-max must be non-negative");
        auto& r = spec.ranges[name];
        if (!o.ranges.count(name)) {
            r.clear();
            for (std::int64_t v = 0; v <= *bound; ++v) r.push_back(v);
        }
        r.erase(std::remove_if(r.begin(), r.end(), [&](std::int64_t v) { return v > *bound; }), r.end());
    };
    cap("n", o.n_max);
    cap("m", o.m_max);

    std::vector<const identities::IdentityDescriptor*> selected;
    const bool all = o.identity == "all";
    if (all) {
        for (const auto& d : identities::registry())
            if (!d.printed_variant || o.include_printed) selected.push_back(&d);
    } else {
        selected.push_back(&identities::find_identity(o.identity));
    }

    std::vector<IdentityOutcome> outcomes;
    bool ok = true;
    for (const auto* d : selected) {
        IdentityOutcome oc{d, identities::run_sweep(d->name, spec, o.threads)};
        oc.held = static_cast<std::size_t>(std::count_if(oc.reports.begin(), oc.reports.end(), [](const auto& r) { return r.holds; }));
        // A printed variant only decides the exit code when it was asked for by name.
        const bool counts = !d->printed_variant || !all;
        if (counts && oc.held != oc.reports.size()) ok = false;
        outcomes.push_back(std::move(oc));
    }

    switch (o.format) {
        case Format::Pretty:
            for (const auto& oc : outcomes) {
                const bool pass = oc.held == oc.reports.size();
                out << (pass ? "PASS " : "FAIL ") << oc.descriptor->name << (oc.descriptor->printed_variant ? " (printed variant)" : "")
                    << ": " << oc.held << '/' << oc.reports.size() << " instances hold\n";
                if (!oc.descriptor->note.empty()) out << "  note: " << oc.descriptor->note << '\n';
                std::size_t shown = 0;
                for (const auto& r : oc.reports) {
                    if (r.holds && !o.verbose) continue;
                    if (!o.verbose && shown == kFailuresShown) break;
                    ++shown;
                    out << "  " << (r.holds ? "ok   " : "fail ") << format_params(r.params);
                    if (!r.holds) out << "  diff = " << r.diff;
                    out << '\n';
                }
                const std::size_t failed = oc.reports.size() - oc.held;
                if (!o.verbose && failed > shown) out << "  ... " << failed - shown << " more failing instances\n";
            }
            out << (ok ? "all checks hold" : "some checks fail") << '\n';
            break;
        case Format::Csv:
            out << "identity,params,holds\n";
            for (const auto& oc : outcomes)
                for (const auto& r : oc.reports) out << r.identity << ',' << format_params(r.params) << ',' << (r.holds ? "true" : "false") << '\n';
            break;
        case Format::Json: {
            ordered_json doc;
            doc["all_hold"] = ok;
            ordered_json list = ordered_json::array();
            for (const auto& oc : outcomes) {
                ordered_json e;
                e["identity"] = oc.descriptor->name;
                e["statement"] = oc.descriptor->statement;
                e["printed_variant"] = oc.descriptor->printed_variant;
                e["note"] = oc.descriptor->note;
                e["instances"] = oc.reports.size();
                e["held"] = oc.held;
                ordered_json reports = ordered_json::array();
                for (const auto& r : oc.reports)
                    if (!r.holds || o.verbose) reports.push_back(to_json(r));
                e[o.verbose ? "reports" : "failures"] = std::move(reports);
                list.push_back(std::move(e));
            }
            doc["identities"] = std::move(list);
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return ok ? kOk : kIdentityFailed;
}

int cmd_list(std::ostream& out) {
    for (const auto& d : identities::registry()) {
        out << d.name << (d.printed_variant ? " (printed variant)" : "") << "\n  params: ";
        for (std::size_t i = 0; i < d.params.size(); ++i) out << (i ? " " : "") << d.params[i];
        out << "\n  " << d.statement << '\n';
        if (!d.note.empty()) out << "  note: " << d.note << '\n';
    }
    return kOk;
}

void add_format(CLI::App* cmd, Format& target) {
    cmd->add_option("--format", target, "Output format: pretty, csv or json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized q-Stirling numbers: tables, rook sums and identity checks", "rookcalc"};
    app.require_subcommand(1);
    std::string output_path;
    app.add_option("-o,--output", output_path, "Write output to this file instead of standard output");

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Triangle of q-Stirling numbers from the recurrence");
    table_cmd->add_option("--kind", table.kind, "s, cd or type2")->check(CLI::IsMember({"s", "cd", "type2"}));
    table_cmd->add_option("--s", table.s, "Pre-weight increment s");
    table_cmd->add_option("--c", table.c, "Pre-weight of the upper cells (cd)");
    table_cmd->add_option("--d", table.d, "Pre-weight of the bottom cells (cd)");
    table_cmd->add_option("--alpha", table.alpha, "Type II alpha");
    table_cmd->add_option("--beta", table.beta, "Type II beta");
    table_cmd->add_option("--rho", table.rho, "Type II rho");
    table_cmd->add_option("--n-max", table.n_max, "Largest row");
    table_cmd->add_option("--q", table.q, "Evaluate at this rational q");
    table_cmd->add_flag("--cross-check", table.cross_check, "Compare every entry with its rook sum");
    add_format(table_cmd, table.format);

    BellOptions bell;
    auto* bell_cmd = app.add_subcommand("bell", "Generalized Bell numbers B[n;x] for n = 0..n-max");
    bell_cmd->add_option("--s", bell.s, "Pre-weight increment s");
    bell_cmd->add_option("--alpha", bell.alpha, "Type II alpha");
    bell_cmd->add_option("--beta", bell.beta, "Type II beta");
    bell_cmd->add_option("--rho", bell.rho, "Type II rho");
    bell_cmd->add_option("--x", bell.x, "Integer argument of the Bell polynomial");
    bell_cmd->add_option("--n-max", bell.n_max, "Largest n");
    bell_cmd->add_option("--q", bell.q, "Evaluate at this rational q");
    add_format(bell_cmd, bell.format);

    OracleOptions oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "Rook sum of a board by direct enumeration");
    oracle_cmd->add_option("--board", oracle.board, "Board spec, e.g. 'word=VUVUV;pre=1'")->required();
    oracle_cmd->add_option("--rooks", oracle.rooks, "Number of rooks")->required();
    oracle_cmd->add_option("--rule", oracle.rule, "same-row or bottom-shift");
    oracle_cmd->add_option("--s", oracle.s, "Pre-weight increment s");
    oracle_cmd->add_option("--q", oracle.q, "Evaluate at this rational q");
    oracle_cmd->add_flag("--list", oracle.list, "Print every placement with its weight");
    add_format(oracle_cmd, oracle.format);

    VerifyOptions verify;
    std::map<std::string, std::string> range_text;
    auto* verify_cmd = app.add_subcommand("verify", "Check identities over a parameter sweep");
    verify_cmd->add_option("--identity", verify.identity, "Identity name or 'all'")->required();
    verify_cmd->add_option("--preset", verify.preset, "Sweep preset (desk)");
    verify_cmd->add_option("--n-max", verify.n_max, "Largest n");
    verify_cmd->add_option("--m-max", verify.m_max, "Largest m");
    verify_cmd->add_option("--total-max", verify.total_max, "Largest Stirling index touched");
    verify_cmd->add_flag("--include-printed", verify.include_printed, "With 'all', also run the printed variants");
    verify_cmd->add_flag("--verbose", verify.verbose, "Report every instance, not only failures");
    verify_cmd->add_option("--threads", verify.threads, "Worker threads (0: ROOKCALC_THREADS or all cores)");
    for (const auto& p : kSweepParams) {
        if (p == "n" || p == "m") continue;
        verify_cmd->add_option("--" + p, range_text[p], "Range for " + p + ": lo..hi, a,b,c or a value");
    }
    verify_cmd->add_option("--n", range_text["n"], "Range for n");
    verify_cmd->add_option("--m", range_text["m"], "Range for m");
    add_format(verify_cmd, verify.format);

    app.add_subcommand("list", "Describe every registered identity");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    std::ostringstream buffer;
    int code = kOk;
    try {
        if (*table_cmd) {
            code = cmd_table(table, buffer, err);
        } else if (*bell_cmd) {
            code = cmd_bell(bell, buffer);
        } else if (*oracle_cmd) {
            code = cmd_oracle(oracle, buffer);
        } else if (*verify_cmd) {
            for (const auto& [name, text] : range_text)
                if (!text.empty()) verify.ranges[name] = text;
            code = cmd_verify(verify, buffer);
        } else {
            code = cmd_list(buffer);
        }
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return kSizeCap;
    } catch (const identities::UnknownIdentity& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const EvaluationError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    if (output_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(output_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << output_path << '\n';
            return kInvalidInput;
        }
        file << buffer.str();
    }
    return code;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

}  // namespace rookcalc::cli
