#include "layered_cheb/cli.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "layered_cheb/checker.hpp"
#include "layered_cheb/oracle.hpp"
#include "layered_cheb/pattern_text.hpp"
#include "layered_cheb/serialize.hpp"
#include "layered_cheb/series.hpp"

namespace layered_cheb::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised after output is written when a comparison or suite failed.
struct VerificationFailed {};

enum class Format { Plain, Json, Csv };
enum class Method { Oracle, Gf, Both };

const std::vector<std::string> kSuites{
    "lemma2.1", "lemma2.2",  "theorem2.3", "eq2",        "eq3",
    "eq4",      "vanishing", "theorem1.1", "theorem1.2", "chebyshev",
    "catalan-identity", "initial-segment", "series-recurrence",
};

struct Options {
    std::string patterns;
    std::string tau;
    std::optional<int> n;
    std::optional<int> n_max;
    std::optional<int> k;
    std::optional<int> d;
    std::optional<int> k_max;
    Method method = Method::Oracle;
    std::string suite = "all";
    Format format = Format::Plain;
    std::optional<int> max_n_override;
};

struct Context {
    Options opts;
    OracleLimits limits;
    std::ostream& out;
};

void print_json(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

PatternSet requested_patterns(const Options& o) {
    std::vector<Permutation> patterns;
    if (!o.patterns.empty()) {
        const auto parsed = parse_pattern_set(o.patterns);
        patterns.assign(parsed.patterns().begin(), parsed.patterns().end());
    }
    if (!o.tau.empty()) {
        const Permutation increasing{1, 2, 3};
        for (auto p : {increasing, parse_permutation(o.tau)}) {
            if (std::find(patterns.begin(), patterns.end(), p) == patterns.end()) patterns.push_back(p);
        }
    }
    if (patterns.empty()) throw UsageError("give --patterns and/or --tau");
    return PatternSet(std::move(patterns));
}

int required_length(const Options& o) {
    const auto n = o.n ? o.n : o.n_max;
    if (!n) throw UsageError("give --n (or --n-max)");
    if (*n < 0) throw UsageError("--n must be nonnegative");
    return *n;
}

// The layered tau of T = {(1,2,3), tau}, if T has that shape.
std::optional<Permutation> layered_partner(const PatternSet& set) {
    const Permutation increasing{1, 2, 3};
    if (!set.contains_pattern(increasing) || set.size() > 2) return std::nullopt;
    if (set.size() == 1) return increasing;
    for (const auto& p : set.patterns()) {
        if (p != increasing && layer_decomposition(p)) return p;
    }
    return std::nullopt;
}

struct Formula {
    IntSeries values;
    std::string description;
};

Formula formula_series(const Options& o, const PatternSet& set, int n, const OracleLimits& limits) {
    if (o.k) {
        return {expand(r_k_gf(*o.k), n), "R_" + std::to_string(*o.k)};
    }
    const auto tau = layered_partner(set);
    if (!tau) {
        throw UsageError("no closed form for this pattern set; pass --k to compare against R_k");
    }
    auto predicted = predicted_series(*tau, n, limits);
    return {std::move(predicted.values),
            to_string(predicted.branch) + ", k=" + std::to_string(predicted.k)};
}

int cmd_count(Context& ctx) {
    const auto set = requested_patterns(ctx.opts);
    const int n = required_length(ctx.opts);
    const BigInt value = count_avoiders(n, set, ctx.limits);
    switch (ctx.opts.format) {
        case Format::Plain: ctx.out << value.str() << "\n"; break;
        case Format::Csv: ctx.out << "n,count\n" << n << "," << value.str() << "\n"; break;
        case Format::Json:
            print_json(ctx.out, {{"schema", kSchemaVersion},
                                 {"command", "count"},
                                 {"patterns", set.to_string()},
                                 {"n", n},
                                 {"count", value.str()}});
            break;
    }
    return kOk;
}

int cmd_series(Context& ctx) {
    const auto set = requested_patterns(ctx.opts);
    const int n = required_length(ctx.opts);
    const Method method = ctx.opts.method;

    IntSeries oracle;
    Formula formula;
    if (method != Method::Gf) oracle = count_series(n, set, ctx.limits);
    if (method != Method::Oracle) formula = formula_series(ctx.opts, set, n, ctx.limits);
    const bool both = method == Method::Both;
    const bool match = both && oracle == formula.values;
    const IntSeries& single = method == Method::Gf ? formula.values : oracle;

    switch (ctx.opts.format) {
        case Format::Plain:
            if (both) {
                ctx.out << "# patterns " << set.to_string() << ", formula " << formula.description << "\n";
                ctx.out << std::setw(4) << "n" << std::setw(24) << "oracle" << std::setw(24)
                        << "formula" << "  match\n";
                for (int i = 0; i <= n; ++i) {
                    const auto& a = oracle[static_cast<std::size_t>(i)];
                    const auto& b = formula.values[static_cast<std::size_t>(i)];
                    ctx.out << std::setw(4) << i << std::setw(24) << a.str() << std::setw(24)
                            << b.str() << "  " << (a == b ? "yes" : "NO") << "\n";
                }
            } else {
                for (int i = 0; i <= n; ++i) {
                    ctx.out << std::setw(4) << i << "  " << single[static_cast<std::size_t>(i)].str() << "\n";
                }
            }
            break;
        case Format::Csv:
            if (both) {
                ctx.out << "n,oracle,formula,match\n";
                for (int i = 0; i <= n; ++i) {
                    const auto& a = oracle[static_cast<std::size_t>(i)];
                    const auto& b = formula.values[static_cast<std::size_t>(i)];
                    ctx.out << i << "," << a.str() << "," << b.str() << ","
                            << (a == b ? "true" : "false") << "\n";
                }
            } else {
                ctx.out << series_csv(single);
            }
            break;
        case Format::Json: {
            json doc{{"schema", kSchemaVersion},
                     {"command", "series"},
                     {"patterns", set.to_string()},
                     {"n_max", n}};
            if (method != Method::Gf) doc["oracle"] = to_json(oracle);
            if (method != Method::Oracle) {
                doc["formula"] = to_json(formula.values);
                doc["formula_source"] = formula.description;
            }
            if (both) doc["match"] = match;
            print_json(ctx.out, doc);
            break;
        }
    }
    if (both && !match) throw VerificationFailed{};
    return kOk;
}

int cmd_gf(Context& ctx) {
    if (!ctx.opts.k) throw UsageError("gf needs --k");
    if (*ctx.opts.k < 2) throw UsageError("gf needs --k >= 2");
    const auto gf = r_k_gf(*ctx.opts.k);
    const auto& num = gf.numerator();
    const auto& den = gf.denominator();
    switch (ctx.opts.format) {
        case Format::Plain:
            ctx.out << "R_" << *ctx.opts.k << "(x) = (" << num.to_string() << ") / ("
                    << den.to_string() << ")\n";
            break;
        case Format::Csv: {
            ctx.out << "power,numerator,denominator\n";
            const auto top = static_cast<std::size_t>(std::max(num.degree(), den.degree()));
            for (std::size_t i = 0; i <= top; ++i) {
                ctx.out << i << "," << num[i].str() << "," << den[i].str() << "\n";
            }
            break;
        }
        case Format::Json:
            print_json(ctx.out, {{"schema", kSchemaVersion},
                                 {"command", "gf"},
                                 {"k", *ctx.opts.k},
                                 {"numerator", to_json(num)},
                                 {"denominator", to_json(den)}});
            break;
    }
    return kOk;
}

// (d, k) pairs swept by the recursion suites: d up to floor(k/2), since the
// suites normalize d anyway.
std::vector<LayeredPair> recursion_pairs(const Options& o, int k_max) {
    std::vector<LayeredPair> pairs;
    const int k_lo = o.k ? *o.k : 3;
    const int k_hi = o.k ? *o.k : k_max;
    for (int k = k_lo; k <= k_hi; ++k) {
        if (o.d) {
            pairs.push_back({*o.d, k});
            continue;
        }
        for (int d = 1; d <= k / 2; ++d) pairs.push_back({d, k});
    }
    return pairs;
}

std::vector<Permutation> all_layered(int k_max) {
    std::vector<Permutation> out;
    for (int k = 2; k <= k_max; ++k) {
        // Compositions of k via the bitmask of cut points.
        for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
            std::vector<int> parts;
            int run = 1;
            for (int i = 0; i < k - 1; ++i) {
                if (mask & (1u << i)) {
                    parts.push_back(run);
                    run = 1;
                } else {
                    ++run;
                }
            }
            parts.push_back(run);
            out.push_back(layered(LayeredShape(std::move(parts))));
        }
    }
    return out;
}

VerificationReport run_suite(const std::string& suite, const Options& o, Checker& checker) {
    const int n_max = o.n_max ? *o.n_max : (o.n ? *o.n : 9);
    const int k_max = o.k_max ? *o.k_max : 6;
    using Member = VerificationReport (Checker::*)(int, int, int);
    static const std::map<std::string, Member> per_pair{
        {"lemma2.2", &Checker::check_lemma22},   {"theorem2.3", &Checker::check_theorem23},
        {"eq2", &Checker::check_eq2},            {"eq3", &Checker::check_eq3},
        {"eq4", &Checker::check_eq4_identity},   {"vanishing", &Checker::check_vanishing},
    };

    VerificationReport report;
    std::string detail;
    if (auto it = per_pair.find(suite); it != per_pair.end()) {
        std::vector<VerificationReport> parts;
        const auto pairs = recursion_pairs(o, k_max);
        if (pairs.empty()) throw UsageError("empty (d,k) sweep");
        for (const auto& pair : pairs) parts.push_back((checker.*(it->second))(n_max, pair.d, pair.k));
        report = merge_reports(suite, parts);
        report.detail = std::to_string(pairs.size()) + " (d,k) pairs, k=" +
                        std::to_string(pairs.front().k) + ".." + std::to_string(pairs.back().k) +
                        ", d<=k/2";
        if (o.d) report.detail = "d=" + std::to_string(*o.d) + ", k=" + std::to_string(pairs.front().k);
    } else if (suite == "lemma2.1") {
        report = checker.check_symmetry(n_max, o.k ? *o.k : k_max);
    } else if (suite == "theorem1.1") {
        std::vector<VerificationReport> parts;
        const int k_lo = o.k ? *o.k : 3;
        const int k_hi = o.k ? *o.k : k_max;
        for (int k = k_lo; k <= k_hi; ++k) parts.push_back(checker.check_theorem11_crosscheck(n_max, k));
        report = merge_reports(suite, parts);
        report.detail = "k=" + std::to_string(k_lo) + ".." + std::to_string(k_hi);
    } else if (suite == "theorem1.2") {
        std::vector<VerificationReport> parts;
        const auto taus = o.tau.empty() ? all_layered(k_max) : std::vector{parse_permutation(o.tau)};
        for (const auto& tau : taus) parts.push_back(checker.check_main(n_max, tau));
        report = merge_reports(suite, parts);
        report.detail = o.tau.empty() ? "every layered tau with 2<=k<=" + std::to_string(k_max)
                                      : parts.front().detail;
    } else if (suite == "chebyshev") {
        report = merge_reports(suite, {check_chebyshev_recurrence(20),
                                       check_chebyshev_trig(10, {0.3, 0.7, 1.1}, 1e-9)});
        report.detail = "recurrence k<=20, trig k<=10";
    } else if (suite == "catalan-identity") {
        report = check_catalan_identity(12);
    } else if (suite == "initial-segment") {
        report = check_initial_segment(10);
    } else if (suite == "series-recurrence") {
        report = check_series_recurrence(10, 30);
    } else {
        throw UsageError("unknown suite '" + suite + "'");
    }
    return report;
}

int cmd_verify(Context& ctx) {
    std::vector<std::string> suites;
    if (ctx.opts.suite == "all") {
        suites = kSuites;
    } else {
        if (std::find(kSuites.begin(), kSuites.end(), ctx.opts.suite) == kSuites.end()) {
            throw UsageError("unknown suite '" + ctx.opts.suite + "'");
        }
        suites = {ctx.opts.suite};
    }
    Checker checker(ctx.limits);
    std::vector<VerificationReport> reports;
    for (const auto& s : suites) reports.push_back(run_suite(s, ctx.opts, checker));
    const bool failed = std::any_of(reports.begin(), reports.end(),
                                    [](const auto& r) { return r.status() == Status::Fail; });

    switch (ctx.opts.format) {
        case Format::Plain:
            for (const auto& r : reports) ctx.out << to_text(r);
            ctx.out << (failed ? "FAILED" : "OK") << ": " << reports.size() << " suite(s)\n";
            break;
        case Format::Csv:
            ctx.out << "statement,status,cases,failures\n";
            for (const auto& r : reports) {
                ctx.out << r.statement << "," << to_string(r.status()) << "," << r.cases << ","
                        << r.failures.size() << "\n";
            }
            break;
        case Format::Json: {
            json list = json::array();
            for (const auto& r : reports) list.push_back(to_json(r));
            print_json(ctx.out, {{"schema", kSchemaVersion},
                                 {"command", "verify"},
                                 {"status", failed ? "fail" : "pass"},
                                 {"reports", std::move(list)}});
            break;
        }
    }
    if (failed) throw VerificationFailed{};
    return kOk;
}

int cmd_table(Context& ctx) {
    const Options& o = ctx.opts;
    const int n_max = o.n_max ? *o.n_max : (o.n ? *o.n : 9);
    const int k_max = o.k_max ? *o.k_max : 6;
    const bool with_formula = o.method != Method::Oracle;
    const bool with_oracle = o.method != Method::Gf;

    struct Row {
        int k;
        int d;
        IntSeries oracle;
        IntSeries formula;
    };
    std::vector<Row> rows;
    for (int k = 3; k <= k_max; ++k) {
        const auto formula = with_formula ? expand(r_k_gf(k), n_max) : IntSeries{};
        for (int d = 1; d <= k - 1; ++d) {
            Row row{k, d, {}, formula};
            if (with_oracle) row.oracle = count_series(n_max, layered_pair(d, k), ctx.limits);
            rows.push_back(std::move(row));
        }
    }
    const bool both = with_formula && with_oracle;
    bool failed = false;
    for (const auto& r : rows) failed |= both && r.oracle != r.formula;

    auto join = [](const IntSeries& s, const char* sep) {
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += sep;
            out += s[i].str();
        }
        return out;
    };
    switch (o.format) {
        case Format::Plain:
            for (const auto& r : rows) {
                ctx.out << "k=" << r.k << " d=" << r.d << "  "
                        << join(with_oracle ? r.oracle : r.formula, " ");
                if (both) ctx.out << "  " << (r.oracle == r.formula ? "= R_" : "!= R_") << r.k;
                ctx.out << "\n";
            }
            break;
        case Format::Csv:
            ctx.out << "k,d,source";
            for (int n = 0; n <= n_max; ++n) ctx.out << ",f_" << n;
            ctx.out << "\n";
            for (const auto& r : rows) {
                if (with_oracle) ctx.out << r.k << "," << r.d << ",oracle," << join(r.oracle, ",") << "\n";
                if (with_formula) ctx.out << r.k << "," << r.d << ",formula," << join(r.formula, ",") << "\n";
            }
            break;
        case Format::Json: {
            json list = json::array();
            for (const auto& r : rows) {
                json item{{"k", r.k}, {"d", r.d}};
                if (with_oracle) item["oracle"] = to_json(r.oracle);
                if (with_formula) item["formula"] = to_json(r.formula);
                if (both) item["match"] = r.oracle == r.formula;
                list.push_back(std::move(item));
            }
            print_json(ctx.out, {{"schema", kSchemaVersion},
                                 {"command", "table"},
                                 {"n_max", n_max},
                                 {"k_max", k_max},
                                 {"rows", std::move(list)}});
            break;
        }
    }
    if (failed) throw VerificationFailed{};
    return kOk;
}

int parse_env_ceiling(const std::string& text) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) {
        throw UsageError(std::string(kMaxLengthEnv) + " must be a nonnegative integer");
    }
    return value;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::string& env_max_n) {
    CLI::App app{"Pattern-avoidance counts for (1,2,3) plus a layered pattern, with exact "
                 "Chebyshev generating functions and exhaustive verification suites",
                 "layered-cheb"};
    app.require_subcommand(1, 1);
    Options o;

    const std::map<std::string, Format> formats{
        {"plain", Format::Plain}, {"json", Format::Json}, {"csv", Format::Csv}};
    const std::map<std::string, Method> methods{
        {"oracle", Method::Oracle}, {"gf", Method::Gf}, {"both", Method::Both}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--max-n-override", o.max_n_override,
                        "Raise the length ceiling (default 12); runtime grows quickly");
    };
    auto* count = app.add_subcommand("count", "Count avoiders of length n");
    auto* series = app.add_subcommand("series", "Avoider counts f_0..f_n");
    auto* gf = app.add_subcommand("gf", "Numerator and denominator of R_k");
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    auto* table = app.add_subcommand("table", "Series for a sweep of (k, d)");

    for (auto* sub : {count, series}) {
        sub->add_option("--patterns", o.patterns, "Patterns, e.g. \"1,2,3;2,1,4,3\"");
        sub->add_option("--tau", o.tau, "Layered pattern paired with (1,2,3)");
    }
    for (auto* sub : {count, series, verify, table}) {
        sub->add_option("--n", o.n, "Length");
        sub->add_option("--n-max", o.n_max, "Largest length");
    }
    for (auto* sub : {series, gf, verify}) sub->add_option("--k", o.k, "Pattern length k");
    verify->add_option("--d", o.d, "Second layer length d");
    verify->add_option("--tau", o.tau, "Restrict theorem1.2 to this layered pattern");
    for (auto* sub : {verify, table}) sub->add_option("--k-max", o.k_max, "Largest k in sweeps");
    for (auto* sub : {series, table}) {
        sub->add_option("--method", o.method, "oracle, gf or both")
            ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    }
    verify->add_option("--suite", o.suite, "Suite name or 'all'");
    for (auto* sub : {count, series, gf, verify, table}) common(sub);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        OracleLimits limits;
        if (!env_max_n.empty()) limits.max_length = parse_env_ceiling(env_max_n);
        if (o.max_n_override) {
            if (*o.max_n_override < 0) throw UsageError("--max-n-override must be nonnegative");
            limits.max_length = *o.max_n_override;
        }
        Context ctx{o, limits, out};
        if (count->parsed()) return cmd_count(ctx);
        if (series->parsed()) return cmd_series(ctx);
        if (gf->parsed()) return cmd_gf(ctx);
        if (verify->parsed()) return cmd_verify(ctx);
        return cmd_table(ctx);
    } catch (const VerificationFailed&) {
        return kVerificationFailed;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace layered_cheb::cli
