// Command-line front end: series, Betti tables, expansions, verification
// suites and the typo ledger.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
// 3 size-limit error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hypalg/hypalg.hpp>

using namespace hypalg;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSize = 3;

struct Options {
    std::string family = "cycle-graph";
    int n = 3;
    std::optional<int> d;
    std::optional<int> alpha;
    std::size_t order = 10;
    int field_char = 0;
    std::string format = "text";
    std::string variant = "corrected";
    std::string method = "closed";
    std::string what = "poincare";
    std::string suite = "koszul";
    int n_max = 8;
};

FamilySpec make_spec(const Options& o)
{
    auto f = parse_family(o.family);
    if (!f)
        throw InvalidFamily("unknown family '" + o.family + "'");
    FamilySpec s{*f, o.n, o.d.value_or(2), o.alpha.value_or(1)};
    if (s.is_graph_family() && ((o.d && *o.d != 2) || (o.alpha && *o.alpha != 1)))
        throw InvalidFamily(std::string(family_name(*f)) + " forces d = 2, alpha = 1");
    validate_spec(s);
    return s;
}

FormulaVariant make_variant(const Options& o)
{
    return o.variant == "printed" ? FormulaVariant::printed : FormulaVariant::corrected;
}

SeriesResult poincare_for(const FamilySpec& s, FormulaVariant v)
{
    switch (s.family) {
    case Family::line_graph: return poincare_line_graph(s.n);
    case Family::cycle_graph: return poincare_cycle_graph(s.n, v);
    case Family::wheel: return poincare_wheel(s.n, v);
    case Family::hyperline: return poincare_hyperline(s.n, s.d, s.alpha);
    case Family::hypercycle: return poincare_hypercycle(s.n, s.d, s.alpha);
    case Family::hyperstar: return poincare_hyperstar(s.n, s.d, s.alpha);
    }
    throw InvalidFamily("unknown family");
}

std::optional<SeriesResult> hilbert_for(const FamilySpec& s, FormulaVariant v)
{
    switch (s.family) {
    case Family::line_graph: return hilbert_line_closed(s.n);
    case Family::cycle_graph: return hilbert_cycle_closed(s.n, v);
    case Family::wheel: return hilbert_wheel_closed(s.n, v);
    default: break;
    }
    const auto h = build_family(s);
    if (h.vertex_count() > kMaxComplexVertices)
        return std::nullopt;
    return SeriesResult{hilbert_from_complex(independence_complex(h)), "face count of the independence complex", {}};
}

void print_series_text(std::ostream& os, const char* name, const SeriesResult& r)
{
    os << name << " = " << r.series.to_display_string() << "\n";
    os << "  expanded:   " << r.series.to_string() << "\n";
    os << "  provenance: " << r.provenance << "\n";
    for (const auto& note : r.notes)
        os << "  note:       " << note << "\n";
}

void print_table_text(std::ostream& os, const char* name, const BettiTable& t)
{
    os << name << ":\n";
    for (const auto& [key, v] : t.entries())
        os << "  beta_{" << key.first << "," << key.second << "} = " << v << "\n";
}

void print_report_text(std::ostream& os, const VerificationReport& r)
{
    os << r.subject << ": " << (r.verdict() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : r.checks)
        os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.description << " (expected " << c.expected
           << ", actual " << c.actual << ")\n";
}

int run_series(const Options& o)
{
    const auto spec = make_spec(o);
    const auto v = make_variant(o);
    const auto p = poincare_for(spec, v);
    const auto h = hilbert_for(spec, v);
    if (o.format == "json") {
        Json j{{"family", std::string(family_name(spec.family))},
               {"n", spec.n},
               {"d", spec.d},
               {"alpha", spec.alpha},
               {"variant", std::string(variant_name(v))},
               {"poincare", to_json(p)}};
        if (h)
            j["hilbert"] = to_json(*h);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << spec.describe() << "\n";
        if (h)
            print_series_text(std::cout, "H(t)", *h);
        print_series_text(std::cout, "P(t)", p);
    }
    return kExitPass;
}

int run_betti(const Options& o)
{
    const auto spec = make_spec(o);
    const bool closed = o.method == "closed" || o.method == "both";
    const bool hochster = o.method == "hochster" || o.method == "both";
    std::optional<BettiTable> closed_table;
    std::optional<BettiTable> hochster_table;
    if (closed) {
        switch (spec.family) {
        case Family::hyperline: closed_table = betti_hyperline_closed(spec.n, spec.d, spec.alpha); break;
        case Family::hypercycle: closed_table = betti_hypercycle_closed(spec.n, spec.d, spec.alpha); break;
        case Family::hyperstar: closed_table = betti_star_closed(spec.n, spec.d, spec.alpha); break;
        case Family::wheel: closed_table = betti_wheel_closed(spec.n, make_variant(o)); break;
        default: throw UnsupportedParameter("no closed-form Betti table for " + spec.describe());
        }
    }
    if (hochster)
        hochster_table = hochster_betti(build_family(spec), o.field_char);
    const bool agree = !(closed_table && hochster_table) || *closed_table == *hochster_table;
    if (o.format == "json") {
        Json j{{"family", std::string(family_name(spec.family))}, {"n", spec.n}, {"d", spec.d}, {"alpha", spec.alpha}};
        if (closed_table)
            j["closed"] = to_json(*closed_table);
        if (hochster_table) {
            j["hochster"] = to_json(*hochster_table);
            j["field_char"] = o.field_char;
        }
        if (closed_table && hochster_table)
            j["agree"] = agree;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << spec.describe() << "\n";
        if (closed_table)
            print_table_text(std::cout, "closed form", *closed_table);
        if (hochster_table)
            print_table_text(std::cout, "Hochster", *hochster_table);
        if (closed_table && hochster_table)
            std::cout << (agree ? "tables agree" : "tables DISAGREE") << "\n";
    }
    return agree ? kExitPass : kExitFail;
}

int run_expand(const Options& o)
{
    const auto spec = make_spec(o);
    const auto v = make_variant(o);
    std::optional<SeriesResult> s;
    if (o.what == "hilbert")
        s = hilbert_for(spec, v);
    else
        s = poincare_for(spec, v);
    if (!s)
        throw SizeLimitError("Hilbert series unavailable: too many vertices");
    const auto coeffs = series_expand(s->series, o.order);
    if (o.format == "json") {
        Json a = Json::array();
        for (const auto& c : coeffs)
            a.push_back(c.get_str());
        std::cout << Json{{"series", o.what}, {"order", o.order}, {"coefficients", a}}.dump(2) << "\n";
    } else {
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            std::cout << (k ? " " : "") << coeffs[k].get_str();
        std::cout << "\n";
    }
    return kExitPass;
}

VerificationReport koszul_suite(int n_max, std::size_t order, FormulaVariant v)
{
    VerificationReport all{"Koszul identity for line, cycle and wheel graphs", {}};
    for (int n = 3; n <= n_max; ++n) {
        const std::pair<Family, RationalFunction> cases[] = {
            {Family::line_graph, poincare_line_graph(n).series},
            {Family::cycle_graph, poincare_cycle_graph(n, v).series},
            {Family::wheel, poincare_wheel(n, v).series},
        };
        for (const auto& [family, p] : cases) {
            const auto spec = FamilySpec::graph(family, n);
            const auto brute = hilbert_bruteforce(build_family(spec), order);
            const auto r = verify_koszul_identity(p, brute, order);
            const auto* bad = r.first_failure();
            all.add(spec.describe() + ": P(t) H(-t) = 1 to order " + std::to_string(order), r.verdict(), "1",
                    bad ? bad->description + " = " + bad->actual : "1");
        }
    }
    return all;
}

int run_verify(const Options& o)
{
    VerificationReport report;
    if (o.suite == "koszul") {
        report = koszul_suite(o.n_max, o.order, make_variant(o));
    } else if (o.suite == "fibonacci") {
        report = verify_fibonacci(o.n_max);
    } else if (o.suite == "sign") {
        report = resolve_recursion_sign(o.n_max, o.order).report;
    } else if (o.suite == "betti") {
        report = crosscheck_betti(make_spec(o), o.field_char);
    } else {
        throw InvalidInput("unknown suite '" + o.suite + "'");
    }
    if (o.format == "json")
        std::cout << to_json(report).dump(2) << "\n";
    else
        print_report_text(std::cout, report);
    return report.verdict() ? kExitPass : kExitFail;
}

int run_ledger(const Options& o)
{
    if (o.format == "json") {
        std::cout << ledger_to_json().dump(2) << "\n";
        return kExitPass;
    }
    for (const auto& e : typo_ledger()) {
        std::cout << e.id << " (" << e.location << ")\n"
                  << "  printed: " << e.printed << "\n"
                  << "  adopted: " << e.adopted << "\n"
                  << "  settled by: " << e.adjudication << "\n";
    }
    return kExitPass;
}

void add_family_flags(CLI::App* cmd, Options& o)
{
    cmd->add_option("--family", o.family, "hyperline|hypercycle|hyperstar|line-graph|cycle-graph|wheel");
    cmd->add_option("--n", o.n, "edge count (rim size for wheels)");
    cmd->add_option("--d", o.d, "edge size");
    cmd->add_option("--alpha", o.alpha, "overlap size");
}

void add_common_flags(CLI::App* cmd, Options& o)
{
    cmd->add_option("--format", o.format, "json|text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--variant", o.variant, "printed|corrected for the disputed formulas")
        ->check(CLI::IsMember({"printed", "corrected"}));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hilbert series, Poincare series and Betti numbers of hypergraph algebras"};
    app.require_subcommand(1);
    Options o;

    auto* series = app.add_subcommand("series", "print the Hilbert and Poincare series");
    add_family_flags(series, o);
    add_common_flags(series, o);

    auto* betti = app.add_subcommand("betti", "print the graded Betti table");
    add_family_flags(betti, o);
    add_common_flags(betti, o);
    betti->add_option("--method", o.method, "closed|hochster|both")->check(CLI::IsMember({"closed", "hochster", "both"}));
    betti->add_option("--field-char", o.field_char, "0 or a prime");

    auto* expand = app.add_subcommand("expand", "print power-series coefficients");
    add_family_flags(expand, o);
    add_common_flags(expand, o);
    expand->add_option("--series", o.what, "poincare|hilbert")->check(CLI::IsMember({"poincare", "hilbert"}));
    expand->add_option("--order", o.order, "highest exponent");

    auto* verify = app.add_subcommand("verify", "run an oracle suite");
    add_family_flags(verify, o);
    add_common_flags(verify, o);
    verify->add_option("--suite", o.suite, "koszul|fibonacci|sign|betti")
        ->check(CLI::IsMember({"koszul", "fibonacci", "sign", "betti"}));
    verify->add_option("--n-max", o.n_max, "largest n");
    verify->add_option("--order", o.order, "series order");
    verify->add_option("--field-char", o.field_char, "0 or a prime");

    auto* ledger = app.add_subcommand("ledger", "print the typo ledger");
    ledger->add_option("--format", o.format, "json|text")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*series)
            return run_series(o);
        if (*betti)
            return run_betti(o);
        if (*expand)
            return run_expand(o);
        if (*verify)
            return run_verify(o);
        if (*ledger)
            return run_ledger(o);
    } catch (const SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return kExitSize;
    } catch (const AdjudicationFailure& e) {
        std::cerr << "adjudication failed: " << e.what() << "\n";
        return kExitFail;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
