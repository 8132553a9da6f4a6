#include <set>

#include <gtest/gtest.h>

#include <hypalg/oracle.hpp>

using namespace hypalg;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v)
{
    std::vector<Integer> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

// Literal enumeration of exponent vectors of total degree k.
std::vector<Integer> count_monomials(const Hypergraph& h, int order)
{
    const int nv = h.vertex_count();
    std::vector<Integer> out(static_cast<std::size_t>(order) + 1, 0);
    std::vector<int> exps(static_cast<std::size_t>(nv), 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nv) {
            for (const auto& e : h.edges()) {
                bool all = true;
                for (int v : e)
                    all = all && exps[static_cast<std::size_t>(v)] > 0;
                if (all)
                    return;
            }
            ++out[static_cast<std::size_t>(order - remaining)];
            return;
        }
        for (int a = 0; a <= remaining; ++a) {
            exps[static_cast<std::size_t>(var)] = a;
            self(self, var + 1, remaining - a);
        }
        exps[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, order);
    return out;
}

} // namespace

TEST(HilbertBruteforce, Examples)
{
    EXPECT_EQ(hilbert_bruteforce(build_family(FamilySpec::graph(Family::line_graph, 1)), 3), ints({1, 2, 2, 2}));
    EXPECT_EQ(hilbert_bruteforce(build_family(FamilySpec::graph(Family::cycle_graph, 4)), 2)[2], 6);
    EXPECT_EQ(hilbert_bruteforce(Hypergraph(1, {}), 3), ints({1, 1, 1, 1}));
}

TEST(HilbertBruteforce, MatchesLiteralEnumeration)
{
    const std::vector<FamilySpec> specs{FamilySpec::graph(Family::cycle_graph, 5), FamilySpec::graph(Family::wheel, 4),
                                        {Family::hyperline, 2, 3, 1}, {Family::hyperstar, 2, 3, 2},
                                        {Family::hypercycle, 3, 2, 1}};
    for (const auto& s : specs) {
        auto h = build_family(s);
        EXPECT_EQ(hilbert_bruteforce(h, 6), count_monomials(h, 6)) << s.describe();
    }
}

TEST(HilbertBruteforce, SizeLimits)
{
    EXPECT_THROW(hilbert_bruteforce(Hypergraph(25, {}), 3), SizeLimitError);
    EXPECT_THROW(hilbert_bruteforce(Hypergraph(3, {}), 31), SizeLimitError);
}

TEST(HilbertBruteforce, AgreesWithFaceCountAndClosedForms)
{
    for (int n = 1; n <= 15; ++n) {
        auto h = build_family(FamilySpec::graph(Family::line_graph, n));
        auto brute = hilbert_bruteforce(h, 12);
        EXPECT_EQ(brute, series_expand(hilbert_from_complex(independence_complex(h)), 12));
        EXPECT_EQ(brute, series_expand(hilbert_line_closed(n).series, 12));
    }
    for (int n = 3; n <= 15; ++n) {
        auto c = build_family(FamilySpec::graph(Family::cycle_graph, n));
        EXPECT_EQ(hilbert_bruteforce(c, 12), series_expand(hilbert_cycle_closed(n).series, 12));
        auto w = build_family(FamilySpec::graph(Family::wheel, n));
        EXPECT_EQ(hilbert_bruteforce(w, 12), series_expand(hilbert_wheel_closed(n).series, 12));
    }
}

TEST(VerifyKoszulIdentity, Examples)
{
    EXPECT_TRUE(verify_koszul_identity(poincare_cycle_graph(3).series, hilbert_cycle_closed(3).series, 10).verdict());
    EXPECT_TRUE(verify_koszul_identity(poincare_line_graph(4).series, hilbert_line_closed(4).series, 12).verdict());
    auto bad = verify_koszul_identity(poincare_cycle_graph(3).series, hilbert_cycle_closed(4).series, 5);
    EXPECT_FALSE(bad.verdict());
    ASSERT_NE(bad.first_failure(), nullptr);
    EXPECT_EQ(bad.first_failure()->description, "coefficient of t^1 in P(t)H(-t)");
}

TEST(VerifyKoszulIdentity, NonPowerSeriesFails)
{
    RationalFunction p{Polynomial{1}, Polynomial{0, 1}};
    EXPECT_FALSE(verify_koszul_identity(p, hilbert_line_closed(1).series, 3).verdict());
}

TEST(VerifyFibonacci, Examples)
{
    auto r = verify_fibonacci(10);
    EXPECT_TRUE(r.verdict());
    ASSERT_EQ(r.checks.size(), 11u);
    std::vector<long> fib{1, 1};
    while (fib.size() < 13)
        fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    EXPECT_EQ(r.checks[0].actual, "2");
    EXPECT_EQ(r.checks[2].actual, "5");
    EXPECT_EQ(r.checks[10].actual, std::to_string(fib[12]));
    EXPECT_EQ(fib[12], 233);
    EXPECT_THROW(verify_fibonacci(-1), RangeError);
}

TEST(ResolveRecursionSign, SelectsCorrectedForms)
{
    auto a = resolve_recursion_sign(10);
    EXPECT_EQ(a.hilbert_cycle, FormulaVariant::corrected);
    EXPECT_EQ(a.poincare_cycle, FormulaVariant::corrected);
    EXPECT_TRUE(a.report.verdict());
    EXPECT_THROW(resolve_recursion_sign(5), RangeError);
}

TEST(ResolveRecursionSign, FourCycleVariants)
{
    EXPECT_EQ(hilbert_cycle_closed(4, FormulaVariant::corrected).series,
              RationalFunction(Polynomial{1, 2, -1}, Polynomial{1, -1}.pow(2)));
    EXPECT_EQ(hilbert_cycle_closed(4, FormulaVariant::printed).series,
              RationalFunction(Polynomial{1, 1}, Polynomial{1, -1}));
    auto brute = hilbert_bruteforce(build_family(FamilySpec::graph(Family::cycle_graph, 4)), 8);
    EXPECT_EQ(series_expand(hilbert_cycle_closed(4).series, 8), brute);
    EXPECT_NE(series_expand(hilbert_cycle_closed(4, FormulaVariant::printed).series, 8), brute);
    EXPECT_EQ(hilbert_cycle_closed(5).series.numerator(), (Polynomial{1, 3, 1}));
    EXPECT_EQ(poincare_cycle_graph(4).series, RationalFunction(Polynomial{1, 1}.pow(2), Polynomial{1, -2, -1}));
}

TEST(TypoLedger, EntriesAreUniqueAndComplete)
{
    std::set<std::string> ids;
    for (const auto& e : typo_ledger()) {
        EXPECT_TRUE(ids.insert(e.id).second) << e.id;
        EXPECT_FALSE(e.printed.empty());
        EXPECT_FALSE(e.adopted.empty());
        EXPECT_FALSE(e.adjudication.empty());
        EXPECT_NE(e.printed, e.adopted);
    }
    for (const char* id : {"cycle-hilbert-sign", "cycle-poincare-denominator", "h-c5-exponent"})
        EXPECT_TRUE(ids.count(id)) << id;
}

TEST(CrosscheckBetti, Examples)
{
    auto hc = crosscheck_betti({Family::hypercycle, 3, 3, 1});
    EXPECT_TRUE(hc.verdict());
    auto w3 = crosscheck_betti(FamilySpec::graph(Family::wheel, 3));
    EXPECT_TRUE(w3.verdict());
    auto star = crosscheck_betti({Family::hyperstar, 3, 2, 1});
    EXPECT_TRUE(star.verdict());
}

TEST(CrosscheckBetti, PrintedWheelDiscrepanciesAreLedgered)
{
    for (int n : {5, 7, 8}) {
        auto r = crosscheck_betti(FamilySpec::graph(Family::wheel, n));
        EXPECT_TRUE(r.verdict()) << n;
        bool saw_printed = false;
        for (const auto& c : r.checks)
            saw_printed = saw_printed || c.description.rfind("printed", 0) == 0;
        EXPECT_TRUE(saw_printed) << n;
    }
}

TEST(CrosscheckBetti, Errors)
{
    EXPECT_THROW(crosscheck_betti({Family::hyperline, 7, 4, 1}), SizeLimitError);
    EXPECT_THROW(crosscheck_betti(FamilySpec::graph(Family::cycle_graph, 5)), UnsupportedParameter);
}

TEST(VerificationReport, DeterministicAcrossRuns)
{
    EXPECT_EQ(crosscheck_betti(FamilySpec::graph(Family::wheel, 6)),
              crosscheck_betti(FamilySpec::graph(Family::wheel, 6)));
    EXPECT_EQ(resolve_recursion_sign(7).report, resolve_recursion_sign(7).report);
}
