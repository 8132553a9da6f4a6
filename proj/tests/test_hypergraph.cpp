#include <algorithm>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include <hypalg/hypergraph.hpp>

using namespace hypalg;

namespace {

std::vector<FamilySpec> constructible_specs(int n_max, int d_max)
{
    std::vector<FamilySpec> out;
    for (Family f : {Family::hyperline, Family::hypercycle, Family::hyperstar})
        for (int n = 1; n <= n_max; ++n)
            for (int d = 2; d <= d_max; ++d)
                for (int a = 1; a < d; ++a) {
                    FamilySpec s{f, n, d, a};
                    if (!spec_violations(s).empty())
                        continue;
                    if (f != Family::hyperstar && 2 * a > d)
                        continue;
                    out.push_back(s);
                }
    for (Family f : {Family::line_graph, Family::cycle_graph, Family::wheel})
        for (int n = 1; n <= n_max; ++n) {
            auto s = FamilySpec::graph(f, n);
            if (spec_violations(s).empty())
                out.push_back(s);
        }
    return out;
}

// Canonical form under vertex relabelling for small graphs: minimum sorted
// edge list over all permutations.
std::vector<Edge> canonical_graph(const Hypergraph& h)
{
    std::vector<int> perm(static_cast<std::size_t>(h.vertex_count()));
    for (std::size_t i = 0; i < perm.size(); ++i)
        perm[i] = static_cast<int>(i);
    std::vector<Edge> best;
    do {
        std::vector<Edge> edges;
        for (const auto& e : h.edges()) {
            Edge m;
            for (int v : e)
                m.push_back(perm[static_cast<std::size_t>(v)]);
            std::sort(m.begin(), m.end());
            edges.push_back(m);
        }
        std::sort(edges.begin(), edges.end());
        if (best.empty() || edges < best)
            best = edges;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

TEST(FamilyNames, RoundTrip)
{
    for (Family f : {Family::hyperline, Family::hypercycle, Family::hyperstar, Family::line_graph,
                     Family::cycle_graph, Family::wheel})
        EXPECT_EQ(parse_family(family_name(f)), f);
    EXPECT_FALSE(parse_family("hyperwheel").has_value());
}

TEST(BuildFamily, HyperlineTwoThreeOne)
{
    auto h = build_family({Family::hyperline, 2, 3, 1});
    EXPECT_EQ(h.vertex_count(), 5);
    EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1, 2}, {2, 3, 4}}));
    EXPECT_EQ(edge_ideal(h), h.edges());
}

TEST(BuildFamily, HypercycleIsTriangle)
{
    auto h = build_family({Family::hypercycle, 3, 2, 1});
    EXPECT_EQ(h.vertex_count(), 3);
    EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}}));
}

TEST(BuildFamily, HyperstarCoreFirst)
{
    auto h = build_family({Family::hyperstar, 3, 2, 1});
    EXPECT_EQ(h.vertex_count(), 4);
    EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
}

TEST(BuildFamily, WheelThreeIsCompleteGraph)
{
    auto h = build_family(FamilySpec::graph(Family::wheel, 3));
    std::set<Edge> got(h.edges().begin(), h.edges().end());
    std::set<Edge> all;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            all.insert({a, b});
    EXPECT_EQ(got, all);
    EXPECT_EQ(h.edges().size(), 6u);
}

TEST(BuildFamily, RejectsInvalidSpecs)
{
    EXPECT_THROW(build_family({Family::hyperline, 2, 2, 2}), InvalidFamily);
    EXPECT_THROW(build_family({Family::hypercycle, 2, 3, 1}), InvalidFamily);
    EXPECT_THROW(build_family({Family::hyperline, 0, 3, 1}), InvalidFamily);
    EXPECT_THROW(build_family({Family::wheel, 4, 3, 1}), InvalidFamily);
    EXPECT_THROW(build_family({Family::hyperline, 2, 1, 0}), InvalidFamily);
}

TEST(BuildFamily, RejectsAlphaAboveHalf)
{
    EXPECT_THROW(build_family({Family::hyperline, 2, 5, 3}), UnsupportedParameter);
    EXPECT_THROW(build_family({Family::hypercycle, 3, 3, 2}), UnsupportedParameter);
    EXPECT_NO_THROW(build_family({Family::hyperstar, 3, 3, 2}));
}

TEST(Hypergraph, RejectsMalformedEdges)
{
    EXPECT_THROW(Hypergraph(3, {{0, 3}}), InvalidInput);
    EXPECT_THROW(Hypergraph(3, {{0, 0}}), InvalidInput);
    EXPECT_THROW(Hypergraph(3, {{0, 1}, {1, 0}}), InvalidInput);
    EXPECT_THROW(Hypergraph(3, {{}}), InvalidInput);
}

TEST(ValidateFamily, HyperlineHasTwoFreeVerticesPerEdge)
{
    FamilySpec s{Family::hyperline, 3, 4, 1};
    auto r = validate_family(build_family(s), s);
    EXPECT_TRUE(r.pass);
    ASSERT_EQ(r.free_vertices.size(), 3u);
    for (int f : r.free_vertices)
        EXPECT_GE(f, 2);
}

TEST(ValidateFamily, TriangleHasNoFreeVertex)
{
    FamilySpec s{Family::hypercycle, 3, 2, 1};
    auto r = validate_family(build_family(s), s);
    EXPECT_TRUE(r.pass);
    for (int f : r.free_vertices)
        EXPECT_EQ(f, 0);
}

TEST(ValidateFamily, InvalidSpecFails)
{
    FamilySpec s{Family::hyperline, 2, 2, 2};
    auto r = validate_family(Hypergraph(3, {{0, 1}, {1, 2}}), s);
    EXPECT_FALSE(r.pass);
    EXPECT_FALSE(r.failures.empty());
}

TEST(ValidateFamily, DetectsWrongIntersections)
{
    FamilySpec s{Family::hyperline, 2, 3, 1};
    auto r = validate_family(Hypergraph(5, {{0, 1, 2}, {1, 2, 3}}), s);
    EXPECT_FALSE(r.pass);
    EXPECT_FALSE(r.intersections_ok);
}

TEST(HypergraphProperties, VertexCountsAndSelfValidation)
{
    const auto specs = constructible_specs(12, 6);
    EXPECT_GT(specs.size(), 100u);
    for (const auto& s : specs) {
        SCOPED_TRACE(s.describe());
        auto h = build_family(s);
        int expected = 0;
        switch (s.family) {
        case Family::hyperline:
        case Family::line_graph: expected = s.n * s.d - (s.n - 1) * s.alpha; break;
        case Family::hypercycle:
        case Family::cycle_graph: expected = s.n * (s.d - s.alpha); break;
        case Family::hyperstar: expected = s.n * (s.d - s.alpha) + s.alpha; break;
        case Family::wheel: expected = s.n + 1; break;
        }
        EXPECT_EQ(h.vertex_count(), expected);
        std::set<int> used;
        for (const auto& e : h.edges()) {
            EXPECT_EQ(static_cast<int>(e.size()), s.d);
            used.insert(e.begin(), e.end());
        }
        EXPECT_EQ(static_cast<int>(used.size()), expected);
        auto r = validate_family(h, s);
        EXPECT_TRUE(r.pass) << (r.failures.empty() ? "" : r.failures.front());
    }
}

TEST(HypergraphProperties, DegreeTwoSpecialisationsAreGraphs)
{
    // path graph on n+1 vertices, cycle on n vertices, star with n leaves
    for (int n = 1; n <= 6; ++n) {
        Hypergraph path = build_family({Family::hyperline, n, 2, 1});
        std::vector<Edge> want;
        for (int i = 0; i < n; ++i)
            want.push_back({i, i + 1});
        EXPECT_EQ(canonical_graph(path), canonical_graph(Hypergraph(n + 1, want)));
        EXPECT_EQ(path, build_family(FamilySpec::graph(Family::line_graph, n)));

        Hypergraph star = build_family({Family::hyperstar, n, 2, 1});
        std::vector<Edge> leaves;
        for (int i = 1; i <= n; ++i)
            leaves.push_back({0, i});
        EXPECT_EQ(canonical_graph(star), canonical_graph(Hypergraph(n + 1, leaves)));
    }
    for (int n = 3; n <= 7; ++n) {
        Hypergraph cyc = build_family({Family::hypercycle, n, 2, 1});
        std::vector<Edge> want;
        for (int i = 0; i < n; ++i)
            want.push_back({i, (i + 1) % n});
        EXPECT_EQ(canonical_graph(cyc), canonical_graph(Hypergraph(n, want)));
        EXPECT_EQ(cyc, build_family(FamilySpec::graph(Family::cycle_graph, n)));
    }
}
