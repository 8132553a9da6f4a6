#include <algorithm>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include <hypalg/complex.hpp>
#include <hypalg/hypergraph.hpp>

using namespace hypalg;

namespace {

// Dense Gaussian elimination over Q.
std::size_t dense_rank(std::vector<std::vector<Rational>> m)
{
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0)
                continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Reduced homology from augmented boundary matrices built densely.
std::vector<std::size_t> dense_reduced_homology(const SimplicialComplex& k)
{
    std::map<int, std::vector<VertexSet>> by_size;
    for (VertexSet f : k.faces())
        by_size[set_size(f)].push_back(f);
    if (by_size.empty())
        return {};
    const int top = by_size.rbegin()->first;
    auto boundary_rank = [&](int s) -> std::size_t {
        if (s < 1 || !by_size.count(s) || !by_size.count(s - 1))
            return 0;
        const auto& cols = by_size[s];
        const auto& rows = by_size[s - 1];
        std::map<VertexSet, std::size_t> row_index;
        for (std::size_t i = 0; i < rows.size(); ++i)
            row_index[rows[i]] = i;
        std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols.size(), 0));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            int sign = 1;
            for (int v = 0; v < 32; ++v) {
                if (!(cols[c] >> v & 1u))
                    continue;
                m[row_index.at(cols[c] & ~(VertexSet{1} << v))][c] = sign;
                sign = -sign;
            }
        }
        return dense_rank(m);
    };
    std::vector<std::size_t> out;
    for (int s = 0; s <= top; ++s) {
        const std::size_t f = by_size.count(s) ? by_size[s].size() : 0;
        out.push_back(f - boundary_rank(s) - boundary_rank(s + 1));
    }
    return out;
}

SimplicialComplex random_complex(std::mt19937& rng, int vertices)
{
    std::uniform_int_distribution<int> nfacets(1, 5);
    std::uniform_int_distribution<VertexSet> mask(1, (VertexSet{1} << vertices) - 1);
    std::vector<VertexSet> faces;
    const int count = nfacets(rng);
    for (int i = 0; i < count; ++i)
        faces.push_back(mask(rng));
    return SimplicialComplex::from_faces(vertices, faces);
}

long reduced_euler_from_faces(const SimplicialComplex& k)
{
    long chi = 0;
    for (VertexSet f : k.faces())
        chi += (set_size(f) % 2 == 1) ? 1 : -1; // dimension |F|-1, empty face counts -1
    return chi;
}

long reduced_euler_from_homology(const std::vector<std::size_t>& dims)
{
    long chi = 0;
    for (std::size_t idx = 0; idx < dims.size(); ++idx) {
        const long q = static_cast<long>(idx) - 1;
        chi += (q % 2 == 0 ? 1 : -1) * static_cast<long>(dims[idx]);
    }
    return chi;
}

bool all_zero(const std::vector<std::size_t>& v)
{
    return std::all_of(v.begin(), v.end(), [](std::size_t x) { return x == 0; });
}

} // namespace

TEST(SimplicialComplex, RejectsNestedFacets)
{
    EXPECT_THROW(SimplicialComplex::from_facets(3, {{0, 1}, {0}}), InvalidInput);
    EXPECT_THROW(SimplicialComplex::from_facets(2, {{0, 2}}), InvalidInput);
}

TEST(SimplicialComplex, FacesIncludeEmptyFace)
{
    auto k = SimplicialComplex::from_facets(3, {{0, 1}, {2}});
    EXPECT_EQ(k.faces(), (std::vector<VertexSet>{0, 1, 2, 4, 3}));
    EXPECT_EQ(k.dimension(), 1);
}

TEST(IndependenceComplex, FourCycle)
{
    auto k = independence_complex(build_family(FamilySpec::graph(Family::cycle_graph, 4)));
    EXPECT_EQ(k.facets(), (std::vector<std::vector<int>>{{0, 2}, {1, 3}}));
}

TEST(IndependenceComplex, WheelIsCycleComplexPlusCentre)
{
    for (int n = 3; n <= 8; ++n) {
        auto cyc = independence_complex(build_family(FamilySpec::graph(Family::cycle_graph, n)));
        auto wheel = independence_complex(build_family(FamilySpec::graph(Family::wheel, n)));
        std::vector<VertexSet> want{1};
        for (VertexSet f : cyc.facet_masks())
            want.push_back(f << 1); // rim vertex i of the cycle is vertex i+1 of the wheel
        SimplicialComplex::sort_faces(want);
        auto got = wheel.facet_masks();
        SimplicialComplex::sort_faces(got);
        EXPECT_EQ(got, want) << "n=" << n;
    }
}

TEST(IndependenceComplex, SingleEdgeIsTwoPoints)
{
    auto k = independence_complex(Hypergraph(2, {{0, 1}}));
    EXPECT_EQ(k.facets(), (std::vector<std::vector<int>>{{0}, {1}}));
}

TEST(ReducedHomology, TwoPoints)
{
    auto k = SimplicialComplex::from_facets(2, {{0}, {1}});
    EXPECT_EQ(reduced_homology_dims(k), (std::vector<std::size_t>{0, 1}));
}

TEST(ReducedHomology, HollowTriangle)
{
    auto k = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(reduced_homology_dims(k), (std::vector<std::size_t>{0, 0, 1}));
}

TEST(ReducedHomology, FourCycleComplexMatchesDenseOracle)
{
    auto k = independence_complex(build_family(FamilySpec::graph(Family::cycle_graph, 4)));
    auto got = reduced_homology_dims(k);
    EXPECT_EQ(got, dense_reduced_homology(k));
    EXPECT_EQ(got, (std::vector<std::size_t>{0, 1, 0}));
}

TEST(ReducedHomology, EmptyFaceOnly)
{
    auto k = SimplicialComplex::from_facets(0, {{}});
    EXPECT_EQ(reduced_homology_dims(k), (std::vector<std::size_t>{1}));
}

TEST(ReducedHomology, RejectsCompositeCharacteristic)
{
    auto k = SimplicialComplex::from_facets(2, {{0}, {1}});
    EXPECT_THROW(reduced_homology_dims(k, 4), InvalidInput);
}

TEST(HochsterBetti, Triangle)
{
    auto t = hochster_betti(build_family(FamilySpec::graph(Family::cycle_graph, 3)));
    BettiTable want;
    want.add(0, 0, 1);
    want.add(1, 2, 3);
    want.add(2, 3, 2);
    EXPECT_EQ(t, want);
}

TEST(HochsterBetti, FourCycleTopClass)
{
    auto t = hochster_betti(build_family(FamilySpec::graph(Family::cycle_graph, 4)));
    EXPECT_EQ(t.get(3, 4), 1u);
    EXPECT_EQ(t.get(1, 2), 4u);
}

TEST(HochsterBetti, StarGraph)
{
    auto t = hochster_betti(build_family({Family::hyperstar, 3, 2, 1}));
    BettiTable want;
    want.add(0, 0, 1);
    want.add(1, 2, 3);
    want.add(2, 3, 3);
    want.add(3, 4, 1);
    EXPECT_EQ(t, want);
}

TEST(HochsterBetti, SizeLimit)
{
    EXPECT_THROW(hochster_betti(build_family(FamilySpec::graph(Family::cycle_graph, 21))), SizeLimitError);
}

TEST(HilbertFromComplex, Examples)
{
    auto simplex = SimplicialComplex::from_facets(1, {{0}});
    EXPECT_EQ(hilbert_from_complex(simplex), RationalFunction(Polynomial{1}, Polynomial{1, -1}));
    auto c4 = independence_complex(build_family(FamilySpec::graph(Family::cycle_graph, 4)));
    EXPECT_EQ(hilbert_from_complex(c4), RationalFunction(Polynomial{1, 2, -1}, Polynomial{1, -1}.pow(2)));
    auto c5 = independence_complex(build_family(FamilySpec::graph(Family::cycle_graph, 5)));
    EXPECT_EQ(hilbert_from_complex(c5), RationalFunction(Polynomial{1, 3, 1}, Polynomial{1, -1}.pow(2)));
}

TEST(ComplexProperties, HomologyMatchesDenseOracleAndEuler)
{
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 150; ++trial) {
        auto k = random_complex(rng, 3 + trial % 5);
        auto dims = reduced_homology_dims(k);
        EXPECT_EQ(dims, dense_reduced_homology(k));
        EXPECT_EQ(reduced_euler_from_homology(dims), reduced_euler_from_faces(k));
        EXPECT_EQ(reduced_homology_dims(k, 2).size(), dims.size());
    }
}

TEST(ComplexProperties, ConesAreAcyclic)
{
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 100; ++trial) {
        auto k = random_complex(rng, 3 + trial % 5);
        auto c = k.cone();
        EXPECT_TRUE(all_zero(reduced_homology_dims(c)));
        EXPECT_TRUE(all_zero(reduced_homology_dims(c, 3)));
    }
}

TEST(ComplexProperties, BettiVanishingAndCharacteristicAgreement)
{
    const std::vector<FamilySpec> specs{
        {Family::hyperline, 3, 3, 1},  {Family::hypercycle, 4, 3, 1}, {Family::hyperstar, 3, 3, 2},
        FamilySpec::graph(Family::wheel, 6), FamilySpec::graph(Family::cycle_graph, 7),
        {Family::hypercycle, 3, 4, 2}};
    for (const auto& s : specs) {
        auto h = build_family(s);
        auto t0 = hochster_betti(h, 0);
        EXPECT_EQ(t0, hochster_betti(h, 2)) << s.describe();
        EXPECT_EQ(t0.get(0, 0), 1u);
        for (const auto& [key, v] : t0.entries()) {
            EXPECT_LE(key.first, key.second);
            EXPECT_LE(key.second, h.vertex_count());
            EXPECT_GT(v, 0u);
        }
    }
}

TEST(HochsterBetti, MatchesLiteralSumOnRandomHypergraphs)
{
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        const int nv = 4 + trial % 5;
        const int edge_size = trial % 3 == 2 ? 3 : 2;
        std::uniform_int_distribution<int> vert(0, nv - 1);
        std::vector<Edge> edges;
        for (int k = 0; k < 3 + trial % 6; ++k) {
            std::vector<int> e;
            while (static_cast<int>(e.size()) < edge_size) {
                const int v = vert(rng);
                if (std::find(e.begin(), e.end(), v) == e.end())
                    e.push_back(v);
            }
            std::sort(e.begin(), e.end());
            if (std::find(edges.begin(), edges.end(), e) == edges.end())
                edges.push_back(e);
        }
        const Hypergraph h(nv, edges);
        BettiTable want;
        for (VertexSet s = 0; s < (VertexSet{1} << nv); ++s) {
            std::vector<int> label(static_cast<std::size_t>(nv), -1);
            int j = 0;
            for (int v = 0; v < nv; ++v)
                if (s >> v & 1u)
                    label[static_cast<std::size_t>(v)] = j++;
            std::vector<Edge> inside;
            for (const auto& e : edges) {
                Edge r;
                for (int v : e)
                    if (label[static_cast<std::size_t>(v)] >= 0)
                        r.push_back(label[static_cast<std::size_t>(v)]);
                if (r.size() == e.size())
                    inside.push_back(r);
            }
            const auto dims = dense_reduced_homology(independence_complex(Hypergraph(j, inside)));
            for (std::size_t idx = 0; idx < dims.size(); ++idx)
                want.add(j - static_cast<int>(idx), j, dims[idx]);
        }
        EXPECT_EQ(hochster_betti(h), want) << trial;
        EXPECT_EQ(hochster_betti(h, 3), want) << trial;
    }
}
