#pragma once

/**
 * @file hypergraph.hpp
 * @brief The uniform hypergraph families and their edge ideals.
 *
 * Vertex layouts (0-based, deterministic):
 * - hyperline: edge i covers [i(d-a), i(d-a)+d); its last a vertices are the
 *   first a vertices of edge i+1.
 * - hypercycle: as the hyperline, indices taken mod n(d-a).
 * - hyperstar: core vertices 0..a-1 first, then edge i owns the block
 *   [a + i(d-a), a + (i+1)(d-a)).
 * - wheel: center 0, rim 1..n; rim edges {i, i+1} first, then spokes {0, i}.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace hypalg {

enum class Family { hyperline, hypercycle, hyperstar, line_graph, cycle_graph, wheel };

inline std::string_view family_name(Family f)
{
    switch (f) {
    case Family::hyperline: return "hyperline";
    case Family::hypercycle: return "hypercycle";
    case Family::hyperstar: return "hyperstar";
    case Family::line_graph: return "line-graph";
    case Family::cycle_graph: return "cycle-graph";
    case Family::wheel: return "wheel";
    }
    return "?";
}

inline std::optional<Family> parse_family(std::string_view name)
{
    for (Family f : {Family::hyperline, Family::hypercycle, Family::hyperstar, Family::line_graph,
                     Family::cycle_graph, Family::wheel})
        if (family_name(f) == name)
            return f;
    return std::nullopt;
}

struct FamilySpec {
    Family family = Family::hyperline;
    int n = 1;
    int d = 2;
    int alpha = 1;

    /// Plain graphs and wheels force d = 2, alpha = 1.
    static FamilySpec graph(Family f, int n) { return {f, n, 2, 1}; }

    bool is_graph_family() const
    {
        return family == Family::line_graph || family == Family::cycle_graph || family == Family::wheel;
    }

    /// The hyper-family a plain graph family specializes.
    Family underlying() const
    {
        switch (family) {
        case Family::line_graph: return Family::hyperline;
        case Family::cycle_graph: return Family::hypercycle;
        default: return family;
        }
    }

    std::string describe() const
    {
        return std::string(family_name(family)) + "(n=" + std::to_string(n) + ", d=" + std::to_string(d) +
               ", alpha=" + std::to_string(alpha) + ")";
    }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Reasons the spec violates its own invariants; empty when valid.
inline std::vector<std::string> spec_violations(const FamilySpec& s)
{
    std::vector<std::string> out;
    if (s.is_graph_family() && (s.d != 2 || s.alpha != 1))
        out.emplace_back("plain graphs and wheels require d = 2, alpha = 1");
    if (s.d < 2)
        out.emplace_back("edge size d must be at least 2");
    if (s.alpha < 1)
        out.emplace_back("overlap alpha must be at least 1");
    if (s.alpha >= s.d)
        out.emplace_back("overlap alpha must be smaller than d");
    const bool needs_three = s.family == Family::hypercycle || s.family == Family::cycle_graph ||
                             s.family == Family::wheel;
    if (needs_three && s.n < 3)
        out.emplace_back("cycles and wheels require n >= 3");
    if (s.n < 1)
        out.emplace_back("n must be at least 1");
    return out;
}

inline void validate_spec(const FamilySpec& s)
{
    auto v = spec_violations(s);
    if (!v.empty())
        throw InvalidFamily(s.describe() + ": " + v.front());
    const Family u = s.underlying();
    if ((u == Family::hyperline || u == Family::hypercycle) && 2 * s.alpha > s.d)
        throw UnsupportedParameter(s.describe() + ": 2*alpha > d is not covered");
}

/// Closed-form vertex count of a (valid) family.
inline int family_vertex_count(const FamilySpec& s)
{
    switch (s.underlying()) {
    case Family::hyperline: return s.n * s.d - (s.n - 1) * s.alpha;
    case Family::hypercycle: return s.n * (s.d - s.alpha);
    case Family::hyperstar: return s.n * (s.d - s.alpha) + s.alpha;
    case Family::wheel: return s.n + 1;
    default: return 0;
    }
}

using Edge = std::vector<int>;

class Hypergraph {
public:
    Hypergraph() = default;

    /// Edges are stored sorted; throws InvalidInput on a malformed edge.
    Hypergraph(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count), edges_(std::move(edges))
    {
        if (vertex_count_ < 0)
            throw InvalidInput("negative vertex count");
        std::set<Edge> seen;
        for (auto& e : edges_) {
            std::sort(e.begin(), e.end());
            if (e.empty())
                throw InvalidInput("empty edge");
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw InvalidInput("edge with repeated vertex");
            if (e.front() < 0 || e.back() >= vertex_count_)
                throw InvalidInput("edge vertex out of range");
            if (!seen.insert(e).second)
                throw InvalidInput("duplicate edge");
        }
    }

    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Edge supports as bitmasks; requires vertex_count <= 64.
    std::vector<std::uint64_t> edge_masks() const
    {
        if (vertex_count_ > 64)
            throw SizeLimitError("bitmask encoding supports at most 64 vertices");
        std::vector<std::uint64_t> out;
        out.reserve(edges_.size());
        for (const auto& e : edges_) {
            std::uint64_t m = 0;
            for (int v : e)
                m |= std::uint64_t{1} << v;
            out.push_back(m);
        }
        return out;
    }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
};

inline Hypergraph build_family(const FamilySpec& spec)
{
    validate_spec(spec);
    const int n = spec.n;
    const int d = spec.d;
    const int a = spec.alpha;
    const int nv = family_vertex_count(spec);
    std::vector<Edge> edges;
    switch (spec.underlying()) {
    case Family::hyperline:
    case Family::hypercycle:
        for (int i = 0; i < n; ++i) {
            Edge e;
            for (int k = 0; k < d; ++k)
                e.push_back((i * (d - a) + k) % nv);
            edges.push_back(std::move(e));
        }
        break;
    case Family::hyperstar:
        for (int i = 0; i < n; ++i) {
            Edge e;
            for (int k = 0; k < a; ++k)
                e.push_back(k);
            for (int k = 0; k < d - a; ++k)
                e.push_back(a + i * (d - a) + k);
            edges.push_back(std::move(e));
        }
        break;
    case Family::wheel:
        for (int i = 1; i <= n; ++i)
            edges.push_back({i, i % n + 1});
        for (int i = 1; i <= n; ++i)
            edges.push_back({0, i});
        break;
    default:
        throw InvalidFamily("unknown family");
    }
    return {nv, std::move(edges)};
}

/// One squarefree generator per edge, in edge order.
inline std::vector<Edge> edge_ideal(const Hypergraph& h) { return h.edges(); }

struct ValidationReport {
    bool uniform = false;
    bool vertex_count_ok = false;
    bool intersections_ok = false;
    std::vector<std::vector<int>> intersection_sizes;
    std::vector<std::vector<int>> required_sizes;
    std::vector<int> free_vertices; ///< per edge: vertices lying in no other edge
    std::vector<std::string> failures;
    bool pass = false;
};

namespace detail {

/// Required intersection size of distinct edges i and j in the family's edge order.
inline int required_intersection(const FamilySpec& s, int i, int j)
{
    const int n = s.n;
    switch (s.underlying()) {
    case Family::hyperline: return (i - j == 1 || j - i == 1) ? s.alpha : 0;
    case Family::hypercycle: {
        const int diff = ((i - j) % n + n) % n;
        return (diff == 1 || diff == n - 1) ? s.alpha : 0;
    }
    case Family::hyperstar: return s.alpha;
    case Family::wheel: {
        const bool rim_i = i < n;
        const bool rim_j = j < n;
        if (!rim_i && !rim_j)
            return 1; // spokes share the center
        if (rim_i && rim_j) {
            const int diff = ((i - j) % n + n) % n;
            return (diff == 1 || diff == n - 1) ? 1 : 0;
        }
        const int rim = rim_i ? i : j;
        const int spoke = (rim_i ? j : i) - n;
        return (spoke == rim || spoke == (rim + 1) % n) ? 1 : 0;
    }
    default: return 0;
    }
}

} // namespace detail

inline ValidationReport validate_family(const Hypergraph& h, const FamilySpec& spec)
{
    ValidationReport r;
    r.failures = spec_violations(spec);
    const auto& edges = h.edges();
    const int m = static_cast<int>(edges.size());

    r.uniform = std::all_of(edges.begin(), edges.end(),
                            [&](const Edge& e) { return static_cast<int>(e.size()) == spec.d; });
    if (!r.uniform)
        r.failures.emplace_back("hypergraph is not d-uniform");

    const int expected_edges = spec.family == Family::wheel ? 2 * spec.n : spec.n;
    if (m != expected_edges)
        r.failures.emplace_back("edge count " + std::to_string(m) + " differs from " +
                                std::to_string(expected_edges));

    r.vertex_count_ok = r.failures.empty() && h.vertex_count() == family_vertex_count(spec);
    if (r.failures.empty() && !r.vertex_count_ok)
        r.failures.emplace_back("vertex count " + std::to_string(h.vertex_count()) + " differs from " +
                                std::to_string(family_vertex_count(spec)));

    std::vector<int> membership(static_cast<std::size_t>(h.vertex_count()), 0);
    for (const auto& e : edges)
        for (int v : e)
            ++membership[static_cast<std::size_t>(v)];

    r.intersection_sizes.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            std::vector<int> common;
            std::set_intersection(edges[i].begin(), edges[i].end(), edges[j].begin(), edges[j].end(),
                                  std::back_inserter(common));
            r.intersection_sizes[i][j] = static_cast<int>(common.size());
        }
        r.free_vertices.push_back(static_cast<int>(
            std::count_if(edges[i].begin(), edges[i].end(), [&](int v) { return membership[v] == 1; })));
    }

    if (r.failures.empty()) {
        r.required_sizes.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
        r.intersections_ok = true;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                r.required_sizes[i][j] = i == j ? spec.d : detail::required_intersection(spec, i, j);
                if (r.required_sizes[i][j] != r.intersection_sizes[i][j])
                    r.intersections_ok = false;
            }
        if (!r.intersections_ok)
            r.failures.emplace_back("pairwise intersection sizes do not match the family pattern");
        if (spec.underlying() == Family::hyperstar && m > 0) {
            const auto core = std::count(membership.begin(), membership.end(), m);
            if (m > 1 && core != spec.alpha)
                r.failures.emplace_back("common core does not have size alpha");
        }
    }
    r.pass = r.failures.empty();
    return r;
}

} // namespace hypalg
