#pragma once

/**
 * @file complex.hpp
 * @brief Independence complexes, reduced homology over a field, Hochster's
 *        formula and face-counting Hilbert series.
 *
 * Vertex sets are bitmasks. Complexes are stored by their facets; faces are
 * generated on demand. Homology dimensions come from ranks of boundary
 * matrices, computed by sparse column reduction over Q (characteristic 0)
 * or over GF(p).
 */

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exactalg.hpp"
#include "hypergraph.hpp"

namespace hypalg {

using VertexSet = std::uint32_t;

inline constexpr int kMaxComplexVertices = 24;
inline constexpr int kMaxHochsterVertices = 20;

inline int set_size(VertexSet s) { return std::popcount(s); }

inline VertexSet to_vertex_set(const std::vector<int>& vs)
{
    VertexSet m = 0;
    for (int v : vs) {
        if (v < 0 || v >= kMaxComplexVertices)
            throw InvalidInput("vertex index out of range for a complex");
        m |= VertexSet{1} << v;
    }
    return m;
}

inline std::vector<int> to_vertex_list(VertexSet s)
{
    std::vector<int> out;
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

class SimplicialComplex {
public:
    /// The void complex (no faces at all).
    SimplicialComplex() = default;

    /// Facets must be pairwise incomparable; {{}} is the complex {∅}.
    static SimplicialComplex from_facets(int vertex_count, const std::vector<std::vector<int>>& facets)
    {
        check_vertex_count(vertex_count);
        std::vector<VertexSet> masks;
        for (const auto& f : facets) {
            for (int v : f)
                if (v < 0 || v >= vertex_count)
                    throw InvalidInput("facet vertex out of range");
            masks.push_back(to_vertex_set(f));
        }
        for (std::size_t i = 0; i < masks.size(); ++i)
            for (std::size_t j = 0; j < masks.size(); ++j)
                if (i != j && (masks[i] & masks[j]) == masks[i])
                    throw InvalidInput("a facet is contained in another facet");
        SimplicialComplex k;
        k.vertex_count_ = vertex_count;
        k.facets_ = std::move(masks);
        std::sort(k.facets_.begin(), k.facets_.end());
        return k;
    }

    /// Keeps only the maximal sets of a (downward closed or not) face list.
    static SimplicialComplex from_faces(int vertex_count, std::vector<VertexSet> faces)
    {
        check_vertex_count(vertex_count);
        std::sort(faces.begin(), faces.end(),
                  [](VertexSet a, VertexSet b) { return set_size(a) != set_size(b) ? set_size(a) > set_size(b) : a < b; });
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        std::vector<VertexSet> facets;
        for (VertexSet f : faces) {
            if (vertex_count < 32 && (f >> vertex_count) != 0)
                throw InvalidInput("face vertex out of range");
            const bool covered =
                std::any_of(facets.begin(), facets.end(), [f](VertexSet g) { return (f & g) == f; });
            if (!covered)
                facets.push_back(f);
        }
        SimplicialComplex k;
        k.vertex_count_ = vertex_count;
        k.facets_ = std::move(facets);
        std::sort(k.facets_.begin(), k.facets_.end());
        return k;
    }

    int vertex_count() const { return vertex_count_; }
    const std::vector<VertexSet>& facet_masks() const { return facets_; }

    std::vector<std::vector<int>> facets() const
    {
        std::vector<std::vector<int>> out;
        for (VertexSet f : facets_)
            out.push_back(to_vertex_list(f));
        return out;
    }

    bool is_void() const { return facets_.empty(); }

    /// Largest face dimension (-1 for {∅}, -2 for the void complex).
    int dimension() const
    {
        int best = -2;
        for (VertexSet f : facets_)
            best = std::max(best, set_size(f) - 1);
        return best;
    }

    /// Every face, the empty face included, sorted by (size, mask).
    std::vector<VertexSet> faces() const
    {
        std::vector<VertexSet> out;
        for (VertexSet f : facets_) {
            VertexSet sub = f;
            while (true) {
                out.push_back(sub);
                if (sub == 0)
                    break;
                sub = (sub - 1) & f;
            }
        }
        sort_faces(out);
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    /// Cone over a new apex vertex (index vertex_count()).
    SimplicialComplex cone() const
    {
        check_vertex_count(vertex_count_ + 1);
        SimplicialComplex k;
        k.vertex_count_ = vertex_count_ + 1;
        const VertexSet apex = VertexSet{1} << vertex_count_;
        for (VertexSet f : facets_)
            k.facets_.push_back(f | apex);
        if (k.facets_.empty())
            k.facets_.push_back(apex);
        return k;
    }

    static void sort_faces(std::vector<VertexSet>& faces)
    {
        std::sort(faces.begin(), faces.end(), [](VertexSet a, VertexSet b) {
            return set_size(a) != set_size(b) ? set_size(a) < set_size(b) : a < b;
        });
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    static void check_vertex_count(int n)
    {
        if (n < 0)
            throw InvalidInput("negative vertex count");
        if (n > kMaxComplexVertices)
            throw SizeLimitError("complexes are limited to " + std::to_string(kMaxComplexVertices) +
                                 " vertices");
    }

    int vertex_count_ = 0;
    std::vector<VertexSet> facets_;
};

/// Sparse table of graded Betti numbers beta_{i,j}; zero entries are absent.
class BettiTable {
public:
    using Key = std::pair<int, int>;

    void add(int i, int j, std::uint64_t value)
    {
        if (value == 0)
            return;
        entries_[{i, j}] += value;
    }

    std::uint64_t get(int i, int j) const
    {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }

    const std::map<Key, std::uint64_t>& entries() const { return entries_; }

    /// Total Betti number beta_i.
    std::uint64_t total(int i) const
    {
        std::uint64_t s = 0;
        for (const auto& [key, v] : entries_)
            if (key.first == i)
                s += v;
        return s;
    }

    int max_homological_degree() const
    {
        int m = 0;
        for (const auto& e : entries_)
            m = std::max(m, e.first.first);
        return m;
    }

    /// Sum over (i, j) of (-1)^i beta_{i,j} t^j: the K-polynomial.
    Polynomial alternating_numerator() const
    {
        Polynomial p;
        for (const auto& [key, v] : entries_) {
            Integer c(static_cast<unsigned long>(v));
            p += Polynomial::monomial(key.first % 2 == 0 ? c : Integer(-c), static_cast<std::size_t>(key.second));
        }
        return p;
    }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::map<Key, std::uint64_t> entries_;
};

namespace detail {

/// Faces containing no edge: DFS over vertices in index order.
inline std::vector<VertexSet> independent_sets(int vertex_count, const std::vector<VertexSet>& edges)
{
    std::vector<std::vector<VertexSet>> by_vertex(static_cast<std::size_t>(vertex_count));
    for (VertexSet e : edges)
        for (int v : to_vertex_list(e))
            by_vertex[static_cast<std::size_t>(v)].push_back(e);
    std::vector<VertexSet> out;
    auto dfs = [&](auto&& self, int v, VertexSet cur) -> void {
        if (v == vertex_count) {
            out.push_back(cur);
            return;
        }
        self(self, v + 1, cur);
        const VertexSet next = cur | (VertexSet{1} << v);
        for (VertexSet e : by_vertex[static_cast<std::size_t>(v)])
            if ((next & e) == e)
                return;
        self(self, v + 1, next);
    };
    dfs(dfs, 0, 0);
    SimplicialComplex::sort_faces(out);
    return out;
}

inline std::vector<VertexSet> complex_edge_masks(const Hypergraph& h)
{
    if (h.vertex_count() > kMaxComplexVertices)
        throw SizeLimitError("independence complexes are limited to " + std::to_string(kMaxComplexVertices) +
                             " vertices");
    std::vector<VertexSet> out;
    for (std::uint64_t m : h.edge_masks())
        out.push_back(static_cast<VertexSet>(m));
    return out;
}

struct RationalField {
    using value_type = Rational;
    static bool is_zero(const value_type& x) { return x == 0; }
    value_type from_sign(int s) const { return value_type(s); }
    value_type div(const value_type& a, const value_type& b) const { return a / b; }
    value_type mul_sub(const value_type& a, const value_type& f, const value_type& b) const { return a - f * b; }
    value_type neg(const value_type& a) const { return -a; }
};

struct PrimeField {
    using value_type = std::uint64_t;
    std::uint64_t p;

    static bool is_zero(value_type x) { return x == 0; }
    value_type from_sign(int s) const { return s >= 0 ? 1 % p : p - 1; }
    value_type inv(value_type a) const
    {
        // Fermat: a^(p-2)
        value_type r = 1;
        value_type base = a % p;
        for (std::uint64_t e = p - 2; e; e >>= 1U) {
            if (e & 1U)
                r = r * base % p;
            base = base * base % p;
        }
        return r;
    }
    value_type div(value_type a, value_type b) const { return a * inv(b) % p; }
    value_type mul_sub(value_type a, value_type f, value_type b) const { return (a + p - f * b % p) % p; }
};

template <class V>
using SparseColumn = std::vector<std::pair<std::uint32_t, V>>;

/// Rank of a matrix given by sparse columns sorted by row index.
///
/// Standard column reduction on the largest row index. Reduced columns are
/// scaled to have pivot 1; `pivot_rows` collects the pivot of each nonzero one.
template <class Field>
std::size_t column_rank(const Field& field, std::vector<SparseColumn<typename Field::value_type>>& columns,
                        std::vector<std::uint32_t>* pivot_rows = nullptr)
{
    using V = typename Field::value_type;
    std::map<std::uint32_t, std::size_t> owner;
    std::size_t rank = 0;
    SparseColumn<V> scratch;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        auto& col = columns[c];
        while (!col.empty()) {
            auto it = owner.find(col.back().first);
            if (it == owner.end())
                break;
            const auto& piv = columns[it->second];
            const V factor = col.back().second; // pivot of `piv` is 1
            scratch.clear();
            std::size_t a = 0;
            std::size_t b = 0;
            while (a < col.size() || b < piv.size()) {
                if (b == piv.size() || (a < col.size() && col[a].first < piv[b].first)) {
                    scratch.push_back(std::move(col[a++]));
                } else if (a == col.size() || piv[b].first < col[a].first) {
                    V v = field.mul_sub(V(0), factor, piv[b].second);
                    scratch.emplace_back(piv[b].first, std::move(v));
                    ++b;
                } else {
                    V v = field.mul_sub(col[a].second, factor, piv[b].second);
                    if (!Field::is_zero(v))
                        scratch.emplace_back(col[a].first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            std::swap(col, scratch);
        }
        if (col.empty())
            continue;
        const V lead = col.back().second;
        for (auto& entry : col)
            entry.second = field.div(entry.second, lead);
        owner.emplace(col.back().first, c);
        if (pivot_rows)
            pivot_rows->push_back(col.back().first);
        ++rank;
    }
    return rank;
}

inline bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

inline void check_field_char(int field_char)
{
    if (field_char != 0 && !is_prime(field_char))
        throw InvalidInput("field characteristic must be 0 or a prime, got " + std::to_string(field_char));
}

/// Reduced homology dims of the complex whose face list (downward closed,
/// sorted by size) is given. Entry q+1 holds dim H~_q.
template <class Field>
std::vector<std::size_t> reduced_homology_from_faces(const std::vector<VertexSet>& faces, const Field& field)
{
    using V = typename Field::value_type;
    if (faces.empty())
        return {0};
    std::vector<std::vector<VertexSet>> layers;
    for (VertexSet f : faces) {
        const auto s = static_cast<std::size_t>(set_size(f));
        if (layers.size() <= s)
            layers.resize(s + 1);
        layers[s].push_back(f);
    }
    for (auto& l : layers)
        std::sort(l.begin(), l.end());

    // rank_of[L]: rank of the boundary from layer L to layer L-1.
    std::vector<std::size_t> rank_of(layers.size() + 1, 0);
    std::vector<std::uint32_t> cleared;
    for (std::size_t L = layers.size() - 1; L >= 1; --L) {
        std::vector<bool> skip(layers[L].size(), false);
        for (std::uint32_t r : cleared)
            skip[r] = true;
        const auto& lower = layers[L - 1];
        std::vector<SparseColumn<V>> cols;
        cols.reserve(layers[L].size());
        for (std::size_t idx = 0; idx < layers[L].size(); ++idx) {
            if (skip[idx])
                continue;
            const VertexSet f = layers[L][idx];
            SparseColumn<V> col;
            int pos = 0;
            for (VertexSet rest = f; rest; rest &= rest - 1, ++pos) {
                const VertexSet v = rest & (~rest + 1);
                const VertexSet g = f ^ v;
                auto it = std::lower_bound(lower.begin(), lower.end(), g);
                col.emplace_back(static_cast<std::uint32_t>(it - lower.begin()), field.from_sign(pos % 2 == 0 ? 1 : -1));
            }
            std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            cols.push_back(std::move(col));
        }
        cleared.clear();
        rank_of[L] = column_rank(field, cols, &cleared);
    }
    std::vector<std::size_t> dims(layers.size(), 0);
    for (std::size_t L = 0; L < layers.size(); ++L)
        dims[L] = layers[L].size() - rank_of[L] - rank_of[L + 1];
    return dims;
}

inline std::vector<std::size_t> reduced_homology_dispatch(const std::vector<VertexSet>& faces, int field_char)
{
    check_field_char(field_char);
    if (field_char == 0)
        return reduced_homology_from_faces(faces, RationalField{});
    return reduced_homology_from_faces(faces, PrimeField{static_cast<std::uint64_t>(field_char)});
}

/// Shrinks s without changing the homotopy type of the induced independence
/// complex of a graph: a vertex whose neighbourhood contains another vertex's
/// neighbourhood is dropped. Returns 0 when an isolated vertex makes the
/// complex a cone.
inline VertexSet fold_graph_subset(const std::vector<VertexSet>& adjacency, VertexSet s)
{
    for (bool changed = true; changed;) {
        changed = false;
        for (VertexSet a = s; a; a &= a - 1) {
            const int u = std::countr_zero(a);
            const VertexSet nu = adjacency[static_cast<std::size_t>(u)] & s;
            if (!nu)
                return 0;
            for (VertexSet b = s & ~(VertexSet{1} << u); b; b &= b - 1) {
                const int v = std::countr_zero(b);
                if ((nu & adjacency[static_cast<std::size_t>(v)]) == nu) {
                    s &= ~(VertexSet{1} << v);
                    changed = true;
                    break;
                }
            }
            if (changed)
                break;
        }
    }
    return s;
}

/// Independent subsets of s in a graph, sorted.
inline std::vector<VertexSet> graph_independent_subsets(const std::vector<VertexSet>& adjacency, VertexSet s)
{
    std::vector<VertexSet> out;
    auto dfs = [&](auto&& self, VertexSet rest, VertexSet cur) -> void {
        if (!rest) {
            out.push_back(cur);
            return;
        }
        const int v = std::countr_zero(rest);
        const VertexSet tail = rest & (rest - 1);
        self(self, tail, cur);
        self(self, tail & ~adjacency[static_cast<std::size_t>(v)], cur | (VertexSet{1} << v));
    };
    dfs(dfs, s, 0);
    SimplicialComplex::sort_faces(out);
    return out;
}

/// Maximal sets among the facets cut down to s: the facets of the induced
/// subcomplex on s.
inline std::vector<VertexSet> restricted_facets(const std::vector<VertexSet>& facets, VertexSet s)
{
    std::vector<VertexSet> cut;
    for (VertexSet f : facets)
        cut.push_back(f & s);
    std::sort(cut.begin(), cut.end(), [](VertexSet a, VertexSet b) {
        return set_size(a) != set_size(b) ? set_size(a) > set_size(b) : a < b;
    });
    cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
    std::vector<VertexSet> out;
    for (VertexSet f : cut)
        if (std::none_of(out.begin(), out.end(), [f](VertexSet g) { return (f & g) == f; }))
            out.push_back(f);
    return out;
}

/// Faces of the nerve of a facet cover (masks over facet indices, the empty
/// face included), or nullopt when there are more than 32 facets or more
/// than `cap` faces. Facets are simplices, so the nerve has the homology
/// of the complex.
inline std::optional<std::vector<VertexSet>> nerve_faces(const std::vector<VertexSet>& facets, std::size_t cap)
{
    if (facets.size() > 32)
        return std::nullopt;
    std::vector<VertexSet> out{0};
    bool overflow = false;
    auto dfs = [&](auto&& self, std::size_t from, VertexSet chosen, VertexSet common) -> void {
        for (std::size_t k = from; k < facets.size() && !overflow; ++k) {
            const VertexSet meet = common & facets[k];
            if (!meet)
                continue;
            const VertexSet next = chosen | (VertexSet{1} << k);
            out.push_back(next);
            if (out.size() > cap) {
                overflow = true;
                return;
            }
            self(self, k + 1, next, meet);
        }
    };
    dfs(dfs, 0, 0, ~VertexSet{0});
    if (overflow)
        return std::nullopt;
    SimplicialComplex::sort_faces(out);
    return out;
}

} // namespace detail

/// Faces are exactly the vertex subsets containing no edge of h.
inline SimplicialComplex independence_complex(const Hypergraph& h)
{
    const auto edges = detail::complex_edge_masks(h);
    const auto faces = detail::independent_sets(h.vertex_count(), edges);
    std::vector<VertexSet> facets;
    const VertexSet all = h.vertex_count() == 0 ? 0 : (~VertexSet{0} >> (32 - h.vertex_count()));
    auto independent = [&](VertexSet f) {
        return std::none_of(edges.begin(), edges.end(), [f](VertexSet e) { return (f & e) == e; });
    };
    for (VertexSet f : faces) {
        bool maximal = true;
        for (VertexSet rest = all & ~f; rest && maximal; rest &= rest - 1)
            if (independent(f | (rest & (~rest + 1))))
                maximal = false;
        if (maximal)
            facets.push_back(f);
    }
    return SimplicialComplex::from_faces(h.vertex_count(), std::move(facets));
}

/// dim H~_q over Q (field_char 0) or GF(p); entry q+1 holds degree q.
inline std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& k, int field_char = 0)
{
    return detail::reduced_homology_dispatch(k.faces(), field_char);
}

/// Graded Betti numbers of R_H from Hochster's formula:
/// beta_{i,j} = sum over |S| = j of dim H~_{j-i-1}(Delta_S).
///
/// Subsets S with a vertex lying in no edge inside S are skipped: that
/// vertex is a cone point of Delta_S, which is then acyclic. For graphs S is
/// first folded down; otherwise a small facet nerve stands in for Delta_S.
inline BettiTable hochster_betti(const Hypergraph& h, int field_char = 0)
{
    detail::check_field_char(field_char);
    if (h.vertex_count() > kMaxHochsterVertices)
        throw SizeLimitError("Hochster enumeration is limited to " + std::to_string(kMaxHochsterVertices) +
                             " vertices, got " + std::to_string(h.vertex_count()));
    const auto edges = detail::complex_edge_masks(h);
    const auto faces = detail::independent_sets(h.vertex_count(), edges);
    const bool graph = std::all_of(edges.begin(), edges.end(), [](VertexSet e) { return set_size(e) == 2; });
    std::vector<VertexSet> adjacency(static_cast<std::size_t>(h.vertex_count()), 0);
    for (VertexSet e : edges)
        if (graph) {
            const int a = std::countr_zero(e);
            const int b = std::countr_zero(e & (e - 1));
            adjacency[static_cast<std::size_t>(a)] |= VertexSet{1} << b;
            adjacency[static_cast<std::size_t>(b)] |= VertexSet{1} << a;
        }
    const auto facets = graph ? std::vector<VertexSet>{} : independence_complex(h).facet_masks();
    BettiTable table;
    std::vector<VertexSet> sub;
    const VertexSet limit = VertexSet{1} << h.vertex_count();
    for (VertexSet s = 0; s < limit; ++s) {
        VertexSet covered = 0;
        for (VertexSet e : edges)
            if ((e & s) == e)
                covered |= e;
        if (covered != s)
            continue;
        std::optional<std::vector<VertexSet>> nerve;
        if (graph) {
            const VertexSet core = detail::fold_graph_subset(adjacency, s);
            if (s && !core)
                continue;
            nerve = detail::graph_independent_subsets(adjacency, core);
        } else {
            nerve = detail::nerve_faces(detail::restricted_facets(facets, s), 4096);
        }
        if (!nerve) {
            sub.clear();
            for (VertexSet f : faces)
                if ((f & s) == f)
                    sub.push_back(f);
        }
        const auto dims = detail::reduced_homology_dispatch(nerve ? *nerve : sub, field_char);
        const int j = set_size(s);
        for (std::size_t idx = 0; idx < dims.size(); ++idx) {
            const int q = static_cast<int>(idx) - 1;
            table.add(j - q - 1, j, dims[idx]);
        }
    }
    return table;
}

/// H(t) = sum over faces F of (t/(1-t))^|F|, in canonical form.
inline RationalFunction hilbert_from_complex(const SimplicialComplex& k)
{
    if (k.is_void())
        return {};
    std::vector<std::size_t> f_vector;
    for (VertexSet f : k.faces()) {
        const auto s = static_cast<std::size_t>(set_size(f));
        if (f_vector.size() <= s)
            f_vector.resize(s + 1, 0);
        ++f_vector[s];
    }
    const std::size_t top = f_vector.size() - 1;
    Polynomial num;
    const Polynomial one_minus_t{1, -1};
    for (std::size_t s = 0; s <= top; ++s)
        num += Polynomial::monomial(Integer(static_cast<unsigned long>(f_vector[s])), s) * one_minus_t.pow(top - s);
    return {num, one_minus_t.pow(top)};
}

} // namespace hypalg
