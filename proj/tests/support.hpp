#pragma once

// Test-only helpers: fixture loading, random inputs, and oracles that do not
// go through the library's linear algebra.

#include "tdc/graph.hpp"
#include "tdc/potential.hpp"
#include "tdc/subdivision.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testing_support {

using tdc::AugmentedMetricGraph;
using tdc::Rational;

inline std::string fixture_path(const std::string& name) { return std::string(TDC_FIXTURE_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

inline tdc::Skeleton load_fixture(const std::string& name) { return tdc::parse_skeleton(read_file(fixture_path(name))); }

inline Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den = 6) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Rational random_length(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 5);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

/// Connected multigraph: a random spanning tree plus extra edges, loops and
/// parallel edges included.
inline AugmentedMetricGraph random_graph(std::mt19937_64& rng, std::size_t vertices, std::size_t edges, bool genera = false) {
    std::vector<tdc::Vertex> vs;
    std::uniform_int_distribution<unsigned> genus(0, 2);
    for (std::size_t i = 0; i < vertices; ++i) vs.push_back({"v" + std::to_string(i), genera ? genus(rng) : 0u, 0});
    std::vector<tdc::Edge> es;
    for (std::size_t i = 1; i < vertices; ++i) {
        std::uniform_int_distribution<std::size_t> parent(0, i - 1);
        const std::size_t p = parent(rng);
        if (rng() % 2)
            es.push_back({"e" + std::to_string(es.size()), p, i, random_length(rng)});
        else
            es.push_back({"e" + std::to_string(es.size()), i, p, random_length(rng)});
    }
    std::uniform_int_distribution<std::size_t> any(0, vertices - 1);
    while (es.size() < edges) es.push_back({"e" + std::to_string(es.size()), any(rng), any(rng), random_length(rng)});
    return AugmentedMetricGraph(std::move(vs), std::move(es));
}

/// Same graph with vertex and edge lists shuffled.
inline AugmentedMetricGraph permuted(const AugmentedMetricGraph& g, std::mt19937_64& rng) {
    std::vector<std::size_t> vp(g.vertex_count()), ep(g.edge_count());
    std::iota(vp.begin(), vp.end(), 0);
    std::iota(ep.begin(), ep.end(), 0);
    std::shuffle(vp.begin(), vp.end(), rng);
    std::shuffle(ep.begin(), ep.end(), rng);
    std::vector<std::size_t> where(g.vertex_count());
    std::vector<tdc::Vertex> vs;
    for (std::size_t i = 0; i < vp.size(); ++i) {
        where[vp[i]] = i;
        vs.push_back(g.vertices()[vp[i]]);
    }
    std::vector<tdc::Edge> es;
    for (std::size_t e : ep) {
        tdc::Edge edge = g.edges()[e];
        edge.tail = where[edge.tail];
        edge.head = where[edge.head];
        es.push_back(edge);
    }
    return AugmentedMetricGraph(std::move(vs), std::move(es));
}

inline std::vector<tdc::SubdivisionPoint> random_points(const AugmentedMetricGraph& g, std::mt19937_64& rng, std::size_t count) {
    std::vector<tdc::SubdivisionPoint> out;
    std::uniform_int_distribution<std::size_t> edge(0, g.edge_count() - 1);
    std::uniform_int_distribution<int> den(2, 9);
    for (std::size_t i = 0; i < count; ++i) {
        const int d = den(rng);
        std::uniform_int_distribution<int> num(1, d - 1);
        Rational t(num(rng), d);
        t.canonicalize();
        out.push_back({edge(rng), t});
    }
    return out;
}

// ---- oracles ---------------------------------------------------------------

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

inline std::size_t component_count(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    UnionFind uf(n);
    std::size_t c = n;
    for (auto [a, b] : edges)
        if (uf.unite(a, b)) --c;
    return c;
}

/// Enumerates edge subsets of size V-1 until one is a spanning tree and
/// returns the number of edges outside it. Exponential; small graphs only.
inline std::size_t betti_by_tree_enumeration(const AugmentedMetricGraph& g) {
    const std::size_t v = g.vertex_count(), e = g.edge_count();
    std::vector<bool> pick(e, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(v - 1), true);
    do {
        UnionFind uf(v);
        bool tree = true;
        for (std::size_t i = 0; i < e && tree; ++i)
            if (pick[i]) tree = uf.unite(g.edges()[i].tail, g.edges()[i].head);
        if (tree) return e - (v - 1);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    throw std::logic_error("no spanning tree");
}

/// Fundamental cycles of a BFS spanning tree, as signed edge-incidence
/// vectors (+1 traversed along the edge, -1 against).
inline std::vector<std::vector<int>> fundamental_cycles(const AugmentedMetricGraph& g) {
    const std::size_t v = g.vertex_count();
    std::vector<std::size_t> parent_edge(v, SIZE_MAX), depth(v, 0);
    std::vector<bool> seen(v, false), in_tree(g.edge_count(), false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::size_t x = queue[qi];
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            const auto& edge = g.edges()[e];
            std::size_t y;
            if (edge.tail == x) y = edge.head;
            else if (edge.head == x) y = edge.tail;
            else continue;
            if (seen[y]) continue;
            seen[y] = true;
            parent_edge[y] = e;
            depth[y] = depth[x] + 1;
            in_tree[e] = true;
            queue.push_back(y);
        }
    }
    auto parent = [&](std::size_t x) {
        const auto& edge = g.edges()[parent_edge[x]];
        return edge.tail == x ? edge.head : edge.tail;
    };
    std::vector<std::vector<int>> cycles;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (in_tree[e]) continue;
        std::vector<int> c(g.edge_count(), 0);
        c[e] = 1;  // head -> tail through the tree closes the cycle
        std::size_t a = g.edges()[e].head, b = g.edges()[e].tail;
        // walk a up toward b: path head ... tail
        std::vector<std::pair<std::size_t, int>> from_a, from_b;
        while (a != b) {
            if (depth[a] >= depth[b]) {
                const std::size_t pe = parent_edge[a];
                from_a.push_back({pe, g.edges()[pe].tail == a ? 1 : -1});
                a = parent(a);
            } else {
                const std::size_t pe = parent_edge[b];
                from_b.push_back({pe, g.edges()[pe].head == b ? 1 : -1});
                b = parent(b);
            }
        }
        for (auto [pe, s] : from_a) c[pe] += s;
        for (auto [pe, s] : from_b) c[pe] += s;
        cycles.push_back(std::move(c));
    }
    return cycles;
}

/// Solves ddc f = mu, f(base) = 0 by Gaussian elimination written out here
/// on the node-balance equations, independent of tdc::linalg.
inline std::vector<Rational> oracle_green(const tdc::Subdivision& sub, const std::vector<Rational>& mu, std::size_t base) {
    const std::size_t n = sub.node_count();
    // unknowns: f at every node but base; equations: balance at every node but base
    std::vector<std::size_t> var(n, SIZE_MAX);
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (i != base) var[i] = m++;
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
    for (const auto& seg : sub.segments()) {
        const Rational w = 1 / seg.length;
        // balance at x: sum over segments of (f(other) - f(x)) / len = mu(x)
        for (auto [x, y] : {std::pair{seg.tail, seg.head}, std::pair{seg.head, seg.tail}}) {
            if (x == base) continue;
            if (y != base) a[var[x]][var[y]] += w;
            a[var[x]][var[x]] -= w;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (i != base) a[var[i]][m] = mu[i];
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t p = c;
        while (p < m && sgn(a[p][c]) == 0) ++p;
        if (p == m) throw std::logic_error("oracle: singular reduced Laplacian");
        std::swap(a[p], a[c]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == c || sgn(a[r][c]) == 0) continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= m; ++k) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<Rational> f(n);
    for (std::size_t i = 0; i < n; ++i)
        if (i != base) f[i] = a[var[i]][m] / a[var[i]][var[i]];
    return f;
}

}  // namespace testing_support
