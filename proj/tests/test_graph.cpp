#include "support.hpp"

#include "tdc/graph.hpp"
#include "tdc/region.hpp"
#include "tdc/subdivision.hpp"

#include <doctest.h>

using namespace tdc;
using namespace testing_support;

TEST_CASE("theta file parses to V=2, E=3") {
    const Skeleton s = load_fixture("theta.skel");
    CHECK(s.graph.vertex_count() == 2);
    CHECK(s.graph.edge_count() == 3);
    CHECK(s.graph.edges()[2].length == Rational(3, 2));
    CHECK(s.model == ResidueModel::Torsion);
}

TEST_CASE("loops are accepted and count twice in the valence") {
    const Skeleton s = parse_skeleton("vertex v1 genus=0\nedge e1 v1 v1 length=2\n");
    CHECK(s.graph.edges()[0].is_loop());
    CHECK(s.graph.valence(0) == 2);
}

TEST_CASE("parse errors carry line numbers") {
    auto message = [](const std::string& text) {
        try {
            parse_skeleton(text);
        } catch (const InputError& e) {
            return std::make_pair(e.line(), std::string(e.what()));
        }
        return std::make_pair(std::size_t{0}, std::string("no error"));
    };
    auto [line, msg] = message("vertex v1 genus=0\n# comment\nedge e1 v1 v1 length=0\n");
    CHECK(line == 3);
    CHECK(msg.find("non-positive length") != std::string::npos);
    CHECK(message("vertex a genus=0\nvertex a genus=0\n").second.find("duplicate id") != std::string::npos);
    CHECK(message("vertex a genus=0 picrank=1\n").second.find("picrank on genus-0 vertex") != std::string::npos);
    CHECK(message("vertex a genus=0\nvertex b genus=0\n").second.find("disconnected graph") != std::string::npos);
    CHECK(message("vertex a genus=0\nedge e a b length=1\n").first == 2);
    CHECK(message("vertex a genus=0\nfrobnicate\n").first == 2);
    CHECK(message("residue padic\nvertex a genus=0\n").first == 1);
    CHECK(message("vertex a genus=x\n").first == 1);
    CHECK(message("vertex a genus=0\nedge e a a length=1/0\n").first == 2);
    CHECK(message("").second.find("no vertices") != std::string::npos);
}

TEST_CASE("betti agrees with the spanning-tree enumeration oracle") {
    CHECK(betti(load_fixture("circle.skel").graph) == 1);
    CHECK(betti(load_fixture("tree.skel").graph) == 0);
    const auto theta = load_fixture("theta.skel").graph;
    CHECK(betti(theta) == 2);
    CHECK(betti_by_tree_enumeration(theta) == 2);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        const auto g = random_graph(rng, 1 + rng() % 6, 0 + rng() % 10);
        CHECK(betti(g) == betti_by_tree_enumeration(g));
        CHECK(betti(g) == fundamental_cycles(g).size());
    }
}

TEST_CASE("positive-genus vertices and S_X under the residue models") {
    const AugmentedMetricGraph g({{"a", 0, 0}, {"b", 2, 2}, {"c", 0, 0}, {"d", 1, 3}},
                                 {{"e1", 0, 1, 1}, {"e2", 1, 2, 1}, {"e3", 2, 3, 1}});
    CHECK(positive_genus_vertices(g) == std::vector<std::string>{"b", "d"});
    CHECK(s_dimension(g, ResidueModel::Torsion) == Dim(0));
    CHECK(s_dimension(g, ResidueModel::Explicit) == Dim(5));
    CHECK(s_dimension(g, ResidueModel::Complex).is_infinite());
    CHECK(positive_genus_vertices(load_fixture("theta.skel").graph).empty());
    CHECK(positive_genus_vertices(load_fixture("elliptic-good-reduction.skel").graph) == std::vector<std::string>{"v1"});
    // monotone in torsion <= explicit <= complex
    CHECK(s_dimension(g, ResidueModel::Torsion) <= s_dimension(g, ResidueModel::Explicit));
    CHECK(s_dimension(g, ResidueModel::Explicit) <= s_dimension(g, ResidueModel::Complex));
}

TEST_CASE("parse after serialize is the identity") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        const auto g = random_graph(rng, 1 + rng() % 8, rng() % 14, true);
        const Skeleton s{g, ResidueModel::Complex};
        CHECK(parse_skeleton(serialize(s)) == s);
    }
    const Skeleton explicit_model = load_fixture("ac8-invariance.skel");
    CHECK(parse_skeleton(serialize(explicit_model)) == explicit_model);
}

TEST_CASE("subdivide circle of length 2 at 1/4 and 3/4") {
    const auto g = load_fixture("circle.skel").graph;
    const auto sub = subdivide(g, {{0, Rational(1, 4)}, {0, Rational(3, 4)}});
    CHECK(sub->node_count() == 3);
    REQUIRE(sub->segment_count() == 3);
    CHECK(sub->segments()[0].length == Rational(1, 2));
    CHECK(sub->segments()[1].length == 1);
    CHECK(sub->segments()[2].length == Rational(1, 2));
    CHECK(subdivide(g, {})->segment_count() == 1);
    // coincident points collapse
    CHECK(subdivide(g, {{0, Rational(1, 2)}, {0, Rational(2, 4)}})->node_count() == 2);
    CHECK_THROWS_AS(subdivide(g, {{0, Rational(1)}}), std::invalid_argument);
}

TEST_CASE("subdivision keeps betti and total length") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 25; ++i) {
        const auto g = random_graph(rng, 1 + rng() % 6, 1 + rng() % 9);
        const auto sub = subdivide(g, random_points(g, rng, rng() % 8));
        const auto h = sub->as_graph();
        CHECK(betti(h) == betti(g));
        Rational a = 0, b = 0;
        for (const auto& e : g.edges()) a += e.length;
        for (const auto& e : h.edges()) b += e.length;
        CHECK(a == b);
    }
}

TEST_CASE("extract_region classification") {
    const auto theta = load_fixture("theta.skel").graph;
    const Region star = extract_region(theta, "v1", {{0, Rational(1, 2)}, {1, Rational(1, 2)}, {2, Rational(1, 2)}});
    CHECK(star.boundary_count == 3);
    CHECK(star.strictly_simple);
    CHECK(star.scope.node_list().size() == 1);

    const auto circle = load_fixture("circle.skel").graph;
    const Region arc = extract_region(circle, "v1", {{0, Rational(1, 2)}});
    CHECK(arc.boundary_count == 2);
    CHECK(arc.strictly_simple);
    const Region whole = extract_region(circle, "v1", {});
    CHECK(whole.boundary_count == 0);
    CHECK_FALSE(whole.strictly_simple);
    CHECK(whole.scope == Scope::whole(whole.scope.subdivision_ptr()));

    CHECK_THROWS_AS(extract_region(theta, "v1", {{0, Rational(1, 2)}, {0, Rational(1, 2)}}), std::invalid_argument);
    CHECK_THROWS_AS(extract_region(theta, "nope", {}), std::invalid_argument);
}

TEST_CASE("region components agree with a union-find oracle on the cut graph") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 30; ++i) {
        const auto g = random_graph(rng, 2 + rng() % 5, 2 + rng() % 7);
        auto cuts = random_points(g, rng, 1 + rng() % 4);
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        const Region r = extract_region(g, "v0", cuts);
        const auto& sub = r.scope.subdivision();
        // oracle: nodes reachable from v0 in the subdivided graph without crossing cut nodes
        std::vector<bool> is_cut(sub.node_count(), false);
        for (const auto& c : cuts) is_cut[*sub.find_point(c)] = true;
        UnionFind uf(sub.node_count());
        for (const auto& s : sub.segments())
            if (!is_cut[s.tail] && !is_cut[s.head]) uf.unite(s.tail, s.head);
        for (std::size_t n = 0; n < sub.node_count(); ++n)
            CHECK(r.scope.has_node(n) == (!is_cut[n] && uf.find(n) == uf.find(0)));
        // the region is a single component; leg ends sit at cut nodes
        CHECK(r.scope.components().size() == 1);
        for (const auto& e : r.scope.ends()) {
            const auto& s = sub.segments()[e.segment];
            CHECK(is_cut[e.side == 0 ? s.tail : s.head]);
        }
    }
}

TEST_CASE("cutting every spoke gives a star with k = valence") {
    const auto g = load_fixture("dumbbell.skel").graph;  // v1 has a loop and a bridge
    const Region r = extract_region(g, "v1", {{0, Rational(1, 3)}, {0, Rational(2, 3)}, {1, Rational(1, 2)}});
    CHECK(r.boundary_count == g.valence(0));
    CHECK(r.strictly_simple);
}

TEST_CASE("region specs") {
    const auto theta = load_fixture("theta.skel").graph;
    const RegionSpec spec = parse_region_spec(theta, "seed=v2 cut=e1:1/3  cut=e3:1/2");
    CHECK(spec.seed == "v2");
    REQUIRE(spec.cuts.size() == 2);
    CHECK(spec.cuts[0].edge == 0);
    CHECK(spec.cuts[0].t == Rational(1, 3));
    CHECK_THROWS_AS(parse_region_spec(theta, "cut=e1:1/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_region_spec(theta, "seed=v1 cut=e1:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_region_spec(theta, "seed=v1 cut=e9:1/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_region_spec(theta, "seed=v1 bogus"), std::invalid_argument);
}

TEST_CASE("collaring is idempotent and keeps the open set") {
    const auto theta = load_fixture("theta.skel").graph;
    const Region r = extract_region(theta, "v1", {{0, Rational(1, 2)}, {1, Rational(1, 4)}});
    const Scope c = r.scope.collared();
    CHECK(c.is_collared());
    CHECK(c.collared() == c);
    CHECK(c.end_count() == r.scope.end_count());
    CHECK(c.cycle_rank() == r.scope.cycle_rank());
}
