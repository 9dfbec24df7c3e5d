#include "support.hpp"

#include "tdc/potential.hpp"

#include <doctest.h>

using namespace tdc;
using namespace testing_support;

namespace {

DiscreteMeasure random_balanced(const Subdivision::Ptr& sub, std::mt19937_64& rng, std::size_t atoms) {
    std::uniform_int_distribution<std::size_t> pick(0, sub->node_count() - 1);
    std::map<std::size_t, Rational> m;
    Rational total = 0;
    for (std::size_t i = 0; i < atoms; ++i) {
        const Rational w = random_rational(rng, -6, 6);
        m[pick(rng)] += w;
        total += w;
    }
    m[pick(rng)] -= total;
    std::erase_if(m, [](const auto& kv) { return sgn(kv.second) == 0; });
    return DiscreteMeasure(sub, m);
}

}  // namespace

TEST_CASE("green on a unit path") {
    const auto g = load_fixture("path.skel").graph;
    const auto sub = Subdivision::create(g);
    const DiscreteMeasure mu(sub, {{0, Rational(1)}, {1, Rational(-1)}});
    const PLFunction f = green_solve(mu, 0);
    CHECK(f.value(0) == 0);
    CHECK(f.value(1) == 1);
    CHECK(ddc(f) == mu);
}

TEST_CASE("green on the circle of circumference 2") {
    // mu = delta_p - delta_q; f is the tent with slope 1/2 on both arcs
    const auto g = load_fixture("ac4-potential.skel").graph;
    const auto sub = Subdivision::create(g);
    const DiscreteMeasure mu(sub, {{0, Rational(1)}, {1, Rational(-1)}});
    const PLFunction f = green_solve(mu, 0);
    CHECK(f.value(1) == Rational(1, 2));
    CHECK(f.slope(0) == Rational(1, 2));
    CHECK(f.slope(1) == Rational(-1, 2));
}

TEST_CASE("nonzero mass is rejected with the mass in the message") {
    const auto sub = Subdivision::create(load_fixture("theta.skel").graph);
    const DiscreteMeasure mu(sub, {{0, Rational(2, 3)}});
    try {
        green_solve(mu, 0);
        FAIL("expected NoSolution");
    } catch (const NoSolution& e) {
        CHECK(e.mass() == Rational(2, 3));
        CHECK(std::string(e.what()) == "no solution: total mass nonzero (mass = 2/3)");
    }
}

TEST_CASE("zero measure gives the zero potential") {
    const auto sub = Subdivision::create(load_fixture("dumbbell.skel").graph);
    const PLFunction f = green_solve(DiscreteMeasure(sub), 1);
    CHECK(f == PLFunction::constant(sub, 0));
}

TEST_CASE("green agrees with the elimination oracle on random graphs") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = random_graph(rng, 1 + rng() % 7, 1 + rng() % 12);
        const auto sub = Subdivision::create(g, random_points(g, rng, rng() % 5));
        const auto mu = random_balanced(sub, rng, 1 + rng() % 4);
        const std::size_t base = rng() % sub->node_count();
        const PLFunction f = green_solve(mu, base);
        CHECK(f.values() == oracle_green(*sub, mu.dense(), base));
        CHECK(ddc(f) == mu);
    }
}

TEST_CASE("ddc of a PL function has total mass zero") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = random_graph(rng, 1 + rng() % 6, 1 + rng() % 10);
        const auto sub = Subdivision::create(g, random_points(g, rng, 3));
        std::vector<Rational> v(sub->node_count());
        for (auto& x : v) x = random_rational(rng, -5, 5);
        CHECK(ddc(PLFunction(sub, v)).mass() == 0);
    }
}

TEST_CASE("harmonic functions are the constants") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = random_graph(rng, 1 + rng() % 6, 1 + rng() % 10);
        const auto sub = Subdivision::create(g, random_points(g, rng, 2));
        const auto h = harmonic_space(sub);
        REQUIRE(h.size() == 1);
        const auto& v = h[0].values();
        CHECK(std::all_of(v.begin(), v.end(), [&](const Rational& x) { return x == v[0]; }));
    }
}

TEST_CASE("extrema lie on the support of the measure") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = random_graph(rng, 2 + rng() % 6, 2 + rng() % 12);
        const auto sub = Subdivision::create(g, random_points(g, rng, 4));
        const auto mu = random_balanced(sub, rng, 2);
        if (mu.is_zero()) continue;
        const auto f = green_solve(mu, 0);
        const auto& v = f.values();
        Rational top = v[0], bottom = v[0];
        for (const auto& x : v) top = std::max(top, x), bottom = std::min(bottom, x);
        bool top_on = false, bottom_on = false;
        for (const auto& [n, _] : mu.atoms()) {
            top_on = top_on || v[n] == top;
            bottom_on = bottom_on || v[n] == bottom;
        }
        CHECK(top_on);
        CHECK(bottom_on);
    }
}

TEST_CASE("green is independent of the subdivision") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const auto g = random_graph(rng, 1 + rng() % 5, 1 + rng() % 8);
        const auto coarse = Subdivision::create(g, random_points(g, rng, 2));
        const auto fine = coarse->refined(random_points(g, rng, 5));
        const auto mu = random_balanced(coarse, rng, 3);
        std::map<std::size_t, Rational> moved;
        for (const auto& [n, w] : mu.atoms()) moved[*fine->find_node(coarse->nodes()[n].name)] = w;
        const auto f = green_solve(mu, 0);
        const auto f_fine = green_solve(DiscreteMeasure(fine, moved), 0);
        CHECK(f_fine.restricted_to(coarse) == f);
        CHECK(f.refined_to(fine) == f_fine);
    }
}

TEST_CASE("measure specs") {
    const auto g = load_fixture("theta.skel").graph;
    const auto spec = parse_measure_spec(g, "v1:1 e3@1/2:-1/2  v2:-1/2");
    REQUIRE(spec.atoms.size() == 3);
    CHECK(support_points(spec).size() == 1);
    const auto sub = Subdivision::create(g, support_points(spec));
    const auto mu = make_measure(sub, spec);
    CHECK(mu.mass() == 0);
    CHECK(mu.weight(*sub->find_node("e3@1/2")) == Rational(-1, 2));
    CHECK_THROWS_AS(parse_measure_spec(g, "v1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_measure_spec(g, "zz:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_measure_spec(g, "v1:1/0"), std::invalid_argument);
    CHECK_THROWS_AS(make_measure(Subdivision::create(g), spec), std::invalid_argument);
}

TEST_CASE("resolution audit") {
    for (const char* name : {"circle.skel", "theta.skel", "tree.skel", "dumbbell.skel"}) {
        const auto a = resolution_audit(load_fixture(name).graph, 3);
        CHECK(a.passed());
        CHECK(a.l0_dim == a.l1_dim);
    }
}
