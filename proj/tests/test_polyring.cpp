#include <catch2/catch_amalgamated.hpp>

#include <iwcontract/polyring.hpp>
#include <iwcontract/prng.hpp>

using namespace iwcontract;

namespace {

SparsePoly random_poly(const UniversePtr& u, SplitMix64& rng, int max_terms = 6, int max_deg = 3) {
    SparsePoly p = SparsePoly::zero(u);
    int terms = 1 + static_cast<int>(rng.next_in(0, max_terms - 1));
    for (int t = 0; t < terms; ++t) {
        std::vector<std::pair<int, int>> factors;
        for (int v = 0; v < u->size(); ++v) {
            int e = static_cast<int>(rng.next_in(0, max_deg));
            if (e > 0) factors.emplace_back(v, e);
        }
        p += SparsePoly::monomial(u, Monomial::of(factors), Rat(rng.next_in(-9, 9)));
    }
    return p;
}

} // namespace

TEST_CASE("arithmetic identities") {
    auto u = make_universe({"x", "y"});
    SparsePoly x = SparsePoly::variable(u, "x");
    SparsePoly y = SparsePoly::variable(u, "y");

    REQUIRE((x + y) * (x - y) == x * x - y * y);
    SparsePoly p = x * x + y.scaled(3);
    REQUIRE((p + p.scaled(-1)).is_zero());
    REQUIRE(x.scaled(2).scaled(Rat(1, 2)) == x);
}

TEST_CASE("ring axioms on random polynomials") {
    auto u = make_universe({"x", "y", "z"});
    SplitMix64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        SparsePoly a = random_poly(u, rng), b = random_poly(u, rng), c = random_poly(u, rng);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
        REQUIRE(a + b == b + a);
    }
}

TEST_CASE("universe mismatch is rejected") {
    auto u1 = make_universe({"x", "y"});
    auto u2 = make_universe({"x", "z"});
    SparsePoly a = SparsePoly::variable(u1, "x");
    SparsePoly b = SparsePoly::variable(u2, "x");
    REQUIRE_THROWS_AS(a + b, UniverseMismatch);
    REQUIRE_THROWS_AS(a * b, UniverseMismatch);
    REQUIRE_THROWS_AS(u1->id("w"), UnknownVariable);
}

TEST_CASE("differentiation") {
    auto u = make_universe({"x", "y"});
    SparsePoly x = SparsePoly::variable(u, "x");
    SparsePoly y = SparsePoly::variable(u, "y");

    REQUIRE((x * x * y).derivative("x") == x * y * SparsePoly::constant(u, 2));
    REQUIRE(SparsePoly::constant(u, 7).derivative("x").is_zero());
    // d(x^3)/dx at x = 2 is 12
    SparsePoly cube = x * x * x;
    REQUIRE(cube.derivative("x").evaluate({{"x", Rat(2)}, {"y", Rat(0)}}) == 12);
    REQUIRE_THROWS_AS(cube.derivative("w"), UnknownVariable);
}

TEST_CASE("derivative properties on random pairs") {
    auto u = make_universe({"x", "y", "z"});
    SplitMix64 rng(12);
    for (int trial = 0; trial < 25; ++trial) {
        SparsePoly a = random_poly(u, rng), b = random_poly(u, rng);
        for (int v = 0; v < u->size(); ++v) {
            REQUIRE((a + b).derivative(v) == a.derivative(v) + b.derivative(v));
            REQUIRE((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
        }
    }
}

TEST_CASE("evaluation") {
    auto u = make_universe({"x", "y"});
    SparsePoly x = SparsePoly::variable(u, "x");
    SparsePoly y = SparsePoly::variable(u, "y");
    SparsePoly p = x * x + y;
    REQUIRE(p.evaluate({{"x", Rat(3)}, {"y", Rat(1)}}) == 10);

    SparsePoly q = x * y + SparsePoly::constant(u, Rat(5));
    REQUIRE(q.evaluate({{"x", Rat(0)}, {"y", Rat(0)}}) == 5);
    REQUIRE_THROWS_AS(q.evaluate(std::map<std::string, Rat>{{"x", Rat(1)}}), MissingCoordinate);

    // homogeneity: p(2 point) = 2^n p(point)
    SplitMix64 rng(13);
    SparsePoly h = x * x * y + x.pow(3).scaled(-4);
    REQUIRE(h.is_homogeneous());
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rat> pt{Rat(rng.next_in(-9, 9)), Rat(rng.next_in(-9, 9))};
        std::vector<Rat> dbl{pt[0] * 2, pt[1] * 2};
        REQUIRE(h.evaluate(dbl) == h.evaluate(pt) * rat_pow(Rat(2), 3));
    }
}

TEST_CASE("bigraded components") {
    auto u = make_universe({"x", "y"});
    SparsePoly x = SparsePoly::variable(u, "x");
    SparsePoly y = SparsePoly::variable(u, "y");
    Bigrading g = Bigrading::with_second_class(u, {"y"});

    SparsePoly p = x * x + x * y;
    auto comps = bigrade_components(p, g);
    REQUIRE(comps.size() == 2);
    REQUIRE(comps.at({2, 0}) == x * x);
    REQUIRE(comps.at({1, 1}) == x * y);

    SplitMix64 rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        SparsePoly q = random_poly(u, rng);
        auto parts = bigrade_components(q, g);
        SparsePoly sum = SparsePoly::zero(u);
        for (const auto& [bd, comp] : parts) {
            sum += comp;
            auto d = bidegree(comp, g);
            REQUIRE(d.has_value());
            REQUIRE(*d == bd);
        }
        REQUIRE(sum == q);
    }
}

TEST_CASE("jacobian rank") {
    auto u = make_universe({"x", "y"});
    SparsePoly x = SparsePoly::variable(u, "x");
    SparsePoly y = SparsePoly::variable(u, "y");

    std::vector<SparsePoly> coords{x, y};
    REQUIRE(jacobian_rank(coords, std::vector<Rat>{Rat(5), Rat(-7)}) == 2);

    std::vector<SparsePoly> ps{x * x, x * y};
    REQUIRE(jacobian_rank(ps, std::vector<Rat>{Rat(0), Rat(0)}) == 0);
    REQUIRE(jacobian_rank(ps, std::vector<Rat>{Rat(1), Rat(1)}) == 2);
    REQUIRE_THROWS_AS(jacobian_rank(ps, std::map<std::string, Rat>{{"x", Rat(1)}}),
                      MissingCoordinate);
}

TEST_CASE("jacobian rank is invariant under invertible recombination") {
    auto u = make_universe({"x", "y", "z"});
    SplitMix64 rng(15);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<SparsePoly> ps{random_poly(u, rng), random_poly(u, rng)};
        std::vector<Rat> pt{Rat(rng.next_in(-9, 9)), Rat(rng.next_in(-9, 9)),
                            Rat(rng.next_in(-9, 9))};
        // invertible 2x2 rational matrix
        Rat a(rng.next_in(1, 5)), b(rng.next_in(-5, 5)), c(rng.next_in(-5, 5));
        Rat d = (Rat(1) + b * c) / a;  // det = ad - bc = 1
        std::vector<SparsePoly> qs{ps[0].scaled(a) + ps[1].scaled(b),
                                   ps[0].scaled(c) + ps[1].scaled(d)};
        REQUIRE(jacobian_rank(ps, pt) == jacobian_rank(qs, pt));
    }
}

TEST_CASE("canonical term order is graded lexicographic over sorted labels") {
    auto u = make_universe({"b", "a"});  // sorted to a < b
    SparsePoly a = SparsePoly::variable(u, "a");
    SparsePoly b = SparsePoly::variable(u, "b");
    SparsePoly p = b + a * a * b + a + a * b * b;
    std::vector<std::string> seen;
    for (const auto& [m, c] : p.terms()) {
        std::string s;
        for (const auto& [v, e] : m.factors) s += u->label(v) + std::to_string(e);
        seen.push_back(s);
    }
    // degree 3 first (a2b before ab2), then degree 1 (a before b)
    REQUIRE(seen == std::vector<std::string>{"a2b1", "a1b2", "a1", "b1"});
}

TEST_CASE("substitution performs exact linear changes of variables") {
    auto u = make_universe({"x", "y"});
    SparsePoly x = SparsePoly::variable(u, "x");
    SparsePoly y = SparsePoly::variable(u, "y");
    SparsePoly p = x * x - y * y;
    // x -> x + y, y -> x - y: p becomes 4xy
    std::vector<SparsePoly> images{x + y, x - y};
    REQUIRE(p.substitute(images) == (x * y).scaled(4));
}
