#include <catch2/catch_amalgamated.hpp>

#include <iwcontract/iwcontract.hpp>

using namespace iwcontract;

namespace {

bool all_pass(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (r.status != CheckStatus::pass) return false;
    return !reports.empty();
}

} // namespace

TEST_CASE("structure suite passes on every supported spec") {
    for (const auto& spec : {AlgebraSpec{Family::A, 1}, AlgebraSpec{Family::A, 2},
                             AlgebraSpec{Family::B, 2}, AlgebraSpec{Family::C, 2},
                             AlgebraSpec{Family::D, 3}}) {
        SpecContext ctx(spec);
        auto reports = check_structure_suite(ctx);
        INFO(spec.name());
        REQUIRE(all_pass(reports));
    }
}

TEST_CASE("invariance suite, symbolic and sampled") {
    SpecContext a2({Family::A, 2});
    REQUIRE(all_pass(check_invariance_suite(a2, Mode::symbolic, 7, 10)));
    REQUIRE(all_pass(check_invariance_suite(a2, Mode::sampled, 7, 10)));

    SpecContext c2({Family::C, 2});
    REQUIRE(all_pass(check_invariance_suite(c2, Mode::automatic, 42, 10)));
}

TEST_CASE("negative control: a perturbed invariant fails with a witness") {
    SpecContext ctx({Family::A, 2});
    const auto& inv = ctx.invariants();
    for (int i = 0; i < ctx.alg.basis.l; ++i) {
        auto perturbed = inv.hatP;
        perturbed[i] += coordinate_poly(ctx.vm, 0);  // + X_{t1}, not invariant
        auto reports = check_invariance_of(ctx, perturbed, Mode::symbolic, 0, 10);
        bool failed = false;
        for (const auto& r : reports)
            if (r.status == CheckStatus::fail) {
                failed = true;
                REQUIRE(r.witness.has_value());
            }
        REQUIRE(failed);
        // the sampled mode catches it as well
        auto sampled = check_invariance_of(ctx, perturbed, Mode::sampled, 0, 10);
        bool sampled_failed = false;
        for (const auto& r : sampled)
            if (r.status == CheckStatus::fail) sampled_failed = true;
        REQUIRE(sampled_failed);
    }
}

TEST_CASE("index and degrees suite") {
    for (const auto& spec : {AlgebraSpec{Family::A, 1}, AlgebraSpec{Family::A, 2},
                             AlgebraSpec{Family::C, 2}}) {
        SpecContext ctx(spec);
        auto reports = check_index_and_degrees(ctx, 3, 10);
        INFO(spec.name());
        REQUIRE(all_pass(reports));
    }
}

TEST_CASE("regularity suite") {
    SpecContext a2({Family::A, 2});
    auto ra = check_regularity_suite(a2, 5, 10);
    REQUIRE(all_pass(ra));
    bool has_subregular = false;
    for (const auto& r : ra)
        if (r.name.find("subregular") != std::string::npos) has_subregular = true;
    REQUIRE(has_subregular);

    SpecContext c2({Family::C, 2});
    auto rc = check_regularity_suite(c2, 5, 10);
    REQUIRE(all_pass(rc));
    bool has_divisor = false;
    for (const auto& r : rc)
        if (r.name.find("divisor") != std::string::npos) has_divisor = true;
    REQUIRE(has_divisor);
}

TEST_CASE("null-cone inequality suite") {
    // A1: both orbits meet the bound with equality: the regular nilpotent
    // gives 1 + 2 = 3, the zero orbit 3 + 0 = 3.
    SpecContext a1({Family::A, 1});
    auto r1 = check_nullcone_inequality(a1, 0);
    REQUIRE(r1.size() == 2);
    REQUIRE(r1[0].name == "nullcone/partition_2");
    REQUIRE(r1[0].details == "dim g^e = 1, 2 dim span P_i(e) = 2 >= 3l = 3");
    REQUIRE(r1[1].name == "nullcone/partition_1+1");
    REQUIRE(r1[1].details == "dim g^e = 3, 2 dim span P_i(e) = 0 >= 3l = 3");
    REQUIRE(all_pass(r1));

    SpecContext a2({Family::A, 2});
    auto reports = check_nullcone_inequality(a2, 0);
    REQUIRE(reports.size() == 3);  // partitions of 3
    REQUIRE(all_pass(reports));

    SpecContext b2({Family::B, 2});
    REQUIRE_THROWS_AS(check_nullcone_inequality(b2, 0), UnsupportedFamily);
    // user-supplied nilpotent elements are accepted
    std::vector<GVector> user{GVector{}};
    auto ur = check_nullcone_inequality(b2, 0, user);
    REQUIRE(ur.size() == 1);
    REQUIRE(ur[0].status == CheckStatus::pass);  // dim g + 0 >= 3l
}

TEST_CASE("highest components suite") {
    for (const auto& spec : {AlgebraSpec{Family::A, 1}, AlgebraSpec{Family::B, 2},
                             AlgebraSpec{Family::D, 3}}) {
        SpecContext ctx(spec);
        INFO(spec.name());
        REQUIRE(all_pass(check_highest_components(ctx)));
    }
}

TEST_CASE("reports are deterministic for a fixed seed") {
    for (std::uint64_t seed : {0ULL, 9ULL}) {
        SpecContext c1({Family::A, 2});
        SpecContext c2({Family::A, 2});
        auto r1 = check_invariance_suite(c1, Mode::sampled, seed, 8);
        auto r2 = check_invariance_suite(c2, Mode::sampled, seed, 8);
        auto j1 = report_json({Family::A, 2}, "sampled", seed, r1);
        auto j2 = report_json({Family::A, 2}, "sampled", seed, r2);
        REQUIRE(j1.dump() == j2.dump());
    }
}

TEST_CASE("report JSON carries the pinned schema") {
    SpecContext ctx({Family::A, 1});
    auto reports = check_structure_suite(ctx);
    auto j = report_json({Family::A, 1}, "symbolic", 3, reports);
    REQUIRE(j["spec"]["family"] == "A");
    REQUIRE(j["spec"]["rank"] == 1);
    REQUIRE(j["mode"] == "symbolic");
    REQUIRE(j["seed"] == 3);
    REQUIRE(j["checks"].is_array());
    REQUIRE(j["checks"].size() == reports.size());
    for (const auto& c : j["checks"]) {
        REQUIRE(c.contains("name"));
        REQUIRE(c.contains("status"));
        REQUIRE(c.contains("details"));
    }
    // canonical order: sorted by name
    std::string prev;
    for (const auto& c : j["checks"]) {
        std::string name = c["name"];
        REQUIRE(prev <= name);
        prev = name;
    }
}

TEST_CASE("mode resolution policy") {
    REQUIRE(resolve_mode({Family::A, 4}, Mode::automatic) == Mode::symbolic);
    REQUIRE(resolve_mode({Family::C, 3}, Mode::automatic) == Mode::symbolic);
    REQUIRE(resolve_mode({Family::D, 4}, Mode::automatic) == Mode::sampled);
    REQUIRE(resolve_mode({Family::D, 4}, Mode::symbolic) == Mode::symbolic);
    REQUIRE(resolve_mode({Family::A, 2}, Mode::sampled) == Mode::sampled);
}

TEST_CASE("algebra and invariants serialize deterministically") {
    SpecContext ctx({Family::C, 2});
    auto j1 = algebra_json(ctx.alg);
    auto j2 = algebra_json(build_algebra({Family::C, 2}));
    REQUIRE(j1.dump(2) == j2.dump(2));
    auto inv_j = invariants_json(ctx.alg, ctx.invariants());
    REQUIRE(inv_j["generators"].size() == 2);
    REQUIRE(inv_j["generators"][0]["bidegree"] == ordered_json({1, 1}));
    REQUIRE(inv_j["generators"][1]["bidegree"] == ordered_json({3, 1}));
    // polynomial dump format: list of {"coeff","mono"}
    const auto& terms = inv_j["generators"][0]["hatP"];
    REQUIRE(terms.is_array());
    for (const auto& t : terms) {
        REQUIRE(t.contains("coeff"));
        REQUIRE(t.contains("mono"));
    }
}
