#include <catch2/catch_amalgamated.hpp>

#include <iwcontract/liecore.hpp>
#include <iwcontract/prng.hpp>

#include <algorithm>

using namespace iwcontract;

namespace {

const std::vector<AlgebraSpec> kSupported = {
    {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2},
    {Family::C, 2}, {Family::C, 3}, {Family::D, 3}, {Family::D, 4},
};

// Independent dimension oracle for B/C/D: the kernel of x -> x^T J + J x
// as a linear operator on all n x n matrices.
int symmetry_kernel_dim(Family fam, int l) {
    int n = AlgebraSpec{fam, l}.matrix_dim();
    RatMatrix j(n, n);
    for (int i = 0; i < n; ++i) j(i, n - 1 - i) = (fam == Family::C && i >= l) ? Rat(-1) : Rat(1);
    RatMatrix op(n * n, n * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            // (x^T J)_{rc} = sum_k x_{kr} J_{kc}; (J x)_{rc} = sum_k J_{rk} x_{kc}
            for (int k = 0; k < n; ++k) {
                op(r * n + c, k * n + r) += j(k, c);
                op(r * n + c, k * n + c) += j(r, k);
            }
        }
    return static_cast<int>(kernel_dimension(op));
}

GVector random_gv(const Algebra& alg, SplitMix64& rng) {
    GVector v;
    for (int i = 0; i < alg.basis.dim(); ++i) {
        long c = rng.next_in(-999, 999);
        if (c != 0) v.coords.emplace(i, Rat(c));
    }
    return v;
}

} // namespace

TEST_CASE("rank constraints reject coinciding low-rank types") {
    REQUIRE_THROWS_AS(build_algebra({Family::B, 1}), UnsupportedRank);
    REQUIRE_THROWS_AS(build_algebra({Family::C, 1}), UnsupportedRank);
    REQUIRE_THROWS_AS(build_algebra({Family::D, 1}), UnsupportedRank);
    REQUIRE_THROWS_AS(build_algebra({Family::D, 2}), UnsupportedRank);
    REQUIRE_THROWS_AS(build_algebra({Family::A, 0}), UnsupportedRank);
    REQUIRE_NOTHROW(build_algebra({Family::A, 1}));
}

TEST_CASE("A1 realization is the standard sl2 triple") {
    Algebra alg = build_algebra({Family::A, 1});
    REQUIRE(alg.basis.dim() == 3);
    REQUIRE(alg.basis.label(0) == "t1");
    REQUIRE(alg.basis.label(1) == "e{+1}");
    REQUIRE(alg.basis.label(2) == "e{-1}");
    const RatMatrix& t1 = alg.basis.elements[0].matrix;
    REQUIRE(t1(0, 0) == 1);
    REQUIRE(t1(1, 1) == -1);
    REQUIRE(alg.basis.elements[1].matrix(0, 1) == 1);
    REQUIRE(alg.basis.elements[2].matrix(1, 0) == 1);
    REQUIRE(alg.roots.theta == std::vector<int>{1});
    REQUIRE(alg.roots.a_coeffs == std::vector<int>{1});
    REQUIRE(alg.roots.coxeter == 2);
}

TEST_CASE("C2 root data from the matrix construction") {
    Algebra alg = build_algebra({Family::C, 2});
    REQUIRE(alg.roots.theta == std::vector<int>{2, 1});
    REQUIRE(alg.roots.a_coeffs == std::vector<int>{2, 1});
    REQUIRE(alg.roots.coxeter == 4);
    REQUIRE(alg.roots.exponents == std::vector<int>{1, 3});
    REQUIRE(alg.roots.positive_roots.size() == 4);
}

TEST_CASE("dimension matches the independent symmetry-kernel oracle") {
    for (const auto& spec : kSupported) {
        Algebra alg = build_algebra(spec);
        REQUIRE(alg.basis.dim() == spec.dim());
        if (spec.family == Family::A) {
            REQUIRE(spec.dim() == spec.matrix_dim() * spec.matrix_dim() - 1);
        } else {
            REQUIRE(spec.dim() == symmetry_kernel_dim(spec.family, spec.rank));
        }
    }
}

TEST_CASE("basis matrices are triangular slices and lie in g") {
    for (const auto& spec : kSupported) {
        Algebra alg = build_algebra(spec);
        const int n = alg.basis.n;
        for (int k = 0; k < alg.basis.dim(); ++k) {
            const auto& e = alg.basis.elements[k];
            Rat tr = e.matrix.trace();
            REQUIRE(tr == 0);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    if (e.matrix(p, q) == 0) continue;
                    switch (e.kind) {
                        case LabelKind::cartan: REQUIRE(p == q); break;
                        case LabelKind::positive: REQUIRE(p < q); break;
                        case LabelKind::negative: REQUIRE(p > q); break;
                    }
                }
        }
    }
}

TEST_CASE("exponents match the dual partition of root heights") {
    for (const auto& spec : kSupported) {
        Algebra alg = build_algebra(spec);
        std::vector<int> hist(alg.roots.coxeter, 0);
        for (int k = alg.basis.pos_begin; k < alg.basis.pos_end; ++k)
            ++hist[alg.basis.elements[k].height - 1];
        std::vector<int> dual;
        for (int j = 1; j <= hist[0]; ++j) {
            int count = 0;
            for (int h : hist)
                if (h >= j) ++count;
            dual.push_back(count);
        }
        std::sort(dual.begin(), dual.end());
        REQUIRE(dual == alg.roots.exponents);
    }
}

TEST_CASE("bracket on A1 generators") {
    Algebra alg = build_algebra({Family::A, 1});
    GVector e = gvec(alg.basis, {{"e{+1}", 1}});
    GVector f = gvec(alg.basis, {{"e{-1}", 1}});
    GVector t = gvec(alg.basis, {{"t1", 1}});
    REQUIRE(bracket_g(alg, e, f) == t);
    REQUIRE(bracket_g(alg, t, e) == e.scaled(2));
    REQUIRE(bracket_g(alg, e, e).is_zero());
}

TEST_CASE("Jacobi identity and ad-invariance of the trace form on basis triples") {
    for (const auto& spec : {AlgebraSpec{Family::A, 2}, AlgebraSpec{Family::B, 2},
                             AlgebraSpec{Family::C, 2}, AlgebraSpec{Family::D, 3}}) {
        Algebra alg = build_algebra(spec);
        const int dim = alg.basis.dim();
        auto unit = [](int i) {
            GVector v;
            v.coords.emplace(i, Rat(1));
            return v;
        };
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j) {
                for (int k = j + 1; k < dim; ++k) {
                    GVector acc = bracket_g(alg, unit(i), bracket_g(alg, unit(j), unit(k)));
                    acc += bracket_g(alg, unit(j), bracket_g(alg, unit(k), unit(i)));
                    acc += bracket_g(alg, unit(k), bracket_g(alg, unit(i), unit(j)));
                    REQUIRE(acc.is_zero());
                }
                for (int k = 0; k < dim; ++k) {
                    // beta([x,y],z) = beta(x,[y,z])
                    Rat lhs = trace_form(alg, bracket_g(alg, unit(i), unit(j)), unit(k));
                    Rat rhs = trace_form(alg, unit(i), bracket_g(alg, unit(j), unit(k)));
                    REQUIRE(lhs == rhs);
                }
            }
    }
}

TEST_CASE("opposite root vectors bracket into the Cartan span") {
    for (const auto& spec : kSupported) {
        Algebra alg = build_algebra(spec);
        for (int k = alg.basis.pos_begin; k < alg.basis.pos_end; ++k) {
            GVector pos, neg;
            pos.set(k, Rat(1));
            neg.set(alg.basis.mirror(k), Rat(1));
            GVector br = bracket_g(alg, pos, neg);
            for (const auto& [idx, c] : br.coords) REQUIRE(alg.basis.is_cartan(idx));
        }
    }
}

TEST_CASE("trace form values on A1") {
    Algebra alg = build_algebra({Family::A, 1});
    GVector e = gvec(alg.basis, {{"e{+1}", 1}});
    GVector f = gvec(alg.basis, {{"e{-1}", 1}});
    GVector t = gvec(alg.basis, {{"t1", 1}});
    REQUIRE(trace_form(alg, e, f) == 1);
    REQUIRE(trace_form(alg, e, t) == 0);
    REQUIRE(trace_form(alg, t, t) == 2);
    REQUIRE(trace_form(alg, e, e) == 0);
}

TEST_CASE("projection onto u^-") {
    Algebra alg = build_algebra({Family::A, 1});
    GVector x = gvec(alg.basis, {{"t1", 1}, {"e{+1}", 1}, {"e{-1}", 3}});
    GVector expect = gvec(alg.basis, {{"e{-1}", 3}});
    REQUIRE(project_negative(alg, x) == expect);
    GVector b = gvec(alg.basis, {{"t1", 5}, {"e{+1}", -2}});
    REQUIRE(project_negative(alg, b).is_zero());
    REQUIRE(project_negative(alg, project_negative(alg, x)) == project_negative(alg, x));
}

TEST_CASE("expansion rejects matrices outside g") {
    Algebra alg = build_algebra({Family::A, 1});
    RatMatrix m(2, 2);
    m(0, 0) = 1;  // not traceless
    REQUIRE_THROWS_AS(alg.basis.expand(m), BasisMismatch);
    RatMatrix ok(2, 2);
    ok(0, 1) = 5;
    ok(0, 0) = 2;
    ok(1, 1) = -2;
    GVector v = alg.basis.expand(ok);
    REQUIRE(v == gvec(alg.basis, {{"t1", 2}, {"e{+1}", 5}}));
    REQUIRE_THROWS_AS(alg.basis.index_of("e{+7}"), BasisMismatch);
}

TEST_CASE("centralizer dimensions") {
    Algebra a1 = build_algebra({Family::A, 1});
    REQUIRE(centralizer_dim(a1, GVector{}) == 3);
    REQUIRE(centralizer_dim(a1, gvec(a1.basis, {{"t1", 1}})) == 1);

    Algebra a2 = build_algebra({Family::A, 2});
    GVector reg_nilp;
    for (int k = a2.basis.pos_begin; k < a2.basis.pos_end; ++k)
        if (a2.basis.elements[k].height == 1) reg_nilp.set(k, Rat(1));
    REQUIRE(centralizer_dim(a2, reg_nilp) == 2);
}

TEST_CASE("random sampling hits the regular locus") {
    for (const auto& spec : {AlgebraSpec{Family::A, 2}, AlgebraSpec{Family::C, 2}}) {
        Algebra alg = build_algebra(spec);
        SplitMix64 rng(2024);
        int regular = 0;
        for (int s = 0; s < 20; ++s)
            if (centralizer_dim(alg, random_gv(alg, rng)) == alg.basis.l) ++regular;
        REQUIRE(regular >= 1);
        // regular semisimple diagonal elements centralise exactly t
        for (int s = 0; s < 5; ++s) {
            GVector t;
            for (int i = 0; i < alg.basis.l; ++i) t.set(i, Rat(rng.next_in(-999, 999)));
            bool regular_t = true;
            for (int k = alg.basis.pos_begin; k < alg.basis.pos_end; ++k)
                if (root_on_cartan(alg, k, t) == 0) regular_t = false;
            if (regular_t) REQUIRE(centralizer_dim(alg, t) == alg.basis.l);
        }
    }
}

TEST_CASE("partitions are enumerated in decreasing lexicographic order") {
    auto parts = partitions_desc(4);
    std::vector<std::vector<int>> expect = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    REQUIRE(parts == expect);
    REQUIRE(partitions_desc(2).size() == 2);
    REQUIRE(partitions_desc(3).size() == 3);
}

TEST_CASE("nilpotent representatives per Jordan partition") {
    Algebra a1 = build_algebra({Family::A, 1});
    auto reps1 = nilpotent_representatives(a1);
    REQUIRE(reps1.size() == 2);
    REQUIRE(reps1[0] == gvec(a1.basis, {{"e{+1}", 1}}));  // partition 2
    REQUIRE(reps1[1].is_zero());                          // partition 1+1

    REQUIRE(nilpotent_representatives(build_algebra({Family::A, 2})).size() == 3);
    Algebra a3 = build_algebra({Family::A, 3});
    auto reps3 = nilpotent_representatives(a3);
    REQUIRE(reps3.size() == 5);
    for (const auto& rep : reps3)
        for (const auto& [i, c] : rep.coords) REQUIRE(a3.basis.in_u(i));

    Algebra b2 = build_algebra({Family::B, 2});
    REQUIRE_THROWS_AS(nilpotent_representatives(b2), UnsupportedFamily);
}

TEST_CASE("centralizer of a Jordan representative matches the classical formula") {
    // dim z_{sl(n)}(e_lambda) = sum_i (2i-1) lambda_i - 1, lambda the
    // block partition in decreasing order.
    for (int l : {1, 2, 3}) {
        Algebra alg = build_algebra({Family::A, l});
        auto reps = nilpotent_representatives(alg);
        auto parts = partitions_desc(l + 1);
        for (std::size_t k = 0; k < reps.size(); ++k) {
            int expect = -1;
            for (std::size_t i = 0; i < parts[k].size(); ++i)
                expect += (2 * static_cast<int>(i) + 1) * parts[k][i];
            REQUIRE(centralizer_dim(alg, reps[k]) == expect);
        }
    }
}

TEST_CASE("exp_ad is the exact exponential of the adjoint action") {
    Algebra alg = build_algebra({Family::A, 2});
    GVector e = gvec(alg.basis, {{"e{+1,0}", 1}});
    GVector t = gvec(alg.basis, {{"t1", 1}});
    // exp(ad e)(t) = t + [e,t] since [e,[e,t]] is proportional to [e,e] = 0
    GVector expect = t + bracket_g(alg, e, t);
    REQUIRE(exp_ad(alg, e, t) == expect);
    // matrix-level cross-check: exp(ad x)(y) = exp(X) Y exp(-X) for nilpotent X
    GVector x = gvec(alg.basis, {{"e{+1,0}", 2}, {"e{+1,1}", -3}});
    GVector y = gvec(alg.basis, {{"t2", 1}, {"e{-0,1}", 5}});
    RatMatrix xm = alg.basis.to_matrix(x);
    RatMatrix expx = RatMatrix::identity(3), term = RatMatrix::identity(3);
    Rat fact(1);
    for (int k = 1; k <= 4; ++k) {
        term = term * xm;
        fact *= k;
        RatMatrix scaled = term.scaled(1 / fact);
        expx = expx + scaled;
    }
    RatMatrix expected = expx * alg.basis.to_matrix(y) * inverse(expx);
    REQUIRE(alg.basis.to_matrix(exp_ad(alg, x, y)) == expected);
}
