// Walks the full pipeline for one algebra: build the matrix realization,
// construct the contracted coadjoint invariants, show that the top one is
// a monomial, and estimate the index from exact Kirillov ranks.

#include <iostream>
#include <string>

#include <iwcontract/contraction.hpp>
#include <iwcontract/invariants.hpp>
#include <iwcontract/liecore.hpp>

using namespace iwcontract;

namespace {

std::string poly_to_text(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms()) {
        if (!s.empty()) s += " + ";
        s += rat_to_string(c);
        for (const auto& [v, e] : m.factors) {
            s += " " + p.universe()->label(v);
            if (e > 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

} // namespace

int main(int argc, char** argv) {
    Family family = Family::C;
    int rank = 2;
    if (argc == 3) {
        family = family_from_letter(argv[1][0]);
        rank = std::atoi(argv[2]);
    }

    Algebra alg = build_algebra({family, rank});
    std::cout << "algebra " << alg.spec.name() << ": dim " << alg.basis.dim() << ", "
              << alg.basis.positive_count() << " positive roots, Coxeter number "
              << alg.roots.coxeter << "\n";
    std::cout << "highest root coefficients:";
    for (int a : alg.roots.a_coeffs) std::cout << " " << a;
    std::cout << "\n\n";

    VarMap vm = make_varmap(alg);
    InvariantData inv = build_invariants(alg, vm);
    for (int i = 0; i < alg.basis.l; ++i) {
        std::cout << "hatP_" << i + 1 << "  (bi-degree (" << inv.hatP_bidegrees[i].first << ","
                  << inv.hatP_bidegrees[i].second << "), " << inv.hatP[i].term_count()
                  << " terms)";
        if (inv.hatP[i].term_count() <= 6) std::cout << " = " << poly_to_text(inv.hatP[i]);
        std::cout << "\n";
    }
    std::cout << "\ntop invariant as a monomial: " << poly_to_text(monomial_top_invariant(alg, vm))
              << "\n";

    IndexEstimate est = index_estimate(alg, 25, 0);
    std::cout << "index estimate: " << est.index << " (rank of g is " << alg.basis.l << ")\n";
    return 0;
}
