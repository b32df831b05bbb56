#ifndef IWCONTRACT_JSON_IO_HPP
#define IWCONTRACT_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "invariants.hpp"
#include "liecore.hpp"
#include "polyring.hpp"
#include "verify.hpp"

namespace iwcontract {

using ordered_json = nlohmann::ordered_json;

inline ordered_json rat_matrix_json(const RatMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Canonical polynomial dump: a list of {"coeff","mono"} objects in
/// graded-lex order, coefficients as exact rational strings.
inline ordered_json poly_json(const SparsePoly& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        ordered_json mono = ordered_json::object();
        for (const auto& [v, e] : m.factors) mono[p.universe()->label(v)] = e;
        terms.push_back(ordered_json{{"coeff", rat_to_string(c)}, {"mono", std::move(mono)}});
    }
    return terms;
}

inline ordered_json gvector_json(const Algebra& alg, const GVector& v) {
    ordered_json obj = ordered_json::object();
    for (const auto& [i, c] : v.coords) obj[alg.basis.label(i)] = rat_to_string(c);
    return obj;
}

inline ordered_json spec_json(const AlgebraSpec& spec) {
    return ordered_json{{"family", std::string(1, family_letter(spec.family))},
                        {"rank", spec.rank}};
}

inline ordered_json algebra_json(const Algebra& alg) {
    ordered_json j;
    j["family"] = std::string(1, family_letter(alg.spec.family));
    j["rank"] = alg.spec.rank;
    j["matrix_dim"] = alg.spec.matrix_dim();
    j["dim"] = alg.spec.dim();
    ordered_json basis = ordered_json::array();
    for (const auto& e : alg.basis.elements) {
        ordered_json be;
        be["label"] = e.label;
        switch (e.kind) {
            case LabelKind::cartan: be["kind"] = "cartan"; break;
            case LabelKind::positive: be["kind"] = "positive"; break;
            case LabelKind::negative: be["kind"] = "negative"; break;
        }
        if (!e.root.empty()) be["root"] = e.root;
        be["matrix"] = rat_matrix_json(e.matrix);
        basis.push_back(std::move(be));
    }
    j["basis"] = std::move(basis);
    j["gram"] = rat_matrix_json(alg.basis.gram);
    ordered_json sc = ordered_json::array();
    for (int i = 0; i < alg.basis.dim(); ++i)
        for (int k = i + 1; k < alg.basis.dim(); ++k) {
            const auto& entries = alg.basis.bracket_table[i][k];
            if (entries.empty()) continue;
            ordered_json bracket = ordered_json::array();
            for (const auto& [m, c] : entries)
                bracket.push_back(
                    ordered_json{{"label", alg.basis.label(m)}, {"coeff", rat_to_string(c)}});
            sc.push_back(ordered_json{{"pair", {alg.basis.label(i), alg.basis.label(k)}},
                                      {"bracket", std::move(bracket)}});
        }
    j["structure_constants"] = std::move(sc);
    ordered_json rd;
    rd["simple_roots"] = alg.roots.simple_roots;
    rd["positive_roots"] = alg.roots.positive_roots;
    rd["theta"] = alg.roots.theta;
    rd["a"] = alg.roots.a_coeffs;
    rd["coxeter"] = alg.roots.coxeter;
    rd["exponents"] = alg.roots.exponents;
    rd["degrees"] = alg.roots.degrees;
    j["root_datum"] = std::move(rd);
    return j;
}

inline ordered_json invariants_json(const Algebra& alg, const InvariantData& inv) {
    ordered_json j;
    j["family"] = std::string(1, family_letter(alg.spec.family));
    j["rank"] = alg.spec.rank;
    ordered_json gens = ordered_json::array();
    for (int i = 0; i < alg.basis.l; ++i) {
        ordered_json g;
        g["i"] = i + 1;
        g["degree"] = inv.hatP[i].total_degree();
        g["bidegree"] = {inv.hatP_bidegrees[i].first, inv.hatP_bidegrees[i].second};
        g["hatP"] = poly_json(inv.hatP[i]);
        g["f"] = poly_json(inv.f[i]);
        gens.push_back(std::move(g));
    }
    j["generators"] = std::move(gens);
    ordered_json adj = ordered_json::array();
    for (const auto& p : inv.adjoint_gens) adj.push_back(poly_json(p));
    j["adjoint_generators"] = std::move(adj);
    return j;
}

inline ordered_json report_json(const AlgebraSpec& spec, const std::string& mode,
                                std::uint64_t seed, std::vector<CheckReport> checks) {
    std::sort(checks.begin(), checks.end(),
              [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
    ordered_json j;
    j["spec"] = spec_json(spec);
    j["mode"] = mode;
    j["seed"] = seed;
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["status"] = to_string(c.status);
        cj["details"] = c.details;
        if (c.witness) cj["witness"] = *c.witness;
        arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
    return j;
}

} // namespace iwcontract

#endif
