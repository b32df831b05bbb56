#ifndef IWCONTRACT_INVARIANTS_HPP
#define IWCONTRACT_INVARIANTS_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "contraction.hpp"
#include "errors.hpp"
#include "liecore.hpp"
#include "polyring.hpp"

namespace iwcontract {

/// Translation between structured-basis positions and variable ids of the
/// (label-sorted) polynomial universe attached to an algebra.
struct VarMap {
    UniversePtr uni;
    std::vector<int> uid_of_basis;
    std::vector<int> basis_of_uid;
};

inline VarMap make_varmap(const Algebra& alg) {
    std::vector<std::string> labels;
    labels.reserve(alg.basis.dim());
    for (const auto& e : alg.basis.elements) labels.push_back(e.label);
    VarMap vm;
    vm.uni = make_universe(std::move(labels));
    vm.uid_of_basis.resize(alg.basis.dim());
    vm.basis_of_uid.resize(alg.basis.dim());
    for (int i = 0; i < alg.basis.dim(); ++i) {
        int uid = vm.uni->id(alg.basis.label(i));
        vm.uid_of_basis[i] = uid;
        vm.basis_of_uid[uid] = i;
    }
    return vm;
}

inline SparsePoly coordinate_poly(const VarMap& vm, int basis_idx) {
    return SparsePoly::variable(vm.uni, vm.uid_of_basis[basis_idx]);
}

/// Universe point (one value per variable) from a coordinate vector on g.
inline std::vector<Rat> point_from_gvector(const VarMap& vm, const GVector& x) {
    std::vector<Rat> pt(vm.uni->size(), Rat(0));
    for (const auto& [i, c] : x.coords) pt[vm.uid_of_basis[i]] = c;
    return pt;
}

/// Universe point of a q* element: values of the basis-label coordinate
/// functions under the q x q* pairing.
inline std::vector<Rat> point_from_dual(const Algebra& alg, const VarMap& vm, const QDualVector& y) {
    auto basis_pt = coadjoint_point(alg, y);
    std::vector<Rat> pt(vm.uni->size(), Rat(0));
    for (int i = 0; i < alg.basis.dim(); ++i) pt[vm.uid_of_basis[i]] = basis_pt[i];
    return pt;
}

namespace detail {

using PolyMatrix = std::vector<std::vector<SparsePoly>>;

inline PolyMatrix pmat_zero(const UniversePtr& u, int n) {
    return PolyMatrix(n, std::vector<SparsePoly>(n, SparsePoly::zero(u)));
}

inline PolyMatrix pmat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    const int n = static_cast<int>(a.size());
    PolyMatrix r = pmat_zero(a[0][0].universe(), n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    return r;
}

/// Pfaffian of a skew-symmetric polynomial matrix by expansion along the
/// first remaining row.
inline SparsePoly pfaffian(const PolyMatrix& a, std::vector<int> idx) {
    if (idx.empty()) return SparsePoly::constant(a[0][0].universe(), Rat(1));
    SparsePoly out = SparsePoly::zero(a[0][0].universe());
    const int i0 = idx[0];
    for (std::size_t k = 1; k < idx.size(); ++k) {
        const SparsePoly& entry = a[i0][idx[k]];
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        for (std::size_t m = 1; m < idx.size(); ++m)
            if (m != k) rest.push_back(idx[m]);
        SparsePoly sub = pfaffian(a, std::move(rest));
        sub = sub * entry;
        if (k % 2 == 0) sub = -sub;
        out += sub;
    }
    return out;
}

inline SparsePoly pfaffian(const PolyMatrix& a) {
    std::vector<int> idx(a.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    return pfaffian(a, std::move(idx));
}

} // namespace detail

/// The generic element of g as a symbolic matrix: sum over basis elements
/// of (coordinate variable) * (basis matrix).
inline detail::PolyMatrix generic_matrix(const Algebra& alg, const VarMap& vm) {
    const int n = alg.basis.n;
    auto x = detail::pmat_zero(vm.uni, n);
    for (int k = 0; k < alg.basis.dim(); ++k) {
        const RatMatrix& b = alg.basis.elements[k].matrix;
        SparsePoly var = coordinate_poly(vm, k);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                if (b(p, q) != 0) x[p][q] += var.scaled(b(p, q));
    }
    return x;
}

/// Basic generators of the adjoint invariants of g, as polynomials in the
/// coordinate functions: trace powers, plus the Pfaffian for family D.
/// Sorted by ascending degree; degrees match the root datum.
inline std::vector<SparsePoly> basic_invariants(const Algebra& alg, const VarMap& vm) {
    const int l = alg.basis.l;
    const int n = alg.basis.n;
    auto x = generic_matrix(alg, vm);

    int max_power = 0;
    switch (alg.spec.family) {
        case Family::A: max_power = l + 1; break;
        case Family::B:
        case Family::C: max_power = 2 * l; break;
        case Family::D: max_power = 2 * (l - 1); break;
    }
    std::vector<detail::PolyMatrix> powers{x};  // powers[k] = x^{k+1}
    while (static_cast<int>(powers.size()) < (max_power + 1) / 2)
        powers.push_back(detail::pmat_mul(powers.back(), x));
    auto trace_power = [&](int m) {
        int a = (m + 1) / 2, b = m - a;
        SparsePoly tr = SparsePoly::zero(vm.uni);
        const auto& pa = powers[a - 1];
        const auto& pb = powers[b - 1];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) tr += pa[i][j] * pb[j][i];
        return tr;
    };

    std::vector<SparsePoly> fs;
    switch (alg.spec.family) {
        case Family::A:
            for (int i = 1; i <= l; ++i) fs.push_back(trace_power(i + 1));
            break;
        case Family::B:
        case Family::C:
            for (int i = 1; i <= l; ++i) fs.push_back(trace_power(2 * i));
            break;
        case Family::D: {
            for (int i = 1; i < l; ++i) fs.push_back(trace_power(2 * i));
            // Pf(Jx), with Jx skew-symmetric in the antidiagonal model.
            auto jx = detail::pmat_zero(vm.uni, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) jx[i][j] = x[n - 1 - i][j];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j <= i; ++j)
                    if (!(jx[i][j] + jx[j][i]).is_zero())
                        throw InternalError("Jx is not skew-symmetric");
            fs.push_back(detail::pfaffian(jx));
            break;
        }
    }
    std::stable_sort(fs.begin(), fs.end(), [](const SparsePoly& a, const SparsePoly& b) {
        return a.total_degree() < b.total_degree();
    });
    for (int i = 0; i < l; ++i)
        if (fs[i].total_degree() != alg.roots.degrees[i])
            throw InternalError("basic invariant degrees do not match the root datum");
    return fs;
}

/// Family of equivariant polynomial maps g -> g; entries[i] holds the
/// coordinates of the i-th map over the structured basis.
struct CovariantFamily {
    std::vector<std::vector<SparsePoly>> entries;
    std::vector<int> degrees;
};

/// Gradients F_i of the basic invariants with respect to the trace form:
/// beta(F_i(x), y) = directional derivative of f_i at x along y.
inline CovariantFamily covariant_gradients(const Algebra& alg, const VarMap& vm,
                                           const std::vector<SparsePoly>& fs) {
    const int dim = alg.basis.dim();
    CovariantFamily fam;
    for (const auto& f : fs) {
        std::vector<SparsePoly> partials;
        partials.reserve(dim);
        for (int j = 0; j < dim; ++j) partials.push_back(f.derivative(vm.uid_of_basis[j]));
        std::vector<SparsePoly> coords(dim, SparsePoly::zero(vm.uni));
        for (int k = 0; k < dim; ++k)
            for (int j = 0; j < dim; ++j) {
                const Rat& g = alg.basis.gram_inv(k, j);
                if (g != 0) coords[k] += partials[j].scaled(g);
            }
        fam.entries.push_back(std::move(coords));
        fam.degrees.push_back(f.total_degree() - 1);
    }
    return fam;
}

/// Restriction of a covariant family to u: Cartan and negative-root
/// variables are set to zero. The restricted maps must take values in u;
/// a surviving component outside u raises RangeViolation.
inline CovariantFamily restrict_covariants(const Algebra& alg, const VarMap& vm,
                                           const CovariantFamily& fam) {
    std::vector<bool> keep(vm.uni->size(), false);
    for (int i = alg.basis.pos_begin; i < alg.basis.pos_end; ++i) keep[vm.uid_of_basis[i]] = true;
    auto restrict_poly = [&](const SparsePoly& p) {
        SparsePoly r = SparsePoly::zero(vm.uni);
        for (const auto& [m, c] : p.terms()) {
            bool alive = true;
            for (const auto& [v, e] : m.factors)
                if (!keep[v]) {
                    alive = false;
                    break;
                }
            if (alive) r += SparsePoly::monomial(vm.uni, m, c);
        }
        return r;
    };
    CovariantFamily out;
    out.degrees = fam.degrees;
    for (const auto& entry : fam.entries) {
        std::vector<SparsePoly> coords;
        coords.reserve(entry.size());
        for (std::size_t k = 0; k < entry.size(); ++k) coords.push_back(restrict_poly(entry[k]));
        for (std::size_t k = 0; k < coords.size(); ++k)
            if (!alg.basis.in_u(static_cast<int>(k)) && !coords[k].is_zero())
                throw RangeViolation("restricted covariant leaves u at coordinate " +
                                     alg.basis.label(static_cast<int>(k)));
        out.entries.push_back(std::move(coords));
    }
    return out;
}

/// Value of each map of the family at a point of g.
inline std::vector<GVector> evaluate_covariants(const Algebra& alg, const VarMap& vm,
                                                const CovariantFamily& fam, const GVector& x) {
    auto pt = point_from_gvector(vm, x);
    std::vector<GVector> out;
    for (const auto& entry : fam.entries) {
        GVector v;
        for (int k = 0; k < alg.basis.dim(); ++k) {
            Rat val = entry[k].evaluate(pt);
            if (val != 0) v.coords.emplace(k, val);
        }
        out.push_back(std::move(v));
    }
    return out;
}

/// Bigrading of the label universe with b-labels first class and
/// u^--labels second class.
inline Bigrading contraction_bigrading(const Algebra& alg, const VarMap& vm) {
    std::vector<std::uint8_t> cls(vm.uni->size(), 0);
    for (int i = alg.basis.neg_begin; i < alg.basis.neg_end; ++i) cls[vm.uid_of_basis[i]] = 1;
    return Bigrading(vm.uni, std::move(cls));
}

/// The identification of k[g] with S(g) through the trace form: the
/// coordinate function dual to e_j maps to sum_k (G^{-1})_{jk} X_k.
inline SparsePoly beta_identify(const Algebra& alg, const VarMap& vm, const SparsePoly& f) {
    const int dim = alg.basis.dim();
    std::vector<SparsePoly> images(vm.uni->size(), SparsePoly::zero(vm.uni));
    for (int v = 0; v < vm.uni->size(); ++v) {
        int j = vm.basis_of_uid[v];
        SparsePoly img = SparsePoly::zero(vm.uni);
        for (int k = 0; k < dim; ++k) {
            const Rat& g = alg.basis.gram_inv(j, k);
            if (g != 0) img += coordinate_poly(vm, k).scaled(g);
        }
        images[v] = std::move(img);
    }
    return f.substitute(images);
}

/// Highest bi-homogeneous component of a homogeneous invariant relative
/// to u^- (coadjoint side), taken after the central beta-identification.
inline SparsePoly highest_component_coadj(const Algebra& alg, const VarMap& vm,
                                          const SparsePoly& f) {
    if (!f.is_homogeneous()) throw NotHomogeneous("highest component of a non-homogeneous input");
    if (f.is_zero()) return f;
    auto comps = bigrade_components(beta_identify(alg, vm, f), contraction_bigrading(alg, vm));
    const SparsePoly* best = nullptr;
    int best_deg = -1;
    for (const auto& [bd, p] : comps)
        if (bd.second > best_deg) {
            best_deg = bd.second;
            best = &p;
        }
    return *best;
}

/// Highest component relative to b (adjoint side), same identification.
inline SparsePoly highest_component_adj(const Algebra& alg, const VarMap& vm, const SparsePoly& f) {
    if (!f.is_homogeneous()) throw NotHomogeneous("highest component of a non-homogeneous input");
    if (f.is_zero()) return f;
    auto comps = bigrade_components(beta_identify(alg, vm, f), contraction_bigrading(alg, vm));
    const SparsePoly* best = nullptr;
    int best_deg = -1;
    for (const auto& [bd, p] : comps)
        if (bd.first > best_deg) {
            best_deg = bd.first;
            best = &p;
        }
    return *best;
}

inline int simple_root_pos_index(const Algebra& alg, int i) {
    std::vector<int> unit(alg.basis.l, 0);
    unit[i] = 1;
    for (int k = alg.basis.pos_begin; k < alg.basis.pos_end; ++k)
        if (alg.basis.elements[k].root == unit) return k;
    throw InternalError("simple root vector not found");
}

inline int theta_pos_index(const Algebra& alg) {
    for (int k = alg.basis.pos_begin; k < alg.basis.pos_end; ++k)
        if (alg.basis.elements[k].root == alg.roots.theta) return k;
    throw InternalError("highest root vector not found");
}

/// The monomial e_{-a_1}^{a_1} ... e_{-a_l}^{a_l} e_theta in S(q);
/// proportional to the top contracted invariant.
inline SparsePoly monomial_top_invariant(const Algebra& alg, const VarMap& vm) {
    std::vector<std::pair<int, int>> factors;
    for (int i = 0; i < alg.basis.l; ++i) {
        int neg = alg.basis.mirror(simple_root_pos_index(alg, i));
        factors.emplace_back(vm.uid_of_basis[neg], alg.roots.a_coeffs[i]);
    }
    factors.emplace_back(vm.uid_of_basis[theta_pos_index(alg)], 1);
    return SparsePoly::monomial(vm.uni, Monomial::of(std::move(factors)), Rat(1));
}

/// Structure constants of q on basis elements: full bracket for pairs in
/// b, the u^- projection for mixed pairs, zero inside the abelian ideal.
inline std::vector<std::pair<int, Rat>> q_bracket_basis(const Algebra& alg, int i, int j) {
    std::vector<std::pair<int, Rat>> out;
    const auto& b = alg.basis;
    if (b.in_uminus(i) && b.in_uminus(j)) return out;
    bool mixed = b.in_uminus(i) || b.in_uminus(j);
    for (const auto& [k, c] : b.bracket_table[i][j])
        if (!mixed || b.in_uminus(k)) out.emplace_back(k, c);
    return out;
}

/// Derivation of S(q) = k[q*] induced by the basis element z acting on q:
/// on linear functions, X_w -> X_{[z,w]_q}.
inline SparsePoly coadjoint_derivation(const Algebra& alg, const VarMap& vm, int z_idx,
                                       const SparsePoly& p) {
    SparsePoly out = SparsePoly::zero(vm.uni);
    for (int v = 0; v < vm.uni->size(); ++v) {
        SparsePoly dp = p.derivative(v);
        if (dp.is_zero()) continue;
        SparsePoly image = SparsePoly::zero(vm.uni);
        for (const auto& [k, c] : q_bracket_basis(alg, z_idx, vm.basis_of_uid[v]))
            image += coordinate_poly(vm, k).scaled(c);
        if (!image.is_zero()) out += dp * image;
    }
    return out;
}

/// Value of the coadjoint derivation at a point, without materialising
/// the derivation polynomial.
inline Rat coadjoint_derivation_value(const Algebra& alg, const VarMap& vm, int z_idx,
                                      const SparsePoly& p, const std::vector<Rat>& pt) {
    Rat s(0);
    for (int v = 0; v < vm.uni->size(); ++v) {
        Rat lin(0);
        for (const auto& [k, c] : q_bracket_basis(alg, z_idx, vm.basis_of_uid[v]))
            lin += c * pt[vm.uid_of_basis[k]];
        if (lin != 0) s += lin * p.derivative_value(v, pt);
    }
    return s;
}

/// The l Cartan coordinate functions on q; generators of the adjoint
/// invariants. Verifies the structure-constant scan ([q,q] misses t).
inline std::vector<SparsePoly> adjoint_invariants(const Algebra& alg, const VarMap& vm) {
    const int dim = alg.basis.dim();
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (const auto& [k, c] : q_bracket_basis(alg, i, j))
                if (alg.basis.is_cartan(k))
                    throw InternalError("[q,q] has a Cartan component");
    std::vector<SparsePoly> out;
    for (int i = 0; i < alg.basis.l; ++i) out.push_back(coordinate_poly(vm, i));
    return out;
}

/// The extra N-invariant of S(q) that is not a Q-invariant: the linear
/// function e_theta (spanning b^U), with its invariance flags computed
/// from the symbolic derivations.
struct ExtraInvariant {
    SparsePoly poly;
    bool n_invariant = false;
    bool t_invariant = false;
};

inline ExtraInvariant extra_N_invariant(const Algebra& alg, const VarMap& vm) {
    ExtraInvariant out;
    out.poly = coordinate_poly(vm, theta_pos_index(alg));
    out.n_invariant = true;
    for (int z = alg.basis.neg_begin; z < alg.basis.neg_end; ++z)
        if (!coadjoint_derivation(alg, vm, z, out.poly).is_zero()) out.n_invariant = false;
    out.t_invariant = true;
    for (int z = 0; z < alg.basis.l; ++z)
        if (!coadjoint_derivation(alg, vm, z, out.poly).is_zero()) out.t_invariant = false;
    return out;
}

/// Everything the verification suites need about the invariants of one
/// algebra: basic invariants, covariants, their restrictions, the
/// contracted coadjoint invariants and the adjoint generators.
struct InvariantData {
    std::vector<SparsePoly> f;
    CovariantFamily F;
    CovariantFamily P;
    std::vector<SparsePoly> hatP;
    std::vector<SparsePoly> adjoint_gens;
    std::vector<std::pair<int, int>> hatP_bidegrees;
};

/// The contracted coadjoint invariants hatP_i(u, xi) = beta(P_i(u), xi),
/// written in the basis-label variables: u^--labels carry the functions
/// y -> beta(e_{-gamma}, u-part), b-labels carry y -> beta(e_b, xi).
inline std::vector<SparsePoly> hat_from_restricted(const Algebra& alg, const VarMap& vm,
                                                   const CovariantFamily& p_fam) {
    // Substitute u-coordinates by the pairing-normalised opposite label.
    std::vector<SparsePoly> images;
    images.reserve(vm.uni->size());
    for (int v = 0; v < vm.uni->size(); ++v) {
        int j = vm.basis_of_uid[v];
        if (alg.basis.in_u(j)) {
            int neg = alg.basis.mirror(j);
            const Rat& pairing = alg.basis.gram(j, neg);
            images.push_back(coordinate_poly(vm, neg).scaled(1 / pairing));
        } else {
            images.push_back(SparsePoly::variable(vm.uni, v));
        }
    }
    std::vector<SparsePoly> hats;
    for (const auto& entry : p_fam.entries) {
        SparsePoly hat = SparsePoly::zero(vm.uni);
        for (int k = 0; k < alg.basis.dim(); ++k) {
            if (entry[k].is_zero()) continue;
            hat += entry[k].substitute(images) * coordinate_poly(vm, k);
        }
        hats.push_back(std::move(hat));
    }
    return hats;
}

inline InvariantData build_invariants(const Algebra& alg, const VarMap& vm) {
    InvariantData data;
    data.f = basic_invariants(alg, vm);
    data.F = covariant_gradients(alg, vm, data.f);
    data.P = restrict_covariants(alg, vm, data.F);
    data.hatP = hat_from_restricted(alg, vm, data.P);
    data.adjoint_gens = adjoint_invariants(alg, vm);

    Bigrading grading = contraction_bigrading(alg, vm);
    for (int i = 0; i < alg.basis.l; ++i) {
        auto bd = bidegree(data.hatP[i], grading);
        if (!bd || bd->second != alg.roots.exponents[i] || bd->first != 1)
            throw InternalError("hatP bidegree is not (m_i, 1)");
        // Stored as (m_i, 1): degree m_i in the u^- class, 1 in the b class.
        data.hatP_bidegrees.emplace_back(bd->second, bd->first);
    }
    return data;
}

} // namespace iwcontract

#endif
