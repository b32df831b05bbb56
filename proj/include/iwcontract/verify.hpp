#ifndef IWCONTRACT_VERIFY_HPP
#define IWCONTRACT_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "contraction.hpp"
#include "invariants.hpp"
#include "liecore.hpp"
#include "polyring.hpp"
#include "prng.hpp"

namespace iwcontract {

enum class CheckStatus { pass, fail, inconclusive };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

struct CheckReport {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string details;
    std::optional<std::string> witness;
    std::uint64_t seed = 0;
    std::string mode = "symbolic";
};

enum class Mode { symbolic, sampled, automatic };

inline const char* to_string(Mode m) {
    switch (m) {
        case Mode::symbolic: return "symbolic";
        case Mode::sampled: return "sampled";
        case Mode::automatic: return "auto";
    }
    return "?";
}

/// Symbolic checking is the default up to rank 3 (rank 4 for family A);
/// larger algebras default to exact evaluation at sampled points.
inline Mode resolve_mode(const AlgebraSpec& spec, Mode requested) {
    if (requested != Mode::automatic) return requested;
    bool symbolic = spec.rank <= 3 || (spec.family == Family::A && spec.rank <= 4);
    return symbolic ? Mode::symbolic : Mode::sampled;
}

/// One algebra plus its polynomial universe and (lazily built) invariants.
struct SpecContext {
    Algebra alg;
    VarMap vm;

    explicit SpecContext(const AlgebraSpec& spec) : alg(build_algebra(spec)), vm(make_varmap(alg)) {}

    const InvariantData& invariants() {
        if (!inv_) inv_ = build_invariants(alg, vm);
        return *inv_;
    }

  private:
    std::optional<InvariantData> inv_;
};

inline SpecContext make_context(const AlgebraSpec& spec) { return SpecContext(spec); }

namespace detail {

inline std::string describe(const Algebra& alg, const GVector& v) {
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& [i, c] : v.coords) {
        if (!s.empty()) s += " ";
        s += alg.basis.label(i) + "=" + rat_to_string(c);
    }
    return s;
}

inline GVector unit_coord(int i) {
    GVector v;
    v.coords.emplace(i, Rat(1));
    return v;
}

inline int clamp_samples(int samples) { return samples < 5 ? 5 : samples; }

/// a == c * b with c nonzero, c solved from the leading monomial of a.
inline bool proportional(const SparsePoly& a, const SparsePoly& b, Rat& scalar) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const auto& [mono, ca] = *a.terms().begin();
    Rat cb = b.coeff(mono);
    if (cb == 0) return false;
    scalar = ca / cb;
    return a == b.scaled(scalar);
}

inline std::size_t poly_span_rank(const std::vector<SparsePoly>& ps) {
    std::map<Monomial, int, MonomialCanonicalOrder> cols;
    for (const auto& p : ps)
        for (const auto& [m, c] : p.terms())
            cols.emplace(m, 0);
    int idx = 0;
    for (auto& [m, col] : cols) col = idx++;
    RatMatrix mat(ps.size(), cols.size());
    for (std::size_t r = 0; r < ps.size(); ++r)
        for (const auto& [m, c] : ps[r].terms()) mat(r, cols.at(m)) = c;
    return rank(mat);
}

/// Maximal degree in the u^- class together with that component.
inline std::pair<int, SparsePoly> top_u_component(const Algebra& alg, const VarMap& vm,
                                                  const SparsePoly& p) {
    auto comps = bigrade_components(p, contraction_bigrading(alg, vm));
    int best = -1;
    SparsePoly top = SparsePoly::zero(vm.uni);
    for (const auto& [bd, q] : comps)
        if (bd.second > best) {
            best = bd.second;
            top = q;
        }
    return {best, top};
}

inline detail::PolyMatrix pmat_from_coords(const Algebra& alg, const VarMap& vm,
                                           const std::vector<SparsePoly>& coords) {
    const int n = alg.basis.n;
    auto m = detail::pmat_zero(vm.uni, n);
    for (int k = 0; k < alg.basis.dim(); ++k) {
        if (coords[k].is_zero()) continue;
        const RatMatrix& b = alg.basis.elements[k].matrix;
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                if (b(p, q) != 0) m[p][q] += coords[k].scaled(b(p, q));
    }
    return m;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Structure suite: the contracted bracket is a Lie bracket and is the t->0
// limit of the one-parameter family; root data are consistent.
// ---------------------------------------------------------------------------

inline std::vector<CheckReport> check_structure_suite(SpecContext& ctx) {
    const Algebra& alg = ctx.alg;
    const int dim = alg.basis.dim();
    std::vector<CheckReport> out;

    {
        CheckReport r{.name = "structure/jacobi_q"};
        int triples = 0;
        for (int i = 0; i < dim && r.status == CheckStatus::pass; ++i)
            for (int j = i + 1; j < dim && r.status == CheckStatus::pass; ++j)
                for (int k = j + 1; k < dim; ++k) {
                    GVector acc;
                    const std::array<std::array<int, 3>, 3> cyc{{{i, j, k}, {j, k, i}, {k, i, j}}};
                    for (const auto& [a, b, c] : cyc)
                        for (const auto& [m, cbc] : q_bracket_basis(alg, b, c))
                            for (const auto& [p, cam] : q_bracket_basis(alg, a, m))
                                acc.add_to(p, cbc * cam);
                    ++triples;
                    if (!acc.is_zero()) {
                        r.status = CheckStatus::fail;
                        r.witness = alg.basis.label(i) + "," + alg.basis.label(j) + "," +
                                    alg.basis.label(k);
                        break;
                    }
                }
        r.details = std::to_string(triples) + " basis triples";
        out.push_back(std::move(r));
    }

    {
        CheckReport r{.name = "structure/family_limit"};
        int pairs = 0;
        for (int i = 0; i < dim && r.status == CheckStatus::pass; ++i)
            for (int j = i + 1; j < dim; ++j) {
                GVector ei = detail::unit_coord(i), ej = detail::unit_coord(j);
                auto coeffs = family_bracket_t_coeffs(alg, ei, ej);
                GVector qb = q_bracket(alg, QVector{ei}, QVector{ej}).coords;
                bool ok = coeffs[0] == qb;
                // The family bracket evaluated at sample parameters must agree
                // with its interpolated coefficients.
                for (long tv : {2L, -3L}) {
                    Rat t(tv);
                    GVector direct = family_bracket(alg, ei, ej, t);
                    GVector fitted = coeffs[0] + coeffs[1].scaled(t);
                    if (!(direct == fitted)) ok = false;
                }
                ++pairs;
                if (!ok) {
                    r.status = CheckStatus::fail;
                    r.witness = alg.basis.label(i) + "," + alg.basis.label(j);
                    break;
                }
            }
        r.details = std::to_string(pairs) + " basis pairs, limit compared coefficientwise";
        out.push_back(std::move(r));
    }

    {
        CheckReport r{.name = "structure/family_jacobi_t"};
        Rat t(2);
        int triples = 0;
        for (int i = 0; i < dim && r.status == CheckStatus::pass; ++i)
            for (int j = i + 1; j < dim && r.status == CheckStatus::pass; ++j)
                for (int k = j + 1; k < dim; ++k) {
                    GVector ei = detail::unit_coord(i), ej = detail::unit_coord(j),
                            ek = detail::unit_coord(k);
                    GVector acc = family_bracket(alg, ei, family_bracket(alg, ej, ek, t), t);
                    acc += family_bracket(alg, ej, family_bracket(alg, ek, ei, t), t);
                    acc += family_bracket(alg, ek, family_bracket(alg, ei, ej, t), t);
                    ++triples;
                    if (!acc.is_zero()) {
                        r.status = CheckStatus::fail;
                        r.witness = alg.basis.label(i) + "," + alg.basis.label(j) + "," +
                                    alg.basis.label(k);
                        break;
                    }
                }
        r.details = "t=2, " + std::to_string(triples) + " basis triples";
        out.push_back(std::move(r));
    }

    {
        CheckReport r{.name = "structure/theta_coefficients"};
        int a_sum = 0;
        for (int a : alg.roots.a_coeffs) a_sum += a;
        if (a_sum != alg.roots.coxeter - 1) r.status = CheckStatus::fail;
        r.details = "sum a_i = " + std::to_string(a_sum) + ", h = " + std::to_string(alg.roots.coxeter);
        out.push_back(std::move(r));
    }

    {
        // Exponents double-checked against the dual partition of the
        // positive-root height histogram.
        CheckReport r{.name = "structure/exponents"};
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
        if (dual != alg.roots.exponents) r.status = CheckStatus::fail;
        r.details = "exponents";
        for (int m : alg.roots.exponents) r.details += " " + std::to_string(m);
        out.push_back(std::move(r));
    }

    {
        CheckReport r{.name = "structure/root_count"};
        int npos = alg.basis.positive_count();
        if (2 * npos + alg.basis.l != alg.spec.dim()) r.status = CheckStatus::fail;
        r.details = std::to_string(npos) + " positive roots, dim g = " + std::to_string(alg.spec.dim());
        out.push_back(std::move(r));
    }

    return out;
}

// ---------------------------------------------------------------------------
// Invariance suite: the contracted coadjoint invariants are annihilated by
// every derivation of q; the adjoint generators likewise; [P_i(u), u] = 0.
// ---------------------------------------------------------------------------

/// Derivation checks for an arbitrary list of candidate invariants on q*.
/// Used by the standard suite and, with deliberately perturbed inputs, as
/// a negative control.
inline std::vector<CheckReport> check_invariance_of(SpecContext& ctx,
                                                    const std::vector<SparsePoly>& hats, Mode mode,
                                                    std::uint64_t seed, int samples) {
    const Algebra& alg = ctx.alg;
    const VarMap& vm = ctx.vm;
    mode = resolve_mode(alg.spec, mode);
    samples = detail::clamp_samples(samples);
    const int dim = alg.basis.dim();
    std::vector<CheckReport> out;

    for (std::size_t i = 0; i < hats.size(); ++i) {
        CheckReport r{.name = "invariance/hatP_" + std::to_string(i + 1)};
        r.seed = seed;
        r.mode = to_string(mode);
        if (mode == Mode::symbolic) {
            for (int z = 0; z < dim; ++z) {
                SparsePoly d = coadjoint_derivation(alg, vm, z, hats[i]);
                if (!d.is_zero()) {
                    r.status = CheckStatus::fail;
                    r.witness = "derivation by " + alg.basis.label(z);
                    break;
                }
            }
            r.details = "derivations by all " + std::to_string(dim) + " basis directions are zero polynomials";
        } else {
            SplitMix64 rng(derive_seed(seed, "invariance/" + std::to_string(i)));
            int checked = 0;
            for (int s = 0; s < samples && r.status == CheckStatus::pass; ++s) {
                QDualVector y = random_dual(alg, rng);
                auto pt = point_from_dual(alg, vm, y);
                std::vector<Rat> grad(vm.uni->size());
                for (int v = 0; v < vm.uni->size(); ++v)
                    grad[v] = hats[i].derivative_value(v, pt);
                for (int z = 0; z < dim; ++z) {
                    Rat val(0);
                    for (int v = 0; v < vm.uni->size(); ++v) {
                        if (grad[v] == 0) continue;
                        Rat lin(0);
                        for (const auto& [k, c] : q_bracket_basis(alg, z, vm.basis_of_uid[v]))
                            lin += c * pt[vm.uid_of_basis[k]];
                        val += lin * grad[v];
                    }
                    if (val != 0) {
                        r.status = CheckStatus::fail;
                        r.witness = "derivation by " + alg.basis.label(z) + " at " +
                                    detail::describe(alg, y.coords);
                        break;
                    }
                }
                ++checked;
            }
            r.details = std::to_string(checked) + " random points, exact evaluation";
        }
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<CheckReport> check_invariance_suite(SpecContext& ctx, Mode mode,
                                                       std::uint64_t seed, int samples) {
    const Algebra& alg = ctx.alg;
    const VarMap& vm = ctx.vm;
    const InvariantData& inv = ctx.invariants();
    Mode eff = resolve_mode(alg.spec, mode);
    samples = detail::clamp_samples(samples);
    const int l = alg.basis.l;

    std::vector<CheckReport> out = check_invariance_of(ctx, inv.hatP, eff, seed, samples);

    {
        // k[q]^Q = k[t]: no bracket of q has a Cartan component.
        CheckReport r{.name = "invariance/adjoint_generators", .seed = seed};
        int scanned = 0;
        for (int i = 0; i < alg.basis.dim() && r.status == CheckStatus::pass; ++i)
            for (int j = 0; j < alg.basis.dim(); ++j) {
                ++scanned;
                for (const auto& [k, c] : q_bracket_basis(alg, i, j))
                    if (alg.basis.is_cartan(k)) {
                        r.status = CheckStatus::fail;
                        r.witness = "[" + alg.basis.label(i) + "," + alg.basis.label(j) + "]";
                        break;
                    }
            }
        r.details = "structure-constant scan over " + std::to_string(scanned) +
                    " pairs; " + std::to_string(l) + " Cartan generators";
        out.push_back(std::move(r));
    }

    {
        CheckReport r{.name = "invariance/covariant_commutes", .seed = seed};
        r.mode = to_string(eff);
        if (eff == Mode::symbolic) {
            for (int i = 0; i < l && r.status == CheckStatus::pass; ++i) {
                auto m = detail::pmat_from_coords(alg, vm, inv.P.entries[i]);
                std::vector<SparsePoly> ucoords(alg.basis.dim(), SparsePoly::zero(vm.uni));
                for (int k = alg.basis.pos_begin; k < alg.basis.pos_end; ++k)
                    ucoords[k] = coordinate_poly(vm, k);
                auto u = detail::pmat_from_coords(alg, vm, ucoords);
                auto mu = detail::pmat_mul(m, u), um = detail::pmat_mul(u, m);
                for (int p = 0; p < alg.basis.n && r.status == CheckStatus::pass; ++p)
                    for (int q = 0; q < alg.basis.n; ++q)
                        if (!(mu[p][q] - um[p][q]).is_zero()) {
                            r.status = CheckStatus::fail;
                            r.witness = "[P_" + std::to_string(i + 1) + "(u), u] entry (" +
                                        std::to_string(p) + "," + std::to_string(q) + ")";
                            break;
                        }
            }
            r.details = "[P_i(u), u] = 0 as polynomial identities";
        } else {
            SplitMix64 rng(derive_seed(seed, "covariant_commutes"));
            int checked = 0;
            for (int s = 0; s < samples && r.status == CheckStatus::pass; ++s) {
                GVector e = random_coords(alg, rng, false, true, false);
                auto vals = evaluate_covariants(alg, vm, inv.P, e);
                for (int i = 0; i < l; ++i)
                    if (!bracket_g(alg, vals[i], e).is_zero()) {
                        r.status = CheckStatus::fail;
                        r.witness = "P_" + std::to_string(i + 1) + " at " + detail::describe(alg, e);
                        break;
                    }
                ++checked;
            }
            r.details = "[P_i(e), e] = 0 at " + std::to_string(checked) + " random points of u";
        }
        out.push_back(std::move(r));
    }

    {
        // Group-level N-invariance of every hatP_i at sampled points.
        CheckReport r{.name = "invariance/group_N_translates", .seed = seed, .mode = "sampled"};
        SplitMix64 rng(derive_seed(seed, "group_N"));
        int checked = 0;
        for (int s = 0; s < samples && r.status == CheckStatus::pass; ++s) {
            GVector eta = random_coords(alg, rng, false, false, true);
            QDualVector y = random_dual(alg, rng);
            QDualVector ty = group_coadjoint_N(alg, eta, y);
            auto pt = point_from_dual(alg, vm, y);
            auto tpt = point_from_dual(alg, vm, ty);
            for (int i = 0; i < l; ++i)
                if (inv.hatP[i].evaluate(pt) != inv.hatP[i].evaluate(tpt)) {
                    r.status = CheckStatus::fail;
                    r.witness = "hatP_" + std::to_string(i + 1) + ", eta " +
                                detail::describe(alg, eta);
                    break;
                }
            ++checked;
        }
        r.details = std::to_string(checked) + " random exp(eta) translates";
        out.push_back(std::move(r));
    }

    {
        // Ad U conjugates t + u back to t when t is regular.
        CheckReport r{.name = "invariance/u_conjugation", .seed = seed, .mode = "sampled"};
        SplitMix64 rng(derive_seed(seed, "u_conjugation"));
        int done = 0, attempts = 0;
        while (done < 10 && attempts < 10 + 8) {
            ++attempts;
            GVector t = random_coords(alg, rng, true, false, false);
            bool regular = true;
            for (int k = alg.basis.pos_begin; k < alg.basis.pos_end; ++k)
                if (root_on_cartan(alg, k, t) == 0) regular = false;
            if (!regular) continue;
            GVector u = random_coords(alg, rng, false, true, false);
            GVector uprime = u_conjugate_to_cartan(alg, t + u);
            if (!(exp_ad(alg, uprime, t) == t + u)) {
                r.status = CheckStatus::fail;
                r.witness = detail::describe(alg, t + u);
                break;
            }
            ++done;
        }
        if (r.status == CheckStatus::pass && done < 10) r.status = CheckStatus::inconclusive;
        r.details = std::to_string(done) + " regular samples reconstructed exactly";
        out.push_back(std::move(r));
    }

    return out;
}

// ---------------------------------------------------------------------------
// Index and degrees suite.
// ---------------------------------------------------------------------------

inline std::vector<CheckReport> check_index_and_degrees(SpecContext& ctx, std::uint64_t seed,
                                                        int samples) {
    const Algebra& alg = ctx.alg;
    const VarMap& vm = ctx.vm;
    const InvariantData& inv = ctx.invariants();
    samples = detail::clamp_samples(samples);
    const int l = alg.basis.l;
    const int dim = alg.basis.dim();
    std::vector<CheckReport> out;

    {
        CheckReport r{.name = "index/estimate", .seed = seed, .mode = "sampled"};
        auto est = index_estimate(alg, samples, seed);
        if (!est.conclusive)
            r.status = CheckStatus::inconclusive;
        else if (est.index != l) {
            r.status = CheckStatus::fail;
            if (est.witness) r.witness = detail::describe(alg, est.witness->coords);
        }
        r.details = "index " + std::to_string(est.index) + " from " +
                    std::to_string(est.samples_used) + " samples (max rank " +
                    std::to_string(est.max_rank) + ")";
        out.push_back(std::move(r));
    }

    {
        CheckReport r{.name = "index/rank_parity_and_bound", .seed = seed, .mode = "sampled"};
        SplitMix64 rng(derive_seed(seed, "rank_parity"));
        int checked = 0;
        for (int s = 0; s < samples; ++s) {
            QDualVector y = random_dual(alg, rng);
            std::size_t kr = kirillov_rank(alg, y);
            if (kr % 2 != 0 || kr > static_cast<std::size_t>(dim - l)) {
                r.status = CheckStatus::fail;
                r.witness = detail::describe(alg, y.coords);
                break;
            }
            ++checked;
        }
        r.details = std::to_string(checked) + " points, rank even and <= dim q - l";
        out.push_back(std::move(r));
    }

    {
        CheckReport r{.name = "degrees/bidegrees"};
        for (int i = 0; i < l; ++i) {
            auto [mu, mb] = inv.hatP_bidegrees[i];
            if (mu != alg.roots.exponents[i] || mb != 1) r.status = CheckStatus::fail;
        }
        r.details = "bi-degrees (m_i, 1):";
        for (auto [mu, mb] : inv.hatP_bidegrees)
            r.details += " (" + std::to_string(mu) + "," + std::to_string(mb) + ")";
        out.push_back(std::move(r));
    }

    {
        CheckReport r{.name = "degrees/sum_identity"};
        int sum = 0;
        for (const auto& p : inv.hatP) sum += p.total_degree();
        bool ok = 2 * sum == dim + l;
        for (int i = 0; i < l; ++i)
            if (inv.hatP[i].total_degree() != alg.roots.degrees[i]) ok = false;
        if (!ok) r.status = CheckStatus::fail;
        r.details = "sum deg hatP_i = " + std::to_string(sum) + " = (dim q + ind q)/2 = " +
                    std::to_string((dim + l) / 2);
        out.push_back(std::move(r));
    }

    {
        CheckReport r{.name = "degrees/jacobian_generic", .seed = seed, .mode = "sampled"};
        SplitMix64 rng(derive_seed(seed, "jacobian_generic"));
        std::size_t jr = 0;
        int tries = 0;
        for (; tries < 8; ++tries) {
            QDualVector y = random_dual(alg, rng);
            jr = jacobian_rank(inv.hatP, point_from_dual(alg, vm, y));
            if (jr == static_cast<std::size_t>(l)) break;
        }
        if (jr != static_cast<std::size_t>(l)) r.status = CheckStatus::inconclusive;
        r.details = "jacobian rank " + std::to_string(jr) + " of l = " + std::to_string(l) +
                    " after " + std::to_string(tries + 1) + " draw(s)";
        out.push_back(std::move(r));
    }

    return out;
}

// ---------------------------------------------------------------------------
// Regularity suite: divisor witnesses outside type A, subregular witnesses
// in type A, the pointwise equivalence of the two regularity criteria, and
// the Kostant criterion in g.
// ---------------------------------------------------------------------------

inline std::vector<CheckReport> check_regularity_suite(SpecContext& ctx, std::uint64_t seed,
                                                       int samples) {
    Algebra& alg = ctx.alg;
    const VarMap& vm = ctx.vm;
    const InvariantData& inv = ctx.invariants();
    samples = detail::clamp_samples(samples);
    const int l = alg.basis.l;
    const int dim = alg.basis.dim();
    std::vector<CheckReport> out;

    auto zero_u_coordinate = [&](QDualVector& y, int simple_i) {
        int pos = simple_root_pos_index(alg, simple_i);
        y.coords.coords.erase(pos);
    };

    // (a) With a_i >= 2 the hyperplane {e_{-alpha_i} = 0} consists of
    // non-regular points: d hatP_l vanishes there entirely.
    for (int i = 0; i < l; ++i) {
        if (alg.roots.a_coeffs[i] < 2) continue;
        CheckReport r{.name = "regularity/divisor_alpha" + std::to_string(i + 1),
                      .seed = seed,
                      .mode = "sampled"};
        SplitMix64 rng(derive_seed(seed, "divisor/" + std::to_string(i)));
        int checked = 0;
        for (int s = 0; s < samples && r.status == CheckStatus::pass; ++s) {
            QDualVector y = random_dual(alg, rng);
            zero_u_coordinate(y, i);
            auto pt = point_from_dual(alg, vm, y);
            bool dvanish = true;
            for (int v = 0; v < vm.uni->size(); ++v)
                if (inv.hatP[l - 1].derivative_value(v, pt) != 0) dvanish = false;
            bool sub_jac = jacobian_rank(inv.hatP, pt) < static_cast<std::size_t>(l);
            bool sub_kir = kirillov_rank(alg, y) < static_cast<std::size_t>(dim - l);
            if (!dvanish || !sub_jac || !sub_kir) {
                r.status = CheckStatus::fail;
                r.witness = detail::describe(alg, y.coords);
            }
            ++checked;
        }
        r.details = "a_" + std::to_string(i + 1) + " = " + std::to_string(alg.roots.a_coeffs[i]) +
                    "; d hatP_l = 0 and both ranks sub-maximal at " + std::to_string(checked) +
                    " hyperplane points";
        out.push_back(std::move(r));
    }

    // (b) Type A: subregular witnesses on each hyperplane still have
    // independent differentials, so no divisor of non-regular points.
    if (alg.spec.family == Family::A) {
        for (int j = 0; j < l; ++j) {
            CheckReport r{.name = "regularity/subregular_omit_alpha" + std::to_string(j + 1),
                          .seed = seed,
                          .mode = "sampled"};
            SplitMix64 rng(derive_seed(seed, "subregular/" + std::to_string(j)));
            GVector e;
            for (int i = 0; i < l; ++i)
                if (i != j) e.set(simple_root_pos_index(alg, i), Rat(1));
            int theta_neg = alg.basis.mirror(theta_pos_index(alg));
            int checked = 0;
            for (int s = 0; s < 10 && r.status == CheckStatus::pass; ++s) {
                QDualVector y{e + random_coords(alg, rng, true, false, true)};
                if (y.coords.coeff(theta_neg) == 0) y.coords.set(theta_neg, Rat(1));
                auto pt = point_from_dual(alg, vm, y);
                if (jacobian_rank(inv.hatP, pt) != static_cast<std::size_t>(l)) {
                    r.status = CheckStatus::fail;
                    r.witness = detail::describe(alg, y.coords);
                }
                ++checked;
            }
            r.details = "full jacobian rank at " + std::to_string(checked) +
                        " points over the subregular witness";
            out.push_back(std::move(r));
        }
    }

    // (c) Pointwise equivalence: Q-orbit of maximal dimension iff the
    // differentials of the hatP_i are independent.
    {
        CheckReport r{.name = "regularity/rank_equivalence", .seed = seed, .mode = "sampled"};
        SplitMix64 rng(derive_seed(seed, "equivalence"));
        int total = std::max(100, samples);
        int checked = 0, regular_count = 0;
        for (int s = 0; s < total && r.status == CheckStatus::pass; ++s) {
            QDualVector y = random_dual(alg, rng);
            if (s % 2 == 1) zero_u_coordinate(y, (s / 2) % l);  // divisor points interleaved
            bool kir_max = kirillov_rank(alg, y) == static_cast<std::size_t>(dim - l);
            bool jac_max =
                jacobian_rank(inv.hatP, point_from_dual(alg, vm, y)) == static_cast<std::size_t>(l);
            if (kir_max != jac_max) {
                r.status = CheckStatus::fail;
                r.witness = detail::describe(alg, y.coords);
            }
            if (kir_max) ++regular_count;
            ++checked;
        }
        r.details = std::to_string(checked) + " points (" + std::to_string(regular_count) +
                    " regular), equivalence exact at each";
        out.push_back(std::move(r));
    }

    // (d) Kostant criterion in g: F_i(x) independent iff x regular.
    {
        CheckReport r{.name = "regularity/kostant_criterion", .seed = seed, .mode = "sampled"};
        SplitMix64 rng(derive_seed(seed, "kostant"));
        std::vector<GVector> witnesses;
        for (int s = 0; s < 10; ++s) witnesses.push_back(random_coords(alg, rng, true, true, true));
        witnesses.push_back(GVector{});
        if (alg.spec.family == Family::A)
            for (auto& rep : nilpotent_representatives(alg)) witnesses.push_back(rep);
        {
            // A singular semisimple element: some root vanishes on it.
            const auto& w = alg.basis.elements[alg.basis.pos_begin].weight;
            GVector t;
            for (int i = 0; i + 1 < l; ++i) {
                if (w[i] != 0 || w[i + 1] != 0) {
                    t.set(i, w[i + 1]);
                    t.set(i + 1, -w[i]);
                    break;
                }
            }
            if (l == 1) t.set(0, Rat(0));
            if (!t.is_zero()) witnesses.push_back(t);
        }
        int checked = 0;
        for (const auto& x : witnesses) {
            auto vals = evaluate_covariants(alg, vm, inv.F, x);
            RatMatrix m(l, dim);
            for (int i = 0; i < l; ++i)
                for (const auto& [k, c] : vals[i].coords) m(i, k) = c;
            bool indep = rank(m) == static_cast<std::size_t>(l);
            bool regular = centralizer_dim(alg, x) == l;
            if (indep != regular) {
                r.status = CheckStatus::fail;
                r.witness = detail::describe(alg, x);
                break;
            }
            ++checked;
        }
        r.details = std::to_string(checked) + " witnesses (random, zero, nilpotent, singular)";
        out.push_back(std::move(r));
    }

    return out;
}

// ---------------------------------------------------------------------------
// Null-cone inequality suite.
// ---------------------------------------------------------------------------

inline std::vector<CheckReport> check_nullcone_inequality(
    SpecContext& ctx, std::uint64_t seed,
    const std::optional<std::vector<GVector>>& user_nilpotents = std::nullopt) {
    Algebra& alg = ctx.alg;
    const VarMap& vm = ctx.vm;
    const InvariantData& inv = ctx.invariants();
    const int l = alg.basis.l;
    std::vector<CheckReport> out;

    std::vector<GVector> reps;
    std::vector<std::string> names;
    if (user_nilpotents) {
        reps = *user_nilpotents;
        for (std::size_t i = 0; i < reps.size(); ++i) names.push_back("user_" + std::to_string(i));
    } else {
        reps = nilpotent_representatives(alg);  // UnsupportedFamily outside A
        auto parts = partitions_desc(alg.spec.matrix_dim());
        for (const auto& p : parts) {
            std::string s;
            for (std::size_t k = 0; k < p.size(); ++k) {
                if (k) s += "+";
                s += std::to_string(p[k]);
            }
            names.push_back(s);
        }
    }

    for (std::size_t i = 0; i < reps.size(); ++i) {
        CheckReport r{.name = "nullcone/partition_" + names[i], .seed = seed};
        int cdim = centralizer_dim(alg, reps[i]);
        auto vals = evaluate_covariants(alg, vm, inv.P, reps[i]);
        RatMatrix m(l, alg.basis.dim());
        for (int k = 0; k < l; ++k)
            for (const auto& [idx, c] : vals[k].coords) m(k, idx) = c;
        int span = static_cast<int>(rank(m));
        if (cdim + 2 * span < 3 * l) {
            r.status = CheckStatus::fail;
            r.witness = detail::describe(alg, reps[i]);
        }
        r.details = "dim g^e = " + std::to_string(cdim) + ", 2 dim span P_i(e) = " +
                    std::to_string(2 * span) + " >= 3l = " + std::to_string(3 * l);
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Highest components suite.
// ---------------------------------------------------------------------------

inline std::vector<CheckReport> check_highest_components(SpecContext& ctx) {
    const Algebra& alg = ctx.alg;
    const VarMap& vm = ctx.vm;
    const InvariantData& inv = ctx.invariants();
    const int l = alg.basis.l;
    std::vector<CheckReport> out;

    std::vector<SparsePoly> identified;
    for (int i = 0; i < l; ++i) identified.push_back(beta_identify(alg, vm, inv.f[i]));

    {
        CheckReport r{.name = "highest/pure_uminus_component_vanishes"};
        Bigrading g = contraction_bigrading(alg, vm);
        for (int i = 0; i < l && r.status == CheckStatus::pass; ++i) {
            auto comps = bigrade_components(identified[i], g);
            int d = alg.roots.degrees[i];
            if (comps.count({0, d})) {
                r.status = CheckStatus::fail;
                r.witness = "f_" + std::to_string(i + 1);
            }
        }
        r.details = "f_i^{(0,d_i)} = 0 for all i";
        out.push_back(std::move(r));
    }

    {
        CheckReport r{.name = "highest/coadjoint_equals_hatP"};
        std::string scalars;
        for (int i = 0; i < l && r.status == CheckStatus::pass; ++i) {
            SparsePoly hc = highest_component_coadj(alg, vm, inv.f[i]);
            Rat c;
            if (!detail::proportional(hc, inv.hatP[i], c) || c == 0) {
                r.status = CheckStatus::fail;
                r.witness = "f_" + std::to_string(i + 1);
            } else {
                if (!scalars.empty()) scalars += " ";
                scalars += rat_to_string(c);
            }
        }
        r.details = "scalars c_i: " + scalars;
        out.push_back(std::move(r));
    }

    {
        CheckReport r{.name = "highest/monomial_top"};
        SparsePoly mono = monomial_top_invariant(alg, vm);
        Rat c;
        if (!detail::proportional(inv.hatP[l - 1], mono, c) || c == 0) {
            r.status = CheckStatus::fail;
        } else {
            r.details = "hatP_l = " + rat_to_string(c) + " * prod e_{-alpha_i}^{a_i} e_theta";
        }
        out.push_back(std::move(r));
    }

    {
        CheckReport r{.name = "highest/adjoint_in_cartan"};
        for (int i = 0; i < l && r.status == CheckStatus::pass; ++i) {
            SparsePoly ha = highest_component_adj(alg, vm, inv.f[i]);
            for (const auto& [m, c] : ha.terms())
                for (const auto& [v, e] : m.factors)
                    if (!alg.basis.is_cartan(vm.basis_of_uid[v])) {
                        r.status = CheckStatus::fail;
                        r.witness = "f_" + std::to_string(i + 1);
                    }
        }
        r.details = "adjoint highest components depend on Cartan variables only";
        out.push_back(std::move(r));
    }

    {
        // Low-degree Poincare series spot check: the span of highest
        // components has the dimension of the span of the sources.
        CheckReport r{.name = "highest/poincare_spot"};
        const int d2 = alg.roots.degrees[std::min(1, l - 1)];
        std::string detail_acc;
        for (int n = 1; n <= d2 && r.status == CheckStatus::pass; ++n) {
            std::vector<SparsePoly> sources;
            for (int i = 0; i < l; ++i)
                if (alg.roots.degrees[i] == n) sources.push_back(identified[i]);
            for (int i = 0; i < l; ++i)
                for (int j = i; j < l; ++j)
                    if (alg.roots.degrees[i] + alg.roots.degrees[j] == n)
                        sources.push_back(identified[i] * identified[j]);
            if (sources.empty()) continue;
            std::size_t predicted = detail::poly_span_rank(sources);
            // Filtration rank of the span of highest components.
            std::size_t got = 0;
            std::vector<SparsePoly> rows = sources;
            while (!rows.empty()) {
                int maxu = -1;
                for (const auto& p : rows) maxu = std::max(maxu, detail::top_u_component(alg, vm, p).first);
                std::vector<SparsePoly> s_rows, o_rows;
                std::vector<SparsePoly> s_tops;
                for (const auto& p : rows) {
                    auto [d, top] = detail::top_u_component(alg, vm, p);
                    if (d == maxu) {
                        s_rows.push_back(p);
                        s_tops.push_back(top);
                    } else {
                        o_rows.push_back(p);
                    }
                }
                // Row-reduce the top components, tracking combinations so
                // that rows with cancelling tops drop down the filtration.
                std::map<Monomial, int, MonomialCanonicalOrder> cols;
                for (const auto& t : s_tops)
                    for (const auto& [m, c] : t.terms()) cols.emplace(m, 0);
                int ci = 0;
                for (auto& [m, col] : cols) col = ci++;
                const std::size_t sn = s_rows.size();
                RatMatrix mat(sn, cols.size());
                for (std::size_t rr = 0; rr < sn; ++rr)
                    for (const auto& [m, c] : s_tops[rr].terms()) mat(rr, cols.at(m)) = c;
                RatMatrix trk = RatMatrix::identity(sn);
                std::size_t rk = 0;
                for (std::size_t col = 0; col < cols.size() && rk < sn; ++col) {
                    std::size_t piv = rk;
                    while (piv < sn && mat(piv, col) == 0) ++piv;
                    if (piv == sn) continue;
                    mat.swap_rows(rk, piv);
                    trk.swap_rows(rk, piv);
                    for (std::size_t i2 = rk + 1; i2 < sn; ++i2) {
                        if (mat(i2, col) == 0) continue;
                        Rat f = mat(i2, col) / mat(rk, col);
                        for (std::size_t j2 = col; j2 < cols.size(); ++j2)
                            mat(i2, j2) -= f * mat(rk, j2);
                        for (std::size_t j2 = 0; j2 < sn; ++j2) trk(i2, j2) -= f * trk(rk, j2);
                    }
                    ++rk;
                }
                got += rk;
                std::vector<SparsePoly> next = std::move(o_rows);
                for (std::size_t rr = rk; rr < sn; ++rr) {
                    SparsePoly combo = SparsePoly::zero(vm.uni);
                    for (std::size_t j2 = 0; j2 < sn; ++j2)
                        if (trk(rr, j2) != 0) combo += s_rows[j2].scaled(trk(rr, j2));
                    if (!combo.is_zero()) next.push_back(std::move(combo));
                }
                rows = std::move(next);
            }
            if (got != predicted) {
                r.status = CheckStatus::fail;
                r.witness = "degree " + std::to_string(n);
            }
            if (!detail_acc.empty()) detail_acc += ", ";
            detail_acc += "deg " + std::to_string(n) + ": " + std::to_string(got) + "/" +
                          std::to_string(predicted);
        }
        r.details = "span dimensions preserved (" + detail_acc + ")";
        out.push_back(std::move(r));
    }

    return out;
}

} // namespace iwcontract

#endif
