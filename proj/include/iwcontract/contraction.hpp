#ifndef IWCONTRACT_CONTRACTION_HPP
#define IWCONTRACT_CONTRACTION_HPP

#include <array>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "liecore.hpp"
#include "prng.hpp"
#include "rational.hpp"

namespace iwcontract {

/// Element of q = b x u^-, identified with g as a vector space. The
/// b-part lives on Cartan and positive-root coordinates, the nilpotent
/// part on negative-root coordinates.
struct QVector {
    GVector coords;
    bool operator==(const QVector&) const = default;
};

/// Element of q* = u x b^-. Positive-root coordinates are coefficients of
/// the u-component, Cartan and negative-root coordinates those of the
/// b^- component (b* is identified with b^- through the trace form).
struct QDualVector {
    GVector coords;
    bool operator==(const QDualVector&) const = default;
};

/// Lie bracket of q = b x (u^-)^a:
///   [(b,eta),(b',eta')] = ([b,b'], b o eta' - b' o eta),
/// where b o eta = p_-([b, eta]).
inline QVector q_bracket(const Algebra& alg, const QVector& x, const QVector& y) {
    GVector bx = project_b(alg, x.coords), by = project_b(alg, y.coords);
    GVector ex = project_negative(alg, x.coords), ey = project_negative(alg, y.coords);
    GVector out = bracket_g(alg, bx, by);
    out += project_negative(alg, bracket_g(alg, bx, ey));
    out -= project_negative(alg, bracket_g(alg, by, ex));
    return QVector{std::move(out)};
}

inline QVector adjoint_apply(const Algebra& alg, const QVector& x, const QVector& z) {
    return q_bracket(alg, x, z);
}

/// The bracket [x,y]_(t) = c_t^{-1}([c_t x, c_t y]) of the one-parameter
/// family degenerating g to q; c_t scales the u^- part by t.
inline GVector family_bracket(const Algebra& alg, const GVector& x, const GVector& y, const Rat& t) {
    if (t == 0) throw ZeroParameter("family bracket parameter must be nonzero");
    auto scale_neg = [&](const GVector& v, const Rat& s) {
        GVector r;
        for (const auto& [i, c] : v.coords) r.coords.emplace(i, alg.basis.in_uminus(i) ? c * s : c);
        return r;
    };
    GVector z = bracket_g(alg, scale_neg(x, t), scale_neg(y, t));
    return scale_neg(z, 1 / t);
}

/// Coefficients of [x,y]_(t) as a polynomial in t. The dependence is
/// affine-linear; result[p] is the coefficient of t^p. The constant term
/// is the contracted bracket.
inline std::array<GVector, 2> family_bracket_t_coeffs(const Algebra& alg, const GVector& x,
                                                      const GVector& y) {
    std::array<GVector, 3> acc;
    for (const auto& [i, xi] : x.coords)
        for (const auto& [j, yj] : y.coords) {
            int p = (alg.basis.in_uminus(i) ? 1 : 0) + (alg.basis.in_uminus(j) ? 1 : 0);
            const Rat f = xi * yj;
            for (const auto& [k, c] : alg.basis.bracket_table[i][j]) acc[p].add_to(k, f * c);
        }
    std::array<GVector, 2> out;
    for (int p = 0; p < 3; ++p)
        for (const auto& [k, v] : acc[p].coords) {
            if (alg.basis.in_b(k)) {
                if (p == 2) throw InternalError("[u^-, u^-] escaped u^-");
                out[p].add_to(k, v);
            } else {
                if (p == 0) throw InternalError("[b, b] escaped b");
                out[p - 1].add_to(k, v);
            }
        }
    return out;
}

/// Values of the basis-label coordinate functions at a point of q*:
/// X_j(y) = beta(e_j, xi) for j in b, beta(e_j, u) for j in u^-.
/// Indexed by basis position.
inline std::vector<Rat> coadjoint_point(const Algebra& alg, const QDualVector& y) {
    const auto& b = alg.basis;
    std::vector<Rat> pt(b.dim(), Rat(0));
    for (const auto& [k, v] : y.coords.coords) {
        bool k_is_u = b.in_u(k);
        for (int j = 0; j < b.dim(); ++j) {
            const Rat& g = b.gram(j, k);
            if (g == 0) continue;
            // u-part pairs with u^- labels, b^- part with b labels
            if (k_is_u ? b.in_uminus(j) : b.in_b(j)) pt[j] += g * v;
        }
    }
    return pt;
}

/// Natural pairing of q with q*: <(b,eta),(u,xi)> = beta(b,xi) + beta(eta,u).
inline Rat q_pairing(const Algebra& alg, const QVector& z, const QDualVector& y) {
    auto pt = coadjoint_point(alg, y);
    Rat s(0);
    for (const auto& [j, c] : z.coords.coords) s += c * pt[j];
    return s;
}

/// The moment map phi: u x u^- -> b^-, defined by
/// beta(b, phi(u,eta)) = beta([b,u], eta) for all b in b.
inline GVector moment_map_phi(const Algebra& alg, const GVector& u, const GVector& eta) {
    for (const auto& [i, c] : u.coords)
        if (!alg.basis.in_u(i)) throw Error("moment map: first argument must lie in u");
    for (const auto& [i, c] : eta.coords)
        if (!alg.basis.in_uminus(i)) throw Error("moment map: second argument must lie in u^-");
    const auto& bis = alg.basis.b_indices;
    std::vector<Rat> rhs(bis.size());
    for (std::size_t m = 0; m < bis.size(); ++m) {
        GVector bm;
        bm.set(bis[m], Rat(1));
        rhs[m] = trace_form(alg, bracket_g(alg, bm, u), eta);
    }
    GVector phi;
    const auto& inv = alg.basis.b_pairing_inv;
    for (std::size_t c = 0; c < alg.basis.bminus_indices.size(); ++c) {
        Rat v(0);
        for (std::size_t m = 0; m < bis.size(); ++m) v += inv(c, m) * rhs[m];
        phi.set(alg.basis.bminus_indices[c], v);
    }
    return phi;
}

/// Coadjoint action of b in b on b* identified with b^-: the unique
/// xi' in b^- with beta(b'', xi') = -beta([b, b''], xi) for all b'' in b.
inline GVector b_coadjoint(const Algebra& alg, const GVector& b, const GVector& xi) {
    const auto& bis = alg.basis.b_indices;
    std::vector<Rat> rhs(bis.size());
    for (std::size_t m = 0; m < bis.size(); ++m) {
        GVector bm;
        bm.set(bis[m], Rat(1));
        rhs[m] = -trace_form(alg, bracket_g(alg, b, bm), xi);
    }
    GVector out;
    const auto& inv = alg.basis.b_pairing_inv;
    for (std::size_t c = 0; c < alg.basis.bminus_indices.size(); ++c) {
        Rat v(0);
        for (std::size_t m = 0; m < bis.size(); ++m) v += inv(c, m) * rhs[m];
        out.set(alg.basis.bminus_indices[c], v);
    }
    return out;
}

/// Infinitesimal coadjoint action of x = (b,eta) on y = (u,xi). The sign
/// convention is fixed by the adjointness identity
///   <[x,z], y> + <z, x * y> = 0  for all z.
inline QDualVector coadjoint_apply(const Algebra& alg, const QVector& x, const QDualVector& y) {
    GVector b = project_b(alg, x.coords), eta = project_negative(alg, x.coords);
    GVector u, xi;
    for (const auto& [i, c] : y.coords.coords)
        (alg.basis.in_u(i) ? u : xi).coords.emplace(i, c);
    GVector uprime = bracket_g(alg, b, u);
    for (const auto& [i, c] : uprime.coords)
        if (!alg.basis.in_u(i)) throw InternalError("[b, u] escaped u");
    GVector out = uprime;
    out += b_coadjoint(alg, b, xi);
    out -= moment_map_phi(alg, u, eta);
    return QDualVector{std::move(out)};
}

/// Group-level coadjoint action of exp(eta) in N:
///   exp(eta) * (u, xi) = (u, xi + phi(u, eta)).
inline QDualVector group_coadjoint_N(const Algebra& alg, const GVector& eta, const QDualVector& y) {
    GVector u, xi;
    for (const auto& [i, c] : y.coords.coords)
        (alg.basis.in_u(i) ? u : xi).coords.emplace(i, c);
    GVector out = y.coords;
    out += moment_map_phi(alg, u, eta);
    return QDualVector{std::move(out)};
}

/// Adjoint action of a torus element with coordinates z_1..z_l (all
/// nonzero): fixes t, scales the root coordinate of gamma by
/// prod z_i^{c_i} with c the coefficients of gamma over the simple roots.
inline QVector adjoint_torus(const Algebra& alg, const std::vector<Rat>& z, const QVector& v) {
    if (static_cast<int>(z.size()) != alg.basis.l) throw Error("torus element needs l coordinates");
    for (const auto& zi : z)
        if (zi == 0) throw Error("torus coordinates must be nonzero");
    GVector out;
    for (const auto& [i, c] : v.coords.coords) {
        if (alg.basis.is_cartan(i)) {
            out.coords.emplace(i, c);
            continue;
        }
        Rat f(1);
        const auto& root = alg.basis.elements[i].root;
        for (int k = 0; k < alg.basis.l; ++k) {
            int e = root[k];
            if (e > 0)
                f *= rat_pow(z[k], static_cast<unsigned>(e));
            else if (e < 0)
                f /= rat_pow(z[k], static_cast<unsigned>(-e));
        }
        out.coords.emplace(i, c * f);
    }
    return QVector{std::move(out)};
}

/// Exact exp(ad_q x)(z); requires ad_q(x) nilpotent.
inline QVector adjoint_exp(const Algebra& alg, const QVector& x, const QVector& z) {
    QVector acc = z, term = z;
    Rat fact(1);
    const int bound = 2 * alg.basis.dim() + 2;
    for (int k = 1; k <= bound; ++k) {
        term = q_bracket(alg, x, term);
        if (term.coords.is_zero()) return acc;
        fact *= k;
        acc.coords += term.coords.scaled(1 / fact);
    }
    throw Error("adjoint_exp: ad_q(x) is not nilpotent");
}

/// The Kirillov pairing matrix K_{jk}(y) = <[e_j, e_k]_q, y>.
/// Antisymmetric; its rank is dim Q.y.
inline RatMatrix kirillov_matrix(const Algebra& alg, const QDualVector& y) {
    const auto& b = alg.basis;
    const int dim = b.dim();
    auto pt = coadjoint_point(alg, y);
    RatMatrix k_mat(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            if (b.in_uminus(i) && b.in_uminus(j)) continue;  // abelian ideal
            bool mixed = b.in_uminus(i) || b.in_uminus(j);
            Rat val(0);
            for (const auto& [k, c] : b.bracket_table[i][j]) {
                if (mixed && !b.in_uminus(k)) continue;  // p_- on the mixed bracket
                val += c * pt[k];
            }
            k_mat(i, j) = val;
            k_mat(j, i) = -val;
        }
    return k_mat;
}

inline std::size_t kirillov_rank(const Algebra& alg, const QDualVector& y) {
    return rank(kirillov_matrix(alg, y));
}

/// Random coordinate vector with integer entries in [-999, 999] over the
/// selected label classes.
inline GVector random_coords(const Algebra& alg, SplitMix64& rng, bool cartan, bool pos, bool neg) {
    GVector v;
    for (int i = 0; i < alg.basis.dim(); ++i) {
        bool take = (alg.basis.is_cartan(i) && cartan) || (alg.basis.in_u(i) && pos) ||
                    (alg.basis.in_uminus(i) && neg);
        if (!take) continue;
        long c = rng.next_in(-999, 999);
        if (c != 0) v.coords.emplace(i, Rat(c));
    }
    return v;
}

inline QDualVector random_dual(const Algebra& alg, SplitMix64& rng) {
    return QDualVector{random_coords(alg, rng, true, true, true)};
}

struct IndexEstimate {
    int index = 0;
    bool conclusive = false;
    std::size_t max_rank = 0;
    int samples_used = 0;
    std::optional<QDualVector> witness;
};

/// Estimates ind q = dim q - max rank of the Kirillov form over random
/// integer points. Resamples in batches until the maximum stabilises
/// between consecutive batches (at most 8 batches); reports inconclusive
/// if it never does.
inline IndexEstimate index_estimate(const Algebra& alg, int samples, std::uint64_t seed) {
    if (samples < 1) throw Error("index_estimate: samples must be >= 1");
    SplitMix64 rng(derive_seed(seed, "index_estimate"));
    IndexEstimate est;
    const int max_batches = 8;
    for (int batch = 0; batch < max_batches; ++batch) {
        std::size_t before = est.max_rank;
        for (int s = 0; s < samples; ++s) {
            QDualVector y = random_dual(alg, rng);
            std::size_t r = kirillov_rank(alg, y);
            ++est.samples_used;
            if (r > est.max_rank) {
                est.max_rank = r;
                est.witness = y;
            }
        }
        if (batch > 0 && est.max_rank == before) {
            est.conclusive = true;
            break;
        }
    }
    est.index = alg.basis.dim() - static_cast<int>(est.max_rank);
    return est;
}

/// Finds u' in u with exp(ad u')(t) = t + u, for b = t + u with regular
/// Cartan part; solved height by height up the root filtration.
inline GVector u_conjugate_to_cartan(const Algebra& alg, const GVector& b) {
    GVector t, u;
    for (const auto& [i, c] : b.coords) {
        if (alg.basis.is_cartan(i))
            t.coords.emplace(i, c);
        else if (alg.basis.in_u(i))
            u.coords.emplace(i, c);
        else
            throw Error("u_conjugate_to_cartan: argument must lie in b");
    }
    for (int k = alg.basis.pos_begin; k < alg.basis.pos_end; ++k)
        if (root_on_cartan(alg, k, t) == 0)
            throw NotRegular("Cartan part is not regular: root " + alg.basis.label(k) +
                             " vanishes on it");
    GVector target = t + u;
    GVector uprime;
    const int max_height = alg.roots.coxeter - 1;
    for (int h = 1; h <= max_height; ++h) {
        GVector diff = target - exp_ad(alg, uprime, t);
        if (diff.is_zero()) break;
        for (const auto& [k, v] : diff.coords) {
            if (!alg.basis.in_u(k) || alg.basis.elements[k].height != h) continue;
            uprime.add_to(k, -v / root_on_cartan(alg, k, t));
        }
    }
    if (!(exp_ad(alg, uprime, t) == target))
        throw InternalError("u-conjugation did not converge");
    return uprime;
}

} // namespace iwcontract

#endif
