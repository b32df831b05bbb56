#ifndef IWCONTRACT_LIECORE_HPP
#define IWCONTRACT_LIECORE_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace iwcontract {

enum class Family { A, B, C, D };

inline char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
    }
    throw UnsupportedFamily("unknown family");
}

inline Family family_from_letter(char c) {
    switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
    }
    throw UnsupportedFamily(std::string("unsupported family: ") + c);
}

/// Classical type and rank. Ranks where a family coincides with another
/// one (B1, C1, D1, D2) are rejected.
struct AlgebraSpec {
    Family family;
    int rank;

    int matrix_dim() const {
        switch (family) {
            case Family::A: return rank + 1;
            case Family::B: return 2 * rank + 1;
            case Family::C: return 2 * rank;
            case Family::D: return 2 * rank;
        }
        throw UnsupportedFamily("unknown family");
    }

    int dim() const {
        switch (family) {
            case Family::A: return (rank + 1) * (rank + 1) - 1;
            case Family::B: return rank * (2 * rank + 1);
            case Family::C: return rank * (2 * rank + 1);
            case Family::D: return rank * (2 * rank - 1);
        }
        throw UnsupportedFamily("unknown family");
    }

    std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }
};

inline void validate_spec(const AlgebraSpec& s) {
    switch (s.family) {
        case Family::A:
            if (s.rank < 1) throw UnsupportedRank("family A requires rank >= 1");
            return;
        case Family::B:
        case Family::C:
            if (s.rank < 2) throw UnsupportedRank("families B, C require rank >= 2");
            return;
        case Family::D:
            if (s.rank < 3) throw UnsupportedRank("family D requires rank >= 3");
            return;
    }
    throw UnsupportedFamily("unknown family");
}

enum class LabelKind { cartan, positive, negative };

struct BasisElement {
    std::string label;
    LabelKind kind;
    RatMatrix matrix;
    std::vector<int> root;    // coefficients over simple roots (signed); empty for Cartan
    int height = 0;           // sum of root coefficients
    std::pair<int, int> anchor{-1, -1};  // matrix position carrying the coordinate
    Rat anchor_value;
    std::vector<Rat> weight;  // eigenvalues of ad(t_1..t_l); empty for Cartan
};

struct RootDatum {
    std::vector<std::vector<int>> simple_roots;    // unit vectors, kept for serialization
    std::vector<std::vector<int>> positive_roots;  // coefficients over simple roots
    std::vector<int> theta;
    std::vector<int> a_coeffs;
    int coxeter = 0;
    std::vector<int> exponents;
    std::vector<int> degrees;
};

/// Element of g as a finitely supported coordinate vector over the
/// structured basis. Keys are basis indices.
struct GVector {
    std::map<int, Rat> coords;

    bool is_zero() const { return coords.empty(); }

    Rat coeff(int i) const {
        auto it = coords.find(i);
        return it == coords.end() ? Rat(0) : it->second;
    }

    void set(int i, const Rat& v) {
        if (v == 0)
            coords.erase(i);
        else
            coords[i] = v;
    }

    void add_to(int i, const Rat& v) {
        auto it = coords.find(i);
        if (it == coords.end()) {
            if (v != 0) coords.emplace(i, v);
        } else {
            it->second += v;
            if (it->second == 0) coords.erase(it);
        }
    }

    GVector& operator+=(const GVector& o) {
        for (const auto& [i, v] : o.coords) add_to(i, v);
        return *this;
    }

    GVector& operator-=(const GVector& o) {
        for (const auto& [i, v] : o.coords) add_to(i, -v);
        return *this;
    }

    GVector scaled(const Rat& c) const {
        GVector r;
        if (c == 0) return r;
        for (const auto& [i, v] : coords) r.coords.emplace(i, v * c);
        return r;
    }

    friend GVector operator+(GVector a, const GVector& b) { return a += b; }
    friend GVector operator-(GVector a, const GVector& b) { return a -= b; }
    bool operator==(const GVector&) const = default;
};

/// Basis of g with the triangular layout [t_1..t_l | e_{+gamma} | e_{-gamma}],
/// negative roots mirroring the positive order. Immutable after construction.
struct StructuredBasis {
    int n = 0;  // matrix dimension
    int l = 0;  // rank
    std::vector<BasisElement> elements;
    std::map<std::string, int> label_index;
    int pos_begin = 0, pos_end = 0, neg_begin = 0, neg_end = 0;
    RatMatrix gram, gram_inv;
    std::vector<int> b_indices, bminus_indices;
    RatMatrix b_pairing_inv;  // inverse of beta restricted to b x b^-
    RatMatrix cartan_diag_inv;
    std::vector<std::vector<std::vector<std::pair<int, Rat>>>> bracket_table;

    int dim() const { return static_cast<int>(elements.size()); }
    int positive_count() const { return pos_end - pos_begin; }

    int index_of(const std::string& label) const {
        auto it = label_index.find(label);
        if (it == label_index.end()) throw BasisMismatch("unknown basis label: " + label);
        return it->second;
    }

    const std::string& label(int i) const { return elements[i].label; }
    LabelKind kind(int i) const { return elements[i].kind; }
    bool is_cartan(int i) const { return elements[i].kind == LabelKind::cartan; }
    bool in_u(int i) const { return elements[i].kind == LabelKind::positive; }
    bool in_uminus(int i) const { return elements[i].kind == LabelKind::negative; }
    bool in_b(int i) const { return !in_uminus(i); }

    /// Index of e_{-gamma} for e_{+gamma} and vice versa.
    int mirror(int i) const {
        if (in_u(i)) return neg_begin + (i - pos_begin);
        if (in_uminus(i)) return pos_begin + (i - neg_begin);
        throw BasisMismatch("mirror of a Cartan element");
    }

    RatMatrix to_matrix(const GVector& v) const {
        RatMatrix m(n, n);
        for (const auto& [i, c] : v.coords) {
            const RatMatrix& b = elements[i].matrix;
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    if (b(p, q) != 0) m(p, q) += c * b(p, q);
        }
        return m;
    }

    /// Coordinates of a matrix lying in g. Throws BasisMismatch when the
    /// matrix is not in the span of the basis.
    GVector expand(const RatMatrix& m) const {
        GVector out;
        for (int k = pos_begin; k < neg_end; ++k) {
            const auto& e = elements[k];
            const Rat& val = m(e.anchor.first, e.anchor.second);
            if (val != 0) out.set(k, val / e.anchor_value);
        }
        std::vector<Rat> rhs(l);
        for (int i = 0; i < l; ++i) rhs[i] = m(i, i);
        for (int i = 0; i < l; ++i) {
            Rat c(0);
            for (int j = 0; j < l; ++j) c += cartan_diag_inv(i, j) * rhs[j];
            out.set(i, c);
        }
        if (to_matrix(out) != m) throw BasisMismatch("matrix does not lie in the algebra");
        return out;
    }
};

struct Algebra {
    AlgebraSpec spec;
    StructuredBasis basis;
    RootDatum roots;
};

namespace detail {

inline std::string root_label(const std::vector<int>& coeffs, bool positive) {
    std::string s = positive ? "e{+" : "e{-";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(positive ? coeffs[i] : -coeffs[i]);
    }
    s += '}';
    return s;
}

struct RootCandidate {
    RatMatrix m;
    std::pair<int, int> anchor;
    Rat anchor_value;
    std::vector<Rat> weight;
    std::vector<int> coeffs;
    int height = 0;
    bool positive = false;
};

} // namespace detail

inline Algebra build_algebra(const AlgebraSpec& spec) {
    validate_spec(spec);
    const int n = spec.matrix_dim();
    const int l = spec.rank;

    auto unit = [n](int p, int q) {
        RatMatrix m(n, n);
        m(p, q) = 1;
        return m;
    };

    // Cartan basis: diagonal matrices.
    std::vector<RatMatrix> cartan;
    for (int i = 0; i < l; ++i) {
        RatMatrix t(n, n);
        if (spec.family == Family::A) {
            t(i, i) = 1;
            t(i + 1, i + 1) = -1;
        } else {
            t(i, i) = 1;
            t(n - 1 - i, n - 1 - i) = -1;
        }
        cartan.push_back(std::move(t));
    }

    // Root vector candidates: elementary matrices projected into g.
    std::vector<detail::RootCandidate> cands;
    if (spec.family == Family::A) {
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                if (p == q) continue;
                detail::RootCandidate c;
                c.m = unit(p, q);
                c.anchor = {p, q};
                c.anchor_value = 1;
                cands.push_back(std::move(c));
            }
    } else {
        RatMatrix J(n, n);
        for (int i = 0; i < n; ++i)
            J(i, n - 1 - i) = (spec.family == Family::C && i >= l) ? Rat(-1) : Rat(1);
        RatMatrix Jinv = inverse(J);
        auto tau = [&](const RatMatrix& x) { return (Jinv * x.transpose() * J).scaled(Rat(-1)); };
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                if (p == q) continue;
                std::pair<int, int> mirror{n - 1 - q, n - 1 - p};
                if (std::pair{p, q} > mirror) continue;  // one representative per support pair
                RatMatrix v = unit(p, q) + tau(unit(p, q));
                if (v.is_zero()) continue;
                detail::RootCandidate c;
                c.anchor = {p, q};
                c.anchor_value = v(p, q);
                c.m = std::move(v);
                cands.push_back(std::move(c));
            }
        // Basis matrices satisfy x^T J + J x = 0 by construction of tau;
        // assert it anyway.
        for (const auto& c : cands)
            if (!(c.m.transpose() * J + J * c.m).is_zero())
                throw InternalError("root candidate violates the defining symmetry");
    }

    // Weights with respect to the Cartan basis; each candidate must be a
    // simultaneous ad-eigenvector.
    for (auto& c : cands) {
        c.weight.resize(l);
        for (int i = 0; i < l; ++i) {
            RatMatrix br = cartan[i] * c.m - c.m * cartan[i];
            Rat w = br(c.anchor.first, c.anchor.second) / c.anchor_value;
            if (!(br - c.m.scaled(w)).is_zero())
                throw InternalError("root candidate is not an ad-eigenvector");
            c.weight[i] = w;
        }
        bool upper = c.anchor.first < c.anchor.second;
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                if (c.m(p, q) != 0 && (upper ? p >= q : p <= q))
                    throw InternalError("root vector not strictly triangular");
        c.positive = upper;
    }

    // Simple roots: positive weights that are not sums of two positive weights.
    std::vector<std::vector<Rat>> pos_wts;
    for (const auto& c : cands)
        if (c.positive) pos_wts.push_back(c.weight);
    auto is_pos_weight = [&](const std::vector<Rat>& w) {
        return std::find(pos_wts.begin(), pos_wts.end(), w) != pos_wts.end();
    };
    std::vector<const detail::RootCandidate*> simples;
    for (const auto& c : cands) {
        if (!c.positive) continue;
        bool decomposable = false;
        for (const auto& w1 : pos_wts) {
            std::vector<Rat> w2(l);
            for (int i = 0; i < l; ++i) w2[i] = c.weight[i] - w1[i];
            if (is_pos_weight(w2)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simples.push_back(&c);
    }
    if (static_cast<int>(simples.size()) != l)
        throw InternalError("simple root count does not match the rank");
    std::sort(simples.begin(), simples.end(),
              [](const auto* a, const auto* b) { return a->anchor < b->anchor; });

    RatMatrix s_mat(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) s_mat(i, j) = simples[j]->weight[i];
    RatMatrix s_inv = inverse(s_mat);

    for (auto& c : cands) {
        c.coeffs.resize(l);
        c.height = 0;
        for (int j = 0; j < l; ++j) {
            Rat v(0);
            for (int i = 0; i < l; ++i) v += s_inv(j, i) * c.weight[i];
            if (v.get_den() != 1) throw InternalError("non-integral root coefficient");
            c.coeffs[j] = static_cast<int>(v.get_num().get_si());
            if (c.positive ? c.coeffs[j] < 0 : c.coeffs[j] > 0)
                throw InternalError("root coefficients of mixed sign");
            c.height += c.coeffs[j];
        }
    }

    // Basis order: Cartan, positive roots by (height, coefficients),
    // negative roots in the mirrored order.
    std::vector<detail::RootCandidate*> positives, negatives;
    for (auto& c : cands) (c.positive ? positives : negatives).push_back(&c);
    auto root_order = [](const auto* a, const auto* b) {
        if (a->height != b->height) return a->height < b->height;
        return a->coeffs < b->coeffs;
    };
    std::sort(positives.begin(), positives.end(), root_order);
    std::map<std::vector<int>, detail::RootCandidate*> neg_by_coeffs;
    for (auto* c : negatives) neg_by_coeffs[c->coeffs] = c;
    if (positives.size() != negatives.size())
        throw InternalError("positive/negative root counts differ");

    StructuredBasis basis;
    basis.n = n;
    basis.l = l;
    for (int i = 0; i < l; ++i) {
        BasisElement e;
        e.label = "t" + std::to_string(i + 1);
        e.kind = LabelKind::cartan;
        e.matrix = cartan[i];
        basis.elements.push_back(std::move(e));
    }
    basis.pos_begin = l;
    for (auto* c : positives) {
        BasisElement e;
        e.label = detail::root_label(c->coeffs, true);
        e.kind = LabelKind::positive;
        e.matrix = c->m;
        e.root = c->coeffs;
        e.height = c->height;
        e.anchor = c->anchor;
        e.anchor_value = c->anchor_value;
        e.weight = c->weight;
        basis.elements.push_back(std::move(e));
    }
    basis.pos_end = basis.neg_begin = static_cast<int>(basis.elements.size());
    for (auto* cp : positives) {
        std::vector<int> negc(l);
        for (int j = 0; j < l; ++j) negc[j] = -cp->coeffs[j];
        auto it = neg_by_coeffs.find(negc);
        if (it == neg_by_coeffs.end()) throw InternalError("unpaired positive root");
        auto* c = it->second;
        BasisElement e;
        e.label = detail::root_label(c->coeffs, false);
        e.kind = LabelKind::negative;
        e.matrix = c->m;
        e.root = c->coeffs;
        e.height = c->height;
        e.anchor = c->anchor;
        e.anchor_value = c->anchor_value;
        e.weight = c->weight;
        basis.elements.push_back(std::move(e));
    }
    basis.neg_end = static_cast<int>(basis.elements.size());
    if (basis.dim() != spec.dim()) throw InternalError("basis count does not match dim g");
    for (int i = 0; i < basis.dim(); ++i) basis.label_index[basis.elements[i].label] = i;

    // Anchors must be unique so that expansion can read coordinates off
    // single matrix entries.
    {
        std::map<std::pair<int, int>, int> owner;
        for (int k = basis.pos_begin; k < basis.neg_end; ++k) {
            const RatMatrix& m = basis.elements[k].matrix;
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    if (m(p, q) != 0) {
                        auto [it, fresh] = owner.emplace(std::pair{p, q}, k);
                        if (!fresh) throw InternalError("overlapping root vector supports");
                    }
        }
    }

    // Cartan diagonal solve operator (first l diagonal positions).
    {
        RatMatrix d(l, l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) d(i, j) = cartan[j](i, i);
        basis.cartan_diag_inv = inverse(d);
    }

    // Trace form Gram matrix and its structural properties.
    const int dim = basis.dim();
    basis.gram = RatMatrix(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            Rat v = (basis.elements[i].matrix * basis.elements[j].matrix).trace();
            basis.gram(i, j) = v;
            basis.gram(j, i) = v;
        }
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            bool i_root = !basis.is_cartan(i), j_root = !basis.is_cartan(j);
            bool allowed;
            if (i_root && j_root)
                allowed = basis.kind(i) != basis.kind(j) && basis.mirror(i) == j;
            else
                allowed = !i_root && !j_root;
            if (!allowed && basis.gram(i, j) != 0)
                throw InternalError("trace form pairs non-opposite root spaces");
        }
    basis.gram_inv = inverse(basis.gram);

    for (int i = 0; i < l; ++i) basis.b_indices.push_back(i);
    for (int i = basis.pos_begin; i < basis.pos_end; ++i) basis.b_indices.push_back(i);
    for (int i = 0; i < l; ++i) basis.bminus_indices.push_back(i);
    for (int i = basis.neg_begin; i < basis.neg_end; ++i) basis.bminus_indices.push_back(i);
    {
        const std::size_t m = basis.b_indices.size();
        RatMatrix p(m, m);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c)
                p(r, c) = basis.gram(basis.b_indices[r], basis.bminus_indices[c]);
        basis.b_pairing_inv = inverse(p);
    }

    // Structure constants from matrix commutators.
    basis.bracket_table.assign(dim, std::vector<std::vector<std::pair<int, Rat>>>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            RatMatrix comm = basis.elements[i].matrix * basis.elements[j].matrix -
                             basis.elements[j].matrix * basis.elements[i].matrix;
            GVector v = basis.expand(comm);
            for (const auto& [k, c] : v.coords) {
                basis.bracket_table[i][j].emplace_back(k, c);
                basis.bracket_table[j][i].emplace_back(k, -c);
            }
        }

    // Root datum.
    RootDatum rd;
    for (int i = 0; i < l; ++i) {
        std::vector<int> e(l, 0);
        e[i] = 1;
        rd.simple_roots.push_back(std::move(e));
    }
    int max_h = 0, max_count = 0;
    for (int i = basis.pos_begin; i < basis.pos_end; ++i) {
        rd.positive_roots.push_back(basis.elements[i].root);
        int h = basis.elements[i].height;
        if (h > max_h) {
            max_h = h;
            max_count = 1;
            rd.theta = basis.elements[i].root;
        } else if (h == max_h) {
            ++max_count;
        }
    }
    if (max_count != 1) throw InternalError("highest root is not unique");
    rd.a_coeffs = rd.theta;
    switch (spec.family) {
        case Family::A: rd.coxeter = l + 1; break;
        case Family::B:
        case Family::C: rd.coxeter = 2 * l; break;
        case Family::D: rd.coxeter = 2 * l - 2; break;
    }
    if (max_h + 1 != rd.coxeter) throw InternalError("highest root height does not match h - 1");
    int a_sum = 0;
    for (int a : rd.a_coeffs) a_sum += a;
    if (a_sum != rd.coxeter - 1) throw InternalError("sum of theta coefficients is not h - 1");
    if (static_cast<int>(rd.positive_roots.size()) * 2 + l != spec.dim())
        throw InternalError("positive root count does not match (dim g - l)/2");

    switch (spec.family) {
        case Family::A:
            for (int i = 1; i <= l; ++i) rd.exponents.push_back(i);
            break;
        case Family::B:
        case Family::C:
            for (int i = 1; i <= l; ++i) rd.exponents.push_back(2 * i - 1);
            break;
        case Family::D:
            for (int i = 1; i < l; ++i) rd.exponents.push_back(2 * i - 1);
            rd.exponents.push_back(l - 1);
            std::sort(rd.exponents.begin(), rd.exponents.end());
            break;
    }
    for (int m : rd.exponents) rd.degrees.push_back(m + 1);

    return Algebra{spec, std::move(basis), std::move(rd)};
}

/// Convenience constructor from labeled coordinates.
inline GVector gvec(const StructuredBasis& basis,
                    std::initializer_list<std::pair<const char*, Rat>> items) {
    GVector v;
    for (const auto& [label, c] : items) v.add_to(basis.index_of(label), c);
    return v;
}

/// Matrix commutator [x, y] expanded in the structured basis.
inline GVector bracket_g(const Algebra& alg, const GVector& x, const GVector& y) {
    GVector out;
    for (const auto& [i, xi] : x.coords)
        for (const auto& [j, yj] : y.coords) {
            const Rat f = xi * yj;
            for (const auto& [k, c] : alg.basis.bracket_table[i][j]) out.add_to(k, f * c);
        }
    return out;
}

/// beta(x, y) = trace(XY) in the defining representation.
inline Rat trace_form(const Algebra& alg, const GVector& x, const GVector& y) {
    Rat s(0);
    for (const auto& [i, xi] : x.coords)
        for (const auto& [j, yj] : y.coords) {
            const Rat& g = alg.basis.gram(i, j);
            if (g != 0) s += xi * yj * g;
        }
    return s;
}

/// Projection g -> u^- with kernel b.
inline GVector project_negative(const Algebra& alg, const GVector& x) {
    GVector out;
    for (const auto& [i, v] : x.coords)
        if (alg.basis.in_uminus(i)) out.coords.emplace(i, v);
    return out;
}

/// Projection g -> b with kernel u^-.
inline GVector project_b(const Algebra& alg, const GVector& x) {
    GVector out;
    for (const auto& [i, v] : x.coords)
        if (alg.basis.in_b(i)) out.coords.emplace(i, v);
    return out;
}

/// dim of the centraliser g^x, via the exact rank of ad(x).
inline int centralizer_dim(const Algebra& alg, const GVector& x) {
    const int dim = alg.basis.dim();
    RatMatrix ad(dim, dim);
    for (const auto& [i, xi] : x.coords)
        for (int j = 0; j < dim; ++j)
            for (const auto& [k, c] : alg.basis.bracket_table[i][j]) ad(k, j) += xi * c;
    return dim - static_cast<int>(rank(ad));
}

/// Value gamma(t) of the root of basis element `root_idx` on a Cartan
/// element with coordinates given by `t` (only Cartan entries are read).
inline Rat root_on_cartan(const Algebra& alg, int root_idx, const GVector& t) {
    const auto& w = alg.basis.elements[root_idx].weight;
    Rat s(0);
    for (const auto& [i, ti] : t.coords)
        if (alg.basis.is_cartan(i)) s += ti * w[i];
    return s;
}

/// exp(ad x)(y), exact; requires ad(x) nilpotent.
inline GVector exp_ad(const Algebra& alg, const GVector& x, const GVector& y) {
    GVector acc = y;
    GVector term = y;
    Rat fact(1);
    const int bound = 2 * alg.basis.dim() + 2;
    for (int k = 1; k <= bound; ++k) {
        term = bracket_g(alg, x, term);
        if (term.is_zero()) return acc;
        fact *= k;
        acc += term.scaled(1 / fact);
    }
    throw Error("exp_ad: ad(x) is not nilpotent");
}

/// Partitions of m in decreasing lexicographic order.
inline std::vector<std::vector<int>> partitions_desc(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

/// Upper-triangular Jordan representatives of the nilpotent orbits, one
/// per partition of l+1. Family A only.
inline std::vector<GVector> nilpotent_representatives(const Algebra& alg) {
    if (alg.spec.family != Family::A)
        throw UnsupportedFamily("nilpotent representatives are only available for family A");
    const int n = alg.spec.matrix_dim();
    // E_{k,k+1} is the basis vector of the k-th simple root; locate by anchor.
    std::vector<int> chain(n - 1, -1);
    for (int i = alg.basis.pos_begin; i < alg.basis.pos_end; ++i) {
        const auto& e = alg.basis.elements[i];
        if (e.anchor.second == e.anchor.first + 1) chain[e.anchor.first] = i;
    }
    std::vector<GVector> reps;
    for (const auto& part : partitions_desc(n)) {
        GVector v;
        int offset = 0;
        for (int block : part) {
            for (int k = 0; k < block - 1; ++k) v.set(chain[offset + k], Rat(1));
            offset += block;
        }
        reps.push_back(std::move(v));
    }
    return reps;
}

} // namespace iwcontract

#endif
