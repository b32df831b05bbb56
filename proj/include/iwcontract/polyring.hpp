#ifndef IWCONTRACT_POLYRING_HPP
#define IWCONTRACT_POLYRING_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace iwcontract {

/// Variable universe: a fixed set of labels, ordered lexicographically.
/// Variable ids are positions in that order.
class Universe {
  public:
    explicit Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
        std::sort(labels_.begin(), labels_.end());
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            auto [it, fresh] = index_.emplace(labels_[i], static_cast<int>(i));
            if (!fresh) throw Error("duplicate variable label: " + labels_[i]);
        }
    }

    int size() const { return static_cast<int>(labels_.size()); }

    int id(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw UnknownVariable("unknown variable: " + label);
        return it->second;
    }

    const std::string& label(int v) const { return labels_[v]; }

    bool operator==(const Universe& o) const { return labels_ == o.labels_; }

  private:
    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

inline UniversePtr make_universe(std::vector<std::string> labels) {
    return std::make_shared<const Universe>(std::move(labels));
}

/// Exponent vector, sparse: (variable id, exponent) pairs sorted by id,
/// exponents strictly positive.
struct Monomial {
    std::vector<std::pair<int, int>> factors;

    int degree() const {
        int d = 0;
        for (const auto& [v, e] : factors) d += e;
        return d;
    }

    int exponent_of(int var) const {
        for (const auto& [v, e] : factors)
            if (v == var) return e;
        return 0;
    }

    bool operator==(const Monomial&) const = default;

    static Monomial one() { return {}; }

    static Monomial of(std::vector<std::pair<int, int>> factors) {
        std::sort(factors.begin(), factors.end());
        Monomial m;
        for (const auto& [v, e] : factors) {
            if (e < 0) throw Error("negative exponent");
            if (e > 0) m.factors.emplace_back(v, e);
        }
        return m;
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (i < factors.size() || j < o.factors.size()) {
            if (j == o.factors.size() || (i < factors.size() && factors[i].first < o.factors[j].first))
                r.factors.push_back(factors[i++]);
            else if (i == factors.size() || o.factors[j].first < factors[i].first)
                r.factors.push_back(o.factors[j++]);
            else {
                r.factors.emplace_back(factors[i].first, factors[i].second + o.factors[j].second);
                ++i;
                ++j;
            }
        }
        return r;
    }
};

/// Graded lexicographic comparison: higher total degree first, ties by
/// lex on the sorted-label variable order. Returns +1 when a precedes b
/// in the canonical (descending) term order.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() || j < b.factors.size()) {
        int va = i < a.factors.size() ? a.factors[i].first : INT32_MAX;
        int vb = j < b.factors.size() ? b.factors[j].first : INT32_MAX;
        if (va < vb) return 1;   // a has positive exponent on an earlier variable
        if (vb < va) return -1;
        if (a.factors[i].second != b.factors[j].second)
            return a.factors[i].second > b.factors[j].second ? 1 : -1;
        ++i;
        ++j;
    }
    return 0;
}

struct MonomialCanonicalOrder {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

/// Sparse multivariate polynomial over Rat. Terms are kept in canonical
/// (graded-lex descending) order; no zero coefficients are stored.
class SparsePoly {
  public:
    using TermMap = std::map<Monomial, Rat, MonomialCanonicalOrder>;

    SparsePoly() = default;

    static SparsePoly zero(UniversePtr u) {
        SparsePoly p;
        p.uni_ = std::move(u);
        return p;
    }

    static SparsePoly constant(UniversePtr u, const Rat& c) {
        SparsePoly p = zero(std::move(u));
        if (c != 0) p.terms_.emplace(Monomial::one(), c);
        return p;
    }

    static SparsePoly monomial(UniversePtr u, Monomial m, const Rat& c) {
        SparsePoly p = zero(std::move(u));
        if (c != 0) p.terms_.emplace(std::move(m), c);
        return p;
    }

    static SparsePoly variable(UniversePtr u, int var) {
        return monomial(std::move(u), Monomial::of({{var, 1}}), Rat(1));
    }

    static SparsePoly variable(const UniversePtr& u, const std::string& label) {
        return variable(u, u->id(label));
    }

    const UniversePtr& universe() const { return uni_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rat coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        require_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    SparsePoly& operator-=(const SparsePoly& o) {
        require_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    SparsePoly operator*(const SparsePoly& o) const {
        require_same(o);
        SparsePoly r = zero(uni_ ? uni_ : o.uni_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
        return r;
    }

    SparsePoly scaled(const Rat& c) const {
        SparsePoly r = zero(uni_);
        if (c == 0) return r;
        for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
        return r;
    }

    SparsePoly operator-() const { return scaled(Rat(-1)); }

    SparsePoly pow(unsigned e) const {
        SparsePoly acc = constant(uni_, Rat(1));
        SparsePoly b = *this;
        while (e > 0) {
            if (e & 1u) acc = acc * b;
            b = b * b;
            e >>= 1u;
        }
        return acc;
    }

    bool operator==(const SparsePoly& o) const {
        if (uni_ && o.uni_ && !(uni_ == o.uni_ || *uni_ == *o.uni_)) return false;
        return terms_ == o.terms_;
    }

    SparsePoly derivative(int var) const {
        SparsePoly r = zero(uni_);
        for (const auto& [m, c] : terms_) {
            int e = m.exponent_of(var);
            if (e == 0) continue;
            Monomial d = m;
            for (auto& [v, ex] : d.factors)
                if (v == var) --ex;
            std::erase_if(d.factors, [](const auto& f) { return f.second == 0; });
            r.add_term(d, c * e);
        }
        return r;
    }

    SparsePoly derivative(const std::string& label) const { return derivative(uni_->id(label)); }

    /// Exact value at a total assignment (one value per universe variable).
    Rat evaluate(const std::vector<Rat>& point) const {
        Rat s(0);
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            for (const auto& [v, e] : m.factors) t *= rat_pow(point[v], static_cast<unsigned>(e));
            s += t;
        }
        return s;
    }

    /// Value at a labeled point; every variable occurring in the
    /// polynomial must be assigned.
    Rat evaluate(const std::map<std::string, Rat>& point) const {
        std::vector<Rat> full(uni_->size(), Rat(0));
        std::vector<bool> have(uni_->size(), false);
        for (const auto& [label, v] : point) {
            int id = uni_->id(label);
            full[id] = v;
            have[id] = true;
        }
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.factors)
                if (!have[v]) throw MissingCoordinate("no value for variable " + uni_->label(v));
        return evaluate(full);
    }

    /// Value of the partial derivative d/d var at a total assignment,
    /// computed without materialising the derivative polynomial.
    Rat derivative_value(int var, const std::vector<Rat>& point) const {
        Rat s(0);
        for (const auto& [m, c] : terms_) {
            int e = m.exponent_of(var);
            if (e == 0) continue;
            Rat t = c * e;
            for (const auto& [v, ex] : m.factors)
                t *= rat_pow(point[v], static_cast<unsigned>(v == var ? ex - 1 : ex));
            s += t;
        }
        return s;
    }

    /// Simultaneous linear change of variables: variable v is replaced by
    /// images[v], which must live in the target universe.
    SparsePoly substitute(const std::vector<SparsePoly>& images) const {
        if (static_cast<int>(images.size()) != uni_->size())
            throw Error("substitute: one image per variable required");
        UniversePtr target = images.empty() ? uni_ : images.front().universe();
        SparsePoly r = zero(target);
        std::map<std::pair<int, int>, SparsePoly> powers;
        for (const auto& [m, c] : terms_) {
            SparsePoly t = constant(target, c);
            for (const auto& [v, e] : m.factors) {
                auto key = std::pair{v, e};
                auto it = powers.find(key);
                if (it == powers.end())
                    it = powers.emplace(key, images[v].pow(static_cast<unsigned>(e))).first;
                t = t * it->second;
            }
            r += t;
        }
        return r;
    }

  private:
    void require_same(const SparsePoly& o) const {
        if (!uni_ || !o.uni_) return;  // zero polynomials from default construction
        if (uni_ == o.uni_ || *uni_ == *o.uni_) return;
        throw UniverseMismatch("polynomials live in different variable universes");
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    UniversePtr uni_;
    TermMap terms_;
};

/// Partition of the variable universe into two classes.
class Bigrading {
  public:
    Bigrading(UniversePtr u, std::vector<std::uint8_t> cls) : uni_(std::move(u)), cls_(std::move(cls)) {
        if (static_cast<int>(cls_.size()) != uni_->size())
            throw Error("bigrading: class vector size mismatch");
    }

    static Bigrading with_second_class(const UniversePtr& u, const std::vector<std::string>& second) {
        std::vector<std::uint8_t> cls(u->size(), 0);
        for (const auto& label : second) cls[u->id(label)] = 1;
        return Bigrading(u, std::move(cls));
    }

    const UniversePtr& universe() const { return uni_; }
    std::uint8_t cls(int var) const { return cls_[var]; }

    std::pair<int, int> bidegree(const Monomial& m) const {
        int d0 = 0, d1 = 0;
        for (const auto& [v, e] : m.factors) (cls_[v] == 0 ? d0 : d1) += e;
        return {d0, d1};
    }

  private:
    UniversePtr uni_;
    std::vector<std::uint8_t> cls_;
};

/// Splits p into bi-homogeneous components; component (i, j) has degree i
/// in first-class and j in second-class variables. The components sum
/// back to p exactly.
inline std::map<std::pair<int, int>, SparsePoly> bigrade_components(const SparsePoly& p,
                                                                    const Bigrading& g) {
    std::map<std::pair<int, int>, SparsePoly> out;
    for (const auto& [m, c] : p.terms()) {
        auto key = g.bidegree(m);
        auto it = out.find(key);
        if (it == out.end()) it = out.emplace(key, SparsePoly::zero(p.universe())).first;
        it->second += SparsePoly::monomial(p.universe(), m, c);
    }
    return out;
}

/// Bidegree of a bi-homogeneous polynomial, if it is one.
inline std::optional<std::pair<int, int>> bidegree(const SparsePoly& p, const Bigrading& g) {
    std::optional<std::pair<int, int>> bd;
    for (const auto& [m, c] : p.terms()) {
        auto d = g.bidegree(m);
        if (bd && *bd != d) return std::nullopt;
        bd = d;
    }
    return bd;
}

/// Exact rank over Q of the Jacobian [d p_k / d v_j] at a total point.
inline std::size_t jacobian_rank(const std::vector<SparsePoly>& polys, const std::vector<Rat>& point) {
    if (polys.empty()) return 0;
    const int nv = polys.front().universe()->size();
    RatMatrix jac(polys.size(), nv);
    for (std::size_t k = 0; k < polys.size(); ++k)
        for (int v = 0; v < nv; ++v) jac(k, v) = polys[k].derivative_value(v, point);
    return rank(jac);
}

/// Labeled-point variant; the point must assign every variable.
inline std::size_t jacobian_rank(const std::vector<SparsePoly>& polys,
                                 const std::map<std::string, Rat>& point) {
    if (polys.empty()) return 0;
    const auto& u = polys.front().universe();
    std::vector<Rat> full(u->size());
    std::vector<bool> have(u->size(), false);
    for (const auto& [label, v] : point) {
        int id = u->id(label);
        full[id] = v;
        have[id] = true;
    }
    for (bool h : have)
        if (!h) throw MissingCoordinate("jacobian_rank: point must assign every variable");
    return jacobian_rank(polys, full);
}

} // namespace iwcontract

#endif
