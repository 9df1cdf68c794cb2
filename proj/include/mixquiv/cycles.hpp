#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mixquiv/matrix.hpp"
#include "mixquiv/quiver.hpp"

namespace mixquiv {

// Canonical representative of a cyclic word under rotation and the
// involution (reverse + toggle bars). Works for any symbol with operator<
// and a barred() method; shared by quiver cycles and tr* symbol words.
template <class Sym>
std::vector<Sym> canonical_cycle_word(const std::vector<Sym>& w) {
    require(!w.empty(), "canonical_cycle_word: empty word");
    size_t n = w.size();
    std::vector<Sym> rev(n);
    for (size_t i = 0; i < n; ++i) rev[i] = w[n - 1 - i].barred();
    std::vector<Sym> best;
    auto consider = [&](const std::vector<Sym>& base) {
        std::vector<Sym> rot(n);
        for (size_t off = 0; off < n; ++off) {
            for (size_t i = 0; i < n; ++i) rot[i] = base[(off + i) % n];
            if (best.empty() || rot < best) best = rot;
        }
    };
    consider(w);
    consider(rev);
    return best;
}

template <class Sym>
bool is_primitive_word(const std::vector<Sym>& w) {
    size_t n = w.size();
    for (size_t p = 1; p <= n / 2; ++p) {
        if (n % p) continue;
        bool period = true;
        for (size_t i = p; i < n && period; ++i) period = (w[i] == w[i - p]);
        if (period) return false;
    }
    return true;
}

// Closed path in Q^(d) up to rotation and involution. Steps are stored in
// traversal order: end(step_k) = origin(step_{k+1}), end(last) = origin(first).
class CyclePath {
  public:
    CyclePath(const DoubledQuiver& dq, std::vector<PathStep> steps);

    const std::vector<PathStep>& steps() const { return steps_; }
    size_t length() const { return steps_.size(); }
    bool primitive() const { return primitive_; }

    // multidegree: arrow id -> number of uses (barred or not)
    std::map<int, int> multidegree() const;

    bool operator==(const CyclePath& o) const { return steps_ == o.steps_; }
    bool operator<(const CyclePath& o) const { return steps_ < o.steps_; }

    // product order: "(c ~b a)" is tr(Z(c) Z(b̄) Z(a)),
    // i.e. traversal a, then b̄, then c.
    std::string str() const;

  private:
    std::vector<PathStep> steps_;  // canonical form
    bool primitive_;
};

// canonicalize is the CyclePath constructor; this name matches usage sites.
inline CyclePath canonicalize(const DoubledQuiver& dq, std::vector<PathStep> steps) {
    return CyclePath(dq, std::move(steps));
}

// All cycle classes of length <= max_len, optionally only those through
// base_vertex, each listed once in canonical form.
std::vector<CyclePath> enumerate_cycles(const DoubledQuiver& dq, int max_len,
                                        std::optional<DQVertex> base_vertex = std::nullopt);

// Q-linear combination of products of trace factors.
class TraceExpression {
  public:
    using FactorList = std::vector<CyclePath>;  // sorted multiset

    TraceExpression() = default;

    static TraceExpression zero() { return {}; }
    static TraceExpression constant(const Rat& c);
    static TraceExpression trace(const CyclePath& c);

    void add_term(FactorList factors, const Rat& coeff);

    TraceExpression operator+(const TraceExpression& o) const;
    TraceExpression operator-(const TraceExpression& o) const;
    TraceExpression operator*(const TraceExpression& o) const;
    TraceExpression scaled(const Rat& c) const;

    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }
    const std::map<FactorList, Rat>& terms() const { return terms_; }

    // multidegree if homogeneous, nullopt otherwise
    std::optional<std::map<int, int>> multidegree() const;

    bool operator==(const TraceExpression& o) const { return terms_ == o.terms_; }

    std::string str() const;

  private:
    std::map<FactorList, Rat> terms_;
};

// --- evaluation --------------------------------------------------------------

// Assignment of matrices to arrows: Y(a) has shape d_{t(a)} x d_{i(a)}.
template <class F>
struct RepPoint {
    std::map<int, Matrix<F>> y;

    const Matrix<F>& of(int arrow_id) const {
        auto it = y.find(arrow_id);
        require(it != y.end(), "rep point: no matrix for arrow " + std::to_string(arrow_id));
        return it->second;
    }
};

template <class F>
RepPoint<F> random_rep(const Quiver& q, const DimensionVector& dv, Rng& rng) {
    RepPoint<F> p;
    for (const Arrow& a : q.arrows()) {
        Rng sub = rng.split(static_cast<std::uint64_t>(a.id));
        p.y[a.id] = random_matrix<F>(dv.dim(a.to), dv.dim(a.from), sub);
    }
    return p;
}

template <class F>
Matrix<F> step_matrix(const PathStep& s, const RepPoint<F>& p) {
    const Matrix<F>& m = p.of(s.arrow);
    return s.bar ? m.transpose() : m;
}

// trace of the ordered product along the cycle
template <class F>
F eval_cycle(const CyclePath& c, const RepPoint<F>& p) {
    Matrix<F> acc = step_matrix(c.steps().front(), p);
    for (size_t k = 1; k < c.steps().size(); ++k) {
        Matrix<F> next = step_matrix(c.steps()[k], p);
        require(next.cols() == acc.rows(), "eval_cycle: shape mismatch (non-admissible product)");
        acc = next * acc;
    }
    require(acc.is_square(), "eval_cycle: path not closed");
    return acc.trace();
}

template <class F>
F eval_expr(const TraceExpression& e, const RepPoint<F>& p) {
    F total = FieldOps<F>::zero();
    std::map<CyclePath, F> cache;
    for (const auto& [factors, coeff] : e.terms()) {
        F term = FieldOps<F>::from_rat(coeff);
        for (const CyclePath& c : factors) {
            auto it = cache.find(c);
            if (it == cache.end()) it = cache.emplace(c, eval_cycle(c, p)).first;
            term = term * it->second;
        }
        total = total + term;
    }
    return total;
}

// --- group action --------------------------------------------------------------

// One invertible matrix per ordinary vertex and per pair (shared by i_q, j_q).
template <class F>
struct GroupElement {
    std::map<int, Matrix<F>> g;  // key: ordinary vertex id, or i_q

    const Matrix<F>& at_vertex(const Quiver& q, int v) const {
        int key = q.is_ordinary(v) ? v : q.pairs()[static_cast<size_t>(q.pair_index(v))].first;
        auto it = g.find(key);
        require(it != g.end(), "group element: no matrix for vertex " + std::to_string(v));
        return it->second;
    }
};

template <class F>
GroupElement<F> identity_group(const Quiver& q, const DimensionVector& dv) {
    GroupElement<F> g;
    for (int v : q.ordinary()) g.g[v] = Matrix<F>::identity(dv.dim(v));
    for (const auto& [i, j] : q.pairs()) g.g[i] = Matrix<F>::identity(dv.dim(i));
    return g;
}

template <class F>
GroupElement<F> random_group(const Quiver& q, const DimensionVector& dv, Rng& rng) {
    GroupElement<F> g;
    auto draw = [&](int v) {
        for (int attempt = 0; attempt < 256; ++attempt) {
            Matrix<F> m = random_matrix<F>(dv.dim(v), dv.dim(v), rng);
            if (m.is_invertible()) return m;
        }
        throw Error("random_group: exhausted attempts to draw an invertible matrix");
    };
    for (int v : q.ordinary()) g.g[v] = draw(v);
    for (const auto& [i, j] : q.pairs()) g.g[i] = draw(i);
    return g;
}

// composition: (g*h) acts as acting by h first, then by g
template <class F>
GroupElement<F> compose(const GroupElement<F>& g, const GroupElement<F>& h) {
    GroupElement<F> out;
    for (const auto& [v, m] : g.g) out.g[v] = m * h.g.at(v);
    return out;
}

// The H(t)-action. A1: g_t Y g_i^{-1}; A2 (end j_q): (g_q^{-1})^T Y g_i^{-1};
// A3 (origin j_q): g_t Y g_q^T.
template <class F>
RepPoint<F> act(const RepPoint<F>& p, const GroupElement<F>& g, const Quiver& q) {
    RepPoint<F> out;
    for (const Arrow& a : q.arrows()) {
        const Matrix<F>& y = p.of(a.id);
        switch (q.classify(a.id)) {
            case ArrowClass::A1:
                out.y[a.id] =
                    g.at_vertex(q, a.to) * y * g.at_vertex(q, a.from).inverse();
                break;
            case ArrowClass::A2:
                out.y[a.id] = g.at_vertex(q, a.to).inverse().transpose() * y *
                              g.at_vertex(q, a.from).inverse();
                break;
            case ArrowClass::A3:
                out.y[a.id] =
                    g.at_vertex(q, a.to) * y * g.at_vertex(q, a.from).transpose();
                break;
        }
    }
    return out;
}

// Orthogonal/symplectic test-point generators via the Cayley transform.
Matrix<Rat> antidiag_form(int d);  // J(d): +1 at (k, d+1-k) above center, -1 below
Matrix<Rat> cayley_orthogonal(int d, Rng& rng);
Matrix<Rat> cayley_symplectic(int d, Rng& rng);

std::string format_step(const PathStep& s);
PathStep parse_step(const std::string& tok);

}  // namespace mixquiv
