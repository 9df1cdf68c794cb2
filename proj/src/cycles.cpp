#include "mixquiv/cycles.hpp"

#include <set>

namespace mixquiv {

CyclePath::CyclePath(const DoubledQuiver& dq, std::vector<PathStep> steps) {
    require(!steps.empty(), "cycle: empty path");
    for (size_t k = 0; k < steps.size(); ++k) {
        const PathStep& cur = steps[k];
        const PathStep& nxt = steps[(k + 1) % steps.size()];
        require(dq.end(cur) == dq.origin(nxt),
                "cycle: steps " + format_step(cur) + " -> " + format_step(nxt) +
                    " are not composable / path not closed");
    }
    steps_ = canonical_cycle_word(steps);
    primitive_ = is_primitive_word(steps_);
}

std::map<int, int> CyclePath::multidegree() const {
    std::map<int, int> d;
    for (const PathStep& s : steps_) d[s.arrow]++;
    return d;
}

std::string CyclePath::str() const {
    std::string s = "(";
    for (size_t k = steps_.size(); k-- > 0;) {
        s += format_step(steps_[k]);
        if (k) s += " ";
    }
    return s + ")";
}

std::string format_step(const PathStep& s) {
    return (s.bar ? "~" : "") + std::to_string(s.arrow);
}

PathStep parse_step(const std::string& tok) {
    require(!tok.empty(), "parse_step: empty token");
    bool bar = tok[0] == '~';
    std::string num = bar ? tok.substr(1) : tok;
    require(!num.empty() && num.find_first_not_of("0123456789") == std::string::npos,
            "parse_step: bad token '" + tok + "'");
    return {std::stoi(num), bar};
}

std::vector<CyclePath> enumerate_cycles(const DoubledQuiver& dq, int max_len,
                                        std::optional<DQVertex> base_vertex) {
    require(max_len >= 1, "enumerate_cycles: max_len must be >= 1");
    std::set<CyclePath> found;
    std::vector<PathStep> all = dq.all_steps();
    std::vector<PathStep> path;

    // grow paths from a fixed start vertex; record when closed
    auto dfs = [&](auto&& self, const DQVertex& start, const DQVertex& at) -> void {
        for (const PathStep& s : all) {
            if (dq.origin(s) != at) continue;
            path.push_back(s);
            DQVertex nxt = dq.end(s);
            if (nxt == start) found.insert(CyclePath(dq, path));
            if (static_cast<int>(path.size()) < max_len) self(self, start, nxt);
            path.pop_back();
        }
    };

    if (base_vertex) {
        dfs(dfs, *base_vertex, *base_vertex);
    } else {
        for (const DQVertex& v : dq.all_vertices()) dfs(dfs, v, v);
    }
    return {found.begin(), found.end()};
}

TraceExpression TraceExpression::constant(const Rat& c) {
    TraceExpression e;
    e.add_term({}, c);
    return e;
}

TraceExpression TraceExpression::trace(const CyclePath& c) {
    TraceExpression e;
    e.add_term({c}, 1);
    return e;
}

void TraceExpression::add_term(FactorList factors, const Rat& coeff) {
    if (coeff == 0) return;
    std::sort(factors.begin(), factors.end());
    auto [it, fresh] = terms_.emplace(std::move(factors), coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

TraceExpression TraceExpression::operator+(const TraceExpression& o) const {
    TraceExpression r = *this;
    for (const auto& [f, c] : o.terms_) r.add_term(f, c);
    return r;
}

TraceExpression TraceExpression::operator-(const TraceExpression& o) const {
    TraceExpression r = *this;
    for (const auto& [f, c] : o.terms_) r.add_term(f, -c);
    return r;
}

TraceExpression TraceExpression::operator*(const TraceExpression& o) const {
    TraceExpression r;
    for (const auto& [f1, c1] : terms_)
        for (const auto& [f2, c2] : o.terms_) {
            FactorList f = f1;
            f.insert(f.end(), f2.begin(), f2.end());
            r.add_term(std::move(f), c1 * c2);
        }
    return r;
}

TraceExpression TraceExpression::scaled(const Rat& c) const {
    TraceExpression r;
    if (c == 0) return r;
    for (const auto& [f, k] : terms_) r.terms_[f] = k * c;
    return r;
}

std::optional<std::map<int, int>> TraceExpression::multidegree() const {
    std::optional<std::map<int, int>> deg;
    for (const auto& [factors, c] : terms_) {
        std::map<int, int> d;
        for (const CyclePath& f : factors)
            for (const auto& [a, k] : f.multidegree()) d[a] += k;
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

std::string TraceExpression::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [factors, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str();
        for (const CyclePath& f : factors) s += " " + f.str();
    }
    return s;
}

Matrix<Rat> antidiag_form(int d) {
    require(d >= 2 && d % 2 == 0, "J(d): dimension must be even");
    Matrix<Rat> j(d, d);
    for (int k = 1; k <= d; ++k) j(k - 1, d - k) = (k <= d / 2) ? Rat(1) : Rat(-1);
    return j;
}

namespace {

Matrix<Rat> cayley_from_skew(const Matrix<Rat>& s) {
    int d = s.rows();
    Matrix<Rat> i = Matrix<Rat>::identity(d);
    Matrix<Rat> num = i - s, den = i + s;
    require(den.is_invertible(), "cayley: det(I+S) = 0");
    return num * den.inverse();
}

}  // namespace

Matrix<Rat> cayley_orthogonal(int d, Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Matrix<Rat> s(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                s(i, j) = Rat(rng.range(-4, 4));
                s(j, i) = -s(i, j);
            }
        Matrix<Rat> den = Matrix<Rat>::identity(d) + s;
        if (!den.is_invertible()) continue;
        return cayley_from_skew(s);
    }
    throw Error("cayley_orthogonal: exhausted rejection attempts");
}

Matrix<Rat> cayley_symplectic(int d, Rng& rng) {
    require(d % 2 == 0, "cayley_symplectic: dimension must be even");
    Matrix<Rat> j = antidiag_form(d);
    Matrix<Rat> jinv = j.scaled(Rat(-1));  // J^{-1} = -J
    for (int attempt = 0; attempt < 64; ++attempt) {
        Matrix<Rat> b(d, d);  // symmetric
        for (int i = 0; i < d; ++i)
            for (int k = i; k < d; ++k) {
                b(i, k) = Rat(rng.range(-4, 4));
                b(k, i) = b(i, k);
            }
        Matrix<Rat> s = jinv * b;  // S^T J + J S = 0
        Matrix<Rat> den = Matrix<Rat>::identity(d) + s;
        if (!den.is_invertible()) continue;
        return cayley_from_skew(s);
    }
    throw Error("cayley_symplectic: exhausted rejection attempts");
}

}  // namespace mixquiv
