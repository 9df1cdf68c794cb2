#include "mixquiv/special.hpp"

#include <algorithm>
#include <type_traits>

namespace mixquiv {

SpecializationMap::SpecializationMap(const Quiver& q, DimensionVector big, DimensionVector small,
                                     SpecFlavor flavor, std::set<int> nonstandard_arrows)
    : q_(&q), big_(std::move(big)), small_(std::move(small)), flavor_(flavor),
      nonstandard_(std::move(nonstandard_arrows)) {
    for (int v = 1; v <= q.num_vertices(); ++v) {
        require(big_.dim(v) >= small_.dim(v),
                "specialization: target dims must not exceed source dims");
        if (flavor_ == SpecFlavor::Symplectic)
            require(big_.dim(v) % 2 == 0 && small_.dim(v) % 2 == 0,
                    "specialization: symplectic mode needs even dimensions");
    }
    for (int id : nonstandard_) {
        const Arrow& a = q.arrow(id);
        require(big_.dim(a.from) == big_.dim(a.to) && small_.dim(a.from) == small_.dim(a.to),
                "specialization: non-standard mode only on square arrows");
        if (flavor_ == SpecFlavor::Symplectic)
            require(q.classify(id) != ArrowClass::A1,
                    "specialization: symplectic tails only on A2/A3 arrows");
    }
}

template <class F>
RepPoint<F> embed_point(const RepPoint<F>& p, const SpecializationMap& map) {
    const Quiver& q = map.quiver();
    RepPoint<F> out;
    for (const Arrow& a : q.arrows()) {
        const Matrix<F>& y = p.of(a.id);
        int rb = map.big().dim(a.to), cb = map.big().dim(a.from);
        int rs = map.small().dim(a.to), cs = map.small().dim(a.from);
        require(y.rows() == rs && y.cols() == cs, "embed_point: point has wrong shape");
        Matrix<F> m(rb, cb);
        if (map.flavor() == SpecFlavor::Standard) {
            for (int i = 0; i < rs; ++i)
                for (int j = 0; j < cs; ++j) m(i, j) = y(i, j);
            if (map.nonstandard(a.id))
                for (int k = rs; k < rb; ++k) m(k, k) = FieldOps<F>::one();
        } else {
            int mr = rb / 2, ms = rs / 2, mc = cb / 2, mcs = cs / 2;
            for (int i = 0; i < rs; ++i)
                for (int j = 0; j < cs; ++j) m(mr - ms + i, mc - mcs + j) = y(i, j);
            if (map.nonstandard(a.id)) {
                // ±1 antidiagonal tails; A2 gets (+ top, - bottom), A3 the opposite
                int N = rb, M = mr, mm = ms;
                bool a2 = q.classify(a.id) == ArrowClass::A2;
                F plus = FieldOps<F>::one(), minus = FieldOps<F>::zero() - FieldOps<F>::one();
                for (int k = 1; k <= M - mm; ++k) m(k - 1, N - k) = a2 ? plus : minus;
                for (int k = M + mm + 1; k <= N; ++k) m(k - 1, N - k) = a2 ? minus : plus;
            }
        }
        out.y[a.id] = m;
    }
    return out;
}

template RepPoint<Rat> embed_point<Rat>(const RepPoint<Rat>&, const SpecializationMap&);
template RepPoint<Fp> embed_point<Fp>(const RepPoint<Fp>&, const SpecializationMap&);

template <class F>
GroupElement<F> embed_group(const GroupElement<F>& g, const SpecializationMap& map) {
    GroupElement<F> out;
    for (const auto& [v, m] : g.g) {
        int nb = map.big().dim(v), ns = map.small().dim(v);
        require(m.rows() == ns && m.cols() == ns, "embed_group: element has wrong shape");
        require(m.is_invertible(), "embed_group: singular group element");
        Matrix<F> big(nb, nb);
        if (map.flavor() == SpecFlavor::Standard) {
            for (int i = 0; i < ns; ++i)
                for (int j = 0; j < ns; ++j) big(i, j) = m(i, j);
            for (int k = ns; k < nb; ++k) big(k, k) = FieldOps<F>::one();
        } else {
            int M = nb / 2, mm = ns / 2;
            for (int i = 0; i < ns; ++i)
                for (int j = 0; j < ns; ++j) big(M - mm + i, M - mm + j) = m(i, j);
            for (int k = 0; k < M - mm; ++k) big(k, k) = FieldOps<F>::one();
            for (int k = M + mm; k < nb; ++k) big(k, k) = FieldOps<F>::one();
        }
        out.g[v] = big;
    }
    return out;
}

template GroupElement<Rat> embed_group<Rat>(const GroupElement<Rat>&, const SpecializationMap&);
template GroupElement<Fp> embed_group<Fp>(const GroupElement<Fp>&, const SpecializationMap&);

// --- specialized expressions -----------------------------------------------

void SpecializedExpression::add_term(FactorList factors, const Rat& coeff) {
    if (coeff == 0) return;
    std::sort(factors.begin(), factors.end());
    auto [it, fresh] = terms_.emplace(std::move(factors), coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SpecializedExpression SpecializedExpression::operator+(const SpecializedExpression& o) const {
    SpecializedExpression r = *this;
    for (const auto& [f, c] : o.terms_) r.add_term(f, c);
    return r;
}

SpecializedExpression SpecializedExpression::scaled(const Rat& c) const {
    SpecializedExpression r;
    if (c == 0) return r;
    for (const auto& [f, k] : terms_) r.terms_[f] = k * c;
    return r;
}

std::string SpecializedExpression::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [factors, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str();
        for (const Word& w : factors) {
            s += " (";
            for (size_t i = w.size(); i-- > 0;) {
                s += (w[i].dual ? "~a" : "a") + std::to_string(w[i].idx);
                if (i) s += " ";
            }
            s += ")";
        }
    }
    return s;
}

SpecializedExpression ortho_symp_specialize(const TraceExpression& e, int m, OSFlavor flavor) {
    int b_id = m + 1, c_id = m + 2;
    SpecializedExpression out;
    for (const auto& [factors, coeff] : e.terms()) {
        Rat c = coeff;
        SpecializedExpression::FactorList words;
        for (const CyclePath& cyc : factors) {
            SpecializedExpression::Word w;
            int adapters = 0, neg_signs = 0;
            for (const PathStep& st : cyc.steps()) {
                if (st.arrow == b_id || st.arrow == c_id) {
                    ++adapters;
                    // values under Sp: b -> J, ~b -> -J, c -> -J, ~c -> J
                    bool neg = (st.arrow == b_id) == st.bar;
                    if (neg) ++neg_signs;
                    continue;
                }
                require(st.arrow >= 1 && st.arrow <= m,
                        "ortho_symp_specialize: expression is not on the model quiver");
                w.push_back({st.arrow, st.bar});
            }
            if (flavor == OSFlavor::Symplectic) {
                // each vertex-2 visit contributes J (letters)^T J = -(letters)^*
                int visits = adapters / 2;
                if ((visits + neg_signs) % 2 == 1) c = -c;
            }
            if (!w.empty()) w = canonical_cycle_word(w);
            words.push_back(std::move(w));
        }
        out.add_term(std::move(words), c);
    }
    return out;
}

template <class F>
F eval_word(const std::vector<MatLetter>& w, const std::vector<Matrix<F>>& a, OSFlavor flavor) {
    require(!a.empty(), "eval_word: no matrices");
    int d = a[0].rows();
    Matrix<F> acc = Matrix<F>::identity(d);
    Matrix<F> j;
    if (flavor == OSFlavor::Symplectic) j = structured_J<F>(d);
    for (const MatLetter& l : w) {
        require(l.idx >= 1 && l.idx <= static_cast<int>(a.size()), "eval_word: letter out of range");
        const Matrix<F>& base = a[static_cast<size_t>(l.idx) - 1];
        Matrix<F> v;
        if (!l.dual)
            v = base;
        else if (flavor == OSFlavor::Orthogonal)
            v = base.transpose();
        else
            v = (j * base.transpose() * j).scaled(FieldOps<F>::zero() - FieldOps<F>::one());
        acc = v * acc;  // traversal order: later letters multiply on the left
    }
    return acc.trace();
}

template Rat eval_word<Rat>(const std::vector<MatLetter>&, const std::vector<Matrix<Rat>>&, OSFlavor);
template Fp eval_word<Fp>(const std::vector<MatLetter>&, const std::vector<Matrix<Fp>>&, OSFlavor);

template <class F>
F eval_specialized(const SpecializedExpression& e, const std::vector<Matrix<F>>& a,
                   OSFlavor flavor) {
    F total = FieldOps<F>::zero();
    for (const auto& [factors, coeff] : e.terms()) {
        F term = FieldOps<F>::from_rat(coeff);
        for (const auto& w : factors) term = term * eval_word(w, a, flavor);
        total = total + term;
    }
    return total;
}

template Rat eval_specialized<Rat>(const SpecializedExpression&, const std::vector<Matrix<Rat>>&,
                                   OSFlavor);
template Fp eval_specialized<Fp>(const SpecializedExpression&, const std::vector<Matrix<Fp>>&,
                                 OSFlavor);

template <class F>
RepPoint<F> locus_point(OSFlavor flavor, int d, int m, Rng& rng) {
    require(flavor == OSFlavor::Orthogonal || d % 2 == 0,
            "locus_point: symplectic flavor needs even dimension");
    if constexpr (std::is_same_v<F, Fp>)
        require(Fp::modulus() != 2, "locus_point: characteristic 2 is excluded here");
    RepPoint<F> p;
    for (int i = 1; i <= m; ++i) {
        Rng sub = rng.split(static_cast<std::uint64_t>(i));
        p.y[i] = random_matrix<F>(d, d, sub);
    }
    Matrix<F> c;
    bool found = false;
    for (int attempt = 0; attempt < 256 && !found; ++attempt) {
        c = Matrix<F>(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = (flavor == OSFlavor::Orthogonal ? i : i + 1); j < d; ++j) {
                F v = FieldOps<F>::random(rng);
                c(i, j) = v;
                c(j, i) = (flavor == OSFlavor::Orthogonal) ? v : FieldOps<F>::zero() - v;
            }
        found = c.is_invertible();
    }
    require(found, "locus_point: exhausted attempts to draw an invertible form");
    p.y[m + 2] = c;            // Y(c)
    p.y[m + 1] = c.inverse();  // Y(b) = Y(c)^{-1}
    return p;
}

template RepPoint<Rat> locus_point<Rat>(OSFlavor, int, int, Rng&);
template RepPoint<Fp> locus_point<Fp>(OSFlavor, int, int, Rng&);

// --- coefficient identities ----------------------------------------------------

std::pair<Rat, Rat> sigma_shift_identity(int N, int k, const Matrix<Rat>& x, const Rat& y) {
    require(x.rows() == N && x.cols() == N, "sigma_shift_identity: X must be N x N");
    require(0 <= k && k <= N, "sigma_shift_identity: need 0 <= k <= N");
    Matrix<Rat> shifted = x;
    for (int i = 0; i < N; ++i) shifted(i, i) += y;
    Rat lhs = sigma_coeff(shifted, k);
    std::vector<Rat> sig = charpoly_sigma(x);
    Rat rhs = 0, ypow = 1;
    for (int s = 0; s <= k; ++s) {
        rhs += Rat(binomial(N - k + s, s)) * ypow * sig[static_cast<size_t>(k - s)];
        ypow *= y;
    }
    return {lhs, rhs};
}

std::vector<Poly<Rat>> alpha_coeffs(int N, int n, int r) {
    require(N > n && n >= 0, "alpha_coeffs: need N > n >= 0");
    std::vector<Poly<Rat>> alpha;
    for (int j = 0; j <= r; ++j) {
        std::vector<Rat> c(static_cast<size_t>(j) + 1, Rat(0));
        Rat v = Rat(binomial(N - n + j - 1, j));
        c[static_cast<size_t>(j)] = (j % 2 == 0) ? v : -v;
        alpha.emplace_back(std::move(c));
    }
    return alpha;
}

Poly<Rat> eq_t_residual(int N, int n, int r, int t) {
    require(0 <= t && t <= r - 1, "eq_t_residual: need 0 <= t <= r-1");
    auto alpha = alpha_coeffs(N, n, r);
    Poly<Rat> sum;
    for (int k = 0; k <= r - t; ++k) {
        std::vector<Rat> lk(static_cast<size_t>(k) + 1, Rat(0));
        lk[static_cast<size_t>(k)] = Rat(binomial(N - n, k));
        sum = sum + Poly<Rat>(std::move(lk)) * alpha[static_cast<size_t>(r - t - k)];
    }
    return sum;
}

Poly<Rat> generalized_vanishing(int N, int n, int r, int t1, int t2) {
    require(0 <= t1 && t1 <= t2 && n < N, "generalized_vanishing: need 0 <= t1 <= t2, n < N");
    auto alpha = alpha_coeffs(N, n, r);
    Poly<Rat> sum;
    for (int s = 0; s <= r - t1; ++s) {
        std::vector<Rat> ls(static_cast<size_t>(s) + 1, Rat(0));
        ls[static_cast<size_t>(s)] = Rat(binomial(N - t2, s));
        sum = sum + Poly<Rat>(std::move(ls)) * alpha[static_cast<size_t>(r - t1 - s)];
    }
    return sum;
}

TraceExpression z_of_f(const PathElement& f, int r, int N, int n, const DoubledQuiver& dq,
                       int r_cap) {
    require(f.closed(), "z_of_f: f must be closed");
    const Quiver& q = dq.base();
    int m = static_cast<int>(q.arrows().size()) - 2;
    require(m >= 1, "z_of_f: expected the two-vertex model quiver");
    // f2 collects the monomials without loop letters (pure (Y(c)Y(b))^l
    // powers and their transposes); lambda is the sum of their coefficients
    Rat lambda = 0;
    for (const auto& mono : f.monomials()) {
        bool pure = true;
        for (const PathStep& st : mono.steps)
            if (st.arrow <= m) pure = false;
        if (pure) lambda += mono.coeff;
    }
    auto alpha = alpha_coeffs(N, n, r);
    TraceExpression z;
    for (int k = 0; k <= r; ++k) {
        Rat ak = alpha[static_cast<size_t>(k)].eval(lambda);
        if (ak == 0) continue;
        TraceExpression part = (r - k == 0) ? TraceExpression::constant(1)
                                            : substitute_sigma_r(f, r - k, dq, r_cap);
        z = z + part.scaled(ak);
    }
    return z;
}

}  // namespace mixquiv
