#pragma once

#include <set>

#include "mixquiv/poly.hpp"
#include "mixquiv/relations.hpp"

namespace mixquiv {

// --- structured matrices -----------------------------------------------------

template <class F>
Matrix<F> structured_E(int d) {
    return Matrix<F>::identity(d);
}

// E(N, n): 1-s on the diagonal except the first n places.
template <class F>
Matrix<F> structured_E_Nn(int N, int n) {
    require(0 <= n && n <= N, "E(N,n): need 0 <= n <= N");
    Matrix<F> e(N, N);
    for (int k = n; k < N; ++k) e(k, k) = FieldOps<F>::one();
    return e;
}

// J(d) over an arbitrary field (same antidiagonal convention as antidiag_form).
template <class F>
Matrix<F> structured_J(int d) {
    require(d >= 2 && d % 2 == 0, "J(d): dimension must be even");
    Matrix<F> j(d, d);
    for (int k = 1; k <= d; ++k)
        j(k - 1, d - k) = (k <= d / 2) ? FieldOps<F>::one()
                                       : FieldOps<F>::zero() - FieldOps<F>::one();
    return j;
}

// J(N, n) = i_{N,n}(0): the ±1 antidiagonal tails with a zero center block.
template <class F>
Matrix<F> structured_J_Nn(int N, int n) {
    require(N % 2 == 0 && n % 2 == 0 && n <= N, "J(N,n): even dimensions, n <= N");
    int M = N / 2, m = n / 2;
    Matrix<F> j(N, N);
    for (int k = 1; k <= M - m; ++k) j(k - 1, N - k) = FieldOps<F>::one();
    for (int k = M + m + 1; k <= N; ++k)
        j(k - 1, N - k) = FieldOps<F>::zero() - FieldOps<F>::one();
    return j;
}

// --- dimension specializations ------------------------------------------------

enum class SpecFlavor { Standard, Symplectic };

// The (N, n) dimension-change data: per-arrow standard (zero-pad),
// non-standard (identity tail on square arrows), or the symplectically
// standard variant where everything is centered and the non-standard
// arrows get ±1 antidiagonal tails.
class SpecializationMap {
  public:
    SpecializationMap(const Quiver& q, DimensionVector big, DimensionVector small,
                      SpecFlavor flavor, std::set<int> nonstandard_arrows = {});

    const Quiver& quiver() const { return *q_; }
    const DimensionVector& big() const { return big_; }
    const DimensionVector& small() const { return small_; }
    SpecFlavor flavor() const { return flavor_; }
    bool nonstandard(int arrow_id) const { return nonstandard_.count(arrow_id) > 0; }

  private:
    const Quiver* q_;
    DimensionVector big_, small_;
    SpecFlavor flavor_;
    std::set<int> nonstandard_;
};

template <class F>
RepPoint<F> embed_point(const RepPoint<F>& p, const SpecializationMap& map);

template <class F>
GroupElement<F> embed_group(const GroupElement<F>& g, const SpecializationMap& map);

// p_{N,n} on invariants, realized semantically: evaluate at the embedded point.
template <class F>
F eval_pullback(const TraceExpression& e, const SpecializationMap& map,
                const RepPoint<F>& p_small) {
    return eval_expr(e, embed_point(p_small, map));
}

// --- orthogonal / symplectic specialization -------------------------------------

enum class OSFlavor { Orthogonal, Symplectic };

// Letter of a specialized matrix word: one of the m matrices, plain or
// dualized (transpose for O, form-twisted transpose -J a^T J for Sp).
struct MatLetter {
    int idx = 0;  // 1..m
    bool dual = false;
    bool operator==(const MatLetter& o) const { return idx == o.idx && dual == o.dual; }
    bool operator!=(const MatLetter& o) const { return !(*this == o); }
    bool operator<(const MatLetter& o) const {
        return idx != o.idx ? idx < o.idx : dual < o.dual;
    }
    MatLetter barred() const { return {idx, !dual}; }
};

// Trace expression in the a_i and their duals; the empty word is tr(identity).
class SpecializedExpression {
  public:
    using Word = std::vector<MatLetter>;  // traversal order, canonical
    using FactorList = std::vector<Word>;

    void add_term(FactorList factors, const Rat& coeff);
    SpecializedExpression operator+(const SpecializedExpression& o) const;
    SpecializedExpression scaled(const Rat& c) const;
    bool is_zero() const { return terms_.empty(); }
    const std::map<FactorList, Rat>& terms() const { return terms_; }
    std::string str() const;

  private:
    std::map<FactorList, Rat> terms_;
};

// Eliminate b and c from an expression on the model quiver by the
// substitution Y(b),Y(c) -> E(d) (orthogonal) or J(d), -J(d) (symplectic).
SpecializedExpression ortho_symp_specialize(const TraceExpression& e, int m, OSFlavor flavor);

template <class F>
F eval_word(const std::vector<MatLetter>& w, const std::vector<Matrix<F>>& a, OSFlavor flavor);

template <class F>
F eval_specialized(const SpecializedExpression& e, const std::vector<Matrix<F>>& a,
                   OSFlavor flavor);

// Random point on the orthogonal/symplectic locus of the model quiver:
// Y(c) symmetric (resp. skew) invertible, Y(b) = Y(c)^{-1}.
template <class F>
RepPoint<F> locus_point(OSFlavor flavor, int d, int m, Rng& rng);

// --- closed-form coefficient identities ------------------------------------------

// sigma_k(X + yE(N)) vs sum_s C(N-k+s, s) y^s sigma_{k-s}(X); returns both sides.
std::pair<Rat, Rat> sigma_shift_identity(int N, int k, const Matrix<Rat>& x, const Rat& y);

// alpha_j = (-1)^j C(N-n+j-1, j) lambda^j as polynomials in lambda, j = 0..r.
std::vector<Poly<Rat>> alpha_coeffs(int N, int n, int r);

// Eq_t residual: sum_{k=0}^{r-t} C(N-n, k) lambda^k alpha_{r-t-k}.
Poly<Rat> eq_t_residual(int N, int n, int r, int t);

// sum_{s=0}^{r-t1} C(N-t2, s) lambda^s alpha_{r-t1-s}; the zero polynomial
// for 0 <= t1 <= t2 <= n.
Poly<Rat> generalized_vanishing(int N, int n, int r, int t1, int t2);

// z(f) = sum_k alpha_k sigma_{r-k}(f) with lambda = the coefficient sum of
// f's pure-(cb)-power part; f lives on the model quiver, closed at the pair head.
TraceExpression z_of_f(const PathElement& f, int r, int N, int n, const DoubledQuiver& dq,
                       int r_cap = kDefaultRCap);

}  // namespace mixquiv
