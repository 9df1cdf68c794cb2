#pragma once

#include <vector>

#include "mixquiv/field.hpp"

namespace mixquiv {

// Dense exact matrix over a field F (Rat or Fp). All arithmetic is exact;
// there are no tolerances anywhere.
template <class F>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, FieldOps<F>::zero()) {
        require(rows >= 0 && cols >= 0, "Matrix: negative shape");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = FieldOps<F>::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    F& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const F& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        require(rows_ == o.rows_ && cols_ == o.cols_, "Matrix: shape mismatch in +");
        Matrix r = *this;
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = r.a_[k] + o.a_[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require(rows_ == o.rows_ && cols_ == o.cols_, "Matrix: shape mismatch in -");
        Matrix r = *this;
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = r.a_[k] - o.a_[k];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        require(cols_ == o.rows_, "Matrix: shape mismatch in *");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const F& x = (*this)(i, k);
                if (FieldOps<F>::is_zero(x)) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + x * o(k, j);
            }
        return r;
    }

    Matrix scaled(const F& c) const {
        Matrix r = *this;
        for (auto& x : r.a_) x = x * c;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    F trace() const {
        require(is_square(), "Matrix: trace of non-square matrix");
        F t = FieldOps<F>::zero();
        for (int i = 0; i < rows_; ++i) t = t + (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!FieldOps<F>::is_zero(x)) return false;
        return true;
    }

    // Gauss-Jordan inverse; throws on singular input.
    Matrix inverse() const {
        require(is_square(), "Matrix: inverse of non-square matrix");
        int n = rows_;
        Matrix a = *this, inv = identity(n);
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int i = col; i < n; ++i)
                if (!FieldOps<F>::is_zero(a(i, col))) {
                    piv = i;
                    break;
                }
            require(piv >= 0, "Matrix: singular matrix has no inverse");
            if (piv != col) {
                for (int j = 0; j < n; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            }
            F d = a(col, col);
            for (int j = 0; j < n; ++j) {
                a(col, j) = a(col, j) / d;
                inv(col, j) = inv(col, j) / d;
            }
            for (int i = 0; i < n; ++i) {
                if (i == col || FieldOps<F>::is_zero(a(i, col))) continue;
                F f = a(i, col);
                for (int j = 0; j < n; ++j) {
                    a(i, j) = a(i, j) - f * a(col, j);
                    inv(i, j) = inv(i, j) - f * inv(col, j);
                }
            }
        }
        return inv;
    }

    bool is_invertible() const {
        if (!is_square()) return false;
        int n = rows_;
        Matrix a = *this;
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int i = col; i < n; ++i)
                if (!FieldOps<F>::is_zero(a(i, col))) {
                    piv = i;
                    break;
                }
            if (piv < 0) return false;
            if (piv != col)
                for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            for (int i = col + 1; i < n; ++i) {
                if (FieldOps<F>::is_zero(a(i, col))) continue;
                F f = a(i, col) / a(col, col);
                for (int j = col; j < n; ++j) a(i, j) = a(i, j) - f * a(col, j);
            }
        }
        return true;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < rows_; ++i) {
            s += (i ? "; " : "");
            for (int j = 0; j < cols_; ++j) s += (j ? " " : "") + FieldOps<F>::str((*this)(i, j));
        }
        return s + "]";
    }

  private:
    int rows_, cols_;
    std::vector<F> a_;
};

// --- characteristic polynomial -------------------------------------------
//
// Both routines return (sigma_0, ..., sigma_d) with the elementary-symmetric
// normalization det(tI - M) = sum_j (-1)^j sigma_j t^{d-j}; sigma_1 = trace,
// sigma_d = det.

// Faddeev-LeVerrier. Divides by 1..d, so over F_p it needs p > d.
template <class F>
std::vector<F> charpoly_faddeev(const Matrix<F>& m) {
    require(m.is_square(), "charpoly: non-square matrix");
    int n = m.rows();
    std::vector<F> c(n + 1, FieldOps<F>::zero());
    c[0] = FieldOps<F>::one();
    Matrix<F> mk = Matrix<F>::identity(n);  // M_0
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        F ck = FieldOps<F>::zero() - mk.trace() / FieldOps<F>::from_int(k);
        c[k] = ck;  // coefficient of t^{n-k} in det(tI - M)
        for (int i = 0; i < n; ++i) mk(i, i) = mk(i, i) + ck;
    }
    // det(tI-M) = sum c_k t^{n-k} and c_k = (-1)^k sigma_k
    std::vector<F> sigma(n + 1);
    for (int k = 0; k <= n; ++k)
        sigma[k] = (k % 2 == 0) ? c[k] : FieldOps<F>::zero() - c[k];
    return sigma;
}

// Samuelson-Berkowitz, division-free: valid over any field, in particular
// F_p with p <= d where Faddeev-LeVerrier breaks.
template <class F>
std::vector<F> charpoly_berkowitz(const Matrix<F>& m) {
    require(m.is_square(), "charpoly: non-square matrix");
    int n = m.rows();
    std::vector<F> poly{FieldOps<F>::one()};  // det(tI - A_0) = 1
    for (int i = 0; i < n; ++i) {
        // first column of the (i+2)x(i+1) Toeplitz matrix:
        // [1, -a_ii, -R S, -R A_i S, ..., -R A_i^{i-1} S]
        std::vector<F> col(i + 2, FieldOps<F>::zero());
        col[0] = FieldOps<F>::one();
        col[1] = FieldOps<F>::zero() - m(i, i);
        std::vector<F> v(i);  // running A_i^k S
        for (int j = 0; j < i; ++j) v[j] = m(j, i);
        for (int k = 0; k < i; ++k) {
            F dot = FieldOps<F>::zero();
            for (int j = 0; j < i; ++j) dot = dot + m(i, j) * v[j];
            col[k + 2] = FieldOps<F>::zero() - dot;
            if (k + 1 < i) {
                std::vector<F> nv(i, FieldOps<F>::zero());
                for (int a = 0; a < i; ++a)
                    for (int b = 0; b < i; ++b) nv[a] = nv[a] + m(a, b) * v[b];
                v = nv;
            }
        }
        std::vector<F> next(i + 2, FieldOps<F>::zero());
        for (size_t a = 0; a < col.size(); ++a)
            for (size_t b = 0; b < poly.size(); ++b)
                if (a + b < next.size()) next[a + b] = next[a + b] + col[a] * poly[b];
        poly = std::move(next);
    }
    std::vector<F> sigma(n + 1);
    for (int k = 0; k <= n; ++k)
        sigma[k] = (k % 2 == 0) ? poly[k] : FieldOps<F>::zero() - poly[k];
    return sigma;
}

template <class F>
std::vector<F> charpoly_sigma(const Matrix<F>& m);

template <>
inline std::vector<Rat> charpoly_sigma<Rat>(const Matrix<Rat>& m) {
    return charpoly_faddeev(m);
}

template <>
inline std::vector<Fp> charpoly_sigma<Fp>(const Matrix<Fp>& m) {
    if (Fp::modulus() > static_cast<std::uint64_t>(m.rows())) return charpoly_faddeev(m);
    return charpoly_berkowitz(m);
}

// sigma_j(M): j-th elementary symmetric function of the eigenvalues.
template <class F>
F sigma_coeff(const Matrix<F>& m, int j) {
    require(m.is_square(), "sigma_coeff: non-square matrix");
    require(j >= 0 && j <= m.rows(), "sigma_coeff: index out of range");
    if (j == 0) return FieldOps<F>::one();
    return charpoly_sigma(m)[j];
}

template <class F>
F det(const Matrix<F>& m) {
    return sigma_coeff(m, m.rows());
}

template <class F>
Matrix<F> random_matrix(int rows, int cols, Rng& rng) {
    Matrix<F> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = FieldOps<F>::random(rng);
    return m;
}

}  // namespace mixquiv
