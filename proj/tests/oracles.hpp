#pragma once

// Test-only oracles, kept independent of the implementation paths they check.

#include "mixquiv/matrix.hpp"
#include "mixquiv/poly.hpp"

namespace mixquiv::testing {

// det of a matrix of polynomials by recursive cofactor expansion
template <class F>
Poly<F> cofactor_det(const std::vector<std::vector<Poly<F>>>& m) {
    size_t n = m.size();
    if (n == 0) return Poly<F>::constant(FieldOps<F>::one());
    if (n == 1) return m[0][0];
    Poly<F> acc;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Poly<F>>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Poly<F>> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Poly<F> term = m[0][j] * cofactor_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// sigma coefficients of det(tI - M) via cofactor expansion; the brute-force
// oracle for sigma_coeff
template <class F>
std::vector<F> charpoly_sigma_oracle(const Matrix<F>& m) {
    int n = m.rows();
    std::vector<std::vector<Poly<F>>> tm(static_cast<size_t>(n),
                                         std::vector<Poly<F>>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<F> c{FieldOps<F>::zero() - m(i, j)};
            if (i == j) c.push_back(FieldOps<F>::one());
            tm[static_cast<size_t>(i)][static_cast<size_t>(j)] = Poly<F>(std::move(c));
        }
    Poly<F> p = cofactor_det(tm);
    std::vector<F> sigma(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        F c = p.coeff(n - k);
        sigma[static_cast<size_t>(k)] = (k % 2 == 0) ? c : FieldOps<F>::zero() - c;
    }
    return sigma;
}

}  // namespace mixquiv::testing
