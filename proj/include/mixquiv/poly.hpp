#pragma once

#include <vector>

#include "mixquiv/field.hpp"

namespace mixquiv {

// Dense univariate polynomial over F; coefficient k is the coefficient of x^k.
template <class F>
class Poly {
  public:
    Poly() {}
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const F& v) { return Poly(std::vector<F>{v}); }
    static Poly x() { return Poly(std::vector<F>{FieldOps<F>::zero(), FieldOps<F>::one()}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

    F coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return FieldOps<F>::zero();
        return c_[k];
    }

    Poly operator+(const Poly& o) const {
        std::vector<F> r(std::max(c_.size(), o.c_.size()), FieldOps<F>::zero());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
        return Poly(std::move(r));
    }

    Poly operator-(const Poly& o) const {
        std::vector<F> r(std::max(c_.size(), o.c_.size()), FieldOps<F>::zero());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
        return Poly(std::move(r));
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<F> r(c_.size() + o.c_.size() - 1, FieldOps<F>::zero());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (FieldOps<F>::is_zero(c_[i])) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return Poly(std::move(r));
    }

    Poly scaled(const F& v) const {
        std::vector<F> r = c_;
        for (auto& x : r) x = x * v;
        return Poly(std::move(r));
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    F eval(const F& x) const {
        F r = FieldOps<F>::zero();
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (FieldOps<F>::is_zero(c_[i])) continue;
            if (!s.empty()) s += " + ";
            s += FieldOps<F>::str(c_[i]);
            if (i >= 1) s += "*" + var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

  private:
    void trim() {
        while (!c_.empty() && FieldOps<F>::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<F> c_;
};

}  // namespace mixquiv
