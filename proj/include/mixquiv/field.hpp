#pragma once

#include <string>

#include "mixquiv/common.hpp"
#include "mixquiv/fp.hpp"

namespace mixquiv {

// Uniform access to the two coefficient fields (exact rationals and F_p).
template <class F>
struct FieldOps;

template <>
struct FieldOps<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& x) { return x == 0; }
    static Rat from_int(long long v) { return Rat(v); }
    static Rat from_rat(const Rat& q) { return q; }
    static Rat random(Rng& rng) { return Rat(rng.range(-9, 9)); }
    static std::string str(const Rat& x) { return x.str(); }
    static std::string name() { return "q"; }
};

template <>
struct FieldOps<Fp> {
    static Fp zero() { return Fp::zero(); }
    static Fp one() { return Fp::one(); }
    static bool is_zero(const Fp& x) { return x.is_zero(); }
    static Fp from_int(long long v) { return Fp::from_int(v); }
    static Fp from_rat(const Rat& q) { return Fp::from_rat(q); }
    static Fp random(Rng& rng) { return random_fp(rng); }
    static std::string str(const Fp& x) { return x.str(); }
    static std::string name() { return "fp:" + std::to_string(Fp::modulus()); }
};

}  // namespace mixquiv
