#pragma once

#include "mixquiv/common.hpp"

namespace mixquiv {

// Prime field F_p for p < 2^62. The modulus is process-global: a run works
// over one prime at a time (the CLI sets it from --field fp:<p>), tests that
// need several primes switch it explicitly between sections.
class Fp {
  public:
    static constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;  // 2^61 - 1

    Fp() : v_(0) {}
    explicit Fp(std::uint64_t v) : v_(v % mod_) {}

    static void set_modulus(std::uint64_t p) {
        require(p >= 2, "Fp: modulus must be >= 2");
        mod_ = p;
    }
    static std::uint64_t modulus() { return mod_; }

    static Fp from_int(long long x) {
        long long m = static_cast<long long>(mod_);
        long long r = x % m;
        if (r < 0) r += m;
        return Fp(static_cast<std::uint64_t>(r));
    }

    static Fp from_bigint(const BigInt& x) {
        BigInt r = x % BigInt(mod_);
        if (r < 0) r += BigInt(mod_);
        return Fp(r.convert_to<std::uint64_t>());
    }

    // image of a rational; requires the denominator to be a unit mod p
    static Fp from_rat(const Rat& q) {
        Fp den = from_bigint(boost::multiprecision::denominator(q));
        require(!den.is_zero(), "Fp: rational with denominator divisible by the modulus");
        return from_bigint(boost::multiprecision::numerator(q)) / den;
    }

    std::uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    static Fp zero() { return Fp(); }
    static Fp one() { return Fp(1 % mod_); }

    Fp operator+(Fp o) const {
        std::uint64_t s = v_ + o.v_;
        if (s >= mod_) s -= mod_;
        return raw(s);
    }
    Fp operator-(Fp o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + mod_ - o.v_); }
    Fp operator-() const { return raw(v_ == 0 ? 0 : mod_ - v_); }
    Fp operator*(Fp o) const {
        return raw(static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(v_) * o.v_) % mod_));
    }
    Fp operator/(Fp o) const { return *this * o.inverse(); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }

    Fp inverse() const {
        require(v_ != 0, "Fp: division by zero");
        return pow(mod_ - 2);
    }

    Fp pow(std::uint64_t e) const {
        Fp b = *this, r = one();
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(Fp o) const { return v_ == o.v_; }
    bool operator!=(Fp o) const { return v_ != o.v_; }

    std::string str() const { return std::to_string(v_); }

  private:
    static Fp raw(std::uint64_t v) {
        Fp f;
        f.v_ = v;
        return f;
    }
    std::uint64_t v_;
    inline static std::uint64_t mod_ = kDefaultPrime;
};

// Uniform random element.
inline Fp random_fp(Rng& rng) { return Fp(rng.below(Fp::modulus())); }

}  // namespace mixquiv
