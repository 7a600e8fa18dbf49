#pragma once

// Prime-field arithmetic. An Fp value carries its modulus, so mixing elements
// of different fields is a detectable error instead of silent garbage; at the
// matrix sizes this library works with, the extra word per element costs
// nothing. The modulus is restricted to odd primes below 2^31 so that every
// product fits in a 64-bit intermediate.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "rng.hpp"

namespace conifold {

class Fp;
inline bool is_zero(Fp a);
inline Fp inv(Fp a);

class Fp {
public:
    Fp(std::uint64_t value, std::uint32_t p) : v_(static_cast<std::uint32_t>(value % p)), p_(p) {}

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    friend Fp operator+(Fp a, Fp b) {
        check(a, b);
        std::uint64_t s = std::uint64_t(a.v_) + b.v_;
        if (s >= a.p_) s -= a.p_;
        return Fp(s, a.p_);
    }
    friend Fp operator-(Fp a, Fp b) {
        check(a, b);
        std::uint64_t s = std::uint64_t(a.v_) + a.p_ - b.v_;
        if (s >= a.p_) s -= a.p_;
        return Fp(s, a.p_);
    }
    friend Fp operator*(Fp a, Fp b) {
        check(a, b);
        return Fp(std::uint64_t(a.v_) * b.v_ % a.p_, a.p_);
    }
    friend Fp operator/(Fp a, Fp b) { return a * inv(b); }
    friend Fp operator-(Fp a) { return Fp(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }

    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }

    friend bool operator==(Fp a, Fp b) {
        check(a, b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

private:
    static void check(Fp a, Fp b) {
        if (a.p_ != b.p_)
            throw std::invalid_argument("Fp: mixed moduli " + std::to_string(a.p_) + " and " +
                                        std::to_string(b.p_));
    }

    std::uint32_t v_;
    std::uint32_t p_;
};

inline bool is_zero(Fp a) { return a.value() == 0; }

// Inverse by Fermat: a^(p-2). The field context guarantees p is prime.
inline Fp inv(Fp a) {
    if (a.value() == 0) throw std::domain_error("Fp: division by zero");
    const std::uint64_t p = a.modulus();
    std::uint64_t base = a.value(), acc = 1;
    std::uint64_t e = p - 2;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return Fp(acc, a.modulus());
}

struct FpField {
    using Scalar = Fp;

    static constexpr std::uint32_t default_prime = 2147483647;

    explicit FpField(std::uint32_t prime = default_prime) : p(prime) {
        if (prime < 3 || prime % 2 == 0 || !is_prime(prime))
            throw std::invalid_argument("FpField: modulus must be an odd prime below 2^31, got " +
                                        std::to_string(prime));
    }

    Fp zero() const { return Fp(0, p); }
    Fp one() const { return Fp(1, p); }
    Fp from_int(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        return Fp(static_cast<std::uint64_t>(r), p);
    }
    Fp random(SeededRng& rng) const { return Fp(rng.below(p), p); }

    bool is_zero(Fp a) const { return a.value() == 0; }
    Fp inv(Fp a) const { return conifold::inv(a); }
    std::string str(Fp a) const { return std::to_string(a.value()); }

    friend bool operator==(const FpField& a, const FpField& b) { return a.p == b.p; }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint32_t p;
};

}  // namespace conifold
