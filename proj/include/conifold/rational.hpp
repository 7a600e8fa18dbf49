#pragma once

// Arbitrary-precision rational field context. The scalar type is
// boost::multiprecision::cpp_rational (header-only); this file only adds the
// field-context surface the generic linear algebra expects, plus bounded
// random draws. Prime-field mode is the workhorse; rationals exist for small
// certified checks where characteristic-zero arithmetic is wanted verbatim.

#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "rng.hpp"

namespace conifold {

using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline Rational inv(const Rational& x) {
    if (x.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(1) / x;
}

struct RationalField {
    using Scalar = Rational;

    // Bound on random draws: numerators in [-height, height], denominators in
    // [1, height]. Zero means unbounded, which random() must reject: there is
    // no uniform distribution on all of Q.
    explicit RationalField(std::uint32_t height_bound = 100) : height(height_bound) {}

    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational from_int(std::int64_t x) const { return Rational(x); }

    Rational random(SeededRng& rng) const {
        if (height == 0)
            throw std::invalid_argument(
                "RationalField: random draw requested with no height bound");
        const std::int64_t num = rng.between(-static_cast<std::int64_t>(height), height);
        const std::int64_t den = rng.between(1, height);
        return Rational(num, den);
    }

    bool is_zero(const Rational& x) const { return x.is_zero(); }
    Rational inv(const Rational& x) const { return conifold::inv(x); }
    std::string str(const Rational& x) const { return x.str(); }

    // Field identity is Q regardless of the draw bound.
    friend bool operator==(const RationalField&, const RationalField&) { return true; }

    std::uint32_t height;
};

}  // namespace conifold
