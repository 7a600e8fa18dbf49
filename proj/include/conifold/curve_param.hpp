#pragma once

// Parametrized rational curves P^1 -> P^{n_1} x ... x P^{n_k}. Per factor j
// the curve is a tuple of n_j + 1 binary forms of a common degree d_j >= 0
// with no common root, so the map is defined at every point of P^1 and the
// pushforward class has multidegree (d_1, ..., d_k).

#include <stdexcept>
#include <vector>

#include "ambient.hpp"
#include "binary_form.hpp"

namespace conifold {

template <class F>
class CurveParametrization {
public:
    using S = typename F::Scalar;

    CurveParametrization(AmbientSpace ambient,
                         std::vector<std::vector<BinaryForm<F>>> components)
        : ambient_(std::move(ambient)), comp_(std::move(components)) {
        if (static_cast<int>(comp_.size()) != ambient_.k())
            throw std::invalid_argument("CurveParametrization: factor count mismatch");
        deg_.reserve(comp_.size());
        for (int j = 0; j < ambient_.k(); ++j) {
            const auto& forms = comp_[static_cast<std::size_t>(j)];
            if (static_cast<int>(forms.size()) != ambient_.n(j) + 1)
                throw std::invalid_argument(
                    "CurveParametrization: wrong coordinate count in a factor");
            const int d = forms.front().degree();
            for (const auto& f : forms)
                if (f.degree() != d)
                    throw std::invalid_argument(
                        "CurveParametrization: mixed degrees within a factor");
            if (!coprime(forms))
                throw std::invalid_argument(
                    "CurveParametrization: factor components share a root (map undefined "
                    "somewhere on P^1)");
            deg_.push_back(d);
        }
    }

    const AmbientSpace& ambient() const { return ambient_; }
    const Multidegree& multidegree() const { return deg_; }
    const BinaryForm<F>& component(int j, int r) const {
        return comp_.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(r));
    }
    const BinaryForm<F>& component_flat(int coord) const {
        return component(ambient_.factor_of(coord), ambient_.index_in_factor(coord));
    }

    // Coordinates of the image point at parameter (s0 : t0), factor by factor.
    std::vector<std::vector<S>> eval(const S& s0, const S& t0) const {
        std::vector<std::vector<S>> out;
        out.reserve(comp_.size());
        for (const auto& forms : comp_) {
            std::vector<S> pt;
            pt.reserve(forms.size());
            for (const auto& f : forms) pt.push_back(f.eval(s0, t0));
            out.push_back(std::move(pt));
        }
        return out;
    }

private:
    AmbientSpace ambient_;
    std::vector<std::vector<BinaryForm<F>>> comp_;
    Multidegree deg_;
};

// The image points (per factor, homogeneous coordinate vectors) agree
// projectively iff all 2x2 minors vanish and neither vector is zero.
template <class F>
bool projectively_equal(const F& field, const std::vector<typename F::Scalar>& u,
                        const std::vector<typename F::Scalar>& v) {
    if (u.size() != v.size()) return false;
    bool u_zero = true, v_zero = true;
    for (const auto& x : u) u_zero = u_zero && field.is_zero(x);
    for (const auto& x : v) v_zero = v_zero && field.is_zero(x);
    if (u_zero || v_zero) return false;
    for (std::size_t a = 0; a < u.size(); ++a)
        for (std::size_t b = a + 1; b < u.size(); ++b)
            if (!field.is_zero(u[a] * v[b] - u[b] * v[a])) return false;
    return true;
}

}  // namespace conifold
