#pragma once

// Multihomogeneous polynomials on a product of projective spaces: sparse sums
// of monomials in the coordinates X[j][r], homogeneous of a fixed degree in
// each factor separately. The exponent map is ordered, so iteration order,
// serialization, and every downstream computation are deterministic.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ambient.hpp"
#include "binary_form.hpp"
#include "curve_param.hpp"

namespace conifold {

template <class F>
class MultiPoly {
public:
    using S = typename F::Scalar;
    using Exponents = std::vector<int>;  // one entry per flat coordinate

    // Zero polynomial of the given multidegree.
    MultiPoly(const F& field, AmbientSpace ambient, Multidegree degree)
        : field_(field), ambient_(std::move(ambient)), deg_(std::move(degree)) {
        if (static_cast<int>(deg_.size()) != ambient_.k())
            throw std::invalid_argument("MultiPoly: multidegree length mismatch");
        for (int d : deg_)
            if (d < 0) throw std::invalid_argument("MultiPoly: negative multidegree");
    }

    static MultiPoly monomial(const F& field, const AmbientSpace& ambient,
                              const Exponents& exps, const S& coeff) {
        MultiPoly p(field, ambient, degree_of(ambient, exps));
        p.add_term(exps, coeff);
        return p;
    }

    // Convenience: the coordinate X[j][r] as a polynomial.
    static MultiPoly coordinate(const F& field, const AmbientSpace& ambient, int j, int r) {
        Exponents e(static_cast<std::size_t>(ambient.coord_count()), 0);
        e[static_cast<std::size_t>(ambient.coord_index(j, r))] = 1;
        return monomial(field, ambient, e, field.one());
    }

    const F& field() const { return field_; }
    const AmbientSpace& ambient() const { return ambient_; }
    const Multidegree& multidegree() const { return deg_; }
    const std::map<Exponents, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& exps, const S& coeff) {
        if (degree_of(ambient_, exps) != deg_)
            throw std::invalid_argument("MultiPoly: term multidegree does not match polynomial");
        if (field_.is_zero(coeff)) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(exps, coeff);
        } else {
            it->second = it->second + coeff;
            if (field_.is_zero(it->second)) terms_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        a.match(b, true);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        a.match(b, true);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.match(b, false);
        Multidegree d = a.deg_;
        for (std::size_t j = 0; j < d.size(); ++j) d[j] += b.deg_[j];
        MultiPoly r(a.field_, a.ambient_, d);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend MultiPoly operator*(const S& s, const MultiPoly& a) {
        MultiPoly r(a.field_, a.ambient_, a.deg_);
        for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return (a - b).is_zero();
    }

    // Partial derivative in the flat coordinate. When the factor degree is
    // already zero the derivative vanishes identically and is returned as the
    // zero polynomial of the unchanged multidegree; callers that care about
    // degree bookkeeping of zero entries (determinants of restricted
    // Jacobians) skip zero polynomials instead of trusting their degree.
    MultiPoly partial(int coord) const {
        const int j = ambient_.factor_of(coord);
        Multidegree d = deg_;
        if (d[static_cast<std::size_t>(j)] > 0) d[static_cast<std::size_t>(j)] -= 1;
        MultiPoly r(field_, ambient_, d);
        for (const auto& [e, c] : terms_) {
            const int a = e[static_cast<std::size_t>(coord)];
            if (a == 0) continue;
            Exponents de = e;
            de[static_cast<std::size_t>(coord)] -= 1;
            r.add_term(de, field_.from_int(a) * c);
        }
        return r;
    }

    // Restriction to a parametrized curve: substitute the curve's component
    // forms for the coordinates. The result is a binary form of declared
    // degree sum_j d_j(curve) * deg_j(poly), even when it collapses to zero.
    BinaryForm<F> substitute(const CurveParametrization<F>& curve) const {
        if (curve.ambient() != ambient_)
            throw std::invalid_argument("MultiPoly::substitute: ambient mismatch");
        int total = 0;
        for (int j = 0; j < ambient_.k(); ++j)
            total += curve.multidegree()[static_cast<std::size_t>(j)] *
                     deg_[static_cast<std::size_t>(j)];
        BinaryForm<F> acc(field_, total);
        for (const auto& [e, c] : terms_) {
            BinaryForm<F> prod = BinaryForm<F>::monomial(field_, 0, 0);
            for (std::size_t coord = 0; coord < e.size(); ++coord)
                for (int rep = 0; rep < e[coord]; ++rep)
                    prod = prod * curve.component_flat(static_cast<int>(coord));
            acc = acc + c * prod;
        }
        return acc;
    }

    // Canonical text rendering: terms in exponent-map order, coordinates as
    // X[j][r]^a. Used for regression pins and human-readable reports.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) out << " + ";
            first = false;
            out << field_.str(c);
            for (std::size_t coord = 0; coord < e.size(); ++coord) {
                if (e[coord] == 0) continue;
                const int j = ambient_.factor_of(static_cast<int>(coord));
                out << "*X[" << j << "][" << ambient_.index_in_factor(static_cast<int>(coord))
                    << "]";
                if (e[coord] > 1) out << "^" << e[coord];
            }
        }
        return out.str();
    }

private:
    static Multidegree degree_of(const AmbientSpace& ambient, const Exponents& exps) {
        if (static_cast<int>(exps.size()) != ambient.coord_count())
            throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
        Multidegree d(static_cast<std::size_t>(ambient.k()), 0);
        for (std::size_t coord = 0; coord < exps.size(); ++coord) {
            if (exps[coord] < 0) throw std::invalid_argument("MultiPoly: negative exponent");
            d[static_cast<std::size_t>(ambient.factor_of(static_cast<int>(coord)))] +=
                exps[coord];
        }
        return d;
    }

    void match(const MultiPoly& b, bool degrees_too) const {
        if (!(ambient_ == b.ambient_))
            throw std::invalid_argument("MultiPoly: ambient mismatch");
        if (degrees_too && deg_ != b.deg_)
            throw std::invalid_argument("MultiPoly: multidegree mismatch in +/-");
    }

    F field_;
    AmbientSpace ambient_;
    Multidegree deg_;
    std::map<Exponents, S> terms_;
};

}  // namespace conifold
