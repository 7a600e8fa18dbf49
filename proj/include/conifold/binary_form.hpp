#pragma once

// Homogeneous forms in two variables s, t over an exact field context.
// coeff(k) is the coefficient of s^k t^(deg-k). The degree is part of the
// value: the zero form of degree 5 and the zero form of degree 2 are
// different objects, which keeps degree bookkeeping honest when sections
// restrict to zero on a curve.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace conifold {

namespace detail {

// Dense univariate polynomials (index = power), used only to run Euclid
// inside the homogeneous gcd below.
template <class F>
std::vector<typename F::Scalar> uni_trim(const F& field,
                                         std::vector<typename F::Scalar> p) {
    while (!p.empty() && field.is_zero(p.back())) p.pop_back();
    return p;
}

template <class F>
std::vector<typename F::Scalar> uni_rem(const F& field,
                                        std::vector<typename F::Scalar> a,
                                        const std::vector<typename F::Scalar>& b) {
    const auto lead_inv = field.inv(b.back());
    while (a.size() >= b.size()) {
        const auto q = a.back() * lead_inv;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - q * b[i];
        a = uni_trim(field, std::move(a));
        if (a.empty()) break;
    }
    return a;
}

template <class F>
std::vector<typename F::Scalar> uni_gcd(const F& field,
                                        std::vector<typename F::Scalar> a,
                                        std::vector<typename F::Scalar> b) {
    a = uni_trim(field, std::move(a));
    b = uni_trim(field, std::move(b));
    while (!b.empty()) {
        auto r = uni_rem(field, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    // monic normalization
    if (!a.empty()) {
        const auto lead_inv = field.inv(a.back());
        for (auto& c : a) c = c * lead_inv;
    }
    return a;
}

}  // namespace detail

template <class F>
class BinaryForm {
public:
    using S = typename F::Scalar;

    // Zero form of the given degree.
    BinaryForm(const F& field, int degree)
        : field_(field), c_(static_cast<std::size_t>(check_degree(degree)) + 1, field.zero()) {}

    // Form from its coefficient vector; the degree is coeffs.size() - 1.
    BinaryForm(const F& field, std::vector<S> coeffs) : field_(field), c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("BinaryForm: empty coefficient vector");
    }

    static BinaryForm monomial(const F& field, int s_pow, int t_pow) {
        if (s_pow < 0 || t_pow < 0)
            throw std::invalid_argument("BinaryForm::monomial: negative exponent");
        BinaryForm f(field, s_pow + t_pow);
        f.c_[static_cast<std::size_t>(s_pow)] = field.one();
        return f;
    }

    const F& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const S& coeff(int s_pow) const { return c_.at(static_cast<std::size_t>(s_pow)); }
    S& coeff(int s_pow) { return c_.at(static_cast<std::size_t>(s_pow)); }
    const std::vector<S>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const S& c : c_)
            if (!field_.is_zero(c)) return false;
        return true;
    }

    // True polynomial degree: largest k + (deg - smallest j) style reasoning
    // is not needed; callers wanting the exact vanishing order use
    // s_multiplicity / t_multiplicity below.
    int s_multiplicity() const {  // order of vanishing at (0 : 1)
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (!field_.is_zero(c_[k])) return static_cast<int>(k);
        return degree() + 1;  // zero form: vanishes to any order
    }
    int t_multiplicity() const {  // order of vanishing at (1 : 0)
        for (std::size_t k = c_.size(); k-- > 0;)
            if (!field_.is_zero(c_[k])) return degree() - static_cast<int>(k);
        return degree() + 1;
    }

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
        a.match(b);
        BinaryForm r = a;
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = r.c_[k] + b.c_[k];
        return r;
    }
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
        a.match(b);
        BinaryForm r = a;
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = r.c_[k] - b.c_[k];
        return r;
    }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        BinaryForm r(a.field_, a.degree() + b.degree());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.field_.is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend BinaryForm operator*(const S& s, const BinaryForm& a) {
        BinaryForm r = a;
        for (auto& c : r.c_) c = s * c;
        return r;
    }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        if (a.degree() != b.degree()) return false;
        for (std::size_t k = 0; k < a.c_.size(); ++k)
            if (!(a.field_.is_zero(a.c_[k] - b.c_[k]))) return false;
        return true;
    }

    BinaryForm pow(int e) const {
        if (e < 0) throw std::invalid_argument("BinaryForm::pow: negative exponent");
        BinaryForm r = monomial(field_, 0, 0);
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    S eval(const S& s0, const S& t0) const {
        S acc = field_.zero();
        for (std::size_t k = 0; k < c_.size(); ++k) {
            S term = c_[k];
            for (std::size_t i = 0; i < k; ++i) term = term * s0;
            for (std::size_t i = k; i < c_.size() - 1; ++i) term = term * t0;
            acc = acc + term;
        }
        return acc;
    }

private:
    static int check_degree(int d) {
        if (d < 0) throw std::invalid_argument("BinaryForm: negative degree");
        return d;
    }
    void match(const BinaryForm& b) const {
        if (degree() != b.degree())
            throw std::invalid_argument("BinaryForm: degree mismatch in +/-");
    }

    F field_;
    std::vector<S> c_;
};

// Homogeneous gcd, monic in its leading s-power. A common projective root of
// f and g (including the roots at (1:0) and (0:1)) is exactly a positive-
// degree gcd. Each form splits as s^alpha t^beta * (middle) with the middle
// nonvanishing at both poles, so the gcd is s^min(alpha) t^min(beta) times
// the homogenization of the univariate gcd of the middles.
template <class F>
BinaryForm<F> gcd(const BinaryForm<F>& f, const BinaryForm<F>& g) {
    using S = typename F::Scalar;
    const F& field = f.field();
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;

    const int sa = f.s_multiplicity(), sb = g.s_multiplicity();
    const int ta = f.t_multiplicity(), tb = g.t_multiplicity();

    auto middle = [&](const BinaryForm<F>& h, int smul, int tmul) {
        std::vector<S> m;
        for (int k = smul; k <= h.degree() - tmul; ++k) m.push_back(h.coeff(k));
        return m;  // univariate in x = s/t, constant term nonzero
    };
    const auto mg = detail::uni_gcd(field, middle(f, sa, ta), middle(g, sb, tb));

    const int smin = std::min(sa, sb), tmin = std::min(ta, tb);
    BinaryForm<F> out(field, smin + tmin + static_cast<int>(mg.size()) - 1);
    for (std::size_t k = 0; k < mg.size(); ++k)
        out.coeff(smin + static_cast<int>(k)) = mg[k];
    return out;
}

// True iff the nonzero forms in the list have no common root on P^1. A list
// with no nonzero form vanishes identically and is never coprime.
template <class F>
bool coprime(const std::vector<BinaryForm<F>>& forms) {
    std::optional<BinaryForm<F>> g;
    for (const auto& f : forms) {
        if (f.is_zero()) continue;
        g = g ? gcd(*g, f) : f;
        if (g->degree() == 0) return true;
    }
    return g.has_value() && g->degree() == 0;
}

}  // namespace conifold
