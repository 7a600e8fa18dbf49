#pragma once

// The integer cohomology ring of P^{n_1} x ... x P^{n_k}, truncated by the
// relations e_j^(n_j + 1) = 0. Classes are integer combinations of monomials
// e_1^{a_1}...e_k^{a_k} with a_j <= n_j. All coefficient arithmetic is
// overflow-checked: a silent wraparound here would corrupt every Euler
// characteristic downstream.

#include <map>
#include <stdexcept>
#include <vector>

#include "ambient.hpp"

namespace conifold {

namespace detail {

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("CohomologyClass: integer overflow in addition");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("CohomologyClass: integer overflow in multiplication");
    return r;
}

}  // namespace detail

class CohomologyClass {
public:
    using Exponents = std::vector<int>;  // one entry per factor, 0 <= a_j <= n_j

    explicit CohomologyClass(AmbientSpace ambient) : ambient_(std::move(ambient)) {}

    static CohomologyClass one(const AmbientSpace& ambient) {
        CohomologyClass c(ambient);
        c.terms_[Exponents(static_cast<std::size_t>(ambient.k()), 0)] = 1;
        return c;
    }

    // The hyperplane class e_j pulled back from factor j.
    static CohomologyClass hyperplane(const AmbientSpace& ambient, int j) {
        CohomologyClass c(ambient);
        Exponents e(static_cast<std::size_t>(ambient.k()), 0);
        e.at(static_cast<std::size_t>(j)) = 1;
        c.terms_[e] = 1;
        return c;
    }

    // c_1 of the line bundle O(d_1, ..., d_k).
    static CohomologyClass line_class(const AmbientSpace& ambient, const Multidegree& d) {
        if (static_cast<int>(d.size()) != ambient.k())
            throw std::invalid_argument("CohomologyClass::line_class: degree length mismatch");
        CohomologyClass c(ambient);
        for (int j = 0; j < ambient.k(); ++j)
            if (d[static_cast<std::size_t>(j)] != 0) {
                Exponents e(static_cast<std::size_t>(ambient.k()), 0);
                e[static_cast<std::size_t>(j)] = 1;
                c.terms_[e] = d[static_cast<std::size_t>(j)];
            }
        return c;
    }

    const AmbientSpace& ambient() const { return ambient_; }
    const std::map<Exponents, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long long coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    long long constant_term() const {
        return coefficient(Exponents(static_cast<std::size_t>(ambient_.k()), 0));
    }

    void add_term(const Exponents& e, long long c) {
        if (static_cast<int>(e.size()) != ambient_.k())
            throw std::invalid_argument("CohomologyClass: exponent length mismatch");
        for (int j = 0; j < ambient_.k(); ++j)
            if (e[static_cast<std::size_t>(j)] < 0 ||
                e[static_cast<std::size_t>(j)] > ambient_.n(j))
                throw std::invalid_argument("CohomologyClass: exponent outside truncation box");
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second = detail::checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b) {
        a.match(b);
        CohomologyClass r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b) {
        a.match(b);
        CohomologyClass r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    // Product with truncation: monomials leaving the box vanish.
    friend CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b) {
        a.match(b);
        CohomologyClass r(a.ambient_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = ea;
                bool dead = false;
                for (std::size_t j = 0; j < e.size(); ++j) {
                    e[j] += eb[j];
                    if (e[j] > a.ambient_.n(static_cast<int>(j))) {
                        dead = true;
                        break;
                    }
                }
                if (!dead) r.add_term(e, detail::checked_mul(ca, cb));
            }
        return r;
    }

    CohomologyClass pow(int e) const {
        if (e < 0) throw std::invalid_argument("CohomologyClass::pow: negative exponent");
        CohomologyClass r = one(ambient_);
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    // The pure degree-d part (total exponent d).
    CohomologyClass degree_part(int d) const {
        CohomologyClass r(ambient_);
        for (const auto& [e, c] : terms_) {
            int total = 0;
            for (int x : e) total += x;
            if (total == d) r.add_term(e, c);
        }
        return r;
    }

    // Integration over X: the coefficient of e_1^{n_1}...e_k^{n_k}.
    long long integrate() const {
        Exponents top;
        top.reserve(static_cast<std::size_t>(ambient_.k()));
        for (int j = 0; j < ambient_.k(); ++j) top.push_back(ambient_.n(j));
        return coefficient(top);
    }

    // Multiplicative inverse of a class with constant term 1, by the Neumann
    // series sum (1 - c)^i; the positive-degree part is nilpotent, so the sum
    // stops after dim X steps.
    CohomologyClass inverse_unit() const {
        if (constant_term() != 1)
            throw std::invalid_argument("CohomologyClass::inverse_unit: constant term must be 1");
        const CohomologyClass u = one(ambient_) - *this;
        CohomologyClass r = one(ambient_);
        CohomologyClass term = one(ambient_);
        for (int i = 0; i < ambient_.total_dim(); ++i) {
            term = term * u;
            r = r + term;
        }
        return r;
    }

private:
    void match(const CohomologyClass& b) const {
        if (!(ambient_ == b.ambient_))
            throw std::invalid_argument("CohomologyClass: ambient mismatch");
    }

    AmbientSpace ambient_;
    std::map<Exponents, long long> terms_;
};

}  // namespace conifold
