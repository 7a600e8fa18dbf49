#pragma once

#include <stdexcept>
#include <vector>

#include <conifold/binary_form.hpp>
#include <conifold/curve_param.hpp>
#include <conifold/multipoly.hpp>

namespace conifold {

namespace detail {

// det of a square matrix of binary forms (all products share one degree) by
// permutation expansion; m stays small here so the factorial cost is fine.
template <class F>
BinaryForm<F> form_determinant(const F& field,
                               const std::vector<std::vector<BinaryForm<F>>>& entry,
                               int degree) {
    const std::size_t m = entry.size();
    BinaryForm<F> det(field, degree);
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    bool negative = false;
    for (;;) {
        BinaryForm<F> term = BinaryForm<F>::monomial(field, 0, 0);
        bool zero = false;
        for (std::size_t i = 0; i < m && !zero; ++i) {
            const BinaryForm<F>& e = entry[i][perm[i]];
            if (e.is_zero())
                zero = true;
            else
                term = term * e;
        }
        if (!zero) det = negative ? det - term : det + term;

        // next permutation in-place, tracking parity: find the longest
        // descending suffix, swap, reverse
        std::size_t i = m;
        while (i > 1 && perm[i - 2] >= perm[i - 1]) --i;
        if (i <= 1) break;
        std::size_t pivot = i - 2, j = m;
        while (perm[j - 1] <= perm[pivot]) --j;
        std::swap(perm[pivot], perm[j - 1]);
        negative = !negative;
        for (std::size_t a = pivot + 1, b = m - 1; a < b; ++a, --b) {
            std::swap(perm[a], perm[b]);
            negative = !negative;
        }
    }
    return det;
}

}  // namespace detail

// Decides whether the common zero locus of the sections is smooth of
// codimension m at every point of the curve, exactly: restrict the full
// Jacobian (one row per section, one column per ambient coordinate) to the
// curve, expand every maximal minor as a binary form, and check the nonzero
// minors have no common root.  A common root would be a curve point where
// the Jacobian drops below rank m; per-factor Euler relations make the
// homogeneous-column rank along the curve equivalent to the affine-chart
// rank at every parameter value, poles included.
template <class F>
bool smoothness_along_curve(const std::vector<MultiPoly<F>>& sections,
                            const CurveParametrization<F>& curve) {
    if (sections.empty()) throw std::invalid_argument("no sections given");
    const F& field = sections.front().field();
    const AmbientSpace& X = curve.ambient();
    const std::size_t m = sections.size();
    const std::size_t coords = static_cast<std::size_t>(X.coord_count());

    for (const auto& s : sections) {
        if (s.is_zero()) throw std::invalid_argument("a section is identically zero");
        if (!s.substitute(curve).is_zero())
            throw std::invalid_argument("a section does not vanish on the curve");
    }
    if (m > coords) throw std::invalid_argument("more sections than coordinates");

    // Jacobian restricted to the curve, and per-row restricted degrees
    std::vector<std::vector<BinaryForm<F>>> jac;
    std::vector<long long> row_degree;
    for (const auto& s : sections) {
        std::vector<BinaryForm<F>> row;
        for (std::size_t c = 0; c < coords; ++c)
            row.push_back(s.partial(static_cast<int>(c)).substitute(curve));
        jac.push_back(std::move(row));
        row_degree.push_back(dot(s.multidegree(), curve.multidegree()));
    }
    std::vector<int> col_weight;  // restricted degree lost per differentiation
    for (std::size_t c = 0; c < coords; ++c)
        col_weight.push_back(
            curve.multidegree()[static_cast<std::size_t>(X.factor_of(static_cast<int>(c)))]);

    // walk all m-subsets of columns
    std::vector<BinaryForm<F>> minors;
    std::vector<std::size_t> pick(m);
    for (std::size_t i = 0; i < m; ++i) pick[i] = i;
    for (;;) {
        long long deg = 0;
        for (std::size_t i = 0; i < m; ++i) deg += row_degree[i] - col_weight[pick[i]];
        if (deg >= 0) {
            std::vector<std::vector<BinaryForm<F>>> sub;
            for (std::size_t i = 0; i < m; ++i) {
                std::vector<BinaryForm<F>> r;
                for (std::size_t c : pick) r.push_back(jac[i][c]);
                sub.push_back(std::move(r));
            }
            BinaryForm<F> det = detail::form_determinant(field, sub, static_cast<int>(deg));
            if (!det.is_zero()) minors.push_back(std::move(det));
        }
        // next combination
        std::size_t i = m;
        while (i > 0 && pick[i - 1] == coords - m + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t a = i; a < m; ++a) pick[a] = pick[a - 1] + 1;
    }

    return coprime(minors);
}

}  // namespace conifold
