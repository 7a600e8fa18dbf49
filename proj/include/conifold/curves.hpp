#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <conifold/ambient.hpp>
#include <conifold/curve_param.hpp>
#include <conifold/multipoly.hpp>

namespace conifold {

// Which of the k+1 standard rational curves: the line inside one chosen
// factor (constant elsewhere), or the diagonal line moving in every factor
// at once.
struct CurveKind {
    bool is_diagonal = false;
    int factor = 0;

    static CurveKind axis(int i) { return {false, i}; }
    static CurveKind diagonal() { return {true, 0}; }

    bool operator==(const CurveKind& o) const {
        return is_diagonal == o.is_diagonal && (is_diagonal || factor == o.factor);
    }

    std::string label() const {
        return is_diagonal ? "diagonal" : "axis-" + std::to_string(factor);
    }
};

// All k+1 kinds for an ambient with k factors, axes first.
inline std::vector<CurveKind> standard_curve_kinds(const AmbientSpace& X) {
    std::vector<CurveKind> out;
    for (int i = 0; i < X.k(); ++i) out.push_back(CurveKind::axis(i));
    out.push_back(CurveKind::diagonal());
    return out;
}

// The line (s, t, 0, ..., 0) in factor i, (1, 0, ..., 0) in every other
// factor; multidegree is the i-th unit vector.
template <class F>
CurveParametrization<F> coordinate_axis_curve(const F& field, const AmbientSpace& X, int i) {
    if (i < 0 || i >= X.k()) throw std::out_of_range("axis factor index out of range");
    using BF = BinaryForm<F>;
    std::vector<std::vector<BF>> comp;
    for (int j = 0; j < X.k(); ++j) {
        const int d = (j == i) ? 1 : 0;
        std::vector<BF> forms(static_cast<std::size_t>(X.n(j)) + 1, BF(field, d));
        forms[0] = BF::monomial(field, d, 0);  // s or the constant 1
        if (j == i) forms[1] = BF::monomial(field, 0, 1);
        comp.push_back(std::move(forms));
    }
    return CurveParametrization<F>(X, std::move(comp));
}

// The line (s, t, 0, ..., 0; s, t, 0, ..., 0; ...); multidegree (1, ..., 1).
template <class F>
CurveParametrization<F> diagonal_curve(const F& field, const AmbientSpace& X) {
    using BF = BinaryForm<F>;
    std::vector<std::vector<BF>> comp;
    for (int j = 0; j < X.k(); ++j) {
        std::vector<BF> forms(static_cast<std::size_t>(X.n(j)) + 1, BF(field, 1));
        forms[0] = BF::monomial(field, 1, 0);
        forms[1] = BF::monomial(field, 0, 1);
        comp.push_back(std::move(forms));
    }
    return CurveParametrization<F>(X, std::move(comp));
}

template <class F>
CurveParametrization<F> standard_curve(const F& field, const AmbientSpace& X, CurveKind kind) {
    return kind.is_diagonal ? diagonal_curve(field, X)
                            : coordinate_axis_curve(field, X, kind.factor);
}

// One defining section of the curve: a multihomogeneous polynomial cutting
// the curve out, together with its multidegree.
template <class F>
struct DefiningSection {
    Multidegree ltilde_degree;
    MultiPoly<F> section;
};

// The m+2 sections cutting out a standard curve.  For the axis line in
// factor i these are the vanishing coordinates: X_{i,2}.. of the moving
// factor, then X_{j,1}.. of every frozen factor.  For the diagonal they are
// the k-1 bilinear forms tying factor 0's first two coordinates to each
// other factor's, then the vanishing coordinates X_{j,2}.. everywhere.
template <class F>
std::vector<DefiningSection<F>> defining_data(const F& field, const AmbientSpace& X,
                                              CurveKind kind) {
    using MP = MultiPoly<F>;
    std::vector<DefiningSection<F>> out;
    if (!kind.is_diagonal) {
        const int i = kind.factor;
        if (i < 0 || i >= X.k()) throw std::out_of_range("axis factor index out of range");
        for (int r = 2; r <= X.n(i); ++r)
            out.push_back({unit_degree(X.k(), i), MP::coordinate(field, X, i, r)});
        for (int j = 0; j < X.k(); ++j) {
            if (j == i) continue;
            for (int r = 1; r <= X.n(j); ++r)
                out.push_back({unit_degree(X.k(), j), MP::coordinate(field, X, j, r)});
        }
    } else {
        for (int j = 1; j < X.k(); ++j) {
            MP b = MP::coordinate(field, X, 0, 0) * MP::coordinate(field, X, j, 1) -
                   MP::coordinate(field, X, 0, 1) * MP::coordinate(field, X, j, 0);
            Multidegree d = unit_degree(X.k(), 0);
            d[static_cast<std::size_t>(j)] += 1;
            out.push_back({std::move(d), std::move(b)});
        }
        for (int j = 0; j < X.k(); ++j)
            for (int r = 2; r <= X.n(j); ++r)
                out.push_back({unit_degree(X.k(), j), MP::coordinate(field, X, j, r)});
    }
    return out;
}

}  // namespace conifold
