#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <conifold/config.hpp>
#include <conifold/curves.hpp>
#include <conifold/graded.hpp>
#include <conifold/matrix.hpp>
#include <conifold/multipoly.hpp>
#include <conifold/rng.hpp>

namespace conifold {

// Everything needed to draw defining equations through a standard curve: the
// curve, its defining sections stilde_j, and for each (section j, equation i)
// a basis of the space V_ji of multidegree row_i - ltilde_j polynomials from
// which the cofactors s_ji are drawn.  Restriction to the curve maps each
// V_ji onto the full space of binary forms of the restricted degree; that
// surjectivity is verified at construction.
template <class F>
struct SectionPlan {
    ConfigMatrix config;
    CurveKind kind;
    CurveParametrization<F> curve;
    std::vector<DefiningSection<F>> defining;
    std::vector<std::vector<std::vector<MultiPoly<F>>>> vji;  // [j][i] -> basis
};

namespace detail {

// Basis of the multidegree-d span used for cofactors.  On an axis curve only
// the moving factor contributes parameter dependence, so its first two
// coordinates carry a full binary-forms block and every frozen factor is
// pinned to the power of its generically nonvanishing coordinate X_{j,0}.
// On the diagonal every factor moves, so all first-two-coordinate monomials
// of the right multidegree appear.
template <class F>
std::vector<MultiPoly<F>> cofactor_basis(const F& field, const AmbientSpace& X,
                                         const CurveKind& kind, const Multidegree& d) {
    using MP = MultiPoly<F>;
    std::vector<MP> out;
    const std::size_t coords = static_cast<std::size_t>(X.coord_count());
    if (!kind.is_diagonal) {
        const int i = kind.factor;
        const int di = d[static_cast<std::size_t>(i)];
        for (int a = 0; a <= di; ++a) {
            std::vector<int> e(coords, 0);
            e[static_cast<std::size_t>(X.coord_index(i, 0))] = a;
            e[static_cast<std::size_t>(X.coord_index(i, 1))] = di - a;
            for (int j = 0; j < X.k(); ++j)
                if (j != i)
                    e[static_cast<std::size_t>(X.coord_index(j, 0))] =
                        d[static_cast<std::size_t>(j)];
            out.push_back(MP::monomial(field, X, e, field.one()));
        }
    } else {
        // all splits (a_j, d_j - a_j) across factors, lexicographic in a
        std::vector<int> a(static_cast<std::size_t>(X.k()), 0);
        for (;;) {
            std::vector<int> e(coords, 0);
            for (int j = 0; j < X.k(); ++j) {
                e[static_cast<std::size_t>(X.coord_index(j, 0))] = a[static_cast<std::size_t>(j)];
                e[static_cast<std::size_t>(X.coord_index(j, 1))] =
                    d[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(j)];
            }
            out.push_back(MP::monomial(field, X, e, field.one()));
            int j = X.k() - 1;
            while (j >= 0 && a[static_cast<std::size_t>(j)] == d[static_cast<std::size_t>(j)]) {
                a[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
            ++a[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

}  // namespace detail

// Builds the full drawing plan for one configuration and one standard curve.
// Throws invalid_argument on a non-strict configuration and runtime_error if
// a generated basis fails to restrict onto all binary forms of its degree
// (which would break the genericity argument downstream).
template <class F>
SectionPlan<F> section_plan(const F& field, const ConfigMatrix& cfg, CurveKind kind) {
    {
        auto bad = validate(cfg, true);
        if (!bad.empty())
            throw std::invalid_argument("section plan needs a strictly valid config: " +
                                        bad.front());
    }
    const AmbientSpace& X = cfg.ambient();
    SectionPlan<F> plan{cfg, kind, standard_curve(field, X, kind),
                        defining_data(field, X, kind), {}};
    const Multidegree& cd = plan.curve.multidegree();
    const int m = cfg.num_equations();

    for (const auto& ds : plan.defining) {
        std::vector<std::vector<MultiPoly<F>>> per_target;
        for (int i = 0; i < m; ++i) {
            Multidegree d = cfg.row(i);
            for (std::size_t j = 0; j < d.size(); ++j) {
                d[j] -= ds.ltilde_degree[j];
                if (d[j] < 0)
                    throw std::runtime_error(
                        "cofactor multidegree went negative; configuration row below the "
                        "defining section degree");
            }
            auto basis = detail::cofactor_basis(field, X, kind, d);

            // surjectivity of restriction: the basis must span all binary
            // forms of the restricted degree
            const long long rdeg = dot(d, cd);
            Matrix<F> R(field, static_cast<std::size_t>(rdeg) + 1, basis.size());
            for (std::size_t b = 0; b < basis.size(); ++b) {
                BinaryForm<F> r = basis[b].substitute(plan.curve);
                for (int c = 0; c <= r.degree(); ++c)
                    R.at(static_cast<std::size_t>(c), b) = r.coeff(c);
            }
            if (rank(R) != static_cast<std::size_t>(rdeg) + 1)
                throw std::runtime_error("cofactor basis does not restrict onto all degree-" +
                                         std::to_string(rdeg) + " forms on the curve");
            per_target.push_back(std::move(basis));
        }
        plan.vji.push_back(std::move(per_target));
    }
    return plan;
}

// One random draw from a plan: cofactors s_ji and the assembled defining
// equations s_i = sum_j stilde_j * s_ji.
template <class F>
struct SectionDraw {
    std::vector<std::vector<MultiPoly<F>>> choices;  // [j][i] -> s_ji
    std::vector<MultiPoly<F>> sections;              // [i] -> s_i
};

// Coefficients are drawn section-by-section (j outer), equation-by-equation
// (i inner), basis order, so a fixed rng stream reproduces the draw.
template <class F>
SectionDraw<F> draw_sections(const SectionPlan<F>& plan, SeededRng& rng) {
    const F& field = plan.defining.front().section.field();
    const int m = plan.config.num_equations();
    SectionDraw<F> draw;
    for (std::size_t j = 0; j < plan.vji.size(); ++j) {
        std::vector<MultiPoly<F>> row;
        for (int i = 0; i < m; ++i) {
            const auto& basis = plan.vji[j][static_cast<std::size_t>(i)];
            MultiPoly<F> s = MultiPoly<F>(field, plan.config.ambient(),
                                          basis.front().multidegree());
            for (const auto& b : basis) s = s + field.random(rng) * b;
            row.push_back(std::move(s));
        }
        draw.choices.push_back(std::move(row));
    }
    for (int i = 0; i < m; ++i) {
        MultiPoly<F> s(field, plan.config.ambient(), plan.config.row(i));
        for (std::size_t j = 0; j < plan.vji.size(); ++j)
            s = s + plan.defining[j].section * draw.choices[j][static_cast<std::size_t>(i)];
        draw.sections.push_back(std::move(s));
    }
    return draw;
}

// The graded map whose kernel computes the normal bundle data: source j is
// the defining section's restricted degree (negated), target i the equation's
// restricted degree (negated), entry (j,i) the cofactor restricted to the
// curve.  The Calabi-Yau column sums make the degree data admissible.
template <class F>
GradedMapSpec<F> psi_spec(const SectionPlan<F>& plan,
                          const std::vector<std::vector<MultiPoly<F>>>& choices) {
    const Multidegree& cd = plan.curve.multidegree();
    std::vector<int> src, tgt;
    for (const auto& ds : plan.defining)
        src.push_back(static_cast<int>(-dot(ds.ltilde_degree, cd)));
    for (int i = 0; i < plan.config.num_equations(); ++i)
        tgt.push_back(static_cast<int>(-dot(plan.config.row(i), cd)));

    std::vector<std::vector<BinaryForm<F>>> forms;
    for (const auto& row : choices) {
        std::vector<BinaryForm<F>> frow;
        for (const auto& s : row) frow.push_back(s.substitute(plan.curve));
        forms.push_back(std::move(frow));
    }
    return GradedMapSpec<F>(plan.defining.front().section.field(), std::move(src),
                            std::move(tgt), std::move(forms));
}

}  // namespace conifold
