#include <catch2/catch_amalgamated.hpp>

#include <conifold/config.hpp>
#include <conifold/curves.hpp>
#include <conifold/fp.hpp>
#include <conifold/sections.hpp>
#include <conifold/smoothness.hpp>
#include <conifold/verify.hpp>

using namespace conifold;

namespace {

using BF = BinaryForm<FpField>;
using MP = MultiPoly<FpField>;

ConfigMatrix quintic() { return ConfigMatrix(AmbientSpace({4}), {{5}}); }
ConfigMatrix bicubic() { return ConfigMatrix(AmbientSpace({2, 2}), {{3, 3}}); }

}  // namespace

TEST_CASE("standard curves") {
    FpField F(101);

    SECTION("axis line in projective 4-space") {
        AmbientSpace X({4});
        auto c = coordinate_axis_curve(F, X, 0);
        REQUIRE(c.multidegree() == Multidegree{1});
        REQUIRE(c.component(0, 0) == BF::monomial(F, 1, 0));
        REQUIRE(c.component(0, 1) == BF::monomial(F, 0, 1));
        for (int r = 2; r <= 4; ++r) REQUIRE(c.component(0, r).is_zero());
    }

    SECTION("axis line in the second factor") {
        AmbientSpace X({1, 4});
        auto c = coordinate_axis_curve(F, X, 1);
        REQUIRE(c.multidegree() == Multidegree{0, 1});
        REQUIRE(c.component(0, 0) == BF::monomial(F, 0, 0));
        REQUIRE(c.component(0, 1).is_zero());
        REQUIRE(c.component(1, 0) == BF::monomial(F, 1, 0));
        REQUIRE(c.component(1, 1) == BF::monomial(F, 0, 1));
    }

    SECTION("diagonal line") {
        AmbientSpace X({2, 2});
        auto c = diagonal_curve(F, X);
        REQUIRE(c.multidegree() == Multidegree{1, 1});
        for (int j = 0; j < 2; ++j) {
            REQUIRE(c.component(j, 0) == BF::monomial(F, 1, 0));
            REQUIRE(c.component(j, 1) == BF::monomial(F, 0, 1));
            REQUIRE(c.component(j, 2).is_zero());
        }
    }

    SECTION("one-factor diagonal degenerates to the axis line") {
        AmbientSpace X({4});
        auto d = diagonal_curve(F, X);
        auto a = coordinate_axis_curve(F, X, 0);
        for (int r = 0; r <= 4; ++r) REQUIRE(d.component(0, r) == a.component(0, r));
    }

    SECTION("axis index is range-checked") {
        REQUIRE_THROWS_AS(coordinate_axis_curve(F, AmbientSpace({2, 2}), 2), std::out_of_range);
    }

    SECTION("kind helpers") {
        auto kinds = standard_curve_kinds(AmbientSpace({2, 2}));
        REQUIRE(kinds.size() == 3);
        REQUIRE(kinds[0].label() == "axis-0");
        REQUIRE(kinds[2].label() == "diagonal");
    }
}

TEST_CASE("curve defining sections") {
    FpField F(101);

    SECTION("axis line in projective 4-space is cut by three coordinates") {
        auto data = defining_data(F, AmbientSpace({4}), CurveKind::axis(0));
        REQUIRE(data.size() == 3);
        REQUIRE(data[0].section == MP::coordinate(F, AmbientSpace({4}), 0, 2));
        REQUIRE(data[1].section == MP::coordinate(F, AmbientSpace({4}), 0, 3));
        REQUIRE(data[2].section == MP::coordinate(F, AmbientSpace({4}), 0, 4));
        for (const auto& ds : data) REQUIRE(ds.ltilde_degree == Multidegree{1});
    }

    SECTION("diagonal of the bicubic ambient: one bilinear and two coordinates") {
        AmbientSpace X({2, 2});
        auto data = defining_data(F, X, CurveKind::diagonal());
        REQUIRE(data.size() == 3);
        MP want = MP::coordinate(F, X, 0, 0) * MP::coordinate(F, X, 1, 1) -
                  MP::coordinate(F, X, 0, 1) * MP::coordinate(F, X, 1, 0);
        REQUIRE(data[0].section == want);
        REQUIRE(data[0].ltilde_degree == Multidegree{1, 1});
        REQUIRE(data[1].section == MP::coordinate(F, X, 0, 2));
        REQUIRE(data[2].section == MP::coordinate(F, X, 1, 2));
    }

    SECTION("counts and vanishing across all small ambients and kinds") {
        for (const auto& dims : enumerate_ambients(7)) {
            AmbientSpace X(dims);
            const int m = X.total_dim() - 3;
            for (const CurveKind& kind : standard_curve_kinds(X)) {
                auto curve = standard_curve(F, X, kind);
                auto data = defining_data(F, X, kind);
                REQUIRE(static_cast<int>(data.size()) == m + 2);
                for (const auto& ds : data) {
                    REQUIRE(ds.section.multidegree() == ds.ltilde_degree);
                    REQUIRE(ds.section.substitute(curve).is_zero());
                }
            }
        }
    }
}

TEST_CASE("section plans") {
    FpField F;

    SECTION("quintic plan: degree-4 binary forms for every defining section") {
        auto plan = section_plan(F, quintic(), CurveKind::axis(0));
        REQUIRE(plan.vji.size() == 3);
        for (const auto& per_target : plan.vji) {
            REQUIRE(per_target.size() == 1);
            REQUIRE(per_target[0].size() == 5);
            for (const auto& b : per_target[0])
                REQUIRE(b.multidegree() == Multidegree{4});
        }
    }

    SECTION("bicubic axis plan pins frozen factors to their base coordinate") {
        auto plan = section_plan(F, bicubic(), CurveKind::axis(0));
        // defining sections: X[0][2] (moving factor), then X[1][1], X[1][2]
        REQUIRE(plan.defining.size() == 3);
        REQUIRE(plan.defining[0].ltilde_degree == Multidegree{1, 0});
        REQUIRE(plan.defining[1].ltilde_degree == Multidegree{0, 1});
        // for the frozen-factor section, cofactors are f(X00, X01) * X10^3-1...
        // multidegree (3, 2), four basis monomials, all multiples of X10^2
        const auto& basis = plan.vji[1][0];
        REQUIRE(basis.size() == 4);
        for (const auto& b : basis) {
            REQUIRE(b.multidegree() == Multidegree{3, 2});
            REQUIRE(b.terms().size() == 1);
            REQUIRE(b.terms().begin()->first[3] == 2);  // X[1][0] exponent
        }
    }

    SECTION("bicubic diagonal plan spans both factors' leading coordinates") {
        auto plan = section_plan(F, bicubic(), CurveKind::diagonal());
        // the bilinear defining section leaves multidegree (2,2): 9 monomials
        REQUIRE(plan.vji[0][0].size() == 9);
        // restricted degree 4, so the restriction map has a kernel but is onto
        for (const auto& b : plan.vji[0][0]) REQUIRE(b.multidegree() == Multidegree{2, 2});
    }

    SECTION("non-strict configurations are rejected") {
        ConfigMatrix relaxed(AmbientSpace({1, 4}), {{0, 2}, {2, 3}});
        REQUIRE_THROWS_AS(section_plan(F, relaxed, CurveKind::axis(0)), std::invalid_argument);
    }
}

TEST_CASE("section draws") {
    FpField F;

    SECTION("drawn equations vanish on the curve and carry the row degrees") {
        SeededRng rng(3);
        for (const CurveKind& kind : standard_curve_kinds(AmbientSpace({2, 2}))) {
            auto plan = section_plan(F, bicubic(), kind);
            auto draw = draw_sections(plan, rng);
            REQUIRE(draw.sections.size() == 1);
            REQUIRE(draw.sections[0].multidegree() == Multidegree{3, 3});
            REQUIRE(draw.sections[0].substitute(plan.curve).is_zero());
        }
    }

    SECTION("pinned draw regression") {
        FpField Fsmall(101);
        auto plan = section_plan(Fsmall, quintic(), CurveKind::axis(0));
        SeededRng rng(42);
        auto draw = draw_sections(plan, rng);
        REQUIRE(draw.sections[0].to_string() ==
                "83*X[0][1]^4*X[0][4] + 99*X[0][1]^4*X[0][3] + 32*X[0][1]^4*X[0][2] + "
                "46*X[0][0]*X[0][1]^3*X[0][4] + 22*X[0][0]*X[0][1]^3*X[0][3] + "
                "75*X[0][0]*X[0][1]^3*X[0][2] + 47*X[0][0]^2*X[0][1]^2*X[0][4] + "
                "1*X[0][0]^2*X[0][1]^2*X[0][3] + 42*X[0][0]^2*X[0][1]^2*X[0][2] + "
                "63*X[0][0]^3*X[0][1]*X[0][4] + 81*X[0][0]^3*X[0][1]*X[0][3] + "
                "75*X[0][0]^3*X[0][1]*X[0][2] + 95*X[0][0]^4*X[0][4] + "
                "26*X[0][0]^4*X[0][3] + 90*X[0][0]^4*X[0][2]");
        BF f = draw.choices[0][0].substitute(plan.curve);
        std::vector<int> got;
        for (int c = 0; c <= f.degree(); ++c)
            got.push_back(static_cast<int>(f.coeff(c).value()));
        REQUIRE(got == std::vector<int>{32, 75, 42, 75, 90});
    }
}

TEST_CASE("graded maps from section draws") {
    FpField F;

    SECTION("quintic degree data") {
        auto plan = section_plan(F, quintic(), CurveKind::axis(0));
        SeededRng rng(5);
        auto draw = draw_sections(plan, rng);
        auto psi = psi_spec(plan, draw.choices);
        REQUIRE(psi.source_degrees() == std::vector<int>{-1, -1, -1});
        REQUIRE(psi.target_degrees() == std::vector<int>{-5});
        REQUIRE(psi.form(0, 0).degree() == 4);
    }

    SECTION("bicubic axis and diagonal degree data") {
        SeededRng rng(6);
        auto plan_a = section_plan(F, bicubic(), CurveKind::axis(0));
        auto psi_a = psi_spec(plan_a, draw_sections(plan_a, rng).choices);
        REQUIRE(psi_a.source_degrees() == std::vector<int>{-1, 0, 0});
        REQUIRE(psi_a.target_degrees() == std::vector<int>{-3});

        auto plan_d = section_plan(F, bicubic(), CurveKind::diagonal());
        auto psi_d = psi_spec(plan_d, draw_sections(plan_d, rng).choices);
        REQUIRE(psi_d.source_degrees() == std::vector<int>{-2, -1, -1});
        REQUIRE(psi_d.target_degrees() == std::vector<int>{-6});
    }

    SECTION("degree data is admissible for every small config and kind") {
        SeededRng rng(7);
        for (const auto& dims : enumerate_ambients(6)) {
            AmbientSpace X(dims);
            for (const auto& cfg : enumerate_configs(X)) {
                for (const CurveKind& kind : standard_curve_kinds(X)) {
                    auto plan = section_plan(F, cfg, kind);
                    auto psi = psi_spec(plan, draw_sections(plan, rng).choices);
                    REQUIRE(GradedMapSpec<FpField>::degree_violations(
                                psi.source_degrees(), psi.target_degrees())
                                .empty());
                }
            }
        }
    }
}

TEST_CASE("smoothness along the curve") {
    FpField F;
    AmbientSpace X({4});
    auto curve = coordinate_axis_curve(F, X, 0);
    const MP x12 = MP::coordinate(F, X, 0, 2), x13 = MP::coordinate(F, X, 0, 3),
             x14 = MP::coordinate(F, X, 0, 4);

    auto quartic_in = [&](int c0, int c1) {
        // (c0*X00 + c1*X01)^4, a quartic whose restriction is (c0 s + c1 t)^4
        MP lin = F.from_int(c0) * MP::coordinate(F, X, 0, 0) +
                 F.from_int(c1) * MP::coordinate(F, X, 0, 1);
        return lin * lin * lin * lin;
    };

    SECTION("generic quintic draws are smooth along the line") {
        SeededRng rng(9);
        auto plan = section_plan(F, quintic(), CurveKind::axis(0));
        auto draw = draw_sections(plan, rng);
        REQUIRE(smoothness_along_curve(draw.sections, plan.curve));
    }

    SECTION("a squared section flattens the Jacobian") {
        MP s = x12 * x12 * (x13 * x12 * x12 + x14 * x13 * x13);
        REQUIRE(s.substitute(curve).is_zero());
        REQUIRE_FALSE(smoothness_along_curve({s}, curve));
    }

    SECTION("minors may share roots pairwise as long as not all do") {
        // cofactors restrict to s^4, s^3 t, t^4: the first two share the
        // root s = 0 but the third avoids it
        MP x00 = MP::coordinate(F, X, 0, 0), x01 = MP::coordinate(F, X, 0, 1);
        MP s = x12 * quartic_in(1, 0) + x13 * (x00 * x00 * x00 * x01) +
               x14 * quartic_in(0, 1);
        REQUIRE(smoothness_along_curve({s}, curve));
    }

    SECTION("all minors sharing a root is singular") {
        // cofactors restrict to s^4 and s^3 t: every minor vanishes at s = 0
        MP x00 = MP::coordinate(F, X, 0, 0), x01 = MP::coordinate(F, X, 0, 1);
        MP s = x12 * quartic_in(1, 0) + x13 * (x00 * x00 * x00 * x01);
        REQUIRE_FALSE(smoothness_along_curve({s}, curve));
    }

    SECTION("zero and non-vanishing sections are rejected") {
        REQUIRE_THROWS_AS(smoothness_along_curve({MP(F, X, Multidegree{5})}, curve),
                          std::invalid_argument);
        MP notvanishing = quartic_in(1, 1) * MP::coordinate(F, X, 0, 0);
        REQUIRE_THROWS_AS(smoothness_along_curve({notvanishing}, curve),
                          std::invalid_argument);
    }
}

TEST_CASE("normal bundle verdicts") {
    FpField F;

    SECTION("quintic line certifies on the first attempt") {
        SeededRng rng(11);
        auto v = verify_normal_bundle(F, quintic(), CurveKind::axis(0), rng);
        REQUIRE(v.pass);
        REQUIRE(v.attempts == 1);
        REQUIRE(v.splitting == SplittingType{-1, -1});
        REQUIRE(v.profile->dims == std::vector<int>{0, 0, 2, 4});
        REQUIRE(v.curve_degree == Multidegree{1});
        REQUIRE(v.witness.has_value());
    }

    SECTION("all three bicubic curves certify") {
        SeededRng rng(12);
        for (const CurveKind& kind : standard_curve_kinds(AmbientSpace({2, 2}))) {
            auto v = verify_normal_bundle(F, bicubic(), kind, rng);
            INFO(kind.label());
            REQUIRE(v.pass);
            REQUIRE(v.splitting == SplittingType{-1, -1});
        }
    }

    SECTION("adversarial monomial cofactors defeat the splitting read") {
        auto plan = section_plan(F, quintic(), CurveKind::axis(0));
        // hand-build cofactors restricting to pure s^4
        std::vector<std::vector<MP>> choices;
        for (const auto& per_target : plan.vji)
            choices.push_back({per_target[0].back()});  // X00^4 monomial block
        auto psi = psi_spec(plan, choices);
        auto prof = hilbert_profile(psi, -1, 2);
        REQUIRE(prof.dims == std::vector<int>{2, 4, 6, 8});
        REQUIRE(prof.dim_at(0) == 4);
        REQUIRE_THROWS_AS(splitting_type(prof), std::domain_error);
    }

    SECTION("every small config certifies every standard curve within 5 attempts") {
        SeededRng rng(13);
        for (const auto& dims : enumerate_ambients(6)) {
            AmbientSpace X(dims);
            for (const auto& cfg : enumerate_configs(X)) {
                for (const CurveKind& kind : standard_curve_kinds(X)) {
                    SeededRng sub = rng.stream(kind.label(), 0);
                    auto v = verify_normal_bundle(F, cfg, kind, sub);
                    INFO("ambient k=" << X.k() << " kind " << kind.label());
                    REQUIRE(v.pass);
                    REQUIRE(v.attempts <= 5);
                    REQUIRE(v.splitting == SplittingType{-1, -1});
                }
            }
        }
    }

    SECTION("attempt budget is validated") {
        SeededRng rng(14);
        REQUIRE_THROWS_AS(verify_normal_bundle(F, quintic(), CurveKind::axis(0), rng, 0),
                          std::invalid_argument);
    }
}
