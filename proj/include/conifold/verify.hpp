#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <conifold/config.hpp>
#include <conifold/curves.hpp>
#include <conifold/graded.hpp>
#include <conifold/sections.hpp>
#include <conifold/smoothness.hpp>

namespace conifold {

// Outcome of the normal-bundle check for one standard curve on one
// configuration.  pass means: a random draw produced defining equations that
// are smooth along the curve and whose graded kernel profile reads off the
// splitting O(-1) (+) O(-1).  On failure the last attempt's data and the
// reason stay available for inspection.
template <class F>
struct NormalBundleVerdict {
    CurveKind kind;
    Multidegree curve_degree;
    bool pass = false;
    int attempts = 0;
    std::string failure_reason;                // empty when pass
    std::optional<HilbertProfile> profile;     // last computed profile, if any
    std::optional<SplittingType> splitting;    // set when splitting_type succeeded
    std::optional<SectionDraw<F>> witness;     // the successful draw
    std::optional<GradedMapSpec<F>> psi;       // its graded map
};

// Draw, check smoothness, profile the kernel, read the splitting; retry with
// fresh randomness up to max_attempts.  Failures of any stage mark the
// attempt bad rather than aborting, since a finite field admits unlucky
// draws; exhausting the attempts returns a failing verdict rather than
// throwing, so callers can report it.
template <class F>
NormalBundleVerdict<F> verify_normal_bundle(const F& field, const ConfigMatrix& cfg,
                                            CurveKind kind, SeededRng& rng, int max_attempts = 5,
                                            std::optional<std::pair<int, int>> window = {}) {
    if (max_attempts < 1) throw std::invalid_argument("need at least one attempt");
    SectionPlan<F> plan = section_plan(field, cfg, kind);

    NormalBundleVerdict<F> verdict;
    verdict.kind = kind;
    verdict.curve_degree = plan.curve.multidegree();

    auto [lo, hi] = window ? *window : default_window([&] {
        std::vector<int> src;
        for (const auto& ds : plan.defining)
            src.push_back(static_cast<int>(-dot(ds.ltilde_degree, plan.curve.multidegree())));
        return src;
    }());

    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        verdict.attempts = attempt;
        SectionDraw<F> draw = draw_sections(plan, rng);

        bool degenerate_draw = false;
        for (const auto& s : draw.sections)
            if (s.is_zero()) degenerate_draw = true;
        if (degenerate_draw) {
            verdict.failure_reason = "a drawn defining equation was identically zero";
            continue;
        }
        if (!smoothness_along_curve(draw.sections, plan.curve)) {
            verdict.failure_reason = "zero locus of the draw is singular somewhere on the curve";
            continue;
        }

        GradedMapSpec<F> psi = psi_spec(plan, draw.choices);
        HilbertProfile prof = hilbert_profile(psi, lo, hi);
        verdict.profile = prof;
        SplittingType split{};
        try {
            split = splitting_type(prof);
        } catch (const std::domain_error& e) {
            verdict.failure_reason = std::string("kernel profile unreadable: ") + e.what();
            continue;
        }
        verdict.splitting = split;
        if (!(split == SplittingType{-1, -1})) {
            verdict.failure_reason = "splitting is O(" + std::to_string(split.a) + ") (+) O(" +
                                     std::to_string(split.b) + "), not O(-1) (+) O(-1)";
            continue;
        }

        verdict.pass = true;
        verdict.failure_reason.clear();
        verdict.witness = std::move(draw);
        verdict.psi = std::move(psi);
        return verdict;
    }
    return verdict;
}

}  // namespace conifold
