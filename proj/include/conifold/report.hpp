#pragma once

// Report assembly: run the full pipeline on one configuration and render the
// results as JSON or markdown.  Reports carry integers, strings, and booleans
// only (64-bit seeds travel as decimal strings), with keys in a fixed order,
// so a report is byte-for-byte reproducible from its manifest.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <conifold/config.hpp>
#include <conifold/curves.hpp>
#include <conifold/graded.hpp>
#include <conifold/incidence.hpp>
#include <conifold/rng.hpp>
#include <conifold/topology.hpp>
#include <conifold/verify.hpp>

namespace conifold {

using ordered_json = nlohmann::ordered_json;

// The full pipeline result for one configuration: topology of the smoothed
// threefold, one normal-bundle verdict per standard curve, and the pairwise
// disjointness reports.
template <class F>
struct ConfigAnalysis {
    ConfigMatrix cfg;
    TopologyReport topology;
    std::vector<NormalBundleVerdict<F>> curves;
    std::vector<PairDisjointness> pairs;
    bool certified = false;
    std::string verdict;
};

// Run topology, all k+1 normal-bundle checks, and the pairwise disjointness
// sweep.  Each curve draws from its own seed stream, derived from the master
// seed by (label, config_index), so adding curves or configs never perturbs
// the randomness any existing check sees.
template <class F>
ConfigAnalysis<F> analyze_config(const F& field, const ConfigMatrix& cfg, std::uint64_t seed,
                                 int max_attempts = 5,
                                 std::optional<std::pair<int, int>> window = {},
                                 int config_index = 0) {
    ConfigAnalysis<F> out{cfg, topology_report(cfg), {}, {}, false, ""};
    SeededRng master(seed);
    bool curves_ok = true;
    for (const CurveKind& kind : standard_curve_kinds(cfg.ambient())) {
        SeededRng stream = master.stream("curve/" + kind.label(), config_index);
        out.curves.push_back(
            verify_normal_bundle(field, cfg, kind, stream, max_attempts, window));
        curves_ok = curves_ok && out.curves.back().pass;
    }
    out.pairs = check_all_pairs(cfg);
    bool pairs_ok = true;
    for (const auto& p : out.pairs)
        if (p.covered) pairs_ok = pairs_ok && p.report->holds;
    out.certified = curves_ok && pairs_ok;
    out.verdict = out.certified
                      ? "conifold transition to #_" + std::to_string(out.topology.summand_count) +
                            "(S^3 x S^3) certified (generic witnesses)"
                      : "not certified: see failed checks";
    return out;
}

inline ordered_json degree_json(const Multidegree& d) {
    ordered_json a = ordered_json::array();
    for (int x : d) a.push_back(x);
    return a;
}

inline ordered_json config_rows_json(const ConfigMatrix& cfg) {
    ordered_json rows = ordered_json::array();
    for (const Multidegree& row : cfg.rows()) rows.push_back(degree_json(row));
    return rows;
}

inline ordered_json topology_json(const TopologyReport& t) {
    ordered_json j;
    j["euler"] = t.euler;
    j["b2"] = t.b2;
    j["b3"] = t.b3;
    j["nodes"] = t.node_count;
    j["summands"] = t.summand_count;
    j["summands_note"] = "count (consistent reading)";
    return j;
}

inline ordered_json profile_json(const HilbertProfile& p) {
    ordered_json j;
    j["lo"] = p.lo;
    j["dims"] = p.dims;
    return j;
}

template <class F>
ordered_json curve_verdict_json(const NormalBundleVerdict<F>& v) {
    ordered_json j;
    j["curve"] = v.kind.label();
    j["degree"] = degree_json(v.curve_degree);
    j["pass"] = v.pass;
    j["attempts"] = v.attempts;
    if (v.profile) j["profile"] = profile_json(*v.profile);
    if (v.splitting) {
        j["splitting"] = ordered_json::array({v.splitting->a, v.splitting->b});
    }
    if (!v.failure_reason.empty()) j["failure"] = v.failure_reason;
    if (v.witness) {
        ordered_json sections = ordered_json::array();
        for (const auto& s : v.witness->sections) sections.push_back(s.to_string());
        j["witness_sections"] = sections;
    }
    return j;
}

inline ordered_json pair_json(const PairDisjointness& p, bool strict_regime) {
    ordered_json j;
    j["curve1"] = p.kind1.label();
    j["curve2"] = p.kind2.label();
    j["covered"] = p.covered;
    if (!p.covered) {
        j["note"] = p.note;
        return j;
    }
    const IncidencePairReport& r = *p.report;
    j["deg1"] = degree_json(r.deg1);
    j["deg2"] = degree_json(r.deg2);
    j["regime"] = strict_regime ? "positive degrees" : "nonnegative degrees";
    j["dim_MY"] = r.dim_MY;
    j["dim_pair_space"] = r.dim_pair_space;
    j["reparam_correction"] = r.reparam_correction;
    j["fiber_codim_closed"] = r.fiber_codim_closed;
    if (r.fiber_codim_oracle) j["fiber_codim_oracle"] = *r.fiber_codim_oracle;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["holds"] = r.holds;
    j["margin"] = r.margin;
    return j;
}

template <class F>
ordered_json analysis_json(const ConfigAnalysis<F>& a) {
    ordered_json j;
    j["ambient"] = degree_json(a.cfg.ambient().dims());
    j["D"] = config_rows_json(a.cfg);
    j["valid"] = true;
    j["topology"] = topology_json(a.topology);
    ordered_json curves = ordered_json::array();
    for (const auto& v : a.curves) curves.push_back(curve_verdict_json(v));
    j["curves"] = curves;
    const bool strict = is_valid(a.cfg, true);
    ordered_json pairs = ordered_json::array();
    for (const auto& p : a.pairs) pairs.push_back(pair_json(p, strict));
    j["pairs"] = pairs;
    j["certified"] = a.certified;
    j["verdict"] = a.verdict;
    return j;
}

inline ordered_json enumerate_entry_json(const ConfigMatrix& cfg) {
    ordered_json j;
    j["D"] = config_rows_json(cfg);
    j["dim_MY"] = dim_section_space(cfg);
    j["topology"] = topology_json(topology_report(cfg));
    return j;
}

inline ordered_json lemma_run_json(const LemmaTrialStats& stats, std::uint32_t prime,
                                   std::uint64_t seed, int max_m) {
    ordered_json j;
    j["command"] = "verify-lemma";
    j["prime"] = prime;
    j["seed"] = std::to_string(seed);
    j["max_m"] = max_m;
    j["trials"] = stats.trials;
    j["generic"] = stats.generic;
    j["required"] = "9999 generic per 10000 trials";
    ordered_json failures = ordered_json::array();
    for (const auto& f : stats.failures) {
        ordered_json e;
        e["index"] = f.index;
        e["seed"] = std::to_string(f.seed);
        e["sources"] = f.source_degrees;
        e["targets"] = f.target_degrees;
        e["profile"] = profile_json(f.profile);
        failures.push_back(e);
    }
    j["failures"] = failures;
    j["pass"] = static_cast<long long>(stats.generic) * 10000 >=
                static_cast<long long>(stats.trials) * 9999;
    return j;
}

// ---------------------------------------------------------------------------
// Markdown rendering.  Walks the JSON so the two formats can never disagree.

namespace detail {

inline std::string md_int_list(const ordered_json& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ", ";
        s += a[i].dump();
    }
    return s + ")";
}

}  // namespace detail

inline std::string topology_markdown(const ordered_json& t) {
    std::string md;
    md += "| euler | b2 | b3 | nodes | summands |\n";
    md += "|---|---|---|---|---|\n";
    md += "| " + t["euler"].dump() + " | " + t["b2"].dump() + " | " + t["b3"].dump() + " | " +
          t["nodes"].dump() + " | " + t["summands"].dump() + " |\n";
    return md;
}

inline std::string analysis_markdown(const ordered_json& configs) {
    std::string md;
    for (const auto& c : configs) {
        md += "## ambient " + detail::md_int_list(c["ambient"]) + ", D = " + c["D"].dump() + "\n\n";
        md += topology_markdown(c["topology"]) + "\n";
        md += "### curves\n\n";
        md += "| curve | degree | pass | attempts | splitting |\n|---|---|---|---|---|\n";
        for (const auto& v : c["curves"]) {
            md += "| " + v["curve"].get<std::string>() + " | " +
                  detail::md_int_list(v["degree"]) + " | " + v["pass"].dump() + " | " +
                  v["attempts"].dump() + " | " +
                  (v.contains("splitting") ? v["splitting"].dump() : "-") + " |\n";
        }
        md += "\n### disjointness pairs\n\n";
        md += "| pair | holds | margin | codim (closed) | codim (oracle) |\n|---|---|---|---|---|\n";
        for (const auto& p : c["pairs"]) {
            const std::string label =
                p["curve1"].get<std::string>() + "/" + p["curve2"].get<std::string>();
            if (!p["covered"].get<bool>()) {
                md += "| " + label + " | not covered | - | - | - |\n";
                continue;
            }
            md += "| " + label + " | " + p["holds"].dump() + " | " + p["margin"].dump() + " | " +
                  p["fiber_codim_closed"].dump() + " | " +
                  (p.contains("fiber_codim_oracle") ? p["fiber_codim_oracle"].dump() : "-") +
                  " |\n";
        }
        md += "\n**" + c["verdict"].get<std::string>() + "**\n\n";
    }
    return md;
}

inline std::string enumerate_markdown(const ordered_json& report) {
    std::string md = "# configurations for ambient " +
                     detail::md_int_list(report["ambient"]) + "\n\n";
    md += "| D | dim_MY | euler | summands |\n|---|---|---|---|\n";
    for (const auto& c : report["configs"]) {
        md += "| " + c["D"].dump() + " | " + c["dim_MY"].dump() + " | " +
              c["topology"]["euler"].dump() + " | " + c["topology"]["summands"].dump() + " |\n";
    }
    return md;
}

inline std::string lemma_markdown(const ordered_json& report) {
    std::string md = "# generic kernel profile trials\n\n";
    md += "- prime: " + report["prime"].dump() + "\n";
    md += "- seed: " + report["seed"].get<std::string>() + "\n";
    md += "- trials: " + report["trials"].dump() + "\n";
    md += "- generic: " + report["generic"].dump() + "\n";
    md += "- pass: " + report["pass"].dump() + "\n";
    if (!report["failures"].empty()) {
        md += "\n| index | seed | sources | targets |\n|---|---|---|---|\n";
        for (const auto& f : report["failures"]) {
            md += "| " + f["index"].dump() + " | " + f["seed"].get<std::string>() + " | " +
                  f["sources"].dump() + " | " + f["targets"].dump() + " |\n";
        }
    }
    return md;
}

}  // namespace conifold
