// Command-line front end.  Three subcommands:
//
//   enumerate     list the valid configurations for an ambient product
//   analyze       full pipeline: topology, normal bundles, disjointness
//   verify-lemma  randomized trials of the generic graded-kernel profile
//
// Exit codes: 0 when every checked property holds, 1 when some mathematical
// property fails, 2 on malformed input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <conifold/config.hpp>
#include <conifold/fp.hpp>
#include <conifold/graded.hpp>
#include <conifold/incidence.hpp>
#include <conifold/report.hpp>
#include <conifold/topology.hpp>

namespace {

using conifold::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitBadInput = 2;

std::vector<int> parse_ambient(const std::string& text) {
    std::vector<int> dims;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        const int n = std::stoi(part, &used);
        if (used != part.size()) throw std::invalid_argument("ambient: bad entry '" + part + "'");
        dims.push_back(n);
    }
    if (dims.empty()) throw std::invalid_argument("ambient: empty factor list");
    return dims;
}

std::pair<int, int> parse_window(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("window: expected lo:hi, got '" + text + "'");
    const int lo = std::stoi(text.substr(0, colon));
    const int hi = std::stoi(text.substr(colon + 1));
    if (lo > hi) throw std::invalid_argument("window: lo must not exceed hi");
    return {lo, hi};
}

// Config file format: one `ambient = [n1,...,nk]` line and one
// `D = [[...],...]` line; blank lines and #-comments are ignored.
conifold::ConfigMatrix parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config file: cannot open " + path);
    std::optional<std::vector<int>> ambient;
    std::optional<std::vector<std::vector<int>>> rows;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "ambient")
            ambient = nlohmann::json::parse(value).get<std::vector<int>>();
        else if (key == "D")
            rows = nlohmann::json::parse(value).get<std::vector<std::vector<int>>>();
        else
            throw std::invalid_argument("config file: unknown key '" + key + "'");
    }
    if (!ambient || !rows)
        throw std::invalid_argument("config file: need both 'ambient = [...]' and 'D = [[...]]'");
    std::vector<conifold::Multidegree> degrees(rows->begin(), rows->end());
    return conifold::ConfigMatrix(conifold::AmbientSpace(*ambient), degrees);
}

void emit(const ordered_json& report, const std::string& out_path, const std::string& format,
          const std::string& markdown) {
    const std::string text = format == "md" ? markdown : report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << text;
    }
}

int cmd_enumerate(const std::string& ambient_text, const std::string& out_path,
                  const std::string& format) {
    const conifold::AmbientSpace ambient(parse_ambient(ambient_text));
    ordered_json report;
    report["command"] = "enumerate";
    report["ambient"] = conifold::degree_json(ambient.dims());
    ordered_json configs = ordered_json::array();
    for (const auto& cfg : conifold::enumerate_configs(ambient))
        configs.push_back(conifold::enumerate_entry_json(cfg));
    report["configs"] = configs;
    emit(report, out_path, format, conifold::enumerate_markdown(report));
    return kExitOk;
}

struct AnalyzeArgs {
    std::string ambient_text;
    std::string config_path;
    std::uint32_t prime = conifold::FpField::default_prime;
    std::uint64_t seed = 0;
    std::string window_text;
    int attempts = 5;
    std::string out_path;
    std::string format = "json";
};

int cmd_analyze(const AnalyzeArgs& args) {
    if (args.ambient_text.empty() == args.config_path.empty())
        throw std::invalid_argument("analyze: pass exactly one of --ambient or --config");

    std::vector<conifold::ConfigMatrix> configs;
    if (!args.config_path.empty()) {
        const auto cfg = parse_config_file(args.config_path);
        const auto violations = conifold::validate(cfg, true);
        if (!violations.empty()) {
            ordered_json report;
            report["command"] = "analyze";
            report["error"] = "invalid configuration";
            report["violations"] = violations;
            emit(report, args.out_path, "json", "");
            return kExitBadInput;
        }
        configs.push_back(cfg);
    } else {
        const conifold::AmbientSpace ambient(parse_ambient(args.ambient_text));
        configs = conifold::enumerate_configs(ambient);
    }

    std::optional<std::pair<int, int>> window;
    if (!args.window_text.empty()) window = parse_window(args.window_text);
    const conifold::FpField field(args.prime);

    ordered_json manifest;
    manifest["prime"] = args.prime;
    manifest["seed"] = std::to_string(args.seed);
    manifest["attempts"] = args.attempts;
    if (window) manifest["window"] = ordered_json::array({window->first, window->second});
    if (!args.config_path.empty()) manifest["config_file"] = args.config_path;
    if (!args.ambient_text.empty()) manifest["ambient"] = args.ambient_text;

    ordered_json report;
    report["command"] = "analyze";
    report["manifest"] = manifest;
    ordered_json entries = ordered_json::array();
    bool all_certified = true;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const auto analysis = conifold::analyze_config(field, configs[i], args.seed,
                                                       args.attempts, window,
                                                       static_cast<int>(i));
        all_certified = all_certified && analysis.certified;
        entries.push_back(conifold::analysis_json(analysis));
    }
    report["configs"] = entries;
    emit(report, args.out_path, args.format, conifold::analysis_markdown(report["configs"]));
    return all_certified ? kExitOk : kExitPropertyFailed;
}

int cmd_verify_lemma(std::uint32_t prime, std::uint64_t seed, int trials, int max_m,
                     const std::string& out_path, const std::string& format) {
    const conifold::FpField field(prime);
    const auto stats = conifold::run_lemma_trials(field, seed, trials, max_m);
    const ordered_json report = conifold::lemma_run_json(stats, prime, seed, max_m);
    emit(report, out_path, format, conifold::lemma_markdown(report));
    return report["pass"].get<bool>() ? kExitOk : kExitPropertyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of conifold transitions for complete intersection "
                 "Calabi-Yau threefolds in products of projective spaces"};
    app.require_subcommand(1);

    std::string ambient_text, out_path, format = "json";

    auto* enumerate = app.add_subcommand("enumerate", "list valid configurations");
    enumerate->add_option("--ambient", ambient_text, "factor dimensions, e.g. 2,2")->required();
    enumerate->add_option("--out", out_path, "output path (default stdout)");
    enumerate->add_option("--format", format, "json or md")
        ->check(CLI::IsMember({"json", "md"}));

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand("analyze", "run the full verification pipeline");
    analyze->add_option("--ambient", analyze_args.ambient_text,
                        "analyze every configuration of this ambient");
    analyze->add_option("--config", analyze_args.config_path, "config file to analyze");
    analyze->add_option("--prime", analyze_args.prime, "field modulus (odd prime < 2^31)");
    analyze->add_option("--seed", analyze_args.seed, "master seed");
    analyze->add_option("--window", analyze_args.window_text, "profile window lo:hi");
    analyze->add_option("--attempts", analyze_args.attempts, "draw attempts per curve")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--out", analyze_args.out_path, "output path (default stdout)");
    analyze->add_option("--format", analyze_args.format, "json or md")
        ->check(CLI::IsMember({"json", "md"}));

    std::uint32_t lemma_prime = conifold::FpField::default_prime;
    std::uint64_t lemma_seed = 0;
    int lemma_trials = 1000, lemma_max_m = 4;
    auto* lemma = app.add_subcommand("verify-lemma", "randomized generic kernel profile trials");
    lemma->add_option("--prime", lemma_prime, "field modulus (odd prime < 2^31)");
    lemma->add_option("--seed", lemma_seed, "master seed");
    lemma->add_option("--trials", lemma_trials, "number of random degree draws")
        ->check(CLI::PositiveNumber);
    lemma->add_option("--max-m", lemma_max_m, "largest number of target degrees sampled")
        ->check(CLI::PositiveNumber);
    lemma->add_option("--out", out_path, "output path (default stdout)");
    lemma->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(ambient_text, out_path, format);
        if (analyze->parsed()) return cmd_analyze(analyze_args);
        return cmd_verify_lemma(lemma_prime, lemma_seed, lemma_trials, lemma_max_m, out_path,
                                format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}
