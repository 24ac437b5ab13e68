// Command-line surface over the qecenum library: inspect codes, emit
// enumerator tables, metric curves and rankings, run the built-in
// verification suites, and drive seeded Monte Carlo experiments.
//
// Exit codes: 0 success, 1 usage error, 2 validation error, 3 verification
// failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qecenum/catalog.hpp"
#include "qecenum/code.hpp"
#include "qecenum/enumerators.hpp"
#include "qecenum/io.hpp"
#include "qecenum/metrics.hpp"
#include "qecenum/monte_carlo.hpp"
#include "qecenum/verify.hpp"

namespace {

using namespace qecenum;

struct CodeSource {
    std::string catalog_name;
    std::string file;

    AdditiveCode load() const {
        if (!catalog_name.empty()) return catalog(catalog_name);
        return load_code_file(file);
    }
};

void add_code_source(CLI::App* cmd, CodeSource& src) {
    auto* by_name = cmd->add_option("--catalog", src.catalog_name, "built-in code name (e.g. G5)");
    auto* by_file = cmd->add_option("--code", src.file, "path to a code file");
    by_name->excludes(by_file);
    cmd->final_callback([&src, cmd] {
        if (src.catalog_name.empty() && src.file.empty())
            throw CLI::RequiredError(cmd->get_name() + " requires --catalog or --code");
    });
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << content;
}

std::vector<std::string> split_names(const std::string& list) {
    std::vector<std::string> names;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) names.push_back(item);
    return names;
}

std::uint32_t parse_subset(const std::string& list, int n) {
    std::uint32_t mask = 0;
    for (const auto& tok : split_names(list)) {
        const int idx = std::stoi(tok);
        if (idx < 1 || idx > n)
            throw std::invalid_argument("subset index " + tok + " outside {1.." + std::to_string(n) + "}");
        mask |= 1u << (idx - 1);
    }
    return mask;
}

int cmd_info(const CodeSource& src) {
    const AdditiveCode code = src.load();
    const CodeParameters params = parameters(code);
    if (!code.name().empty()) std::cout << "name: " << code.name() << "\n";
    std::cout << "parameters: [[" << params.n << "," << params.k << "," << params.d << "]] "
              << (params.pure ? "pure" : "impure") << "\n";
    std::cout << "|C| = " << params.code_size() << "  |C_perp| = " << params.dual_size() << "\n";
    std::cout << "generators:\n";
    for (const auto& row : code.source_rows()) std::cout << "  " << row.to_string() << "\n";
    return 0;
}

int cmd_enums(const CodeSource& src, const std::string& format, const std::string& out_path) {
    const AdditiveCode code = src.load();
    const EnumeratorSet e = enumerator_set(code);
    if (format == "csv")
        write_output(out_path, enums_csv(e));
    else
        write_output(out_path, enums_json(e).dump(2) + "\n");
    return 0;
}

int cmd_curves(const CodeSource& src, double pmin, double pmax, int points, const std::string& format,
               const std::string& out_path) {
    const AdditiveCode code = src.load();
    const auto curve = metric_curve(enumerator_set(code), coset_table(code), log_grid(pmin, pmax, points));
    if (format == "csv")
        write_output(out_path, curve_csv(curve));
    else
        write_output(out_path, curve_json(curve).dump(2) + "\n");
    return 0;
}

int cmd_rank(const std::string& mode_name, const std::string& codes_list, const std::string& format,
             const std::string& out_path) {
    const RankMode mode = rank_mode_from_string(mode_name);
    const std::vector<std::string> names =
        codes_list.empty() ? default_ranking_names() : split_names(codes_list);
    std::vector<AdditiveCode> codes;
    for (const auto& name : names) codes.push_back(catalog(name));
    const auto entries = rank_codes(codes, mode);
    if (format == "text")
        write_output(out_path, rank_table(entries));
    else
        write_output(out_path, rank_json(entries).dump(2) + "\n");
    return 0;
}

int cmd_verify(const std::string& level_name, std::uint64_t seed) {
    const VerifyLevel level = level_name == "full" ? VerifyLevel::Full : VerifyLevel::Quick;
    const auto results = run_verification(level, seed);
    int failures = 0;
    for (const auto& res : results) {
        std::cout << (res.passed ? "PASS" : "FAIL") << "  " << res.name;
        if (!res.passed) {
            std::cout << "  [" << res.detail << "]";
            ++failures;
        }
        std::cout << "\n";
    }
    std::cout << results.size() - static_cast<size_t>(failures) << "/" << results.size()
              << " checks passed\n";
    return failures == 0 ? 0 : 3;
}

struct McOptions {
    std::string experiment = "detect";
    std::string subset;
    int m = -1;
    double p = -1;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
};

int cmd_mc(const CodeSource& src, const McOptions& opt) {
    const AdditiveCode code = src.load();
    int modes = 0;
    if (!opt.subset.empty()) ++modes;
    if (opt.m >= 0) ++modes;
    if (opt.p >= 0) ++modes;
    if (modes != 1)
        throw std::invalid_argument("exactly one of --subset, --m, --p selects the error mode");
    ErrorSpec spec = !opt.subset.empty() ? ErrorSpec::subset(parse_subset(opt.subset, code.length()))
                     : opt.m >= 0        ? ErrorSpec::count(opt.m)
                                         : ErrorSpec::channel(opt.p);

    nlohmann::json out;
    if (opt.experiment == "detect") {
        const auto est = mc_detection(code, spec, opt.samples, opt.seed);
        out = {{"transmission", mc_report_json(est.transmission)},
               {"fidelity_numerator", mc_report_json(est.fidelity_numerator)}};
    } else {
        const auto table = coset_table(code);
        const auto est = mc_correction(code, table, p_zero_recovery(table), spec, opt.samples, opt.seed);
        out = {{"fidelity", mc_report_json(est)}};
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weight enumerators and failure probabilities for qubit stabilizer codes"};
    app.require_subcommand(1);

    CodeSource info_src;
    auto* info = app.add_subcommand("info", "print code parameters and generators");
    add_code_source(info, info_src);

    CodeSource enums_src;
    std::string enums_format = "csv", enums_out;
    auto* enums = app.add_subcommand("enums", "emit weight enumerator table");
    add_code_source(enums, enums_src);
    enums->add_option("--format", enums_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    enums->add_option("--out", enums_out, "output file (default stdout)");

    CodeSource curves_src;
    double pmin = 1e-3, pmax = 1.0;
    int points = 200;
    std::string curves_format = "csv", curves_out;
    auto* curves = app.add_subcommand("curves", "emit metric curves over a log-spaced p-grid");
    add_code_source(curves, curves_src);
    curves->add_option("--pmin", pmin, "smallest p (default 1e-3)");
    curves->add_option("--pmax", pmax, "largest p (default 1)");
    curves->add_option("--points", points, "grid size (default 200)");
    curves->add_option("--format", curves_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    curves->add_option("--out", curves_out, "output file (default stdout)");

    std::string rank_mode = "detection", rank_codes_list, rank_format = "text", rank_out;
    auto* rank = app.add_subcommand("rank", "rank codes by (d, c) worst to best");
    rank->add_option("--mode", rank_mode, "detection or correction")
        ->required()
        ->check(CLI::IsMember({"detection", "correction"}));
    rank->add_option("--codes", rank_codes_list,
                     "comma-separated catalog names (default: all except G6b)");
    rank->add_option("--format", rank_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    rank->add_option("--out", rank_out, "output file (default stdout)");

    std::string verify_level = "quick";
    std::uint64_t verify_seed = 20240901;
    auto* verify = app.add_subcommand("verify", "run the self-check suites");
    verify->add_option("--level", verify_level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--seed", verify_seed, "seed for the randomized full-level checks");

    CodeSource mc_src;
    McOptions mc_opt;
    auto* mc = app.add_subcommand("mc", "Monte Carlo detection/correction experiment (JSON report)");
    add_code_source(mc, mc_src);
    mc->add_option("--experiment", mc_opt.experiment, "detect or correct")
        ->check(CLI::IsMember({"detect", "correct"}));
    mc->add_option("--subset", mc_opt.subset, "fixed error support, 1-based indices (e.g. 1,3)");
    mc->add_option("--m", mc_opt.m, "number of corrupted qubits");
    mc->add_option("--p", mc_opt.p, "depolarizing channel parameter");
    mc->add_option("--samples", mc_opt.samples, "sample count (default 1e5)");
    mc->add_option("--seed", mc_opt.seed, "RNG seed")->required();

    try {
        app.parse(argc, argv);
        if (info->parsed()) return cmd_info(info_src);
        if (enums->parsed()) return cmd_enums(enums_src, enums_format, enums_out);
        if (curves->parsed()) return cmd_curves(curves_src, pmin, pmax, points, curves_format, curves_out);
        if (rank->parsed()) return cmd_rank(rank_mode, rank_codes_list, rank_format, rank_out);
        if (verify->parsed()) return cmd_verify(verify_level, verify_seed);
        if (mc->parsed()) return cmd_mc(mc_src, mc_opt);
        return 1;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
