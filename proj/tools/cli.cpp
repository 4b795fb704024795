#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "andrasfai/circulant.hpp"
#include "andrasfai/errors.hpp"
#include "andrasfai/serialize.hpp"
#include "andrasfai/verifier.hpp"

namespace andrasfai::cli {

namespace {

struct Config {
    std::size_t k = 0;
    std::size_t k_from = 0;
    std::size_t k_to = 0;
    std::string format;
    std::string output;
    bool no_oracle = false;
    std::size_t oracle_limit = 600;
    std::optional<double> tol_sym;
    std::optional<double> tol_cluster;
    std::size_t threads = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Tolerances resolve_tolerances(const Config& cfg, const Hooks& hooks) {
    Tolerances tol;
    const char* env = hooks.getenv ? hooks.getenv("SPECTRA_TOL_CLUSTER") : std::getenv("SPECTRA_TOL_CLUSTER");
    if (env != nullptr && *env != '\0') {
        char* end = nullptr;
        tol.cluster = std::strtod(env, &end);
        if (end == env || *end != '\0') {
            throw UsageError(std::string("SPECTRA_TOL_CLUSTER is not a number: ") + env);
        }
    }
    if (cfg.tol_cluster) tol.cluster = *cfg.tol_cluster;
    if (cfg.tol_sym) tol.sym = *cfg.tol_sym;
    if (!(tol.sym > 0.0) || !(tol.cluster > 0.0)) {
        throw UsageError("tolerances must be positive");
    }
    if (tol.sym > tol.cluster) {
        throw UsageError("tol-sym must not exceed tol-cluster");
    }
    return tol;
}

std::string default_format(const Config& cfg, const Hooks& hooks) {
    if (!cfg.format.empty()) return cfg.format;
    return (hooks.interactive && cfg.output.empty()) ? "table" : "json";
}

void emit(const Config& cfg, std::ostream& out, const std::string& text) {
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open output file '" + cfg.output + "'");
    }
    file << text;
    if (!file.flush()) {
        throw UsageError("failed writing output file '" + cfg.output + "'");
    }
}

int cmd_spectrum(const Config& cfg, std::ostream& out, const Hooks& hooks) {
    if (cfg.k < 1) throw UsageError("spectrum: k must be at least 1");
    const auto tol = resolve_tolerances(cfg, hooks);
    const auto spectrum = spectrum_closed_form(cfg.k);
    const auto format = default_format(cfg, hooks);
    if (format == "json") {
        emit(cfg, out, spectrum_to_json(spectrum));
    } else if (format == "csv") {
        emit(cfg, out, spectrum_to_csv(spectrum, tol.cluster));
    } else if (format == "table") {
        emit(cfg, out, spectrum_to_table(spectrum, tol.cluster));
    } else {
        throw UsageError("spectrum: unsupported format '" + format + "'");
    }
    return kExitOk;
}

int cmd_verify(const Config& cfg, std::size_t k_min, std::size_t k_max, std::ostream& out, const Hooks& hooks) {
    if (k_min < 2) {
        throw UsageError("verification requires k >= 2 (And(1) = K_2 is outside the theorems' range)");
    }
    if (k_min > k_max) throw UsageError("sweep: --from must not exceed --to");

    VerifyOptions options;
    options.tol = resolve_tolerances(cfg, hooks);
    options.oracle_limit = cfg.no_oracle ? 0 : cfg.oracle_limit;
    options.threads = cfg.threads;
    options.tamper_prediction = hooks.tamper_prediction;

    const auto report = run_sweep(k_min, k_max, options);
    const auto format = default_format(cfg, hooks);
    if (format == "json") {
        emit(cfg, out, report_to_json(report));
    } else if (format == "table") {
        emit(cfg, out, report_to_table(report));
    } else {
        throw UsageError("verify: unsupported format '" + format + "'");
    }
    return report.all_passed() ? kExitOk : kExitFail;
}

int cmd_export(const Config& cfg, std::ostream& out) {
    if (cfg.k < 1) throw UsageError("export: k must be at least 1");
    const std::string format = cfg.format.empty() ? "dot" : cfg.format;
    GraphFormat graph_format;
    try {
        graph_format = parse_graph_format(format);
    } catch (const InvalidParameter& e) {
        throw UsageError(std::string("export: ") + e.what());
    }
    emit(cfg, out, export_graph(andrasfai_graph(cfg.k), graph_format));
    return kExitOk;
}

void add_tolerance_flags(CLI::App* sub, Config& cfg) {
    sub->add_option("--tol-sym", cfg.tol_sym, "Palindrome / witness tolerance (default 1e-9)");
    sub->add_option("--tol-cluster", cfg.tol_cluster,
                    "Eigenvalue clustering tolerance (default 1e-8, env SPECTRA_TOL_CLUSTER)");
}

void add_oracle_flags(CLI::App* sub, Config& cfg) {
    sub->add_flag("--no-oracle", cfg.no_oracle, "Skip the Jacobi oracle");
    sub->add_option("--oracle-limit", cfg.oracle_limit, "Largest n = 3k-1 the oracle runs on")
        ->capture_default_str();
    sub->add_option("--threads", cfg.threads, "Worker threads (0 = hardware concurrency)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
    Config cfg;
    CLI::App app{"Spectra of Andrasfai graphs And(k) = Cay(Z_{3k-1}, {x = 1 mod 3})", "andrasfai"};
    app.require_subcommand(1);

    auto* spectrum = app.add_subcommand("spectrum", "Closed-form adjacency spectrum of And(k)");
    spectrum->add_option("--k", cfg.k, "Andrasfai parameter (k >= 1)")->required();
    spectrum->add_option("--format", cfg.format, "table | json | csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    spectrum->add_option("--output,-o", cfg.output, "Write to a file instead of stdout");
    add_tolerance_flags(spectrum, cfg);

    auto* verify = app.add_subcommand("verify", "Check every spectral claim for a single k");
    verify->add_option("--k", cfg.k, "Andrasfai parameter (k >= 2)")->required();
    verify->add_option("--format", cfg.format, "json | table")->check(CLI::IsMember({"json", "table"}));
    verify->add_option("--output,-o", cfg.output, "Write to a file instead of stdout");
    add_tolerance_flags(verify, cfg);
    add_oracle_flags(verify, cfg);

    auto* sweep = app.add_subcommand("sweep", "Check every spectral claim over a range of k");
    sweep->add_option("--from", cfg.k_from, "Smallest k (>= 2)")->required();
    sweep->add_option("--to", cfg.k_to, "Largest k")->required();
    sweep->add_option("--format", cfg.format, "json | table")->check(CLI::IsMember({"json", "table"}));
    sweep->add_option("--output,-o", cfg.output, "Write to a file instead of stdout");
    add_tolerance_flags(sweep, cfg);
    add_oracle_flags(sweep, cfg);

    auto* exporter = app.add_subcommand("export", "Write And(k) as DOT, an edge list, or JSON");
    exporter->add_option("--k", cfg.k, "Andrasfai parameter (k >= 1)")->required();
    exporter->add_option("--format", cfg.format, "dot | edge-list | json")
        ->check(CLI::IsMember({"dot", "edge-list", "json"}));
    exporter->add_option("--output,-o", cfg.output, "Write to a file instead of stdout");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("andrasfai");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(cfg, out, hooks);
        if (verify->parsed()) return cmd_verify(cfg, cfg.k, cfg.k, out, hooks);
        if (sweep->parsed()) return cmd_verify(cfg, cfg.k_from, cfg.k_to, out, hooks);
        if (exporter->parsed()) return cmd_export(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace andrasfai::cli
