#include "sosdw/config.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace sosdw;

namespace {

int write_out(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text << "\n";
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot open output file: " << path << "\n";
        return 2;
    }
    out << text << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"domain-wall partition functions of the elliptic solid-on-solid model"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string suite = "all";
    std::vector<std::string> methods;
    bool timings = false;
    std::uint64_t seed = 0;
    int draws = 1;
    int index = 0;
    int sample_L = 1;

    CLI::App* compute = app.add_subcommand("compute", "evaluate the partition function");
    compute->add_option("--config", config_path, "JSON config file")->required();
    compute->add_option("--method", methods,
                        "methods to cross-check (enum, repA, repD); overrides the config");
    CLI::Option* index_opt =
        compute->add_option("--index", index, "substituted-set index, 0 = base set");
    compute->add_option("--out", out_path, "write the report to this file instead of stdout");
    compute->add_flag("--timings", timings, "record wall-clock times in the report");

    CLI::App* verify = app.add_subcommand("verify", "run the functional-equation check suite");
    verify->add_option("--config", config_path, "JSON config file")->required();
    verify->add_option("--suite", suite,
                       "check selection: all, identities, ratios, goldens, or a single name");
    CLI::Option* seed_opt = verify->add_option("--seed", seed, "override the config seed");
    CLI::Option* draws_opt =
        verify->add_option("--draws", draws, "override the config draw count");
    verify->add_option("--out", out_path, "write the report to this file instead of stdout");
    verify->add_flag("--timings", timings, "record wall-clock times in the report");

    CLI::App* sample = app.add_subcommand("sample", "emit a guard-passing random config");
    sample->add_option("L", sample_L, "system size")->required();
    sample->add_option("--seed", seed, "RNG seed");
    sample->add_option("--out", out_path, "write the config to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) {
            RunConfig cfg = load_config(config_path);
            if (!methods.empty()) cfg.methods = methods;
            if (index_opt->count() > 0) cfg.index = index;
            cfg = parse_config(serialize_config(cfg));  // revalidate the overrides
            const ComputeOutcome outcome = run_compute(cfg);
            const int rc = write_out(render_compute_report(cfg, outcome), out_path);
            if (rc != 0) return rc;
            return outcome.overall ? 0 : 1;
        }
        if (verify->parsed()) {
            RunConfig cfg = load_config(config_path);
            if (seed_opt->count() > 0) cfg.seed = seed;
            if (draws_opt->count() > 0) cfg.draws = draws;
            const std::vector<CheckId::Kind> kinds = suite_selection(suite);
            const VerificationReport report = run_suite(
                {cfg.L}, cfg.draws, cfg.seed, kinds, cfg.tolerances, timings, cfg.theta_ctx());
            const int rc = write_out(render_verify_report(cfg, report), out_path);
            if (rc != 0) return rc;
            return report.overall ? 0 : 1;
        }
        const ModelParams mp = sample_params(sample_L, seed, ThetaContext{});
        RunConfig cfg;
        cfg.L = mp.L;
        cfg.p = mp.theta_ctx.nome;
        cfg.gamma = mp.gamma;
        cfg.tau = mp.tau;
        cfg.x = mp.x;
        cfg.mu = mp.mu;
        cfg.x0 = mp.x0;
        cfg.x0bar = mp.x0bar;
        cfg.seed = seed;
        return write_out(serialize_config(cfg), out_path);
    } catch (const ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
