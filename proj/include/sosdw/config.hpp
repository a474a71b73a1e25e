#pragma once

#include "sosdw/verify.hpp"

#include <map>
#include <optional>

namespace sosdw {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int L = 0;
    double p = 0.1;
    cplx gamma;
    cplx tau;
    std::vector<cplx> x;
    std::vector<cplx> mu;
    std::optional<cplx> x0;
    std::optional<cplx> x0bar;
    std::uint64_t seed = 0;
    int draws = 20;
    Thresholds tolerances;
    std::vector<std::string> methods = {"enum"};
    int index = 0;

    ThetaContext theta_ctx() const {
        ThetaContext ctx;
        ctx.nome = p;
        return ctx;
    }
};

// JSON text -> config; complex numbers are [re, im] pairs. ParseError carries
// the underlying syntax diagnostic, ValidationError names the violated field.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// Deterministic JSON echo of a config; parse_config inverts it.
std::string serialize_config(const RunConfig& cfg);

// Materializes ModelParams, sampling x0/x0bar (seeded, guard-checked) when
// the config leaves them out.
ModelParams params_from_config(const RunConfig& cfg);

struct ComputeOutcome {
    std::map<std::string, cplx> values;  // method -> Z(X_index^0)
    struct Deviation {
        std::string label;
        double value = 0.0;
        double threshold = 0.0;
        bool pass = false;
    };
    std::vector<Deviation> deviations;
    std::string error;  // nonempty when a module error surfaced
    bool overall = true;
};

ComputeOutcome run_compute(const RunConfig& cfg);

// Report documents: schema_version, config echo, per-check results, computed
// values, overall verdict. Doubles print as %.17g; millis stays 0 unless
// timings was requested, keeping reruns byte-identical.
std::string render_compute_report(const RunConfig& cfg, const ComputeOutcome& outcome);
std::string render_verify_report(const RunConfig& cfg, const VerificationReport& report);

// Named check selections for the verify subcommand; unknown names throw
// ValidationError. "all" and "goldens" are always available.
std::vector<CheckId::Kind> suite_selection(const std::string& name);

}  // namespace sosdw
