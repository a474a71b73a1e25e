#include "sosdw/config.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace sosdw {

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt(const cplx& v) { return "[" + fmt(v.real()) + "," + fmt(v.imag()) + "]"; }

cplx parse_complex(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ValidationError(field + " must be a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<cplx> parse_complex_list(const json& j, const std::string& field, size_t want) {
    if (!j.is_array())
        throw ValidationError(field + " must be an array of [re, im] pairs");
    if (j.size() != want)
        throw ValidationError(field + " must hold exactly " + std::to_string(want) +
                              " entries, got " + std::to_string(j.size()));
    std::vector<cplx> out;
    out.reserve(want);
    for (size_t k = 0; k < j.size(); ++k)
        out.push_back(parse_complex(j[k], field + "[" + std::to_string(k) + "]"));
    return out;
}

const std::vector<std::string> kMethods = {"enum", "repA", "repD"};

void validate_method(const std::string& m) {
    for (const auto& known : kMethods)
        if (m == known) return;
    throw ValidationError("method must be one of enum, repA, repD; got \"" + m + "\"");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!j.is_object()) throw ParseError("top-level JSON value must be an object");

    RunConfig cfg;
    const auto need = [&](const char* field) -> const json& {
        if (!j.contains(field)) throw ValidationError(std::string(field) + " is required");
        return j.at(field);
    };

    const json& jl = need("L");
    if (!jl.is_number_integer()) throw ValidationError("L must be an integer");
    cfg.L = jl.get<int>();
    if (cfg.L < 1) throw ValidationError("L must be at least 1");

    if (j.contains("p")) {
        if (!j["p"].is_number()) throw ValidationError("p must be a number");
        cfg.p = j["p"].get<double>();
    }
    if (!(cfg.p > 0.0) || !(cfg.p < 1.0))
        throw ValidationError("p must lie strictly between 0 and 1");

    cfg.gamma = parse_complex(need("gamma"), "gamma");
    cfg.tau = parse_complex(need("tau"), "tau");
    cfg.x = parse_complex_list(need("x"), "x", static_cast<size_t>(cfg.L));
    cfg.mu = parse_complex_list(need("mu"), "mu", static_cast<size_t>(cfg.L));
    if (j.contains("x0")) cfg.x0 = parse_complex(j["x0"], "x0");
    if (j.contains("x0bar")) cfg.x0bar = parse_complex(j["x0bar"], "x0bar");

    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
            throw ValidationError("seed must be a non-negative integer");
        if (j["seed"].is_number_integer() && j["seed"].get<long long>() < 0)
            throw ValidationError("seed must be a non-negative integer");
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("draws")) {
        if (!j["draws"].is_number_integer()) throw ValidationError("draws must be an integer");
        cfg.draws = j["draws"].get<int>();
        if (cfg.draws < 1) throw ValidationError("draws must be at least 1");
    }
    if (j.contains("tolerances")) {
        const json& jt = j["tolerances"];
        if (!jt.is_object()) throw ValidationError("tolerances must be an object");
        for (const auto& [key, val] : jt.items()) {
            if (!val.is_number() || !(val.get<double>() > 0.0))
                throw ValidationError("tolerances." + key + " must be a positive number");
            const double d = val.get<double>();
            if (key == "identity") cfg.tolerances.identity = d;
            else if (key == "ratio") cfg.tolerances.ratio = d;
            else if (key == "golden") cfg.tolerances.golden = d;
            else if (key == "theta") cfg.tolerances.theta = d;
            else if (key == "symmetry") cfg.tolerances.symmetry = d;
            else throw ValidationError("tolerances." + key + " is not a known tolerance");
        }
    }
    if (j.contains("method")) {
        cfg.methods.clear();
        const json& jm = j["method"];
        if (jm.is_string()) {
            cfg.methods.push_back(jm.get<std::string>());
        } else if (jm.is_array()) {
            for (const auto& m : jm) {
                if (!m.is_string()) throw ValidationError("method entries must be strings");
                cfg.methods.push_back(m.get<std::string>());
            }
        } else {
            throw ValidationError("method must be a string or an array of strings");
        }
        if (cfg.methods.empty()) throw ValidationError("method must name at least one method");
        for (const auto& m : cfg.methods) validate_method(m);
    }
    if (j.contains("index")) {
        if (!j["index"].is_number_integer()) throw ValidationError("index must be an integer");
        cfg.index = j["index"].get<int>();
        if (cfg.index < 0 || cfg.index > cfg.L)
            throw ValidationError("index must lie in 0..L");
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream o;
    o << "{";
    o << "\"L\":" << cfg.L;
    o << ",\"p\":" << fmt(cfg.p);
    o << ",\"gamma\":" << fmt(cfg.gamma);
    o << ",\"tau\":" << fmt(cfg.tau);
    const auto list = [&o](const char* name, const std::vector<cplx>& vs) {
        o << ",\"" << name << "\":[";
        for (size_t k = 0; k < vs.size(); ++k) o << (k ? "," : "") << fmt(vs[k]);
        o << "]";
    };
    list("x", cfg.x);
    list("mu", cfg.mu);
    if (cfg.x0) o << ",\"x0\":" << fmt(*cfg.x0);
    if (cfg.x0bar) o << ",\"x0bar\":" << fmt(*cfg.x0bar);
    o << ",\"seed\":" << cfg.seed;
    o << ",\"draws\":" << cfg.draws;
    o << ",\"tolerances\":{\"identity\":" << fmt(cfg.tolerances.identity)
      << ",\"ratio\":" << fmt(cfg.tolerances.ratio)
      << ",\"golden\":" << fmt(cfg.tolerances.golden)
      << ",\"theta\":" << fmt(cfg.tolerances.theta)
      << ",\"symmetry\":" << fmt(cfg.tolerances.symmetry) << "}";
    o << ",\"method\":[";
    for (size_t k = 0; k < cfg.methods.size(); ++k)
        o << (k ? "," : "") << "\"" << cfg.methods[k] << "\"";
    o << "]";
    o << ",\"index\":" << cfg.index;
    o << "}";
    return o.str();
}

ModelParams params_from_config(const RunConfig& cfg) {
    ModelParams mp;
    mp.L = cfg.L;
    mp.gamma = cfg.gamma;
    mp.tau = cfg.tau;
    mp.x = cfg.x;
    mp.mu = cfg.mu;
    mp.theta_ctx = cfg.theta_ctx();
    if (cfg.x0 && cfg.x0bar) {
        mp.x0 = *cfg.x0;
        mp.x0bar = *cfg.x0bar;
        return mp;
    }
    // Draw the missing auxiliary values, keeping any explicit one; the guard
    // check always runs on the composed pair.
    std::mt19937_64 eng(cfg.seed);
    const auto uniform = [&eng](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
    };
    for (int attempt = 0; attempt < 1000; ++attempt) {
        mp.x0 = cfg.x0 ? *cfg.x0 : cplx{uniform(-1.0, 1.0), uniform(-0.5, 0.5)};
        mp.x0bar = cfg.x0bar ? *cfg.x0bar : cplx{uniform(-1.0, 1.0), uniform(-0.5, 0.5)};
        if (min_guard_theta(mp) < guard_threshold(mp.theta_ctx)) continue;
        try {
            const VariableTuple vt = make_tuple(mp);
            bool ok = true;
            for (const EquationType t : {EquationType::A, EquationType::D}) {
                const WSet ws = build_w(t, vt);
                if (det_hadamard_ratio(ws.w0, ws.det_w0) < 1e-4) ok = false;
            }
            if (!ok) continue;
        } catch (const std::exception&) {
            continue;
        }
        return mp;
    }
    throw SamplingExhausted("no guard-passing auxiliary draw after 1000 attempts");
}

ComputeOutcome run_compute(const RunConfig& cfg) {
    ComputeOutcome out;
    try {
        const ModelParams base = params_from_config(cfg);
        require_nonsingular(base);
        ModelParams target = base;
        if (cfg.index >= 1) target.x[static_cast<size_t>(cfg.index) - 1] = base.x0;
        const VariableTuple vt = make_tuple(base);
        for (const auto& m : cfg.methods) {
            if (m == "enum") out.values[m] = partition_enum(target);
            else if (m == "repA") out.values[m] = rep_partition(EquationType::A, cfg.index, vt);
            else out.values[m] = rep_partition(EquationType::D, cfg.index, vt);
        }
        for (auto a = out.values.begin(); a != out.values.end(); ++a)
            for (auto b = std::next(a); b != out.values.end(); ++b) {
                ComputeOutcome::Deviation d;
                d.label = "deviation(" + a->first + "," + b->first + ")";
                d.value = std::abs(a->second / b->second - 1.0);
                d.threshold = cfg.tolerances.ratio;
                d.pass = d.value <= d.threshold;
                out.overall = out.overall && d.pass;
                out.deviations.push_back(std::move(d));
            }
    } catch (const std::exception& e) {
        out.error = e.what();
        out.overall = false;
    }
    return out;
}

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (c == '\n') {
            out += "\\n";
        } else {
            out += c;
        }
    }
    out += '"';
    return out;
}

std::string config_echo(const RunConfig& cfg) { return serialize_config(cfg); }

void result_entry(std::ostringstream& o, const std::string& check, int L, int draw,
                  double residual_value, bool has_residual, const std::string& error,
                  double threshold, bool pass, long long millis) {
    o << "{\"check\":" << quoted(check);
    o << ",\"L\":" << L << ",\"draw\":" << draw;
    if (has_residual && !std::isnan(residual_value))
        o << ",\"residual\":" << fmt(residual_value);
    else
        o << ",\"residual\":null";
    if (!error.empty()) o << ",\"error\":" << quoted(error);
    o << ",\"threshold\":" << fmt(threshold);
    o << ",\"verdict\":" << (pass ? "\"pass\"" : "\"fail\"");
    o << ",\"millis\":" << millis << "}";
}

}  // namespace

std::string render_compute_report(const RunConfig& cfg, const ComputeOutcome& outcome) {
    std::ostringstream o;
    o << "{\"schema_version\":1,\"mode\":\"compute\"";
    o << ",\"config\":" << config_echo(cfg);
    o << ",\"results\":[";
    bool first = true;
    for (const auto& d : outcome.deviations) {
        if (!first) o << ",";
        first = false;
        result_entry(o, d.label, cfg.L, 0, d.value, true, "", d.threshold, d.pass, 0);
    }
    if (!outcome.error.empty()) {
        if (!first) o << ",";
        result_entry(o, "compute", cfg.L, 0, 0.0, false, outcome.error,
                     cfg.tolerances.ratio, false, 0);
    }
    o << "]";
    o << ",\"values\":{";
    bool firstv = true;
    for (const auto& [name, value] : outcome.values) {
        if (!firstv) o << ",";
        firstv = false;
        o << quoted(name) << ":" << fmt(value);
    }
    o << "}";
    o << ",\"overall\":" << (outcome.overall ? "\"pass\"" : "\"fail\"") << "}";
    return o.str();
}

std::string render_verify_report(const RunConfig& cfg, const VerificationReport& report) {
    std::ostringstream o;
    o << "{\"schema_version\":1,\"mode\":\"verify\"";
    o << ",\"config\":" << config_echo(cfg);
    o << ",\"results\":[";
    for (size_t k = 0; k < report.results.size(); ++k) {
        const CheckResult& cr = report.results[k];
        if (k) o << ",";
        result_entry(o, cr.id.name(), cr.L, cr.draw, cr.residual, cr.error.empty(), cr.error,
                     cr.threshold, cr.pass, cr.millis);
    }
    o << "]";
    o << ",\"values\":{}";
    o << ",\"overall\":" << (report.overall ? "\"pass\"" : "\"fail\"") << "}";
    return o.str();
}

std::vector<CheckId::Kind> suite_selection(const std::string& name) {
    using K = CheckId::Kind;
    if (name == "all") return all_check_kinds();
    if (name == "goldens") return {K::Golden};
    if (name == "identities")
        return {K::EqA, K::EqD, K::ModA, K::ModD, K::Unfolded, K::Hz, K::Hzsys};
    if (name == "ratios") return {K::Ztoz, K::RepA, K::RepD};
    if (name == "eqA") return {K::EqA};
    if (name == "eqD") return {K::EqD};
    if (name == "modA") return {K::ModA};
    if (name == "modD") return {K::ModD};
    if (name == "unfolded") return {K::Unfolded};
    if (name == "hz") return {K::Hz};
    if (name == "hzsys") return {K::Hzsys};
    if (name == "ztoz") return {K::Ztoz};
    if (name == "repA") return {K::RepA};
    if (name == "repD") return {K::RepD};
    if (name == "golden") return {K::Golden};
    if (name == "theta_props") return {K::ThetaProps};
    if (name == "symmetry") return {K::Symmetry};
    throw ValidationError("unknown check selection \"" + name + "\"");
}

}  // namespace sosdw
