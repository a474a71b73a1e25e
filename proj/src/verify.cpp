#include "sosdw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

namespace sosdw {

namespace {

constexpr int kMaxAttempts = 1000;
constexpr std::uint64_t kThetaPropSeed = 0x5eedc0de;
// Sampling rejects draws whose W_0 Hadamard ratio falls below this for either
// type: such systems are close enough to singular that double-precision
// determinant ratios lose the margin the ratio checks need.
constexpr double kConditionGuard = 1e-4;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
};

cplx draw_point(Rng& rng) { return {rng.range(-1.0, 1.0), rng.range(-0.5, 0.5)}; }

bool guards_hold(const ModelParams& mp) {
    if (min_guard_theta(mp) < guard_threshold(mp.theta_ctx)) return false;
    try {
        const VariableTuple vt = make_tuple(mp);
        for (const EquationType t : {EquationType::A, EquationType::D}) {
            const WSet ws = build_w(t, vt);
            if (det_hadamard_ratio(ws.w0, ws.det_w0) < kConditionGuard) return false;
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

ModelParams substituted(const ModelParams& base, int i, const cplx& value) {
    ModelParams mp = base;
    mp.x[static_cast<size_t>(i) - 1] = value;
    return mp;
}

double identity_residual(const std::vector<cplx>& terms) {
    cplx sum = 0.0;
    double scale = 0.0;
    for (const cplx& t : terms) {
        sum += t;
        scale = std::max(scale, std::abs(t));
    }
    return std::abs(sum) / scale;
}

double original_eq_residual(EquationType t, const ModelParams& mp) {
    const VariableTuple vt = make_tuple(mp);
    ModelParams shifted = mp;
    shifted.tau += (t == EquationType::A) ? -mp.gamma : mp.gamma;
    std::vector<cplx> terms;
    cplx lead = m0_orig(t, vt) * partition_enum(shifted);
    if (t == EquationType::A) lead *= testhooks::eqa_coeff_fault;
    terms.push_back(lead);
    terms.push_back(n_orig(t, 0, vt) * partition_enum(mp));
    for (int i = 1; i <= mp.L; ++i)
        terms.push_back(n_orig(t, i, vt) * partition_enum(substituted(mp, i, mp.x0)));
    return identity_residual(terms);
}

double modified_eq_residual(EquationType t, const ModelParams& mp) {
    const VariableTuple vt = make_tuple(mp);
    std::vector<cplx> terms;
    terms.push_back(m0_mod(t, vt) * partition_enum(mp));
    for (int i = 1; i <= mp.L; ++i) {
        terms.push_back(n_mod(t, i, vt) * partition_enum(substituted(mp, i, mp.x0)));
        terms.push_back(nbar_mod(t, i, vt) * partition_enum(substituted(mp, i, mp.x0bar)));
    }
    return identity_residual(terms);
}

double unfolded_residual(int l, int m, const ModelParams& mp) {
    const VariableTuple vt = make_tuple(mp);
    double worst = 0.0;
    for (const EquationType t : {EquationType::A, EquationType::D}) {
        std::vector<cplx> terms;
        UnfoldedSlot p0;
        p0.kind = UnfoldedSlot::Kind::P0;
        terms.push_back(unfolded_coeff(t, l, m, p0, vt) * partition_enum(mp));
        for (int j = 1; j <= mp.L; ++j) {
            UnfoldedSlot q;
            q.kind = UnfoldedSlot::Kind::Q;
            q.j = j;
            terms.push_back(unfolded_coeff(t, l, m, q, vt) *
                            partition_enum(substituted(mp, j, mp.x0)));
            UnfoldedSlot qb;
            qb.kind = UnfoldedSlot::Kind::Qbar;
            qb.j = j;
            terms.push_back(unfolded_coeff(t, l, m, qb, vt) *
                            partition_enum(substituted(mp, j, mp.x0bar)));
        }
        for (int i = 1; i <= mp.L; ++i)
            for (int j = i + 1; j <= mp.L; ++j) {
                UnfoldedSlot rr;
                rr.kind = UnfoldedSlot::Kind::R;
                rr.i = i;
                rr.j = j;
                terms.push_back(unfolded_coeff(t, l, m, rr, vt) *
                                partition_enum(substituted(substituted(mp, i, mp.x0), j, mp.x0bar)));
            }
        worst = std::max(worst, identity_residual(terms));
    }
    return worst;
}

double hz_residual(EquationType t, const ModelParams& mp) {
    const VariableTuple vt = make_tuple(mp);
    std::vector<cplx> terms;
    terms.push_back(h_fund(t, 0, vt) * partition_enum(mp));
    for (int i = 1; i <= mp.L; ++i)
        terms.push_back(h_fund(t, i, vt) * partition_enum(substituted(mp, i, mp.x0)));
    return identity_residual(terms);
}

double hzsys_residual(EquationType t, int j, const ModelParams& mp) {
    const VariableTuple vt = make_tuple(mp);
    std::vector<cplx> terms;
    terms.push_back(h_sys(t, 0, j, vt) * partition_enum(mp));
    for (int i = 1; i <= mp.L; ++i)
        terms.push_back(h_sys(t, i, j, vt) * partition_enum(substituted(mp, i, mp.x0)));
    return identity_residual(terms);
}

double ztoz_residual(EquationType t, int i, const ModelParams& mp) {
    const VariableTuple vt = make_tuple(mp);
    const WSet ws = build_w(t, vt, SubstReading::Row);
    const cplx lhs = det(ws.wi[static_cast<size_t>(i) - 1]) / ws.det_w0;
    const cplx rhs = partition_enum(substituted(mp, i, mp.x0)) / partition_enum(mp);
    return std::abs(lhs / rhs - 1.0);
}

double rep_residual(EquationType t, int i, const ModelParams& mp) {
    const VariableTuple vt = make_tuple(mp);
    const cplx rep = rep_partition(t, i, vt);
    const cplx ze =
        (i == 0) ? partition_enum(mp) : partition_enum(substituted(mp, i, mp.x0));
    return std::abs(rep / ze - 1.0);
}

// Oddness, the imaginary quasi-period and the real quasi-period over 1000
// seeded points, each deviation scaled onto the common 1e-12 threshold
// (native tolerances 1e-14, 1e-12 and 1e-10).
double theta_props_residual(const ModelParams& mp) {
    const ThetaContext& ctx = mp.theta_ctx;
    const double floor_mag = kernel_floor(ctx);
    const double lp = std::log(ctx.nome);
    const cplx ipi(0.0, 3.14159265358979323846264338327950288);
    Rng rng(kThetaPropSeed);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const cplx x{rng.range(-2.0, 2.0), rng.range(-3.0, 3.0)};
        const cplx xr{rng.range(-1.0, 1.0), rng.range(-3.0, 3.0)};
        const cplx tx = theta_eval(x, ctx);

        const double odd = std::abs(tx + theta_eval(-x, ctx)) /
                           std::max(std::abs(tx), floor_mag);
        const double qp1 = std::abs(theta_eval(x + ipi, ctx) + tx) /
                           std::max(std::abs(tx), floor_mag);
        const cplx lhs = theta_eval(xr + lp, ctx);
        const cplx rhs = -std::exp(-2.0 * xr) / ctx.nome * theta_eval(xr, ctx);
        const double qp2 =
            std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), floor_mag});

        worst = std::max({worst, odd * 1e2, qp1, qp2 * 1e-2});
    }
    return worst;
}

double symmetry_residual(const ModelParams& mp) {
    const cplx base = partition_enum(mp);
    double worst = 0.0;
    for (int k = 1; k < mp.L; ++k) {
        ModelParams sw = mp;
        std::swap(sw.x[static_cast<size_t>(k) - 1], sw.x[static_cast<size_t>(k)]);
        worst = std::max(worst, std::abs(partition_enum(sw) / base - 1.0));
    }
    return worst;
}

}  // namespace

std::string CheckId::name() const {
    const auto idx = [](int v) { return std::to_string(v); };
    switch (kind) {
        case Kind::EqA: return "eqA";
        case Kind::EqD: return "eqD";
        case Kind::ModA: return "modA";
        case Kind::ModD: return "modD";
        case Kind::Unfolded:
            if (a == 0 && b == 0) return "unfolded(0,0bar)";
            return "unfolded(" + idx(a) + "," + idx(b) + ")";
        case Kind::Hz: return std::string("hz(") + type_name(type) + ")";
        case Kind::Hzsys: return std::string("hzsys(") + type_name(type) + "," + idx(b) + ")";
        case Kind::Ztoz: return std::string("ztoz(") + type_name(type) + "," + idx(b) + ")";
        case Kind::RepA: return "repA(" + idx(b) + ")";
        case Kind::RepD: return "repD(" + idx(b) + ")";
        case Kind::Golden: return "golden(" + idx(a) + "," + type_name(type) + ")";
        case Kind::ThetaProps: return "theta_props";
        case Kind::Symmetry: return "symmetry";
    }
    return "unknown";
}

double Thresholds::for_kind(CheckId::Kind k) const {
    switch (k) {
        case CheckId::Kind::EqA:
        case CheckId::Kind::EqD:
        case CheckId::Kind::ModA:
        case CheckId::Kind::ModD:
        case CheckId::Kind::Unfolded:
        case CheckId::Kind::Hz:
        case CheckId::Kind::Hzsys: return identity;
        case CheckId::Kind::Ztoz:
        case CheckId::Kind::RepA:
        case CheckId::Kind::RepD: return ratio;
        case CheckId::Kind::Golden: return golden;
        case CheckId::Kind::ThetaProps: return theta;
        case CheckId::Kind::Symmetry: return symmetry;
    }
    return identity;
}

ModelParams sample_params(int L, std::uint64_t seed, const ThetaContext& ctx) {
    if (L < 1) throw IndexOutOfRange("sampling needs L >= 1");
    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        ModelParams mp;
        mp.L = L;
        mp.theta_ctx = ctx;
        mp.x.resize(static_cast<size_t>(L));
        mp.mu.resize(static_cast<size_t>(L));
        for (auto& v : mp.x) v = draw_point(rng);
        for (auto& v : mp.mu) v = draw_point(rng);
        mp.x0 = draw_point(rng);
        mp.x0bar = draw_point(rng);
        mp.tau = draw_point(rng);
        mp.gamma = {rng.range(0.2, 0.8), 0.0};
        if (guards_hold(mp)) return mp;
    }
    throw SamplingExhausted("no guard-passing draw after " + std::to_string(kMaxAttempts) +
                            " attempts");
}

ModelParams resample_aux(const ModelParams& base, std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        ModelParams mp = base;
        mp.x0 = draw_point(rng);
        mp.x0bar = draw_point(rng);
        if (guards_hold(mp)) return mp;
    }
    throw SamplingExhausted("no guard-passing auxiliary redraw after " +
                            std::to_string(kMaxAttempts) + " attempts");
}

double residual(const CheckId& check, const ModelParams& params) {
    switch (check.kind) {
        case CheckId::Kind::EqA: return original_eq_residual(EquationType::A, params);
        case CheckId::Kind::EqD: return original_eq_residual(EquationType::D, params);
        case CheckId::Kind::ModA: return modified_eq_residual(EquationType::A, params);
        case CheckId::Kind::ModD: return modified_eq_residual(EquationType::D, params);
        case CheckId::Kind::Unfolded: return unfolded_residual(check.a, check.b, params);
        case CheckId::Kind::Hz: return hz_residual(check.type, params);
        case CheckId::Kind::Hzsys: return hzsys_residual(check.type, check.b, params);
        case CheckId::Kind::Ztoz: return ztoz_residual(check.type, check.b, params);
        case CheckId::Kind::RepA: return rep_residual(EquationType::A, check.b, params);
        case CheckId::Kind::RepD: return rep_residual(EquationType::D, check.b, params);
        case CheckId::Kind::Golden:
            return golden_check(check.a, check.type, make_tuple(params));
        case CheckId::Kind::ThetaProps: return theta_props_residual(params);
        case CheckId::Kind::Symmetry: return symmetry_residual(params);
    }
    throw IndexOutOfRange("unknown check kind");
}

std::vector<CheckId::Kind> all_check_kinds() {
    return {CheckId::Kind::EqA,    CheckId::Kind::EqD,    CheckId::Kind::ModA,
            CheckId::Kind::ModD,   CheckId::Kind::Unfolded, CheckId::Kind::Hz,
            CheckId::Kind::Hzsys,  CheckId::Kind::Ztoz,   CheckId::Kind::RepA,
            CheckId::Kind::RepD,   CheckId::Kind::Golden, CheckId::Kind::ThetaProps,
            CheckId::Kind::Symmetry};
}

std::vector<CheckId> expand_check(CheckId::Kind kind, int L) {
    std::vector<CheckId> out;
    const auto push = [&](EquationType t, int a, int b) {
        CheckId id;
        id.kind = kind;
        id.type = t;
        id.a = a;
        id.b = b;
        out.push_back(id);
    };
    switch (kind) {
        case CheckId::Kind::EqA:
        case CheckId::Kind::EqD:
        case CheckId::Kind::ModA:
        case CheckId::Kind::ModD:
        case CheckId::Kind::ThetaProps:
        case CheckId::Kind::Symmetry: push(EquationType::A, 0, 0); break;
        case CheckId::Kind::Unfolded:
            push(EquationType::A, 0, 0);
            for (int m = 1; m <= L; ++m) push(EquationType::A, 0, m);
            for (int l = 1; l <= L; ++l)
                for (int m = l + 1; m <= L; ++m) push(EquationType::A, l, m);
            break;
        case CheckId::Kind::Hz:
            push(EquationType::A, 0, 0);
            push(EquationType::D, 0, 0);
            break;
        case CheckId::Kind::Hzsys:
            for (const EquationType t : {EquationType::A, EquationType::D})
                for (int j = 1; j <= L; ++j) push(t, 0, j);
            break;
        case CheckId::Kind::Ztoz:
            for (const EquationType t : {EquationType::A, EquationType::D})
                for (int i = 1; i <= L; ++i) push(t, 0, i);
            break;
        case CheckId::Kind::RepA:
        case CheckId::Kind::RepD:
            for (int i = 0; i <= L; ++i) push(EquationType::A, 0, i);
            break;
        case CheckId::Kind::Golden:
            if (L <= 2) {
                push(EquationType::A, L, 0);
                push(EquationType::D, L, 0);
            }
            break;
    }
    return out;
}

VerificationReport run_suite(const std::vector<int>& L_list, int draws, std::uint64_t seed,
                             const std::vector<CheckId::Kind>& checks,
                             const Thresholds& thresholds, bool timings,
                             const ThetaContext& ctx) {
    VerificationReport report;
    report.L_list = L_list;
    report.draws = draws;
    report.seed = seed;
    report.thresholds = thresholds;
    for (const int L : L_list) {
        for (int d = 0; d < draws; ++d) {
            ModelParams mp;
            std::string sample_error;
            try {
                mp = sample_params(L, seed + static_cast<std::uint64_t>(d), ctx);
            } catch (const std::exception& e) {
                sample_error = e.what();
            }
            for (const CheckId::Kind kind : checks) {
                for (const CheckId& id : expand_check(kind, L)) {
                    CheckResult cr;
                    cr.id = id;
                    cr.L = L;
                    cr.draw = d;
                    cr.threshold = thresholds.for_kind(kind);
                    const auto t0 = std::chrono::steady_clock::now();
                    if (!sample_error.empty()) {
                        cr.error = sample_error;
                        cr.residual = std::numeric_limits<double>::quiet_NaN();
                    } else {
                        try {
                            cr.residual = residual(id, mp);
                            cr.pass = cr.residual <= cr.threshold;
                        } catch (const std::exception& e) {
                            cr.error = e.what();
                            cr.residual = std::numeric_limits<double>::quiet_NaN();
                        }
                    }
                    if (timings) {
                        const auto t1 = std::chrono::steady_clock::now();
                        cr.millis =
                            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
                    }
                    report.overall = report.overall && cr.pass;
                    report.results.push_back(std::move(cr));
                }
            }
        }
    }
    return report;
}

}  // namespace sosdw
