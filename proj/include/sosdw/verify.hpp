#pragma once

#include "sosdw/determinant.hpp"

#include <cstdint>
#include <string>

namespace sosdw {

struct SamplingExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckId {
    enum class Kind {
        EqA,
        EqD,
        ModA,
        ModD,
        Unfolded,
        Hz,
        Hzsys,
        Ztoz,
        RepA,
        RepD,
        Golden,
        ThetaProps,
        Symmetry,
    };
    Kind kind = Kind::EqA;
    EquationType type = EquationType::A;  // Hz / Hzsys / Ztoz / Golden
    int a = 0;  // Unfolded: l.  Golden: L.
    int b = 0;  // Unfolded: m.  Hzsys: j.  Ztoz / RepA / RepD: i.
    std::string name() const;
};

struct Thresholds {
    double identity = 1e-8;
    double ratio = 1e-8;
    double golden = 1e-10;
    double theta = 1e-12;
    double symmetry = 1e-12;
    double for_kind(CheckId::Kind k) const;
};

// Guard-passing random parameter set: Re in [-1,1], Im in [-0.5,0.5] for the
// spectral values and tau, gamma real in [0.2,0.8]; rejection until the theta
// guards and both W_0 determinant guards hold. Deterministic in (L, seed).
ModelParams sample_params(int L, std::uint64_t seed, const ThetaContext& ctx);

// Redraws only x0 and x0bar of an existing set, with the same guards.
ModelParams resample_aux(const ModelParams& base, std::uint64_t seed);

// Dimensionless failure measure of one check at one parameter set:
// sum-form identities score |sum| / max|term|, ratio checks |ratio - 1|,
// property checks their worst scaled deviation.
double residual(const CheckId& check, const ModelParams& params);

struct CheckResult {
    CheckId id;
    int L = 0;
    int draw = 0;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
    long long millis = 0;
    std::string error;  // nonempty when evaluation threw
};

struct VerificationReport {
    std::vector<int> L_list;
    int draws = 0;
    std::uint64_t seed = 0;
    Thresholds thresholds;
    std::vector<CheckResult> results;
    bool overall = true;
};

std::vector<CheckId::Kind> all_check_kinds();

// Expansion of one check kind into concrete ids at size L (types, indices,
// unfolded labels). Golden expands only for L <= 2.
std::vector<CheckId> expand_check(CheckId::Kind kind, int L);

// Runs every requested kind for each (L, draw) pair; failures and errors are
// recorded, never thrown. Draw d at size L uses sample_params(L, seed + d).
VerificationReport run_suite(const std::vector<int>& L_list, int draws,
                             std::uint64_t seed,
                             const std::vector<CheckId::Kind>& checks,
                             const Thresholds& thresholds = {},
                             bool timings = false, const ThetaContext& ctx = {});

namespace testhooks {
// Scales the leading coefficient inside the EqA residual; tests use it to
// confirm a corrupted coefficient fails its own check and no other.
inline double eqa_coeff_fault = 1.0;
}  // namespace testhooks

}  // namespace sosdw
