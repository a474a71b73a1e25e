#pragma once

#include "sosdw/lattice.hpp"

#include <functional>
#include <utility>

namespace sosdw {

struct SingularDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class EquationType { A, D };

inline const char* type_name(EquationType t) { return t == EquationType::A ? "A" : "D"; }

// Permutable spectral slots (x0, x_1..x_L, x0bar) plus the shared parameters.
struct VariableTuple {
    std::vector<cplx> v;   // size L+2; v[0] = x0, v[1..L] = x, v[L+1] = x0bar
    std::vector<cplx> mu;  // size L
    cplx tau;
    cplx gamma;
    ThetaContext theta_ctx;
    int L() const { return static_cast<int>(mu.size()); }
    int bar() const { return L() + 1; }
};

VariableTuple make_tuple(const ModelParams& params);

// Copy with slots a and b exchanged (0 = x0, 1..L = x, L+1 = x0bar).
VariableTuple swapped(VariableTuple vt, int a, int b);

// Theta value destined for a denominator; throws SingularDenominator inside
// the guard margin.
cplx theta_den(const cplx& arg, const VariableTuple& vt);

// Throws SingularDenominator when any guard argument sits inside the margin.
void require_nonsingular(const ModelParams& params);

// Coefficients of the two original equations: one tau-shifted partition
// function term plus L+1 substituted ones.
cplx m0_orig(EquationType t, const VariableTuple& vt);
cplx n_orig(EquationType t, int i, const VariableTuple& vt);  // i = 0..L

// Coefficients of the two modified equations, where x0 and x0bar both appear.
cplx m0_mod(EquationType t, const VariableTuple& vt);
cplx n_mod(EquationType t, int i, const VariableTuple& vt);     // i = 1..L
cplx nbar_mod(EquationType t, int i, const VariableTuple& vt);  // i = 1..L

struct CoeffRole {
    enum class Kind { M0Orig, NOrig, M0Mod, NMod, NbarMod };
    Kind kind = Kind::M0Orig;
    int index = 0;  // NOrig: 0..L; NMod/NbarMod: 1..L
};

cplx coeff_value(EquationType t, const CoeffRole& role, const VariableTuple& vt);

using CoeffFn = std::function<cplx(const VariableTuple&)>;

// Applies the 2-cycles left to right, then evaluates f on the result.
cplx permute_eval(const CoeffFn& f, const std::vector<std::pair<int, int>>& cycles,
                  const VariableTuple& vt);

// One column slot of the unfolded linear system.
struct UnfoldedSlot {
    enum class Kind { P0, Q, Qbar, R };
    Kind kind = Kind::P0;
    int j = 0;  // Q / Qbar column index, or the larger R index
    int i = 0;  // the smaller R index
};

// Coefficient of the unfolded system at row label (l,m) and the given column
// slot. Label (0,0) is the base equation; (0,m) and (l,m) with
// 1 <= l < m <= L are its images under the slot transpositions. Structural
// zeros are returned without evaluating any theta function.
cplx unfolded_coeff(EquationType t, int l, int m, const UnfoldedSlot& slot,
                    const VariableTuple& vt);

}  // namespace sosdw
