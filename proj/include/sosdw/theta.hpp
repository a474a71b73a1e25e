#pragma once

#include <complex>
#include <stdexcept>

namespace sosdw {

using cplx = std::complex<double>;

struct InvalidContext : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonConvergent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation environment for the odd theta kernel
//   [x] = 2 sum_{n>=0} (-1)^n p^{(n+1/2)^2} sinh((2n+1)x).
struct ThetaContext {
    double nome = 0.1;             // elliptic nome p, 0 < p < 1
    double truncation_tol = 1e-16; // relative term-magnitude cutoff
    int max_terms = 64;
    double kernel_scale = 1.0;     // constant multiple of the kernel; every identity
                                   // checked by this project is homogeneous, so a fixed
                                   // nonzero scale cancels throughout
};

// Magnitude of the kernel's leading coefficient, 2 p^{1/4} |kernel_scale|;
// floors the truncation test and the zero guards.
double kernel_floor(const ThetaContext& ctx);

// Below this magnitude a theta value counts as singular when it appears in a
// denominator or a sampling guard: 1e-3 * kernel_floor.
double guard_threshold(const ThetaContext& ctx);

cplx theta_eval(const cplx& x, const ThetaContext& ctx);

}  // namespace sosdw
