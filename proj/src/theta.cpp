#include "sosdw/theta.hpp"

#include <algorithm>
#include <cmath>

namespace sosdw {

double kernel_floor(const ThetaContext& ctx) {
    return 2.0 * std::pow(ctx.nome, 0.25) * std::abs(ctx.kernel_scale);
}

double guard_threshold(const ThetaContext& ctx) {
    return 1e-3 * kernel_floor(ctx);
}

cplx theta_eval(const cplx& x, const ThetaContext& ctx) {
    if (!(ctx.nome > 0.0) || !(ctx.nome < 1.0))
        throw InvalidContext("nome must lie strictly between 0 and 1");
    if (!(ctx.truncation_tol > 0.0))
        throw InvalidContext("truncation_tol must be positive");
    if (ctx.max_terms < 1)
        throw InvalidContext("max_terms must be at least 1");
    if (ctx.kernel_scale == 0.0)
        throw InvalidContext("kernel_scale must be nonzero");

    const double p = ctx.nome;
    const double ax = std::abs(x.real());
    const double floor_mag = 2.0 * std::pow(p, 0.25);

    cplx sum = 0.0;
    for (int n = 0; n < ctx.max_terms; ++n) {
        const double k = n + 0.5;
        const double weight = std::pow(p, k * k);
        const double bound = weight * std::exp((2.0 * n + 1.0) * ax);
        if (bound < ctx.truncation_tol * std::max(2.0 * std::abs(sum), floor_mag))
            return 2.0 * ctx.kernel_scale * sum;
        const cplx term = weight * std::sinh((2.0 * n + 1.0) * x);
        sum += (n % 2 == 0) ? term : -term;
    }
    throw NonConvergent("theta series did not meet the truncation bound within max_terms");
}

}  // namespace sosdw
