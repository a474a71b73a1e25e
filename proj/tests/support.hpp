#pragma once

#include "sosdw/coeffs.hpp"

#include <cmath>

namespace sosdw::testsupport {

// Fixed parameter point shared by every frozen constant in the test suite.
inline ModelParams pinned(int L) {
    ModelParams mp;
    mp.L = L;
    mp.gamma = {0.41, 0.13};
    mp.tau = {0.33, 0.21};
    const cplx xs[3] = {{0.21, -0.17}, {-0.35, 0.11}, {0.47, 0.29}};
    const cplx ms[3] = {{-0.13, 0.23}, {0.29, -0.19}, {-0.41, -0.07}};
    mp.x.assign(xs, xs + L);
    mp.mu.assign(ms, ms + L);
    mp.x0 = {0.11, 0.31};
    mp.x0bar = {-0.23, -0.29};
    return mp;
}

inline VariableTuple pinned_tuple(int L) { return make_tuple(pinned(L)); }

inline double rel_err(const cplx& got, const cplx& want) {
    return std::abs(got - want) / std::abs(want);
}

}  // namespace sosdw::testsupport
