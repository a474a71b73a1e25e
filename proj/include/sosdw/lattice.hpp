#pragma once

#include "sosdw/theta.hpp"

#include <vector>

namespace sosdw {

struct SizeTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ForbiddenFace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Height offsets n[i][j] on an (L+1)x(L+1) grid; the physical heights are
// tau + n*gamma. Domain-wall boundary (0-based): n[0][j] = n[j][0] = L - j and
// n[L][j] = n[j][L] = j. Horizontal and vertical neighbours differ by 1.
struct HeightMatrix {
    int L = 0;
    std::vector<int> n;  // (L+1)^2 entries, row-major
    int at(int i, int j) const { return n[static_cast<size_t>(i) * (L + 1) + j]; }
    int& at(int i, int j) { return n[static_cast<size_t>(i) * (L + 1) + j]; }
};

struct ModelParams {
    int L = 0;
    cplx gamma;
    cplx tau;
    std::vector<cplx> x;   // row spectral parameters, size L
    std::vector<cplx> mu;  // column inhomogeneities, size L
    cplx x0;               // auxiliary spectral value
    cplx x0bar;            // second auxiliary spectral value
    ThetaContext theta_ctx;
};

inline constexpr int kMaxEnumL = 6;

// All height configurations with the domain-wall boundary, in depth-first
// order over interior sites (row-major, smaller offset first).
std::vector<HeightMatrix> enumerate_heights(int L);

// Weight of face (i,j), i,j = 1..L. a,b,c,d are the offsets of the corners
// h_{i+1,j}, h_{i+1,j+1}, h_{i,j}, h_{i,j+1}; the dynamical argument is tied
// to the face's north-west corner, H = tau + (a+1)*gamma.
cplx face_weight(int a, int b, int c, int d, int i, int j, const ModelParams& params);

// Domain-wall partition function by exhaustive enumeration.
cplx partition_enum(const ModelParams& params);

// Arguments whose theta values must stay away from zero for every module to
// be well-posed: pairwise differences of {x0, x_1..x_L, x0bar}, spectral
// minus inhomogeneity with and without the gamma shift, the tau + k*gamma
// ladder (k = 0..L+2), and the four prefactor combinations built from
// S = sum(x_l - mu_l).
std::vector<cplx> guard_arguments(const ModelParams& params);

// Smallest |theta| over guard_arguments.
double min_guard_theta(const ModelParams& params);

}  // namespace sosdw
