#include "sosdw/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace sosdw {

namespace {

void fill_boundary(HeightMatrix& hm) {
    const int L = hm.L;
    for (int j = 0; j <= L; ++j) {
        hm.at(0, j) = L - j;
        hm.at(j, 0) = L - j;
        hm.at(L, j) = j;
        hm.at(j, L) = j;
    }
}

// Depth-first over interior sites in row-major order, smaller candidate
// offset first. Each candidate must differ by 1 from the fixed up/left
// neighbours and, on the last interior row/column, from the boundary below
// and to the right.
void extend(HeightMatrix& hm, int site, std::vector<HeightMatrix>& out) {
    const int L = hm.L;
    const int interior = (L - 1) * (L - 1);
    if (site == interior) {
        out.push_back(hm);
        return;
    }
    const int i = 1 + site / (L - 1);
    const int j = 1 + site % (L - 1);
    const int up = hm.at(i - 1, j);
    const int left = hm.at(i, j - 1);
    for (const int v : {up - 1, up + 1}) {
        if (std::abs(v - left) != 1) continue;
        if (j + 1 == L && std::abs(v - hm.at(i, L)) != 1) continue;
        if (i + 1 == L && std::abs(v - hm.at(L, j)) != 1) continue;
        hm.at(i, j) = v;
        extend(hm, site + 1, out);
    }
}

}  // namespace

std::vector<HeightMatrix> enumerate_heights(int L) {
    if (L < 1 || L > kMaxEnumL)
        throw SizeTooLarge("enumeration supports 1 <= L <= " + std::to_string(kMaxEnumL) +
                           ", got " + std::to_string(L));
    HeightMatrix hm;
    hm.L = L;
    hm.n.assign(static_cast<size_t>(L + 1) * (L + 1), 0);
    fill_boundary(hm);
    std::vector<HeightMatrix> out;
    extend(hm, 0, out);
    return out;
}

cplx face_weight(int a, int b, int c, int d, int i, int j, const ModelParams& params) {
    const int da = a - c;
    const int db = b - c;
    const int dd = d - c;
    const cplx s = params.x[static_cast<size_t>(i) - 1] - params.mu[static_cast<size_t>(j) - 1];
    const cplx H = params.tau + static_cast<double>(a + 1) * params.gamma;
    const auto th = [&params](const cplx& z) { return theta_eval(z, params.theta_ctx); };

    if ((da == 1 && db == 0 && dd == -1) || (da == -1 && db == 0 && dd == 1))
        return th(s + params.gamma);
    if (da == 1 && db == 2 && dd == 1) return th(H + params.gamma) * th(s) / th(H);
    if (da == -1 && db == -2 && dd == -1) return th(H - params.gamma) * th(s) / th(H);
    if (da == 1 && db == 0 && dd == 1) return th(H + s) * th(params.gamma) / th(H);
    if (da == -1 && db == 0 && dd == -1) return th(H - s) * th(params.gamma) / th(H);
    throw ForbiddenFace("no six-vertex pattern has corner deltas (" + std::to_string(da) +
                        "," + std::to_string(db) + "," + std::to_string(dd) + ")");
}

cplx partition_enum(const ModelParams& params) {
    const auto configs = enumerate_heights(params.L);
    cplx total = 0.0;
    for (const auto& hm : configs) {
        cplx prod = 1.0;
        for (int i = 1; i <= params.L; ++i)
            for (int j = 1; j <= params.L; ++j)
                prod *= face_weight(hm.at(i, j - 1), hm.at(i, j), hm.at(i - 1, j - 1),
                                    hm.at(i - 1, j), i, j, params);
        total += prod;
    }
    return total;
}

std::vector<cplx> guard_arguments(const ModelParams& params) {
    const int L = params.L;
    std::vector<cplx> spectral;
    spectral.push_back(params.x0);
    spectral.insert(spectral.end(), params.x.begin(), params.x.end());
    spectral.push_back(params.x0bar);

    std::vector<cplx> args;
    for (size_t a = 0; a < spectral.size(); ++a)
        for (size_t b = a + 1; b < spectral.size(); ++b)
            args.push_back(spectral[a] - spectral[b]);
    for (const cplx& xv : spectral)
        for (const cplx& mv : params.mu) {
            args.push_back(xv - mv);
            args.push_back(xv - mv + params.gamma);
        }
    for (int k = 0; k <= L + 2; ++k)
        args.push_back(params.tau + static_cast<double>(k) * params.gamma);

    cplx s = 0.0;
    for (int l = 0; l < L; ++l) s += params.x[l] - params.mu[l];
    args.push_back(s - params.gamma);
    args.push_back(s + static_cast<double>(L + 1) * params.gamma);
    args.push_back(s + params.tau + static_cast<double>(L) * params.gamma);
    args.push_back(s + params.tau + static_cast<double>(L + 2) * params.gamma);
    return args;
}

double min_guard_theta(const ModelParams& params) {
    double best = std::numeric_limits<double>::infinity();
    for (const cplx& arg : guard_arguments(params))
        best = std::min(best, std::abs(theta_eval(arg, params.theta_ctx)));
    return best;
}

}  // namespace sosdw
