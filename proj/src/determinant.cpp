#include "sosdw/determinant.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

namespace sosdw {

namespace {

cplx th(const VariableTuple& vt, const cplx& arg) { return theta_eval(arg, vt.theta_ctx); }

cplx powi(cplx base, int n) {
    cplx r = 1.0;
    for (int k = 0; k < n; ++k) r *= base;
    return r;
}

// Below this Hadamard ratio a determinant counts as singular: the double
// LU value has lost its leading digits, so quantities built on it are
// meaningless rather than merely inaccurate.
constexpr double kSingularRatio = 1e-12;

WSet assemble_w(EquationType t, const VariableTuple& vt, SubstReading reading) {
    const int L = vt.L();
    WSet ws;
    ws.w0 = ComplexMatrix(L);
    for (int a = 1; a <= L; ++a)
        for (int b = 1; b <= L; ++b) ws.w0.at(a - 1, b - 1) = h_sys(t, a, b, vt);
    std::vector<cplx> rhs(static_cast<size_t>(L));
    for (int b = 1; b <= L; ++b) rhs[b - 1] = -h_sys(t, 0, b, vt);
    ws.wi.reserve(static_cast<size_t>(L));
    for (int i = 1; i <= L; ++i) {
        ComplexMatrix wi = ws.w0;
        if (reading == SubstReading::Row) {
            for (int b = 0; b < L; ++b) wi.at(i - 1, b) = rhs[b];
        } else {
            for (int a = 0; a < L; ++a) wi.at(a, i - 1) = rhs[a];
        }
        ws.wi.push_back(std::move(wi));
    }
    ws.det_w0 = det(ws.w0);
    return ws;
}

}  // namespace

cplx det(ComplexMatrix m) {
    cplx d = 1.0;
    for (int k = 0; k < m.n; ++k) {
        int piv = k;
        double best = std::abs(m.at(k, k));
        for (int r = k + 1; r < m.n; ++r) {
            const double v = std::abs(m.at(r, k));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (piv != k) {
            for (int c = k; c < m.n; ++c) std::swap(m.at(k, c), m.at(piv, c));
            d = -d;
        }
        d *= m.at(k, k);
        for (int r = k + 1; r < m.n; ++r) {
            const cplx f = m.at(r, k) / m.at(k, k);
            for (int c = k + 1; c < m.n; ++c) m.at(r, c) -= f * m.at(k, c);
        }
    }
    return d;
}

int omega_dim(int L) { return (L * (L + 1) + 2) / 2; }

std::vector<std::pair<int, int>> eq_labels(int L) {
    std::vector<std::pair<int, int>> labels;
    labels.emplace_back(0, 0);
    for (int m = 1; m <= L; ++m) labels.emplace_back(0, m);
    for (int l = 1; l <= L; ++l)
        for (int m = l + 1; m <= L; ++m) labels.emplace_back(l, m);
    return labels;
}

int row_map(int i, int j, int L) { return L * i - i * (i + 1) / 2 + j + 1; }

int col_map(int k, int l, int L) { return L * (k - 1) - k * (k + 1) / 2 + l; }

ComplexMatrix build_omega(EquationType t, int k, const VariableTuple& vt) {
    const int L = vt.L();
    if (k < 0 || k > L)
        throw IndexOutOfRange("omega index " + std::to_string(k) + " outside 0.." +
                              std::to_string(L));
    ComplexMatrix m(omega_dim(L));
    for (const auto& [i, j] : eq_labels(L)) {
        const int r = row_map(i, j, L) - 1;
        UnfoldedSlot first;
        if (k == 0) {
            first.kind = UnfoldedSlot::Kind::P0;
        } else {
            first.kind = UnfoldedSlot::Kind::Q;
            first.j = k;
        }
        m.at(r, 0) = unfolded_coeff(t, i, j, first, vt);
        for (int q = 1; q <= L; ++q) {
            UnfoldedSlot s;
            s.kind = UnfoldedSlot::Kind::Qbar;
            s.j = q;
            m.at(r, q) = unfolded_coeff(t, i, j, s, vt);
        }
        for (int kk = 1; kk <= L; ++kk)
            for (int ll = kk + 1; ll <= L; ++ll) {
                UnfoldedSlot s;
                s.kind = UnfoldedSlot::Kind::R;
                s.i = kk;
                s.j = ll;
                m.at(r, L + col_map(kk, ll, L)) = unfolded_coeff(t, i, j, s, vt);
            }
    }
    return m;
}

cplx h_fund(EquationType t, int i, const VariableTuple& vt) {
    return det(build_omega(t, i, vt));
}

cplx h_sys(EquationType t, int alpha, int beta, const VariableTuple& vt) {
    const int L = vt.L();
    if (alpha < 0 || alpha > L)
        throw IndexOutOfRange("system row " + std::to_string(alpha) + " outside 0.." +
                              std::to_string(L));
    if (beta < 1 || beta > L)
        throw IndexOutOfRange("system column " + std::to_string(beta) + " outside 1.." +
                              std::to_string(L));
    const VariableTuple w = swapped(vt, 0, beta);
    if (alpha == 0) return h_fund(t, beta, w);
    if (alpha == beta) return h_fund(t, 0, w);
    return h_fund(t, alpha, w);
}

WSet build_w(EquationType t, const VariableTuple& vt, SubstReading reading) {
    WSet ws = assemble_w(t, vt, reading);
    if (det_hadamard_ratio(ws.w0, ws.det_w0) < kSingularRatio)
        throw SingularSystem("det W_0 is singular at working precision");
    return ws;
}

double det_hadamard_ratio(const ComplexMatrix& m, const cplx& d) {
    double bound = 1.0;
    for (int r = 0; r < m.n; ++r) {
        double s = 0.0;
        for (int c = 0; c < m.n; ++c) s += std::norm(m.at(r, c));
        bound *= std::sqrt(s);
    }
    if (bound == 0.0) return 0.0;
    return std::abs(d) / bound;
}

int rep_p(int L) { return L * L * (L + 1) / 2; }

int rep_q(int L) { return (L - 1) * (L * L + 2) / 2; }

cplx rep_partition(EquationType t, int i, const VariableTuple& vt) {
    const int L = vt.L();
    if (i < 0 || i > L)
        throw IndexOutOfRange("representation index " + std::to_string(i) + " outside 0.." +
                              std::to_string(L));
    const int pL = rep_p(L);
    const int qL = rep_q(L);

    const WSet at_tau = build_w(t, vt, SubstReading::Row);
    VariableTuple vn = vt;
    vn.tau = (t == EquationType::A) ? -static_cast<double>(L + 1) * vt.gamma : -vt.gamma;
    const WSet at_norm = assemble_w(t, vn, SubstReading::Row);

    const cplx det_wi = (i == 0) ? at_tau.det_w0 : det(at_tau.wi[static_cast<size_t>(i) - 1]);
    const ComplexMatrix& norm_mat = (i == 0) ? at_norm.w0 : at_norm.wi[static_cast<size_t>(i) - 1];
    const cplx det_win = (i == 0) ? at_norm.det_w0 : det(norm_mat);
    if (det_hadamard_ratio(norm_mat, det_win) < kSingularRatio)
        throw SingularNormalization("det W_i at the normalization point is singular at working precision");

    cplx ssum = 0.0;
    for (int l = 1; l <= L; ++l) ssum += vt.v[l] - vt.mu[l - 1];
    std::vector<cplx> xi0(vt.v.begin() + 1, vt.v.begin() + 1 + L);
    if (i >= 1) xi0[static_cast<size_t>(i) - 1] = vt.v[0];

    cplx r;
    if (t == EquationType::A) {
        r = -powi(th(vt, vt.tau + vt.gamma) / theta_den(static_cast<double>(L) * vt.gamma, vt), pL);
        r *= powi(th(vt, static_cast<double>(L + 1) * vt.gamma) / theta_den(vt.tau, vt), qL);
        for (int k = 1; k < L; ++k)
            r *= powi(th(vt, static_cast<double>(k) * vt.gamma) /
                          theta_den(vt.tau + static_cast<double>(k + 1) * vt.gamma, vt),
                      L);
        for (const cplx& xv : xi0)
            for (int j = 0; j < L; ++j) r *= th(vt, xv - vt.mu[j] + vt.gamma);
        r *= th(vt, ssum - vt.gamma) /
             theta_den(ssum + vt.tau + static_cast<double>(L) * vt.gamma, vt);
    } else {
        const cplx top = vt.tau + static_cast<double>(L + 1) * vt.gamma;
        r = (L % 2 == 0 ? 1.0 : -1.0) * th(vt, top) / theta_den(vt.tau + vt.gamma, vt);
        r *= powi(th(vt, top) / theta_den(static_cast<double>(L) * vt.gamma, vt), pL);
        r *= powi(th(vt, static_cast<double>(L + 1) * vt.gamma) /
                      theta_den(vt.tau + static_cast<double>(L + 2) * vt.gamma, vt),
                  qL);
        for (int k = 1; k < L; ++k)
            r *= powi(th(vt, static_cast<double>(k) * vt.gamma) /
                          theta_den(vt.tau + static_cast<double>(k + 1) * vt.gamma, vt),
                      L);
        r *= th(vt, ssum + static_cast<double>(L + 1) * vt.gamma) /
             theta_den(ssum + vt.tau + static_cast<double>(L + 2) * vt.gamma, vt);
        for (const cplx& xv : xi0)
            for (int j = 0; j < L; ++j) r *= th(vt, xv - vt.mu[j]);
    }
    return r * det_wi / det_win;
}

namespace {

// Hand-expanded L = 1 reference value: a single 2x2 determinant in
// x0, x1, x0bar.
cplx reference_entry_L1(EquationType t, const VariableTuple& vt) {
    const cplx xa = vt.v[0];
    const cplx x1 = vt.v[1];
    const cplx xb = vt.v[2];
    const cplx mu1 = vt.mu[0];
    const cplx g = vt.gamma;
    const cplx tau = vt.tau;
    const auto f = [&](const cplx& z) { return th(vt, z); };
    cplx a11, a12, a21, a22;
    if (t == EquationType::A) {
        a11 = f(xa - xb + g) * f(xb - mu1 + g) / (f(xa - xb) * f(xb - mu1)) -
              f(xa - x1 + g) * f(x1 - mu1 + g) / (f(xa - x1) * f(x1 - mu1));
        a12 = f(g) * f(xb - xa + tau + g) * f(xa - mu1 + g) /
              (f(tau + g) * f(xb - xa) * f(xb - mu1));
        a21 = f(g) * f(xa - xb + tau + g) * f(xb - mu1 + g) /
              (f(tau + g) * f(xa - xb) * f(xa - mu1));
        a22 = f(xb - xa + g) * f(xa - mu1 + g) / (f(xb - xa) * f(xa - mu1)) -
              f(xb - x1 + g) * f(x1 - mu1 + g) / (f(xb - x1) * f(x1 - mu1));
    } else {
        a11 = f(xb - xa + g) * f(xb - mu1) / (f(xb - xa) * f(xb - mu1 + g)) -
              f(x1 - xa + g) * f(x1 - mu1) / (f(x1 - xa) * f(x1 - mu1 + g));
        a12 = f(g) * f(xb - xa + tau + 2.0 * g) * f(xa - mu1) /
              (f(tau + 2.0 * g) * f(xa - xb) * f(xb - mu1 + g));
        a21 = f(g) * f(xa - xb + tau + 2.0 * g) * f(xb - mu1) /
              (f(tau + 2.0 * g) * f(xb - xa) * f(xa - mu1 + g));
        a22 = f(xa - xb + g) * f(xa - mu1) / (f(xa - xb) * f(xa - mu1 + g)) -
              f(x1 - xb + g) * f(x1 - mu1) / (f(x1 - xb) * f(x1 - mu1 + g));
    }
    return a11 * a22 - a12 * a21;
}

// L = 2 reference blocks. Slot arguments index the tuple directly:
// 0 = x0, 1 = x_1, 2 = x_2, 3 = x0bar.
struct RefL2 {
    const VariableTuple& vt;
    EquationType t;

    cplx f(const cplx& z) const { return th(vt, z); }

    cplx u(int i, int j, int k, int l) const {
        const cplx xi = vt.v[static_cast<size_t>(i)];
        const cplx xj = vt.v[static_cast<size_t>(j)];
        const cplx xk = vt.v[static_cast<size_t>(k)];
        const cplx xl = vt.v[static_cast<size_t>(l)];
        const cplx g = vt.gamma;
        cplx r;
        if (t == EquationType::A) {
            r = f(g) * f(xi - xk + g) * f(xj - xk + vt.tau + g) /
                (f(vt.tau + g) * f(xi - xk) * f(xj - xk));
            for (const cplx& mt : vt.mu) r *= f(xk - mt + g) / f(xl - mt);
        } else {
            r = -f(g) * f(xk - xi + g) * f(xj - xk + vt.tau + 3.0 * g) /
                (f(vt.tau + 3.0 * g) * f(xk - xi) * f(xj - xk));
            for (const cplx& mt : vt.mu) r *= f(xk - mt) / f(xl - mt + g);
        }
        return r;
    }

    cplx v(int i, int j, int k, int l) const {
        const cplx g = vt.gamma;
        const auto half = [&](const cplx& y) {
            cplx r = 1.0;
            for (const int s : {k, l}) {
                const cplx xs = vt.v[static_cast<size_t>(s)];
                r *= (t == EquationType::A) ? f(xs - y + g) / f(xs - y)
                                            : f(y - xs + g) / f(y - xs);
            }
            for (const cplx& mt : vt.mu)
                r *= (t == EquationType::A) ? f(y - mt + g) / f(y - mt)
                                            : f(y - mt) / f(y - mt + g);
            return r;
        };
        return half(vt.v[static_cast<size_t>(i)]) - half(vt.v[static_cast<size_t>(j)]);
    }
};

ComplexMatrix reference_w0_L2(EquationType t, const VariableTuple& vt) {
    const RefL2 R{vt, t};
    const int B = 3;  // x0bar slot
    const cplx O = 0.0;
    const auto blockdet = [](const std::array<cplx, 16>& e) {
        ComplexMatrix m(4);
        std::copy(e.begin(), e.end(), m.a.begin());
        return det(std::move(m));
    };
    const cplx k1 = blockdet({R.v(B, 1, 0, 2), R.u(2, B, 0, B), R.u(0, B, 2, B), O,
                              R.u(2, 0, B, 0), R.v(0, 1, B, 2), R.u(B, 0, 2, 0), -R.u(B, 1, 2, 1),
                              R.u(0, 2, B, 2), R.u(B, 2, 0, 2), R.v(2, 1, 0, B), -R.u(B, 1, 0, 1),
                              O, R.u(B, 2, 1, 2), -R.u(B, 0, 1, 0), R.v(2, 0, B, 1)});
    const cplx k2 = blockdet({-R.u(0, 1, 2, 1), R.u(2, B, 0, B), R.u(0, B, 2, B), O,
                              O, R.v(0, 1, B, 2), R.u(B, 0, 2, 0), -R.u(B, 1, 2, 1),
                              -R.u(0, 1, B, 1), R.u(B, 2, 0, 2), R.v(2, 1, 0, B), -R.u(B, 1, 0, 1),
                              -R.u(1, 0, B, 0), R.u(B, 2, 1, 2), -R.u(B, 0, 1, 0), R.v(2, 0, B, 1)});
    const cplx k3 = blockdet({-R.u(0, 2, 1, 2), R.u(0, B, 1, B), R.u(1, B, 0, B), O,
                              -R.u(0, 2, B, 2), R.v(1, 2, 0, B), R.u(B, 1, 0, 1), -R.u(B, 2, 0, 2),
                              O, R.u(B, 0, 1, 0), R.v(0, 2, B, 1), -R.u(B, 2, 1, 2),
                              R.u(2, 0, B, 0), R.u(B, 0, 2, 0), -R.u(B, 1, 2, 1), R.v(0, 1, B, 2)});
    const cplx k4 = blockdet({R.v(B, 2, 0, 1), R.u(0, B, 1, B), R.u(1, B, 0, B), O,
                              R.u(0, 1, B, 1), R.v(1, 2, 0, B), R.u(B, 1, 0, 1), -R.u(B, 2, 0, 2),
                              R.u(1, 0, B, 0), R.u(B, 0, 1, 0), R.v(0, 2, B, 1), -R.u(B, 2, 1, 2),
                              O, R.u(B, 0, 2, 0), -R.u(B, 1, 2, 1), R.v(0, 1, B, 2)});
    ComplexMatrix w(2);
    w.at(0, 0) = k1;
    w.at(1, 0) = k2;
    w.at(0, 1) = k3;
    w.at(1, 1) = k4;
    return w;
}

}  // namespace

ComplexMatrix reference_w0(int L, EquationType t, const VariableTuple& vt) {
    if (L != vt.L() || (L != 1 && L != 2))
        throw IndexOutOfRange("reference matrices exist for L = 1 and L = 2 only");
    if (L == 1) {
        ComplexMatrix w(1);
        w.at(0, 0) = reference_entry_L1(t, vt);
        return w;
    }
    return reference_w0_L2(t, vt);
}

double golden_check(int L, EquationType t, const VariableTuple& vt) {
    const WSet ws = build_w(t, vt, SubstReading::Row);
    const ComplexMatrix ref = reference_w0(L, t, vt);
    double dev = 0.0;
    for (int r = 0; r < L; ++r)
        for (int c = 0; c < L; ++c)
            dev = std::max(dev, std::abs(ref.at(r, c) / ws.w0.at(r, c) - 1.0));
    const cplx det_ref = det(ref);
    for (int i = 1; i <= L; ++i) {
        ComplexMatrix ri = ref;
        for (int b = 0; b < L; ++b)
            ri.at(i - 1, b) = ws.wi[static_cast<size_t>(i) - 1].at(i - 1, b);
        const cplx lhs = det(std::move(ri)) / det_ref;
        const cplx rhs = det(ws.wi[static_cast<size_t>(i) - 1]) / ws.det_w0;
        dev = std::max(dev, std::abs(lhs / rhs - 1.0));
    }
    return dev;
}

}  // namespace sosdw
