#include "sosdw/coeffs.hpp"

#include <cmath>
#include <string>

namespace sosdw {

namespace {

cplx th(const VariableTuple& vt, const cplx& arg) { return theta_eval(arg, vt.theta_ctx); }

void check_slot(const VariableTuple& vt, int s, const char* what) {
    if (s < 0 || s > vt.bar())
        throw IndexOutOfRange(std::string(what) + " slot " + std::to_string(s) +
                              " outside 0.." + std::to_string(vt.bar()));
}

void check_xindex(const VariableTuple& vt, int i, const char* what) {
    if (i < 1 || i > vt.L())
        throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i) +
                              " outside 1.." + std::to_string(vt.L()));
}

}  // namespace

VariableTuple make_tuple(const ModelParams& params) {
    VariableTuple vt;
    vt.v.reserve(static_cast<size_t>(params.L) + 2);
    vt.v.push_back(params.x0);
    vt.v.insert(vt.v.end(), params.x.begin(), params.x.end());
    vt.v.push_back(params.x0bar);
    vt.mu = params.mu;
    vt.tau = params.tau;
    vt.gamma = params.gamma;
    vt.theta_ctx = params.theta_ctx;
    return vt;
}

VariableTuple swapped(VariableTuple vt, int a, int b) {
    check_slot(vt, a, "swap");
    check_slot(vt, b, "swap");
    std::swap(vt.v[static_cast<size_t>(a)], vt.v[static_cast<size_t>(b)]);
    return vt;
}

cplx theta_den(const cplx& arg, const VariableTuple& vt) {
    const cplx t = theta_eval(arg, vt.theta_ctx);
    if (std::abs(t) < guard_threshold(vt.theta_ctx))
        throw SingularDenominator("denominator theta value inside the guard margin");
    return t;
}

void require_nonsingular(const ModelParams& params) {
    if (min_guard_theta(params) < guard_threshold(params.theta_ctx))
        throw SingularDenominator("a guard argument's theta value is inside the margin");
}

cplx m0_orig(EquationType t, const VariableTuple& vt) {
    const int L = vt.L();
    if (t == EquationType::A) {
        cplx r = th(vt, vt.tau) / theta_den(vt.tau + static_cast<double>(L) * vt.gamma, vt);
        for (int j = 1; j <= L; ++j) r *= th(vt, vt.v[0] - vt.mu[j - 1]);
        return r;
    }
    cplx r = 1.0;
    for (int j = 1; j <= L; ++j) r *= th(vt, vt.v[0] - vt.mu[j - 1] + vt.gamma);
    return r;
}

cplx n_orig(EquationType t, int i, const VariableTuple& vt) {
    const int L = vt.L();
    if (i < 0 || i > L)
        throw IndexOutOfRange("substituted-term index " + std::to_string(i) + " outside 0.." +
                              std::to_string(L));
    const cplx tau_top = vt.tau + static_cast<double>(L + 1) * vt.gamma;
    if (t == EquationType::A) {
        if (i == 0) {
            cplx r = -th(vt, vt.tau + vt.gamma) / theta_den(tau_top, vt);
            for (int j = 1; j <= L; ++j) {
                r *= th(vt, vt.v[0] - vt.mu[j - 1] + vt.gamma);
                r *= th(vt, vt.v[j] - vt.v[0] + vt.gamma) / theta_den(vt.v[j] - vt.v[0], vt);
            }
            return r;
        }
        cplx r = th(vt, vt.tau + vt.gamma + vt.v[0] - vt.v[i]) * th(vt, vt.gamma) /
                 (theta_den(vt.v[i] - vt.v[0], vt) * theta_den(tau_top, vt));
        for (int j = 1; j <= L; ++j) {
            r *= th(vt, vt.v[i] - vt.mu[j - 1] + vt.gamma);
            if (j != i) r *= th(vt, vt.v[j] - vt.v[i] + vt.gamma) / theta_den(vt.v[j] - vt.v[i], vt);
        }
        return r;
    }
    if (i == 0) {
        cplx r = -1.0;
        for (int j = 1; j <= L; ++j) {
            r *= th(vt, vt.v[0] - vt.mu[j - 1]);
            r *= th(vt, vt.v[0] - vt.v[j] + vt.gamma) / theta_den(vt.v[0] - vt.v[j], vt);
        }
        return r;
    }
    cplx r = th(vt, vt.gamma) * th(vt, tau_top + vt.v[0] - vt.v[i]) /
             (theta_den(vt.v[0] - vt.v[i], vt) * theta_den(tau_top, vt));
    for (int j = 1; j <= L; ++j) {
        r *= th(vt, vt.v[i] - vt.mu[j - 1]);
        if (j != i) r *= th(vt, vt.v[i] - vt.v[j] + vt.gamma) / theta_den(vt.v[i] - vt.v[j], vt);
    }
    return r;
}

cplx m0_mod(EquationType t, const VariableTuple& vt) {
    const int L = vt.L();
    const auto prod_at = [&](const cplx& y) {
        cplx r = 1.0;
        for (int j = 1; j <= L; ++j) {
            if (t == EquationType::A)
                r *= th(vt, y - vt.mu[j - 1] + vt.gamma) * th(vt, vt.v[j] - y + vt.gamma) /
                     (theta_den(y - vt.mu[j - 1], vt) * theta_den(vt.v[j] - y, vt));
            else
                r *= th(vt, y - vt.mu[j - 1]) * th(vt, y - vt.v[j] + vt.gamma) /
                     (theta_den(y - vt.mu[j - 1] + vt.gamma, vt) * theta_den(y - vt.v[j], vt));
        }
        return r;
    };
    return prod_at(vt.v[vt.bar()]) - prod_at(vt.v[0]);
}

cplx n_mod(EquationType t, int i, const VariableTuple& vt) {
    const int L = vt.L();
    check_xindex(vt, i, "modified-coefficient");
    if (t == EquationType::A) {
        cplx r = th(vt, vt.gamma) * th(vt, vt.tau + vt.gamma + vt.v[0] - vt.v[i]) /
                 (theta_den(vt.tau + vt.gamma, vt) * theta_den(vt.v[i] - vt.v[0], vt));
        for (int j = 1; j <= L; ++j) {
            r *= th(vt, vt.v[i] - vt.mu[j - 1] + vt.gamma) / theta_den(vt.v[0] - vt.mu[j - 1], vt);
            if (j != i) r *= th(vt, vt.v[j] - vt.v[i] + vt.gamma) / theta_den(vt.v[j] - vt.v[i], vt);
        }
        return r;
    }
    const cplx tau_top = vt.tau + static_cast<double>(L + 1) * vt.gamma;
    cplx r = th(vt, vt.gamma) * th(vt, tau_top + vt.v[0] - vt.v[i]) /
             (theta_den(tau_top, vt) * theta_den(vt.v[0] - vt.v[i], vt));
    for (int j = 1; j <= L; ++j) {
        r *= th(vt, vt.v[i] - vt.mu[j - 1]) / theta_den(vt.v[0] - vt.mu[j - 1] + vt.gamma, vt);
        if (j != i) r *= th(vt, vt.v[i] - vt.v[j] + vt.gamma) / theta_den(vt.v[i] - vt.v[j], vt);
    }
    return r;
}

cplx nbar_mod(EquationType t, int i, const VariableTuple& vt) {
    const int L = vt.L();
    check_xindex(vt, i, "modified-coefficient");
    const int bar = vt.bar();
    if (t == EquationType::A) {
        cplx r = th(vt, vt.gamma) * th(vt, vt.tau + vt.gamma + vt.v[bar] - vt.v[i]) /
                 (theta_den(vt.tau + vt.gamma, vt) * theta_den(vt.v[bar] - vt.v[i], vt));
        for (int j = 1; j <= L; ++j) {
            r *= th(vt, vt.v[i] - vt.mu[j - 1] + vt.gamma) / theta_den(vt.v[bar] - vt.mu[j - 1], vt);
            if (j != i) r *= th(vt, vt.v[j] - vt.v[i] + vt.gamma) / theta_den(vt.v[j] - vt.v[i], vt);
        }
        return r;
    }
    const cplx tau_top = vt.tau + static_cast<double>(L + 1) * vt.gamma;
    cplx r = th(vt, vt.gamma) * th(vt, tau_top + vt.v[bar] - vt.v[i]) /
             (theta_den(tau_top, vt) * theta_den(vt.v[i] - vt.v[bar], vt));
    for (int j = 1; j <= L; ++j) {
        r *= th(vt, vt.v[i] - vt.mu[j - 1]) / theta_den(vt.v[bar] - vt.mu[j - 1] + vt.gamma, vt);
        if (j != i) r *= th(vt, vt.v[i] - vt.v[j] + vt.gamma) / theta_den(vt.v[i] - vt.v[j], vt);
    }
    return r;
}

cplx coeff_value(EquationType t, const CoeffRole& role, const VariableTuple& vt) {
    switch (role.kind) {
        case CoeffRole::Kind::M0Orig: return m0_orig(t, vt);
        case CoeffRole::Kind::NOrig: return n_orig(t, role.index, vt);
        case CoeffRole::Kind::M0Mod: return m0_mod(t, vt);
        case CoeffRole::Kind::NMod: return n_mod(t, role.index, vt);
        case CoeffRole::Kind::NbarMod: return nbar_mod(t, role.index, vt);
    }
    throw IndexOutOfRange("unknown coefficient role");
}

cplx permute_eval(const CoeffFn& f, const std::vector<std::pair<int, int>>& cycles,
                  const VariableTuple& vt) {
    VariableTuple w = vt;
    for (const auto& [a, b] : cycles) w = swapped(std::move(w), a, b);
    return f(w);
}

cplx unfolded_coeff(EquationType t, int l, int m, const UnfoldedSlot& slot,
                    const VariableTuple& vt) {
    const int L = vt.L();
    const int bar = vt.bar();
    const bool base = (l == 0 && m == 0);
    if (!base && (m < 1 || m > L || l < 0 || l >= m))
        throw IndexOutOfRange("unfolded label (" + std::to_string(l) + "," + std::to_string(m) +
                              ") is not (0,0), (0,m) or (l,m) with l < m <= " + std::to_string(L));
    if (slot.kind == UnfoldedSlot::Kind::Q || slot.kind == UnfoldedSlot::Kind::Qbar)
        check_xindex(vt, slot.j, "unfolded column");
    if (slot.kind == UnfoldedSlot::Kind::R) {
        check_xindex(vt, slot.i, "unfolded column");
        check_xindex(vt, slot.j, "unfolded column");
        if (slot.i >= slot.j) throw IndexOutOfRange("unfolded R column needs i < j");
    }

    if (base) {
        switch (slot.kind) {
            case UnfoldedSlot::Kind::P0: return m0_mod(t, vt);
            case UnfoldedSlot::Kind::Q: return n_mod(t, slot.j, vt);
            case UnfoldedSlot::Kind::Qbar: return nbar_mod(t, slot.j, vt);
            case UnfoldedSlot::Kind::R: return 0.0;
        }
    }
    if (l == 0) {
        const VariableTuple w = swapped(vt, bar, m);
        switch (slot.kind) {
            case UnfoldedSlot::Kind::P0: return nbar_mod(t, m, w);
            case UnfoldedSlot::Kind::Q: return slot.j == m ? n_mod(t, m, w) : cplx(0.0);
            case UnfoldedSlot::Kind::Qbar:
                return slot.j == m ? m0_mod(t, w) : nbar_mod(t, slot.j, w);
            case UnfoldedSlot::Kind::R:
                if (slot.j == m) return n_mod(t, slot.i, w);
                if (slot.i == m) return n_mod(t, slot.j, w);
                return 0.0;
        }
    }
    const VariableTuple w = swapped(swapped(vt, 0, l), bar, m);
    switch (slot.kind) {
        case UnfoldedSlot::Kind::P0: return 0.0;
        case UnfoldedSlot::Kind::Q:
            if (slot.j == l) return nbar_mod(t, m, w);
            if (slot.j == m) return n_mod(t, m, w);
            return 0.0;
        case UnfoldedSlot::Kind::Qbar:
            if (slot.j == l) return nbar_mod(t, l, w);
            if (slot.j == m) return n_mod(t, l, w);
            return 0.0;
        case UnfoldedSlot::Kind::R:
            if (slot.i == l && slot.j == m) return m0_mod(t, w);
            if (slot.i == l) return nbar_mod(t, slot.j, w);
            if (slot.i == m) return n_mod(t, slot.j, w);
            if (slot.j == l) return nbar_mod(t, slot.i, w);
            if (slot.j == m) return n_mod(t, slot.i, w);
            return 0.0;
    }
    throw IndexOutOfRange("unknown unfolded slot");
}

}  // namespace sosdw
