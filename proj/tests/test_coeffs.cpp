#include "sosdw/coeffs.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace sosdw;
using namespace sosdw::testsupport;

TEST_CASE("tuple construction and slot swaps") {
    const ModelParams mp = pinned(2);
    const VariableTuple vt = make_tuple(mp);
    CHECK(vt.L() == 2);
    CHECK(vt.bar() == 3);
    REQUIRE(vt.v.size() == 4);
    CHECK(vt.v[0] == mp.x0);
    CHECK(vt.v[1] == mp.x[0]);
    CHECK(vt.v[2] == mp.x[1]);
    CHECK(vt.v[3] == mp.x0bar);

    const VariableTuple sw = swapped(vt, 0, 2);
    CHECK(sw.v[0] == mp.x[1]);
    CHECK(sw.v[2] == mp.x0);
    CHECK(swapped(sw, 0, 2).v == vt.v);
    CHECK(swapped(vt, 1, 1).v == vt.v);
    CHECK_THROWS_AS(swapped(vt, 0, 4), IndexOutOfRange);
    CHECK_THROWS_AS(swapped(vt, -1, 2), IndexOutOfRange);
}

TEST_CASE("original-equation coefficients at the pinned point") {
    const VariableTuple vt = pinned_tuple(2);
    const EquationType A = EquationType::A;
    const EquationType D = EquationType::D;
    CHECK(rel_err(m0_orig(A, vt), {-0.029686134428988086, 0.031158089422583512}) < 1e-13);
    CHECK(rel_err(n_orig(A, 0, vt), {0.045390134151583658, -0.0098690568929959809}) < 1e-13);
    CHECK(rel_err(n_orig(A, 1, vt), {-0.0082228849499214468, 0.10243397303499219}) < 1e-13);
    CHECK(rel_err(n_orig(A, 2, vt), {0.079998454143169856, -0.072322081281894454}) < 1e-13);
    CHECK(rel_err(m0_orig(D, vt), {-0.017778251655718446, 0.54617478944894561}) < 1e-13);
    CHECK(rel_err(n_orig(D, 0, vt), {0.0099859135144736794, -0.42780906997586989}) < 1e-13);
    CHECK(rel_err(n_orig(D, 1, vt), {0.011270430843257083, 0.088256876338946104}) < 1e-13);
    CHECK(rel_err(n_orig(D, 2, vt), {0.14809058502704374, -0.20087852363247792}) < 1e-13);
}

TEST_CASE("modified-equation coefficients at the pinned point") {
    const VariableTuple vt = pinned_tuple(2);
    const EquationType A = EquationType::A;
    const EquationType D = EquationType::D;
    CHECK(rel_err(m0_mod(A, vt), {-0.059388860720801731, -0.66222608014572155}) < 1e-13);
    CHECK(rel_err(n_mod(A, 1, vt), {1.3761564603780466, -1.021468538767239}) < 1e-13);
    CHECK(rel_err(nbar_mod(A, 1, vt), {0.14572138584260945, 0.26292565998950182}) < 1e-13);
    CHECK(rel_err(n_mod(A, 2, vt), {-1.7862290594489302, -0.21016174725887987}) < 1e-13);
    CHECK(rel_err(nbar_mod(A, 2, vt), {-0.18366650838653455, 0.61117469713832694}) < 1e-13);
    CHECK(rel_err(m0_mod(D, vt), {-0.28928710506865222, -0.072920692964409055}) < 1e-13);
    CHECK(rel_err(n_mod(D, 1, vt), {0.16074889617684349, -0.025867662597760054}) < 1e-13);
    CHECK(rel_err(nbar_mod(D, 1, vt), {0.65923675385221504, 0.35330499704940445}) < 1e-13);
    CHECK(rel_err(n_mod(D, 2, vt), {-0.37621880935343628, -0.2588952750810944}) < 1e-13);
    CHECK(rel_err(nbar_mod(D, 2, vt), {-0.35127721330326477, 2.0008786257222822}) < 1e-13);
}

TEST_CASE("coefficient roles dispatch to the named functions") {
    const VariableTuple vt = pinned_tuple(2);
    for (const EquationType t : {EquationType::A, EquationType::D}) {
        CHECK(coeff_value(t, {CoeffRole::Kind::M0Orig, 0}, vt) == m0_orig(t, vt));
        CHECK(coeff_value(t, {CoeffRole::Kind::NOrig, 1}, vt) == n_orig(t, 1, vt));
        CHECK(coeff_value(t, {CoeffRole::Kind::M0Mod, 0}, vt) == m0_mod(t, vt));
        CHECK(coeff_value(t, {CoeffRole::Kind::NMod, 2}, vt) == n_mod(t, 2, vt));
        CHECK(coeff_value(t, {CoeffRole::Kind::NbarMod, 1}, vt) == nbar_mod(t, 1, vt));
    }
}

TEST_CASE("out-of-range indices are rejected") {
    const VariableTuple vt = pinned_tuple(2);
    CHECK_THROWS_AS(n_orig(EquationType::A, 3, vt), IndexOutOfRange);
    CHECK_THROWS_AS(n_orig(EquationType::A, -1, vt), IndexOutOfRange);
    CHECK_THROWS_AS(n_mod(EquationType::A, 0, vt), IndexOutOfRange);
    CHECK_THROWS_AS(nbar_mod(EquationType::D, 3, vt), IndexOutOfRange);
}

TEST_CASE("coinciding spectral and inhomogeneity values zero the numerators") {
    ModelParams mp = pinned(2);
    mp.x0 = mp.mu[0];
    const VariableTuple vt = make_tuple(mp);
    CHECK(m0_orig(EquationType::A, vt) == cplx(0.0));
    CHECK(n_orig(EquationType::D, 0, vt) == cplx(0.0));
}

TEST_CASE("near-singular denominators are refused") {
    ModelParams mp = pinned(2);
    mp.x0 = mp.x[0] + cplx(1e-12, 0.0);
    const VariableTuple vt = make_tuple(mp);
    CHECK_THROWS_AS(n_orig(EquationType::A, 1, vt), SingularDenominator);
    CHECK_THROWS_AS(require_nonsingular(mp), SingularDenominator);
    CHECK_THROWS_AS(theta_den(cplx(1e-9, 0.0), vt), SingularDenominator);
    CHECK(theta_den(vt.gamma, vt) == theta_eval(vt.gamma, vt.theta_ctx));
    CHECK_NOTHROW(require_nonsingular(pinned(3)));
}

TEST_CASE("permutation evaluation composes slot swaps left to right") {
    const VariableTuple vt = pinned_tuple(2);
    const CoeffFn f = [](const VariableTuple& w) { return m0_mod(EquationType::A, w); };
    CHECK(permute_eval(f, {}, vt) == f(vt));
    CHECK(permute_eval(f, {{1, 2}, {1, 2}}, vt) == f(vt));
    CHECK(permute_eval(f, {{1, 2}}, vt) == f(swapped(vt, 1, 2)));
    CHECK(permute_eval(f, {{0, 1}, {1, 3}}, vt) == f(swapped(swapped(vt, 0, 1), 1, 3)));
}

TEST_CASE("exchanging the auxiliary slots flips the modified equation") {
    const VariableTuple vt = pinned_tuple(2);
    const VariableTuple sw = swapped(vt, 0, 3);
    for (const EquationType t : {EquationType::A, EquationType::D}) {
        CHECK(m0_mod(t, sw) == -m0_mod(t, vt));
        for (int i = 1; i <= 2; ++i) {
            CHECK(n_mod(t, i, sw) == -nbar_mod(t, i, vt));
            CHECK(nbar_mod(t, i, sw) == -n_mod(t, i, vt));
        }
    }
}

TEST_CASE("unfolded coefficients at the pinned point") {
    const VariableTuple vt = pinned_tuple(2);
    UnfoldedSlot s;
    s.kind = UnfoldedSlot::Kind::Qbar;
    s.j = 2;
    CHECK(rel_err(unfolded_coeff(EquationType::A, 0, 1, s, vt),
                  {1.1200740963745828, 3.5735434194121994}) < 1e-13);
    s.kind = UnfoldedSlot::Kind::R;
    s.i = 1;
    s.j = 2;
    CHECK(rel_err(unfolded_coeff(EquationType::A, 1, 2, s, vt),
                  {-0.70735228988711622, 0.42306621238851709}) < 1e-13);
    s.kind = UnfoldedSlot::Kind::P0;
    CHECK(rel_err(unfolded_coeff(EquationType::D, 0, 2, s, vt),
                  {0.12669433915980528, 0.19896073089347684}) < 1e-13);
    s.kind = UnfoldedSlot::Kind::Q;
    s.j = 1;
    CHECK(rel_err(unfolded_coeff(EquationType::D, 1, 2, s, vt),
                  {-1.4183961722025921, 1.933423566932004}) < 1e-13);
}

TEST_CASE("unfolded rows reuse the base coefficients under slot swaps") {
    const VariableTuple vt = pinned_tuple(2);
    for (const EquationType t : {EquationType::A, EquationType::D}) {
        UnfoldedSlot p0;
        CHECK(unfolded_coeff(t, 0, 0, p0, vt) == m0_mod(t, vt));
        UnfoldedSlot q2;
        q2.kind = UnfoldedSlot::Kind::Q;
        q2.j = 2;
        CHECK(unfolded_coeff(t, 0, 0, q2, vt) == n_mod(t, 2, vt));

        const VariableTuple w = swapped(vt, 3, 1);
        CHECK(unfolded_coeff(t, 0, 1, p0, vt) == nbar_mod(t, 1, w));
        UnfoldedSlot qb1;
        qb1.kind = UnfoldedSlot::Kind::Qbar;
        qb1.j = 1;
        CHECK(unfolded_coeff(t, 0, 1, qb1, vt) == m0_mod(t, w));
        UnfoldedSlot qb2;
        qb2.kind = UnfoldedSlot::Kind::Qbar;
        qb2.j = 2;
        CHECK(unfolded_coeff(t, 0, 1, qb2, vt) == nbar_mod(t, 2, w));

        const VariableTuple w12 = swapped(swapped(vt, 0, 1), 3, 2);
        UnfoldedSlot r12;
        r12.kind = UnfoldedSlot::Kind::R;
        r12.i = 1;
        r12.j = 2;
        CHECK(unfolded_coeff(t, 1, 2, r12, vt) == m0_mod(t, w12));
    }
}

TEST_CASE("structural zeros are returned without evaluating the kernel") {
    ModelParams mp = pinned(3);
    mp.theta_ctx.max_terms = 1;  // any kernel evaluation would fail to converge
    const VariableTuple vt = make_tuple(mp);
    UnfoldedSlot r12;
    r12.kind = UnfoldedSlot::Kind::R;
    r12.i = 1;
    r12.j = 2;
    CHECK(unfolded_coeff(EquationType::A, 0, 0, r12, vt) == cplx(0.0));
    CHECK(unfolded_coeff(EquationType::D, 0, 3, r12, vt) == cplx(0.0));
    UnfoldedSlot p0;
    CHECK(unfolded_coeff(EquationType::A, 1, 2, p0, vt) == cplx(0.0));
    UnfoldedSlot q3;
    q3.kind = UnfoldedSlot::Kind::Q;
    q3.j = 3;
    CHECK(unfolded_coeff(EquationType::A, 1, 2, q3, vt) == cplx(0.0));
    UnfoldedSlot qb3;
    qb3.kind = UnfoldedSlot::Kind::Qbar;
    qb3.j = 3;
    CHECK(unfolded_coeff(EquationType::D, 1, 2, qb3, vt) == cplx(0.0));
    CHECK_THROWS_AS(m0_mod(EquationType::A, vt), NonConvergent);
}

TEST_CASE("unfolded labels and column indices are validated") {
    const VariableTuple vt = pinned_tuple(2);
    UnfoldedSlot p0;
    CHECK_THROWS_AS(unfolded_coeff(EquationType::A, 2, 1, p0, vt), IndexOutOfRange);
    CHECK_THROWS_AS(unfolded_coeff(EquationType::A, 1, 1, p0, vt), IndexOutOfRange);
    CHECK_THROWS_AS(unfolded_coeff(EquationType::A, 0, 3, p0, vt), IndexOutOfRange);
    UnfoldedSlot rbad;
    rbad.kind = UnfoldedSlot::Kind::R;
    rbad.i = 2;
    rbad.j = 1;
    CHECK_THROWS_AS(unfolded_coeff(EquationType::A, 0, 1, rbad, vt), IndexOutOfRange);
    UnfoldedSlot qbad;
    qbad.kind = UnfoldedSlot::Kind::Q;
    qbad.j = 3;
    CHECK_THROWS_AS(unfolded_coeff(EquationType::A, 0, 1, qbad, vt), IndexOutOfRange);
}
