#include "sosdw/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <string>

using namespace sosdw;

namespace {

CheckId make_id(CheckId::Kind kind, EquationType t = EquationType::A, int a = 0, int b = 0) {
    CheckId id;
    id.kind = kind;
    id.type = t;
    id.a = a;
    id.b = b;
    return id;
}

}  // namespace

TEST_CASE("sampling is deterministic and guard-passing") {
    const ThetaContext ctx;
    const ModelParams a = sample_params(2, 7, ctx);
    const ModelParams b = sample_params(2, 7, ctx);
    CHECK(a.x == b.x);
    CHECK(a.mu == b.mu);
    CHECK(a.x0 == b.x0);
    CHECK(a.x0bar == b.x0bar);
    CHECK(a.tau == b.tau);
    CHECK(a.gamma == b.gamma);

    CHECK(min_guard_theta(a) >= guard_threshold(ctx));
    CHECK(a.gamma.imag() == 0.0);
    CHECK(a.gamma.real() >= 0.2);
    CHECK(a.gamma.real() <= 0.8);
    for (const cplx& v : a.x) {
        CHECK(std::abs(v.real()) <= 1.0);
        CHECK(std::abs(v.imag()) <= 0.5);
    }
    const ModelParams c = sample_params(2, 8, ctx);
    CHECK(c.x != a.x);
    CHECK_THROWS_AS(sample_params(0, 1, ctx), IndexOutOfRange);
}

TEST_CASE("auxiliary resampling keeps the base draw") {
    const ThetaContext ctx;
    const ModelParams a = sample_params(2, 3, ctx);
    const ModelParams r = resample_aux(a, 99);
    CHECK(r.x == a.x);
    CHECK(r.mu == a.mu);
    CHECK(r.tau == a.tau);
    CHECK(r.gamma == a.gamma);
    CHECK(r.x0 != a.x0);
    const ModelParams r2 = resample_aux(a, 99);
    CHECK(r2.x0 == r.x0);
    CHECK(r2.x0bar == r.x0bar);
}

TEST_CASE("check names are stable") {
    CHECK(make_id(CheckId::Kind::EqA).name() == "eqA");
    CHECK(make_id(CheckId::Kind::ModD).name() == "modD");
    CHECK(make_id(CheckId::Kind::Unfolded).name() == "unfolded(0,0bar)");
    CHECK(make_id(CheckId::Kind::Unfolded, EquationType::A, 1, 2).name() == "unfolded(1,2)");
    CHECK(make_id(CheckId::Kind::Hz, EquationType::D).name() == "hz(D)");
    CHECK(make_id(CheckId::Kind::Hzsys, EquationType::D, 0, 2).name() == "hzsys(D,2)");
    CHECK(make_id(CheckId::Kind::Ztoz, EquationType::A, 0, 1).name() == "ztoz(A,1)");
    CHECK(make_id(CheckId::Kind::RepA, EquationType::A, 0, 0).name() == "repA(0)");
    CHECK(make_id(CheckId::Kind::RepD, EquationType::A, 0, 2).name() == "repD(2)");
    CHECK(make_id(CheckId::Kind::Golden, EquationType::A, 2, 0).name() == "golden(2,A)");
    CHECK(make_id(CheckId::Kind::ThetaProps).name() == "theta_props");
    CHECK(make_id(CheckId::Kind::Symmetry).name() == "symmetry");
}

TEST_CASE("thresholds ladder by check kind") {
    const Thresholds th;
    CHECK(th.for_kind(CheckId::Kind::EqA) == 1e-8);
    CHECK(th.for_kind(CheckId::Kind::Unfolded) == 1e-8);
    CHECK(th.for_kind(CheckId::Kind::Ztoz) == 1e-8);
    CHECK(th.for_kind(CheckId::Kind::RepD) == 1e-8);
    CHECK(th.for_kind(CheckId::Kind::Golden) == 1e-10);
    CHECK(th.for_kind(CheckId::Kind::ThetaProps) == 1e-12);
    CHECK(th.for_kind(CheckId::Kind::Symmetry) == 1e-12);
}

TEST_CASE("check expansion enumerates types and indices") {
    CHECK(expand_check(CheckId::Kind::EqA, 3).size() == 1);
    CHECK(expand_check(CheckId::Kind::Unfolded, 3).size() == 7);
    CHECK(expand_check(CheckId::Kind::Hz, 3).size() == 2);
    CHECK(expand_check(CheckId::Kind::Hzsys, 2).size() == 4);
    CHECK(expand_check(CheckId::Kind::Ztoz, 3).size() == 6);
    CHECK(expand_check(CheckId::Kind::RepA, 2).size() == 3);
    CHECK(expand_check(CheckId::Kind::Golden, 2).size() == 2);
    CHECK(expand_check(CheckId::Kind::Golden, 3).empty());
    CHECK(all_check_kinds().size() == 13);
}

TEST_CASE("all checks pass at sampled points") {
    const ThetaContext ctx;
    const Thresholds th;
    for (const int L : {1, 2}) {
        const ModelParams mp = sample_params(L, 1, ctx);
        for (const CheckId::Kind kind : all_check_kinds())
            for (const CheckId& id : expand_check(kind, L)) {
                const double r = residual(id, mp);
                CHECK_MESSAGE(r <= th.for_kind(kind), id.name(), " residual ", r);
            }
    }
}

TEST_CASE("suite runs are complete, passing and repeatable") {
    const auto kinds = all_check_kinds();
    const VerificationReport rep = run_suite({1, 2}, 2, 17, kinds);
    CHECK(rep.overall);
    CHECK(!rep.results.empty());
    int expect = 0;
    for (const int L : {1, 2})
        for (const CheckId::Kind k : kinds)
            expect += 2 * static_cast<int>(expand_check(k, L).size());
    CHECK(static_cast<int>(rep.results.size()) == expect);
    for (const CheckResult& cr : rep.results) {
        CHECK(cr.pass);
        CHECK(cr.error.empty());
        CHECK(cr.millis == 0);
        CHECK(cr.threshold == Thresholds{}.for_kind(cr.id.kind));
    }
    const VerificationReport rep2 = run_suite({1, 2}, 2, 17, kinds);
    REQUIRE(rep2.results.size() == rep.results.size());
    for (size_t k = 0; k < rep.results.size(); ++k) {
        CHECK(rep2.results[k].id.name() == rep.results[k].id.name());
        CHECK(rep2.results[k].residual == rep.results[k].residual);
    }
}

TEST_CASE("an empty check selection yields an empty passing report") {
    const VerificationReport rep = run_suite({1}, 1, 0, {});
    CHECK(rep.overall);
    CHECK(rep.results.empty());
}

TEST_CASE("a corrupted leading coefficient fails exactly its own check") {
    struct Restore {
        ~Restore() { testhooks::eqa_coeff_fault = 1.0; }
    } restore;
    const ModelParams mp = sample_params(2, 4, ThetaContext{});
    const Thresholds th;

    testhooks::eqa_coeff_fault = 1.0 + 1e-4;
    CHECK(residual(make_id(CheckId::Kind::EqA), mp) > th.identity);
    CHECK(residual(make_id(CheckId::Kind::EqD), mp) <= th.identity);

    const VerificationReport rep =
        run_suite({2}, 1, 9, {CheckId::Kind::EqA, CheckId::Kind::EqD});
    CHECK(!rep.overall);
    for (const CheckResult& cr : rep.results)
        CHECK(cr.pass == (cr.id.kind == CheckId::Kind::EqD));

    testhooks::eqa_coeff_fault = 1.0;
    CHECK(residual(make_id(CheckId::Kind::EqA), mp) <= th.identity);
}
