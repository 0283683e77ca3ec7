#include "doctest.h"

#include "blanchfield/builders.hpp"

#include <random>

using namespace blanchfield;

namespace {
SeifertData trefoil() { return {{{-1, 1}, {0, -1}}}; }

PairingContext trefoil_ctx() {
    static KnotTriad K = [] {
        KnotTriad k = knot_triad(trefoil());
        annulus_sigma(k);
        return k;
    }();
    return PairingContext(K.triad, Representation::tautological());
}
}  // namespace

TEST_CASE("unknot pairing is empty") {
    SeifertData un;
    KnotTriad K = knot_triad(un);
    PairingContext ctx(K.triad, Representation::tautological());
    PairingMatrix m = pairing_matrix(ctx);
    CHECK(m.values.empty());
}

TEST_CASE("trefoil pairing equals the Seifert oracle") {
    PairingContext ctx = trefoil_ctx();
    PairingMatrix m = pairing_matrix(ctx);
    REQUIRE(m.values.size() == 1);
    CHECK(!m.values[0][0].is_zero());
    std::string detail;
    bool ok = oracle_agreement(ctx, trefoil(), &detail);
    if (!ok) MESSAGE(detail);
    CHECK(ok);
}

TEST_CASE("well-definedness under representative perturbations") {
    PairingContext ctx = trefoil_ctx();
    const auto& B = ctx.torsionB();
    const auto& A = ctx.torsionA();
    REQUIRE(B.pres.torsion_count() == 1);
    std::vector<RingElement> y = B.cocycles.col(0), x = A.cocycles.col(0);
    TorsionValue base = ctx.pairing_value(y, x);
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> c(-3, 3), e(-1, 1);
    auto rand_vec = [&](int n) {
        std::vector<RingElement> v(n);
        for (auto& z : v) v.size();
        for (auto& z : v) z = RingElement::laurent({{e(rng), c(rng)}});
        return v;
    };
    // x -> x + delta u ; y -> y + delta v
    const ChainComplex<RingElement>& DA = ctx.cochainsA();
    const ChainComplex<RingElement>& DB = ctx.cochainsB();
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<RingElement> u = rand_vec(DA.rank(2));
        std::vector<RingElement> du = mat_apply(DA.bd(2), u);
        std::vector<RingElement> x2(x);
        for (size_t i = 0; i < x2.size(); ++i) x2[i] = x2[i] + du[i];
        std::vector<RingElement> v = rand_vec(DB.rank(2));
        std::vector<RingElement> dv = mat_apply(DB.bd(2), v);
        std::vector<RingElement> y2(y);
        for (size_t i = 0; i < y2.size(); ++i) y2[i] = y2[i] + dv[i];
        CHECK(ctx.pairing_value(y2, x2) == base);
    }
    // alternative (s', z') choices: s' = lambda s, z' = lambda z + cocycle
    RingElement s = B.pres.invariants[0];
    SolveResult z0 = solve_linear(DB.bd(2), [&] {
        std::vector<RingElement> sy(y.size());
        for (size_t i = 0; i < y.size(); ++i) sy[i] = s * y[i];
        return sy;
    }());
    REQUIRE(z0.solution.has_value());
    for (int trial = 0; trial < 30; ++trial) {
        RingElement lam = RingElement::laurent({{e(rng), 0}, {0, 1 + std::abs(c(rng))}});
        RingElement sp = lam * s;
        std::vector<RingElement> zp(*z0.solution);
        for (auto& zz : zp) zz = lam * zz;
        // add a cocycle: kernel elements of bd(1) in degree 1... use a
        // coboundary from degree 0 side: the dual complex has bd(1): deg1->deg0;
        // cocycles in z-slot are ker of bd(1); coboundaries d(deg2) suffice
        std::vector<RingElement> w = rand_vec(DB.rank(2));
        std::vector<RingElement> dw = mat_apply(DB.bd(2), w);
        // dw is a coboundary in degree 1... wrong degree; instead use
        // multiples of (s y)-solutions differences: zp + ker vector
        SolveResult z1 = solve_linear(DB.bd(2), [&] {
            std::vector<RingElement> sy(y.size());
            for (size_t i = 0; i < y.size(); ++i) sy[i] = sp * y[i];
            return sy;
        }());
        REQUIRE(z1.solution.has_value());
        TorsionValue alt = ctx.pairing_value_given(*z1.solution, sp, x);
        CHECK(alt == base);
        TorsionValue alt2 = ctx.pairing_value_given(zp, sp, x);
        CHECK(alt2 == base);
    }
}

TEST_CASE("sesquilinearity randomized") {
    PairingContext ctx = trefoil_ctx();
    CheckReport r = check_sesquilinear(ctx, 50, 7);
    if (!r.ok)
        for (auto& f : r.failures) MESSAGE(f);
    CHECK(r.ok);
}

TEST_CASE("left and right scaling by t") {
    PairingContext ctx = trefoil_ctx();
    const auto& B = ctx.torsionB();
    const auto& A = ctx.torsionA();
    std::vector<RingElement> y = B.cocycles.col(0), x = A.cocycles.col(0);
    RingElement t = RingElement::laurent_term(1, 1);
    TorsionValue base = ctx.pairing_value(y, x);
    std::vector<RingElement> ty(y);
    for (auto& v : ty) v = t * v;
    CHECK(ctx.pairing_value(ty, x) == t * base);
    std::vector<RingElement> tx(x);
    for (auto& v : tx) v = t * v;
    CHECK(ctx.pairing_value(y, tx) == base * conj(t));
}

TEST_CASE("hermitian verdict on the trefoil triad") {
    PairingContext ctx = trefoil_ctx();
    CheckReport r = check_hermitian(ctx);
    if (!r.ok)
        for (auto& f : r.failures) MESSAGE(f);
    CHECK(r.ok);
}

TEST_CASE("computing with the dual duality map gives equal values") {
    PairingContext ctx = trefoil_ctx();
    const auto& B = ctx.torsionB();
    const auto& A = ctx.torsionA();
    std::vector<RingElement> y = B.cocycles.col(0), x = A.cocycles.col(0);
    CHECK(ctx.pairing_value(y, x) == ctx.pairing_value_dual(y, x));
}

TEST_CASE("nonsingularity of the trefoil pairing") {
    PairingContext ctx = trefoil_ctx();
    CheckReport r = check_nonsingular(ctx);
    if (!r.ok)
        for (auto& f : r.failures) MESSAGE(f);
    CHECK(r.ok);
}

TEST_CASE("homology side agrees with the cohomology side") {
    PairingContext ctx = trefoil_ctx();
    PairingMatrix hom = pairing_matrix(ctx, PairingSide::Homology);
    PairingMatrix coh = pairing_matrix(ctx, PairingSide::Cohomology);
    REQUIRE(hom.values.size() == 1);
    REQUIRE(coh.values.size() == 1);
    // same module, and the value sets agree up to the generator change;
    // with one generator on each side the values agree up to unit-squared
    // scaling u Bl conj(u); both annihilators match
    CHECK(hom.row_annihilators[0] == coh.row_annihilators[0]);
    CHECK(!hom.values[0][0].is_zero());
}

TEST_CASE("hermitian verdict on closed lens triads") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 2}}) {
        LensBuild L = lens_complex({p, q});
        Representation triv = Representation::trivial(L.spec);
        PairingContext ctx(L.triad, triv);
        CheckReport r = check_hermitian(ctx);
        if (!r.ok)
            for (auto& f : r.failures) MESSAGE("L(", p, ",", q, "): ", f);
        CHECK(r.ok);
        CheckReport ns = check_nonsingular(ctx);
        CHECK(ns.ok);
    }
}
