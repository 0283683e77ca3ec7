#include "doctest.h"

#include "blanchfield/builders.hpp"
#include "blanchfield/diagonal.hpp"

using namespace blanchfield;

TEST_CASE("circle diagonal approximation") {
    ComplexWithContraction S = circle_complex();
    DiagonalContext ctx(S.C, S.spec);
    ctx.check_contraction(S.contraction);
    DiagonalApproximation d = diagonal_approximation(S.C, S.spec, S.contraction, 2);
    CHECK(check_diagonal(ctx, d, 2).ok());
    // Delta_0(e) = e ox t p + p ox e
    const BiChain& d0e = d.deltas[0].at({1, 0});
    BiChain expect;
    expect[{1, 0, {0}, 0, 0, {1}}] = 1;
    expect[{0, 0, {0}, 1, 0, {0}}] = 1;
    CHECK(d0e == expect);

    // the point complex: Delta_0(pt) = pt ox pt, higher zero
    CHECK(d.deltas[0].at({0, 0}).size() == 1);
    CHECK(d.deltas[1].at({0, 0}).empty());

    // symmetric structure of [S^1] = e
    SymStructure<GroupRingElement> phi =
        symmetric_from_fundamental(ctx, d, S.fundamental, 1, 1);
    SymComplex<GroupRingElement> sc{S.C, 1, phi};
    CHECK(check_symmetric(sc).ok());
    // negated fundamental class negates phi_0
    GChain neg;
    for (auto& [c, v] : S.fundamental) neg[c] = -v;
    SymStructure<GroupRingElement> phin =
        symmetric_from_fundamental(ctx, d, neg, 1, 1);
    CHECK(phin.at(0, 0, S.C, 1) == -phi.at(0, 0, S.C, 1));
}

TEST_CASE("two circle contractions give homotopic structures") {
    ComplexWithContraction S = circle_complex();
    DiagonalContext ctx(S.C, S.spec);
    Contraction alt = circle_contraction_alt();
    ctx.check_contraction(alt);
    DiagonalApproximation d1 = diagonal_approximation(S.C, S.spec, S.contraction, 2);
    DiagonalApproximation d2 = diagonal_approximation(S.C, S.spec, alt, 2);
    CHECK(check_diagonal(ctx, d2, 2).ok());
    SymStructure<GroupRingElement> p1 =
        symmetric_from_fundamental(ctx, d1, S.fundamental, 1, 1);
    SymStructure<GroupRingElement> p2 =
        symmetric_from_fundamental(ctx, d2, S.fundamental, 1, 1);
    SymComplex<GroupRingElement> sc2{S.C, 1, p2};
    CHECK(check_symmetric(sc2).ok());
    auto nu = certify_structure_homotopy(S.C, S.spec, p1, p2, 1);
    CHECK(nu.has_value());
}

TEST_CASE("torus diagonal approximation (product contraction)") {
    ComplexWithContraction T = torus_complex();
    DiagonalContext ctx(T.C, T.spec);
    ctx.check_contraction(T.contraction);
    DiagonalApproximation d = diagonal_approximation(T.C, T.spec, T.contraction, 2);
    CHECK(check_diagonal(ctx, d, 2).ok());
    SymStructure<GroupRingElement> phi =
        symmetric_from_fundamental(ctx, d, T.fundamental, 2, 2);
    SymComplex<GroupRingElement> sc{T.C, 2, phi};
    CHECK(check_symmetric(sc).ok());

    Contraction alt = torus_contraction_alt();
    ctx.check_contraction(alt);
    DiagonalApproximation d2 = diagonal_approximation(T.C, T.spec, alt, 2);
    SymStructure<GroupRingElement> phi2 =
        symmetric_from_fundamental(ctx, d2, T.fundamental, 2, 2);
    SymComplex<GroupRingElement> sc2{T.C, 2, phi2};
    CHECK(check_symmetric(sc2).ok());
    auto nu = certify_structure_homotopy(T.C, T.spec, phi, phi2, 2);
    CHECK(nu.has_value());
}

TEST_CASE("structure homotopy certificate rejects inequivalent structures") {
    ComplexWithContraction S = circle_complex();
    DiagonalContext ctx(S.C, S.spec);
    DiagonalApproximation d = diagonal_approximation(S.C, S.spec, S.contraction, 2);
    SymStructure<GroupRingElement> phi =
        symmetric_from_fundamental(ctx, d, S.fundamental, 1, 1);
    // 2 [S^1] is not homotopic to [S^1]
    GChain twice;
    for (auto& [c, v] : S.fundamental) twice[c] = 2 * v;
    SymStructure<GroupRingElement> phi2 =
        symmetric_from_fundamental(ctx, d, twice, 1, 1);
    auto nu = certify_structure_homotopy(S.C, S.spec, phi, phi2, 1);
    CHECK(!nu.has_value());
}

TEST_CASE("lens space diagonals for small p") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {5, 2}}) {
        LensBuild L = lens_complex({p, q});
        SymComplex<GroupRingElement> sc{L.triad.C, 3, L.triad.Phi};
        CHECK(check_symmetric(sc).ok());
    }
}
