#include "doctest.h"

#include "blanchfield/builders.hpp"
#include "blanchfield/symmetric.hpp"

using namespace blanchfield;

namespace {

GroupSpec zz = GroupSpec::free_abelian(1, "t");

GroupRingElement G(const std::string& s) { return GroupRingElement::parse(s, zz); }

Matrix<GroupRingElement> gm(int rows, int cols, std::vector<std::string> entries) {
    Matrix<GroupRingElement> m(rows, cols);
    int k = 0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = G(entries[k++]);
    return m;
}

SymComplex<GroupRingElement> circle_symmetric() {
    SymComplex<GroupRingElement> S;
    S.n = 1;
    S.C.set_rank(0, 1);
    S.C.set_rank(1, 1);
    S.C.set_boundary(1, gm(1, 1, {"t - 1"}));
    S.phi.set(0, 0, gm(1, 1, {"t"}));
    S.phi.set(0, 1, gm(1, 1, {"1"}));
    S.phi.set(1, 1, gm(1, 1, {"1"}));
    return S;
}

SymStructure<GroupRingElement> circle_phi() {
    SymStructure<GroupRingElement> phi;
    phi.set(0, 0, gm(1, 1, {"t"}));
    phi.set(0, 1, gm(1, 1, {"1"}));
    phi.set(1, 1, gm(1, 1, {"1"}));
    return phi;
}

// the annulus piece of the knot builder, as a standalone cobordism
Cobordism annulus_cobordism() {
    SeifertData unknot;  // empty Seifert matrix
    KnotTriad K = knot_triad(unknot);
    Cobordism c;
    c.n = 1;
    c.right = K.triad.D;
    c.body = K.triad.A;
    c.fR = K.triad.jA.incl;
    c.dphi = K.triad.phiA;
    c.phi_right = K.triad.chi.negated();
    return c;
}

}  // namespace

TEST_CASE("check_symmetric on the circle") {
    SymComplex<GroupRingElement> S = circle_symmetric();
    CHECK(check_symmetric(S).ok());

    // zero complex passes vacuously
    SymComplex<GroupRingElement> Z;
    Z.n = 1;
    CHECK(check_symmetric(Z).ok());

    // perturbing one phi_0 entry fails at the perturbed spot
    SymComplex<GroupRingElement> bad = circle_symmetric();
    bad.phi.set(0, 0, gm(1, 1, {"t + 1"}));
    ResidualReport r = check_symmetric(bad);
    CHECK(!r.ok());
    CHECK(r.failures[0].s == 0);
}

TEST_CASE("transpose component is an involution") {
    SymComplex<GroupRingElement> S = circle_symmetric();
    for (int s = 0; s <= 1; ++s)
        for (int r = 0; r <= 1 + s; ++r) {
            // T(T(phi))^{(r)} = phi^{(r)}
            SymStructure<GroupRingElement> tphi;
            for (int rr = 0; rr <= 1 + s; ++rr)
                tphi.set(s, rr, transpose_component(S.phi, s, rr, S.C, 1 + s));
            Matrix<GroupRingElement> back = transpose_component(tphi, s, r, S.C, 1 + s);
            CHECK(back == S.phi.at(s, r, S.C, 1 + s));
        }
}

TEST_CASE("annulus cobordism satisfies the pair equations") {
    Cobordism c = annulus_cobordism();
    CHECK(c.check().ok());
}

TEST_CASE("union of a cobordism with its reverse closes up") {
    // view the annulus as a cobordism from nothing to its two-circle
    // boundary, then glue the structure-negated reverse: the double is a
    // closed symmetric complex (the torus)
    Cobordism c = annulus_cobordism();
    Cobordism rev;
    rev.n = 1;
    rev.left = c.right;
    rev.body = c.body;
    rev.fL = c.fR;
    rev.dphi = c.dphi.negated();
    rev.phi_left = c.phi_right;
    Cobordism u = union_cobordisms(c, rev);
    CHECK(u.body.validate().ok);
    CHECK(u.body.rank(0) == 4);
    CHECK(u.body.rank(1) == 8);
    CHECK(u.body.rank(2) == 4);
    CHECK(u.check().ok());
}

TEST_CASE("union along an empty boundary is the direct sum") {
    SymComplex<GroupRingElement> S = circle_symmetric();
    // two closed circles as cobordisms with empty boundaries; here the pair
    // structure of a closed piece is its symmetric structure shifted into
    // the body slot with dimension n = 0 boundary
    Cobordism a;
    a.n = 0;
    a.body = S.C;
    a.dphi = S.phi;
    Cobordism b = a;
    Cobordism u = union_cobordisms(a, b);
    CHECK(u.body.rank(0) == 2);
    CHECK(u.body.rank(1) == 2);
    // boundary matrices are block diagonal
    CHECK(u.body.bd(1)(0, 1).is_zero());
    CHECK(u.body.bd(1)(1, 0).is_zero());
    // structure blocks: top-left and bottom-right carry the summands
    Matrix<GroupRingElement> m = u.dphi.at(0, 1, u.body, 1);
    CHECK(m(0, 0) == G("1"));
    CHECK(m(1, 1) == G("1"));
    CHECK(m(0, 1).is_zero());
}

TEST_CASE("boundary mismatch is rejected") {
    Cobordism c = annulus_cobordism();
    Cobordism rev;
    rev.n = 1;
    rev.left = c.right;
    rev.body = c.body;
    rev.fL = c.fR;
    rev.dphi = c.dphi.negated();
    rev.phi_left = c.phi_right.negated();  // wrong sign on the shared piece
    CHECK_THROWS(union_cobordisms(c, rev));
}

TEST_CASE("quotient complexes of split inclusions") {
    SeifertData trefoil;
    trefoil.V = {{-1, 1}, {0, -1}};
    KnotTriad K = knot_triad(trefoil);
    QuotientData<GroupRingElement> qb =
        quotient_complex(K.triad.B, K.triad.C, K.triad.iB);
    CHECK(qb.Q.rank(0) == 0);
    CHECK(qb.Q.rank(1) == 3);   // lA, x1, x2
    CHECK(qb.Q.rank(2) == 4);   // FA, f, r1, r2
    CHECK(qb.Q.rank(3) == 1);
    CHECK(qb.Q.validate().ok);
    // projection and section compose to the identity
    for (int r = 1; r <= 3; ++r) {
        Matrix<GroupRingElement> ps =
            qb.proj.at(r, K.triad.C, qb.Q) * qb.section.at(r, qb.Q, K.triad.C);
        CHECK(ps == Matrix<GroupRingElement>::identity(qb.Q.rank(r), G("1")));
    }
}

TEST_CASE("triad checker catches corrupted data") {
    SeifertData trefoil;
    trefoil.V = {{-1, 1}, {0, -1}};
    KnotTriad K = knot_triad(trefoil);
    CHECK(check_triad(K.triad).ok());
    // zero out Phi_0: outer pair equations must fail
    SymTriad<GroupRingElement> bad = K.triad;
    bad.Phi.comp.erase({0, 1});
    ResidualReport r = check_triad(bad);
    CHECK(!r.ok());
    // break i_A j_A = i_B j_B
    SymTriad<GroupRingElement> bad2 = K.triad;
    Matrix<GroupRingElement> j0 = bad2.jA.incl.comp[0];
    j0(0, 0) = G("t");
    bad2.jA.incl.comp[0] = j0;
    ResidualReport r2 = check_triad(bad2);
    CHECK(!r2.ok());
    CHECK(r2.failures[0].what == "i_A j_A != i_B j_B");
}
