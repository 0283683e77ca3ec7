#include "doctest.h"

#include "blanchfield/homology.hpp"

#include <random>

using namespace blanchfield;

namespace {

RingElement Z(long long v) { return RingElement::integer(v); }
RingElement L(std::map<int, Rat> c) { return RingElement::laurent(std::move(c)); }

std::mt19937 rng(424243);

RMatrix random_int_matrix(int r, int c, int lim = 6) {
    std::uniform_int_distribution<int> d(-lim, lim);
    RMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = Z(d(rng));
    return m;
}

RMatrix random_laurent_matrix(int r, int c) {
    std::uniform_int_distribution<int> d(-3, 3), e(-1, 1), n(0, 2);
    RMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            std::map<int, Rat> cc;
            int terms = n(rng);
            for (int k = 0; k < terms; ++k) cc[e(rng)] += d(rng);
            m(i, j) = L(std::move(cc));
        }
    return m;
}

void check_snf(const RMatrix& A, Ring ring) {
    SmithForm s = smith_normal_form(A);
    CHECK(s.U * s.D * s.V == A);
    RingElement onel = RingElement::one(ring);
    CHECK(s.U * s.Uinv == RMatrix::identity(A.rows(), onel));
    CHECK(s.V * s.Vinv == RMatrix::identity(A.cols(), onel));
    for (int i = 0; i < s.D.rows(); ++i)
        for (int j = 0; j < s.D.cols(); ++j)
            if (i != j) CHECK(s.D(i, j).is_zero());
    for (int i = 0; i + 1 < std::min(s.D.rows(), s.D.cols()); ++i) {
        if (s.D(i + 1, i + 1).is_zero()) continue;
        CHECK(!s.D(i, i).is_zero());
        auto [q, r] = euclidean_divmod(s.D(i + 1, i + 1), s.D(i, i));
        CHECK(r.is_zero());
    }
}

}  // namespace

TEST_CASE("smith normal form basics") {
    RMatrix A(2, 2);
    A(0, 0) = Z(2);
    A(1, 1) = Z(3);
    SmithForm s = smith_normal_form(A);
    CHECK(s.diag(0) == Z(1));
    CHECK(s.diag(1) == Z(6));
    check_snf(A, Ring::Integers);

    RMatrix B(1, 1);
    B(0, 0) = L({{1, 2}, {0, -2}});  // 2t - 2
    SmithForm sb = smith_normal_form(B);
    // monic normalization with nonzero constant term: t - 1
    CHECK(sb.diag(0) == L({{1, 1}, {0, -1}}));
    check_snf(B, Ring::Laurent);
}

TEST_CASE("smith normal form randomized with minor-gcd oracle") {
    for (int trial = 0; trial < 30; ++trial) {
        RMatrix A = random_int_matrix(4, 5);
        check_snf(A, Ring::Integers);
        SmithForm s = smith_normal_form(A);
        RingElement prod = RingElement::integer(1);
        for (int k = 1; k <= s.rank; ++k) {
            prod = prod * s.diag(k - 1);
            RingElement g = minor_gcd(A, k);
            RingElement pn = canonical_unit(prod) * prod;
            CHECK(pn == g);
        }
    }
    for (int trial = 0; trial < 10; ++trial) {
        RMatrix A = random_laurent_matrix(3, 4);
        check_snf(A, Ring::Laurent);
    }
}

TEST_CASE("module presentations") {
    RMatrix rel(2, 1);
    rel(1, 0) = Z(6);
    ModulePresentation m = present_cokernel(rel);
    CHECK(m.torsion_count() == 1);
    CHECK(m.free_rank() == 1);
    CHECK(m.invariants[0] == Z(6));
    ModulePresentation t = torsion_part(m);
    CHECK(t.free_rank() == 0);
    CHECK(t.to_string() == "Z/(6)");

    RMatrix rel2(1, 1);
    rel2(0, 0) = L({{2, 1}, {1, -1}, {0, 1}});
    ModulePresentation m2 = present_cokernel(rel2);
    CHECK(m2.torsion_count() == 1);
    CHECK(m2.invariants[0] == L({{2, 1}, {1, -1}, {0, 1}}));

    RMatrix rel3(2, 0);
    ModulePresentation m3 = present_cokernel(rel3);
    CHECK(m3.torsion_count() == 0);
    CHECK(m3.free_rank() == 2);
}

TEST_CASE("homology of small complexes") {
    ChainComplex<RingElement> C;
    C.set_rank(0, 1);
    C.set_rank(1, 1);
    RMatrix d1(1, 1);
    d1(0, 0) = L({{1, 1}, {0, -1}});
    C.set_boundary(1, d1);
    HomologyData h0 = homology(C, 0);
    CHECK(h0.module.torsion_count() == 1);
    CHECK(h0.module.invariants[0] == L({{1, 1}, {0, -1}}));
    HomologyData h1 = homology(C, 1);
    CHECK(h1.module.is_trivial());

    ChainComplex<RingElement> P;
    P.set_rank(0, 1);
    ChainMap<RingElement> f;
    RMatrix m(1, 1);
    m(0, 0) = L({{1, 1}, {0, -1}});
    f.comp[0] = m;
    ChainComplex<RingElement> cone = mapping_cone(f, P, P);
    CHECK(homology(cone, 0).module.to_string() == "L/(t - 1)");
    CHECK(homology(cone, 1).module.is_trivial());

    ChainMap<RingElement> id;
    id.comp[0] = RMatrix::identity(1, RingElement::one(Ring::Laurent));
    ChainComplex<RingElement> cid = mapping_cone(id, P, P);
    for (int r = cid.lo(); r <= cid.hi(); ++r)
        CHECK(homology(cid, r).module.is_trivial());
}

TEST_CASE("homology cycle lifts multiply back") {
    for (int trial = 0; trial < 10; ++trial) {
        RMatrix d1 = random_int_matrix(2, 4);
        SmithForm s = smith_normal_form(d1);
        int kdim = 4 - s.rank;
        if (kdim == 0) continue;
        RMatrix K(4, kdim);
        for (int j = 0; j < kdim; ++j)
            for (int i = 0; i < 4; ++i) K(i, j) = s.Vinv(i, s.rank + j);
        RMatrix mix = random_int_matrix(kdim, 3, 2);
        RMatrix d2 = K * mix;
        ChainComplex<RingElement> C;
        C.set_rank(0, 2);
        C.set_rank(1, 4);
        C.set_rank(2, 3);
        C.set_boundary(1, d1);
        C.set_boundary(2, d2);
        REQUIRE(C.validate().ok);
        HomologyData h = homology(C, 1);
        for (int g = 0; g < h.cycle_lifts.cols(); ++g) {
            std::vector<RingElement> v = h.cycle_lifts.col(g);
            std::vector<RingElement> dv = mat_apply(d1, v);
            for (auto& x : dv) CHECK(x.is_zero());
        }
        for (int g = 0; g < h.module.torsion_count(); ++g) {
            std::vector<RingElement> v = h.cycle_lifts.col(g);
            for (auto& x : v) x = h.module.invariants[g] * x;
            SolveResult sr = solve_linear(d2, v);
            CHECK(sr.solution.has_value());
        }
    }
}

TEST_CASE("solve_linear") {
    RMatrix A(1, 1);
    A(0, 0) = Z(2);
    SolveResult r1 = solve_linear(A, {Z(4)});
    REQUIRE(r1.solution.has_value());
    CHECK((*r1.solution)[0] == Z(2));
    SolveResult r2 = solve_linear(A, {Z(3)});
    CHECK(!r2.solution.has_value());
    CHECK(r2.failure_index == 0);

    for (int trial = 0; trial < 25; ++trial) {
        RMatrix M = random_int_matrix(3, 4);
        RMatrix x0 = random_int_matrix(4, 1);
        std::vector<RingElement> b = mat_apply(M, x0.col(0));
        SolveResult s = solve_linear(M, b);
        REQUIRE(s.solution.has_value());
        std::vector<RingElement> bb = mat_apply(M, *s.solution);
        for (size_t i = 0; i < b.size(); ++i) CHECK(bb[i] == b[i]);
    }
}

TEST_CASE("null homotopy search") {
    ChainComplex<RingElement> C;
    C.set_rank(0, 1);
    C.set_rank(1, 1);
    RMatrix d1(1, 1);
    d1(0, 0) = L({{1, 1}, {0, -1}});
    C.set_boundary(1, d1);

    ChainMap<RingElement> zero;
    NullHomotopyResult r0 = is_null_homotopic(zero, C, C);
    CHECK(r0.homotopy.has_value());

    ChainHomotopy<RingElement> k0;
    RMatrix k00(1, 1);
    k00(0, 0) = L({{1, 2}, {-1, 3}});
    k0.comp[0] = k00;
    ChainMap<RingElement> f;
    f.comp[0] = C.bd(1) * k00;
    f.comp[1] = k00 * C.bd(1);
    NullHomotopyResult r1 = is_null_homotopic(f, C, C);
    REQUIRE(r1.homotopy.has_value());
    for (int r = 0; r <= 1; ++r) {
        RMatrix lhs = f.at(r, C, C);
        RMatrix rhs = C.bd(r + 1) * r1.homotopy->at(r, C, C) +
                      r1.homotopy->at(r - 1, C, C) * C.bd(r);
        CHECK(lhs == rhs);
    }

    ChainComplex<RingElement> P;
    P.set_rank(0, 1);
    ChainMap<RingElement> idm;
    idm.comp[0] = RMatrix::identity(1, RingElement::one(Ring::Laurent));
    NullHomotopyResult r2 = is_null_homotopic(idm, P, P);
    CHECK(!r2.homotopy.has_value());
    CHECK(r2.failure_degree == 0);
}

TEST_CASE("quasi isomorphism detection") {
    ChainComplex<RingElement> C;
    C.set_rank(0, 1);
    C.set_rank(1, 1);
    RMatrix d1(1, 1);
    d1(0, 0) = L({{1, 1}, {0, -1}});
    C.set_boundary(1, d1);
    ChainMap<RingElement> id;
    id.comp[0] = RMatrix::identity(1, RingElement::one(Ring::Laurent));
    id.comp[1] = RMatrix::identity(1, RingElement::one(Ring::Laurent));
    CHECK(is_quasi_iso(id, C, C).ok);

    ChainMap<RingElement> zero;
    QuasiIsoReport q = is_quasi_iso(zero, C, C);
    CHECK(!q.ok);
}
