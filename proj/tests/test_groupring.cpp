#include "doctest.h"

#include "blanchfield/groupring.hpp"
#include "blanchfield/grsolve.hpp"

#include <random>

using namespace blanchfield;

namespace {
std::mt19937 rng(99);

GroupRingElement random_elt(const GroupSpec& s, int span = 2) {
    std::uniform_int_distribution<int> coeff(-3, 3), ex(-span, span), terms(0, 3);
    GroupRingElement out = GroupRingElement::zero(s);
    int n = terms(rng);
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(s.ngens());
        for (auto& x : e) x = ex(rng);
        out = out + GroupRingElement::monomial(s, GroupWord::from_exponents(e), coeff(rng));
    }
    return out;
}
}  // namespace

TEST_CASE("group words reduce and normalize") {
    GroupSpec zz = GroupSpec::free_abelian(1, "t");
    GroupWord w({{0, 2}, {0, -2}});
    CHECK(w.is_identity());
    GroupWord a = GroupWord::generator(0, 3).product(GroupWord::generator(0, -1), zz);
    CHECK(a == GroupWord::from_exponents({2}));

    GroupSpec z3 = GroupSpec::cyclic(3);
    GroupWord b = GroupWord::generator(0, 2).product(GroupWord::generator(0, 2), z3);
    CHECK(b == GroupWord::from_exponents({1}));
    CHECK(GroupWord::generator(0, 2).inverse().normalized(z3) ==
          GroupWord::from_exponents({1}));
}

TEST_CASE("group ring arithmetic and involution") {
    GroupSpec zz = GroupSpec::free_abelian(1, "t");
    for (int i = 0; i < 100; ++i) {
        GroupRingElement a = random_elt(zz), b = random_elt(zz);
        CHECK(conj(a * b) == conj(b) * conj(a));
        CHECK(conj(conj(a)) == a);
        CHECK((a - a).is_zero());
        CHECK(a.augmentation() + b.augmentation() == (a + b).augmentation());
        CHECK(a.augmentation() * b.augmentation() == (a * b).augmentation());
    }
    GroupSpec z2 = GroupSpec::cyclic(2, "g");
    GroupRingElement g = GroupRingElement::monomial(z2, GroupWord::generator(0, 1));
    CHECK(g * g == GroupRingElement::one(z2));
    CHECK(conj(g) == g);
}

TEST_CASE("group ring parse and print round trip") {
    GroupSpec zz = GroupSpec::free_abelian(1, "t");
    GroupRingElement e = GroupRingElement::parse("2*t^-1 + 1 - t^3", zz);
    CHECK(e.to_string() == "-t^3 + 1 + 2*t^-1");
    CHECK(GroupRingElement::parse(e.to_string(), zz) == e);
    for (int i = 0; i < 60; ++i) {
        GroupRingElement a = random_elt(zz);
        CHECK(GroupRingElement::parse(a.to_string(), zz) == a);
    }
    GroupSpec t2 = GroupSpec::free_abelian(2, "t");
    GroupRingElement m = GroupRingElement::parse("t1*t2^-1 - 3", t2);
    CHECK(GroupRingElement::parse(m.to_string(), t2) == m);
}

TEST_CASE("gr_solve over Z[Z] and Z[Z_p]") {
    GroupSpec zz = GroupSpec::free_abelian(1, "t");
    for (int trial = 0; trial < 20; ++trial) {
        GMatrix A(2, 3);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j) A(i, j) = random_elt(zz, 1);
        std::vector<GroupRingElement> x0(3);
        for (auto& x : x0) x = random_elt(zz, 1);
        std::vector<GroupRingElement> b = mat_apply(A, x0);
        auto sol = gr_solve(A, b, zz);
        REQUIRE(sol.has_value());
        std::vector<GroupRingElement> bb = mat_apply(A, *sol);
        for (size_t i = 0; i < b.size(); ++i) CHECK(bb[i] == b[i]);
    }
    GroupSpec z5 = GroupSpec::cyclic(5, "g");
    for (int trial = 0; trial < 20; ++trial) {
        GMatrix A(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) A(i, j) = random_elt(z5, 4);
        std::vector<GroupRingElement> x0(2);
        for (auto& x : x0) x = random_elt(z5, 4);
        std::vector<GroupRingElement> b = mat_apply(A, x0);
        auto sol = gr_solve(A, b, z5);
        REQUIRE(sol.has_value());
        std::vector<GroupRingElement> bb = mat_apply(A, *sol);
        for (size_t i = 0; i < b.size(); ++i) CHECK(bb[i] == b[i]);
    }
    // unsolvable: 2 x = 1 over Z[Z]
    GMatrix A(1, 1);
    A(0, 0) = GroupRingElement::monomial(zz, GroupWord::identity(), 2);
    auto sol = gr_solve(A, {GroupRingElement::one(zz)}, zz);
    CHECK(!sol.has_value());
}
