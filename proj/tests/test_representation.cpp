#include "doctest.h"

#include "blanchfield/representation.hpp"

#include <random>

using namespace blanchfield;

namespace {
std::mt19937 rng(5150);

GroupWord random_word(const GroupSpec& s) {
    std::uniform_int_distribution<int> len(0, 4), g(0, s.ngens() - 1), e(-2, 2);
    std::vector<std::pair<int, int>> ls;
    int n = len(rng);
    for (int i = 0; i < n; ++i) ls.emplace_back(g(rng), e(rng));
    return GroupWord(std::move(ls)).normalized(s);
}
}  // namespace

TEST_CASE("represent is multiplicative and unital") {
    Representation taut = Representation::tautological();
    taut.validate();
    GroupSpec z3 = GroupSpec::cyclic(3, "g");
    Representation reg = Representation::regular_cyclic(z3, 3);
    reg.validate();
    for (const Representation& rep : {taut, reg}) {
        const GroupSpec& s = rep.group;
        RMatrix id = RMatrix::identity(rep.dim, RingElement::one(rep.ring));
        CHECK(represent(rep, GroupRingElement::one(s)) == id);
        for (int i = 0; i < 250; ++i) {
            GroupWord a = random_word(s), b = random_word(s);
            RMatrix lhs = represent_word(rep, a.product(b, s));
            RMatrix rhs = represent_word(rep, a) * represent_word(rep, b);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("represent on group ring elements") {
    // pi = Z, tautological: 3t - 1 -> (3t - 1)
    Representation taut = Representation::tautological();
    GroupRingElement x =
        GroupRingElement::parse("3*t - 1", GroupSpec::free_abelian(1, "t"));
    RMatrix m = represent(taut, x);
    CHECK(m(0, 0) == RingElement::laurent({{1, 3}, {0, -1}}));

    // Z_3 regular representation: t + t^2 maps to the sum of the two
    // nontrivial permutation matrices
    GroupSpec z3 = GroupSpec::cyclic(3, "g");
    Representation reg = Representation::regular_cyclic(z3, 3);
    GroupRingElement y = GroupRingElement::parse("g + g^2", z3);
    RMatrix my = represent(reg, y);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(my(i, j) == RingElement::integer(i == j ? 0 : 1));
}

TEST_CASE("check_unitary") {
    CHECK(check_unitary(Representation::tautological()).ok);
    CHECK(check_unitary(Representation::regular_cyclic(GroupSpec::cyclic(3, "g"), 3)).ok);
    // t -> (2t) is invertible over the Laurent ring but not unitary
    Representation bad = Representation::tautological();
    bad.gens[0](0, 0) = RingElement::laurent({{1, 2}});
    bad.gen_invs[0](0, 0) = RingElement::laurent({{-1, Rat(1, 2)}});
    bad.validate();
    UnitarityReport r = check_unitary(bad);
    CHECK(!r.ok);
    CHECK(r.failing_generators == std::vector<int>{0});
}

TEST_CASE("unitarity preserves the Theta inner product") {
    // <v a(g), w a(g)>_Theta = <v, w>_Theta, with <v, w> = v^T Theta^-1 conj(w)
    // exercised indirectly: Theta alpha(g^-1) = conjT(alpha(g)) Theta implies
    // conjT(a) Theta a = Theta
    for (auto rep : {Representation::tautological(),
                     Representation::regular_cyclic(GroupSpec::cyclic(4, "g"), 4)}) {
        for (int g = 0; g < rep.group.ngens(); ++g) {
            RMatrix lhs = conj_transpose(rep.gens[g]) * rep.theta * rep.gens[g];
            CHECK(lhs == rep.theta);
        }
    }
}

TEST_CASE("dual pairing identification") {
    Representation one = Representation::trivial(GroupSpec::cyclic(1, "g"));
    CHECK(dual_pairing_identify(one, 1) ==
          RMatrix::identity(1, RingElement::integer(1)));
    Representation taut = Representation::tautological();
    RMatrix e2 = dual_pairing_identify(taut, 2);
    CHECK(e2 == RMatrix::identity(2, RingElement::one(Ring::Laurent)));
    Representation reg = Representation::regular_cyclic(GroupSpec::cyclic(2, "g"), 2);
    RMatrix e = dual_pairing_identify(reg, 1);
    CHECK(e == RMatrix::identity(2, RingElement::integer(1)));
}

TEST_CASE("tensor_with_V") {
    GroupSpec zz = GroupSpec::free_abelian(1, "t");
    ChainComplex<GroupRingElement> circle;
    circle.set_rank(0, 1);
    circle.set_rank(1, 1);
    Matrix<GroupRingElement> d(1, 1);
    d(0, 0) = GroupRingElement::parse("t - 1", zz);
    circle.set_boundary(1, d);

    // augmentation: boundary becomes 0 over Z
    Representation triv = Representation::trivial(zz);
    ChainComplex<RingElement> c0 = tensor_with_V(triv, circle);
    CHECK(c0.bd(1)(0, 0).is_zero());

    // tautological: boundary (t - 1) over the Laurent ring
    ChainComplex<RingElement> c1 = tensor_with_V(Representation::tautological(), circle);
    CHECK(c1.bd(1)(0, 0) == RingElement::laurent({{1, 1}, {0, -1}}));

    // Z_3 regular representation: boundary P - I of rank 2, cokernel Z
    Representation reg = Representation::regular_cyclic(zz, 3);
    ChainComplex<RingElement> c3 = tensor_with_V(reg, circle);
    CHECK(c3.rank(0) == 3);
    HomologyData h = homology(c3, 0);
    CHECK(h.module.torsion_count() == 0);
    CHECK(h.module.free_rank() == 1);
    SmithForm s = smith_normal_form(c3.bd(1));
    CHECK(s.rank == 2);
}
