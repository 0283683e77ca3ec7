#include "blanchfield/representation.hpp"

namespace blanchfield {

namespace {
[[noreturn]] void fail(const std::string& m) { throw std::runtime_error(m); }
}

Representation Representation::tautological() {
    Representation r;
    r.ring = Ring::Laurent;
    r.dim = 1;
    r.group = GroupSpec::free_abelian(1, "t");
    RMatrix t(1, 1), ti(1, 1), th(1, 1);
    t(0, 0) = RingElement::laurent_term(1, 1);
    ti(0, 0) = RingElement::laurent_term(-1, 1);
    th(0, 0) = RingElement::one(Ring::Laurent);
    r.gens = {t};
    r.gen_invs = {ti};
    r.theta = th;
    return r;
}

Representation Representation::trivial(const GroupSpec& g) {
    Representation r;
    r.ring = Ring::Integers;
    r.dim = 1;
    r.group = g;
    RMatrix one(1, 1);
    one(0, 0) = RingElement::integer(1);
    r.gens.assign(g.ngens(), one);
    r.gen_invs.assign(g.ngens(), one);
    r.theta = one;
    return r;
}

Representation Representation::regular_cyclic(const GroupSpec& g, int k) {
    if (g.ngens() != 1) fail("regular_cyclic: single-generator groups only");
    Representation r;
    r.ring = Ring::Integers;
    r.dim = k;
    r.group = g;
    RMatrix P(k, k), Pinv(k, k);
    for (int i = 0; i < k; ++i) {
        P((i + 1) % k, i) = RingElement::integer(1);
        Pinv(i, (i + 1) % k) = RingElement::integer(1);
    }
    r.gens = {P};
    r.gen_invs = {Pinv};
    r.theta = RMatrix::identity(k, RingElement::integer(1));
    return r;
}

void Representation::validate() const {
    if ((int)gens.size() != group.ngens() || (int)gen_invs.size() != group.ngens())
        fail("representation: generator count mismatch");
    RMatrix id = RMatrix::identity(dim, RingElement::one(ring));
    for (int g = 0; g < group.ngens(); ++g) {
        if (gens[g].rows() != dim || gens[g].cols() != dim)
            fail("representation: matrix size mismatch");
        if (!(gens[g] * gen_invs[g] == id))
            fail("representation: stored inverse fails for generator " +
                 group.names[g]);
        int ord = group.orders[g];
        if (ord > 0) {
            RMatrix pow = id;
            for (int i = 0; i < ord; ++i) pow = pow * gens[g];
            if (!(pow == id))
                fail("representation: generator order not respected");
        }
    }
    if (theta.rows() != dim || theta.cols() != dim) fail("representation: theta size");
    if (!(conj_transpose(theta) == theta))
        fail("representation: theta not conj-transpose-symmetric");
    for (int j = 0; j < dim; ++j) {
        std::vector<RingElement> ej(dim, RingElement::zero(ring));
        ej[j] = RingElement::one(ring);
        if (!solve_linear(theta, ej).solution) fail("representation: theta not invertible");
    }
}

RMatrix represent_word(const Representation& rep, const GroupWord& w) {
    RMatrix m = RMatrix::identity(rep.dim, RingElement::one(rep.ring));
    for (auto [g, e] : w.letters()) {
        if (g < 0 || g >= rep.group.ngens()) fail("represent: unknown generator index");
        const RMatrix& base = e > 0 ? rep.gens[g] : rep.gen_invs[g];
        for (int i = 0; i < std::abs(e); ++i) m = m * base;
    }
    return m;
}

RMatrix represent(const Representation& rep, const GroupRingElement& x) {
    RMatrix m(rep.dim, rep.dim);
    for (const auto& [w, c] : x.terms()) {
        RMatrix wm = represent_word(rep, w);
        RingElement cr = rep.ring == Ring::Laurent
                             ? RingElement::laurent_term(0, Rat(c))
                             : (rep.ring == Ring::Integers ? RingElement::integer(c)
                                                           : RingElement::rational(Rat(c)));
        m = m + wm.scaled(cr);
    }
    return m;
}

UnitarityReport check_unitary(const Representation& rep) {
    UnitarityReport rpt;
    // alpha(g^-1) = Theta^-1 conjT(alpha(g)) Theta, tested without inverting
    // Theta:  Theta * alpha(g^-1) = conjT(alpha(g)) * Theta
    for (int g = 0; g < rep.group.ngens(); ++g) {
        RMatrix lhs = rep.theta * rep.gen_invs[g];
        RMatrix rhs = conj_transpose(rep.gens[g]) * rep.theta;
        if (!(lhs == rhs)) {
            rpt.ok = false;
            rpt.failing_generators.push_back(g);
        }
    }
    return rpt;
}

RMatrix dual_pairing_identify(const Representation& rep, int n) {
    // evaluation of z against w factors as sum_j w_j^T Theta^{-1} conj(z_j);
    // the identification matrix is I_n ox conj(Theta)^{-1}
    RMatrix thc = conj_transpose(rep.theta).transpose();  // entrywise conj
    // invert theta_conj by solving columns
    int d = rep.dim;
    RMatrix inv(d, d);
    for (int j = 0; j < d; ++j) {
        std::vector<RingElement> ej(d, RingElement::zero(rep.ring));
        ej[j] = RingElement::one(rep.ring);
        SolveResult s = solve_linear(thc, ej);
        if (!s.solution) fail("dual_pairing_identify: theta not invertible");
        for (int i = 0; i < d; ++i) inv(i, j) = (*s.solution)[i];
    }
    RMatrix out(n * d, n * d);
    for (int b = 0; b < n; ++b)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) out(b * d + i, b * d + j) = inv(i, j);
    return out;
}

Matrix<RingElement> tensor_with_V(const Representation& rep,
                                  const Matrix<GroupRingElement>& M) {
    int d = rep.dim;
    RMatrix out(M.rows() * d, M.cols() * d);
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) {
            if (M(i, j).is_zero()) continue;
            RMatrix blk = represent(rep, M(i, j));
            out.paste(i * d, j * d, blk);
        }
    return out;
}

ChainComplex<RingElement> tensor_with_V(const Representation& rep,
                                        const ChainComplex<GroupRingElement>& C) {
    ChainComplex<RingElement> out;
    for (const auto& [deg, rk] : C.ranks()) out.set_rank(deg, rk * rep.dim);
    for (int r = C.lo(); r <= C.hi() + 1; ++r) {
        if (!C.rank(r) || !C.rank(r - 1)) continue;
        out.set_boundary(r, tensor_with_V(rep, C.bd(r)));
    }
    DegreeReport rpt = out.validate();
    if (!rpt.ok)
        fail("tensor_with_V: d^2 != 0 after substitution at degree " +
             std::to_string(rpt.degree) + " (relations not respected?)");
    return out;
}

}  // namespace blanchfield
