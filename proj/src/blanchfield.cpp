#include "blanchfield/blanchfield.hpp"

#include <sstream>

namespace blanchfield {

namespace {
[[noreturn]] void fail(const std::string& m) { throw std::runtime_error(m); }

std::vector<RingElement> scaled_vec(const RingElement& c, const std::vector<RingElement>& v) {
    std::vector<RingElement> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}
}  // namespace

PairingContext::PairingContext(const SymTriad<GroupRingElement>& T, const Representation& rep)
    : T_(T), rep_(rep), n_(T.n),
      qa_(quotient_complex(T.A, T.C, T.iA)), qb_(quotient_complex(T.B, T.C, T.iB)) {
    rep_.validate();
    UnitarityReport ur = check_unitary(rep_);
    if (!ur.ok) fail("pairing: representation is not unitary");
    int N = n_ + 2;
    CA_ = tensor_with_V(rep_, qa_.Q);
    CB_ = tensor_with_V(rep_, qb_.Q);
    DA_ = tensor_with_V(rep_, dual_complex(qa_.Q, N));
    DB_ = tensor_with_V(rep_, dual_complex(qb_.Q, N));
    // duality composites over the group ring, then coefficient change
    ChainMap<GroupRingElement> W = duality_composite(T_);
    for (auto& [r, m] : W.comp) WBA_.comp[r] = tensor_with_V(rep_, m);
    for (int r = T.C.lo(); r <= T.C.hi(); ++r) {
        if (!qa_.Q.rank(r) || !qb_.Q.rank(N - r)) continue;
        Matrix<GroupRingElement> m =
            qa_.proj.at(r, T.C, qa_.Q) * T.Phi.at(0, r, T.C, N) *
            conj_transpose(qb_.proj.at(N - r, T.C, qb_.Q));
        WAB_.comp[r] = tensor_with_V(rep_, m);
    }
    // theta inverse
    int d = rep_.dim;
    theta_inv_ = RMatrix(d, d);
    for (int j = 0; j < d; ++j) {
        std::vector<RingElement> ej(d, RingElement::zero(rep_.ring));
        ej[j] = RingElement::one(rep_.ring);
        SolveResult s = solve_linear(rep_.theta, ej);
        if (!s.solution) fail("pairing: theta not invertible");
        for (int i = 0; i < d; ++i) theta_inv_(i, j) = (*s.solution)[i];
    }
    // torsion cohomology in cochain degree 2 <-> homological degree n
    auto side = [&](const ChainComplex<RingElement>& D) {
        TorsionSide out;
        HomologyData h = homology(D, n_);
        ModulePresentation t = torsion_part(h.module);
        out.pres = std::move(t);
        out.cocycles = RMatrix(D.rank(n_), out.pres.torsion_count());
        for (int g = 0; g < out.pres.torsion_count(); ++g)
            for (int i = 0; i < D.rank(n_); ++i) out.cocycles(i, g) = h.cycle_lifts(i, g);
        return out;
    };
    thA_ = side(DA_);
    thB_ = side(DB_);
}

std::optional<RMatrix> PairingContext::sigma_pullback() const {
    if (!T_.sigma) {
        if (T_.A.empty() && T_.B.empty() && T_.D.empty()) {
            // closed case: sigma = identity on C/B = C/A = C
            int k = DA_.rank(n_);
            return RMatrix::identity(k, RingElement::one(rep_.ring));
        }
        return std::nullopt;
    }
    // sigma: C/B -> C/A in degree 2; pullback on 2-cochains is conjT, then V
    Matrix<GroupRingElement> s2 = T_.sigma->at(2, qb_.Q, qa_.Q);
    return tensor_with_V(rep_, conj_transpose(s2));
}

RingElement PairingContext::evaluate(const std::vector<RingElement>& z,
                                     const std::vector<RingElement>& w) const {
    int d = rep_.dim;
    if (z.size() != w.size()) fail("evaluate: size mismatch");
    RingElement acc = RingElement::zero(rep_.ring);
    int blocks = (int)z.size() / d;
    for (int b = 0; b < blocks; ++b)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const RingElement& wz = w[b * d + i];
                const RingElement& zz = z[b * d + j];
                if (wz.is_zero() || zz.is_zero() || theta_inv_(i, j).is_zero()) continue;
                acc = acc + wz * theta_inv_(i, j) * conj(zz);
            }
    return acc;
}

RingElement PairingContext::annihilator_of(const std::vector<RingElement>& y) const {
    // class coefficients over the torsion generators
    const ModulePresentation& p = thB_.pres;
    if (p.torsion_count() == 0) fail("annihilator_of: no torsion");
    // exponent of the module annihilates every class
    return p.invariants.back();
}

TorsionValue PairingContext::pairing_value_given(const std::vector<RingElement>& z,
                                                 const RingElement& s,
                                                 const std::vector<RingElement>& x) const {
    // Phi_0(x) through the composite, landing in the degree-1 chains of C/B
    auto it = WBA_.comp.find(n_);
    if (it == WBA_.comp.end()) return TorsionValue::zero(rep_.ring);
    std::vector<RingElement> w = mat_apply(it->second, x);
    RingElement val = evaluate(z, w);
    return mod_ring(Fraction(conj(val), s));
}

TorsionValue PairingContext::pairing_value(const std::vector<RingElement>& y,
                                           const std::vector<RingElement>& x,
                                           const RingElement& s_hint) const {
    RingElement s = s_hint.is_zero() ? annihilator_of(y) : s_hint;
    // solve delta z = s y in the B cochain complex (degree n+1 -> degree n)
    RMatrix b2 = DB_.bd(n_ + 1);
    SolveResult sol = solve_linear(b2, scaled_vec(s, y));
    if (!sol.solution) fail("pairing_value: cocycle is not annihilated by s (bad input)");
    return pairing_value_given(*sol.solution, s, x);
}

TorsionValue PairingContext::pairing_value_dual(const std::vector<RingElement>& y,
                                                const std::vector<RingElement>& x) const {
    // compute with q_A Phi_0^* q_B^* sigma^* on the sigma-identified classes:
    // here exposed as the raw dual composite replacing Phi_0
    RingElement s = annihilator_of(y);
    RMatrix b2 = DB_.bd(n_ + 1);
    SolveResult sol = solve_linear(b2, scaled_vec(s, y));
    if (!sol.solution) fail("pairing_value_dual: not annihilated");
    // q_B Phi_0^* q_A^* = conjT(q_A Phi_0 q_B^*) taken in cochain degree 2
    auto it = WAB_.comp.find(2);
    if (it == WAB_.comp.end()) return TorsionValue::zero(rep_.ring);
    std::vector<RingElement> w = mat_apply(conj_transpose(it->second), x);
    RingElement val = evaluate(*sol.solution, w);
    return mod_ring(Fraction(conj(val), s));
}

std::string PairingMatrix::to_string() const {
    std::ostringstream os;
    os << (side == PairingSide::Cohomology ? "wtBl" : "Bl") << " matrix "
       << values.size() << " x " << (values.empty() ? 0 : values[0].size()) << "\n";
    for (size_t i = 0; i < values.size(); ++i) {
        os << "  [";
        for (size_t j = 0; j < values[i].size(); ++j) {
            if (j) os << ", ";
            os << values[i][j].to_string();
        }
        os << "]\n";
    }
    return os.str();
}

namespace {

// homology-side generator lift: find a degree-2 cocycle u' on the `src`
// cochain side with  W(u') = u + boundary  in the chain complex `chains`.
std::vector<RingElement> lift_through_duality(const ChainComplex<RingElement>& cochains,
                                              const ChainMap<RingElement>& W,
                                              const ChainComplex<RingElement>& chains,
                                              const std::vector<RingElement>& u, int n) {
    int nu = cochains.rank(n);
    int nb = chains.rank(n + 1);
    RMatrix W1 = W.comp.count(n) ? W.comp.at(n) : RMatrix((int)u.size(), nu);
    RMatrix d2 = chains.bd(n + 1);
    RMatrix dz = cochains.bd(n);  // cocycle condition rows
    int rows = (int)u.size() + dz.rows();
    RMatrix A(rows, nu + nb);
    for (int i = 0; i < W1.rows(); ++i)
        for (int j = 0; j < nu; ++j) A(i, j) = W1(i, j);
    for (int i = 0; i < d2.rows(); ++i)
        for (int j = 0; j < nb; ++j) A(i, nu + j) = -d2(i, j);
    for (int i = 0; i < dz.rows(); ++i)
        for (int j = 0; j < nu; ++j) A((int)u.size() + i, j) = dz(i, j);
    std::vector<RingElement> b(rows);
    for (size_t i = 0; i < u.size(); ++i) b[i] = u[i];
    for (int i = 0; i < dz.rows(); ++i)
        b[u.size() + i] = RingElement::zero(RingElement().ring());
    SolveResult s = solve_linear(A, b);
    if (!s.solution) fail("homology side: duality lift failed (triad not Poincare?)");
    return std::vector<RingElement>(s.solution->begin(), s.solution->begin() + nu);
}

}  // namespace

PairingMatrix pairing_matrix(const PairingContext& ctx, PairingSide side) {
    PairingMatrix out;
    out.side = side;
    out.ring = ctx.ring();
    if (side == PairingSide::Cohomology) {
        const auto& B = ctx.torsionB();
        const auto& A = ctx.torsionA();
        out.row_annihilators = B.pres.invariants;
        out.col_annihilators = A.pres.invariants;
        out.row_generators = B.cocycles;
        out.col_generators = A.cocycles;
        out.values.assign(B.pres.torsion_count(),
                          std::vector<TorsionValue>(A.pres.torsion_count()));
        for (int i = 0; i < B.pres.torsion_count(); ++i) {
            std::vector<RingElement> y = B.cocycles.col(i);
            for (int j = 0; j < A.pres.torsion_count(); ++j)
                out.values[i][j] =
                    ctx.pairing_value(y, A.cocycles.col(j), B.pres.invariants[i]);
        }
        return out;
    }
    // homology side: torsion of H_1 of the V-coefficient quotient chains
    HomologyData hA = homology(ctx.chainsA(), 1);
    HomologyData hB = homology(ctx.chainsB(), 1);
    ModulePresentation tA = torsion_part(hA.module);
    ModulePresentation tB = torsion_part(hB.module);
    out.row_annihilators = tA.invariants;
    out.col_annihilators = tB.invariants;
    out.row_generators = RMatrix(ctx.chainsA().rank(1), tA.torsion_count());
    out.col_generators = RMatrix(ctx.chainsB().rank(1), tB.torsion_count());
    for (int g = 0; g < tA.torsion_count(); ++g)
        for (int i = 0; i < ctx.chainsA().rank(1); ++i)
            out.row_generators(i, g) = hA.cycle_lifts(i, g);
    for (int g = 0; g < tB.torsion_count(); ++g)
        for (int i = 0; i < ctx.chainsB().rank(1); ++i)
            out.col_generators(i, g) = hB.cycle_lifts(i, g);
    out.values.assign(tA.torsion_count(), std::vector<TorsionValue>(tB.torsion_count()));
    // u in TH_1(C/A) lifts through q_A Phi_0 q_B^*; v through q_B Phi_0 q_A^*
    std::vector<std::vector<RingElement>> ulifts, vlifts;
    for (int i = 0; i < tA.torsion_count(); ++i)
        ulifts.push_back(lift_through_duality(ctx.cochainsB(), ctx.dualityAB(),
                                              ctx.chainsA(), out.row_generators.col(i),
                                              ctx.n()));
    for (int j = 0; j < tB.torsion_count(); ++j)
        vlifts.push_back(lift_through_duality(ctx.cochainsA(), ctx.dualityBA(),
                                              ctx.chainsB(), out.col_generators.col(j),
                                              ctx.n()));
    for (int i = 0; i < tA.torsion_count(); ++i)
        for (int j = 0; j < tB.torsion_count(); ++j)
            out.values[i][j] = ctx.pairing_value(ulifts[i], vlifts[j]);
    return out;
}

CheckReport check_sesquilinear(const PairingContext& ctx, int trials, unsigned seed) {
    CheckReport rep;
    std::mt19937 rng(seed);
    const auto& B = ctx.torsionB();
    const auto& A = ctx.torsionA();
    if (B.pres.torsion_count() == 0 || A.pres.torsion_count() == 0) return rep;
    std::uniform_int_distribution<int> coeff(-3, 3), pick_exp(-2, 2);
    auto random_ring = [&]() {
        if (ctx.ring() == Ring::Laurent) {
            std::map<int, Rat> c;
            c[pick_exp(rng)] = coeff(rng);
            c[pick_exp(rng)] += coeff(rng);
            return RingElement::laurent(std::move(c));
        }
        return RingElement::integer(coeff(rng));
    };
    auto random_class = [&](const PairingContext::TorsionSide& side) {
        std::vector<RingElement> v(side.cocycles.rows(), RingElement::zero(ctx.ring()));
        for (int g = 0; g < side.pres.torsion_count(); ++g) {
            RingElement c = random_ring();
            for (int i = 0; i < side.cocycles.rows(); ++i)
                v[i] = v[i] + c * side.cocycles(i, g);
        }
        return v;
    };
    for (int tcase = 0; tcase < trials; ++tcase) {
        std::vector<RingElement> y = random_class(B), x = random_class(A);
        RingElement q = random_ring(), p = random_ring();
        TorsionValue base = ctx.pairing_value(y, x);
        TorsionValue lhs = ctx.pairing_value(scaled_vec(q, y), scaled_vec(p, x));
        TorsionValue rhs = q * base * conj(p);
        if (!(lhs == rhs)) {
            rep.ok = false;
            rep.failures.push_back("sesquilinearity fails at trial " + std::to_string(tcase));
            break;
        }
        // additivity in each slot
        std::vector<RingElement> y2 = random_class(B);
        std::vector<RingElement> ysum(y.size());
        for (size_t i = 0; i < y.size(); ++i) ysum[i] = y[i] + y2[i];
        TorsionValue add_lhs = ctx.pairing_value(ysum, x);
        TorsionValue add_rhs = base + ctx.pairing_value(y2, x);
        if (!(add_lhs == add_rhs)) {
            rep.ok = false;
            rep.failures.push_back("additivity fails at trial " + std::to_string(tcase));
            break;
        }
    }
    return rep;
}

CheckReport check_hermitian(const PairingContext& ctx) {
    CheckReport rep;
    const SymTriad<GroupRingElement>& T = ctx.triad();
    bool closed = T.A.empty() && T.B.empty() && T.D.empty();
    int N = T.n + 2;
    const auto& qa = ctx.quotientA();
    const auto& qb = ctx.quotientB();
    // sigma and homotopy witness
    ChainMap<GroupRingElement> sigma;
    ChainHomotopy<GroupRingElement> k;
    if (closed) {
        for (int r = T.C.lo(); r <= T.C.hi(); ++r) {
            GroupRingElement one;
            Matrix<GroupRingElement> m = T.C.bd(r);
            for (int i = 0; i < m.rows() && one.is_zero(); ++i)
                for (int j = 0; j < m.cols() && one.is_zero(); ++j)
                    if (!m(i, j).is_zero()) one = GroupRingElement::one(m(i, j).spec());
            if (one.is_zero()) continue;
            sigma.comp[r] = Matrix<GroupRingElement>::identity(T.C.rank(r), one);
        }
    } else if (T.sigma) {
        sigma = *T.sigma;
        if (!T.sigma_homotopy) {
            rep.ok = false;
            rep.failures.push_back("sigma supplied without a homotopy witness");
            return rep;
        }
        k = *T.sigma_homotopy;
    } else {
        rep.ok = false;
        rep.failures.push_back("no sigma available (triad not marked hermitian)");
        return rep;
    }
    // verify sigma is a chain map and the witness equation
    if (!sigma.verify(qb.Q, qa.Q).ok) {
        rep.ok = false;
        rep.failures.push_back("sigma is not a chain map");
        return rep;
    }
    for (int r = T.C.lo(); r <= T.C.hi(); ++r) {
        Matrix<GroupRingElement> lhs =
            sigma.at(r, qb.Q, qa.Q) * qb.proj.at(r, T.C, qb.Q) - qa.proj.at(r, T.C, qa.Q);
        Matrix<GroupRingElement> rhs =
            qa.Q.bd(r + 1) * k.at(r, T.C, qa.Q) + k.at(r - 1, T.C, qa.Q) * T.C.bd(r);
        if (!(lhs == rhs)) {
            rep.ok = false;
            rep.failures.push_back("homotopy witness fails at degree " + std::to_string(r));
            return rep;
        }
    }
    // H = J - K + L with J = k Phi0^* q_A^*, K = q_A Phi0^* k^*, L = sigma q_B Phi1 q_A^*
    auto phi0_dual = [&](int r) {  // (Phi_0^*)^{(r)} : C^{N-r} -> C_r
        return conj_transpose(T.Phi.at(0, N - r, T.C, N));
    };
    std::map<int, Matrix<GroupRingElement>> H;
    for (int r = T.C.lo() - 1; r <= T.C.hi(); ++r) {
        int src = N - r;
        if (!qa.Q.rank(src) || !qa.Q.rank(r + 1)) continue;
        Matrix<GroupRingElement> Hr(qa.Q.rank(r + 1), qa.Q.rank(src));
        if (T.C.rank(r) && T.C.rank(src))
            Hr = Hr + k.at(r, T.C, qa.Q) * phi0_dual(r) *
                          conj_transpose(qa.proj.at(src, T.C, qa.Q));
        if (T.C.rank(r + 1) && T.C.rank(src - 1))
            Hr = Hr - qa.proj.at(r + 1, T.C, qa.Q) * phi0_dual(r + 1) *
                          conj_transpose(k.at(src - 1, T.C, qa.Q));
        if (T.C.rank(r + 1) && T.C.rank(src) && qb.Q.rank(r + 1))
            Hr = Hr + sigma.at(r + 1, qb.Q, qa.Q) * qb.proj.at(r + 1, T.C, qb.Q) *
                          T.Phi.at(1, r + 1, T.C, N + 1) *
                          conj_transpose(qa.proj.at(src, T.C, qa.Q));
        H[r] = std::move(Hr);
    }
    // sigma q_B Phi0 q_A^* - q_A Phi0^* q_B^* sigma^* = d H + (-1)^{r+1} H delta
    for (int r = T.C.lo(); r <= T.C.hi(); ++r) {
        int src = N - r;
        if (!qa.Q.rank(r) || !qa.Q.rank(src)) continue;
        Matrix<GroupRingElement> lhs =
            sigma.at(r, qb.Q, qa.Q) * qb.proj.at(r, T.C, qb.Q) *
                T.Phi.at(0, r, T.C, N) * conj_transpose(qa.proj.at(src, T.C, qa.Q)) -
            qa.proj.at(r, T.C, qa.Q) * phi0_dual(r) *
                conj_transpose(qb.proj.at(src, T.C, qb.Q)) *
                conj_transpose(sigma.at(src, qb.Q, qa.Q));
        Matrix<GroupRingElement> rhs2(qa.Q.rank(r), qa.Q.rank(src));
        if (qa.Q.rank(r + 1))
            rhs2 = rhs2 + qa.Q.bd(r + 1) * (H.count(r) ? H.at(r)
                                                       : Matrix<GroupRingElement>(
                                                             qa.Q.rank(r + 1), qa.Q.rank(src)));
        if (qa.Q.rank(src + 1)) {
            Matrix<GroupRingElement> Hm =
                H.count(r - 1) ? H.at(r - 1)
                               : Matrix<GroupRingElement>(qa.Q.rank(r), qa.Q.rank(src + 1));
            Matrix<GroupRingElement> term = Hm * conj_transpose(qa.Q.bd(src + 1));
            rhs2 = sign_pow(r + 1) < 0 ? rhs2 - term : rhs2 + term;
        }
        if (!(lhs == rhs2)) {
            rep.ok = false;
            rep.failures.push_back("hermitian homotopy equation fails at degree " +
                                   std::to_string(r));
            return rep;
        }
    }
    // conj-symmetry of the sigma-identified pairing on generators
    auto pb = ctx.sigma_pullback();
    if (!pb) {
        rep.ok = false;
        rep.failures.push_back("sigma pullback unavailable");
        return rep;
    }
    const auto& A = ctx.torsionA();
    int gn = A.pres.torsion_count();
    for (int i = 0; i < gn; ++i)
        for (int j = 0; j < gn; ++j) {
            std::vector<RingElement> xi = A.cocycles.col(i), xj = A.cocycles.col(j);
            std::vector<RingElement> yi = mat_apply(*pb, xi), yj = mat_apply(*pb, xj);
            TorsionValue a = ctx.pairing_value(yi, xj);
            TorsionValue b = ctx.pairing_value(yj, xi);
            if (!(a == conj(b))) {
                rep.ok = false;
                rep.failures.push_back("Bl(x_" + std::to_string(i) + ",x_" +
                                       std::to_string(j) + ") != conj(Bl swapped)");
            }
        }
    return rep;
}

CheckReport check_nonsingular(const PairingContext& ctx) {
    CheckReport rep;
    if (ctx.ring() != Ring::Integers && ctx.ring() != Ring::Laurent &&
        ctx.ring() != Ring::Rationals) {
        rep.ok = false;
        rep.failures.push_back("Ext^1 hypothesis not discharged for this ring");
        return rep;
    }
    const auto& B = ctx.torsionB();
    const auto& A = ctx.torsionA();
    int nb = B.pres.torsion_count(), na = A.pres.torsion_count();
    if (nb == 0 && na == 0) return rep;  // vacuously nonsingular
    if (nb != na) {
        rep.ok = false;
        rep.failures.push_back("torsion ranks differ");
        return rep;
    }
    // adjoint in the cyclic-dual coordinates: x_j -> (y -> Bl(y, x_j));
    // Hom(R/(d), S^-1R/R) is cyclic on 1 -> 1/d with annihilator conj(d).
    // entries a_ij with Bl(y_i, x_j) = a_ij / d_i.
    RMatrix adj(nb, na);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < na; ++j) {
            TorsionValue v =
                ctx.pairing_value(B.cocycles.col(i), A.cocycles.col(j), B.pres.invariants[i]);
            // write v = a / d_i mod R
            Fraction f = v.rep();
            // a = num * (d_i / den); exact because d_i annihilates v
            auto [q, r] = euclidean_divmod(B.pres.invariants[i], f.den());
            if (!r.is_zero()) {
                rep.ok = false;
                rep.failures.push_back("entry denominator does not divide the annihilator");
                return rep;
            }
            adj(i, j) = f.num() * q;
        }
    // the map (+)_j R/(e_j) -> (+)_i R/(conj d_i) with matrix adj must be an
    // isomorphism: cokernel trivial and equal total length
    RMatrix pres(nb, na + nb);
    for (int i = 0; i < nb; ++i) {
        for (int j = 0; j < na; ++j) pres(i, j) = adj(i, j);
        pres(i, na + i) = conj(B.pres.invariants[i]);
    }
    SmithForm s = smith_normal_form(pres);
    for (int i = 0; i < std::min(nb, s.D.cols()); ++i) {
        if (i >= s.rank || !s.diag(i).is_unit()) {
            rep.ok = false;
            rep.failures.push_back("adjoint cokernel is nontrivial");
            return rep;
        }
    }
    // length comparison: product of annihilators agree up to units
    RingElement pa = RingElement::one(ctx.ring()), pb2 = RingElement::one(ctx.ring());
    for (const auto& d : A.pres.invariants) pa = pa * d;
    for (const auto& d : B.pres.invariants) pb2 = pb2 * conj(d);
    auto [q1, r1] = euclidean_divmod(pa, pb2);
    auto [q2, r2] = euclidean_divmod(pb2, pa);
    if (!r1.is_zero() || !r2.is_zero()) {
        rep.ok = false;
        rep.failures.push_back("annihilator lengths differ");
    }
    return rep;
}

}  // namespace blanchfield
