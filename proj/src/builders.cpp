#include "blanchfield/builders.hpp"

#include <numeric>

namespace blanchfield {

namespace {

[[noreturn]] void fail(const std::string& m) { throw std::runtime_error(m); }

using GM = Matrix<GroupRingElement>;

struct Lang {
    GroupSpec spec;
    GroupRingElement zero, one, t, tinv, tm1;
    explicit Lang(GroupSpec s) : spec(std::move(s)) {
        zero = GroupRingElement::zero(spec);
        one = GroupRingElement::one(spec);
        t = GroupRingElement::monomial(spec, GroupWord::generator(0, 1));
        tinv = GroupRingElement::monomial(spec, GroupWord::generator(0, -1));
        tm1 = t - one;
    }
    GroupRingElement mono(int e, long long c = 1) const {
        return GroupRingElement::monomial(spec, GroupWord::generator(0, e), Int(c));
    }
};

GM make(const Lang& L, int rows, int cols,
        std::initializer_list<std::initializer_list<GroupRingElement>> data) {
    GM m(rows, cols);
    int i = 0;
    for (auto& row : data) {
        int j = 0;
        for (auto& v : row) m(i, j++) = v;
        ++i;
    }
    (void)L;
    return m;
}

GChain geodesic(int cell_idx, int k) {
    GChain out;
    if (k > 0)
        for (int j = 0; j < k; ++j) out[{1, cell_idx, {j}}] += 1;
    else if (k < 0)
        for (int j = k; j < 0; ++j) out[{1, cell_idx, {j}}] -= 1;
    return out;
}

}  // namespace

// ----------------------------------------------------------------------
// circle

ComplexWithContraction circle_complex() {
    ComplexWithContraction out;
    out.spec = GroupSpec::free_abelian(1, "t");
    Lang L(out.spec);
    out.C.set_rank(0, 1);
    out.C.set_rank(1, 1);
    GM d1(1, 1);
    d1(0, 0) = L.tm1;
    out.C.set_boundary(1, d1);
    out.contraction.basepoint = {0, 0, {0}};
    out.contraction.h = [](const Cell& c) -> GChain {
        if (c.deg != 0) return {};
        return geodesic(0, c.exp[0]);
    };
    out.fundamental = {{Cell{1, 0, {0}}, 1}};
    out.dim = 1;
    return out;
}

Contraction circle_contraction_alt() {
    // walk the other way around: h(t^k p) = -(t^k + ... ) e going downward
    Contraction con;
    con.basepoint = {0, 0, {1}};   // based at t p
    con.h = [](const Cell& c) -> GChain {
        if (c.deg != 0) return {};
        GChain out;
        int k = c.exp[0];
        if (k > 1)
            for (int j = 1; j < k; ++j) out[{1, 0, {j}}] += 1;
        else if (k < 1)
            for (int j = k; j < 1; ++j) out[{1, 0, {j}}] -= 1;
        return out;
    };
    return con;
}

// ----------------------------------------------------------------------
// torus = product of two circles; cells p | e1 e2 | F with
// dF = (t2 - 1) e1 - (t1 - 1) e2

ComplexWithContraction torus_complex() {
    ComplexWithContraction out;
    out.spec = GroupSpec::free_abelian(2, "t");
    Lang L(out.spec);
    GroupRingElement t1 = GroupRingElement::monomial(out.spec, GroupWord::generator(0, 1));
    GroupRingElement t2 = GroupRingElement::monomial(out.spec, GroupWord::generator(1, 1));
    GroupRingElement one = GroupRingElement::one(out.spec);
    out.C.set_rank(0, 1);
    out.C.set_rank(1, 2);
    out.C.set_rank(2, 1);
    GM d1(1, 2);
    d1(0, 0) = t1 - one;
    d1(0, 1) = t2 - one;
    out.C.set_boundary(1, d1);
    GM d2(2, 1);
    d2(0, 0) = t2 - one;
    d2(1, 0) = one - t1;
    out.C.set_boundary(2, d2);
    out.contraction.basepoint = {0, 0, {0, 0}};
    out.contraction.h = [](const Cell& c) -> GChain {
        int a = c.exp[0], b = c.exp[1];
        GChain out;
        if (c.deg == 0) {
            // e1 run at height b, then e2 run at the origin column
            if (a > 0)
                for (int j = 0; j < a; ++j) out[{1, 0, {j, b}}] += 1;
            else
                for (int j = a; j < 0; ++j) out[{1, 0, {j, b}}] -= 1;
            if (b > 0)
                for (int j = 0; j < b; ++j) out[{1, 1, {0, j}}] += 1;
            else
                for (int j = b; j < 0; ++j) out[{1, 1, {0, j}}] -= 1;
            return out;
        }
        if (c.deg == 1 && c.idx == 1) {
            if (a > 0)
                for (int j = 0; j < a; ++j) out[{2, 0, {j, b}}] -= 1;
            else
                for (int j = a; j < 0; ++j) out[{2, 0, {j, b}}] += 1;
            return out;
        }
        return {};
    };
    out.fundamental = {{Cell{2, 0, {0, 0}}, 1}};
    out.dim = 2;
    return out;
}

Contraction torus_contraction_alt() {
    // route 0-cells through e2 first, then e1 at height 0
    Contraction con;
    con.basepoint = {0, 0, {0, 0}};
    con.h = [](const Cell& c) -> GChain {
        int a = c.exp[0], b = c.exp[1];
        GChain out;
        if (c.deg == 0) {
            if (b > 0)
                for (int j = 0; j < b; ++j) out[{1, 1, {a, j}}] += 1;
            else
                for (int j = b; j < 0; ++j) out[{1, 1, {a, j}}] -= 1;
            if (a > 0)
                for (int j = 0; j < a; ++j) out[{1, 0, {j, 0}}] += 1;
            else
                for (int j = a; j < 0; ++j) out[{1, 0, {j, 0}}] -= 1;
            return out;
        }
        if (c.deg == 1 && c.idx == 0) {
            // e1 at (a, b): fill with F faces to drop to height 0
            if (b > 0)
                for (int j = 0; j < b; ++j) out[{2, 0, {a, j}}] += 1;
            else
                for (int j = b; j < 0; ++j) out[{2, 0, {a, j}}] -= 1;
            return out;
        }
        return {};
    };
    return con;
}

// ----------------------------------------------------------------------
// knot exterior triad

void SeifertData::validate() const {
    int n = size();
    if (n % 2 != 0) fail("Seifert matrix must have even size");
    for (const auto& row : V)
        if ((int)row.size() != n) fail("Seifert matrix must be square");
    // det(V - V^T) = +-1
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i][j] = Rat(V[i][j] - V[j][i]);
    Rat det = 1;
    std::vector<std::vector<Rat>> W = M;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r2 = c; r2 < n; ++r2)
            if (W[r2][c] != 0) { piv = r2; break; }
        if (piv < 0) fail("V - V^T is singular; not a Seifert matrix");
        if (piv != c) { std::swap(W[piv], W[c]); det = -det; }
        det *= W[c][c];
        for (int r2 = c + 1; r2 < n; ++r2) {
            Rat f = W[r2][c] / W[c][c];
            for (int c2 = c; c2 < n; ++c2) W[r2][c2] -= f * W[c][c2];
        }
    }
    if (!(det == 1 || det == -1)) fail("V - V^T is not unimodular");
}

namespace {

// frozen symmetric-structure tables for the boundary pieces
void fill_chi(SymStructure<GroupRingElement>& chi, const Lang& L) {
    GM s0r0(2, 2), s0r1(2, 2), s1r1(2, 2);
    s0r0(0, 0) = -L.t;
    s0r0(1, 1) = L.t;
    s0r1(0, 0) = -L.one;
    s0r1(1, 1) = L.one;
    s1r1 = s0r1;
    chi.set(0, 0, s0r0);
    chi.set(0, 1, s0r1);
    chi.set(1, 1, s1r1);
}

void fill_phiA(SymStructure<GroupRingElement>& st, const Lang& L, bool bside) {
    // A-side table; the B side differs by the recorded sign pattern
    int e = bside ? -1 : 1;
    auto sg = [&](const GroupRingElement& x) { return e < 0 ? -x : x; };
    GM s0r0(2, 1);
    s0r0(0, 0) = sg(L.t);
    GM s0r1(3, 3);
    s0r1(0, 2) = sg(L.one);
    s0r1(2, 1) = sg(-L.t);
    GM s0r2(1, 2);
    s0r2(0, 1) = sg(L.one);
    GM s1r1(3, 1);
    s1r1(0, 0) = bside ? L.one : -L.one;
    s1r1(2, 0) = -L.one;
    GM s1r2(1, 3);
    s1r2(0, 1) = bside ? -L.one : L.one;
    s1r2(0, 2) = L.tinv;
    GM s2r2(1, 1);
    s2r2(0, 0) = L.one;
    st.set(0, 0, s0r0);
    st.set(0, 1, s0r1);
    st.set(0, 2, s0r2);
    st.set(1, 1, s1r1);
    st.set(1, 2, s1r2);
    st.set(2, 2, s2r2);
}

}  // namespace

KnotTriad knot_triad(const SeifertData& V) {
    V.validate();
    int g2 = V.size();
    KnotTriad out;
    out.spec = GroupSpec::free_abelian(1, "t");
    out.genus2 = g2;
    out.meridian = GroupWord::generator(0, 1);
    out.longitude = GroupWord::identity();
    Lang L(out.spec);
    SymTriad<GroupRingElement>& T = out.triad;
    T.n = 1;

    // D: two meridian circles (P+, P- | m+, m-)
    T.D.set_rank(0, 2);
    T.D.set_rank(1, 2);
    {
        GM d1(2, 2);
        d1(0, 0) = L.tm1;
        d1(1, 1) = L.tm1;
        T.D.set_boundary(1, d1);
    }
    // A: annulus (P+, P- | m+, m-, lA | FA)
    T.A.set_rank(0, 2);
    T.A.set_rank(1, 3);
    T.A.set_rank(2, 1);
    {
        GM d1(2, 3);
        d1(0, 0) = L.tm1;
        d1(1, 1) = L.tm1;
        d1(0, 2) = L.one;
        d1(1, 2) = -L.one;
        T.A.set_boundary(1, d1);
        GM d2(3, 1);
        d2(0, 0) = -L.one;
        d2(1, 0) = L.one;
        d2(2, 0) = L.tm1;
        T.A.set_boundary(2, d2);
    }
    // B: annulus (P+, P- | m+, m-, lB | FB)
    T.B.set_rank(0, 2);
    T.B.set_rank(1, 3);
    T.B.set_rank(2, 1);
    {
        GM d1(2, 3);
        d1(0, 0) = L.tm1;
        d1(1, 1) = L.tm1;
        d1(0, 2) = -L.one;
        d1(1, 2) = L.one;
        T.B.set_boundary(1, d1);
        GM d2(3, 1);
        d2(0, 0) = L.one;
        d2(1, 0) = -L.one;
        d2(2, 0) = L.tm1;
        T.B.set_boundary(2, d2);
    }
    // C: exterior (P+,P- | m+,m-,lA,lB,x_i | FA,FB,f,r_i | T)
    int n1 = 4 + g2, n2 = 3 + g2;
    T.C.set_rank(0, 2);
    T.C.set_rank(1, n1);
    T.C.set_rank(2, n2);
    T.C.set_rank(3, 1);
    {
        GM d1(2, n1);
        d1(0, 0) = L.tm1;
        d1(1, 1) = L.tm1;
        d1(0, 2) = L.one;
        d1(1, 2) = -L.one;
        d1(0, 3) = -L.one;
        d1(1, 3) = L.one;
        T.C.set_boundary(1, d1);
        GM d2(n1, n2);
        d2(0, 0) = -L.one;
        d2(1, 0) = L.one;
        d2(2, 0) = L.tm1;
        d2(0, 1) = L.one;
        d2(1, 1) = -L.one;
        d2(3, 1) = L.tm1;
        d2(2, 2) = L.one;
        d2(3, 2) = L.one;
        for (int i = 0; i < g2; ++i)
            for (int j = 0; j < g2; ++j) {
                // A = tV - V^T
                GroupRingElement a = L.mono(1, V.V[i][j]) - L.mono(0, V.V[j][i]);
                d2(4 + i, 3 + j) = a;
            }
        T.C.set_boundary(2, d2);
        GM d3(n2, 1);
        d3(0, 0) = L.one;
        d3(1, 0) = L.one;
        d3(2, 0) = L.one - L.t;
        T.C.set_boundary(3, d3);
    }
    DegreeReport v = T.C.validate();
    if (!v.ok) fail("knot_triad: complex invalid");

    // inclusions and coordinate splittings
    auto coord_incl = [&](const ChainComplex<GroupRingElement>& sub,
                          const ChainComplex<GroupRingElement>& big,
                          const std::map<int, std::vector<int>>& where) {
        SplitInjection<GroupRingElement> inc;
        for (auto& [r, idxs] : where) {
            GM I(big.rank(r), sub.rank(r)), S(sub.rank(r), big.rank(r));
            for (int j = 0; j < (int)idxs.size(); ++j) {
                I(idxs[j], j) = L.one;
                S(j, idxs[j]) = L.one;
            }
            inc.incl.comp[r] = I;
            inc.split.comp[r] = S;
        }
        return inc;
    };
    T.jA = coord_incl(T.D, T.A, {{0, {0, 1}}, {1, {0, 1}}});
    T.jB = coord_incl(T.D, T.B, {{0, {0, 1}}, {1, {0, 1}}});
    T.iA = coord_incl(T.A, T.C, {{0, {0, 1}}, {1, {0, 1, 2}}, {2, {0}}});
    T.iB = coord_incl(T.B, T.C, {{0, {0, 1}}, {1, {0, 1, 3}}, {2, {1}}});

    fill_chi(T.chi, L);
    fill_phiA(T.phiA, L, false);
    fill_phiA(T.phiB, L, true);

    // outer structure: frozen exterior table plus the Seifert blocks
    {
        GM s0r0(2, 1);
        s0r0(0, 0) = -L.t;
        T.Phi.set(0, 0, s0r0);
        GM s0r1(n1, n2);
        s0r1(0, 2) = L.one;
        for (int i = 0; i < g2; ++i) s0r1(4 + i, 3 + i) = L.tm1;
        T.Phi.set(0, 1, s0r1);
        GM s0r2(n2, n1);
        s0r2(2, 1) = L.t;
        for (int i = 0; i < g2; ++i) s0r2(3 + i, 4 + i) = L.tinv - L.one;
        T.Phi.set(0, 2, s0r2);
        GM s0r3(1, 2);
        s0r3(0, 1) = -L.one;
        T.Phi.set(0, 3, s0r3);
        GM s1r1(n1, 1);
        s1r1(0, 0) = -L.one;
        s1r1(3, 0) = L.one;
        T.Phi.set(1, 1, s1r1);
        GM s1r2(n2, n2);
        s1r2(1, 2) = L.tinv;
        s1r2(2, 0) = L.one;
        T.Phi.set(1, 2, s1r2);
        GM s1r3(1, n1);
        s1r3(0, 1) = -L.one;
        s1r3(0, 2) = -L.tinv;
        T.Phi.set(1, 3, s1r3);
        GM s2r2(n2, 1);
        s2r2(1, 0) = L.one;
        s2r2(2, 0) = -L.t;
        T.Phi.set(2, 2, s2r2);
        GM s2r3(1, n2);
        s2r3(0, 0) = -L.one;
        s2r3(0, 2) = -L.one;
        T.Phi.set(2, 3, s2r3);
        GM s3r3(1, 1);
        s3r3(0, 0) = L.one;
        T.Phi.set(3, 3, s3r3);
    }

    ResidualReport rep = check_triad(T);
    if (!rep.ok()) fail("knot_triad: self-certification failed: " + rep.summary());
    return out;
}

void annulus_sigma(KnotTriad& K) {
    // the meridian and longitude must commute in the recorded data
    const GroupSpec& spec = K.spec;
    GroupWord ml = K.meridian.product(K.longitude, spec);
    GroupWord lm = K.longitude.product(K.meridian, spec);
    if (!(ml == lm)) fail("annulus_sigma: meridian and longitude do not commute");
    SymTriad<GroupRingElement>& T = K.triad;
    QuotientData<GroupRingElement> qa = quotient_complex(T.A, T.C, T.iA);
    QuotientData<GroupRingElement> qb = quotient_complex(T.B, T.C, T.iB);
    GroupRingElement one = GroupRingElement::one(spec);
    // sigma: identity in the aligned quotient coordinates
    ChainMap<GroupRingElement> sigma;
    for (int r = qb.Q.lo(); r <= qb.Q.hi(); ++r) {
        if (!qb.Q.rank(r)) continue;
        if (qb.Q.rank(r) != qa.Q.rank(r)) fail("annulus_sigma: quotient shape mismatch");
        sigma.comp[r] = GM::identity(qb.Q.rank(r), one);
    }
    DegreeReport chk = sigma.verify(qb.Q, qa.Q);
    if (!chk.ok) fail("annulus_sigma: sigma is not a chain map");
    // homotopy witness for sigma q_B - q_A
    ChainMap<GroupRingElement> diff;
    for (int r = T.C.lo(); r <= T.C.hi(); ++r) {
        if (!T.C.rank(r) || !qa.Q.rank(r)) continue;
        diff.comp[r] =
            sigma.at(r, qb.Q, qa.Q) * qb.proj.at(r, T.C, qb.Q) - qa.proj.at(r, T.C, qa.Q);
    }
    auto k = gr_null_homotopy(diff, T.C, qa.Q, spec);
    if (!k) fail("annulus_sigma: homotopy witness not found");
    T.sigma = sigma;
    T.sigma_homotopy = *k;
}

// ----------------------------------------------------------------------
// Seifert oracle

namespace {

RingElement laurent_of(long long c, int e) { return RingElement::laurent_term(e, Rat(c)); }

// exact inverse of a Laurent-entry matrix as fractions: adj / det
struct FractionMatrix {
    std::vector<std::vector<Fraction>> m;
};

RingElement det_laurent(const RMatrix& A) {
    int n = A.rows();
    if (n == 0) return RingElement::one(Ring::Laurent);
    if (n == 1) return A(0, 0);
    RingElement acc = RingElement::zero(Ring::Laurent);
    for (int j = 0; j < n; ++j) {
        if (A(0, j).is_zero()) continue;
        RMatrix sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(i - 1, cc++) = A(i, c);
            }
        }
        RingElement term = A(0, j) * det_laurent(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

FractionMatrix invert_laurent(const RMatrix& A) {
    int n = A.rows();
    RingElement det = det_laurent(A);
    if (det.is_zero()) fail("seifert_oracle: tV - V^T is singular");
    FractionMatrix out;
    out.m.assign(n, std::vector<Fraction>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RMatrix sub(n - 1, n - 1);
            int rr = 0;
            for (int r = 0; r < n; ++r) {
                if (r == j) continue;
                int cc = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == i) continue;
                    sub(rr, cc++) = A(r, c);
                }
                ++rr;
            }
            RingElement cof = det_laurent(sub);
            if ((i + j) % 2 == 1) cof = -cof;
            out.m[i][j] = Fraction(cof, det);
        }
    return out;
}

RMatrix alexander_matrix(const SeifertData& V) {
    int n = V.size();
    RMatrix A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            A(i, j) = laurent_of(V.V[i][j], 1) - laurent_of(V.V[j][i], 0);
    return A;
}

}  // namespace

PairingMatrix seifert_oracle(const SeifertData& V) {
    V.validate();
    int n = V.size();
    PairingMatrix out;
    out.side = PairingSide::Cohomology;
    out.ring = Ring::Laurent;
    if (n == 0) return out;
    RMatrix A = alexander_matrix(V);
    FractionMatrix Ainv = invert_laurent(A);
    Fraction tm1 = Fraction::from_ring(RingElement::laurent(std::map<int, Rat>{{1, 1}, {0, -1}}));
    // raw form on the standard basis classes of coker(tV - V^T)
    std::vector<std::vector<Fraction>> raw(n, std::vector<Fraction>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) raw[i][j] = tm1 * Ainv.m[i][j];
    // smith-normalized generators of the module
    ModulePresentation pres = torsion_part(present_cokernel(A));
    int k = pres.torsion_count();
    out.row_annihilators = pres.invariants;
    out.col_annihilators = pres.invariants;
    out.row_generators = pres.torsion_gens;
    out.col_generators = pres.torsion_gens;
    out.values.assign(k, std::vector<TorsionValue>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            Fraction acc = Fraction::zero(Ring::Laurent);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const RingElement& u = pres.torsion_gens(i, a);
                    const RingElement& w = pres.torsion_gens(j, b);
                    if (u.is_zero() || w.is_zero()) continue;
                    acc = acc + Fraction::from_ring(u) * raw[i][j] *
                                    Fraction::from_ring(conj(w));
                }
            out.values[a][b] = mod_ring(acc);
        }
    return out;
}

bool oracle_agreement(const PairingContext& ctx, const SeifertData& V, std::string* detail) {
    PairingMatrix chain = pairing_matrix(ctx, PairingSide::Cohomology);
    int g2 = V.size();
    if (g2 == 0) return chain.values.empty();
    RMatrix A = alexander_matrix(V);
    FractionMatrix Ainv = invert_laurent(A);
    Fraction tm1 =
        Fraction::from_ring(RingElement::laurent(std::map<int, Rat>{{1, 1}, {0, -1}}));
    // chain-level generators: r*-components sit in the last g2 ambient slots
    auto rstar = [&](const RMatrix& gens, int col) {
        std::vector<RingElement> v(g2);
        int amb = gens.rows();
        for (int i = 0; i < g2; ++i) v[i] = gens(amb - g2 + i, col);
        return v;
    };
    for (size_t a = 0; a < chain.values.size(); ++a) {
        std::vector<RingElement> u = rstar(chain.row_generators, (int)a);
        for (size_t b = 0; b < chain.values[a].size(); ++b) {
            std::vector<RingElement> w = rstar(chain.col_generators, (int)b);
            Fraction acc = Fraction::zero(Ring::Laurent);
            for (int i = 0; i < g2; ++i)
                for (int j = 0; j < g2; ++j) {
                    if (u[i].is_zero() || w[j].is_zero()) continue;
                    acc = acc + Fraction::from_ring(u[i]) * tm1 * Ainv.m[i][j] *
                                    Fraction::from_ring(conj(w[j]));
                }
            if (!(chain.values[a][b] == mod_ring(acc))) {
                if (detail)
                    *detail = "mismatch at (" + std::to_string(a) + "," + std::to_string(b) +
                              "): chain " + chain.values[a][b].to_string() + " vs oracle " +
                              mod_ring(acc).to_string();
                return false;
            }
        }
    }
    return true;
}

// ----------------------------------------------------------------------
// lens spaces

void LensData::validate() const {
    if (p < 1) fail("lens space requires p >= 1");
    if (std::gcd(p, ((q % p) + p) % p) != 1) fail("lens space requires gcd(p, q) = 1");
}

LensBuild lens_complex(const LensData& Ld) {
    Ld.validate();
    LensBuild out;
    out.p = Ld.p;
    out.q = Ld.q;
    out.spec = GroupSpec::cyclic(Ld.p, "g");
    GroupSpec& spec = out.spec;
    GroupRingElement one = GroupRingElement::one(spec);
    GroupRingElement g = GroupRingElement::monomial(spec, GroupWord::generator(0, 1));
    // q' = q^{-1} mod p
    int qq = ((Ld.q % Ld.p) + Ld.p) % Ld.p;
    int qinv = 1;
    for (int i = 1; i < std::max(Ld.p, 2); ++i)
        if ((i * qq) % Ld.p == 1 % Ld.p) { qinv = i; break; }
    GroupRingElement gq = GroupRingElement::monomial(spec, GroupWord::generator(0, qinv));
    GroupRingElement N = GroupRingElement::zero(spec);
    for (int i = 0; i < Ld.p; ++i)
        N = N + GroupRingElement::monomial(spec, GroupWord::generator(0, i));

    // periodic complex extended two steps for the inductive lifts
    ChainComplex<GroupRingElement> E;
    for (int r = 0; r <= 5; ++r) E.set_rank(r, 1);
    auto one_by_one = [](GroupRingElement v) {
        GM m(1, 1);
        m(0, 0) = std::move(v);
        return m;
    };
    E.set_boundary(1, one_by_one(g - one));
    E.set_boundary(2, one_by_one(N));
    E.set_boundary(3, one_by_one(gq - one));
    E.set_boundary(4, one_by_one(N));
    E.set_boundary(5, one_by_one(gq - one));
    DegreeReport v = E.validate();
    if (!v.ok) fail("lens: periodic complex invalid");

    std::map<std::pair<int, int>, CellLifter> lifters;
    for (int r = 0; r <= 3; ++r) {
        CellLifter l;
        l.kind = CellLifter::Kind::SolveIntegral;
        l.max_filtration = 3;
        l.contraction.basepoint = {0, 0, {0}};
        lifters[{r, 0}] = std::move(l);
    }
    DiagonalContext ctx(E, spec);
    DiagonalApproximation d = diagonal_approximation(E, spec, lifters, 3);
    ResidualReport dr = check_diagonal(ctx, d, 3);
    if (!dr.ok()) fail("lens: diagonal relations failed: " + dr.summary());

    // restrict to degrees 0..3 and take the symmetric structure of +e3
    ChainComplex<GroupRingElement>& C = out.triad.C;
    for (int r = 0; r <= 3; ++r) C.set_rank(r, 1);
    C.set_boundary(1, one_by_one(g - one));
    C.set_boundary(2, one_by_one(N));
    C.set_boundary(3, one_by_one(gq - one));
    GChain M{{Cell{3, 0, {0}}, 1}};
    DiagonalContext ctx3(C, spec);
    out.triad.Phi = symmetric_from_fundamental(ctx3, d, M, 3, 3);
    out.triad.n = 1;
    ResidualReport rep = check_triad(out.triad);
    if (!rep.ok()) fail("lens: self-certification failed: " + rep.summary());
    return out;
}

PairingMatrix lens_linking_form(const LensBuild& L) {
    Representation rep = Representation::trivial(L.spec);
    PairingContext ctx(L.triad, rep);
    return pairing_matrix(ctx, PairingSide::Cohomology);
}

// ----------------------------------------------------------------------
// branched covers

BranchedCoverResult branched_cover_form(const SeifertData& V, int k) {
    if (k < 2) fail("branched_cover_form: k >= 2 required");
    KnotTriad K = knot_triad(V);
    Representation rep = Representation::regular_cyclic(K.spec, k);
    PairingContext ctx(K.triad, rep);
    BranchedCoverResult out;
    // the relative H_1 must be all torsion
    HomologyData h = homology(ctx.chainsB(), 1);
    out.all_torsion = (h.module.free_rank() == 0);
    out.form = pairing_matrix(ctx, PairingSide::Cohomology);
    return out;
}

}  // namespace blanchfield
