#include "blanchfield/diagonal.hpp"

#include <algorithm>

namespace blanchfield {

namespace {
[[noreturn]] void fail(const std::string& m) { throw std::runtime_error(m); }

void badd(BiChain& a, const BiKey& k, const Int& c) {
    auto it = a.find(k);
    if (it == a.end()) {
        if (c != 0) a.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) a.erase(it);
    }
}

void gadd(GChain& a, const Cell& k, const Int& c) {
    auto it = a.find(k);
    if (it == a.end()) {
        if (c != 0) a.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) a.erase(it);
    }
}

std::vector<int> norm_exp(std::vector<int> e, const GroupSpec& spec) {
    for (int g = 0; g < spec.ngens(); ++g)
        if (spec.orders[g] > 0)
            e[g] = ((e[g] % spec.orders[g]) + spec.orders[g]) % spec.orders[g];
    return e;
}

std::vector<int> add_exp(const std::vector<int>& a, const std::vector<int>& b,
                         const GroupSpec& spec) {
    std::vector<int> e(a.size());
    for (size_t g = 0; g < a.size(); ++g) e[g] = a[g] + b[g];
    return norm_exp(std::move(e), spec);
}

}  // namespace

GChain DiagonalContext::boundary(const Cell& c) const {
    GChain out;
    Matrix<GroupRingElement> B = C_.bd(c.deg);
    for (int k = 0; k < C_.rank(c.deg - 1); ++k) {
        const GroupRingElement& ent = B(k, c.idx);
        for (const auto& [w, coeff] : ent.terms()) {
            Cell t{c.deg - 1, k, add_exp(w.exponents(spec_.ngens()), c.exp, spec_)};
            gadd(out, t, coeff);
        }
    }
    return out;
}

BiChain DiagonalContext::tensor_boundary(const BiChain& a) const {
    BiChain out;
    for (const auto& [k, c] : a) {
        // x ox dy
        for (const auto& [t, c2] : boundary({k.q, k.j, k.eb}))
            badd(out, {k.p, k.i, k.ea, t.deg, t.idx, t.exp}, c * c2);
        // (-1)^{|y|} dx ox y
        int s = sign_pow(k.q);
        for (const auto& [t, c2] : boundary({k.p, k.i, k.ea}))
            badd(out, {t.deg, t.idx, t.exp, k.q, k.j, k.eb}, s < 0 ? Int(-c * c2) : Int(c * c2));
    }
    return out;
}

BiChain DiagonalContext::transpose(const BiChain& a) const {
    BiChain out;
    for (const auto& [k, c] : a) {
        int s = sign_pow((long long)k.p * k.q);
        badd(out, {k.q, k.j, k.eb, k.p, k.i, k.ea}, s < 0 ? -c : c);
    }
    return out;
}

BiChain DiagonalContext::diag_translate(const BiChain& a, const std::vector<int>& e) const {
    BiChain out;
    for (const auto& [k, c] : a)
        badd(out, {k.p, k.i, add_exp(k.ea, e, spec_), k.q, k.j, add_exp(k.eb, e, spec_)}, c);
    return out;
}

void DiagonalContext::check_contraction(const Contraction& con, int max_shift) const {
    std::vector<std::vector<int>> shifts;
    int ng = spec_.ngens();
    std::vector<int> cur(ng, 0);
    std::function<void(int)> rec = [&](int g) {
        if (g == ng) { shifts.push_back(cur); return; }
        int span = spec_.orders[g] > 0 ? std::min(spec_.orders[g] - 1, max_shift)
                                       : max_shift;
        for (int v = -span; v <= span; ++v) {
            if (spec_.orders[g] > 0 && v < 0) continue;
            cur[g] = v;
            rec(g + 1);
        }
    };
    rec(0);
    for (int r = C_.lo(); r <= C_.hi(); ++r)
        for (int i = 0; i < C_.rank(r); ++i)
            for (const auto& e : shifts) {
                Cell c{r, i, e};
                GChain lhs;
                for (const auto& [t, v] : con.h(c))
                    for (const auto& [t2, v2] : boundary(t)) gadd(lhs, t2, v * v2);
                if (r > 0)
                    for (const auto& [t, v] : boundary(c))
                        for (const auto& [t2, v2] : con.h(t)) gadd(lhs, t2, v * v2);
                GChain rhs;
                gadd(rhs, c, 1);
                if (r == 0) gadd(rhs, con.basepoint, -1);
                for (const auto& [t, v] : rhs) gadd(lhs, t, -v);
                if (!lhs.empty())
                    fail("contraction identity fails at a sample cell (degree " +
                         std::to_string(r) + ")");
            }
}

BiChain DiagonalApproximation::of_chain(const DiagonalContext& ctx, int s,
                                        const GChain& a) const {
    BiChain out;
    for (const auto& [c, coeff] : a) {
        auto it = deltas[s].find({c.deg, c.idx});
        if (it == deltas[s].end()) {
            if (ctx.complex().rank(c.deg) == 0) continue;
            fail("diagonal: Delta not defined on a required cell");
        }
        BiChain v = ctx.diag_translate(it->second, c.exp);
        for (const auto& [k, c2] : v) badd(out, k, coeff * c2);
    }
    return out;
}

namespace {

// induced contraction lift: H(x ox y) = (-1)^{|y|} h(x) ox y + eta eps(x) ox h(y)
BiChain contraction_lift(const DiagonalContext& ctx, const Contraction& con,
                         const BiChain& G) {
    BiChain out;
    for (const auto& [k, c] : G) {
        int s = sign_pow(k.q);
        for (const auto& [t, v] : con.h({k.p, k.i, k.ea}))
            badd(out, {t.deg, t.idx, t.exp, k.q, k.j, k.eb}, s < 0 ? Int(-c * v) : Int(c * v));
        if (k.p == 0) {
            const Cell& b = con.basepoint;
            for (const auto& [t, v] : con.h({k.q, k.j, k.eb}))
                badd(out, {b.deg, b.idx, b.exp, t.deg, t.idx, t.exp}, c * v);
        }
    }
    return out;
}

// exact integral lift within the filtration, for finite abelian groups
BiChain solve_lift(const DiagonalContext& ctx, const BiChain& G, int degree,
                   int max_filtration) {
    const GroupSpec& spec = ctx.spec();
    for (int g = 0; g < spec.ngens(); ++g)
        if (spec.orders[g] <= 0)
            fail("diagonal solve lift requires a finite group; supply a contraction");
    long long group_order = 1;
    for (int g = 0; g < spec.ngens(); ++g) group_order *= spec.orders[g];
    const auto& C = ctx.complex();
    int cap = max_filtration >= 0 ? max_filtration : C.hi();
    // unknown lattice: all translated cell pairs in the given total degree
    std::vector<BiKey> keys;
    std::function<void(int, std::vector<int>&, std::function<void(std::vector<int>&)>)>
        all_exps = [&](int g, std::vector<int>& acc, std::function<void(std::vector<int>&)> fn) {
            if (g == spec.ngens()) { fn(acc); return; }
            for (int v = 0; v < spec.orders[g]; ++v) {
                acc[g] = v;
                all_exps(g + 1, acc, fn);
            }
        };
    for (int p = std::max(C.lo(), degree - cap); p <= std::min(cap, degree - C.lo()); ++p) {
        int q = degree - p;
        if (!C.rank(p) || !C.rank(q) || q > cap) continue;
        for (int i = 0; i < C.rank(p); ++i)
            for (int j = 0; j < C.rank(q); ++j) {
                std::vector<int> ea(spec.ngens(), 0), eb(spec.ngens(), 0);
                all_exps(0, ea, [&](std::vector<int>& a) {
                    all_exps(0, eb, [&](std::vector<int>& b) {
                        keys.push_back({p, i, a, q, j, b});
                    });
                });
            }
    }
    std::map<BiKey, int> colof;
    for (int c = 0; c < (int)keys.size(); ++c) colof[keys[c]] = c;
    // image lattice
    std::map<BiKey, int> rowof;
    std::vector<std::tuple<int, int, Int>> entries;
    for (int c = 0; c < (int)keys.size(); ++c) {
        BiChain dk = ctx.tensor_boundary({{keys[c], 1}});
        for (const auto& [k2, v] : dk) {
            auto it = rowof.find(k2);
            int row;
            if (it == rowof.end()) {
                row = (int)rowof.size();
                rowof.emplace(k2, row);
            } else {
                row = it->second;
            }
            entries.emplace_back(row, c, v);
        }
    }
    RMatrix M((int)rowof.size(), (int)keys.size());
    for (auto& [r, c, v] : entries) M(r, c) = M(r, c) + RingElement::integer(v);
    std::vector<RingElement> rhs((int)rowof.size(), RingElement::integer(0));
    for (const auto& [k, v] : G) {
        auto it = rowof.find(k);
        if (it == rowof.end()) fail("diagonal solve lift: defect outside image lattice");
        rhs[it->second] = RingElement::integer(v);
    }
    SolveResult s = solve_linear(M, rhs);
    if (!s.solution) fail("diagonal solve lift: no integral solution");
    BiChain w;
    for (int c = 0; c < (int)keys.size(); ++c) {
        const RingElement& v = (*s.solution)[c];
        if (!v.is_zero())
            badd(w, keys[c], boost::multiprecision::numerator(v.scalar()));
    }
    return w;
}

GChain eps_tensor_1(const BiChain& a) {
    GChain out;
    for (const auto& [k, c] : a)
        if (k.p == 0) gadd(out, {k.q, k.j, k.eb}, c);
    return out;
}

GChain one_tensor_eps(const BiChain& a) {
    GChain out;
    for (const auto& [k, c] : a)
        if (k.q == 0) gadd(out, {k.p, k.i, k.ea}, c);
    return out;
}

}  // namespace

DiagonalApproximation diagonal_approximation(
    const ChainComplex<GroupRingElement>& C, const GroupSpec& spec,
    const std::map<std::pair<int, int>, CellLifter>& lifters, int smax) {
    DiagonalContext ctx(C, spec);
    DiagonalApproximation out;
    out.spec = spec;
    out.deltas.resize(smax + 1);
    std::vector<int> zero(spec.ngens(), 0);
    for (int s = 0; s <= smax; ++s) {
        for (int r = C.lo(); r <= C.hi(); ++r) {
            for (int i = 0; i < C.rank(r); ++i) {
                std::pair<int, int> cellid{r, i};
                if (s == 0 && r == 0) {
                    BiChain d0;
                    badd(d0, {0, i, zero, 0, i, zero}, 1);
                    out.deltas[0][cellid] = std::move(d0);
                    continue;
                }
                GChain dc = ctx.boundary({r, i, zero});
                BiChain G;
                if (s == 0) {
                    G = out.of_chain(ctx, 0, dc);
                } else {
                    const BiChain& prev = out.deltas[s - 1].at(cellid);
                    G = prev;
                    BiChain tprev = ctx.transpose(prev);
                    int sg = sign_pow(s);
                    for (const auto& [k, c] : tprev) badd(G, k, sg < 0 ? -c : c);
                    BiChain dd = out.of_chain(ctx, s, dc);
                    for (const auto& [k, c] : dd) badd(G, k, sg < 0 ? -c : c);
                }
                if (G.empty()) {
                    out.deltas[s][cellid] = {};
                    continue;
                }
                auto lit = lifters.find(cellid);
                if (lit == lifters.end()) continue;  // cell not requested
                const CellLifter& lifter = lit->second;
                BiChain w;
                if (lifter.kind == CellLifter::Kind::UseContraction) {
                    w = contraction_lift(ctx, lifter.contraction, G);
                } else {
                    w = solve_lift(ctx, G, r + s, lifter.max_filtration);
                }
                // verify d w = G exactly
                BiChain chk = ctx.tensor_boundary(w);
                for (const auto& [k, c] : G) badd(chk, k, -c);
                if (!chk.empty()) fail("diagonal: lift does not bound the defect");
                if (s == 0) {
                    // restore the counit conditions (eps ox 1) Delta_0 = 1 = (1 ox eps) Delta_0
                    GChain z1, z2;
                    gadd(z1, {r, i, zero}, 1);
                    for (const auto& [t, v] : eps_tensor_1(w)) gadd(z1, t, -v);
                    gadd(z2, {r, i, zero}, 1);
                    for (const auto& [t, v] : one_tensor_eps(w)) gadd(z2, t, -v);
                    if (!z1.empty() || !z2.empty()) {
                        const Cell& b = lifter.contraction.basepoint;
                        if ((int)b.exp.size() != spec.ngens())
                            fail("diagonal: counit correction needs a basepoint");
                        for (const auto& [t, v] : z1)
                            badd(w, {b.deg, b.idx, b.exp, t.deg, t.idx, t.exp}, v);
                        for (const auto& [t, v] : z2)
                            badd(w, {t.deg, t.idx, t.exp, b.deg, b.idx, b.exp}, v);
                        chk = ctx.tensor_boundary(w);
                        for (const auto& [k, c] : G) badd(chk, k, -c);
                        if (!chk.empty()) fail("diagonal: counit correction broke the lift");
                    }
                }
                out.deltas[s][cellid] = std::move(w);
            }
        }
    }
    return out;
}

DiagonalApproximation diagonal_approximation(const ChainComplex<GroupRingElement>& C,
                                             const GroupSpec& spec,
                                             const Contraction& contraction, int smax) {
    std::map<std::pair<int, int>, CellLifter> lifters;
    for (int r = C.lo(); r <= C.hi(); ++r)
        for (int i = 0; i < C.rank(r); ++i) {
            CellLifter l;
            l.kind = CellLifter::Kind::UseContraction;
            l.contraction = contraction;
            lifters[{r, i}] = std::move(l);
        }
    return diagonal_approximation(C, spec, lifters, smax);
}

ResidualReport check_diagonal(const DiagonalContext& ctx, const DiagonalApproximation& d,
                              int smax) {
    ResidualReport rep;
    const auto& C = ctx.complex();
    std::vector<int> zero(ctx.spec().ngens(), 0);
    for (int s = 0; s <= smax; ++s) {
        for (const auto& [cellid, v] : d.deltas[s]) {
            auto [r, i] = cellid;
            GChain dc = ctx.boundary({r, i, zero});
            BiChain lhs = ctx.tensor_boundary(v);
            BiChain dd = d.of_chain(ctx, s, dc);
            int sg = sign_pow(s);
            for (const auto& [k, c] : dd) badd(lhs, k, sg < 0 ? c : -c);
            if (s >= 1) {
                const BiChain& prev = d.deltas[s - 1].at(cellid);
                for (const auto& [k, c] : prev) badd(lhs, k, -c);
                BiChain tp = ctx.transpose(prev);
                for (const auto& [k, c] : tp) badd(lhs, k, sg < 0 ? c : -c);
            }
            if (!lhs.empty()) rep.failures.push_back({r, s, "diagonal relation"});
        }
    }
    // counit conditions
    for (const auto& [cellid, v] : d.deltas[0]) {
        auto [r, i] = cellid;
        GChain e1 = eps_tensor_1(v), e2 = one_tensor_eps(v);
        GChain want;
        gadd(want, {r, i, zero}, 1);
        for (const auto& [t, c] : want) {
            gadd(e1, t, -c);
            gadd(e2, t, -c);
        }
        if (!e1.empty()) rep.failures.push_back({r, 0, "(eps ox 1) condition"});
        if (!e2.empty()) rep.failures.push_back({r, 0, "(1 ox eps) condition"});
    }
    return rep;
}

SymStructure<GroupRingElement> slant_collapse(const DiagonalContext& ctx, const BiChain& a,
                                              int m) {
    SymStructure<GroupRingElement> out;
    const auto& C = ctx.complex();
    const GroupSpec& spec = ctx.spec();
    std::map<int, Matrix<GroupRingElement>> comps;
    for (const auto& [k, c] : a) {
        if (k.p + k.q != m) fail("slant_collapse: inhomogeneous bichain");
        auto it = comps.find(k.q);
        if (it == comps.end())
            it = comps.emplace(k.q, Matrix<GroupRingElement>(C.rank(k.q), C.rank(k.p))).first;
        std::vector<int> e(spec.ngens());
        for (int g = 0; g < spec.ngens(); ++g) e[g] = k.eb[g] - k.ea[g];
        it->second(k.j, k.i) =
            it->second(k.j, k.i) +
            GroupRingElement::monomial(spec, GroupWord::from_exponents(e), c);
    }
    for (auto& [q, mat] : comps) out.set(0, q, std::move(mat));
    // re-tag: caller interprets s; stored under s = 0 by this helper
    return out;
}

namespace {
int eps_closed(int n, int s) { return sign_pow((long long)n * s + (long long)s * (s + 1) / 2); }
}

SymStructure<GroupRingElement> symmetric_from_fundamental(
    const DiagonalContext& ctx, const DiagonalApproximation& d, const GChain& M, int n,
    int smax) {
    SymStructure<GroupRingElement> out;
    for (int s = 0; s <= smax; ++s) {
        BiChain v = d.of_chain(ctx, s, M);
        SymStructure<GroupRingElement> comp = slant_collapse(ctx, v, n + s);
        for (auto& [key, mat] : comp.comp) {
            Matrix<GroupRingElement> m = eps_closed(n, s) < 0 ? -mat : mat;
            out.set(s, key.second, std::move(m));
        }
    }
    return out;
}

SymStructure<GroupRingElement> pair_structure_from_fundamental(
    const DiagonalContext& ctx, const DiagonalApproximation& d, const GChain& M, int n,
    int smax) {
    SymStructure<GroupRingElement> out;
    for (int s = 0; s <= smax; ++s) {
        BiChain v = d.of_chain(ctx, s, M);
        SymStructure<GroupRingElement> comp = slant_collapse(ctx, v, n + s);
        int sg = sign_pow(s) * eps_closed(n - 1, s);
        for (auto& [key, mat] : comp.comp) {
            Matrix<GroupRingElement> m = sg < 0 ? -mat : mat;
            out.set(s, key.second, std::move(m));
        }
    }
    return out;
}

std::optional<SymStructure<GroupRingElement>> certify_structure_homotopy(
    const ChainComplex<GroupRingElement>& C, const GroupSpec& spec,
    const SymStructure<GroupRingElement>& phi, const SymStructure<GroupRingElement>& phi2,
    int n) {
    // solve phi - phi2 = dQ(nu) with
    // dQ(nu)_s = (-1)^{n+1} [ d nu_s^{(r+1)} + (-1)^r nu_s^{(r)} delta
    //            + (-1)^{n+s} (nu_{s-1} + (-1)^s T nu_{s-1})^{(r)} ]
    // degree by degree in s; each stage is a group-ring linear system in the
    // entries of nu_s given nu_{s-1}.
    SymStructure<GroupRingElement> nu;
    int smax = std::max(phi.smax, phi2.smax) + 1;
    int outer_sign = sign_pow(n + 1);
    for (int s = 0; s <= smax; ++s) {
        // collect unknown blocks nu_s^{(r)} : C^{n+1+s-r} -> C_r
        std::vector<int> degs;
        std::map<int, int> offset;
        int total = 0;
        for (int r = C.lo(); r <= C.hi(); ++r) {
            if (C.rank(r) && C.rank(n + 1 + s - r)) {
                offset[r] = total;
                total += C.rank(r) * C.rank(n + 1 + s - r);
                degs.push_back(r);
            }
        }
        // equations: for each r with target C_r and source C^{n+s-r}
        std::vector<std::pair<int, int>> eq_sizes;
        std::map<int, int> eq_offset;
        int eqs = 0;
        for (int r = C.lo(); r <= C.hi(); ++r) {
            if (C.rank(r) && C.rank(n + s - r)) {
                eq_offset[r] = eqs;
                eqs += C.rank(r) * C.rank(n + s - r);
            }
        }
        if (total == 0 && eqs == 0) continue;
        GMatrix A(eqs, total);
        std::vector<GroupRingElement> b(eqs, GroupRingElement::zero(spec));
        for (auto& [r, eo] : eq_offset) {
            int cols = C.rank(n + s - r), rows = C.rank(r);
            // rhs: (phi - phi2)_s^{(r)} minus the known nu_{s-1} terms
            Matrix<GroupRingElement> rhs =
                phi.at(s, r, C, n + s) - phi2.at(s, r, C, n + s);
            if (s >= 1) {
                Matrix<GroupRingElement> mid = nu.at(s - 1, r, C, n + s);
                Matrix<GroupRingElement> tmid =
                    transpose_component(nu, s - 1, r, C, n + s);
                mid = sign_pow(s) < 0 ? mid - tmid : mid + tmid;
                if (sign_pow(n + s) < 0) mid = -mid;
                if (outer_sign < 0) mid = -mid;
                rhs = rhs - mid;
            }
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) b[eo + j * rows + i] = rhs(i, j);
            // unknown terms: outer_sign * [ d nu_s^{(r+1)} + (-1)^r nu_s^{(r)} delta ]
            if (offset.count(r + 1)) {
                GMatrix dd = C.bd(r + 1);
                int scol = C.rank(n + s - r);  // source of nu_s^{(r+1)} equals eq source
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < cols; ++j)
                        for (int l = 0; l < C.rank(r + 1); ++l)
                            if (!dd(i, l).is_zero()) {
                                GroupRingElement v = dd(i, l);
                                if (outer_sign < 0) v = -v;
                                int col = offset.at(r + 1) + j * C.rank(r + 1) + l;
                                A(eo + j * rows + i, col) = A(eo + j * rows + i, col) + v;
                            }
                (void)scol;
            }
            if (offset.count(r) && C.rank(n + 1 + s - r)) {
                Matrix<GroupRingElement> delta = conj_transpose(C.bd(n + 1 + s - r));
                // nu_s^{(r)} * delta : entry (i, j) = sum_l nu(i, l) delta(l, j)
                int src = C.rank(n + 1 + s - r);
                int sg = sign_pow(r) * outer_sign;
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < cols; ++j)
                        for (int l = 0; l < src; ++l)
                            if (!delta(l, j).is_zero()) {
                                GroupRingElement v = delta(l, j);
                                if (sg < 0) v = -v;
                                int col = offset.at(r) + l * rows + i;
                                A(eo + j * rows + i, col) = A(eo + j * rows + i, col) + v;
                            }
            }
        }
        auto sol = gr_solve(A, b, spec);
        if (!sol) return std::nullopt;
        for (auto& [r, off] : offset) {
            int rows = C.rank(r), src = C.rank(n + 1 + s - r);
            Matrix<GroupRingElement> m(rows, src);
            for (int l = 0; l < src; ++l)
                for (int i = 0; i < rows; ++i) m(i, l) = (*sol)[off + l * rows + i];
            nu.set(s, r, std::move(m));
        }
    }
    return nu;
}

}  // namespace blanchfield
