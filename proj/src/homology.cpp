#include "blanchfield/homology.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace blanchfield {

namespace {

[[noreturn]] void fail(const std::string& m) { throw std::runtime_error(m); }

Ring ring_of(const RMatrix& A) {
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (A(i, j).ring() != Ring::Any) return A(i, j).ring();
    return Ring::Integers;
}

void require_euclidean(Ring r) {
    if (r != Ring::Integers && r != Ring::Rationals && r != Ring::Laurent)
        fail("unsupported ring for Euclidean elimination");
}

struct Eliminator {
    RMatrix B, U, Uinv, V, Vinv;
    Ring ring;

    explicit Eliminator(const RMatrix& A) : B(A) {
        ring = ring_of(A);
        require_euclidean(ring);
        RingElement one = RingElement::one(ring);
        U = RMatrix::identity(A.rows(), one);
        Uinv = U;
        V = RMatrix::identity(A.cols(), one);
        Vinv = V;
    }

    // row[i] += c * row[k]  on B;  U column-fixup: col_k(U) -= c-bar?? no:
    // B' = E B with E = I + c e_ik  =>  U' = U E^{-1} = U (I - c e_ik)
    void row_op(int i, int k, const RingElement& c) {
        for (int j = 0; j < B.cols(); ++j) B(i, j) = B(i, j) + c * B(k, j);
        for (int j = 0; j < Uinv.cols(); ++j) Uinv(i, j) = Uinv(i, j) + c * Uinv(k, j);
        for (int r = 0; r < U.rows(); ++r) U(r, k) = U(r, k) - c * U(r, i);
    }

    // col[j] += c * col[k]
    void col_op(int j, int k, const RingElement& c) {
        for (int i = 0; i < B.rows(); ++i) B(i, j) = B(i, j) + B(i, k) * c;
        for (int i = 0; i < Vinv.rows(); ++i) Vinv(i, j) = Vinv(i, j) + Vinv(i, k) * c;
        for (int i = 0; i < V.cols(); ++i) V(k, i) = V(k, i) - c * V(j, i);
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        B.swap_rows(a, b);
        Uinv.swap_rows(a, b);
        U.swap_cols(a, b);
    }

    void swap_cols(int a, int b) {
        if (a == b) return;
        B.swap_cols(a, b);
        Vinv.swap_cols(a, b);
        V.swap_rows(a, b);
    }

    // scale row by a unit u
    void scale_row(int i, const RingElement& u) {
        if (u.is_one()) return;
        for (int j = 0; j < B.cols(); ++j) B(i, j) = u * B(i, j);
        for (int j = 0; j < Uinv.cols(); ++j) Uinv(i, j) = u * Uinv(i, j);
        RingElement ui = u.inverse();
        for (int r = 0; r < U.rows(); ++r) U(r, i) = U(r, i) * ui;
    }

    void scale_col(int j, const RingElement& u) {
        if (u.is_one()) return;
        for (int i = 0; i < B.rows(); ++i) B(i, j) = B(i, j) * u;
        for (int i = 0; i < Vinv.rows(); ++i) Vinv(i, j) = Vinv(i, j) * u;
        RingElement ui = u.inverse();
        for (int c = 0; c < V.cols(); ++c) V(j, c) = ui * V(j, c);
    }

    // divide each row by its rational content (a unit of Q[t,t^-1]);
    // keeps coefficient growth bounded during Laurent elimination
    void extract_content(int from) {
        if (ring != Ring::Laurent) return;
        for (int i = from; i < B.rows(); ++i) {
            Int num_gcd = 0, den_lcm = 1;
            for (int j = from; j < B.cols(); ++j)
                for (const auto& [k, c] : B(i, j).coeffs()) {
                    num_gcd = boost::multiprecision::gcd(num_gcd,
                                                         boost::multiprecision::numerator(c));
                    den_lcm = boost::multiprecision::lcm(den_lcm,
                                                         boost::multiprecision::denominator(c));
                }
            if (num_gcd == 0) continue;
            Rat content(num_gcd, den_lcm);
            if (content != 1) scale_row(i, RingElement::laurent_term(0, Rat(1) / content));
        }
    }

    std::pair<int, int> find_pivot(int from) {
        int bi = -1, bj = -1;
        Int best = 0;
        for (int i = from; i < B.rows(); ++i)
            for (int j = from; j < B.cols(); ++j) {
                if (B(i, j).is_zero()) continue;
                Int n = B(i, j).euclidean_norm();
                if (bi < 0 || n < best) { best = n; bi = i; bj = j; }
            }
        return {bi, bj};
    }
};

}  // namespace

SmithForm smith_normal_form(const RMatrix& A) {
    Eliminator e(A);
    int n = std::min(A.rows(), A.cols());
    int k = 0;
    for (; k < n; ++k) {
        e.extract_content(k);
        auto [pi, pj] = e.find_pivot(k);
        if (pi < 0) break;
        e.swap_rows(k, pi);
        e.swap_cols(k, pj);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = k + 1; i < e.B.rows(); ++i) {
                if (e.B(i, k).is_zero()) continue;
                auto [q, r] = euclidean_divmod(e.B(i, k), e.B(k, k));
                e.row_op(i, k, -q);
                if (!e.B(i, k).is_zero()) {
                    e.swap_rows(k, i);   // remainder has smaller norm
                    dirty = true;
                }
            }
            for (int j = k + 1; j < e.B.cols(); ++j) {
                if (e.B(k, j).is_zero()) continue;
                auto [q, r] = euclidean_divmod(e.B(k, j), e.B(k, k));
                e.col_op(j, k, -q);
                if (!e.B(k, j).is_zero()) {
                    e.swap_cols(k, j);
                    dirty = true;
                }
            }
            if (!dirty) {
                // ensure the pivot divides the rest of the block
                bool restart = false;
                for (int i = k + 1; i < e.B.rows() && !restart; ++i)
                    for (int j = k + 1; j < e.B.cols() && !restart; ++j) {
                        if (e.B(i, j).is_zero()) continue;
                        auto [q, r] = euclidean_divmod(e.B(i, j), e.B(k, k));
                        if (!r.is_zero()) {
                            e.row_op(k, i, RingElement::one(e.ring));
                            restart = true;
                        }
                    }
                dirty = restart;
            }
        }
        // normalise the pivot to canonical form (monic over Laurent,
        // positive over Z)
        e.scale_row(k, canonical_unit(e.B(k, k)));
    }
    SmithForm out;
    out.U = e.U;
    out.Uinv = e.Uinv;
    out.V = e.V;
    out.Vinv = e.Vinv;
    out.D = e.B;
    out.rank = k;
    return out;
}

std::string ModulePresentation::to_string() const {
    std::ostringstream os;
    bool first = true;
    std::string R = ring == Ring::Integers ? "Z" : (ring == Ring::Laurent ? "L" : "Q");
    for (const auto& d : invariants) {
        if (!first) os << " + ";
        os << R << "/(" << d.to_string() << ")";
        first = false;
    }
    if (free_gens.cols() > 0) {
        if (!first) os << " + ";
        os << R;
        if (free_gens.cols() > 1) os << "^" << free_gens.cols();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

ModulePresentation present_cokernel(const RMatrix& relations) {
    ModulePresentation m;
    m.ring = ring_of(relations);
    m.ambient = relations.rows();
    m.relations = relations;
    if (relations.rows() == 0) return m;
    SmithForm s = smith_normal_form(relations);
    std::vector<int> torsion_idx, free_idx;
    for (int i = 0; i < relations.rows(); ++i) {
        if (i < s.rank && !s.diag(i).is_zero()) {
            if (!s.diag(i).is_unit()) torsion_idx.push_back(i);
        } else {
            free_idx.push_back(i);
        }
    }
    m.torsion_gens = RMatrix(m.ambient, (int)torsion_idx.size());
    m.free_gens = RMatrix(m.ambient, (int)free_idx.size());
    m.coefficient_rows = RMatrix((int)(torsion_idx.size() + free_idx.size()), m.ambient);
    int c = 0;
    for (int i : torsion_idx) {
        m.invariants.push_back(s.diag(i));
        for (int r = 0; r < m.ambient; ++r) m.torsion_gens(r, c) = s.U(r, i);
        for (int r = 0; r < m.ambient; ++r) m.coefficient_rows(c, r) = s.Uinv(i, r);
        ++c;
    }
    int f = 0;
    for (int i : free_idx) {
        for (int r = 0; r < m.ambient; ++r) m.free_gens(r, f) = s.U(r, i);
        for (int r = 0; r < m.ambient; ++r)
            m.coefficient_rows((int)torsion_idx.size() + f, r) = s.Uinv(i, r);
        ++f;
    }
    return m;
}

ModulePresentation torsion_part(const ModulePresentation& m) {
    ModulePresentation t = m;
    t.free_gens = RMatrix(m.ambient, 0);
    RMatrix rows((int)m.invariants.size(), m.ambient);
    for (int i = 0; i < (int)m.invariants.size(); ++i)
        for (int j = 0; j < m.ambient; ++j) rows(i, j) = m.coefficient_rows(i, j);
    t.coefficient_rows = rows;
    return t;
}

HomologyData homology(const ChainComplex<RingElement>& C, int r) {
    HomologyData h;
    int n = C.rank(r);
    RMatrix d_r = C.bd(r);
    RMatrix d_r1 = C.bd(r + 1);
    Ring ring = Ring::Integers;
    if (n > 0) {
        ring = ring_of(d_r);
        if (ring == Ring::Integers) {
            Ring r2 = ring_of(d_r1);
            if (r2 != Ring::Integers) ring = r2;
        }
    }
    // kernel basis of d_r
    RMatrix K;
    if (C.rank(r - 1) == 0 || d_r.is_zero()) {
        K = RMatrix::identity(n, RingElement::one(ring));
    } else {
        SmithForm s = smith_normal_form(d_r);
        int kdim = n - s.rank;
        K = RMatrix(n, kdim);
        for (int j = 0; j < kdim; ++j)
            for (int i = 0; i < n; ++i) K(i, j) = s.Vinv(i, s.rank + j);
    }
    h.kernel_basis = K;
    // express im d_{r+1} in the kernel basis: K * Y = d_{r+1}
    RMatrix Y(K.cols(), C.rank(r + 1));
    if (C.rank(r + 1) > 0 && K.cols() > 0) {
        SmithForm sk = smith_normal_form(K);
        for (int j = 0; j < d_r1.cols(); ++j) {
            // solve K y = col_j exactly
            std::vector<RingElement> b = d_r1.col(j);
            std::vector<RingElement> ub(K.rows());
            for (int i = 0; i < K.rows(); ++i) {
                RingElement acc;
                for (int l = 0; l < K.rows(); ++l)
                    if (!sk.Uinv(i, l).is_zero() && !b[l].is_zero())
                        acc = acc + sk.Uinv(i, l) * b[l];
                ub[i] = acc;
            }
            std::vector<RingElement> z(K.cols());
            for (int i = 0; i < (int)z.size(); ++i) {
                if (i < sk.rank && !sk.diag(i).is_zero()) {
                    auto [q, rem] = euclidean_divmod(ub[i], sk.diag(i));
                    if (!rem.is_zero()) fail("homology: boundary not inside kernel");
                    z[i] = q;
                } else if (!ub[i].is_zero()) {
                    fail("homology: boundary not inside kernel");
                }
            }
            for (int i = 0; i < Y.rows(); ++i) {
                RingElement acc;
                for (int l = 0; l < Y.rows(); ++l)
                    if (!sk.Vinv(i, l).is_zero() && !z[l].is_zero())
                        acc = acc + sk.Vinv(i, l) * z[l];
                Y(i, j) = acc;
            }
        }
    }
    h.module = present_cokernel(Y);
    h.module.ring = ring;
    // cycle lifts
    int gens = h.module.torsion_count() + h.module.free_rank();
    h.cycle_lifts = RMatrix(n, gens);
    for (int g = 0; g < gens; ++g) {
        for (int i = 0; i < n; ++i) {
            RingElement acc;
            for (int l = 0; l < K.cols(); ++l) {
                const RingElement& coeff =
                    g < h.module.torsion_count()
                        ? h.module.torsion_gens(l, g)
                        : h.module.free_gens(l, g - h.module.torsion_count());
                if (!K(i, l).is_zero() && !coeff.is_zero())
                    acc = acc + K(i, l) * coeff;
            }
            h.cycle_lifts(i, g) = acc;
        }
    }
    return h;
}

SolveResult solve_linear(const RMatrix& A, const std::vector<RingElement>& b) {
    SolveResult res;
    if ((int)b.size() != A.rows()) fail("solve_linear: shape mismatch");
    if (A.is_zero()) {
        for (int i = 0; i < (int)b.size(); ++i)
            if (!b[i].is_zero()) {
                res.failure_index = i;
                return res;
            }
        Ring r = Ring::Integers;
        for (const auto& x : b)
            if (x.ring() != Ring::Any) r = x.ring();
        res.solution = std::vector<RingElement>(A.cols(), RingElement::zero(r));
        return res;
    }
    SmithForm s = smith_normal_form(A);
    std::vector<RingElement> ub(A.rows());
    for (int i = 0; i < A.rows(); ++i) {
        RingElement acc;
        for (int l = 0; l < A.rows(); ++l)
            if (!s.Uinv(i, l).is_zero() && !b[l].is_zero()) acc = acc + s.Uinv(i, l) * b[l];
        ub[i] = acc;
    }
    std::vector<RingElement> z(A.cols());
    for (int i = 0; i < A.rows(); ++i) {
        if (i < s.rank && i < A.cols() && !s.diag(i).is_zero()) {
            auto [q, rem] = euclidean_divmod(ub[i], s.diag(i));
            if (!rem.is_zero()) {
                res.failure_index = i;
                return res;
            }
            z[i] = q;
        } else if (!ub[i].is_zero()) {
            res.failure_index = i;
            return res;
        }
    }
    std::vector<RingElement> x(A.cols());
    for (int i = 0; i < A.cols(); ++i) {
        RingElement acc;
        for (int l = 0; l < A.cols(); ++l)
            if (!s.Vinv(i, l).is_zero() && !z[l].is_zero()) acc = acc + s.Vinv(i, l) * z[l];
        x[i] = acc;
    }
    res.solution = std::move(x);
    return res;
}

NullHomotopyResult is_null_homotopic(const ChainMap<RingElement>& f,
                                     const ChainComplex<RingElement>& src,
                                     const ChainComplex<RingElement>& dst) {
    // Stack all degrees into one linear system over the ring: the unknown
    // entries of k_r : C_r -> D_{r+1} satisfy f_r = d_{r+1} k_r + k_{r-1} d_r.
    NullHomotopyResult out;
    int lo = std::min(src.lo(), dst.lo()) - 1, hi = std::max(src.hi(), dst.hi()) + 1;
    // unknown layout
    std::map<int, int> offset;
    int total = 0;
    for (int r = lo; r <= hi; ++r) {
        int sz = src.rank(r) * dst.rank(r + 1);
        if (sz) { offset[r] = total; total += sz; }
    }
    int eqs = 0;
    std::map<int, int> eq_offset;
    for (int r = lo; r <= hi; ++r) {
        int sz = src.rank(r) * dst.rank(r);
        if (sz) { eq_offset[r] = eqs; eqs += sz; }
    }
    Ring ring = Ring::Integers;
    for (int r = lo; r <= hi; ++r)
        if (src.rank(r)) { ring = ring_of(src.bd(r)); if (ring != Ring::Integers) break; }
    for (int r = lo; r <= hi && ring == Ring::Integers; ++r)
        if (dst.rank(r) && !dst.bd(r).is_zero()) { ring = ring_of(dst.bd(r)); }
    RMatrix A(eqs, total);
    std::vector<RingElement> b(eqs);
    // index helpers: k_r entry (i over dst_{r+1}, j over src_r) at
    // offset[r] + j * dst.rank(r+1) + i ; equation (p over dst_r, q over src_r)
    for (int r = lo; r <= hi; ++r) {
        if (!src.rank(r) || !dst.rank(r)) continue;
        Matrix<RingElement> fr = f.at(r, src, dst);
        int eo = eq_offset.at(r);
        for (int p = 0; p < dst.rank(r); ++p)
            for (int q = 0; q < src.rank(r); ++q)
                b[eo + q * dst.rank(r) + p] = fr(p, q);
        // d_{r+1} k_r term
        if (dst.rank(r + 1) && offset.count(r)) {
            RMatrix dd = dst.bd(r + 1);
            for (int p = 0; p < dst.rank(r); ++p)
                for (int q = 0; q < src.rank(r); ++q)
                    for (int i = 0; i < dst.rank(r + 1); ++i)
                        if (!dd(p, i).is_zero())
                            A(eo + q * dst.rank(r) + p,
                              offset.at(r) + q * dst.rank(r + 1) + i) = dd(p, i);
        }
        // k_{r-1} d_r term
        if (src.rank(r - 1) && offset.count(r - 1)) {
            RMatrix ds = src.bd(r);
            for (int p = 0; p < dst.rank(r); ++p)
                for (int q = 0; q < src.rank(r); ++q)
                    for (int j = 0; j < src.rank(r - 1); ++j)
                        if (!ds(j, q).is_zero())
                            A(eo + q * dst.rank(r) + p,
                              offset.at(r - 1) + j * dst.rank(r) + p) =
                                A(eo + q * dst.rank(r) + p,
                                  offset.at(r - 1) + j * dst.rank(r) + p) + ds(j, q);
        }
    }
    SolveResult sol = solve_linear(A, b);
    if (!sol.solution) {
        // certificate: the smallest degree whose equation prefix is already
        // unsolvable
        for (auto& [r, eo] : eq_offset) {
            int neq = eo + src.rank(r) * dst.rank(r);
            RMatrix Ar = A.submatrix(0, 0, neq, total);
            std::vector<RingElement> br(b.begin(), b.begin() + neq);
            if (!solve_linear(Ar, br).solution) {
                out.failure_degree = r;
                return out;
            }
        }
        out.failure_degree = hi;
        return out;
    }
    ChainHomotopy<RingElement> k;
    for (auto& [r, off] : offset) {
        Matrix<RingElement> kr(dst.rank(r + 1), src.rank(r));
        for (int j = 0; j < src.rank(r); ++j)
            for (int i = 0; i < dst.rank(r + 1); ++i)
                kr(i, j) = (*sol.solution)[off + j * dst.rank(r + 1) + i];
        k.comp[r] = std::move(kr);
    }
    out.homotopy = std::move(k);
    return out;
}

QuasiIsoReport is_quasi_iso(const ChainMap<RingElement>& f,
                            const ChainComplex<RingElement>& src,
                            const ChainComplex<RingElement>& dst) {
    ChainComplex<RingElement> cone = mapping_cone(f, src, dst);
    for (int r = cone.lo(); r <= cone.hi(); ++r) {
        HomologyData h = homology(cone, r);
        if (!h.module.is_trivial())
            return {false, r, "cone homology " + h.module.to_string()};
    }
    return {};
}

RingElement minor_gcd(const RMatrix& A, int k) {
    // enumerate k x k minors (desk-scale sizes only)
    RingElement g;
    bool any = false;
    std::function<RingElement(const std::vector<int>&, const std::vector<int>&)> det =
        [&](const std::vector<int>& rr, const std::vector<int>& cc) {
            int n = (int)rr.size();
            if (n == 1) return A(rr[0], cc[0]);
            RingElement acc;
            std::vector<int> subr(rr.begin() + 1, rr.end());
            for (int j = 0; j < n; ++j) {
                if (A(rr[0], cc[j]).is_zero()) continue;
                std::vector<int> subc;
                for (int l = 0; l < n; ++l)
                    if (l != j) subc.push_back(cc[l]);
                RingElement term = A(rr[0], cc[j]) * det(subr, subc);
                acc = (j % 2 == 0) ? acc + term : acc - term;
            }
            return acc;
        };
    std::function<void(int, int, std::vector<int>&, std::function<void(std::vector<int>&)>)>
        choose = [&](int from, int need, std::vector<int>& acc,
                     std::function<void(std::vector<int>&)> fn) {
            if (need == 0) { fn(acc); return; }
            for (int i = from; i <= A.rows() - need && i < A.rows(); ++i) {
                acc.push_back(i);
                choose(i + 1, need - 1, acc, fn);
                acc.pop_back();
            }
        };
    std::vector<int> racc;
    std::function<void(std::vector<int>&)> with_rows = [&](std::vector<int>& rr) {
        std::vector<int> cacc;
        std::function<void(int, int)> choose_c = [&](int from, int need) {
            if (need == 0) {
                RingElement d = det(rr, cacc);
                if (!d.is_zero()) { g = any ? gcd(g, d) : (canonical_unit(d) * d); any = true; }
                return;
            }
            for (int j = from; j <= A.cols() - need && j < A.cols(); ++j) {
                cacc.push_back(j);
                choose_c(j + 1, need - 1);
                cacc.pop_back();
            }
        };
        choose_c(0, k);
    };
    choose(0, k, racc, with_rows);
    if (!any) return RingElement::zero(ring_of(A));
    return g;
}

}  // namespace blanchfield
