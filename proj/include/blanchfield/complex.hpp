#pragma once

// Finitely generated free chain complexes with explicit degree ranges and
// the signed constructions on them: duals C^{m-*}, tensor and Hom double
// complexes, slant, transposition, algebraic mapping cones.
//
// Conventions: matrices act on column vectors, composition is right to
// left.  The dual of a map is the conjugate-transpose of its matrix; the
// boundary of C^{m-*} from degree r to r-1 is (-1)^r conjT(d_{m-r+1}).

#include "blanchfield/matrix.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace blanchfield {

inline int sign_pow(long long k) { return (k % 2 + 2) % 2 == 0 ? 1 : -1; }

struct DegreeReport {
    bool ok = true;
    int degree = 0;       // first offending degree when !ok
    std::string what;
};

template <class T>
class ChainComplex {
  public:
    ChainComplex() = default;

    void set_rank(int deg, int rank) {
        if (rank != 0) ranks_[deg] = rank;
    }
    void set_boundary(int deg, Matrix<T> m) {
        if (m.rows() || m.cols()) boundary_[deg] = std::move(m);
    }

    int rank(int deg) const {
        auto it = ranks_.find(deg);
        return it == ranks_.end() ? 0 : it->second;
    }
    int lo() const { return ranks_.empty() ? 0 : ranks_.begin()->first; }
    int hi() const { return ranks_.empty() ? 0 : ranks_.rbegin()->first; }
    bool empty() const { return ranks_.empty(); }
    const std::map<int, int>& ranks() const { return ranks_; }

    // boundary C_deg -> C_{deg-1}; zero-filled when absent
    Matrix<T> bd(int deg) const {
        auto it = boundary_.find(deg);
        if (it != boundary_.end()) return it->second;
        return Matrix<T>(rank(deg - 1), rank(deg));
    }

    DegreeReport validate() const {
        for (const auto& [deg, m] : boundary_) {
            if (m.rows() != rank(deg - 1) || m.cols() != rank(deg))
                return {false, deg, "boundary shape mismatch"};
        }
        for (int r = lo(); r <= hi() + 1; ++r) {
            Matrix<T> p = bd(r) * bd(r + 1);
            if (!p.is_zero()) return {false, r, "d^2 != 0"};
        }
        return {};
    }

    int total_rank() const {
        int n = 0;
        for (auto& [d, r] : ranks_) n += r;
        return n;
    }

  private:
    std::map<int, int> ranks_;
    std::map<int, Matrix<T>> boundary_;
};

template <class T>
struct ChainMap {
    // components f_r : C_r -> D_r
    std::map<int, Matrix<T>> comp;

    Matrix<T> at(int r, const ChainComplex<T>& src, const ChainComplex<T>& dst) const {
        auto it = comp.find(r);
        if (it != comp.end()) return it->second;
        return Matrix<T>(dst.rank(r), src.rank(r));
    }

    DegreeReport verify(const ChainComplex<T>& src, const ChainComplex<T>& dst) const {
        for (int r = std::min(src.lo(), dst.lo()); r <= std::max(src.hi(), dst.hi()) + 1; ++r) {
            Matrix<T> lhs = dst.bd(r) * at(r, src, dst);
            Matrix<T> rhs = at(r - 1, src, dst) * src.bd(r);
            if (!(lhs == rhs)) return {false, r, "does not commute with boundaries"};
        }
        return {};
    }
};

template <class T>
struct ChainHomotopy {
    // components k_r : C_r -> D_{r+1}
    std::map<int, Matrix<T>> comp;
    Matrix<T> at(int r, const ChainComplex<T>& src, const ChainComplex<T>& dst) const {
        auto it = comp.find(r);
        if (it != comp.end()) return it->second;
        return Matrix<T>(dst.rank(r + 1), src.rank(r));
    }
};

// C^{m-*}: rank_r = rank(C_{m-r}); boundary r -> r-1 is (-1)^r conjT(d_{m-r+1}).
template <class T>
ChainComplex<T> dual_complex(const ChainComplex<T>& C, int m) {
    ChainComplex<T> D;
    for (const auto& [deg, rk] : C.ranks()) D.set_rank(m - deg, rk);
    for (int r = D.lo(); r <= D.hi(); ++r) {
        if (D.rank(r) && D.rank(r - 1)) {
            Matrix<T> b = conj_transpose(C.bd(m - r + 1));
            if (sign_pow(r) < 0) b = -b;
            D.set_boundary(r, std::move(b));
        }
    }
    return D;
}

// index bookkeeping for direct sums of bigraded pieces
struct TensorLayout {
    // list of (p, q) blocks per total degree with running offsets
    std::map<int, std::vector<std::tuple<int, int, int>>> blocks;  // n -> {(p, q, offset)}
    std::map<int, int> ranks;
    int offset_of(int n, int p) const {
        for (auto& [pp, qq, off] : blocks.at(n))
            if (pp == p) return off;
        throw std::runtime_error("tensor layout: missing block");
    }
};

// C^t ox_R D with  d(x ox y) = x ox d(y) + (-1)^{|y|} d(x) ox y.
// Basis order: for each total degree n, blocks (p, q = n - p) with p
// increasing; within a block the D-index varies fastest.
template <class T>
std::pair<ChainComplex<T>, TensorLayout> tensor_complex(const ChainComplex<T>& C,
                                                        const ChainComplex<T>& D) {
    TensorLayout L;
    for (int n = C.lo() + D.lo(); n <= C.hi() + D.hi(); ++n) {
        int off = 0;
        for (int p = C.lo(); p <= C.hi(); ++p) {
            int q = n - p;
            if (C.rank(p) && D.rank(q)) {
                L.blocks[n].push_back({p, q, off});
                off += C.rank(p) * D.rank(q);
            }
        }
        if (off) L.ranks[n] = off;
    }
    ChainComplex<T> Tc;
    for (auto& [n, r] : L.ranks) Tc.set_rank(n, r);
    for (auto it = L.ranks.begin(); it != L.ranks.end(); ++it) {
        int n = it->first;
        if (!L.ranks.count(n - 1)) continue;
        Matrix<T> B(L.ranks.at(n - 1), L.ranks.at(n));
        for (auto& [p, q, off] : L.blocks.at(n)) {
            int nc = C.rank(p), nd = D.rank(q);
            // x ox d(y): block (p, q-1)
            if (D.rank(q - 1)) {
                int off2 = L.offset_of(n - 1, p);
                Matrix<T> dD = D.bd(q);
                for (int a = 0; a < nc; ++a)
                    for (int i = 0; i < D.rank(q - 1); ++i)
                        for (int j = 0; j < nd; ++j)
                            B(off2 + a * D.rank(q - 1) + i, off + a * nd + j) =
                                B(off2 + a * D.rank(q - 1) + i, off + a * nd + j) + dD(i, j);
            }
            // (-1)^q d(x) ox y: block (p-1, q); left factor moves with conj
            if (C.rank(p - 1)) {
                int off2 = L.offset_of(n - 1, p - 1);
                Matrix<T> dC = C.bd(p);
                int s = sign_pow(q);
                for (int a = 0; a < C.rank(p - 1); ++a)
                    for (int b = 0; b < nc; ++b) {
                        if (dC(a, b).is_zero()) continue;
                        T cc = conj(dC(a, b));
                        if (s < 0) cc = -cc;
                        for (int j = 0; j < nd; ++j)
                            B(off2 + a * nd + j, off + b * nd + j) =
                                B(off2 + a * nd + j, off + b * nd + j) + cc;
                    }
            }
        }
        Tc.set_boundary(n, std::move(B));
    }
    return {Tc, L};
}

// Hom_R(C, D)_n = (+)_{q-p=n} Hom(C_p, D_q),  d(g) = d_D g + (-1)^q g d_C.
// Realized through the canonical isomorphism with D^t... kept explicit:
// an element of Hom(C_p, D_q) is stored column-major as vec(matrix).
template <class T>
std::pair<ChainComplex<T>, TensorLayout> hom_complex(const ChainComplex<T>& C,
                                                     const ChainComplex<T>& D) {
    TensorLayout L;
    int lo = D.lo() - C.hi(), hi = D.hi() - C.lo();
    for (int n = lo; n <= hi; ++n) {
        int off = 0;
        for (int p = C.lo(); p <= C.hi(); ++p) {
            int q = n + p;
            if (C.rank(p) && D.rank(q)) {
                L.blocks[n].push_back({p, q, off});
                off += C.rank(p) * D.rank(q);
            }
        }
        if (off) L.ranks[n] = off;
    }
    ChainComplex<T> H;
    for (auto& [n, r] : L.ranks) H.set_rank(n, r);
    for (auto it = L.ranks.begin(); it != L.ranks.end(); ++it) {
        int n = it->first;
        if (!L.ranks.count(n - 1)) continue;
        Matrix<T> B(L.ranks.at(n - 1), L.ranks.at(n));
        for (auto& [p, q, off] : L.blocks.at(n)) {
            int nc = C.rank(p), nd = D.rank(q);
            // g stored with column index a over C_p, row index i over D_q:
            // position off + a*nd + i.
            // d_D g : Hom(C_p, D_{q-1})
            if (D.rank(q - 1)) {
                int off2 = L.offset_of(n - 1, p);
                Matrix<T> dD = D.bd(q);
                for (int a = 0; a < nc; ++a)
                    for (int i2 = 0; i2 < D.rank(q - 1); ++i2)
                        for (int i = 0; i < nd; ++i)
                            if (!dD(i2, i).is_zero())
                                B(off2 + a * D.rank(q - 1) + i2, off + a * nd + i) =
                                    B(off2 + a * D.rank(q - 1) + i2, off + a * nd + i) + dD(i2, i);
            }
            // (-1)^q g d_C : Hom(C_{p+1}, D_q)
            if (C.rank(p + 1)) {
                int off2 = L.offset_of(n - 1, p + 1);
                Matrix<T> dC = C.bd(p + 1);
                int s = sign_pow(q);
                for (int a2 = 0; a2 < C.rank(p + 1); ++a2)
                    for (int a = 0; a < nc; ++a) {
                        if (dC(a, a2).is_zero()) continue;
                        T cc = dC(a, a2);
                        if (s < 0) cc = -cc;
                        for (int i = 0; i < nd; ++i)
                            B(off2 + a2 * nd + i, off + a * nd + i) =
                                B(off2 + a2 * nd + i, off + a * nd + i) + cc;
                    }
            }
        }
        H.set_boundary(n, std::move(B));
    }
    return {H, L};
}

// cone(g)_r = D_r (+) C_{r-1},  d = [[d_D, (-1)^{r-1} g],[0, d_C]].
template <class T>
ChainComplex<T> mapping_cone(const ChainMap<T>& g, const ChainComplex<T>& C,
                             const ChainComplex<T>& D) {
    ChainComplex<T> K;
    int lo = std::min(C.lo() + 1, D.lo()), hi = std::max(C.hi() + 1, D.hi());
    for (int r = lo; r <= hi; ++r) K.set_rank(r, D.rank(r) + C.rank(r - 1));
    for (int r = lo; r <= hi; ++r) {
        int rows = K.rank(r - 1), cols = K.rank(r);
        if (!rows || !cols) continue;
        Matrix<T> B(rows, cols);
        B.paste(0, 0, D.bd(r));
        Matrix<T> gc = g.at(r - 1, C, D);
        if (sign_pow(r - 1) < 0) gc = -gc;
        B.paste(0, D.rank(r), gc);
        B.paste(D.rank(r - 1), D.rank(r), C.bd(r - 1));
        K.set_boundary(r, std::move(B));
    }
    return K;
}

template <class T>
ChainComplex<T> direct_sum(const ChainComplex<T>& A, const ChainComplex<T>& B) {
    ChainComplex<T> S;
    int lo = std::min(A.lo(), B.lo()), hi = std::max(A.hi(), B.hi());
    for (int r = lo; r <= hi; ++r) S.set_rank(r, A.rank(r) + B.rank(r));
    for (int r = lo; r <= hi; ++r) {
        if (!S.rank(r) || !S.rank(r - 1)) continue;
        Matrix<T> M(S.rank(r - 1), S.rank(r));
        M.paste(0, 0, A.bd(r));
        M.paste(A.rank(r - 1), A.rank(r), B.bd(r));
        S.set_boundary(r, std::move(M));
    }
    return S;
}

// shift by k: (C[k])_r = C_{r-k}, boundaries unchanged
template <class T>
ChainComplex<T> shifted(const ChainComplex<T>& C, int k) {
    ChainComplex<T> S;
    for (auto& [d, r] : C.ranks()) S.set_rank(d + k, r);
    for (int r = C.lo(); r <= C.hi(); ++r)
        if (C.rank(r) && C.rank(r - 1)) S.set_boundary(r + k, C.bd(r));
    return S;
}

}  // namespace blanchfield
