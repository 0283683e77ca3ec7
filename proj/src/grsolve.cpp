#include "blanchfield/grsolve.hpp"

#include "blanchfield/homology.hpp"

#include <algorithm>

namespace blanchfield {

namespace {

[[noreturn]] void fail(const std::string& m) { throw std::runtime_error(m); }

struct Window {
    // per generator: [lo, hi] inclusive; cyclic generators use [0, p-1]
    std::vector<int> lo, hi;
    int ngens() const { return (int)lo.size(); }
    long long size() const {
        long long s = 1;
        for (int g = 0; g < ngens(); ++g) s *= (hi[g] - lo[g] + 1);
        return s;
    }
    bool contains(const std::vector<int>& e) const {
        for (int g = 0; g < ngens(); ++g)
            if (e[g] < lo[g] || e[g] > hi[g]) return false;
        return true;
    }
    int index(const std::vector<int>& e) const {
        int idx = 0;
        for (int g = 0; g < ngens(); ++g)
            idx = idx * (hi[g] - lo[g] + 1) + (e[g] - lo[g]);
        return idx;
    }
    std::vector<int> at(int idx) const {
        std::vector<int> e(ngens());
        for (int g = ngens() - 1; g >= 0; --g) {
            int w = hi[g] - lo[g] + 1;
            e[g] = lo[g] + idx % w;
            idx /= w;
        }
        return e;
    }
};

void span_of(const GroupRingElement& x, const GroupSpec& spec, std::vector<int>& lo,
             std::vector<int>& hi, bool& any) {
    for (const auto& [w, c] : x.terms()) {
        std::vector<int> e = w.exponents(spec.ngens());
        for (int g = 0; g < spec.ngens(); ++g) {
            if (!any) continue;
            lo[g] = std::min(lo[g], e[g]);
            hi[g] = std::max(hi[g], e[g]);
        }
        if (!any) { lo = e; hi = e; any = true; }
    }
}

}  // namespace

std::optional<std::vector<GroupRingElement>> gr_solve(const GMatrix& A,
                                                      const std::vector<GroupRingElement>& b,
                                                      const GroupSpec& spec) {
    if (!spec.abelian) fail("gr_solve: abelian group rings only");
    int ng = spec.ngens();
    int rows = A.rows(), cols = A.cols();
    if ((int)b.size() != rows) fail("gr_solve: shape mismatch");
    std::vector<int> alo(ng, 0), ahi(ng, 0);
    bool any = false;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) span_of(A(i, j), spec, alo, ahi, any);
        span_of(b[i], spec, alo, ahi, any);
    }
    if (!any) alo.assign(ng, 0), ahi.assign(ng, 0);

    for (int attempt = 0; attempt < 3; ++attempt) {
        int slack = 2 + 2 * attempt;
        Window xw, ew;
        xw.lo.resize(ng);
        xw.hi.resize(ng);
        ew.lo.resize(ng);
        ew.hi.resize(ng);
        for (int g = 0; g < ng; ++g) {
            if (spec.orders[g] > 0) {
                xw.lo[g] = 0;
                xw.hi[g] = spec.orders[g] - 1;
                ew.lo[g] = 0;
                ew.hi[g] = spec.orders[g] - 1;
            } else {
                xw.lo[g] = alo[g] - ahi[g] - slack;
                xw.hi[g] = ahi[g] - alo[g] + slack;
                ew.lo[g] = alo[g] + xw.lo[g];
                ew.hi[g] = ahi[g] + xw.hi[g];
            }
        }
        long long nunk = (long long)cols * xw.size();
        long long neq = (long long)rows * ew.size();
        if (nunk > 200000 || neq > 400000) fail("gr_solve: window too large");
        RMatrix M((int)neq, (int)nunk);
        std::vector<RingElement> rhs((int)neq, RingElement::integer(0));
        auto eq_index = [&](int i, const std::vector<int>& e) {
            return i * (int)ew.size() + ew.index(e);
        };
        bool overflow = false;
        for (int i = 0; i < rows && !overflow; ++i) {
            for (int j = 0; j < cols && !overflow; ++j) {
                if (A(i, j).is_zero()) continue;
                for (const auto& [w, c] : A(i, j).terms()) {
                    std::vector<int> ae = w.exponents(ng);
                    for (long long k = 0; k < xw.size(); ++k) {
                        std::vector<int> xe = xw.at((int)k);
                        std::vector<int> oe(ng);
                        for (int g = 0; g < ng; ++g) {
                            oe[g] = ae[g] + xe[g];
                            if (spec.orders[g] > 0)
                                oe[g] = ((oe[g] % spec.orders[g]) + spec.orders[g]) %
                                        spec.orders[g];
                        }
                        if (!ew.contains(oe)) { overflow = true; break; }
                        int row = eq_index(i, oe);
                        int col = j * (int)xw.size() + (int)k;
                        M(row, col) = M(row, col) + RingElement::integer(c);
                    }
                    if (overflow) break;
                }
            }
            if (overflow) break;
            for (const auto& [w, c] : b[i].terms()) {
                std::vector<int> e = w.exponents(ng);
                for (int g = 0; g < ng; ++g)
                    if (spec.orders[g] > 0)
                        e[g] = ((e[g] % spec.orders[g]) + spec.orders[g]) % spec.orders[g];
                if (!ew.contains(e)) { overflow = true; break; }
                rhs[eq_index(i, e)] = RingElement::integer(c);
            }
        }
        if (overflow) continue;
        SolveResult s = solve_linear(M, rhs);
        if (!s.solution) {
            if (attempt + 1 < 3) continue;
            return std::nullopt;
        }
        std::vector<GroupRingElement> x(cols, GroupRingElement::zero(spec));
        for (int j = 0; j < cols; ++j) {
            for (long long k = 0; k < xw.size(); ++k) {
                const RingElement& v = (*s.solution)[j * (int)xw.size() + (int)k];
                if (v.is_zero()) continue;
                Int c = boost::multiprecision::numerator(v.scalar());
                x[j] = x[j] + GroupRingElement::monomial(
                                  spec, GroupWord::from_exponents(xw.at((int)k)), c);
            }
        }
        return x;
    }
    return std::nullopt;
}

std::optional<ChainHomotopy<GroupRingElement>> gr_null_homotopy(
    const ChainMap<GroupRingElement>& f, const ChainComplex<GroupRingElement>& src,
    const ChainComplex<GroupRingElement>& dst, const GroupSpec& spec) {
    // one stacked group-ring system over all degrees
    int lo = std::min(src.lo(), dst.lo()) - 1, hi = std::max(src.hi(), dst.hi()) + 1;
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
    GMatrix A(eqs, total);
    std::vector<GroupRingElement> b(eqs, GroupRingElement::zero(spec));
    for (int r = lo; r <= hi; ++r) {
        if (!src.rank(r) || !dst.rank(r)) continue;
        Matrix<GroupRingElement> fr = f.at(r, src, dst);
        int eo = eq_offset.at(r);
        for (int p = 0; p < dst.rank(r); ++p)
            for (int q = 0; q < src.rank(r); ++q) b[eo + q * dst.rank(r) + p] = fr(p, q);
        if (dst.rank(r + 1) && offset.count(r)) {
            GMatrix dd = dst.bd(r + 1);
            for (int p = 0; p < dst.rank(r); ++p)
                for (int q = 0; q < src.rank(r); ++q)
                    for (int i = 0; i < dst.rank(r + 1); ++i)
                        if (!dd(p, i).is_zero())
                            A(eo + q * dst.rank(r) + p,
                              offset.at(r) + q * dst.rank(r + 1) + i) = dd(p, i);
        }
        if (src.rank(r - 1) && offset.count(r - 1)) {
            GMatrix ds = src.bd(r);
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
    auto sol = gr_solve(A, b, spec);
    if (!sol) return std::nullopt;
    ChainHomotopy<GroupRingElement> k;
    for (auto& [r, off] : offset) {
        Matrix<GroupRingElement> kr(dst.rank(r + 1), src.rank(r));
        for (int j = 0; j < src.rank(r); ++j)
            for (int i = 0; i < dst.rank(r + 1); ++i)
                kr(i, j) = (*sol)[off + j * dst.rank(r + 1) + i];
        k.comp[r] = std::move(kr);
    }
    return k;
}

}  // namespace blanchfield
