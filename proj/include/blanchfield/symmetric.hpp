#pragma once

// Symmetric structures on chain complexes, pairs and triads, the residual
// checkers for the defining equation families, the union construction, and
// Poincare verification.
//
// A structure of total degree m on C is the collection of components
// phi_s^{(r)} : C^{m+s-r} -> C_r.  The equations checked here:
//
//   complex (dim n):   d phi_s^{(r+1)} + (-1)^r phi_s^{(r)} delta
//       + (-1)^{n+s-1} [phi_{s-1} + (-1)^s T phi_{s-1}]^{(r)} = 0
//
//   pair (dim n+1, f: C -> D):  d dphi_s^{(r+1)} + (-1)^r dphi_s^{(r)} delta
//       + (-1)^{n+s} [dphi_{s-1} + (-1)^s T dphi_{s-1}]^{(r)}
//       + (-1)^n f_r phi_s^{(r)} conjT(f_{n+s-r}) = 0
//
// with delta the conjugate-transposed boundary in the matching degree and
// (T theta)^{(r)} = (-1)^{r(m-r)} conjT(theta^{(m-r)}) for total degree m.

#include "blanchfield/complex.hpp"
#include "blanchfield/groupring.hpp"
#include "blanchfield/homology.hpp"
#include "blanchfield/representation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace blanchfield {

template <class T>
struct SymStructure {
    // comp[{s, r}] : C^{total(s) - r} -> C_r where total(s) = dim + s
    std::map<std::pair<int, int>, Matrix<T>> comp;
    int smax = 0;

    Matrix<T> at(int s, int r, const ChainComplex<T>& C, int total) const {
        auto it = comp.find({s, r});
        if (it != comp.end()) return it->second;
        return Matrix<T>(C.rank(r), C.rank(total - r));
    }
    void set(int s, int r, Matrix<T> m) {
        if (!m.is_zero()) {
            comp[{s, r}] = std::move(m);
            smax = std::max(smax, s);
        }
    }
    SymStructure negated() const {
        SymStructure out = *this;
        for (auto& [k, m] : out.comp) m = -m;
        return out;
    }
};

// (T theta_s)^{(r)} for a structure of total degree `total`
template <class T>
Matrix<T> transpose_component(const SymStructure<T>& th, int s, int r,
                              const ChainComplex<T>& C, int total) {
    Matrix<T> m = conj_transpose(th.at(s, total - r, C, total));
    if (sign_pow((long long)r * (total - r)) < 0) m = -m;
    return m;
}

struct ResidualEntry {
    int r, s;
    std::string what;
};

struct ResidualReport {
    std::vector<ResidualEntry> failures;
    bool ok() const { return failures.empty(); }
    std::string summary() const;
};

template <class T>
struct SymComplex {
    ChainComplex<T> C;
    int n = 0;                 // dimension
    SymStructure<T> phi;
};

template <class T>
struct SymPair {
    ChainComplex<T> C, D;      // boundary and total complex
    ChainMap<T> f;             // C -> D
    int n = 0;                 // boundary dimension; the pair has dim n+1
    SymStructure<T> dphi;      // on D, total degree n+1+s
    SymStructure<T> phi;       // on C, total degree n+s
};

// A split injection with an explicit splitting (split * incl = id).
template <class T>
struct SplitInjection {
    ChainMap<T> incl;
    ChainMap<T> split;
};

template <class T>
struct SymTriad {
    ChainComplex<T> D, A, B, C;
    SplitInjection<T> jA, jB;  // D -> A, D -> B
    SplitInjection<T> iA, iB;  // A -> C, B -> C
    SymStructure<T> chi;       // on D, dim n
    SymStructure<T> phiA;      // pair structure of (jA, (phiA, chi))
    SymStructure<T> phiB;      // pair structure of (jB, (phiB, chi))
    SymStructure<T> Phi;       // outer pair structure on C, total n+2+s
    int n = 1;                 // dim of D; the triad is (n+2)-dimensional
    // optional hermitian data: sigma : C/B -> C/A with homotopy witness k
    // for sigma q_B - q_A = dk + kd
    std::optional<ChainMap<T>> sigma;
    std::optional<ChainHomotopy<T>> sigma_homotopy;
};

ResidualReport check_symmetric(const SymComplex<GroupRingElement>& SC);
ResidualReport check_symmetric(const SymComplex<RingElement>& SC);
ResidualReport check_pair(const SymPair<GroupRingElement>& SP);
ResidualReport check_pair(const SymPair<RingElement>& SP);

// Quotient of a split injection: basis-subset complement with exact
// verification; returns the quotient complex, projection and a section
// with proj * section = id and id - section * proj factoring through sub.
template <class T>
struct QuotientData {
    ChainComplex<T> Q;
    ChainMap<T> proj;      // C -> Q
    ChainMap<T> section;   // Q -> C
};

QuotientData<GroupRingElement> quotient_complex(
    const ChainComplex<GroupRingElement>& sub, const ChainComplex<GroupRingElement>& big,
    const SplitInjection<GroupRingElement>& inc);

// A symmetric cobordism from (left, phi_left) to (right, phi_right):
// the pair ((fL, fR): left + right -> body, (dphi, phi_left + -phi_right)).
struct Cobordism {
    ChainComplex<GroupRingElement> left, right, body;
    ChainMap<GroupRingElement> fL, fR;
    SymStructure<GroupRingElement> dphi;       // total degree n+1+s on body
    SymStructure<GroupRingElement> phi_left;   // dim n structures
    SymStructure<GroupRingElement> phi_right;
    int n = 0;
    ResidualReport check() const;
};

// union along c.right == cp.left (shared piece and structure must agree);
// the result is a cobordism from c.left to cp.right.
Cobordism union_cobordisms(const Cobordism& c, const Cobordism& cp);

// assembled boundary of a triad: A u_D B with e = (i_A, 0, -i_B) and the
// glued structure phiA u_chi -phiB
struct TriadBoundary {
    ChainComplex<GroupRingElement> U;
    SymStructure<GroupRingElement> structure;
    ChainMap<GroupRingElement> e;
};

TriadBoundary triad_boundary(const SymTriad<GroupRingElement>& T);

ResidualReport check_triad(const SymTriad<GroupRingElement>& T);

struct PoincareReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Poincare verification after coefficient change: chi_0, phiB_0 p_B^*,
// Phi_0 p_C^*, and the composite q_B Phi_0 q_A^* must be quasi-isos.
PoincareReport is_poincare(const SymTriad<GroupRingElement>& T, const Representation& rep);

// the composite (C/A)^{n+2-*} -> (C/B)_* of the triad, over the group ring
ChainMap<GroupRingElement> duality_composite(const SymTriad<GroupRingElement>& T);

}  // namespace blanchfield
