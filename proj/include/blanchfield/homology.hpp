#pragma once

// Exact linear algebra over the shipped Euclidean domains (Z, Q, Q[t,t^-1]):
// Smith normal form with transforms, finitely presented modules, homology
// with explicit cycle lifts, and exact linear solving.

#include "blanchfield/complex.hpp"
#include "blanchfield/ring.hpp"

#include <optional>
#include <vector>

namespace blanchfield {

using RMatrix = Matrix<RingElement>;

struct SmithForm {
    // A = U * D * V with U, V invertible; D diagonal, d_1 | d_2 | ...
    RMatrix U, Uinv, D, V, Vinv;
    int rank = 0;  // number of nonzero diagonal entries
    RingElement diag(int i) const { return D(i, i); }
};

SmithForm smith_normal_form(const RMatrix& A);

// Finitely presented module  R^ambient / im(relations).
struct ModulePresentation {
    Ring ring = Ring::Integers;
    int ambient = 0;
    RMatrix relations;

    std::vector<RingElement> invariants;  // torsion factors: nonzero nonunits
    RMatrix torsion_gens;                 // ambient x #torsion, coordinate columns
    RMatrix free_gens;                    // ambient x free_rank
    // rows mapping an ambient vector to its (torsion | free) generator
    // coefficients: coefficient_rows * x gives (a_1..a_k, b_1..b_f); the
    // class of x is sum a_i g_i (mod d_i) + sum b_j f_j.
    RMatrix coefficient_rows;

    int torsion_count() const { return (int)invariants.size(); }
    int free_rank() const { return free_gens.cols(); }
    bool is_trivial() const { return invariants.empty() && free_gens.cols() == 0; }

    std::string to_string() const;
};

ModulePresentation present_cokernel(const RMatrix& relations);

// torsion part only; free summand discarded
ModulePresentation torsion_part(const ModulePresentation& m);

struct HomologyData {
    ModulePresentation module;   // presented on the kernel basis
    RMatrix kernel_basis;        // n_r x k
    RMatrix cycle_lifts;         // n_r x #gens (torsion then free): lifts in C_r
};

HomologyData homology(const ChainComplex<RingElement>& C, int r);

struct SolveResult {
    std::optional<std::vector<RingElement>> solution;
    int failure_index = -1;   // Smith diagonal position violating divisibility
};

SolveResult solve_linear(const RMatrix& A, const std::vector<RingElement>& b);

// k with f - g = dk + kd, or the first degree where the lift fails
struct NullHomotopyResult {
    std::optional<ChainHomotopy<RingElement>> homotopy;
    int failure_degree = 0;
};

NullHomotopyResult is_null_homotopic(const ChainMap<RingElement>& f,
                                     const ChainComplex<RingElement>& src,
                                     const ChainComplex<RingElement>& dst);

struct QuasiIsoReport {
    bool ok = true;
    int failure_degree = 0;
    std::string detail;
};

QuasiIsoReport is_quasi_iso(const ChainMap<RingElement>& f,
                            const ChainComplex<RingElement>& src,
                            const ChainComplex<RingElement>& dst);

// gcd of all k x k minors (oracle used by the Smith-form tests)
RingElement minor_gcd(const RMatrix& A, int k);

}  // namespace blanchfield
