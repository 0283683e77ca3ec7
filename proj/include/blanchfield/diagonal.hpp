#pragma once

// Constructive chain diagonal approximation for augmented group-ring
// complexes, built degree by degree from a chain contraction (or, for
// finite groups, by exact integral lifting), together with the symmetric
// structures obtained by evaluating on fundamental classes.
//
// Diagonals are stored equivariantly: Delta_s(cell) is a Z-combination of
// translated cell pairs (g^a . x) ox (g^b . y); extension to group-ring
// combinations is diagonal, Delta(g c) = (g ox g) Delta(c).

#include "blanchfield/groupring.hpp"
#include "blanchfield/grsolve.hpp"
#include "blanchfield/symmetric.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace blanchfield {

struct Cell {
    int deg = 0;
    int idx = 0;
    std::vector<int> exp;
    bool operator<(const Cell& o) const {
        return std::tie(deg, idx, exp) < std::tie(o.deg, o.idx, o.exp);
    }
    bool operator==(const Cell& o) const {
        return deg == o.deg && idx == o.idx && exp == o.exp;
    }
};

using GChain = std::map<Cell, Int>;

struct BiKey {
    int p, i;
    std::vector<int> ea;
    int q, j;
    std::vector<int> eb;
    bool operator<(const BiKey& o) const {
        return std::tie(p, i, ea, q, j, eb) < std::tie(o.p, o.i, o.ea, o.q, o.j, o.eb);
    }
    bool operator==(const BiKey& o) const {
        return p == o.p && i == o.i && ea == o.ea && q == o.q && j == o.j && eb == o.eb;
    }
};

using BiChain = std::map<BiKey, Int>;

// Z-linear contraction data of the augmented complex: d h + h d = 1 - eta eps
struct Contraction {
    std::function<GChain(const Cell&)> h;   // C_r -> C_{r+1}
    Cell basepoint;                         // image of eta
};

class DiagonalContext {
  public:
    DiagonalContext(const ChainComplex<GroupRingElement>& C, GroupSpec spec)
        : C_(C), spec_(std::move(spec)) {}

    const ChainComplex<GroupRingElement>& complex() const { return C_; }
    const GroupSpec& spec() const { return spec_; }

    GChain boundary(const Cell& c) const;
    BiChain tensor_boundary(const BiChain& a) const;
    BiChain transpose(const BiChain& a) const;
    BiChain diag_translate(const BiChain& a, const std::vector<int>& e) const;
    // check d h + h d = 1 - eta eps on translated basis cells
    void check_contraction(const Contraction& con, int max_shift = 2) const;

  private:
    const ChainComplex<GroupRingElement>& C_;
    GroupSpec spec_;
};

struct DiagonalApproximation {
    // deltas[s][{deg, idx}] = Delta_s(cell)
    std::vector<std::map<std::pair<int, int>, BiChain>> deltas;
    GroupSpec spec;

    BiChain of_chain(const DiagonalContext& ctx, int s, const GChain& a) const;
};

// Per-cell lift strategies.  A contraction lifter uses the induced
// contraction H = (-1)^{|y|} h ox 1 + eta eps ox h; the solve lifter finds
// an exact integral preimage within the filtration (finite groups).
struct CellLifter {
    enum class Kind { UseContraction, SolveIntegral };
    Kind kind = Kind::UseContraction;
    Contraction contraction;   // for UseContraction (also supplies eta for s=0)
    int max_filtration = -1;   // SolveIntegral: cap on slot degrees (-1: none)
};

// spec-level entry point: one contraction for the whole complex
DiagonalApproximation diagonal_approximation(const ChainComplex<GroupRingElement>& C,
                                             const GroupSpec& spec,
                                             const Contraction& contraction, int smax);

// builder-level entry point with per-cell lifters (smallest-subcomplex rule)
DiagonalApproximation diagonal_approximation(
    const ChainComplex<GroupRingElement>& C, const GroupSpec& spec,
    const std::map<std::pair<int, int>, CellLifter>& lifters, int smax);

// verify the defining relations d Delta_s - (-1)^s Delta_s d =
// Delta_{s-1} + (-1)^s T Delta_{s-1} (and the counit conditions for s = 0)
ResidualReport check_diagonal(const DiagonalContext& ctx,
                              const DiagonalApproximation& d, int smax);

// phi_s := eps(s) slant(Delta_s([M])) with eps(s) = (-1)^{ns + s(s+1)/2};
// [M] is a base-level integer chain in degree n.
SymStructure<GroupRingElement> symmetric_from_fundamental(
    const DiagonalContext& ctx, const DiagonalApproximation& d, const GChain& M, int n,
    int smax);

// relative (pair) normalization: (-1)^s eps(s) slant(Delta_s([X, dX]))
SymStructure<GroupRingElement> pair_structure_from_fundamental(
    const DiagonalContext& ctx, const DiagonalApproximation& d, const GChain& M, int n,
    int smax);

// collapse of an equivariant bichain of total degree m to structure
// components C^{p} -> C_q over the group ring
SymStructure<GroupRingElement> slant_collapse(const DiagonalContext& ctx,
                                              const BiChain& a, int m);

// certify [phi] = [phi'] in Q^n(C): solve phi - phi' = dQ(nu) for a
// degree-(n+1) structure nu
std::optional<SymStructure<GroupRingElement>> certify_structure_homotopy(
    const ChainComplex<GroupRingElement>& C, const GroupSpec& spec,
    const SymStructure<GroupRingElement>& phi, const SymStructure<GroupRingElement>& phi2,
    int n);

}  // namespace blanchfield
