#pragma once

// Validated generators of symmetric Poincare complexes and triads, plus the
// independent classical oracles: knot-exterior triads from Seifert matrices,
// lens spaces, branched covers, circle and torus reference complexes.

#include "blanchfield/blanchfield.hpp"
#include "blanchfield/diagonal.hpp"
#include "blanchfield/symmetric.hpp"

#include <vector>

namespace blanchfield {

struct SeifertData {
    // 2g x 2g integer matrix with det(V - V^T) = +-1
    std::vector<std::vector<long long>> V;
    int size() const { return (int)V.size(); }
    void validate() const;
};

struct LensData {
    int p = 2, q = 1;
    void validate() const;
};

// --- reference complexes with contractions (for the diagonal machinery) ---

struct ComplexWithContraction {
    ChainComplex<GroupRingElement> C;
    GroupSpec spec;
    Contraction contraction;
    GChain fundamental;   // base-level fundamental cycle
    int dim = 1;
};

ComplexWithContraction circle_complex();
ComplexWithContraction torus_complex();

// circle with the alternative (other-direction) contraction, for the
// uniqueness-up-to-homotopy tests
Contraction circle_contraction_alt();
Contraction torus_contraction_alt();

// --- knot exterior triad ---

struct KnotTriad {
    SymTriad<GroupRingElement> triad;
    GroupSpec spec;            // Z = <t>
    GroupWord meridian, longitude;
    int genus2 = 0;            // 2g
};

// triad of the knot exterior with toroidal boundary split along two
// meridians into annuli A and B; self-certified against check_triad
KnotTriad knot_triad(const SeifertData& V);

// sigma: C/B -> C/A from the annulus identification, with the homotopy
// witness found by the group-ring null-homotopy solver.  Requires the
// recorded meridian and longitude words to commute.
void annulus_sigma(KnotTriad& K);

// classical Seifert-matrix oracle: the pairing matrix of
// (t-1)(tV - V^T)^{-1} on smith-normalized generators of coker(tV - V^T)
PairingMatrix seifert_oracle(const SeifertData& V);

// exact agreement of the chain-level pairing with the classical formula,
// compared on the chain-level generators
bool oracle_agreement(const PairingContext& ctx, const SeifertData& V,
                      std::string* detail = nullptr);

// --- lens spaces ---

struct LensBuild {
    SymTriad<GroupRingElement> triad;   // closed: A = B = D = 0
    GroupSpec spec;                     // Z_p
    int p = 0, q = 0;
    std::string orientation = "+e3";
};

// 3-dimensional symmetric Poincare complex of L(p, q) over Z[Z_p], built by
// the constructive diagonal with exact integral lifts; self-certified
LensBuild lens_complex(const LensData& L);

// Q/Z-valued linking form of L(p,q) with the trivial representation
PairingMatrix lens_linking_form(const LensBuild& L);

// --- branched covers ---

struct BranchedCoverResult {
    PairingMatrix form;        // Q/Z-valued
    bool all_torsion = true;   // H_1(X_K, S^1; Z^k) is Z-torsion
};

BranchedCoverResult branched_cover_form(const SeifertData& V, int k);

}  // namespace blanchfield
