#pragma once

// The chain-level twisted Blanchfield pairing of a symmetric triad with a
// unitary representation, its matrix on torsion generators, and the
// sesquilinear / hermitian / nonsingular verdicts.

#include "blanchfield/representation.hpp"
#include "blanchfield/symmetric.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace blanchfield {

// everything derived from (triad, representation) that the pairing needs
class PairingContext {
  public:
    PairingContext(const SymTriad<GroupRingElement>& T, const Representation& rep);

    const Representation& rep() const { return rep_; }
    Ring ring() const { return rep_.ring; }

    // V-coefficient cochain complexes of C/A and C/B in dimension n+2
    // (degree r holds the (n+2-r)-cochains)
    const ChainComplex<RingElement>& cochainsA() const { return DA_; }
    const ChainComplex<RingElement>& cochainsB() const { return DB_; }
    // V-coefficient chain complexes of the quotients
    const ChainComplex<RingElement>& chainsA() const { return CA_; }
    const ChainComplex<RingElement>& chainsB() const { return CB_; }

    // q_B Phi_0 q_A^* (source: cochainsA) and q_A Phi_0 q_B^* (source: cochainsB)
    const ChainMap<RingElement>& dualityBA() const { return WBA_; }
    const ChainMap<RingElement>& dualityAB() const { return WAB_; }

    // sigma-pullback on 2-cochains (C/A)^2 -> (C/B)^2, when sigma present
    std::optional<RMatrix> sigma_pullback() const;

    // torsion cohomology presentations in degree 2 (cochain degree n)
    struct TorsionSide {
        ModulePresentation pres;   // torsion part
        RMatrix cocycles;          // ambient columns, one per generator
    };
    const TorsionSide& torsionA() const { return thA_; }   // TH^2(V ox C/A)
    const TorsionSide& torsionB() const { return thB_; }   // TH^2(V ox C/B)

    // evaluation of a 1-cochain z against a 1-chain w through Theta
    RingElement evaluate(const std::vector<RingElement>& z,
                         const std::vector<RingElement>& w) const;

    // Bl([y],[x]) for explicit torsion cocycles; s_hint, when nonzero, must
    // annihilate [y]
    TorsionValue pairing_value(const std::vector<RingElement>& y,
                               const std::vector<RingElement>& x,
                               const RingElement& s_hint = RingElement()) const;
    // value from a caller-supplied pair (s, z) with delta z = s y
    TorsionValue pairing_value_given(const std::vector<RingElement>& z,
                                     const RingElement& s,
                                     const std::vector<RingElement>& x) const;
    // the same value computed with Phi_0^* in place of Phi_0
    TorsionValue pairing_value_dual(const std::vector<RingElement>& y,
                                    const std::vector<RingElement>& x) const;

    // annihilator of the class of a degree-2 cocycle on the B side
    RingElement annihilator_of(const std::vector<RingElement>& y) const;

    int n() const { return n_; }
    const SymTriad<GroupRingElement>& triad() const { return T_; }
    const QuotientData<GroupRingElement>& quotientA() const { return qa_; }
    const QuotientData<GroupRingElement>& quotientB() const { return qb_; }

  private:
    const SymTriad<GroupRingElement>& T_;
    Representation rep_;
    int n_;
    QuotientData<GroupRingElement> qa_, qb_;
    ChainComplex<RingElement> CA_, CB_, DA_, DB_;
    ChainMap<RingElement> WBA_, WAB_;
    RMatrix theta_inv_;
    TorsionSide thA_, thB_;
};

enum class PairingSide { Cohomology, Homology };

struct PairingMatrix {
    PairingSide side = PairingSide::Cohomology;
    Ring ring = Ring::Integers;
    // row generators (B side for cohomology, A side for homology) and
    // column generators with their annihilators
    std::vector<RingElement> row_annihilators, col_annihilators;
    std::vector<std::vector<TorsionValue>> values;
    // generator coordinates in the corresponding ambient spaces
    RMatrix row_generators, col_generators;
    std::string to_string() const;
};

PairingMatrix pairing_matrix(const PairingContext& ctx,
                             PairingSide side = PairingSide::Cohomology);

struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;
};

CheckReport check_sesquilinear(const PairingContext& ctx, int trials, unsigned seed = 1);
// hermitian: verifies the H = J - K + L chain-homotopy equation exactly over
// the group ring, then conj-symmetry of the sigma-identified pairing matrix
CheckReport check_hermitian(const PairingContext& ctx);
CheckReport check_nonsingular(const PairingContext& ctx);

}  // namespace blanchfield
