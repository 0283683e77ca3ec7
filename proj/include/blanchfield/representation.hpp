#pragma once

// Unitary representations pi -> Aut(R^d) with inner product Theta, and the
// coefficient change V ox_{Z[pi]} -.

#include "blanchfield/complex.hpp"
#include "blanchfield/groupring.hpp"
#include "blanchfield/homology.hpp"

#include <string>
#include <vector>

namespace blanchfield {

struct Representation {
    Ring ring = Ring::Integers;
    int dim = 1;
    GroupSpec group;
    std::vector<RMatrix> gens;      // one invertible d x d matrix per generator
    std::vector<RMatrix> gen_invs;  // stored inverses
    RMatrix theta;                  // inner product; invertible, conj-symmetric

    // tautological rep of Z = <t> on Q[t,t^-1]
    static Representation tautological();
    // augmentation g -> 1 over Z, any group
    static Representation trivial(const GroupSpec& g);
    // regular representation of Z_k as permutation matrices over Z;
    // for a single infinite generator the map factors through Z -> Z_k
    static Representation regular_cyclic(const GroupSpec& g, int k);

    void validate() const;   // shapes, gen * inv = 1, theta invertible
};

RMatrix represent_word(const Representation& rep, const GroupWord& w);
RMatrix represent(const Representation& rep, const GroupRingElement& x);

struct UnitarityReport {
    bool ok = true;
    std::vector<int> failing_generators;
};

UnitarityReport check_unitary(const Representation& rep);

// Matrix of the isomorphism V^* ox W^* -> (V ox W)^* of Lemma-style dual
// identification, in the stored coordinate conventions (W free of rank n).
RMatrix dual_pairing_identify(const Representation& rep, int n);

// entrywise coefficient change; re-verifies d^2 = 0
ChainComplex<RingElement> tensor_with_V(const Representation& rep,
                                        const ChainComplex<GroupRingElement>& C);

Matrix<RingElement> tensor_with_V(const Representation& rep,
                                  const Matrix<GroupRingElement>& M);

}  // namespace blanchfield
