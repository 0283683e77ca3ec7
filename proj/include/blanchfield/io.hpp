#pragma once

// JSON interchange for complexes, representations and triads.  All entries
// use the exact textual ring syntax; matrices are row-major.

#include "blanchfield/blanchfield.hpp"
#include "blanchfield/builders.hpp"

#include <string>

#include "json.hpp"

namespace blanchfield {

using json = nlohmann::json;

json ring_complex_to_json(const ChainComplex<RingElement>& C, Ring ring);
ChainComplex<RingElement> ring_complex_from_json(const json& j);

json group_spec_to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const json& j);

json group_complex_to_json(const ChainComplex<GroupRingElement>& C, const GroupSpec& spec);
ChainComplex<GroupRingElement> group_complex_from_json(const json& j, const GroupSpec& spec);

json representation_to_json(const Representation& rep);
Representation representation_from_json(const json& j);

json triad_to_json(const SymTriad<GroupRingElement>& T, const GroupSpec& spec);
SymTriad<GroupRingElement> triad_from_json(const json& j, GroupSpec* spec_out = nullptr);

json pairing_matrix_to_json(const PairingMatrix& m);

// published schemas for the emit-schema subcommand
json schemas();

}  // namespace blanchfield
