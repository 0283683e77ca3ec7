#pragma once

// Exact linear solving over integral group rings of the shipped abelian
// groups, by expanding unknowns into integer coefficients over a finite
// exponent window (cyclic factors use their full residue range) and solving
// the resulting integer system by Smith reduction.

#include "blanchfield/complex.hpp"
#include "blanchfield/groupring.hpp"

#include <optional>
#include <vector>

namespace blanchfield {

using GMatrix = Matrix<GroupRingElement>;

// solve A x = b over Z[pi]; window growth is retried internally
std::optional<std::vector<GroupRingElement>> gr_solve(const GMatrix& A,
                                                      const std::vector<GroupRingElement>& b,
                                                      const GroupSpec& spec);

// group-ring version of the null-homotopy search: k with f = dk + kd
std::optional<ChainHomotopy<GroupRingElement>> gr_null_homotopy(
    const ChainMap<GroupRingElement>& f, const ChainComplex<GroupRingElement>& src,
    const ChainComplex<GroupRingElement>& dst, const GroupSpec& spec);

}  // namespace blanchfield
