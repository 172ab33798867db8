#pragma once

#include <utility>
#include <vector>

#include "dsm/root_system.hpp"

namespace dsm {

// Closure of the reflections in the given roots under multiplication,
// computed by orbit saturation. Safe for the tiny groups handled here.
WeylGroup generate_reflection_group(const Mat& gram, const std::vector<Vec>& roots,
                                    const std::vector<int>& generator_roots);

// W (compact_only = false) or W_c; both precomputed at load time.
const WeylGroup& generate_weyl(const RootSystem& rs, bool compact_only);

// l(w) = |w(-Phi+) cap Phi+| and det(w).
std::pair<unsigned, int> length_and_sign(const RootSystem& rs, const Mat& w);

// w(Phi+) as sorted root indices.
std::vector<int> image_positive(const RootSystem& rs, const Mat& w);

// The unique w with w(Phi+) equal to the target; throws NoSuchElement
// when the target is not a chamber of Phi.
Mat find_w0(const RootSystem& rs, const std::vector<int>& target_positive);

// All chambers of Phi (as sorted index sets), i.e. the W-orbit of Phi+.
std::vector<std::vector<int>> chambers(const RootSystem& rs);

// rank independent regular integral forms lying in the given chamber,
// found by scanning integer combinations of independent roots over
// growing boxes. Termination: the chamber is an open full-dimensional
// cone, so large enough shells contain a full-rank set of lattice
// points.
std::vector<Vec> chamber_basis(const RootSystem& rs, const std::vector<int>& sigma_plus);

}  // namespace dsm
