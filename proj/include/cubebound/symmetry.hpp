#pragma once

#include "cubebound/cubie.hpp"

namespace cubebound {

// The 48-element whole-cube symmetry group M: 24 rotations times an optional
// left-right reflection. Index layout: m = 16*a + 8*b + 2*c + d with
// urf3^a * f2^b * u4^c * mirror^d, where urf3 is the 120-degree turn about
// the URF-DBL diagonal, f2 the half turn about the F-B axis, u4 the quarter
// turn about the U-D axis and mirror the left-right reflection. Indices 0..15
// are exactly the symmetries preserving the U/D axis (the ones usable for H).
constexpr int kNumSyms = 48;
constexpr int kNumSymsUD = 16;

struct SymmetryIndex {
  uint8_t index = 0;
};

const CubieState& symState(int m);
const CubieState& symInvState(int m);
int symInverse(int m);
int symMultiply(int m1, int m2); // element applying m1 then m2
bool symIsReflection(int m);

// m^-1 * s * m.
CubieState conjugate(const CubieState& s, int m);

// The move mv' with state(mv') = m^-1 * state(mv) * m.
Move conjugateMove(Move mv, int m);

// Rotations taking the R/L (resp. F/B) axis into the U/D role; used for
// triple-axis search and for mapping slice configurations between frames.
int axisRotationSym(int axis); // axis 0: identity, 1: RL->UD, 2: FB->UD

} // namespace cubebound
