#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "cubebound/moves.hpp"

namespace cubebound {

// Exact cube position. perm[slot] = cubie occupying that slot, orient[slot] =
// twist/flip of the cubie at that slot relative to the slot's reference frame.
//
// Slots: corners 0..7 are URF UFL ULB UBR DFR DLF DBL DRB; edges 0..11 are
// UR UF UL UB FR FL BL BR DR DF DL DB (U layer, middle layer, D layer).
// Corner orientation counts 120-degree clockwise twists of the U/D-colored
// facelet; edge orientation is the flip relative to the frame preserved by
// U, D, R, L, F2, B2.
//
// Symmetry elements containing a reflection carry corner orientations 3..5
// (mirrored, twist co-3); ordinary positions always stay in 0..2.
struct CubieState {
  std::array<uint8_t, 8> cp;
  std::array<uint8_t, 8> co;
  std::array<uint8_t, 12> ep;
  std::array<uint8_t, 12> eo;

  static CubieState identity();
  // All cubies home and oriented except every edge flipped.
  static CubieState superflip();

  friend bool operator==(const CubieState& a, const CubieState& b) {
    return a.cp == b.cp && a.co == b.co && a.ep == b.ep && a.eo == b.eo;
  }
  friend bool operator!=(const CubieState& a, const CubieState& b) { return !(a == b); }
};

// a then b, as permutations applied left to right to the solved cube.
CubieState multiply(const CubieState& a, const CubieState& b);

CubieState invert(const CubieState& s);

CubieState applyMove(const CubieState& s, Move mv);
CubieState applySequence(const CubieState& s, const MoveSequence& q);

struct ValidationReport {
  bool cornerPermOk = true;
  bool edgePermOk = true;
  bool cornerOrientRange = true;
  bool edgeOrientRange = true;
  bool cornerOrientSum = true; // twists sum to a multiple of 360 degrees
  bool edgeOrientSum = true;   // flipped-edge count is even
  bool permParity = true;      // corner and edge permutation parities match

  bool ok() const {
    return cornerPermOk && edgePermOk && cornerOrientRange && edgeOrientRange &&
           cornerOrientSum && edgeOrientSum && permParity;
  }
  std::string describe() const;
};

ValidationReport validate(const CubieState& s);

// Diagnostic dump: four integer lists, cornerPerm cornerOrient edgePerm edgeOrient.
std::string dumpState(const CubieState& s);

// The position reached from solved by a single move.
const CubieState& moveState(Move mv);

bool permParity8(const std::array<uint8_t, 8>& p);
bool permParity12(const std::array<uint8_t, 12>& p);

} // namespace cubebound
