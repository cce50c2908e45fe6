#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubebound {

// Face order is fixed once here; every table in the project depends on it.
enum class Face : uint8_t { U = 0, F = 1, R = 2, D = 3, B = 4, L = 5 };
enum class Twist : uint8_t { CW90 = 0, HALF = 1, CCW90 = 2 };

constexpr int kNumFaces = 6;
constexpr int kNumMoves = 18;

// A move is face*3 + twist; the full set of 18 is the generator set S.
class Move {
public:
  Move() = default;
  constexpr Move(Face f, Twist t) : id_(static_cast<uint8_t>(f) * 3 + static_cast<uint8_t>(t)) {}
  constexpr explicit Move(int id) : id_(static_cast<uint8_t>(id)) {}

  constexpr int id() const { return id_; }
  constexpr Face face() const { return static_cast<Face>(id_ / 3); }
  constexpr Twist twist() const { return static_cast<Twist>(id_ % 3); }

  // U, U2, U' and the four half turns R2 L2 F2 B2: the ten moves preserving H.
  constexpr bool inA() const {
    Face f = face();
    return f == Face::U || f == Face::D || twist() == Twist::HALF;
  }

  constexpr Move inverse() const {
    int t = id_ % 3;
    return Move(id_ - t + (2 - t));
  }

  friend constexpr bool operator==(Move a, Move b) { return a.id_ == b.id_; }
  friend constexpr bool operator!=(Move a, Move b) { return a.id_ != b.id_; }

private:
  uint8_t id_ = 0;
};

// Bitmask over move ids of the subset A.
constexpr uint32_t kAMoveMask = []() {
  uint32_t m = 0;
  for (int i = 0; i < kNumMoves; i++)
    if (Move(i).inA()) m |= 1u << i;
  return m;
}();

using MoveSequence = std::vector<Move>;

char faceLetter(Face f);

struct ParseError {
  size_t offset;
  std::string message;
};

// Accepts Singmaster text, spaced or not ("R' B2 U" or "R'B2U").
// On failure returns the offending character offset.
std::optional<MoveSequence> parseSequence(std::string_view text, ParseError* err = nullptr);

// Canonical form: single spaces, prime for CCW, digit 2 for half turns.
std::string formatSequence(const MoveSequence& seq);

MoveSequence invert(const MoveSequence& seq);

} // namespace cubebound
