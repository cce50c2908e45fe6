#include "cubebound/moves.hpp"

namespace cubebound {

namespace {
constexpr char kFaceLetters[kNumFaces + 1] = "UFRDBL";

int faceFromLetter(char c) {
  for (int i = 0; i < kNumFaces; i++)
    if (kFaceLetters[i] == c) return i;
  return -1;
}
} // namespace

char faceLetter(Face f) { return kFaceLetters[static_cast<int>(f)]; }

std::optional<MoveSequence> parseSequence(std::string_view text, ParseError* err) {
  MoveSequence out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      i++;
      continue;
    }
    int face = faceFromLetter(c);
    if (face < 0) {
      if (err) *err = {i, std::string("unexpected character '") + c + "'"};
      return std::nullopt;
    }
    Twist twist = Twist::CW90;
    if (i + 1 < text.size()) {
      if (text[i + 1] == '\'') {
        twist = Twist::CCW90;
        i++;
      } else if (text[i + 1] == '2') {
        twist = Twist::HALF;
        i++;
      }
    }
    out.emplace_back(static_cast<Face>(face), twist);
    i++;
  }
  return out;
}

std::string formatSequence(const MoveSequence& seq) {
  std::string out;
  for (Move mv : seq) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(faceLetter(mv.face()));
    if (mv.twist() == Twist::HALF)
      out.push_back('2');
    else if (mv.twist() == Twist::CCW90)
      out.push_back('\'');
  }
  return out;
}

MoveSequence invert(const MoveSequence& seq) {
  MoveSequence out;
  out.reserve(seq.size());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it)
    out.push_back(it->inverse());
  return out;
}

} // namespace cubebound
