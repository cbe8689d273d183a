// Copyright 2026 The af2 Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AF2_AUTOMORPHISM_HPP_
#define AF2_AUTOMORPHISM_HPP_

#include <array>
#include <cstdlib>
#include <random>
#include <string>

#include "af2/word.hpp"

namespace af2 {

// An endomorphism of F2 given by the images of a and b. Callers are
// responsible for only building automorphisms (images forming a basis).
class Automorphism {
 public:
  Automorphism() : image_a_(Word::A()), image_b_(Word::B()) {}
  Automorphism(Word image_a, Word image_b)
      : image_a_(std::move(image_a)), image_b_(std::move(image_b)) {}

  static Automorphism Identity() { return {}; }

  const Word& image_a() const { return image_a_; }
  const Word& image_b() const { return image_b_; }
  const Word& Image(Gen g) const { return g == Gen::kA ? image_a_ : image_b_; }

  Word Apply(const Word& w) const {
    Word out;
    for (const Syllable& s : w.syllables()) {
      const Word& img = Image(s.base);
      const Word piece = s.exp > 0 ? img : img.Inverse();
      for (int i = 0; i < std::abs(s.exp); ++i) out *= piece;
    }
    return out;
  }

  // (this o other)(x) = this(other(x)).
  Automorphism After(const Automorphism& other) const {
    return {Apply(other.image_a_), Apply(other.image_b_)};
  }

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

  std::string ToString() const {
    return "(a->" + image_a_.ToString() + ", b->" + image_b_.ToString() + ")";
  }

 private:
  Word image_a_;
  Word image_b_;
};

// Elementary Nielsen automorphisms in a fixed enumeration; this order is the
// tie-break used by every reduction in the library. Entry 2i+1 inverts 2i.
enum class NielsenMove : int {
  kAtoAB = 0,     // a -> a b
  kAtoAb_ = 1,    // a -> a b^-1
  kAtoBA = 2,     // a -> b a
  kAtoB_A = 3,    // a -> b^-1 a
  kBtoBA = 4,     // b -> b a
  kBtoBa_ = 5,    // b -> b a^-1
  kBtoAB = 6,     // b -> a b
  kBtoA_B = 7,    // b -> a^-1 b
};

inline constexpr std::array<NielsenMove, 8> kAllNielsenMoves = {
    NielsenMove::kAtoAB,  NielsenMove::kAtoAb_, NielsenMove::kAtoBA,
    NielsenMove::kAtoB_A, NielsenMove::kBtoBA,  NielsenMove::kBtoBa_,
    NielsenMove::kBtoAB,  NielsenMove::kBtoA_B};

inline NielsenMove InverseMove(NielsenMove m) {
  const int i = static_cast<int>(m);
  return static_cast<NielsenMove>(i % 2 == 0 ? i + 1 : i - 1);
}

inline Automorphism MoveAutomorphism(NielsenMove m) {
  const Word a = Word::A();
  const Word b = Word::B();
  switch (m) {
    case NielsenMove::kAtoAB: return {a * b, b};
    case NielsenMove::kAtoAb_: return {a * b.Inverse(), b};
    case NielsenMove::kAtoBA: return {b * a, b};
    case NielsenMove::kAtoB_A: return {b.Inverse() * a, b};
    case NielsenMove::kBtoBA: return {a, b * a};
    case NielsenMove::kBtoBa_: return {a, b * a.Inverse()};
    case NielsenMove::kBtoAB: return {a, a * b};
    case NielsenMove::kBtoA_B: return {a, a.Inverse() * b};
  }
  return {};
}

inline const char* MoveName(NielsenMove m) {
  switch (m) {
    case NielsenMove::kAtoAB: return "a->ab";
    case NielsenMove::kAtoAb_: return "a->aB";
    case NielsenMove::kAtoBA: return "a->ba";
    case NielsenMove::kAtoB_A: return "a->Ba";
    case NielsenMove::kBtoBA: return "b->ba";
    case NielsenMove::kBtoBa_: return "b->bA";
    case NielsenMove::kBtoAB: return "b->ab";
    case NielsenMove::kBtoA_B: return "b->Ab";
  }
  return "?";
}

// x -> g x g^-1.
inline Automorphism InnerAutomorphism(const Word& g) {
  return {g * Word::A() * g.Inverse(), g * Word::B() * g.Inverse()};
}

// A composition of `length` elementary Nielsen moves drawn uniformly.
template <class Rng>
Automorphism RandomAutomorphism(Rng& rng, int length) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(kAllNielsenMoves.size()) - 1);
  Automorphism phi;
  for (int i = 0; i < length; ++i)
    phi = phi.After(MoveAutomorphism(kAllNielsenMoves[pick(rng)]));
  return phi;
}

}  // namespace af2

#endif  // AF2_AUTOMORPHISM_HPP_
