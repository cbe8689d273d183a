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

// Primitive elements, bases and canonical vertices of the rank-2 free
// factor complex.
//
// Bases are decided by greedy Nielsen reduction of the pair. Primitivity is
// decided by an abelianization prefilter, the primitive normal form as a
// necessary condition, and Whitehead length reduction of the cyclic word to
// a single letter. Both reductions record their moves so results can be
// replayed and turned into explicit automorphisms.

#ifndef AF2_PRIMITIVE_HPP_
#define AF2_PRIMITIVE_HPP_

#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "af2/automorphism.hpp"
#include "af2/errors.hpp"
#include "af2/word.hpp"

namespace af2 {

struct PrimitivityCertificate {
  bool primitive = false;
  // Whitehead moves; replay applies each move and cyclically reduces,
  // starting from the cyclic core of the input.
  std::vector<NielsenMove> moves;
  std::string refutation;  // empty when primitive
};

// Replays a certificate; the result is a single letter iff primitive.
inline Word ReplayCertificate(const Word& u,
                              const std::vector<NielsenMove>& moves) {
  Word w = CyclicReduce(u).core;
  for (NielsenMove m : moves) w = CyclicReduce(MoveAutomorphism(m).Apply(w)).core;
  return w;
}

namespace internal {

// An automorphism taking u to a single letter, with its inverse.
struct LetterReduction {
  Automorphism forward;
  Automorphism inverse;
  Letter letter;
  std::vector<NielsenMove> moves;
};

inline std::optional<LetterReduction> ReduceToLetter(const Word& u) {
  if (u.empty()) return std::nullopt;
  LetterReduction r;
  Word w = u;
  auto apply = [&](const Automorphism& sigma, const Automorphism& sigma_inv) {
    r.forward = Automorphism(sigma.Apply(r.forward.image_a()),
                             sigma.Apply(r.forward.image_b()));
    r.inverse = r.inverse.After(sigma_inv);
    w = sigma.Apply(w);
  };
  auto cyclic = [&] {
    CyclicReduction cr = CyclicReduce(w);
    if (!cr.conjugator.empty()) {
      // w = h^-1 c h; x -> h x h^-1 sends w to c.
      apply(InnerAutomorphism(cr.conjugator),
            InnerAutomorphism(cr.conjugator.Inverse()));
    }
  };
  cyclic();
  while (w.length() > 1) {
    bool reduced = false;
    for (NielsenMove m : kAllNielsenMoves) {
      const Automorphism sigma = MoveAutomorphism(m);
      const Word candidate = CyclicReduce(sigma.Apply(w)).core;
      if (candidate.length() < w.length()) {
        apply(sigma, MoveAutomorphism(InverseMove(m)));
        r.moves.push_back(m);
        cyclic();
        reduced = true;
        break;
      }
    }
    if (!reduced) return std::nullopt;
  }
  r.letter = w.FirstLetter();
  return r;
}

}  // namespace internal

inline PrimitivityCertificate IsPrimitive(const Word& u) {
  PrimitivityCertificate cert;
  if (u.empty()) {
    cert.refutation = "trivial element";
    return cert;
  }
  const auto [ea, eb] = Abelianize(u);
  if (std::gcd(ea, eb) != 1) {
    cert.refutation = "abelianization (" + std::to_string(ea) + "," +
                      std::to_string(eb) + ") is not unimodular";
    return cert;
  }
  const Word core = CyclicReduce(u).core;
  if (core.length() > 1 && !CohenFormOf(core)) {
    cert.refutation = "no primitive normal form";
    return cert;
  }
  auto r = internal::ReduceToLetter(u);
  if (!r) {
    cert.refutation = "length-irreducible";
    return cert;
  }
  cert.primitive = true;
  cert.moves = std::move(r->moves);
  return cert;
}

// ---------------------------------------------------------------------------
// Bases.

struct PairReduction {
  bool is_basis = false;
  // When is_basis: to_standard(u) == a and to_standard(v) == b exactly.
  Automorphism to_standard;
  std::vector<NielsenMove> moves;
};

namespace internal {

struct PairState {
  Word u;
  Word v;
  Automorphism s;  // accumulated moves: (u0, v0) o s == (u, v)
  std::vector<NielsenMove> moves;
};

inline PairState ApplyPairMove(const PairState& st, NielsenMove m) {
  PairState n;
  n.u = st.u;
  n.v = st.v;
  switch (m) {
    case NielsenMove::kAtoAB: n.u = st.u * st.v; break;
    case NielsenMove::kAtoAb_: n.u = st.u * st.v.Inverse(); break;
    case NielsenMove::kAtoBA: n.u = st.v * st.u; break;
    case NielsenMove::kAtoB_A: n.u = st.v.Inverse() * st.u; break;
    case NielsenMove::kBtoBA: n.v = st.v * st.u; break;
    case NielsenMove::kBtoBa_: n.v = st.v * st.u.Inverse(); break;
    case NielsenMove::kBtoAB: n.v = st.u * st.v; break;
    case NielsenMove::kBtoA_B: n.v = st.u.Inverse() * st.v; break;
  }
  n.s = st.s.After(MoveAutomorphism(m));
  n.moves = st.moves;
  n.moves.push_back(m);
  return n;
}

inline std::size_t PairLength(const PairState& st) {
  return st.u.length() + st.v.length();
}

inline std::optional<PairState> StrictStep(const PairState& st) {
  for (NielsenMove m : kAllNielsenMoves) {
    const bool on_u = static_cast<int>(m) < 4;
    const Word& other = on_u ? st.v : st.u;
    if (other.empty()) continue;
    PairState n = ApplyPairMove(st, m);
    if (PairLength(n) < PairLength(st)) return n;
  }
  return std::nullopt;
}

// Searches pairs of equal total length for one admitting a strict step.
inline std::optional<PairState> Escape(const PairState& start) {
  constexpr std::size_t kMaxStates = 200000;
  const std::size_t len = PairLength(start);
  std::set<std::pair<std::string, std::string>> seen;
  std::deque<PairState> queue;
  seen.insert({start.u.ToString(), start.v.ToString()});
  queue.push_back(start);
  while (!queue.empty() && seen.size() < kMaxStates) {
    PairState st = std::move(queue.front());
    queue.pop_front();
    if (auto next = StrictStep(st)) return next;
    for (NielsenMove m : kAllNielsenMoves) {
      PairState n = ApplyPairMove(st, m);
      if (PairLength(n) != len) continue;
      if (seen.insert({n.u.ToString(), n.v.ToString()}).second)
        queue.push_back(std::move(n));
    }
  }
  return std::nullopt;
}

}  // namespace internal

inline PairReduction NielsenReducePair(const Word& u, const Word& v) {
  PairReduction out;
  internal::PairState st{u, v, Automorphism::Identity(), {}};
  while (true) {
    if (st.u.empty() || st.v.empty()) break;
    if (st.u.length() == 1 && st.v.length() == 1) break;
    if (auto next = internal::StrictStep(st)) {
      st = std::move(*next);
      continue;
    }
    auto escaped = internal::Escape(st);
    if (!escaped) break;
    st = std::move(*escaped);
  }
  out.moves = st.moves;
  if (st.u.length() != 1 || st.v.length() != 1) return out;
  const Letter lu = st.u.FirstLetter();
  const Letter lv = st.v.FirstLetter();
  if (lu.base == lv.base) return out;
  // Undo the terminal signed permutation P: a -> lu, b -> lv.
  const Word inv_a = lu.base == Gen::kA ? Word::A(lu.sign) : Word::B(lv.sign);
  const Word inv_b = lu.base == Gen::kB ? Word::A(lu.sign) : Word::B(lv.sign);
  out.is_basis = true;
  out.to_standard = st.s.After(Automorphism(inv_a, inv_b));
  return out;
}

inline bool IsBasis(const Word& u, const Word& v) {
  return NielsenReducePair(u, v).is_basis;
}

// Independent criterion: {u, v} is a basis iff [u, v] is conjugate to
// [a, b] or its inverse.
inline bool IsBasisByCommutator(const Word& u, const Word& v) {
  const Word c = u.Inverse() * v.Inverse() * u * v;
  const Word ab = Word::A(-1) * Word::B(-1) * Word::A() * Word::B();
  return ConjugacyEqual(c, ab) || ConjugacyEqual(c, ab.Inverse());
}

// ---------------------------------------------------------------------------
// Vertices.

// A vertex <x> of AF2: the least of the two generators x, x^-1.
class Vertex {
 public:
  Vertex() : rep_(Word::A()) {}

  // Canonicalizes without a primitivity check; only for words known to be
  // primitive by construction.
  static Vertex FromPrimitive(const Word& w) {
    Vertex v;
    const Word inv = w.Inverse();
    v.rep_ = Compare(w, inv) <= 0 ? w : inv;
    return v;
  }

  const Word& rep() const { return rep_; }
  std::string ToString() const { return rep_.ToString(); }

  friend bool operator==(const Vertex& x, const Vertex& y) {
    return x.rep_ == y.rep_;
  }
  friend bool operator<(const Vertex& x, const Vertex& y) {
    return Compare(x.rep_, y.rep_) < 0;
  }
  friend bool operator!=(const Vertex& x, const Vertex& y) { return !(x == y); }
  friend bool operator>(const Vertex& x, const Vertex& y) { return y < x; }

 private:
  Word rep_;
};

struct VertexHash {
  std::size_t operator()(const Vertex& v) const { return WordHash{}(v.rep()); }
};

inline Vertex CanonicalVertex(const Word& u) {
  const PrimitivityCertificate cert = IsPrimitive(u);
  if (!cert.primitive)
    throw Error(ErrorKind::kNotPrimitive, u.ToString() + ": " + cert.refutation);
  return Vertex::FromPrimitive(u);
}

inline Vertex ParseVertex(std::string_view text) {
  return CanonicalVertex(Word::Parse(text));
}

inline std::pair<Vertex, Vertex> SortedPair(const Vertex& x, const Vertex& y) {
  return x < y ? std::make_pair(x, y) : std::make_pair(y, x);
}

// Returns v with {u, v} a basis: the inverse of the letter reduction applied
// to the other letter, then the least candidate among u^i v^{+-1} u^j,
// |i|, |j| <= 2.
inline Word CompleteToBasis(const Word& u) {
  if (!IsPrimitive(u).primitive)
    throw Error(ErrorKind::kNotPrimitive, u.ToString());
  auto r = internal::ReduceToLetter(u);
  if (!r) throw Error(ErrorKind::kNotPrimitive, u.ToString());
  const Word other = Word::Generator(Other(r->letter.base));
  const Word v0 = r->inverse.Apply(other);
  Word best = v0;
  for (int i = -2; i <= 2; ++i) {
    for (int j = -2; j <= 2; ++j) {
      for (int d : {1, -1}) {
        Word c = Power(u, i) * Power(v0, d) * Power(u, j);
        if (Compare(c, best) < 0) best = std::move(c);
      }
    }
  }
  return best;
}

}  // namespace af2

#endif  // AF2_PRIMITIVE_HPP_
