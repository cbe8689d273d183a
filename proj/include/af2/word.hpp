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

// Freely reduced words in the free group F2 = <a, b>.
//
// Words are stored run-length encoded by syllables (generator, nonzero
// exponent) with adjacent syllables on different generators; that encoding
// is canonical, so equality of Word values is equality of group elements.
// Textual form: `a`, `A` (= a^-1), `b`, `B` (= b^-1); input also accepts
// `a^-2` style exponents, and `1` or the empty string for the identity.

#ifndef AF2_WORD_HPP_
#define AF2_WORD_HPP_

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "af2/errors.hpp"

namespace af2 {

enum class Gen : std::uint8_t { kA = 0, kB = 1 };

inline Gen Other(Gen g) { return g == Gen::kA ? Gen::kB : Gen::kA; }

struct Letter {
  Gen base = Gen::kA;
  int sign = 1;  // +1 or -1

  Letter Inverse() const { return Letter{base, -sign}; }
  // Position in the fixed letter order a < A < b < B.
  int Rank() const { return 2 * static_cast<int>(base) + (sign > 0 ? 0 : 1); }
  char Char() const {
    if (base == Gen::kA) return sign > 0 ? 'a' : 'A';
    return sign > 0 ? 'b' : 'B';
  }
  friend bool operator==(const Letter&, const Letter&) = default;
};

inline constexpr Letter kLetterA{Gen::kA, 1};
inline constexpr Letter kLetterAInv{Gen::kA, -1};
inline constexpr Letter kLetterB{Gen::kB, 1};
inline constexpr Letter kLetterBInv{Gen::kB, -1};

struct Syllable {
  Gen base = Gen::kA;
  int exp = 0;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

class Word {
 public:
  Word() = default;

  static Word FromLetters(std::span<const Letter> letters) {
    Word w;
    for (const Letter& l : letters) w.PushBack(l.base, l.sign);
    return w;
  }

  static Word Generator(Gen g, int exp = 1) {
    Word w;
    w.PushBack(g, exp);
    return w;
  }
  static Word A(int exp = 1) { return Generator(Gen::kA, exp); }
  static Word B(int exp = 1) { return Generator(Gen::kB, exp); }

  static Word Parse(std::string_view text);

  const std::vector<Syllable>& syllables() const { return syl_; }
  std::size_t length() const { return len_; }
  bool empty() const { return syl_.empty(); }

  std::vector<Letter> Letters() const {
    std::vector<Letter> out;
    out.reserve(len_);
    for (const Syllable& s : syl_) {
      const int sign = s.exp > 0 ? 1 : -1;
      for (int i = 0; i < std::abs(s.exp); ++i) out.push_back({s.base, sign});
    }
    return out;
  }

  Letter FirstLetter() const {
    return {syl_.front().base, syl_.front().exp > 0 ? 1 : -1};
  }
  Letter LastLetter() const {
    return {syl_.back().base, syl_.back().exp > 0 ? 1 : -1};
  }

  Word Inverse() const {
    Word w;
    w.syl_.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
      w.syl_.push_back({it->base, -it->exp});
    w.len_ = len_;
    return w;
  }

  std::string ToString() const {
    if (syl_.empty()) return "1";
    std::string out;
    out.reserve(len_);
    for (const Letter& l : Letters()) out.push_back(l.Char());
    return out;
  }

  // Appends base^exp, cancelling and merging against the tail.
  void PushBack(Gen base, int exp) {
    if (exp == 0) return;
    if (!syl_.empty() && syl_.back().base == base) {
      Syllable& last = syl_.back();
      len_ -= static_cast<std::size_t>(std::abs(last.exp));
      last.exp += exp;
      if (last.exp == 0) {
        syl_.pop_back();
      } else {
        len_ += static_cast<std::size_t>(std::abs(last.exp));
      }
      return;
    }
    syl_.push_back({base, exp});
    len_ += static_cast<std::size_t>(std::abs(exp));
  }

  friend Word operator*(const Word& u, const Word& v) {
    Word w = u;
    for (const Syllable& s : v.syl_) w.PushBack(s.base, s.exp);
    return w;
  }
  Word& operator*=(const Word& v) {
    for (const Syllable& s : v.syl_) PushBack(s.base, s.exp);
    return *this;
  }

  friend bool operator==(const Word& u, const Word& v) {
    return u.syl_ == v.syl_;
  }

 private:
  std::vector<Syllable> syl_;
  std::size_t len_ = 0;
};

// Total order: shorter words first, equal lengths compared letterwise with
// a < A < b < B.
inline int Compare(const Word& u, const Word& v) {
  if (u.length() != v.length()) return u.length() < v.length() ? -1 : 1;
  const auto lu = u.Letters();
  const auto lv = v.Letters();
  for (std::size_t i = 0; i < lu.size(); ++i) {
    const int ru = lu[i].Rank();
    const int rv = lv[i].Rank();
    if (ru != rv) return ru < rv ? -1 : 1;
  }
  return 0;
}

struct WordLess {
  bool operator()(const Word& u, const Word& v) const {
    return Compare(u, v) < 0;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const Syllable& s : w.syllables()) {
      const std::size_t x =
          (static_cast<std::size_t>(s.base) << 32) ^
          static_cast<std::size_t>(static_cast<std::uint32_t>(s.exp));
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline Word Word::Parse(std::string_view text) {
  Word w;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::kParse,
                "bad word '" + std::string(text) + "': " + why);
  };
  const auto first = text.find_first_not_of(" \t\n");
  if (first == std::string_view::npos) return w;
  if (text.substr(first, text.find_last_not_of(" \t\n") - first + 1) == "1")
    return w;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Letter l;
    switch (c) {
      case 'a': l = kLetterA; break;
      case 'A': l = kLetterAInv; break;
      case 'b': l = kLetterB; break;
      case 'B': l = kLetterBInv; break;
      default: fail(std::string("unexpected character '") + c + "'");
    }
    ++i;
    int exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        fail("exponent expected after '^'");
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1'000'000) fail("exponent too large");
        ++i;
      }
      exp = static_cast<int>(neg ? -value : value);
    }
    w.PushBack(l.base, l.sign * exp);
  }
  return w;
}

inline Word Reduce(std::span<const Letter> raw) { return Word::FromLetters(raw); }
inline Word Multiply(const Word& u, const Word& v) { return u * v; }
inline Word Invert(const Word& u) { return u.Inverse(); }

inline Word Power(const Word& u, int n) {
  Word base = n >= 0 ? u : u.Inverse();
  Word out;
  for (int i = 0; i < std::abs(n); ++i) out *= base;
  return out;
}

// u^g := g^-1 u g.
inline Word Conjugate(const Word& u, const Word& g) {
  return g.Inverse() * u * g;
}

inline std::pair<long, long> Abelianize(const Word& u) {
  long ea = 0;
  long eb = 0;
  for (const Syllable& s : u.syllables()) (s.base == Gen::kA ? ea : eb) += s.exp;
  return {ea, eb};
}

inline long CountGen(const Word& u, Gen g) {
  long n = 0;
  for (const Syllable& s : u.syllables())
    if (s.base == g) n += std::abs(s.exp);
  return n;
}

// ---------------------------------------------------------------------------
// Cyclic words.

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // input == Conjugate(core, conjugator)
};

inline CyclicReduction CyclicReduce(const Word& u) {
  std::vector<Letter> l = u.Letters();
  std::size_t lo = 0;
  std::size_t hi = l.size();
  while (hi - lo >= 2 && l[lo] == l[hi - 1].Inverse()) {
    ++lo;
    --hi;
  }
  const std::span<const Letter> all(l);
  Word prefix = Word::FromLetters(all.subspan(0, lo));
  Word core = Word::FromLetters(all.subspan(lo, hi - lo));
  return {std::move(core), prefix.Inverse()};
}

inline bool IsCyclicallyReduced(const Word& u) {
  return u.length() < 2 || !(u.FirstLetter() == u.LastLetter().Inverse());
}

// A cyclically reduced word taken up to rotation.
class CyclicWord {
 public:
  CyclicWord() = default;

  // `w` must be cyclically reduced.
  explicit CyclicWord(const Word& w) : letters_(w.Letters()) {
    if (!IsCyclicallyReduced(w))
      throw Error(ErrorKind::kUndefined,
                  "cyclic word from non-cyclically-reduced " + w.ToString());
  }

  static CyclicWord CoreOf(const Word& w) {
    return CyclicWord(CyclicReduce(w).core);
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  Word Rotation(std::size_t start) const {
    std::vector<Letter> r;
    r.reserve(letters_.size());
    for (std::size_t i = 0; i < letters_.size(); ++i)
      r.push_back(letters_[(start + i) % letters_.size()]);
    return Word::FromLetters(r);
  }
  Word AsWord() const { return Word::FromLetters(letters_); }

  CyclicWord Inverse() const { return CyclicWord(AsWord().Inverse()); }

  // Least rotation in the Word order.
  Word MinRotation() const {
    if (letters_.empty()) return Word();
    Word best = Rotation(0);
    for (std::size_t i = 1; i < letters_.size(); ++i) {
      Word r = Rotation(i);
      if (Compare(r, best) < 0) best = std::move(r);
    }
    return best;
  }

  // Syllables read cyclically, starting at a syllable boundary so that the
  // first and last syllables use different generators. A single-generator
  // power yields one syllable.
  std::vector<Syllable> CyclicSyllables() const {
    const std::size_t n = letters_.size();
    if (n == 0) return {};
    std::size_t start = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (letters_[i].base != letters_[(i + n - 1) % n].base) {
        start = i;
        break;
      }
    }
    if (start == n) return Word::FromLetters(letters_).syllables();
    return Rotation(start).syllables();
  }

  friend bool operator==(const CyclicWord& u, const CyclicWord& v) {
    if (u.letters_.size() != v.letters_.size()) return false;
    const std::size_t n = u.letters_.size();
    if (n == 0) return true;
    for (std::size_t s = 0; s < n; ++s) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        ok = u.letters_[(s + i) % n] == v.letters_[i];
      if (ok) return true;
    }
    return false;
  }

 private:
  std::vector<Letter> letters_;
};

inline bool ConjugacyEqual(const Word& u, const Word& v) {
  return CyclicWord::CoreOf(u) == CyclicWord::CoreOf(v);
}

// ---------------------------------------------------------------------------
// a-length and b-tiles.

struct TileProfile {
  std::vector<int> tiles;  // b-exponents between consecutive a-letters
  int a_length = 0;
  friend bool operator==(const TileProfile&, const TileProfile&) = default;
};

inline TileProfile TileProfileOf(const Word& u) {
  TileProfile p;
  int current = 0;
  for (const Syllable& s : u.syllables()) {
    if (s.base == Gen::kB) {
      current += s.exp;
      continue;
    }
    for (int i = 0; i < std::abs(s.exp); ++i) {
      p.tiles.push_back(current);
      current = 0;
      ++p.a_length;
    }
  }
  p.tiles.push_back(current);
  return p;
}

// Primitive normal form: some rotation of w or w^-1 reads
// a^{m_1} b^{n_1} ... a^{m_s} b^{n_s} with one exponent family constant
// equal to epsilon and the other taking values in {k, k+1}, k > 0.
struct CohenForm {
  int epsilon = 1;
  int k = 0;
  bool swapped = false;   // true when the b-exponents are the constant ones
  bool inverted = false;  // true when the match is on w^-1
  std::size_t rotation = 0;  // letter offset of the matching rotation
  Word form;                 // the matching rotation itself
  int min_b_exponent = 0;    // least |b-exponent| in `form`
};

namespace internal {

inline std::optional<CohenForm> MatchCohen(const Word& w, bool inverted) {
  const CyclicWord cw(w);
  const std::vector<Syllable> syl = cw.CyclicSyllables();
  if (syl.size() < 2 || syl.size() % 2 != 0) return std::nullopt;
  std::vector<int> a_exp;
  std::vector<int> b_exp;
  for (const Syllable& s : syl) (s.base == Gen::kA ? a_exp : b_exp).push_back(s.exp);
  auto constant_unit = [](const std::vector<int>& e) -> std::optional<int> {
    if (e.front() != 1 && e.front() != -1) return std::nullopt;
    for (int x : e)
      if (x != e.front()) return std::nullopt;
    return e.front();
  };
  auto two_values = [](const std::vector<int>& e) -> std::optional<int> {
    const int lo = *std::min_element(e.begin(), e.end());
    const int hi = *std::max_element(e.begin(), e.end());
    if (lo <= 0 || hi > lo + 1) return std::nullopt;
    return lo;
  };
  for (bool swapped : {false, true}) {
    const auto& unit = swapped ? b_exp : a_exp;
    const auto& other = swapped ? a_exp : b_exp;
    auto eps = constant_unit(unit);
    if (!eps) continue;
    auto k = two_values(other);
    if (!k) continue;
    // Locate the rotation starting at an a-syllable.
    const std::vector<Letter>& l = cw.letters();
    const std::size_t n = l.size();
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (l[i].base == Gen::kA && l[(i + n - 1) % n].base == Gen::kB) {
        start = i;
        break;
      }
    }
    CohenForm f;
    f.epsilon = *eps;
    f.k = *k;
    f.swapped = swapped;
    f.inverted = inverted;
    f.rotation = start;
    f.form = cw.Rotation(start);
    int min_b = 0;
    for (int x : b_exp)
      min_b = min_b == 0 ? std::abs(x) : std::min(min_b, std::abs(x));
    f.min_b_exponent = min_b;
    return f;
  }
  return std::nullopt;
}

}  // namespace internal

// `u` must be cyclically reduced and not a single letter.
inline std::optional<CohenForm> CohenFormOf(const Word& u) {
  if (u.length() < 2 || !IsCyclicallyReduced(u)) return std::nullopt;
  if (auto f = internal::MatchCohen(u, false)) return f;
  return internal::MatchCohen(u.Inverse(), true);
}

// Tile length of a primitive cyclic word: the least |b-exponent| of its
// primitive normal form. a^{+-1} has tile length 0; b^{+-1} is excluded.
inline int TileB(const CyclicWord& u) {
  const Word w = u.AsWord();
  if (w.length() == 1) {
    if (w.FirstLetter().base == Gen::kA) return 0;
    throw Error(ErrorKind::kUndefined, "tile length of b^{+-1}");
  }
  auto f = CohenFormOf(w);
  if (!f)
    throw Error(ErrorKind::kNotPrimitive,
                w.ToString() + " has no primitive normal form");
  return f->min_b_exponent;
}

}  // namespace af2

#endif  // AF2_WORD_HPP_
