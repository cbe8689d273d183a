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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "af2/primitive.hpp"

namespace af2 {
namespace {

Word W(const char* s) { return Word::Parse(s); }

Automorphism RandomAut(std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> pick(0, 7);
  Automorphism phi;
  for (int i = 0; i < len; ++i)
    phi = phi.After(MoveAutomorphism(static_cast<NielsenMove>(pick(rng))));
  return phi;
}

Word RandomWord(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> pick(0, 3);
  const Letter all[] = {kLetterA, kLetterAInv, kLetterB, kLetterBInv};
  std::vector<Letter> raw;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) raw.push_back(all[pick(rng)]);
  return Reduce(raw);
}

TEST(PrimitiveTest, AbelianizeExamples) {
  EXPECT_EQ(Abelianize(W("abAb")), std::make_pair(0L, 2L));
  EXPECT_EQ(Abelianize(Word()), std::make_pair(0L, 0L));
  EXPECT_EQ(Abelianize(W("aaB")), std::make_pair(2L, -1L));
}

TEST(PrimitiveTest, IsPrimitiveExamples) {
  EXPECT_TRUE(IsPrimitive(W("a")).primitive);
  EXPECT_FALSE(IsPrimitive(W("abAB")).primitive);
  EXPECT_FALSE(IsPrimitive(W("aabb")).primitive);
  const PrimitivityCertificate c = IsPrimitive(W("ababb"));
  ASSERT_TRUE(c.primitive);
  EXPECT_EQ(ReplayCertificate(W("ababb"), c.moves).length(), 1u);
  // abab^2 = u^2 v with u = ab, v = b.
  const Word u = W("ab");
  EXPECT_EQ(u * u * W("b"), W("ababb"));
  EXPECT_TRUE(IsBasisByCommutator(u, W("b")));
}

TEST(PrimitiveTest, CohenFormExamples) {
  auto f = CohenFormOf(W("ababb"));
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->epsilon, 1);
  EXPECT_EQ(f->k, 1);
  EXPECT_FALSE(f->swapped);
  EXPECT_FALSE(CohenFormOf(W("aabb")).has_value());
  EXPECT_FALSE(IsPrimitive(W("aabb")).primitive);
  f = CohenFormOf(W("aB"));
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->epsilon, -1);
  EXPECT_TRUE(f->swapped);
}

TEST(PrimitiveTest, IsBasisExamples) {
  EXPECT_TRUE(IsBasis(W("a"), W("b")));
  EXPECT_TRUE(IsBasis(W("b"), W("bbaB")));
  EXPECT_FALSE(IsBasis(W("a"), W("baB")));
  EXPECT_FALSE(IsBasisByCommutator(W("a"), W("baB")));
  EXPECT_FALSE(IsBasis(W("a"), W("a")));
  EXPECT_FALSE(IsBasis(W("a"), Word()));
}

TEST(PrimitiveTest, ToStandardIsExact) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const Automorphism phi = RandomAut(rng, 1 + t % 9);
    const Word u = phi.image_a();
    const Word v = phi.image_b();
    const PairReduction r = NielsenReducePair(u, v);
    ASSERT_TRUE(r.is_basis) << u.ToString() << " " << v.ToString();
    EXPECT_EQ(r.to_standard.Apply(u), W("a"));
    EXPECT_EQ(r.to_standard.Apply(v), W("b"));
  }
}

TEST(PrimitiveTest, CompleteToBasisExamples) {
  EXPECT_EQ(CompleteToBasis(W("a")), W("b"));
  EXPECT_EQ(CompleteToBasis(W("Aba")), W("a"));
  const Word c = CompleteToBasis(W("ababb"));
  EXPECT_TRUE(IsBasis(W("ababb"), c));
  EXPECT_TRUE(IsBasisByCommutator(W("ababb"), c));
  EXPECT_THROW(CompleteToBasis(W("aabb")), Error);
}

TEST(PrimitiveTest, CanonicalVertexExamples) {
  EXPECT_EQ(CanonicalVertex(W("A")).ToString(), "a");
  EXPECT_EQ(CanonicalVertex(W("BA")).ToString(), "ab");
  EXPECT_EQ(CanonicalVertex(W("abA")).ToString(), "abA");
  try {
    CanonicalVertex(W("abAB"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotPrimitive);
  }
}

TEST(PrimitiveProperties, BasisSymmetries) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const Word u = RandomWord(rng, 8);
    const Word v = RandomWord(rng, 8);
    const bool b = IsBasis(u, v);
    EXPECT_EQ(b, IsBasis(v, u));
    EXPECT_EQ(b, IsBasis(u.Inverse(), v));
  }
}

TEST(PrimitiveProperties, NielsenAgreesWithCommutatorOracle) {
  std::mt19937_64 rng(5);
  int positives = 0;
  for (int t = 0; t < 1000; ++t) {
    Word u;
    Word v;
    if (t % 2 == 0) {
      u = RandomWord(rng, 12);
      v = RandomWord(rng, 12);
    } else {
      const Automorphism phi = RandomAut(rng, 1 + t % 7);
      u = phi.image_a();
      v = phi.image_b();
      if (u.length() > 12 || v.length() > 12) continue;
    }
    const bool nielsen = IsBasis(u, v);
    positives += nielsen;
    EXPECT_EQ(nielsen, IsBasisByCommutator(u, v))
        << u.ToString() << " " << v.ToString();
  }
  EXPECT_GT(positives, 100);
}

TEST(PrimitiveProperties, PrimitivesHaveCohenForm) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 500; ++t) {
    const Word u = RandomAut(rng, 1 + t % 10).image_a();
    ASSERT_TRUE(IsPrimitive(u).primitive) << u.ToString();
    const Word core = CyclicReduce(u).core;
    if (core.length() > 1) EXPECT_TRUE(CohenFormOf(core).has_value()) << u.ToString();
    const Word c = CompleteToBasis(u);
    EXPECT_TRUE(IsBasisByCommutator(u, c)) << u.ToString();
    EXPECT_EQ(CanonicalVertex(u), CanonicalVertex(u.Inverse()));
    const Word g = RandomWord(rng, 5);
    EXPECT_TRUE(IsPrimitive(Conjugate(u, g)).primitive);
  }
}

// The normal form is necessary but not sufficient ((a^-2 b)^2 has one).
// Positive verdicts are checked through the commutator criterion on the
// produced completion; negative verdicts against a bounded complement search.
TEST(PrimitiveProperties, CohenFormWordsAgreeWithOracles) {
  std::mt19937_64 rng(13);
  int positive = 0;
  int negative = 0;
  std::vector<Word> short_words{Word()};
  for (std::size_t i = 0; i < short_words.size(); ++i) {
    if (short_words[i].length() == 6) continue;
    for (Letter l : {kLetterA, kLetterAInv, kLetterB, kLetterBInv}) {
      Word w = short_words[i];
      w.PushBack(l.base, l.sign);
      if (w.length() == short_words[i].length() + 1) short_words.push_back(w);
    }
  }
  for (int t = 0; t < 20000 && positive + negative < 300; ++t) {
    const Word w = CyclicReduce(RandomWord(rng, 10)).core;
    if (w.length() < 2 || !CohenFormOf(w)) continue;
    if (IsPrimitive(w).primitive) {
      ++positive;
      EXPECT_TRUE(IsBasisByCommutator(w, CompleteToBasis(w))) << w.ToString();
    } else {
      ++negative;
      for (const Word& v : short_words)
        ASSERT_FALSE(IsBasisByCommutator(w, v)) << w.ToString() << " " << v.ToString();
    }
  }
  EXPECT_GT(positive, 50);
}

TEST(PrimitiveProperties, ConjugationInvariance) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    const Word u = RandomWord(rng, 10);
    const Word g = RandomWord(rng, 6);
    EXPECT_EQ(IsPrimitive(u).primitive, IsPrimitive(Conjugate(u, g)).primitive);
  }
}

}  // namespace
}  // namespace af2
