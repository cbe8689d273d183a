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

#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "af2/conjugacy.hpp"

namespace af2 {
namespace {

Vertex V(const char* s) { return ParseVertex(s); }

// <b^g>.
Vertex BG(const char* g) {
  return CanonicalVertex(Conjugate(Word::B(), Word::Parse(g)));
}

bool Adjacent(const Vertex& u, const Vertex& v) {
  return IsBasisByCommutator(u.rep(), v.rep());
}

// Breadth-first C-distance over the definitional neighbour enumeration.
std::optional<int> BfsCDistance(const Vertex& u, const Vertex& v, int window,
                                int bound) {
  std::map<Vertex, int> dist{{u, 0}};
  std::vector<Vertex> frontier{u};
  for (int d = 1; d <= bound; ++d) {
    std::vector<Vertex> next;
    for (const Vertex& x : frontier)
      for (const Vertex& y : CNeighbors(x, window))
        if (dist.emplace(y, d).second) next.push_back(y);
    if (dist.count(v)) return dist[v];
    frontier = std::move(next);
  }
  return dist.count(v) ? std::optional<int>(dist[v]) : std::nullopt;
}

TEST(ConjugacyTest, IsCEdgeExamples) {
  EXPECT_TRUE(IsCEdge(V("b"), V("Aba")));
  EXPECT_FALSE(IsCEdge(V("b"), V("AAbaa")));
  EXPECT_FALSE(IsCEdge(V("a"), V("b")));
  EXPECT_TRUE(CNeighbors(V("b"), 1).count(V("Aba")));
}

TEST(ConjugacyTest, CDistanceExamples) {
  EXPECT_EQ(CDistance(V("b"), V("b")), 0);
  EXPECT_EQ(CDistance(V("b"), BG("abA")), 2);
  EXPECT_EQ(CDistance(V("b"), BG("bbba")), 1);
  EXPECT_EQ(BfsCDistance(V("b"), BG("bbba"), 3, 2), 1);
  EXPECT_EQ(BfsCDistance(V("b"), BG("abA"), 2, 3), 2);
  EXPECT_FALSE(CDistance(V("a"), V("b")).has_value());
}

TEST(ConjugacyTest, CPathExamples) {
  const std::vector<Vertex> p = CPath(V("b"), BG("abA"));
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0], V("b"));
  EXPECT_EQ(p[1], BG("A"));
  EXPECT_EQ(p[2], BG("abA"));
  EXPECT_EQ(CPath(V("ab"), V("ab")), std::vector<Vertex>{V("ab")});
  try {
    CPath(V("a"), V("b"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotConjugate);
  }
}

TEST(ConjugacyTest, LinePointsExamples) {
  // With x^g = g^-1 x g the line through b and b^a is {<b^j a>}.
  EXPECT_EQ(LinePoints(V("b"), BG("a"), 1), (VertexSet{V("Ba"), V("a"), V("ba")}));
  // The family {<a b^k>} is the line through b and b^{a^-1} = a b a^-1.
  EXPECT_EQ(LinePoints(V("b"), BG("A"), 1), (VertexSet{V("aB"), V("a"), V("ab")}));
  const VertexSet pts = LinePoints(V("b"), BG("a"), 2);
  EXPECT_EQ(pts.size(), 5u);
  for (const Vertex& p : pts) {
    EXPECT_TRUE(Adjacent(p, V("b")));
    EXPECT_TRUE(Adjacent(p, BG("a")));
  }
  try {
    LinePoints(V("b"), BG("aa"), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotACEdge);
  }
}

TEST(ConjugacyTest, DetectCEdgeDefinablyExamples) {
  EXPECT_TRUE(DetectCEdgeDefinably(V("b"), BG("a"), 3));
  EXPECT_LE(CommonNeighbourCount(V("b"), BG("aa"), 8), 4u);
  EXPECT_FALSE(DetectCEdgeDefinably(V("b"), BG("aa"), 8));
  EXPECT_FALSE(DetectCEdgeDefinably(V("a"), V("b"), 8));
}

TEST(ConjugacyTest, ClassifyPairExamples) {
  EXPECT_TRUE(ClassifyPair(BG("ab"), BG("abb")).parallel);
  PairClass c = ClassifyPair(BG("a"), BG("A"));
  ASSERT_FALSE(c.parallel);
  EXPECT_EQ(*c.witness, V("a"));
  for (const Vertex& w : {BG("a"), BG("A"), V("b")}) EXPECT_TRUE(Adjacent(*c.witness, w));
  c = ClassifyPair(BG("ab"), BG("A"));
  ASSERT_FALSE(c.parallel);
  for (const Vertex& w : {BG("ab"), BG("A"), V("b")}) EXPECT_TRUE(Adjacent(*c.witness, w));
  try {
    ClassifyPair(V("b"), BG("a"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotDistanceTwo);
  }
}

TEST(ConjugacyTest, LineNeighboursExamples) {
  const Line l = MakeLine(V("b"), BG("a"));
  const std::vector<Line> n = LineNeighbours(l);
  EXPECT_EQ(n.size(), 4u);
  auto has = [&](const Line& m) { return std::find(n.begin(), n.end(), m) != n.end(); };
  EXPECT_TRUE(has(MakeLine(V("b"), BG("ab"))));
  EXPECT_TRUE(has(MakeLine(V("b"), BG("aB"))));
  EXPECT_FALSE(has(MakeLine(V("b"), BG("abb"))));
}

TEST(ConjugacyTest, LineNeighbourIffCriterion) {
  // Oracle: neighbour lines are in bijective E-adjacency. Points are compared
  // on a window and only interior points are required to have a partner.
  const int w = 4;
  const Line base = MakeLine(V("b"), BG("a"));
  const std::vector<Line> n = LineNeighbours(base);
  const std::vector<Vertex> p1 = [&] {
    std::vector<Vertex> out;
    for (int j = -w; j <= w; ++j)
      out.push_back(CanonicalVertex(Word::B(j) * Word::A()));
    return out;
  }();
  for (int k = -6; k <= 6; ++k) {
    if (k == 0) continue;
    const Vertex other = BG(("ab^" + std::to_string(k)).c_str());
    const Line l = MakeLine(V("b"), other);
    std::vector<Vertex> p2;
    for (int j = -2 * w; j <= 2 * w; ++j)
      p2.push_back(CanonicalVertex(Word::B(j) * Word::A() * Word::B(k)));
    bool bijective = true;
    for (std::size_t i = 1; i + 1 < p1.size(); ++i) {
      int partners = 0;
      for (const Vertex& q : p2) partners += Adjacent(p1[i], q);
      bijective = bijective && partners == 1;
    }
    const bool listed = std::find(n.begin(), n.end(), l) != n.end();
    EXPECT_EQ(bijective, k == 1 || k == -1) << k;
    EXPECT_EQ(listed, k == 1 || k == -1) << k;
  }
}

TEST(ConjugacyTest, StraightPaths) {
  EXPECT_TRUE(IsStraight({BG("ab"), V("b"), BG("abb")}));
  EXPECT_FALSE(IsStraight({BG("a"), V("b"), BG("A")}));
  EXPECT_TRUE(IsStraight({V("b"), BG("a")}));
  EXPECT_TRUE(IsStraight({V("b")}));
  EXPECT_THROW(IsStraight({V("b"), BG("aa")}), Error);
}

TEST(ConjugacyTest, NeighbourClosure) {
  const ClosureSet c1 = NeighbourClosure(V("b"), BG("a"), 1, 2);
  EXPECT_TRUE(c1.members.count(BG("ab")));
  EXPECT_TRUE(c1.members.count(BG("aB")));
  const ClosureSet c3 = NeighbourClosure(V("b"), BG("a"), 3, 2);
  for (int k = -3; k <= 3; ++k)
    EXPECT_TRUE(c3.members.count(BG(("ab^" + std::to_string(k)).c_str()))) << k;
  for (const Vertex& m : c3.members) {
    EXPECT_TRUE(AreConjugate(m, V("b")));
    EXPECT_TRUE(ClosureContains(c3.seed, m)) << m.ToString();
  }
  EXPECT_FALSE(ClosureContains(c3.seed, BG("A")));
  // Monotone in depth and window.
  const ClosureSet c4 = NeighbourClosure(V("b"), BG("a"), 4, 3);
  for (const Vertex& m : c3.members) EXPECT_TRUE(c4.members.count(m));
}

TEST(ConjugacyTest, FamiliesOrthogonal) {
  const ClosureSet c1 = NeighbourClosure(V("b"), BG("a"), 2, 2);
  const ClosureSet c2 = NeighbourClosure(V("b"), BG("A"), 2, 2);
  EXPECT_TRUE(FamiliesOrthogonal(c1, c2));
  EXPECT_FALSE(FamiliesOrthogonal(c1, c1));
  const ClosureSet far = NeighbourClosure(V("a"), V("bab^-1"), 1, 1);
  EXPECT_FALSE(FamiliesOrthogonal(c1, far));
}

std::vector<Word> RandomConjugators(std::mt19937_64& rng, int n, int max_a) {
  std::uniform_int_distribution<int> alen(1, max_a);
  std::uniform_int_distribution<int> bexp(-2, 2);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Word> out;
  for (int t = 0; t < n; ++t) {
    Word g;
    const int k = alen(rng);
    for (int i = 0; i < k; ++i) {
      g *= Word::A(sign(rng) ? 1 : -1);
      g *= Word::B(bexp(rng));
    }
    out.push_back(g);
  }
  return out;
}

TEST(ConjugacyProperties, TreeAndDistance) {
  std::mt19937_64 rng(31);
  for (const Word& g : RandomConjugators(rng, 60, 3)) {
    const Vertex v = CanonicalVertex(Conjugate(Word::B(), g));
    const int expect = TileProfileOf(g).a_length;
    EXPECT_EQ(CDistance(V("b"), v), expect) << g.ToString();
    const std::vector<Vertex> p = CPath(V("b"), v);
    EXPECT_EQ(static_cast<int>(p.size()) - 1, expect);
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      EXPECT_TRUE(CNeighbors(p[i], 3).count(p[i + 1]) ||
                  CNeighbors(p[i + 1], 3).count(p[i]));
    if (expect <= 2) EXPECT_EQ(BfsCDistance(V("b"), v, 6, expect), expect);
  }
}

TEST(ConjugacyProperties, TransportedVerticesAgree) {
  // Distances are invariant under automorphisms.
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> pick(0, 7);
  for (const Word& g : RandomConjugators(rng, 100, 4)) {
    Automorphism phi;
    for (int i = 0; i < 4; ++i)
      phi = phi.After(MoveAutomorphism(static_cast<NielsenMove>(pick(rng))));
    const Vertex u = CanonicalVertex(phi.image_b());
    const Vertex v = CanonicalVertex(phi.Apply(Conjugate(Word::B(), g)));
    EXPECT_EQ(CDistance(u, v), TileProfileOf(g).a_length);
    EXPECT_EQ(CDistance(v, u), TileProfileOf(g).a_length);
  }
}

TEST(ConjugacyProperties, ExactlyOneOfAndTwoClasses) {
  // C_1(b) splits into the two parallel classes {b^{a b^m}}, {b^{a^-1 b^m}}.
  std::vector<Vertex> ring;
  for (int m = -3; m <= 3; ++m) {
    ring.push_back(CanonicalVertex(Conjugate(Word::B(), Word::A() * Word::B(m))));
    ring.push_back(CanonicalVertex(Conjugate(Word::B(), Word::A(-1) * Word::B(m))));
  }
  for (std::size_t i = 0; i < ring.size(); ++i) {
    for (std::size_t j = i + 1; j < ring.size(); ++j) {
      const PairClass c = ClassifyPair(ring[i], ring[j]);
      EXPECT_EQ(c.parallel, (i % 2) == (j % 2));
      EXPECT_EQ(c.witness.has_value(), !c.parallel);
      if (c.witness) {
        EXPECT_TRUE(Adjacent(*c.witness, ring[i]));
        EXPECT_TRUE(Adjacent(*c.witness, ring[j]));
        EXPECT_TRUE(Adjacent(*c.witness, V("b")));
      }
    }
  }
}

TEST(ConjugacyProperties, TripleIntersectionSmall) {
  const Vertex x = V("b");
  const Vertex y = BG("a");
  const Vertex z = BG("ab");
  const VertexSet nx = Neighbors(x, 3);
  const VertexSet ny = Neighbors(y, 3);
  const VertexSet nz = Neighbors(z, 3);
  int common = 0;
  for (const Vertex& w : nx) common += ny.count(w) && nz.count(w);
  EXPECT_LE(common, 1);
}

}  // namespace
}  // namespace af2
