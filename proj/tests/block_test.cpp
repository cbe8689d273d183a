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
#include <set>

#include <gtest/gtest.h>

#include "af2/block.hpp"

namespace af2 {
namespace {

Vertex V(const char* s) { return ParseVertex(s); }
const VertexPair kAB{Vertex::FromPrimitive(Word::A()), Vertex::FromPrimitive(Word::B())};

// All-pairs E-distances inside a block by Floyd-Warshall.
std::map<VertexPair, int> AllDistances(const BlockGraph& g) {
  const std::vector<Vertex> vs = g.Vertices();
  const std::size_t n = vs.size();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && g.HasEEdge(vs[i], vs[j])) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  std::map<VertexPair, int> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[{vs[i], vs[j]}] = d[i][j];
  return out;
}

TEST(BlockTest, Sizes) {
  EXPECT_EQ(BuildExt(kAB, 0).size(), 2u);
  EXPECT_EQ(BuildExt(kAB, 1).size(), 6u);
  EXPECT_EQ(BuildExt(kAB, 2).size(), 22u);
}

TEST(BlockTest, Ext1Annotations) {
  const BlockGraph g = BuildExt(kAB, 1);
  EXPECT_EQ(g.c_edges, (std::set<VertexPair>{SortedPair(V("ab"), V("AB")),
                                             SortedPair(V("Ab"), V("aB"))}));
  EXPECT_EQ(g.e_edges.size(), 9u);
}

TEST(BlockTest, Ext2OrthogonalPairAtA) {
  const BlockGraph g = BuildExt(kAB, 2);
  auto it = g.orth.find(SortedPair(V("abA"), V("Aba")));
  ASSERT_NE(it, g.orth.end());
  EXPECT_EQ(it->second, V("a"));
}

TEST(BlockTest, Errors) {
  try {
    BuildExt({V("a"), V("bab^-1")}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAnEdge);
  }
  try {
    BuildExt(kAB, LevelCap() + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kLevelCapExceeded);
  }
}

TEST(BlockTest, DistanceExamples) {
  EXPECT_EQ(Distance(V("a"), V("b"), 3, 1)->distance, 1);
  const auto d = Distance(V("b"), V("Aba"), 3, 1);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->distance, 2);
  EXPECT_EQ(d->path[1], V("a"));
  EXPECT_EQ(Distance(V("ab"), V("ab"), 3, 1)->distance, 0);
}

TEST(BlockTest, AvoidingPathExamples) {
  auto p = FindPathAvoiding(V("b"), V("ab"), {V("a"), std::nullopt}, 3, 1);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->size(), 2u);
  p = FindPathAvoiding(V("ab"), V("aB"), {V("b"), std::nullopt}, 3, 1);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->size(), 3u);
  EXPECT_EQ((*p)[1], V("a"));
}

TEST(BlockTest, AvoidingPathsInsideBlocks) {
  // Any two vertices of Ext_k outside C(x) are joined inside Ext_k by a path
  // of length <= 2k avoiding C(x).
  for (int k = 1; k <= 2; ++k) {
    const BlockGraph g = BuildExt(kAB, k);
    for (const Vertex& x : {V("a"), V("b"), V("ab")}) {
      const AvoidanceSpec avoid{x, std::nullopt};
      std::vector<Vertex> outside;
      for (const Vertex& v : g.Vertices())
        if (!avoid.Forbids(v)) outside.push_back(v);
      for (std::size_t i = 0; i < outside.size(); ++i)
        for (std::size_t j = i + 1; j < outside.size(); ++j)
          EXPECT_TRUE(FindPathAvoidingInBlock(outside[i], outside[j], avoid, 2 * k, g))
              << k << " " << outside[i].ToString() << " " << outside[j].ToString();
    }
  }
}

TEST(BlockTest, MinBlockLevelExamples) {
  auto r = MinBlockLevel(V("a"), V("b"), 2, 1);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->level, 0);
  EXPECT_EQ(r->witness, kAB);
  r = MinBlockLevel(V("ab"), V("AB"), 2, 1);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->level, 1);
  EXPECT_EQ(r->witness, kAB);
  r = MinBlockLevel(V("abA"), V("Aba"), 2, 1);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->level, 2);
  EXPECT_EQ(r->witness, kAB);
  // The witness is verified by building the block directly.
  const BlockGraph g = BuildExt(r->witness, r->level);
  EXPECT_TRUE(g.Contains(V("abA")));
  EXPECT_TRUE(g.Contains(V("Aba")));
}

TEST(BlockTest, EstimateG) {
  EXPECT_EQ(EstimateG(0, 100), 0);
  // Oracle for k = 1: build Ext_j(e') directly for every edge of Ext_1.
  int expected = 0;
  for (const VertexPair& e : BuildExt(kAB, 1).e_edges) {
    int j = 0;
    while (!BuildExt(e, j).Contains(kAB.first) || !BuildExt(e, j).Contains(kAB.second)) ++j;
    expected = std::max(expected, j);
  }
  EXPECT_EQ(EstimateG(1, 1000), expected);
  EXPECT_LE(EstimateG(1, 1000), EstimateG(2, 1000));
}

TEST(BlockProperties, NestedAndInduced) {
  const BlockGraph g3 = BuildExt(kAB, 3);
  for (int k = 0; k < 3; ++k) {
    BlockGraph lower = BuildExt(kAB, k);
    EXPECT_EQ(g3.Restrict(k), lower) << k;
  }
  int zero = 0;
  for (const auto& [v, b] : g3.birth) zero += b == 0;
  EXPECT_EQ(zero, 2);
  const BlockGraph g2 = BuildExt(kAB, 2);
  // Every E-edge is a basis by the commutator criterion, and every pair
  // missing from the edge set is not.
  const std::vector<Vertex> vs = g2.Vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      EXPECT_EQ(g2.HasEEdge(vs[i], vs[j]), IsBasisByCommutator(vs[i].rep(), vs[j].rep()));
}

TEST(BlockProperties, TriangleClosure) {
  const BlockGraph g = BuildExt(kAB, 2);
  for (const auto& [x, y] : g.e_edges) {
    for (const Vertex& s : Sticks(x, y)) {
      EXPECT_TRUE(IsBasisByCommutator(s.rep(), x.rep()));
      EXPECT_TRUE(IsBasisByCommutator(s.rep(), y.rep()));
    }
  }
  // Every vertex of positive birth level closes a triangle with older ones.
  for (const auto& [v, b] : g.birth) {
    if (b == 0) continue;
    bool closes = false;
    for (const auto& [p, q] : g.e_edges)
      closes = closes || (g.birth.at(p) < b && g.birth.at(q) < b && g.HasEEdge(v, p) &&
                          g.HasEEdge(v, q));
    EXPECT_TRUE(closes) << v.ToString();
  }
}

TEST(BlockProperties, DistancesDoNotShrink) {
  for (int k = 1; k <= 3; ++k) {
    const BlockGraph big = BuildExt(kAB, k);
    const BlockGraph small = BuildExt(kAB, k - 1);
    const auto db = AllDistances(big);
    const auto ds = AllDistances(small);
    for (const auto& [p, d] : ds) EXPECT_EQ(db.at(p), d) << k;
  }
}

TEST(BlockProperties, CPathsStayInside) {
  for (int k = 1; k <= 3; ++k) {
    const BlockGraph g = BuildExt(kAB, k);
    const std::vector<Vertex> vs = g.Vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (!AreConjugate(vs[i], vs[j])) continue;
        for (const Vertex& w : CPath(vs[i], vs[j])) EXPECT_TRUE(g.Contains(w));
      }
    for (const auto& [p, w] : g.orth) EXPECT_TRUE(g.Contains(w));
  }
}

// Independent construction: canonical words with edges from the commutator
// criterion over all pairs.
TEST(BlockProperties, MatchesNaiveConstruction) {
  std::set<Vertex> vs{kAB.first, kAB.second};
  for (int level = 1; level <= 3; ++level) {
    std::vector<Vertex> cur(vs.begin(), vs.end());
    std::set<Vertex> next = vs;
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        const Word& x = cur[i].rep();
        const Word& y = cur[j].rep();
        if (!IsBasisByCommutator(x, y)) continue;
        for (const Word& s : {x * y, x * y.Inverse(), x.Inverse() * y,
                              x.Inverse() * y.Inverse()})
          next.insert(Vertex::FromPrimitive(s));
      }
    vs = next;
    const std::vector<Vertex> built = BuildExt(kAB, level).Vertices();
    EXPECT_EQ(std::set<Vertex>(built.begin(), built.end()), vs) << level;
  }
}

TEST(BlockProperties, WorklistReadingComparison) {
  EXPECT_EQ(BuildExtWorklist(kAB, 2), BuildExt(kAB, 2));
  const BlockGraph def3 = BuildExt(kAB, 3);
  const BlockGraph work3 = BuildExtWorklist(kAB, 3);
  for (const Vertex& v : work3.Vertices()) EXPECT_TRUE(def3.Contains(v));
  EXPECT_LT(work3.size(), def3.size());
  RecordProperty("ext3_definition", static_cast<int>(def3.size()));
  RecordProperty("ext3_worklist", static_cast<int>(work3.size()));
}

}  // namespace
}  // namespace af2
