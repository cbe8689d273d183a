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


// The Farey graph with its P_ab labelling, the projection of the complex
// onto conjugacy classes, and exponent certificates along paths.

#ifndef AF2_FAREY_HPP_
#define AF2_FAREY_HPP_

#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "af2/block.hpp"

namespace af2 {

inline constexpr int kFareyLevelCap = 12;
inline constexpr int kFareyLookupLevel = 10;

struct ClassId {
  Word key;  // least rotation of the cyclic core or of its inverse
  std::string ToString() const { return key.ToString(); }
  friend bool operator==(const ClassId& p, const ClassId& q) { return p.key == q.key; }
  friend bool operator<(const ClassId& p, const ClassId& q) {
    return Compare(p.key, q.key) < 0;
  }
};

inline ClassId ProjectWord(const Word& w) { return ClassId{ConjugacyClassKey(w)}; }
inline ClassId Project(const Vertex& v) { return ProjectWord(v.rep()); }
inline bool IsBaseB(const ClassId& c) { return c.key == Word::B(); }

struct FareyVertex {
  int level = 0;
  int parent_edge = -1;  // oriented edge the vertex was born from
  Word label;            // empty until labelled
};

// Edges are stored with the orientation inherited from their parent edge:
// the child z of (x, y) contributes (x, z) and (z, y).
struct FareyEdge {
  int from = 0;
  int to = 0;
  int parent = -1;
  Word from_label;
  Word to_label;
};

struct FareyGraph {
  std::vector<FareyVertex> vertices;
  std::vector<std::vector<int>> levels;
  std::vector<FareyEdge> edges;
  std::vector<int> boundary;  // indices into `edges`
  bool labelled = false;
  std::map<ClassId, int> by_class;

  std::size_t EdgeCount() const { return edges.size(); }

  std::set<std::pair<int, int>> UnorderedEdges() const {
    std::set<std::pair<int, int>> out;
    for (const FareyEdge& e : edges) out.insert(std::minmax(e.from, e.to));
    return out;
  }

  std::optional<int> Find(const ClassId& c) const {
    auto it = by_class.find(c);
    if (it == by_class.end()) return std::nullopt;
    return it->second;
  }

  bool HasEdge(int u, int v) const {
    for (const FareyEdge& e : edges)
      if ((e.from == u && e.to == v) || (e.from == v && e.to == u)) return true;
    return false;
  }
};

// FG_0 has vertices 0..3 standing for [a], [b], [ab], [ab^-1].
inline FareyGraph BuildFarey(int levels) {
  if (levels < 0 || levels > kFareyLevelCap)
    throw Error(ErrorKind::kLevelCapExceeded, "farey level " + std::to_string(levels));
  FareyGraph g;
  g.vertices.resize(4);
  g.levels.push_back({0, 1, 2, 3});
  g.edges = {{0, 1, -1, {}, {}}, {0, 2, -1, {}, {}}, {2, 1, -1, {}, {}},
             {0, 3, -1, {}, {}}, {3, 1, -1, {}, {}}};
  g.boundary = {1, 2, 3, 4};
  for (int level = 1; level <= levels; ++level) {
    std::vector<int> born;
    std::vector<int> next_boundary;
    for (int ei : g.boundary) {
      const int z = static_cast<int>(g.vertices.size());
      g.vertices.push_back({level, ei, {}});
      born.push_back(z);
      const FareyEdge parent = g.edges[ei];
      next_boundary.push_back(static_cast<int>(g.edges.size()));
      g.edges.push_back({parent.from, z, ei, {}, {}});
      next_boundary.push_back(static_cast<int>(g.edges.size()));
      g.edges.push_back({z, parent.to, ei, {}, {}});
    }
    g.levels.push_back(std::move(born));
    g.boundary = std::move(next_boundary);
  }
  return g;
}

// f([a]) = a, f([b]) = b, then f(z) = f(x) f(y) along the oriented parent
// edge (x, y). Edge labels remember which of b, b^-1 stands at [b].
inline FareyGraph LabelFarey(FareyGraph g) {
  const Word a = Word::A();
  const Word b = Word::B();
  const Word ab = Word::Parse("ab");
  const Word aB = Word::Parse("aB");
  g.vertices[0].label = a;
  g.vertices[1].label = b;
  g.vertices[2].label = ab;
  g.vertices[3].label = aB;
  const std::pair<Word, Word> base[] = {{a, b}, {a, ab}, {ab, b}, {a, aB}, {aB, b.Inverse()}};
  for (int i = 0; i < 5; ++i) {
    g.edges[i].from_label = base[i].first;
    g.edges[i].to_label = base[i].second;
  }
  for (std::size_t ei = 5; ei < g.edges.size(); ei += 2) {
    const FareyEdge& parent = g.edges[g.edges[ei].parent];
    const Word z = parent.from_label * parent.to_label;
    g.vertices[g.edges[ei].to].label = z;
    g.edges[ei].from_label = parent.from_label;
    g.edges[ei].to_label = z;
    g.edges[ei + 1].from_label = z;
    g.edges[ei + 1].to_label = parent.to_label;
  }
  g.by_class.clear();
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    g.by_class.emplace(ProjectWord(g.vertices[i].label), static_cast<int>(i));
  g.labelled = true;
  return g;
}

inline const FareyGraph& StandardFarey() {
  static std::once_flag once;
  static FareyGraph g;
  std::call_once(once, [] { g = LabelFarey(BuildFarey(kFareyLookupLevel)); });
  return g;
}

// f of a class, when the class appears in the lookup graph.
inline std::optional<Word> FareyLabel(const ClassId& c) {
  const FareyGraph& g = StandardFarey();
  auto i = g.Find(c);
  if (!i) return std::nullopt;
  return g.vertices[*i].label;
}

// Starts with a, has no a^-1, ends in b or b^-1, and is primitive.
inline bool InPab(const Word& w) {
  if (w.empty() || !(w.FirstLetter() == kLetterA)) return false;
  const Letter last = w.LastLetter();
  if (last.base != Gen::kB) return false;
  for (const Syllable& s : w.syllables())
    if (s.base == Gen::kA && s.exp < 0) return false;
  return IsPrimitive(w).primitive;
}

inline int EdgeTileGap(const FareyGraph& g, const ClassId& c1, const ClassId& c2) {
  if (IsBaseB(c1) || IsBaseB(c2))
    throw Error(ErrorKind::kClassIsBaseB, c1.ToString() + " " + c2.ToString());
  const auto i = g.Find(c1);
  const auto j = g.Find(c2);
  if (!i || !j || !g.HasEdge(*i, *j))
    throw Error(ErrorKind::kNotAnEdge, "[" + c1.ToString() + "] [" + c2.ToString() + "]");
  return std::abs(TileB(CyclicWord(g.vertices[*i].label)) -
                  TileB(CyclicWord(g.vertices[*j].label)));
}

inline int EdgeTileGap(const ClassId& c1, const ClassId& c2) {
  return EdgeTileGap(StandardFarey(), c1, c2);
}

struct QuotientGraph {
  std::set<ClassId> vertices;
  std::set<std::pair<ClassId, ClassId>> edges;  // stored with first < second
};

inline QuotientGraph BuildQuotientGraph(const BlockGraph& block) {
  QuotientGraph q;
  for (const auto& [v, level] : block.birth) q.vertices.insert(Project(v));
  for (const auto& [u, v] : block.e_edges) {
    ClassId p = Project(u);
    ClassId r = Project(v);
    if (r < p) std::swap(p, r);
    if (!(p == r)) q.edges.emplace(std::move(p), std::move(r));
  }
  return q;
}

// Every class carries a label of `fg` and every quotient edge is a Farey edge.
inline bool EmbedsInFarey(const QuotientGraph& q, const FareyGraph& fg) {
  for (const ClassId& c : q.vertices)
    if (!fg.Find(c)) return false;
  for (const auto& [p, r] : q.edges)
    if (!fg.HasEdge(*fg.Find(p), *fg.Find(r))) return false;
  return true;
}

// Least |k| (positive first) with y = <f([y])^(f([x])^k)>, given x = <f([x])>.
inline std::optional<int> SingleEdgeExponent(const Vertex& x, const Vertex& y,
                                             int exp_bound) {
  const auto fx = FareyLabel(Project(x));
  const auto fy = FareyLabel(Project(y));
  if (!fx || !fy || Vertex::FromPrimitive(*fx) != x) return std::nullopt;
  for (int m = 0; m <= exp_bound; ++m)
    for (int k : {m, -m}) {
      if (Vertex::FromPrimitive(Conjugate(*fy, Power(*fx, k))) == y) return k;
      if (m == 0) break;
    }
  return std::nullopt;
}

namespace internal {

inline bool LambdaSearch(const std::vector<Vertex>& path, const std::vector<Word>& f,
                         std::size_t i, const Word& lambda, int bound,
                         std::vector<int>& s) {
  if (i + 1 == path.size()) {
    s[i] = 0;
    return true;
  }
  for (int m = 0; m <= bound; ++m)
    for (int k : {m, -m}) {
      const Word next = Power(f[i], k) * lambda;
      if (Vertex::FromPrimitive(Conjugate(f[i + 1], next)) == path[i + 1]) {
        s[i] = k;
        if (LambdaSearch(path, f, i + 1, next, bound, s)) return true;
      }
      if (m == 0) break;
    }
  return false;
}

}  // namespace internal

// Exponents s_0..s_k with |s_i| <= exp_bound such that the last vertex equals
// <f(t_k)^lambda>, lambda = f(t_k)^{s_k} ... f(t_0)^{s_0}. Empty when the
// start is not its own label, a class has no label, or the bound is too small.
inline std::optional<std::vector<int>> LambdaAlongPath(const std::vector<Vertex>& path,
                                                       int exp_bound) {
  if (path.empty()) return std::nullopt;
  std::vector<Word> f;
  for (const Vertex& v : path) {
    auto label = FareyLabel(Project(v));
    if (!label) return std::nullopt;
    f.push_back(std::move(*label));
  }
  if (Vertex::FromPrimitive(f[0]) != path[0]) return std::nullopt;
  std::vector<int> s(path.size(), 0);
  if (!internal::LambdaSearch(path, f, 0, Word(), exp_bound, s)) return std::nullopt;
  return s;
}

// lambda = f(t_k)^{s_k} ... f(t_0)^{s_0}.
inline Word LambdaWord(const std::vector<Vertex>& path, const std::vector<int>& s) {
  Word lambda;
  for (std::size_t i = 0; i < path.size(); ++i)
    lambda = Power(*FareyLabel(Project(path[i])), s[i]) * lambda;
  return lambda;
}

}  // namespace af2

#endif  // AF2_FAREY_HPP_
