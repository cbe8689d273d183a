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

// Blocks Ext_k(e) with their full annotation, plus windowed searches in the
// ambient complex: distances, paths avoiding conjugacy balls, block levels.

#ifndef AF2_BLOCK_HPP_
#define AF2_BLOCK_HPP_

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "af2/conjugacy.hpp"

namespace af2 {

inline constexpr int kDefaultLevelCap = 4;

// F2_LEVEL_CAP overrides the default cap on block levels.
inline int LevelCap() {
  if (const char* env = std::getenv("F2_LEVEL_CAP")) {
    try {
      const int v = std::stoi(env);
      if (v >= 0) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultLevelCap;
}

// Key of the conjugacy class of <x>: least rotation of the cyclic core of x
// and of x^-1.
inline Word ConjugacyClassKey(const Word& x) {
  const CyclicWord c = CyclicWord::CoreOf(x);
  const Word r1 = c.MinRotation();
  const Word r2 = c.Inverse().MinRotation();
  return Compare(r1, r2) <= 0 ? r1 : r2;
}

inline bool DeterminantIsUnit(const Word& u, const Word& v) {
  const auto [ua, ub] = Abelianize(u);
  const auto [va, vb] = Abelianize(v);
  return std::abs(ua * vb - ub * va) == 1;
}

struct BlockGraph {
  VertexPair origin;
  int level = 0;
  std::map<Vertex, int> birth;
  std::set<VertexPair> e_edges;
  std::set<VertexPair> c_edges;
  std::map<VertexPair, Vertex> orth;  // pair -> witness
  std::set<VertexPair> par;

  bool Contains(const Vertex& v) const { return birth.count(v) > 0; }
  std::size_t size() const { return birth.size(); }

  std::vector<Vertex> Vertices() const {
    std::vector<Vertex> out;
    for (const auto& [v, b] : birth) out.push_back(v);
    return out;
  }

  bool HasEEdge(const Vertex& u, const Vertex& v) const {
    return e_edges.count(SortedPair(u, v)) > 0;
  }
  bool HasCEdge(const Vertex& u, const Vertex& v) const {
    return c_edges.count(SortedPair(u, v)) > 0;
  }

  std::map<Vertex, std::vector<Vertex>> EAdjacency() const {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& [v, b] : birth) adj[v];
    for (const auto& [u, v] : e_edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    return adj;
  }

  // The induced annotated subgraph on vertices of birth level <= k.
  BlockGraph Restrict(int k) const {
    BlockGraph r;
    r.origin = origin;
    r.level = k;
    for (const auto& [v, b] : birth)
      if (b <= k) r.birth.emplace(v, b);
    auto keep = [&](const VertexPair& p) {
      return r.Contains(p.first) && r.Contains(p.second);
    };
    for (const auto& p : e_edges)
      if (keep(p)) r.e_edges.insert(p);
    for (const auto& p : c_edges)
      if (keep(p)) r.c_edges.insert(p);
    for (const auto& [p, w] : orth)
      if (keep(p)) r.orth.emplace(p, w);
    for (const auto& p : par)
      if (keep(p)) r.par.insert(p);
    return r;
  }

  friend bool operator==(const BlockGraph&, const BlockGraph&) = default;
};

namespace internal {

// Adds `w` with its induced E-edges.
inline void AddVertex(BlockGraph& g, const Vertex& w, int birth) {
  if (!g.birth.emplace(w, birth).second) return;
  for (const auto& [z, b] : g.birth) {
    if (z == w || !DeterminantIsUnit(z.rep(), w.rep())) continue;
    if (IsBasis(z.rep(), w.rep())) g.e_edges.insert(SortedPair(z, w));
  }
}

// C-edges and C-distance-2 classification among the block's vertices.
inline void Annotate(BlockGraph& g) {
  g.c_edges.clear();
  g.orth.clear();
  g.par.clear();
  std::map<Word, std::vector<Vertex>, WordLess> classes;
  for (const auto& [v, b] : g.birth) classes[ConjugacyClassKey(v.rep())].push_back(v);
  for (const auto& [key, members] : classes) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const auto d = CDistance(members[i], members[j]);
        if (!d) continue;
        const VertexPair p = SortedPair(members[i], members[j]);
        if (*d == 1) g.c_edges.insert(p);
        if (*d == 2) {
          const PairClass c = ClassifyPair(members[i], members[j]);
          if (c.parallel)
            g.par.insert(p);
          else
            g.orth.emplace(p, *c.witness);
        }
      }
    }
  }
}

}  // namespace internal

// Ext_k(e): Ext_{k-1}(e) together with the sticks of each of its edges.
// The E-relation is induced from AF2.
inline BlockGraph BuildExt(const VertexPair& e, int k) {
  if (!IsEdge(e.first, e.second))
    throw Error(ErrorKind::kNotAnEdge, e.first.ToString() + " " + e.second.ToString());
  if (k < 0 || k > LevelCap())
    throw Error(ErrorKind::kLevelCapExceeded,
                "level " + std::to_string(k) + " exceeds cap " + std::to_string(LevelCap()));
  BlockGraph g;
  g.origin = SortedPair(e.first, e.second);
  g.level = k;
  internal::AddVertex(g, e.first, 0);
  internal::AddVertex(g, e.second, 0);
  for (int i = 1; i <= k; ++i) {
    const std::set<VertexPair> edges = g.e_edges;
    VertexSet fresh;
    for (const auto& [p, q] : edges)
      for (const Vertex& s : Sticks(p, q))
        if (!g.Contains(s)) fresh.insert(s);
    for (const Vertex& s : fresh) internal::AddVertex(g, s, i);
  }
  internal::Annotate(g);
  return g;
}

// The construction read literally from the level-by-level worklist: extend
// every edge e with Ext_1(e) inside X_k but Ext_2(e) not inside X_k by the
// sticks of the edges of Ext_1(e).
inline BlockGraph BuildExtWorklist(const VertexPair& e, int k) {
  BlockGraph g = BuildExt(e, std::min(k, 2));
  for (int i = 3; i <= k; ++i) {
    const std::set<VertexPair> edges = g.e_edges;
    VertexSet fresh;
    for (const auto& [p, q] : edges) {
      const VertexSet s1 = Sticks(p, q);
      bool ext1_inside = true;
      for (const Vertex& s : s1) ext1_inside = ext1_inside && g.Contains(s);
      if (!ext1_inside) continue;
      VertexSet ext2;
      std::vector<VertexPair> ext1_edges{{p, q}};
      for (const Vertex& s : s1) {
        ext1_edges.push_back({p, s});
        ext1_edges.push_back({q, s});
      }
      for (const auto& [x, y] : ext1_edges)
        for (const Vertex& s : Sticks(x, y)) ext2.insert(s);
      bool ext2_inside = true;
      for (const Vertex& s : ext2) ext2_inside = ext2_inside && g.Contains(s);
      if (ext2_inside) continue;
      for (const Vertex& s : ext2)
        if (!g.Contains(s)) fresh.insert(s);
    }
    for (const Vertex& s : fresh) internal::AddVertex(g, s, i);
  }
  g.level = k;
  internal::Annotate(g);
  return g;
}

// Ext_k(<a>, <b>), built once per process.
inline const BlockGraph& StandardBlock(int k) {
  static std::mutex mu;
  static std::map<int, BlockGraph> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  const VertexPair ab{Vertex::FromPrimitive(Word::A()), Vertex::FromPrimitive(Word::B())};
  return cache.emplace(k, BuildExt(ab, k)).first->second;
}

// Exact membership of w in Ext_k(e): carry e to (<a>, <b>) and look w up in
// the standard block.
inline bool InExt(const VertexPair& e, int k, const Vertex& w) {
  const PairReduction r = NielsenReducePair(e.first.rep(), e.second.rep());
  if (!r.is_basis) throw Error(ErrorKind::kNotAnEdge, e.first.ToString());
  return StandardBlock(k).Contains(Vertex::FromPrimitive(r.to_standard.Apply(w.rep())));
}

// ---------------------------------------------------------------------------
// Windowed searches in AF2.

using Path = std::vector<Vertex>;
using NeighbourFn = std::function<std::vector<Vertex>(const Vertex&)>;

inline NeighbourFn WindowedNeighbours(int window) {
  return [window](const Vertex& v) {
    const VertexSet n = Neighbors(v, window);
    return std::vector<Vertex>(n.begin(), n.end());
  };
}

inline NeighbourFn BlockNeighbours(const BlockGraph& g) {
  auto adj = std::make_shared<std::map<Vertex, std::vector<Vertex>>>(g.EAdjacency());
  return [adj](const Vertex& v) {
    auto it = adj->find(v);
    return it == adj->end() ? std::vector<Vertex>{} : it->second;
  };
}

// Breadth-first shortest path whose interior vertices avoid `forbidden`.
inline std::optional<Path> ShortestPath(
    const Vertex& u, const Vertex& v, int max_len, const NeighbourFn& next,
    const std::function<bool(const Vertex&)>& forbidden = nullptr) {
  if (u == v) return Path{u};
  std::map<Vertex, Vertex> parent;
  parent.emplace(u, u);
  std::vector<Vertex> frontier{u};
  for (int d = 1; d <= max_len && !frontier.empty(); ++d) {
    std::vector<Vertex> layer;
    for (const Vertex& x : frontier) {
      for (const Vertex& y : next(x)) {
        if (parent.count(y)) continue;
        if (y != v && forbidden && forbidden(y)) continue;
        parent.emplace(y, x);
        if (y == v) {
          Path p{v};
          for (Vertex z = x; z != u; z = parent.at(z)) p.push_back(z);
          p.push_back(u);
          std::reverse(p.begin(), p.end());
          return p;
        }
        layer.push_back(y);
      }
    }
    frontier = std::move(layer);
  }
  return std::nullopt;
}

struct DistanceResult {
  int distance = 0;
  Path path;
};

inline std::optional<DistanceResult> Distance(const Vertex& u, const Vertex& v,
                                              int bound, int window) {
  auto p = ShortestPath(u, v, bound, WindowedNeighbours(window));
  if (!p) return std::nullopt;
  return DistanceResult{static_cast<int>(p->size()) - 1, *p};
}

// A ball C_m(center) of a conjugacy class; radius nullopt means the whole
// class.
struct AvoidanceSpec {
  Vertex center;
  std::optional<int> radius;

  bool Forbids(const Vertex& z) const {
    if (!AreConjugate(z, center)) return false;
    if (!radius) return true;
    const auto d = CDistance(center, z);
    return d && *d <= *radius;
  }
};

inline std::optional<Path> FindPathAvoiding(const Vertex& u, const Vertex& v,
                                            const AvoidanceSpec& avoid,
                                            int max_len, int window) {
  return ShortestPath(u, v, max_len, WindowedNeighbours(window),
                      [&](const Vertex& z) { return avoid.Forbids(z); });
}

inline std::optional<Path> FindPathAvoidingInBlock(const Vertex& u,
                                                   const Vertex& v,
                                                   const AvoidanceSpec& avoid,
                                                   int max_len,
                                                   const BlockGraph& g) {
  return ShortestPath(u, v, max_len, BlockNeighbours(g),
                      [&](const Vertex& z) { return avoid.Forbids(z); });
}

struct BlockLevel {
  int level = 0;
  VertexPair witness;
};

// Least k <= k_max such that u, v lie in Ext_k(e) for a candidate edge e
// incident to the windowed ball of radius k around u.
inline std::optional<BlockLevel> MinBlockLevel(const Vertex& u, const Vertex& v,
                                               int k_max, int window) {
  if (k_max > LevelCap())
    throw Error(ErrorKind::kLevelCapExceeded, std::to_string(k_max));
  std::map<Vertex, int> ball{{u, 0}};
  std::vector<Vertex> frontier{u};
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) {
      std::vector<Vertex> layer;
      for (const Vertex& x : frontier)
        for (const Vertex& y : Neighbors(x, window))
          if (ball.emplace(y, k).second) layer.push_back(y);
      frontier = std::move(layer);
    }
    std::vector<VertexPair> candidates;
    for (const auto& [x, d] : ball)
      for (const Vertex& y : Neighbors(x, window)) candidates.push_back(SortedPair(x, y));
    std::sort(candidates.begin(), candidates.end(),
              [](const VertexPair& p, const VertexPair& q) {
                const std::size_t lp = p.first.rep().length() + p.second.rep().length();
                const std::size_t lq = q.first.rep().length() + q.second.rep().length();
                if (lp != lq) return lp < lq;
                return p < q;
              });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (int level = 0; level <= k; ++level) {
      for (const VertexPair& e : candidates) {
        if (InExt(e, level, u) && InExt(e, level, v)) return BlockLevel{level, e};
      }
    }
  }
  return std::nullopt;
}

// Least k' with the origin edge inside Ext_{k'}(e') for every edge e' of
// Ext_k(<a>, <b>). At most `trials` edges are examined, in sorted order.
inline int EstimateG(int k, int trials) {
  if (k > LevelCap()) throw Error(ErrorKind::kLevelCapExceeded, std::to_string(k));
  const BlockGraph& g = StandardBlock(k);
  const Vertex a = Vertex::FromPrimitive(Word::A());
  const Vertex b = Vertex::FromPrimitive(Word::B());
  int best = 0;
  int examined = 0;
  for (const VertexPair& e : g.e_edges) {
    if (examined++ >= trials) break;
    int level = best;
    while (!(InExt(e, level, a) && InExt(e, level, b))) {
      ++level;
      if (level > LevelCap())
        throw Error(ErrorKind::kLevelCapExceeded,
                    "no level up to the cap contains the origin edge");
    }
    best = std::max(best, level);
  }
  return best;
}

}  // namespace af2

#endif  // AF2_BLOCK_HPP_
