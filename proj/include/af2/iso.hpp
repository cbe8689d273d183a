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


// Isomorphism of finite vertex- and edge-coloured graphs, used to compare
// blocks and L-structures as annotated graphs.

#ifndef AF2_ISO_HPP_
#define AF2_ISO_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "af2/block.hpp"
#include "af2/model.hpp"

namespace af2 {

// Edge colour bits.
inline constexpr int kIsoE = 1;
inline constexpr int kIsoC = 2;
inline constexpr int kIsoOrth = 4;
inline constexpr int kIsoPar = 8;
inline constexpr int kIsoOrigin = 16;

struct AnnotatedGraph {
  std::vector<std::string> names;
  std::vector<int> colour;
  std::map<std::pair<int, int>, int> edges;  // keyed with first < second

  int size() const { return static_cast<int>(colour.size()); }

  void Mark(int u, int v, int bit) {
    if (u > v) std::swap(u, v);
    edges[{u, v}] |= bit;
  }

  int EdgeColour(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = edges.find({u, v});
    return it == edges.end() ? 0 : it->second;
  }

  std::vector<std::vector<std::pair<int, int>>> Adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(colour.size());
    for (const auto& [p, c] : edges) {
      adj[p.first].push_back({p.second, c});
      adj[p.second].push_back({p.first, c});
    }
    return adj;
  }
};

// With `decorated` set, vertices are coloured by birth level and the origin
// edge carries its own bit; otherwise only E, C, orth and par are kept.
inline AnnotatedGraph Annotated(const BlockGraph& g, bool decorated = true) {
  AnnotatedGraph a;
  std::map<Vertex, int> index;
  for (const auto& [v, b] : g.birth) {
    index.emplace(v, a.size());
    a.names.push_back(v.ToString());
    a.colour.push_back(decorated ? b : 0);
  }
  for (const auto& [u, v] : g.e_edges) a.Mark(index.at(u), index.at(v), kIsoE);
  for (const auto& [u, v] : g.c_edges) a.Mark(index.at(u), index.at(v), kIsoC);
  for (const auto& [p, w] : g.orth) a.Mark(index.at(p.first), index.at(p.second), kIsoOrth);
  for (const auto& [u, v] : g.par) a.Mark(index.at(u), index.at(v), kIsoPar);
  if (decorated && g.Contains(g.origin.first) && g.Contains(g.origin.second))
    a.Mark(index.at(g.origin.first), index.at(g.origin.second), kIsoOrigin);
  return a;
}

inline AnnotatedGraph Annotated(const LStructure& l) {
  AnnotatedGraph a;
  std::map<int, int> index;
  for (int v : l.vertices) {
    index.emplace(v, a.size());
    a.names.push_back(l.Name(v));
    a.colour.push_back(0);
  }
  const std::pair<const std::set<IdPair>*, int> rels[] = {
      {&l.e, kIsoE}, {&l.c, kIsoC}, {&l.orth, kIsoOrth}, {&l.par, kIsoPar}};
  for (const auto& [rel, bit] : rels)
    for (const auto& [u, v] : *rel) a.Mark(index.at(u), index.at(v), bit);
  return a;
}

namespace internal {

// Refines the joint colouring of g (first n vertices) and h (the rest) to a
// stable partition. Returns false when the colour histograms of the two sides
// diverge.
inline bool Refine(const std::vector<std::vector<std::pair<int, int>>>& adj_g,
                   const std::vector<std::vector<std::pair<int, int>>>& adj_h,
                   std::vector<int>& col) {
  const int n = static_cast<int>(adj_g.size());
  const int total = static_cast<int>(col.size());
  auto neighbours = [&](int v) -> const std::vector<std::pair<int, int>>& {
    return v < n ? adj_g[v] : adj_h[v - n];
  };
  int classes = 0;
  for (;;) {
    using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
    std::map<Sig, int> ids;
    std::vector<Sig> sig(total);
    for (int v = 0; v < total; ++v) {
      sig[v].first = col[v];
      for (const auto& [w, c] : neighbours(v))
        sig[v].second.push_back({col[v < n ? w : w + n], c});
      std::sort(sig[v].second.begin(), sig[v].second.end());
      ids.emplace(sig[v], 0);
    }
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    std::vector<int> count(next, 0);
    for (int v = 0; v < total; ++v) {
      col[v] = ids.at(sig[v]);
      count[col[v]] += v < n ? 1 : -1;
    }
    if (std::any_of(count.begin(), count.end(), [](int c) { return c != 0; })) return false;
    if (next == classes) return true;
    classes = next;
  }
}

inline bool Search(const AnnotatedGraph& g, const AnnotatedGraph& h,
                   const std::vector<std::vector<std::pair<int, int>>>& adj_g,
                   const std::vector<std::vector<std::pair<int, int>>>& adj_h,
                   std::vector<int> col, std::vector<int>& out) {
  const int n = g.size();
  if (!Refine(adj_g, adj_h, col)) return false;
  std::map<int, std::vector<int>> cls_g;
  std::map<int, std::vector<int>> cls_h;
  for (int v = 0; v < n; ++v) cls_g[col[v]].push_back(v);
  for (int v = 0; v < n; ++v) cls_h[col[v + n]].push_back(v);
  const std::vector<int>* pick = nullptr;
  int pick_colour = 0;
  for (const auto& [c, vs] : cls_g)
    if (vs.size() > 1 && (!pick || vs.size() < pick->size())) {
      pick = &vs;
      pick_colour = c;
    }
  if (!pick) {
    std::vector<int> map(n);
    for (int v = 0; v < n; ++v) map[v] = cls_h.at(col[v]).front();
    for (const auto& [p, c] : g.edges)
      if (h.EdgeColour(map[p.first], map[p.second]) != c) return false;
    if (g.edges.size() != h.edges.size()) return false;
    out = std::move(map);
    return true;
  }
  const int fresh = static_cast<int>(2 * col.size()) + 1;
  const int u = pick->front();
  for (int cand : cls_h.at(pick_colour)) {
    std::vector<int> next = col;
    next[u] = fresh;
    next[cand + n] = fresh;
    if (Search(g, h, adj_g, adj_h, std::move(next), out)) return true;
  }
  return false;
}

}  // namespace internal

// A colour- and edge-colour-preserving bijection from g to h, or nullopt.
inline std::optional<std::vector<int>> FindIsomorphism(const AnnotatedGraph& g,
                                                       const AnnotatedGraph& h) {
  if (g.size() != h.size() || g.edges.size() != h.edges.size()) return std::nullopt;
  const int n = g.size();
  std::vector<int> col(2 * n);
  for (int v = 0; v < n; ++v) {
    col[v] = g.colour[v];
    col[v + n] = h.colour[v];
  }
  std::vector<int> out;
  if (!internal::Search(g, h, g.Adjacency(), h.Adjacency(), std::move(col), out))
    return std::nullopt;
  return out;
}

inline bool IsIsomorphism(const AnnotatedGraph& g, const AnnotatedGraph& h,
                          const std::vector<int>& map) {
  if (g.size() != h.size() || static_cast<int>(map.size()) != g.size()) return false;
  std::vector<bool> hit(h.size(), false);
  for (int v = 0; v < g.size(); ++v) {
    if (map[v] < 0 || map[v] >= h.size() || hit[map[v]]) return false;
    hit[map[v]] = true;
    if (g.colour[v] != h.colour[map[v]]) return false;
  }
  if (g.edges.size() != h.edges.size()) return false;
  for (const auto& [p, c] : g.edges)
    if (h.EdgeColour(map[p.first], map[p.second]) != c) return false;
  return true;
}

inline bool Isomorphic(const BlockGraph& g, const BlockGraph& h) {
  return FindIsomorphism(Annotated(g), Annotated(h)).has_value();
}

}  // namespace af2

#endif  // AF2_ISO_HPP_
