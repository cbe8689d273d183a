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


// Finite admissible structures. Every component is a concrete block living
// in its own copy of the complex; components are glued by sharing global
// vertex ids. The derived L-structure, strong embeddings, minimal chains,
// amalgamation, block covers and a bounded evaluation of the axioms of T sit
// on top of that representation.

#ifndef AF2_MODEL_HPP_
#define AF2_MODEL_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "af2/block.hpp"
#include "af2/conjugacy.hpp"

namespace af2 {

using IdPair = std::pair<int, int>;

inline IdPair SortedIds(int x, int y) { return x < y ? IdPair{x, y} : IdPair{y, x}; }

inline constexpr int kMaxComponents = 8;
inline constexpr int kExhaustiveComponents = 10;

// The block Ext_level(origin), shared across components with equal data.
inline const BlockGraph& CachedBlock(const VertexPair& origin, int level) {
  static std::mutex mu;
  static std::map<std::pair<VertexPair, int>, std::unique_ptr<BlockGraph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{origin, level}];
  if (!slot) slot = std::make_unique<BlockGraph>(BuildExt(origin, level));
  return *slot;
}

struct Component {
  int id = 0;
  VertexPair origin;
  int level = 1;
  std::map<Vertex, int> ids;  // word of this copy -> global vertex id

  const BlockGraph& graph() const { return CachedBlock(origin, level); }

  std::optional<Vertex> WordOf(int gid) const {
    for (const auto& [w, g] : ids)
      if (g == gid) return w;
    return std::nullopt;
  }

  std::set<int> Members() const {
    std::set<int> out;
    for (const auto& [w, g] : ids) out.insert(g);
    return out;
  }
};

class AdmissibleStructure {
 public:
  const std::vector<Component>& components() const { return components_; }
  int vertex_count() const { return next_id_; }

  const Component* Find(int id) const {
    for (const Component& c : components_)
      if (c.id == id) return &c;
    return nullptr;
  }

  std::set<int> ComponentIds() const {
    std::set<int> out;
    for (const Component& c : components_) out.insert(c.id);
    return out;
  }

  std::set<int> Vertices() const {
    std::set<int> out;
    for (const Component& c : components_)
      for (const auto& [w, g] : c.ids) out.insert(g);
    return out;
  }

  // Adds Ext_level(origin) as a new component. `glue` sends words of the new
  // copy to existing global ids; every other word gets a fresh id.
  int AddComponent(const VertexPair& origin, int level,
                   const std::map<Vertex, int>& glue = {}, std::optional<int> id = {}) {
    if (level < 1) throw Error(ErrorKind::kLevelCapExceeded, "component level below 1");
    Component c;
    c.id = id ? *id : NextComponentId();
    if (Find(c.id)) throw Error(ErrorKind::kNotASubstructure, "duplicate component id");
    c.origin = origin;
    c.level = level;
    for (const auto& [v, b] : c.graph().birth) {
      auto it = glue.find(v);
      if (it != glue.end()) {
        c.ids.emplace(v, it->second);
        next_id_ = std::max(next_id_, it->second + 1);
      } else {
        c.ids.emplace(v, next_id_++);
      }
    }
    for (const auto& [v, g] : glue)
      if (!c.ids.count(v))
        throw Error(ErrorKind::kNotASubstructure, v.ToString() + " is not in the component");
    components_.push_back(std::move(c));
    return components_.back().id;
  }

  // Rebuilds component `id` at `level` (higher or lower). Surviving words
  // keep their ids; `fresh` may pin ids of new words.
  void SetLevel(int id, int level, const std::map<Vertex, int>& fresh = {}) {
    Component* c = Mutable(id);
    if (!c) throw Error(ErrorKind::kNotASubstructure, "no component " + std::to_string(id));
    std::map<Vertex, int> ids;
    c->level = level;
    for (const auto& [v, b] : c->graph().birth) {
      auto old = c->ids.find(v);
      auto pinned = fresh.find(v);
      if (old != c->ids.end()) {
        ids.emplace(v, old->second);
      } else if (pinned != fresh.end()) {
        ids.emplace(v, pinned->second);
        next_id_ = std::max(next_id_, pinned->second + 1);
      } else {
        ids.emplace(v, next_id_++);
      }
    }
    c->ids = std::move(ids);
  }

  void RemoveComponent(int id) {
    std::erase_if(components_, [&](const Component& c) { return c.id == id; });
  }

  // Reserves ids so that fresh vertices never collide with `other`'s.
  void ReserveIdsBelow(int bound) { next_id_ = std::max(next_id_, bound); }

  friend bool operator==(const AdmissibleStructure& p, const AdmissibleStructure& q) {
    if (p.components_.size() != q.components_.size()) return false;
    for (const Component& c : p.components_) {
      const Component* d = q.Find(c.id);
      if (!d || d->origin != c.origin || d->level != c.level || d->ids != c.ids) return false;
    }
    return true;
  }

 private:
  int NextComponentId() const {
    int id = 0;
    for (const Component& c : components_) id = std::max(id, c.id + 1);
    return id;
  }

  Component* Mutable(int id) {
    for (Component& c : components_)
      if (c.id == id) return &c;
    return nullptr;
  }

  std::vector<Component> components_;
  int next_id_ = 0;
};

inline AdmissibleStructure SingleBlock(int level, const VertexPair& origin = {
                                                      Vertex::FromPrimitive(Word::A()),
                                                      Vertex::FromPrimitive(Word::B())}) {
  AdmissibleStructure s;
  s.AddComponent(origin, level);
  return s;
}

// The sub-union over `keep`, with every kept component cut back to the level
// given in `levels` (its own level when absent).
inline AdmissibleStructure SubStructure(const AdmissibleStructure& m, const std::set<int>& keep,
                                        const std::map<int, int>& levels = {}) {
  AdmissibleStructure out;
  out.ReserveIdsBelow(m.vertex_count());
  for (const Component& c : m.components()) {
    if (!keep.count(c.id)) continue;
    auto lv = levels.find(c.id);
    const int level = lv == levels.end() ? c.level : lv->second;
    const BlockGraph& g = CachedBlock(c.origin, level);
    std::map<Vertex, int> glue;
    for (const auto& [v, gid] : c.ids)
      if (g.Contains(v)) glue.emplace(v, gid);
    out.AddComponent(c.origin, level, glue, c.id);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The glued L-structure.

struct Occurrence {
  int component = 0;
  Vertex word;
};

struct LStructure {
  std::set<int> vertices;
  std::map<int, std::vector<Occurrence>> occurrences;
  std::set<IdPair> e;
  std::set<IdPair> c;
  std::set<IdPair> orth;
  std::set<IdPair> par;

  std::string Name(int v) const {
    auto it = occurrences.find(v);
    if (it == occurrences.end() || it->second.empty()) return "#" + std::to_string(v);
    const Occurrence& o = it->second.front();
    return std::to_string(o.component) + ":" + o.word.ToString();
  }

  std::map<int, std::vector<int>> Adjacency(const std::set<IdPair>& rel) const {
    std::map<int, std::vector<int>> adj;
    for (int v : vertices) adj[v];
    for (const auto& [x, y] : rel) {
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
    return adj;
  }

  // Component and words of x and y in a copy holding both.
  std::optional<std::tuple<int, Vertex, Vertex>> CommonCopy(int x, int y) const {
    for (const Occurrence& ox : occurrences.at(x))
      for (const Occurrence& oy : occurrences.at(y))
        if (ox.component == oy.component) return std::tuple{ox.component, ox.word, oy.word};
    return std::nullopt;
  }
};

// C-distance in the glued C-graph, by BFS.
inline std::optional<int> GluedCDistance(const std::map<int, std::vector<int>>& cadj, int x,
                                         int y) {
  std::map<int, int> dist{{x, 0}};
  std::queue<int> q;
  q.push(x);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    if (u == y) return dist[u];
    for (int w : cadj.at(u))
      if (dist.emplace(w, dist[u] + 1).second) q.push(w);
  }
  return std::nullopt;
}

// Pairs at distance two in the glued C-graph, each with one middle vertex.
inline std::map<IdPair, int> GluedC2Pairs(const LStructure& l) {
  const auto cadj = l.Adjacency(l.c);
  std::map<IdPair, int> out;
  for (const auto& [z, ns] : cadj)
    for (std::size_t i = 0; i < ns.size(); ++i)
      for (std::size_t j = i + 1; j < ns.size(); ++j)
        if (ns[i] != ns[j] && !l.c.count(SortedIds(ns[i], ns[j])))
          out.emplace(SortedIds(ns[i], ns[j]), z);
  return out;
}

inline bool ShareComponent(const LStructure& l, int x, int y) {
  return l.CommonCopy(x, y).has_value();
}

// Cross-component C_2 pairs receive par or orth from the propagation rules
// of the admissibility conditions and of block extensions, iterated to a
// fixed point.
inline void PropagateCrossRelations(LStructure& l) {
  const auto c2 = GluedC2Pairs(l);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [p, z] : c2) {
      if (ShareComponent(l, p.first, p.second) || l.par.count(p) || l.orth.count(p)) continue;
      for (int y : l.vertices) {
        const IdPair p1 = SortedIds(p.first, y);
        const IdPair p2 = SortedIds(p.second, y);
        const bool same = (l.orth.count(p1) && l.orth.count(p2)) || (l.par.count(p1) && l.par.count(p2));
        const bool mixed = (l.par.count(p1) && l.orth.count(p2)) || (l.orth.count(p1) && l.par.count(p2));
        if (same || mixed) {
          (same ? l.par : l.orth).insert(p);
          changed = true;
          break;
        }
      }
    }
  }
}

inline LStructure Derive(const AdmissibleStructure& m) {
  LStructure l;
  for (const Component& comp : m.components()) {
    const BlockGraph& g = comp.graph();
    for (const auto& [w, gid] : comp.ids) {
      l.vertices.insert(gid);
      l.occurrences[gid].push_back({comp.id, w});
    }
    auto id = [&](const Vertex& w) { return comp.ids.at(w); };
    for (const auto& [p, q] : g.e_edges) l.e.insert(SortedIds(id(p), id(q)));
    for (const auto& [p, q] : g.c_edges) l.c.insert(SortedIds(id(p), id(q)));
    for (const auto& [pq, w] : g.orth) l.orth.insert(SortedIds(id(pq.first), id(pq.second)));
    for (const auto& [p, q] : g.par) l.par.insert(SortedIds(id(p), id(q)));
  }
  PropagateCrossRelations(l);
  return l;
}

// ---------------------------------------------------------------------------
// Removable components.

// Whether the words `w` of component `comp` lie in one closure family
// cl(b, x1), or in cl(b, x1) u cl(b, x2) with orth(x1, x2), for lines of the
// component.
inline bool FitsClosureFamilies(const Component& comp, const std::vector<Vertex>& w) {
  if (w.size() <= 1) return true;
  for (const Vertex& v : w)
    if (!AreConjugate(v, w.front())) return false;
  const BlockGraph& g = comp.graph();
  const std::size_t full = w.size();
  std::map<Line, std::vector<bool>> inside;
  for (const auto& [p, q] : g.c_edges) {
    const Line l{p, q};
    std::vector<bool> in(full);
    std::size_t count = 0;
    for (std::size_t i = 0; i < full; ++i) count += (in[i] = ClosureContains(l, w[i]));
    if (count == full) return true;
    inside.emplace(l, std::move(in));
  }
  for (const auto& [pair, witness] : g.orth) {
    const Vertex& x1 = pair.first;
    const Vertex& x2 = pair.second;
    const Vertex b = CPath(x1, x2)[1];
    const auto& in1 = inside.at(MakeLine(b, x1));
    const auto& in2 = inside.at(MakeLine(b, x2));
    bool all = true;
    for (std::size_t i = 0; i < full && all; ++i) all = in1[i] || in2[i];
    if (all) return true;
  }
  return false;
}

inline bool IsRemovableIn(const AdmissibleStructure& m, const Component& comp,
                          const std::set<int>& among) {
  std::set<int> others;
  for (const Component& c : m.components())
    if (c.id != comp.id && among.count(c.id)) {
      const auto mem = c.Members();
      others.insert(mem.begin(), mem.end());
    }
  std::vector<Vertex> w;
  for (const auto& [word, gid] : comp.ids)
    if (others.count(gid)) w.push_back(word);
  return FitsClosureFamilies(comp, w);
}

inline std::set<int> RemovableComponents(const AdmissibleStructure& m) {
  const std::set<int> all = m.ComponentIds();
  std::set<int> out;
  for (const Component& c : m.components())
    if (IsRemovableIn(m, c, all)) out.insert(c.id);
  return out;
}

// Calls f on every subset of `ids` with at least two elements.
inline void ForEachSubUnion(const std::vector<int>& ids,
                            const std::function<void(const std::set<int>&)>& f) {
  const std::size_t n = ids.size();
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    if (__builtin_popcountl(mask) < 2) continue;
    std::set<int> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1UL) s.insert(ids[i]);
    f(s);
  }
}

// ---------------------------------------------------------------------------
// Admissibility.

struct AdmissibilityReport {
  std::map<int, std::vector<std::string>> violations;  // condition -> details
  bool valid() const { return violations.empty(); }
  std::set<int> Violated() const {
    std::set<int> out;
    for (const auto& [k, v] : violations) out.insert(k);
    return out;
  }
};

inline bool IsForest(const std::set<int>& vertices, const std::set<IdPair>& edges) {
  std::map<int, int> parent;
  for (int v : vertices) parent[v] = v;
  std::function<int(int)> root = [&](int v) {
    return parent[v] == v ? v : parent[v] = root(parent[v]);
  };
  for (const auto& [x, y] : edges) {
    const int rx = root(x);
    const int ry = root(y);
    if (rx == ry) return false;
    parent[rx] = ry;
  }
  return true;
}

inline AdmissibilityReport ValidateAdmissible(const AdmissibleStructure& m) {
  AdmissibilityReport r;
  auto flag = [&](int cond, const std::string& what) { r.violations[cond].push_back(what); };
  const auto& comps = m.components();
  if (comps.empty()) flag(1, "no components");
  const LStructure l = Derive(m);

  // (1) components are blocks of level >= 1 and agree on shared vertices.
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].level < 1) flag(1, "component " + std::to_string(comps[i].id) + " level 0");
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      const Component& ci = comps[i];
      const Component& cj = comps[j];
      std::vector<std::pair<Vertex, Vertex>> shared;
      for (const auto& [w, gid] : ci.ids)
        if (auto wj = cj.WordOf(gid)) shared.emplace_back(w, *wj);
      const BlockGraph& gi = ci.graph();
      const BlockGraph& gj = cj.graph();
      for (std::size_t p = 0; p < shared.size(); ++p)
        for (std::size_t q = p + 1; q < shared.size(); ++q) {
          const auto& [xi, xj] = shared[p];
          const auto& [yi, yj] = shared[q];
          const VertexPair pi = SortedPair(xi, yi);
          const VertexPair pj = SortedPair(xj, yj);
          const bool same = gi.HasEEdge(xi, yi) == gj.HasEEdge(xj, yj) &&
                            gi.HasCEdge(xi, yi) == gj.HasCEdge(xj, yj) &&
                            CDistance(xi, yi) == CDistance(xj, yj) &&
                            gi.orth.count(pi) == gj.orth.count(pj) &&
                            gi.par.count(pi) == gj.par.count(pj);
          if (!same)
            flag(1, "components " + std::to_string(ci.id) + " and " + std::to_string(cj.id) +
                        " disagree on " + xi.ToString() + ", " + yi.ToString());
        }
    }
  }

  // (2) E and C hold only inside components.
  for (const auto* rel : {&l.e, &l.c})
    for (const auto& [x, y] : *rel)
      if (!ShareComponent(l, x, y)) flag(2, l.Name(x) + " " + l.Name(y));

  // (3) C_k is additive along chains: the glued C-graph must be a forest.
  if (!IsForest(l.vertices, l.c)) flag(3, "the glued C-graph has a cycle");

  // (4) and (5) for cross-component C_2 pairs.
  for (const auto& [p, z] : GluedC2Pairs(l)) {
    if (ShareComponent(l, p.first, p.second)) continue;
    for (int y : l.vertices) {
      const IdPair p1 = SortedIds(p.first, y);
      const IdPair p2 = SortedIds(p.second, y);
      if (l.orth.count(p1) && l.orth.count(p2) && !l.par.count(p))
        flag(4, l.Name(p.first) + " " + l.Name(p.second));
      if (l.par.count(p1) && l.par.count(p2) && !l.par.count(p))
        flag(5, l.Name(p.first) + " " + l.Name(p.second));
    }
  }

  // (6) distinct shared vertices are N-related in every copy.
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      std::vector<std::pair<Vertex, Vertex>> shared;
      for (const auto& [w, gid] : comps[i].ids)
        if (auto wj = comps[j].WordOf(gid)) shared.emplace_back(w, *wj);
      for (std::size_t p = 0; p < shared.size(); ++p)
        for (std::size_t q = p + 1; q < shared.size(); ++q)
          if (!NAny(shared[p].first, shared[q].first) ||
              !NAny(shared[p].second, shared[q].second))
            flag(6, shared[p].first.ToString() + " " + shared[q].first.ToString() +
                        " in components " + std::to_string(comps[i].id) + ", " +
                        std::to_string(comps[j].id));
    }

  // (7) every sub-union has a removable component.
  std::vector<int> ids;
  for (const Component& c : comps) ids.push_back(c.id);
  if (ids.size() > static_cast<std::size_t>(kExhaustiveComponents)) {
    flag(7, "too many components for the exhaustive check");
  } else {
    ForEachSubUnion(ids, [&](const std::set<int>& sub) {
      for (const Component& c : comps)
        if (sub.count(c.id) && IsRemovableIn(m, c, sub)) return;
      std::string s;
      for (int id : sub) s += std::to_string(id) + " ";
      flag(7, "no removable component among { " + s + "}");
    });
  }
  return r;
}

// ---------------------------------------------------------------------------
// Strong embeddings and minimal chains.

inline bool IsStrong(const AdmissibleStructure& a, const AdmissibleStructure& b) {
  const std::set<int> av = a.Vertices();
  const std::set<int> bv = b.Vertices();
  if (!std::includes(bv.begin(), bv.end(), av.begin(), av.end()))
    throw Error(ErrorKind::kNotASubstructure, "vertex set not contained");
  for (const Component& ca : a.components()) {
    const Component* cb = b.Find(ca.id);
    if (!cb || cb->origin != ca.origin)
      throw Error(ErrorKind::kNotASubstructure, "component " + std::to_string(ca.id));
    for (const auto& [w, gid] : ca.ids) {
      auto it = cb->ids.find(w);
      if (it == cb->ids.end() || it->second != gid)
        throw Error(ErrorKind::kNotASubstructure, "vertex " + w.ToString());
    }
    // (1) A_j = B_j n A.
    for (const auto& [w, gid] : cb->ids)
      if (av.count(gid) && !ca.ids.count(w)) return false;
  }
  // (2) sub-unions through new components have a removable new component.
  const std::set<int> old_ids = a.ComponentIds();
  std::vector<int> ids;
  for (const Component& c : b.components()) ids.push_back(c.id);
  bool ok = true;
  auto check = [&](const std::set<int>& sub) {
    if (!ok || std::includes(old_ids.begin(), old_ids.end(), sub.begin(), sub.end())) return;
    for (const Component& c : b.components())
      if (sub.count(c.id) && !old_ids.count(c.id) && IsRemovableIn(b, c, sub)) return;
    ok = false;
  };
  ForEachSubUnion(ids, check);
  for (int id : ids)
    if (!old_ids.count(id)) check({id});
  return ok;
}

// A = B_0 <= B_1 <= ... <= B_s = B where each step grows one component or
// adds one component.
inline std::vector<AdmissibleStructure> MinimalChain(const AdmissibleStructure& a,
                                                     const AdmissibleStructure& b) {
  if (!IsStrong(a, b)) throw Error(ErrorKind::kNotStrong, "A is not strong in B");
  std::vector<AdmissibleStructure> chain{a};
  std::set<int> keep = a.ComponentIds();
  std::map<int, int> levels;
  for (const Component& c : a.components()) levels[c.id] = c.level;
  for (const Component& c : a.components()) {
    const int target = b.Find(c.id)->level;
    if (target == c.level) continue;
    levels[c.id] = target;
    chain.push_back(SubStructure(b, keep, levels));
  }
  // Peel removable new components off B; adding them back in reverse order
  // keeps every step strong.
  std::set<int> rest = b.ComponentIds();
  std::vector<int> peeled;
  while (rest.size() > keep.size()) {
    bool found = false;
    for (int id : rest) {
      if (keep.count(id)) continue;
      if (IsRemovableIn(b, *b.Find(id), rest)) {
        peeled.push_back(id);
        rest.erase(id);
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorKind::kNotStrong, "no removable new component");
  }
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    keep.insert(*it);
    chain.push_back(SubStructure(b, keep));
  }
  return chain;
}

// ---------------------------------------------------------------------------
// Amalgamation.

// Copy of `m` with vertex ids and component ids renamed.
inline AdmissibleStructure Relabel(const AdmissibleStructure& m, const std::map<int, int>& vmap,
                                   const std::map<int, int>& cmap) {
  AdmissibleStructure out;
  for (const Component& c : m.components()) {
    std::map<Vertex, int> glue;
    for (const auto& [w, gid] : c.ids) glue.emplace(w, vmap.at(gid));
    out.AddComponent(c.origin, c.level, glue, cmap.at(c.id));
  }
  return out;
}

struct Amalgam {
  AdmissibleStructure d;
  std::map<int, int> c_vertices;    // ids of C -> ids of D
  std::map<int, int> c_components;  // component ids of C -> D
  AdmissibleStructure c_image;      // C renamed into D
};

// D over B and C: components of A grown in B or C become the canonical
// amalgam Ext_max over their origin; new components of C are added over the
// images of their glued vertices.
inline Amalgam Amalgamate(const AdmissibleStructure& a, const AdmissibleStructure& b,
                          const AdmissibleStructure& c) {
  if (!IsStrong(a, b) || !IsStrong(a, c)) throw Error(ErrorKind::kNotStrong, "A <= B, C");
  Amalgam out;
  out.d = b;
  out.d.ReserveIdsBelow(std::max(b.vertex_count(), a.vertex_count()));
  for (int v : a.Vertices()) out.c_vertices[v] = v;
  for (const Component& ca : a.components()) {
    const Component& cc = *c.Find(ca.id);
    const Component& db = *out.d.Find(ca.id);
    if (cc.level > db.level) out.d.SetLevel(ca.id, cc.level);
    const Component& dj = *out.d.Find(ca.id);
    for (const auto& [w, gid] : cc.ids) out.c_vertices[gid] = dj.ids.at(w);
    out.c_components[ca.id] = ca.id;
  }
  for (const Component& cc : c.components()) {
    if (a.Find(cc.id)) continue;
    std::map<Vertex, int> glue;
    for (const auto& [w, gid] : cc.ids) {
      auto it = out.c_vertices.find(gid);
      if (it != out.c_vertices.end()) glue.emplace(w, it->second);
    }
    const int id = out.d.AddComponent(cc.origin, cc.level, glue);
    out.c_components[cc.id] = id;
    for (const auto& [w, gid] : out.d.Find(id)->ids) out.c_vertices[cc.ids.at(w)] = gid;
  }
  out.c_image = Relabel(c, out.c_vertices, out.c_components);
  return out;
}

// ---------------------------------------------------------------------------
// Block covers and simple cycles through several components.

struct BlockCover {
  std::vector<int> path;
  std::vector<int> cover;      // component ids in the order the path meets them
  std::vector<int> crossings;  // vertex where the path passes from one to the next
  bool non_returning = true;
};

inline int EdgeComponent(const AdmissibleStructure& m, int x, int y) {
  for (const Component& c : m.components()) {
    auto wx = c.WordOf(x);
    auto wy = c.WordOf(y);
    if (wx && wy && c.graph().HasEEdge(*wx, *wy)) return c.id;
  }
  throw Error(ErrorKind::kPathNotInStructure,
              std::to_string(x) + " " + std::to_string(y) + " is not an E-edge");
}

// Positions of `path` lying in component `comp` form one interval; cyclic
// when `cyclic` is set.
inline bool ContiguousIn(const AdmissibleStructure& m, const std::vector<int>& path, int comp,
                         bool cyclic) {
  const Component& c = *m.Find(comp);
  const std::size_t n = path.size();
  std::vector<bool> in(n);
  for (std::size_t i = 0; i < n; ++i) in[i] = c.WordOf(path[i]).has_value();
  std::size_t runs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool prev = i > 0 ? in[i - 1] : (cyclic ? in[n - 1] : false);
    if (in[i] && !prev) ++runs;
  }
  if (cyclic && runs == 0) return std::all_of(in.begin(), in.end(), [](bool b) { return b; });
  return runs <= 1;
}

inline BlockCover BlockCoverOf(const std::vector<int>& path, const AdmissibleStructure& m) {
  BlockCover bc;
  bc.path = path;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const int comp = EdgeComponent(m, path[i], path[i + 1]);
    if (bc.cover.empty() || bc.cover.back() != comp) {
      if (!bc.cover.empty()) bc.crossings.push_back(path[i]);
      bc.cover.push_back(comp);
    }
  }
  if (bc.cover.empty() && !path.empty()) {
    for (const Component& c : m.components())
      if (c.WordOf(path[0])) {
        bc.cover.push_back(c.id);
        break;
      }
    if (bc.cover.empty()) throw Error(ErrorKind::kPathNotInStructure, "vertex not present");
  }
  const std::set<int> distinct(bc.cover.begin(), bc.cover.end());
  for (int comp : distinct) bc.non_returning = bc.non_returning && ContiguousIn(m, path, comp, false);
  return bc;
}

struct CycleReport {
  bool premises = true;
  bool conclusion = true;
  std::vector<std::string> notes;
  std::vector<int> cover;
  std::vector<int> crossings;
};

// Connected components of the glued C-graph.
inline std::map<int, int> GluedCClasses(const LStructure& l) {
  std::map<int, int> cls;
  const auto adj = l.Adjacency(l.c);
  for (int v : l.vertices) {
    if (cls.count(v)) continue;
    std::vector<int> stack{v};
    cls[v] = v;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adj.at(u))
        if (cls.emplace(w, v).second) stack.push_back(w);
    }
  }
  return cls;
}

// `cycle` is x_0, ..., x_n with x_n = x_0.
inline CycleReport CheckCycleProposition(const AdmissibleStructure& m,
                                         const std::vector<int>& cycle) {
  CycleReport r;
  auto premise = [&](const std::string& s) {
    r.premises = false;
    r.notes.push_back("premise: " + s);
  };
  if (cycle.size() < 4 || cycle.front() != cycle.back()) {
    premise("not a closed cycle");
    return r;
  }
  const std::vector<int> body(cycle.begin(), cycle.end() - 1);
  if (std::set<int>(body.begin(), body.end()).size() != body.size()) premise("not simple");
  std::vector<int> comps;
  for (std::size_t i = 0; i < body.size(); ++i)
    comps.push_back(EdgeComponent(m, cycle[i], cycle[i + 1]));
  // Rotate so that the cover starts at a component change.
  std::size_t start = 0;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (comps[i] != comps[(i + comps.size() - 1) % comps.size()]) {
      start = i;
      break;
    }
  for (std::size_t s = 0; s < comps.size(); ++s) {
    const std::size_t i = (start + s) % comps.size();
    if (r.cover.empty() || r.cover.back() != comps[i]) {
      r.cover.push_back(comps[i]);
      r.crossings.push_back(body[i]);
    }
  }
  const std::set<int> distinct(r.cover.begin(), r.cover.end());
  if (distinct.size() == 1) {
    r.cover.resize(1);
    r.crossings.clear();
  }
  for (int comp : distinct)
    if (!ContiguousIn(m, body, comp, true)) premise("returns to component " + std::to_string(comp));
  if (!r.premises || distinct.size() == 1) return r;

  auto fail = [&](const std::string& s) {
    r.conclusion = false;
    r.notes.push_back("conclusion: " + s);
  };
  const LStructure l = Derive(m);
  const auto cls = GluedCClasses(l);
  for (int a : r.crossings)
    if (cls.at(a) != cls.at(r.crossings.front()))
      fail("crossings " + l.Name(a) + " and " + l.Name(r.crossings.front()) + " not conjugate");
  const std::vector<int> ids(distinct.begin(), distinct.end());
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      const auto mi = m.Find(ids[i])->Members();
      for (int v : m.Find(ids[j])->Members())
        if (mi.count(v) && cls.at(v) != cls.at(r.crossings.front()))
          fail("intersection vertex " + l.Name(v) + " outside C(a)");
    }
  bool some = false;
  for (int id : ids) some = some || IsRemovableIn(m, *m.Find(id), distinct);
  if (!some) fail("no component meets the others inside two orthogonal families");
  return r;
}

// ---------------------------------------------------------------------------
// The conjugacy quotient and the component decomposition.

// Incidence graph between components and glued C-classes met by at least two
// components; true when it has no cycle.
inline bool QuotientTreeCheck(const AdmissibleStructure& m) {
  const LStructure l = Derive(m);
  const auto cls = GluedCClasses(l);
  std::map<int, std::set<int>> comps_of_class;
  for (const Component& c : m.components())
    for (const auto& [w, gid] : c.ids) comps_of_class[cls.at(gid)].insert(c.id);
  std::set<int> nodes;
  std::set<IdPair> edges;
  const int offset = 1 << 20;
  for (const auto& [k, cs] : comps_of_class) {
    if (cs.size() < 2) continue;
    nodes.insert(offset + k);
    for (int c : cs) {
      nodes.insert(c);
      edges.insert(SortedIds(c, offset + k));
    }
  }
  return IsForest(nodes, edges);
}

// Vertex sets of the components, recovered from the E-relation alone: two
// E-edges belong to the same component when they lie on a common triangle,
// closed transitively.
inline std::set<std::set<int>> Decompose(const LStructure& l) {
  std::vector<IdPair> edges(l.e.begin(), l.e.end());
  std::map<IdPair, std::size_t> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i]] = i;
  std::vector<std::size_t> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = root(parent[i]);
  };
  const auto adj = l.Adjacency(l.e);
  for (const auto& [x, y] : edges) {
    std::set<int> nx(adj.at(x).begin(), adj.at(x).end());
    for (int z : adj.at(y)) {
      if (!nx.count(z)) continue;
      parent[root(index[SortedIds(x, z)])] = root(index[{x, y}]);
      parent[root(index[SortedIds(y, z)])] = root(index[{x, y}]);
    }
  }
  std::map<std::size_t, std::set<int>> groups;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    groups[root(i)].insert(edges[i].first);
    groups[root(i)].insert(edges[i].second);
  }
  std::set<std::set<int>> out;
  for (auto& [r, s] : groups) out.insert(std::move(s));
  return out;
}

inline std::set<std::set<int>> ComponentPartition(const AdmissibleStructure& m) {
  std::set<std::set<int>> out;
  for (const Component& c : m.components()) out.insert(c.Members());
  return out;
}

// ---------------------------------------------------------------------------
// Bounded evaluation of the axioms of T.

enum class AxiomStatus { kPass, kFail, kBoundedPass, kBoundedFail };

inline const char* AxiomStatusName(AxiomStatus s) {
  switch (s) {
    case AxiomStatus::kPass: return "pass";
    case AxiomStatus::kFail: return "FAIL";
    case AxiomStatus::kBoundedPass: return "consistent with bounds";
    case AxiomStatus::kBoundedFail: return "bounded check FAILED";
  }
  return "?";
}

struct AxiomResult {
  int axiom = 0;
  std::string name;
  AxiomStatus status = AxiomStatus::kPass;
  std::vector<std::string> details;
  bool ok() const { return status == AxiomStatus::kPass || status == AxiomStatus::kBoundedPass; }
};

struct AxiomReport {
  std::vector<AxiomResult> results;  // axioms 1..10 in order
  const AxiomResult& at(int axiom) const { return results.at(axiom - 1); }
  std::set<int> Failed() const {
    std::set<int> out;
    for (const AxiomResult& r : results)
      if (!r.ok()) out.insert(r.axiom);
    return out;
  }
};

inline const char* const kAxiomNames[] = {
    "no isolated vertex",      "unique extension",        "no C-cycles",
    "orth or par",             "par has orth witness",    "par is transitive for orth",
    "avoiding paths",          "two neighbours",          "block expander",
    "relations hold in blocks"};

inline AxiomReport CheckAxioms(const LStructure& l, int window) {
  AxiomReport rep;
  for (int i = 1; i <= 10; ++i) rep.results.push_back({i, kAxiomNames[i - 1]});
  auto fail = [&](int ax, const std::string& s) {
    AxiomResult& r = rep.results[ax - 1];
    r.status = (ax == 7 || ax == 9 || ax == 10) ? AxiomStatus::kBoundedFail : AxiomStatus::kFail;
    if (r.details.size() < 20) r.details.push_back(s);
  };
  for (int ax : {7, 9, 10}) rep.results[ax - 1].status = AxiomStatus::kBoundedPass;
  const auto eadj = l.Adjacency(l.e);
  const auto cadj = l.Adjacency(l.c);

  // (1)
  for (int v : l.vertices)
    if (eadj.at(v).empty()) fail(1, l.Name(v));

  // (2) at k = 1: an edge has at most four common neighbours, all sticks.
  for (const auto& [x, y] : l.e) {
    std::set<int> nx(eadj.at(x).begin(), eadj.at(x).end());
    std::set<int> common;
    for (int z : eadj.at(y))
      if (nx.count(z)) common.insert(z);
    if (common.size() > 4) fail(2, l.Name(x) + " " + l.Name(y) + " has more than four sticks");
    for (int z : common) {
      bool stick = false;
      for (const Occurrence& oz : l.occurrences.at(z))
        for (const Occurrence& ox : l.occurrences.at(x))
          for (const Occurrence& oy : l.occurrences.at(y))
            if (oz.component == ox.component && oz.component == oy.component &&
                IsBasis(ox.word.rep(), oy.word.rep())) {
              const VertexSet s = Sticks(ox.word, oy.word);
              stick = stick || s.count(oz.word);
            }
      if (!stick) fail(2, l.Name(z) + " is not a stick of " + l.Name(x) + " " + l.Name(y));
    }
  }

  // (3)
  if (!IsForest(l.vertices, l.c)) fail(3, "the C-graph has a cycle");

  // (4), (6)
  // A cross-component pair that no rule reaches is undetermined rather than
  // false.
  const auto c2 = GluedC2Pairs(l);
  int undetermined = 0;
  for (const auto& [p, z] : c2) {
    const bool o = l.orth.count(p) > 0;
    const bool q = l.par.count(p) > 0;
    if (!o && !q && !ShareComponent(l, p.first, p.second)) ++undetermined;
    else if (o == q) fail(4, l.Name(p.first) + " " + l.Name(p.second) + (o ? " both" : " neither"));
  }
  if (undetermined > 0 && rep.results[3].status == AxiomStatus::kPass) {
    rep.results[3].status = AxiomStatus::kBoundedPass;
    rep.results[3].details.push_back(std::to_string(undetermined) +
                                     " cross-component pairs undetermined");
  }
  for (const auto& [z, ns] : cadj)
    for (int x1 : ns)
      for (int x2 : ns) {
        if (x1 >= x2 || !l.par.count(SortedIds(x1, x2))) continue;
        for (int y : ns) {
          if (y == x1 || y == x2) continue;
          const bool o1 = l.orth.count(SortedIds(y, x1)) > 0;
          const bool o2 = l.orth.count(SortedIds(y, x2)) > 0;
          if (o1 != o2) fail(6, l.Name(y) + " against " + l.Name(x1) + " " + l.Name(x2));
        }
      }

  // (5) a witness in the structure, else in the ambient copy within `window`.
  for (const IdPair& p : l.par) {
    bool found = false;
    for (int z : l.vertices)
      found = found || (l.orth.count(SortedIds(p.first, z)) && l.orth.count(SortedIds(z, p.second)));
    if (!found) {
      if (auto common = l.CommonCopy(p.first, p.second)) {
        const auto& [comp, w1, w2] = *common;
        const auto d = CDistance(w1, w2);
        if (d && *d == 2) {
          const Vertex mid = CPath(w1, w2)[1];
          for (const Vertex& z : CNeighbors(mid, window)) {
            if (z == w1 || z == w2) continue;
            if (!ClassifyPair(w1, z).parallel && !ClassifyPair(z, w2).parallel) {
              found = true;
              break;
            }
          }
        }
      }
    }
    if (!found) fail(5, l.Name(p.first) + " " + l.Name(p.second));
  }

  // (7) at k = 1: a common neighbour of an edge x z lies in Ext_1(x, z).
  for (const auto& [x, z] : l.e)
    for (int y : eadj.at(x)) {
      if (y == z || !l.e.count(SortedIds(y, z))) continue;
      auto cx = l.CommonCopy(x, z);
      bool ok = false;
      for (const Occurrence& oy : l.occurrences.at(y))
        for (const Occurrence& ox : l.occurrences.at(x))
          for (const Occurrence& oz : l.occurrences.at(z))
            if (oy.component == ox.component && ox.component == oz.component)
              ok = ok || InExt(SortedPair(ox.word, oz.word), 1, oy.word);
      if (!cx || !ok) fail(7, l.Name(y) + " over " + l.Name(x) + " " + l.Name(z));
    }

  // (8) evaluated in the ambient copy of each C-edge.
  for (const auto& [x, y] : l.c) {
    auto common = l.CommonCopy(x, y);
    if (!common) {
      fail(8, l.Name(x) + " " + l.Name(y) + " share no copy");
      continue;
    }
    const auto& [comp, wx, wy] = *common;
    if (!IsCEdge(wx, wy)) {
      fail(8, l.Name(x) + " " + l.Name(y) + " not a C-edge of its copy");
      continue;
    }
    for (const auto& [u, v] : {std::pair{wx, wy}, std::pair{wy, wx}}) {
      std::set<Vertex> zs;
      for (const Line& n : LineNeighbours(MakeLine(u, v))) {
        if (n.first != v && n.second != v) continue;
        const Vertex z = n.first == v ? n.second : n.first;
        if (z != u) zs.insert(z);
      }
      if (zs.size() != 2) fail(8, u.ToString() + " " + v.ToString());
    }
  }

  // (9) shared pairs of distinct copies are N-related.
  for (int v : l.vertices)
    for (int w : l.vertices) {
      if (v >= w) continue;
      for (const Occurrence& ov : l.occurrences.at(v))
        for (const Occurrence& ow : l.occurrences.at(w))
          if (ov.component == ow.component && l.occurrences.at(v).size() > 1 &&
              l.occurrences.at(w).size() > 1 && !NAny(ov.word, ow.word))
            fail(9, l.Name(v) + " " + l.Name(w));
    }

  // (10) orth and C pairs lie in a common copy.
  for (const auto* rel : {&l.orth, &l.c})
    for (const auto& [x, y] : *rel)
      if (!l.CommonCopy(x, y)) fail(10, l.Name(x) + " " + l.Name(y));
  return rep;
}

inline AxiomReport CheckAxioms(const AdmissibleStructure& m, int window) {
  return CheckAxioms(Derive(m), window);
}

// ---------------------------------------------------------------------------
// Random strong extensions.

struct ExtensionLimits {
  int max_components = 4;
  int max_level = 3;
};

// One minimal strong extension of `m`: grow one component, or add a standard
// block glued to an existing component at a single vertex or along a C-edge.
template <class Rng>
AdmissibleStructure RandomMinimalExtension(const AdmissibleStructure& m, Rng& rng,
                                           const ExtensionLimits& lim = {}) {
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  AdmissibleStructure out = m;
  std::vector<const Component*> growable;
  for (const Component& c : m.components())
    if (c.level < lim.max_level) growable.push_back(&c);
  const bool can_add =
      !m.components().empty() && static_cast<int>(m.components().size()) < lim.max_components;
  if (growable.empty() && !can_add) return out;
  if (!growable.empty() && (!can_add || rng() % 2 == 0)) {
    const Component& c = *growable[pick(growable.size())];
    out.SetLevel(c.id, c.level + 1 + static_cast<int>(pick(lim.max_level - c.level)));
    return out;
  }
  const Component& host = m.components()[pick(m.components().size())];
  const int level = 1 + static_cast<int>(pick(lim.max_level));
  const VertexPair origin{Vertex::FromPrimitive(Word::A()), Vertex::FromPrimitive(Word::B())};
  const BlockGraph& fresh = CachedBlock(origin, level);
  const BlockGraph& hg = host.graph();
  std::map<Vertex, int> glue;
  if (rng() % 2 == 0 && !hg.c_edges.empty() && !fresh.c_edges.empty()) {
    auto he = std::next(hg.c_edges.begin(), static_cast<long>(pick(hg.c_edges.size())));
    auto fe = std::next(fresh.c_edges.begin(), static_cast<long>(pick(fresh.c_edges.size())));
    const bool flip = rng() % 2 == 0;
    glue.emplace(fe->first, host.ids.at(flip ? he->second : he->first));
    glue.emplace(fe->second, host.ids.at(flip ? he->first : he->second));
  } else {
    auto hv = std::next(host.ids.begin(), static_cast<long>(pick(host.ids.size())));
    auto fv = std::next(fresh.birth.begin(), static_cast<long>(pick(fresh.birth.size())));
    glue.emplace(fv->first, hv->second);
  }
  out.AddComponent(origin, level, glue);
  return out;
}

template <class Rng>
AdmissibleStructure RandomStrongExtension(const AdmissibleStructure& m, Rng& rng, int steps,
                                          const ExtensionLimits& lim = {}) {
  AdmissibleStructure out = m;
  for (int i = 0; i < steps; ++i) out = RandomMinimalExtension(out, rng, lim);
  return out;
}

}  // namespace af2

#endif  // AF2_MODEL_HPP_
